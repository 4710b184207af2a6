// Recomputes the checkable fields of every frozen golden with the brute-force oracle.
// Usage: golden_oracle <goldens dir>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "support/fixtures.hpp"
#include "support/oracle.hpp"

namespace {

using json = nlohmann::json;
using Table = std::vector<std::vector<std::size_t>>;

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

std::string strip_shift(const std::string& label) { return label.substr(0, label.find('[')); }

/// Rows and columns ordered by degree, highest first, ties by index.
std::vector<int> degree_order(const std::vector<int>& degrees) {
    std::vector<int> order(degrees.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degrees[a] > degrees[b]; });
    return order;
}

Table ext1(const oracle::Category& c) {
    const std::size_t n = c.ids.size();
    Table t(n, std::vector<std::size_t>(n, 0));
    for (const auto& [key, d] : oracle::ext_table(c, 1, 1)) t[std::get<0>(key)][std::get<1>(key)] = d;
    return t;
}

std::vector<std::string> check_mixed(const oracle::Category& c, const json& r) {
    std::vector<std::string> bad;
    std::map<std::tuple<int, int, int>, std::size_t> got;
    for (const auto& cell : r.at("nonzero"))
        got[{c.index(strip_shift(cell.at("source"))), c.index(strip_shift(cell.at("target"))), cell.at("shift").get<int>()}] =
            cell.at("dim").get<std::size_t>();
    const auto w = r.at("window");
    if (got != oracle::ext_table(c, w[0].get<int>(), w[1].get<int>())) bad.push_back("nonzero cells differ from the oracle");
    for (const auto& cell : r.at("nonzero"))
        if (cell.at("shift").get<int>() != 0 && !cell.at("allowed").get<bool>()) bad.push_back("disallowed nonzero cell");
    if (!r.at("violations").empty() || !r.at("pass").get<bool>()) bad.push_back("violations recorded");
    return bad;
}

std::vector<std::string> check_dual(const oracle::Category& c, const json& r) {
    std::vector<std::string> bad;
    const Table hom = r.at("hom_table").get<Table>();
    const std::vector<int> order = degree_order(c.degree);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < order.size(); ++j)
            if (hom[i][j] != c.dim(order[i], order[j])) bad.push_back("hom_table cell differs");

    std::vector<oracle::Complex> inj;
    std::vector<int> degrees;
    for (const auto& e : r.at("injectives")) {
        if (!e.at("found").get<bool>()) bad.push_back("injective not found for " + e.at("socle").get<std::string>());
        inj.push_back(oracle::parse_complex(c, e.at("complex")));
        degrees.push_back(e.at("degree").get<int>());
    }
    const Table dual = r.at("dual_hom_table").get<Table>();
    const std::vector<int> dorder = degree_order(degrees);
    for (std::size_t i = 0; i < dorder.size(); ++i)
        for (std::size_t j = 0; j < dorder.size(); ++j)
            if (dual[i][j] != oracle::hom_dim(c, inj[dorder[i]], inj[dorder[j]], 0))
                bad.push_back("dual_hom_table cell differs");

    // Self-extensions of the injectives must vanish in positive degrees.
    for (std::size_t s = 0; s < inj.size(); ++s)
        for (std::size_t t = 0; t < inj.size(); ++t)
            for (int k = 1; k <= 2; ++k)
                if (oracle::hom_dim(c, inj[s], inj[t], k) != 0) bad.push_back("injectives have higher extensions");

    const oracle::Category d = oracle::parse_category(r.at("dual"));
    for (std::size_t s = 0; s < d.ids.size(); ++s)
        for (std::size_t t = 0; t < d.ids.size(); ++t)
            if (d.dim(static_cast<int>(s), static_cast<int>(t)) !=
                oracle::hom_dim(c, inj[s], inj[t], 0))
                bad.push_back("dual presentation Hom differs from the injectives");
    return bad;
}

std::vector<std::string> check_double_dual(const oracle::Category& c, const json& r, const json& dual_report) {
    std::vector<std::string> bad;
    if (r.at("ext1_original").get<Table>() != ext1(c)) bad.push_back("ext1_original differs from the oracle");
    const oracle::Category d = oracle::parse_category(dual_report.at("dual"));
    if (r.at("ext1_dual").get<Table>() != ext1(d)) bad.push_back("ext1_dual differs from the oracle on the dual");
    const auto m = r.at("matching").get<std::vector<std::size_t>>();
    const Table o = ext1(c), e = ext1(d);
    const bool transposed = r.at("transposed").get<bool>();
    for (std::size_t s = 0; s < m.size(); ++s)
        for (std::size_t t = 0; t < m.size(); ++t)
            if (o[s][t] != (transposed ? e[m[t]][m[s]] : e[m[s]][m[t]])) bad.push_back("matching does not carry Ext^1");
    return bad;
}

std::vector<std::string> check_hom(const oracle::Category& c, const json& args, const json& r) {
    std::string from, to;
    int shift = 0;
    for (std::size_t k = 0; k + 1 < args.size(); ++k) {
        if (args[k] == "--from") from = args[k + 1];
        if (args[k] == "--to") to = args[k + 1];
        if (args[k] == "--shift") shift = std::stoi(args[k + 1].get<std::string>());
    }
    oracle::Complex x = oracle::single(c.index(from), 0), y = oracle::single(c.index(to), 0);
    if (r.at("dim").get<std::size_t>() != oracle::hom_dim(c, x, y, shift)) return {"dim differs from the oracle"};
    if (r.at("basis").size() != r.at("dim").get<std::size_t>()) return {"basis size differs from dim"};
    return {};
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: golden_oracle <goldens dir>\n";
        return 2;
    }
    const std::string dir = argv[1];
    int failures = 0;
    try {
        const json manifest = read_json(dir + "/manifest.json");
        std::map<std::string, json> dual_reports;
        for (const auto& e : manifest)
            if (e.at("args")[0] == "dual")
                dual_reports[e.at("fixture")] = read_json(dir + "/" + e.at("file").get<std::string>()).at("report");
        for (const auto& e : manifest) {
            const std::string file = e.at("file"), fixture = e.at("fixture"), cmd = e.at("args")[0];
            const json golden = read_json(dir + "/" + file);
            const json& r = golden.at("report");
            const oracle::Category c = oracle::parse_category(kktest::fixture_doc(fixture));
            std::vector<std::string> bad;
            if (cmd == "mixed-check") bad = check_mixed(c, r);
            else if (cmd == "dual") bad = check_dual(c, r);
            else if (cmd == "double-dual") bad = check_double_dual(c, r, dual_reports.at(fixture));
            else if (cmd == "hom") bad = check_hom(c, e.at("args"), r);
            else bad = {"no oracle for " + cmd};
            if (r.at("command") != cmd) bad.push_back("command field differs");
            std::cout << file << ": " << (bad.empty() ? "ok" : "FAIL") << "\n";
            for (const auto& b : bad) std::cout << "  " << b << "\n";
            failures += bad.empty() ? 0 : 1;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return failures == 0 ? 0 : 1;
}
