#include "pretty.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace koszulkit_cli {

namespace {

using json = nlohmann::json;

const std::set<std::string> envelope_keys{"command", "engine_version", "fixture_hash", "window", "seed", "pass"};

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

bool is_complex(const json& v) { return v.is_object() && v.contains("terms") && v.contains("diff"); }

bool is_scalar(const json& v) { return !v.is_object() && !v.is_array(); }

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

std::string summands(const json& ids) {
    std::string out;
    for (const auto& id : ids) out += (out.empty() ? "" : " + ") + id.get<std::string>();
    return "[" + (out.empty() ? std::string("0") : out) + "]";
}

std::string block_text(const json& b) {
    std::string coeff = b.value("coeff", std::string("1"));
    std::string s = (coeff == "1" ? "" : coeff + "*") + b.value("label", std::string("?"));
    if (b.value("row", 0) != 0 || b.value("col", 0) != 0)
        s += "(" + std::to_string(b.value("row", 0)) + "," + std::to_string(b.value("col", 0)) + ")";
    return s;
}

void render_complex(std::ostream& out, const json& c, const std::string& indent) {
    std::vector<int> degrees;
    for (const auto& [k, v] : c.at("terms").items()) degrees.push_back(std::stoi(k));
    std::sort(degrees.begin(), degrees.end());
    if (degrees.empty()) {
        out << indent << "0\n";
        return;
    }
    for (std::size_t n = 0; n < degrees.size(); ++n) {
        const std::string k = std::to_string(degrees[n]);
        out << indent << pad(k, 4) << summands(c.at("terms").at(k)) << "\n";
        if (n + 1 == degrees.size()) break;
        std::string arrow;
        if (c.at("diff").contains(k))
            for (const auto& b : c.at("diff").at(k)) arrow += (arrow.empty() ? "" : " + ") + block_text(b);
        out << indent << "    |" << (arrow.empty() ? "" : " " + arrow) << "\n";
        out << indent << "    v\n";
    }
}

bool is_matrix(const json& v) {
    if (!v.is_array() || v.empty()) return false;
    for (const auto& row : v) {
        if (!row.is_array()) return false;
        for (const auto& x : row)
            if (!x.is_number()) return false;
    }
    return true;
}

bool is_record_table(const json& v) {
    if (!v.is_array() || v.empty()) return false;
    for (const auto& row : v) {
        if (!row.is_object()) return false;
        for (const auto& [k, x] : row.items())
            if (!is_scalar(x) && !(x.is_array() && std::all_of(x.begin(), x.end(), is_scalar))) return false;
    }
    return true;
}

std::string cell_text(const json& v) {
    if (!v.is_array()) return scalar_text(v);
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + scalar_text(x);
    return "(" + s + ")";
}

void render_table(std::ostream& out, const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows, const std::string& indent) {
    std::vector<std::size_t> w(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) w[c] = header[c].size();
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], r[c].size());
    auto line = [&](const std::vector<std::string>& r) {
        out << indent;
        for (std::size_t c = 0; c < r.size(); ++c) out << pad(r[c], w[c]) << (c + 1 < r.size() ? "  " : "");
        out << "\n";
    };
    line(header);
    std::vector<std::string> rule;
    for (auto x : w) rule.push_back(std::string(x, '-'));
    line(rule);
    for (const auto& r : rows) line(r);
}

void render_value(std::ostream& out, const std::string& key, const json& v, const std::string& indent) {
    if (is_scalar(v)) {
        out << indent << key << ": " << scalar_text(v) << "\n";
    } else if (is_complex(v)) {
        out << indent << key << ":\n";
        render_complex(out, v, indent + "  ");
    } else if ((v.is_array() || v.is_object()) && v.empty()) {
        out << indent << key << ": none\n";
    } else if (key == "support" && v.is_array()) {
        std::string pts;
        for (const auto& p : v) pts += (pts.empty() ? "" : " ") + cell_text(p);
        out << indent << key << ": " << pts << "\n";
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)) {
        out << indent << key << ": " << cell_text(v) << "\n";
    } else if (is_matrix(v)) {
        out << indent << key << ":\n";
        std::vector<std::string> header{""};
        std::vector<std::vector<std::string>> rows;
        for (std::size_t c = 0; c < v[0].size(); ++c) header.push_back(std::to_string(c));
        for (std::size_t r = 0; r < v.size(); ++r) {
            std::vector<std::string> row{std::to_string(r)};
            for (const auto& x : v[r]) row.push_back(scalar_text(x));
            row.resize(header.size());
            rows.push_back(row);
        }
        render_table(out, header, rows, indent + "  ");
    } else if (is_record_table(v)) {
        out << indent << key << ":\n";
        std::vector<std::string> header;
        for (const auto& [k, x] : v[0].items()) header.push_back(k);
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : v) {
            std::vector<std::string> row;
            for (const auto& h : header) row.push_back(r.contains(h) ? cell_text(r.at(h)) : "");
            rows.push_back(row);
        }
        render_table(out, header, rows, indent + "  ");
    } else if (v.is_object()) {
        out << indent << key << ":\n";
        for (const auto& [k, x] : v.items()) render_value(out, k, x, indent + "  ");
    } else {
        out << indent << key << ":\n";
        for (std::size_t i = 0; i < v.size(); ++i) render_value(out, "[" + std::to_string(i) + "]", v[i], indent + "  ");
    }
}

} // namespace

std::string render_pretty(const std::string& report_json) {
    const json r = json::parse(report_json);
    std::ostringstream out;
    out << r.value("command", std::string("report")) << ": " << (r.value("pass", false) ? "PASS" : "FAIL") << "\n";
    out << "engine " << scalar_text(r.value("engine_version", json())) << ", fixture "
        << scalar_text(r.value("fixture_hash", json()));
    const json w = r.value("window", json());
    if (w.is_array() && w.size() == 2) out << ", window " << w[0].dump() << ".." << w[1].dump();
    if (r.contains("seed")) out << ", seed " << r.at("seed").dump();
    out << "\n";
    for (const auto& [k, v] : r.items())
        if (!envelope_keys.count(k)) render_value(out, k, v, "");
    return out.str();
}

} // namespace koszulkit_cli
