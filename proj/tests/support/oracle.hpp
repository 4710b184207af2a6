#pragma once

// Brute-force reference computations kept apart from the engine: own JSON
// reading, boost rationals, own elimination, dense enumeration of the full
// chain-map and homotopy systems. Characteristic 0 only.

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace oracle {

using Q = boost::multiprecision::cpp_rational;
using Row = std::vector<Q>;

inline Q parse_q(const nlohmann::json& v) {
    if (v.is_number_integer()) return Q(v.get<long>());
    const std::string s = v.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Q(boost::multiprecision::cpp_int(s));
    return Q(boost::multiprecision::cpp_int(s.substr(0, slash)), boost::multiprecision::cpp_int(s.substr(slash + 1)));
}

struct Category {
    std::vector<std::string> ids;
    std::vector<int> degree;
    std::map<std::pair<int, int>, std::vector<std::string>> basis;
    std::map<std::string, std::tuple<int, int, std::size_t>> where;
    std::map<std::pair<std::string, std::string>, std::map<std::string, Q>> products;

    int index(const std::string& id) const {
        for (std::size_t k = 0; k < ids.size(); ++k)
            if (ids[k] == id) return static_cast<int>(k);
        throw std::runtime_error("oracle: unknown id " + id);
    }
    std::size_t dim(int s, int t) const {
        auto it = basis.find({s, t});
        return it == basis.end() ? 0 : it->second.size();
    }
    /// Coefficients of basis x of Hom(b,c) after basis y of Hom(a,b), in Hom(a,c).
    Row compose(int a, int b, int c, std::size_t x, std::size_t y) const {
        Row out(dim(a, c));
        const std::string& lx = basis.at({b, c})[x];
        const std::string& ly = basis.at({a, b})[y];
        if (lx == "1@" + ids[static_cast<std::size_t>(b)] && b == c) {
            out[y] = 1;
            return out;
        }
        if (ly == "1@" + ids[static_cast<std::size_t>(b)] && a == b) {
            out[x] = 1;
            return out;
        }
        auto it = products.find({lx, ly});
        if (it == products.end()) return out;
        for (const auto& [label, coeff] : it->second) out[std::get<2>(where.at(label))] += coeff;
        return out;
    }
};

inline Category parse_category(const nlohmann::json& doc) {
    if (doc.at("characteristic").get<long>() != 0) throw std::runtime_error("oracle: characteristic 0 only");
    Category c;
    for (const auto& o : doc.at("indecomposables")) {
        c.ids.push_back(o.at("id").get<std::string>());
        c.degree.push_back(o.at("degree").get<int>());
    }
    for (const auto& h : doc.at("hom")) {
        const int s = c.index(h.at("src").get<std::string>()), t = c.index(h.at("tgt").get<std::string>());
        auto labels = h.at("basis").get<std::vector<std::string>>();
        for (std::size_t k = 0; k < labels.size(); ++k) c.where[labels[k]] = {s, t, k};
        c.basis[{s, t}] = labels;
    }
    if (doc.contains("compose"))
        for (const auto& e : doc.at("compose")) {
            auto& slot = c.products[{e.at("left").get<std::string>(), e.at("right").get<std::string>()}];
            for (const auto& r : e.at("result")) slot[r.at("label").get<std::string>()] += parse_q(r.at("coeff"));
        }
    return c;
}

/// Block matrix of Hom-coordinates between two lists of indecomposables.
struct Morph {
    std::vector<int> src, tgt;
    std::map<std::pair<std::size_t, std::size_t>, Row> blocks;  // (row, col)

    Row block(const Category& c, std::size_t r, std::size_t k) const {
        auto it = blocks.find({r, k});
        return it == blocks.end() ? Row(c.dim(src[k], tgt[r])) : it->second;
    }
};

inline Morph zero_morph(const std::vector<int>& s, const std::vector<int>& t) { return {s, t, {}}; }

inline Morph compose(const Category& c, const Morph& g, const Morph& f) {
    Morph out = zero_morph(f.src, g.tgt);
    for (std::size_t r = 0; r < g.tgt.size(); ++r)
        for (std::size_t k = 0; k < f.src.size(); ++k) {
            Row acc(c.dim(f.src[k], g.tgt[r]));
            for (std::size_t m = 0; m < f.tgt.size(); ++m) {
                const Row gb = g.block(c, r, m), fb = f.block(c, m, k);
                for (std::size_t x = 0; x < gb.size(); ++x)
                    for (std::size_t y = 0; y < fb.size(); ++y) {
                        if (gb[x] == 0 || fb[y] == 0) continue;
                        const Row p = c.compose(f.src[k], f.tgt[m], g.tgt[r], x, y);
                        for (std::size_t z = 0; z < p.size(); ++z) acc[z] += gb[x] * fb[y] * p[z];
                    }
            }
            out.blocks[{r, k}] = acc;
        }
    return out;
}

/// Coordinates flattened row-major over blocks.
inline Row flatten(const Category& c, const Morph& m) {
    Row v;
    for (std::size_t r = 0; r < m.tgt.size(); ++r)
        for (std::size_t k = 0; k < m.src.size(); ++k) {
            const Row b = m.block(c, r, k);
            v.insert(v.end(), b.begin(), b.end());
        }
    return v;
}

inline std::size_t morph_dim(const Category& c, const std::vector<int>& s, const std::vector<int>& t) {
    std::size_t n = 0;
    for (int b : t)
        for (int a : s) n += c.dim(a, b);
    return n;
}

/// The unit morphism with a single 1 at flattened coordinate u.
inline Morph unit_morph(const Category& c, const std::vector<int>& s, const std::vector<int>& t, std::size_t u) {
    Morph m = zero_morph(s, t);
    std::size_t pos = 0;
    for (std::size_t r = 0; r < t.size(); ++r)
        for (std::size_t k = 0; k < s.size(); ++k) {
            const std::size_t n = c.dim(s[k], t[r]);
            if (u < pos + n) {
                Row b(n);
                b[u - pos] = 1;
                m.blocks[{r, k}] = b;
                return m;
            }
            pos += n;
        }
    throw std::out_of_range("oracle: unit coordinate");
}

struct Complex {
    std::map<int, std::vector<int>> terms;
    std::map<int, Morph> diff;

    std::vector<int> term(int i) const {
        auto it = terms.find(i);
        return it == terms.end() ? std::vector<int>{} : it->second;
    }
    Morph d(int i) const {
        auto it = diff.find(i);
        return it == diff.end() ? zero_morph(term(i), term(i + 1)) : it->second;
    }
};

inline Complex parse_complex(const Category& c, const nlohmann::json& doc) {
    Complex x;
    for (const auto& [k, ids] : doc.at("terms").items()) {
        std::vector<int> t;
        for (const auto& id : ids) t.push_back(c.index(id.get<std::string>()));
        if (!t.empty()) x.terms[std::stoi(k)] = t;
    }
    if (doc.contains("diff"))
        for (const auto& [k, blocks] : doc.at("diff").items()) {
            const int i = std::stoi(k);
            Morph m = zero_morph(x.term(i), x.term(i + 1));
            for (const auto& b : blocks) {
                const std::size_t r = b.value("row", std::size_t{0}), col = b.value("col", std::size_t{0});
                const auto& [s, t, pos] = c.where.at(b.at("label").get<std::string>());
                (void)s;
                (void)t;
                auto it = m.blocks.find({r, col});
                if (it == m.blocks.end()) it = m.blocks.emplace(std::make_pair(r, col), Row(c.dim(m.src[col], m.tgt[r]))).first;
                it->second[pos] += parse_q(b.at("coeff"));
            }
            x.diff[i] = m;
        }
    return x;
}

/// One-term complex S in degree i.
inline Complex single(int s, int i) {
    Complex x;
    x.terms[i] = {s};
    return x;
}

/// Rank by plain Gaussian elimination on rows.
inline std::size_t rank(std::vector<Row> m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][col] == 0) continue;
            const Q f = m[i][col] / m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline Morph scaled(Morph m, const Q& s) {
    for (auto& [k, b] : m.blocks)
        for (auto& v : b) v *= s;
    return m;
}

inline Morph sum(Morph a, const Morph& b) {
    for (const auto& [k, blk] : b.blocks) {
        auto it = a.blocks.find(k);
        if (it == a.blocks.end()) {
            a.blocks[k] = blk;
            continue;
        }
        for (std::size_t z = 0; z < blk.size(); ++z) it->second[z] += blk[z];
    }
    return a;
}

/// dim Hom_{K^b}(X, Y[k]) = dim(chain maps) - rank(null-homotopic maps).
inline std::size_t hom_dim(const Category& c, const Complex& x, const Complex& y, int k) {
    if (x.terms.empty()) return 0;
    const int lo = x.terms.begin()->first - 1, hi = x.terms.rbegin()->first + 1;
    const Q sign = (k % 2 == 0) ? Q(1) : Q(-1);
    auto yk = [&](int j) { return y.term(j + k); };
    auto dyk = [&](int j) { return scaled(y.d(j + k), sign); };

    // Unknown layout for f^i : X^i → Y[k]^i.
    std::vector<int> deg;
    std::vector<std::size_t> off{0};
    for (int i = lo; i <= hi; ++i) {
        deg.push_back(i);
        off.push_back(off.back() + morph_dim(c, x.term(i), yk(i)));
    }
    const std::size_t nf = off.back();
    if (nf == 0) return 0;

    // Chain condition: column per unknown, equations in Hom(X^i, Y[k]^{i+1}).
    std::vector<Row> cols;
    for (std::size_t n = 0; n < deg.size(); ++n)
        for (std::size_t u = 0; u < off[n + 1] - off[n]; ++u) {
            const int i = deg[n];
            const Morph f = unit_morph(c, x.term(i), yk(i), u);
            Row eq;
            for (int j = lo; j <= hi; ++j) {
                Morph e = zero_morph(x.term(j), yk(j + 1));
                if (j == i) e = sum(e, compose(c, dyk(j), f));
                if (j + 1 == i) e = sum(e, scaled(compose(c, f, x.d(j)), Q(-1)));
                const Row v = flatten(c, e);
                eq.insert(eq.end(), v.begin(), v.end());
            }
            cols.push_back(eq);
        }
    const std::size_t cycles = nf - rank(cols);

    // Null-homotopic maps d h + h d from h^i : X^i → Y[k]^{i-1}.
    std::vector<Row> bound;
    for (int i = lo; i <= hi; ++i)
        for (std::size_t u = 0; u < morph_dim(c, x.term(i), yk(i - 1)); ++u) {
            const Morph h = unit_morph(c, x.term(i), yk(i - 1), u);
            Row img;
            for (int j = lo; j <= hi; ++j) {
                Morph e = zero_morph(x.term(j), yk(j));
                if (j == i) e = sum(e, compose(c, dyk(j - 1), h));
                if (j + 1 == i) e = sum(e, compose(c, h, x.d(j)));
                const Row v = flatten(c, e);
                img.insert(img.end(), v.begin(), v.end());
            }
            bound.push_back(img);
        }
    return cycles - rank(bound);
}

/// Simple S[deg S]: S placed in cohomological degree -deg S.
inline Complex simple(const Category& c, int s) { return single(s, -c.degree[static_cast<std::size_t>(s)]); }

/// dim Hom(S[deg S], T[deg T][i]) for all simples and i in [lo, hi]; zero cells omitted.
inline std::map<std::tuple<int, int, int>, std::size_t> ext_table(const Category& c, int lo, int hi) {
    std::map<std::tuple<int, int, int>, std::size_t> out;
    const int n = static_cast<int>(c.ids.size());
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            for (int i = lo; i <= hi; ++i)
                if (auto d = hom_dim(c, simple(c, s), simple(c, t), i)) out[{s, t, i}] = d;
    return out;
}

/// Composition factors from the class in the Grothendieck group:
/// m_S = (-1)^{deg S} Σ_i (-1)^i [multiplicity of S in X^i].
inline std::map<int, long> euler_multiplicities(const Category& c, const Complex& x) {
    std::map<int, long> raw;
    for (const auto& [i, t] : x.terms)
        for (int s : t) raw[s] += (i % 2 == 0) ? 1 : -1;
    std::map<int, long> out;
    for (const auto& [s, v] : raw) {
        const long m = (c.degree[static_cast<std::size_t>(s)] % 2 == 0) ? v : -v;
        if (m != 0) out[s] = m;
    }
    return out;
}

} // namespace oracle
