#include "koszulkit/tstructure.hpp"

#include <algorithm>

namespace koszulkit {

namespace {

std::string point_text(const SupportPoint& pt) {
    return "(" + std::to_string(pt.first) + "," + std::to_string(pt.second) + ")";
}

/// Summand positions whose value i + deg satisfies pred.
template <class Pred>
std::map<int, std::vector<std::size_t>> select_by_level(const Complex& x, Pred pred) {
    std::map<int, std::vector<std::size_t>> out;
    for (int i : x.degrees()) {
        const auto& t = x.term(i);
        for (std::size_t k = 0; k < t.size(); ++k)
            if (pred(i + x.cat().degree(t[k]))) out[i].push_back(k);
    }
    return out;
}

Complex restrict_complex(const Complex& x, const std::map<int, std::vector<std::size_t>>& pos) {
    const auto& p = x.cat();
    Complex r(p);
    static const std::vector<std::size_t> none;
    auto at = [&](int i) -> const std::vector<std::size_t>& {
        auto it = pos.find(i);
        return it == pos.end() ? none : it->second;
    };
    for (int i : x.degrees())
        r.set_term(i, restrict_morphism(identity_morphism(p, x.term(i)), at(i), {}).target());
    for (int i : x.degrees())
        if (!r.term(i).empty() && !r.term(i + 1).empty()) r.set_d(i, restrict_morphism(x.d(i), at(i + 1), at(i)));
    return r;
}

AddMorphism scalar_block_morphism(const Presentation& p, const AddObject& x, const std::vector<std::size_t>& pos,
                                  const Matrix& g) {
    AddMorphism m = identity_morphism(p, x);
    for (std::size_t r = 0; r < pos.size(); ++r)
        for (std::size_t c = 0; c < pos.size(); ++c) m.coord(pos[r], pos[c], 0) = g.at(r, c);
    return m;
}

} // namespace

bool in_region(const Support& s, Region r, int offset) {
    for (const auto& [i, j] : s) {
        const int v = i + j - offset;
        if (r == Region::left && v > 0) return false;
        if (r == Region::right && v < 0) return false;
        if (r == Region::antidiagonal && v != 0) return false;
    }
    return true;
}

AisleMembership aisle_membership(const Complex& x) {
    const Support s = support(minimal_model(x, false).minimal);
    AisleMembership m;
    m.in_left = in_region(s, Region::left);
    m.in_right = in_region(s, Region::right);
    m.in_heart = m.in_left && m.in_right;
    return m;
}

HeartObject to_heart(const Complex& x) {
    MinimalModel mm = minimal_model(x);
    for (const auto& pt : support(mm.minimal))
        if (pt.first + pt.second != 0)
            throw CheckFailure("object is not in the heart: minimal model has support point " + point_text(pt));
    return {mm.minimal, mm.to_minimal};
}

Truncation truncate(const Complex& x) {
    const MinimalModel mm = minimal_model(x);
    const SplitTriangle st = split_triangle(mm.minimal, select_by_level(mm.minimal, [](int v) { return v <= 0; }));
    Truncation t;
    t.a = st.sub;
    t.b = st.quotient;
    t.f = compose(*mm.from_minimal, st.inclusion);
    t.g = compose(st.projection, *mm.to_minimal);
    t.h = st.connecting;
    t.certificate = certify_triangle(t.f, t.g, t.h);
    return t;
}

Truncation truncate_at(const Complex& x, int n) {
    if (n == 0) return truncate(x);
    Truncation s = truncate(shift(x, n));
    Truncation t;
    t.a = shift(s.a, -n);
    t.b = shift(s.b, -n);
    t.f = shift(s.f, -n);
    t.g = shift(s.g, -n);
    t.h = shift(s.h, -n);
    if (n % 2 != 0) t.h = scale(t.h, -x.cat().field().one());
    t.f.target = x;
    t.g.source = x;
    t.certificate = certify_triangle(t.f, t.g, t.h);
    return t;
}

ConeThroughSimple cone_through_simple(const ChainMap& f) {
    const Complex& src = f.source;
    const auto& p = src.cat();
    if (src.degrees().size() != 1 || src.term(src.lo()).size() != 1)
        throw InputError("cone_through_simple: source is not a shifted indecomposable");
    const int s_obj = src.term(src.lo())[0];
    const int at = src.lo();
    if (at != -p.degree(s_obj)) throw InputError("cone_through_simple: source is not S[deg S]");
    const MinimalModel mm = minimal_model(f.target);
    if (!in_region(support(mm.minimal), Region::right))
        throw CheckFailure("cone_through_simple: target is not in the right aisle");
    const Complex& xm = mm.minimal;
    const ChainMap f1 = compose(*mm.to_minimal, f);
    const AddObject& term = xm.term(at);
    std::vector<std::size_t> spos;
    for (std::size_t k = 0; k < term.size(); ++k)
        if (term[k] == s_obj) spos.push_back(k);
    const AddMorphism comp = f1.at(at);
    const Field& fld = p.field();
    Vector v;
    std::optional<std::size_t> pivot;
    for (std::size_t r = 0; r < spos.size(); ++r) {
        v.push_back(comp.coord(spos[r], 0, 0));
        if (!pivot && !v.back().is_zero()) pivot = r;
    }
    if (!pivot) throw CheckFailure("cone_through_simple: morphism is zero");
    // columns [v, e_k (k ≠ pivot)] form an invertible matrix; its inverse sends v to e_1
    Matrix mcols(fld, spos.size(), spos.size());
    mcols.set_column(0, v);
    std::size_t col = 1;
    for (std::size_t k = 0; k < spos.size(); ++k)
        if (k != *pivot) mcols.at(k, col++) = fld.one();
    const Matrix g = *inverse(mcols);
    const AddMorphism gm = scalar_block_morphism(p, term, spos, g);
    const AddMorphism gi = scalar_block_morphism(p, term, spos, mcols);

    Complex x2 = xm;
    if (!xm.term(at + 1).empty()) x2.set_d(at, compose(xm.d(at), gi));
    if (!xm.term(at - 1).empty()) x2.set_d(at - 1, compose(gm, xm.d(at - 1)));
    ChainMap gmap{xm, x2, {}};
    for (int i : xm.degrees()) gmap.set(i, i == at ? gm : identity_morphism(p, xm.term(i)));
    const ChainMap f2 = compose(gmap, f1);
    const ChainMap q = compose(gmap, *mm.to_minimal);
    const CompletedSquare sq = complete_square(f, f2, identity_map(src), q);
    const Cone c2 = cone(f2);
    const EliminationStep st = eliminate(c2.z, at - 1, 0, spos[0]);
    ConeThroughSimple out{st.reduced, compose(st.projection, sq.r)};
    if (!in_region(support(out.y), Region::right))
        throw std::logic_error("cone_through_simple: result left the right aisle");
    if (!is_quasi_iso(out.iso)) throw std::logic_error("cone_through_simple: comparison is not an isomorphism");
    return out;
}

HeartObject t_cohomology(const Complex& x, int n) {
    const Complex m = minimal_model(x, false).minimal;
    const Complex layer = restrict_complex(m, select_by_level(m, [n](int v) { return v == n; }));
    return {shift(layer, n), std::nullopt};
}

std::pair<int, int> cohomology_window(const Complex& x) {
    const Support s = support(minimal_model(x, false).minimal);
    if (s.empty()) return {0, -1};
    int lo = s.begin()->first + s.begin()->second, hi = lo;
    for (const auto& [i, j] : s) {
        lo = std::min(lo, i + j);
        hi = std::max(hi, i + j);
    }
    return {lo, hi};
}

Complex heart_simple(const Presentation& p, int s) { return concentrated(p, AddObject{{s}}, -p.degree(s)); }

std::vector<Complex> heart_simples(const Presentation& p) {
    std::vector<Complex> out;
    for (std::size_t s = 0; s < p.size(); ++s) out.push_back(heart_simple(p, static_cast<int>(s)));
    return out;
}

std::map<int, Complex> weight_filtration(const HeartObject& m) {
    std::map<int, Complex> out;
    for (int i : m.normal_form.degrees()) out.emplace(-i, concentrated(m.normal_form.cat(), m.normal_form.term(i), i));
    return out;
}

Complex weight_subobject(const HeartObject& m, int k) {
    const Complex& x = m.normal_form;
    std::map<int, std::vector<std::size_t>> pos;
    for (int i : x.degrees())
        if (i >= -k)
            for (std::size_t t = 0; t < x.term(i).size(); ++t) pos[i].push_back(t);
    return restrict_complex(x, pos);
}

std::map<int, int> composition_factors(const HeartObject& m) {
    std::map<int, int> out;
    for (int i : m.normal_form.degrees())
        for (int s : m.normal_form.term(i).summands) ++out[s];
    return out;
}

VanishingReport mixed_vanishing_report(const Presentation& p, std::pair<int, int> window) {
    VanishingReport r;
    r.window = window;
    const auto simples = heart_simples(p);
    for (std::size_t s = 0; s < simples.size(); ++s)
        for (std::size_t t = 0; t < simples.size(); ++t)
            for (int i = window.first; i <= window.second; ++i) {
                const std::size_t d = hom_space(simples[s], simples[t], i).dim();
                if (d == 0) continue;
                const int ds = p.degree(static_cast<int>(s)), dt = p.degree(static_cast<int>(t));
                VanishingCell c{static_cast<int>(s), static_cast<int>(t), i, d, dt == ds - i};
                r.nonzero.push_back(c);
                if (!c.allowed) r.violations.push_back(c);
            }
    return r;
}

Complex random_heart_complex(const Presentation& p, std::mt19937_64& rng, int max_multiplicity, double density) {
    Complex x(p);
    std::uniform_int_distribution<int> mult(0, max_multiplicity);
    for (std::size_t s = 0; s < p.size(); ++s) {
        const int i = -p.degree(static_cast<int>(s));
        AddObject t = x.term(i);
        const int m = mult(rng);
        for (int k = 0; k < m; ++k) t.summands.push_back(static_cast<int>(s));
        std::shuffle(t.summands.begin(), t.summands.end(), rng);
        x.set_term(i, t);
    }
    std::bernoulli_distribution keep(density);
    for (int i : x.degrees()) {
        if (x.term(i + 1).empty()) continue;
        const Matrix k = kernel_basis(pre_compose_matrix(x.d(i - 1), x.term(i + 1)));
        Vector v = p.field().zeros(k.rows());
        for (std::size_t c = 0; c < k.cols(); ++c) {
            if (!keep(rng)) continue;
            const Scalar w = random_scalar(p.field(), rng);
            for (std::size_t r = 0; r < k.rows(); ++r)
                if (!k.at(r, c).is_zero()) v[r] += w * k.at(r, c);
        }
        x.set_d(i, from_coords(p, x.term(i), x.term(i + 1), v));
    }
    return x;
}

Complex disguise(const Complex& x, std::mt19937_64& rng) {
    const auto& p = x.cat();
    std::vector<Complex> parts{x};
    std::uniform_int_distribution<int> obj(0, static_cast<int>(p.size()) - 1), deg(-3, 2), count(1, 2);
    const int n = count(rng);
    for (int k = 0; k < n; ++k) {
        const Complex t = concentrated(p, AddObject{{obj(rng)}}, deg(rng));
        parts.push_back(cone(identity_map(t)).z);
    }
    std::shuffle(parts.begin() + 1, parts.end(), rng);
    return random_conjugation(direct_sum(parts).sum, rng).target;
}

} // namespace koszulkit
