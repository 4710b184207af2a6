#include "koszulkit/infext.hpp"

namespace koszulkit {

namespace {

Scalar minus_one(const Complex& x) { return -x.cat().field().one(); }

/// Matrix of the linear map between two finite Hom spaces given on basis elements.
template <class Space, class Element, class Map>
Matrix induced_matrix(const Space& from, const Space& to, Map map) {
    const Field& fld = from.genuine.source().cat().field();
    Matrix m(fld, to.dim(), from.dim());
    for (std::size_t k = 0; k < from.dim(); ++k) {
        Vector e = fld.zeros(from.dim());
        e[k] = fld.one();
        const Element img = map(from.element(e));
        m.set_column(k, to.coords(img));
    }
    return m;
}

} // namespace

InfMorphism make_inf(const ChainMap& f0, const ChainMap& finf) { return {f0, finf}; }

InfMorphism iota(const ChainMap& f) { return {f, zero_map(f.source, shift(f.target, -1))}; }

InfMorphism upsilon(const ChainMap& finf, const Complex& target) { return {zero_map(finf.source, target), finf}; }

const ChainMap& varpi(const InfMorphism& f) { return f.f0; }

InfMorphism inf_identity(const Complex& x) { return iota(identity_map(x)); }

InfMorphism inf_zero(const Complex& x, const Complex& y) { return {zero_map(x, y), zero_map(x, shift(y, -1))}; }

InfMorphism inf_compose(const InfMorphism& g, const InfMorphism& f) {
    ChainMap f0 = compose(g.f0, f.f0);
    ChainMap a = compose(shift(g.f0, -1), f.finf);
    ChainMap b = compose(g.finf, f.f0);
    a.target = g.finf.target;
    return {f0, add(a, b)};
}

InfMorphism inf_add(const InfMorphism& a, const InfMorphism& b) { return {add(a.f0, b.f0), add(a.finf, b.finf)}; }

InfMorphism inf_scale(const InfMorphism& a, const Scalar& s) { return {scale(a.f0, s), scale(a.finf, s)}; }

bool inf_equal(const InfMorphism& a, const InfMorphism& b) {
    return homotopic(a.f0, b.f0) && homotopic(a.finf, b.finf);
}

bool is_infinitesimal(const InfMorphism& f) { return is_null_homotopic(f.f0).has_value(); }

bool is_genuine(const InfMorphism& f) { return is_null_homotopic(f.finf).has_value(); }

InfMorphism inf_shift(const InfMorphism& p, int n) {
    InfMorphism r{shift(p.f0, n), shift(p.finf, n)};
    if (n % 2 != 0) r.finf = scale(r.finf, minus_one(p.source()));
    r.finf.target = shift(r.f0.target, -1);
    return r;
}

std::optional<InfMorphism> inf_invert(const InfMorphism& f) {
    auto g = homotopy_inverse(f.f0);
    if (!g) return std::nullopt;
    ChainMap corr = compose(shift(*g, -1), compose(f.finf, *g));
    InfMorphism inv{*g, scale(corr, minus_one(f.source()))};
    if (!inf_equal(inf_compose(inv, f), inf_identity(f.source())) ||
        !inf_equal(inf_compose(f, inv), inf_identity(f.target())))
        throw std::logic_error("inf_invert: inverse formula failed");
    return inv;
}

Complex rho(const Complex& x) { return direct_sum({x, shift(x, -1)}).sum; }

ChainMap rho_map(const InfMorphism& f) {
    const Complex& x = f.source();
    const Complex& y = f.target();
    return block_map({x, shift(x, -1)}, {y, shift(y, -1)},
                     {{f.f0, std::nullopt}, {f.finf, shift(f.f0, -1)}});
}

AdjunctionData adjunction_data(const Complex& x) {
    const Complex xm = shift(x, -1), x1 = shift(x, 1);
    AdjunctionData d;
    d.unit_iota_rho = block_map({x}, {x, xm}, {{identity_map(x)}, {std::nullopt}});
    d.counit_iota_rho = {block_map({x, xm}, {x}, {{identity_map(x), std::nullopt}}),
                         block_map({x, xm}, {xm}, {{std::nullopt, identity_map(xm)}})};
    d.unit_rho1_iota = {block_map({x}, {x1, x}, {{std::nullopt}, {identity_map(x)}}),
                        block_map({x}, {x, xm}, {{identity_map(x)}, {std::nullopt}})};
    d.counit_rho1_iota = block_map({x1, x}, {x}, {{std::nullopt, identity_map(x)}});
    return d;
}

AdjunctionReport adjunction_check(const Complex& x) {
    AdjunctionReport r;
    const AdjunctionData d = adjunction_data(x);
    r.iota_rho_counit_unit = inf_equal(inf_compose(d.counit_iota_rho, iota(d.unit_iota_rho)), inf_identity(x));
    const Complex rx = rho(x);
    const AdjunctionData dr = adjunction_data(rx);
    r.iota_rho_rho_unit = homotopic(compose(rho_map(d.counit_iota_rho), dr.unit_iota_rho), identity_map(rx));
    r.rho1_iota_counit_unit = inf_equal(inf_compose(iota(d.counit_rho1_iota), d.unit_rho1_iota), inf_identity(x));
    const Complex w = d.counit_rho1_iota.source;
    const AdjunctionData dw = adjunction_data(w);
    r.rho1_iota_rho_unit =
        homotopic(compose(dw.counit_rho1_iota, shift(rho_map(d.unit_rho1_iota), 1)), identity_map(w));
    return r;
}

InfTriangle iota_cone_triangle(const ChainMap& f) {
    const Cone c = cone(f);
    return {iota(f), iota(c.inclusion), iota(c.projection)};
}

InfHomSpace::InfHomSpace(const Complex& x, const Complex& y) : genuine(x, y), infinitesimal(x, shift(y, -1)) {}

Vector InfHomSpace::coords(const InfMorphism& f) const {
    Vector a = genuine.coords(f.f0);
    const Vector b = infinitesimal.coords(f.finf);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

InfMorphism InfHomSpace::element(const Vector& c) const {
    const auto n = static_cast<std::ptrdiff_t>(genuine.dim());
    return {genuine.element(Vector(c.begin(), c.begin() + n)), infinitesimal.element(Vector(c.begin() + n, c.end()))};
}

bool LesReport::pass() const {
    for (const auto& n : covariant)
        if (!n.exact()) return false;
    for (const auto& n : contravariant)
        if (!n.exact()) return false;
    return true;
}

LesReport inf_les_check(const Complex& a, const InfTriangle& t, std::pair<int, int> window) {
    std::vector<Complex> objs;
    std::vector<std::string> labels;
    std::vector<InfMorphism> maps;
    for (int n = window.first; n <= window.second; ++n) {
        const InfMorphism fn = inf_shift(t.f, n), gn = inf_shift(t.g, n), hn = inf_shift(t.h, n);
        objs.insert(objs.end(), {fn.source(), gn.source(), hn.source()});
        const std::string s = "[" + std::to_string(n) + "]";
        labels.insert(labels.end(), {"X" + s, "Y" + s, "Z" + s});
        maps.insert(maps.end(), {fn, gn, hn});
    }
    maps.pop_back();
    LesReport r;
    std::vector<InfHomSpace> cov, con;
    for (const auto& o : objs) {
        cov.emplace_back(a, o);
        con.emplace_back(o, a);
    }
    std::vector<Matrix> mcov, mcon;
    for (std::size_t k = 0; k < maps.size(); ++k) {
        const InfMorphism& u = maps[k];
        mcov.push_back(induced_matrix<InfHomSpace, InfMorphism>(cov[k], cov[k + 1],
                                                                [&](const InfMorphism& phi) { return inf_compose(u, phi); }));
        mcon.push_back(induced_matrix<InfHomSpace, InfMorphism>(con[k + 1], con[k],
                                                                [&](const InfMorphism& phi) { return inf_compose(phi, u); }));
    }
    for (std::size_t k = 1; k + 1 < objs.size(); ++k) {
        const Matrix& in = mcov[k - 1];
        const Matrix& out = mcov[k];
        r.covariant.push_back({"Hom(A," + labels[k] + ")", cov[k].dim(), rank(in), rank(out), (out * in).is_zero()});
        const Matrix& cin = mcon[k];
        const Matrix& cout = mcon[k - 1];
        r.contravariant.push_back(
            {"Hom(" + labels[k] + ",A)", con[k].dim(), rank(cin), rank(cout), (cout * cin).is_zero()});
    }
    return r;
}

InfSquareCompletion complete_inf_square(const InfMorphism& p, const InfMorphism& q, const ChainMap& f,
                                        const ChainMap& i) {
    if (!inf_equal(inf_compose(q, iota(f)), inf_compose(iota(i), p)))
        throw CheckFailure("complete_inf_square: square does not commute in the infinitesimal extension");
    const Scalar m1 = minus_one(f.source);
    const CompletedSquare s0 = complete_square(f, i, p.f0, q.f0);
    const ChainMap mi = scale(shift(i, -1), m1);
    const CompletedSquare s1 = complete_square(f, mi, scale(p.finf, m1), q.finf);
    const Cone c1 = cone(f), c2 = cone(i);
    const Complex target = shift(c2.z, -1);
    if (!(s1.r.target == target)) throw std::logic_error("complete_inf_square: cone(-i[-1]) differs from cone(i)[-1]");
    ChainMap rinf = s1.r;
    rinf.target = target;
    InfSquareCompletion out{{s0.r, rinf}, false, std::nullopt};
    const bool sq2 = inf_equal(inf_compose(out.r, iota(c1.inclusion)), inf_compose(iota(c2.inclusion), q));
    const bool sq3 = inf_equal(inf_compose(inf_shift(p, 1), iota(c1.projection)), inf_compose(iota(c2.projection), out.r));
    out.squares_commute = sq2 && sq3;
    if (homotopy_inverse(p.f0) && homotopy_inverse(q.f0)) out.inverse = inf_invert(out.r);
    return out;
}

InfMorphism random_inf_morphism(const Complex& x, const Complex& y, std::mt19937_64& rng) {
    return {random_chain_map(x, y, rng), random_chain_map(x, shift(y, -1), rng)};
}

} // namespace koszulkit
