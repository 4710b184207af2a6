#include "koszulkit/filtered.hpp"

#include <algorithm>
#include <numeric>

namespace koszulkit {

namespace {

std::vector<std::size_t> iota_positions(std::size_t from, std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), from);
    return v;
}

/// Complement of e_{i+1}(X_{i+1}) in X_i, split from 1 - e r.
IdempotentSplitting complement(const FilteredObject& x, int i) {
    const auto& p = *x.cat;
    const AddMorphism er = compose(x.inclusion(i + 1), x.retraction(i + 1));
    return split_idempotent(identity_morphism(p, x.term(i)) - er);
}

/// Morphism sending the listed source positions identically onto target positions.
AddMorphism selection(const Presentation& p, const AddObject& src, const AddObject& tgt,
                      const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    AddMorphism m = zero_morphism(p, src, tgt);
    for (std::size_t k = 0; k < rows.size(); ++k) m.coord(rows[k], cols[k], *p.identity_index(src[cols[k]])) = p.field().one();
    return m;
}

std::string level_text(int i) { return std::to_string(i); }

} // namespace

AddObject FilteredObject::term(int i) const {
    if (is_zero() || i > b) return {};
    return x.at(std::max(i, a));
}

AddMorphism FilteredObject::inclusion(int i) const {
    if (i <= a || (i <= b && !e.count(i))) return identity_morphism(*cat, term(i));
    if (i > b) return zero_morphism(*cat, {}, term(i - 1));
    return e.at(i);
}

AddMorphism FilteredObject::retraction(int i) const {
    if (i <= a || (i <= b && !r.count(i))) return identity_morphism(*cat, term(i));
    if (i > b) return zero_morphism(*cat, term(i - 1), {});
    return r.at(i);
}

FilteredObject filtered_zero(const Presentation& p) {
    FilteredObject z;
    z.cat = &p;
    return z;
}

void validate_filtered(const FilteredObject& x) {
    if (!x.cat) throw InputError("filtered object without a category");
    if (x.is_zero()) return;
    for (int i = x.a; i <= x.b; ++i)
        if (!x.x.count(i)) throw InputError("filtered object lacks X_" + level_text(i));
    for (int i = x.a + 1; i <= x.b; ++i) {
        if (!x.e.count(i) || !x.r.count(i)) throw InputError("filtered object lacks e_" + level_text(i));
        const AddMorphism& e = x.e.at(i);
        const AddMorphism& r = x.r.at(i);
        if (!(e.source() == x.x.at(i)) || !(e.target() == x.x.at(i - 1)) || !(r.source() == x.x.at(i - 1)) ||
            !(r.target() == x.x.at(i)))
            throw InputError("filtered object: e_" + level_text(i) + " has the wrong shape");
        if (!(compose(r, e) == identity_morphism(*x.cat, x.x.at(i))))
            throw InputError("filtered object: r_" + level_text(i) + " is not a retraction of e_" + level_text(i));
    }
}

bool same_filtered(const FilteredObject& x, const FilteredObject& y) {
    if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
    const int lo = std::min(x.a, y.a), hi = std::max(x.b, y.b);
    for (int i = lo; i <= hi + 1; ++i) {
        if (!(x.term(i) == y.term(i))) return false;
        if (!(x.inclusion(i) == y.inclusion(i))) return false;
    }
    return true;
}

AddMorphism FiltMorphism::component(int i) const {
    const auto& p = *source.cat;
    if (f.empty() || i > f.rbegin()->first) return zero_morphism(p, source.term(i), target.term(i));
    if (i < f.begin()->first) return f.begin()->second;
    return f.at(i);
}

std::pair<int, int> filt_range(const FilteredObject& x, const FilteredObject& y) {
    if (x.is_zero() && y.is_zero()) return {0, -1};
    if (x.is_zero()) return {y.a, y.b};
    if (y.is_zero()) return {x.a, x.b};
    return {std::min(x.a, y.a), std::max(x.b, y.b)};
}

bool is_filt_morphism(const FiltMorphism& f) {
    const auto [lo, hi] = filt_range(f.source, f.target);
    for (int i = lo; i <= hi; ++i) {
        const AddMorphism c = f.component(i);
        if (!(c.source() == f.source.term(i)) || !(c.target() == f.target.term(i))) return false;
    }
    for (int i = lo + 1; i <= hi + 1; ++i)
        if (!(compose(f.target.inclusion(i), f.component(i)) == compose(f.component(i - 1), f.source.inclusion(i))))
            return false;
    return true;
}

FiltMorphism filt_zero(const FilteredObject& x, const FilteredObject& y) {
    FiltMorphism z{x, y, {}};
    const auto [lo, hi] = filt_range(x, y);
    for (int i = lo; i <= hi; ++i) z.f[i] = zero_morphism(*x.cat, x.term(i), y.term(i));
    return z;
}

FiltMorphism filt_identity(const FilteredObject& x) {
    FiltMorphism id{x, x, {}};
    for (int i = x.a; i <= x.b; ++i) id.f[i] = identity_morphism(*x.cat, x.term(i));
    return id;
}

FiltMorphism filt_compose(const FiltMorphism& g, const FiltMorphism& f) {
    FiltMorphism h{f.source, g.target, {}};
    const auto [lo1, hi1] = filt_range(f.source, f.target);
    const auto [lo2, hi2] = filt_range(g.source, g.target);
    const int lo = std::min(lo1, lo2), hi = std::max(hi1, hi2);
    for (int i = lo; i <= hi; ++i) h.f[i] = compose(g.component(i), f.component(i));
    return h;
}

bool filt_equal(const FiltMorphism& f, const FiltMorphism& g) {
    const auto [lo1, hi1] = filt_range(f.source, f.target);
    const auto [lo2, hi2] = filt_range(g.source, g.target);
    for (int i = std::min(lo1, lo2); i <= std::max(hi1, hi2); ++i)
        if (!(f.component(i) == g.component(i))) return false;
    return true;
}

FilteredObject filt_sum(const FilteredObject& x, const FilteredObject& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    FilteredObject s = filtered_zero(*x.cat);
    s.a = std::min(x.a, y.a);
    s.b = std::max(x.b, y.b);
    for (int i = s.a; i <= s.b; ++i) s.x[i] = concat(x.term(i), y.term(i));
    for (int i = s.a + 1; i <= s.b; ++i) {
        s.e[i] = direct_sum(x.inclusion(i), y.inclusion(i));
        s.r[i] = direct_sum(x.retraction(i), y.retraction(i));
    }
    return s;
}

FilteredObject s_shift(const FilteredObject& x, int n) {
    if (x.is_zero()) return x;
    FilteredObject s = filtered_zero(*x.cat);
    s.a = x.a + n;
    s.b = x.b + n;
    for (const auto& [i, t] : x.x) s.x[i + n] = t;
    for (const auto& [i, m] : x.e) s.e[i + n] = m;
    for (const auto& [i, m] : x.r) s.r[i + n] = m;
    return s;
}

FiltMorphism s_shift(const FiltMorphism& f, int n) {
    FiltMorphism s{s_shift(f.source, n), s_shift(f.target, n), {}};
    for (const auto& [i, m] : f.f) s.f[i + n] = m;
    return s;
}

FilteredObject j_embed(const Presentation& p, const AddObject& a) {
    FilteredObject j = filtered_zero(p);
    if (a.empty()) return j;
    j.a = j.b = 0;
    j.x[0] = a;
    return j;
}

FiltMorphism j_map(const AddMorphism& f) {
    FiltMorphism j{j_embed(f.cat(), f.source()), j_embed(f.cat(), f.target()), {}};
    j.f[0] = f;
    return j;
}

FiltMorphism alpha(const FilteredObject& x) {
    FiltMorphism al{x, s_shift(x, 1), {}};
    if (x.is_zero()) return al;
    for (int i = x.a; i <= x.b + 1; ++i) al.f[i] = x.inclusion(i);
    return al;
}

bool in_le(const FilteredObject& x, int n) { return x.is_zero() || x.b <= n; }

bool in_ge(const FilteredObject& x, int n) {
    if (x.is_zero()) return true;
    if (n > x.b) return false;
    for (int i = x.a + 1; i <= n; ++i)
        if (!(x.term(i) == x.term(i - 1)) || !(x.inclusion(i) == identity_morphism(*x.cat, x.term(i)))) return false;
    return true;
}

FiltHomSpace::FiltHomSpace(const FilteredObject& x, const FilteredObject& y) : x_(x), y_(y) {
    const auto& p = *x.cat;
    const Field& fld = p.field();
    std::tie(lo_, hi_) = filt_range(x, y);
    if (hi_ < lo_) {
        kernel_ = Matrix(fld, 0, 0);
        return;
    }
    BlockSystem sys(fld);
    std::map<int, std::size_t> unk;
    for (int i = lo_; i <= hi_; ++i) unk[i] = sys.add_unknown(hom_dim(p, x.term(i), y.term(i)));
    for (int i = lo_ + 1; i <= hi_; ++i) {
        const std::size_t eq = sys.add_equation(hom_dim(p, x.term(i), y.term(i - 1)));
        sys.add(eq, unk[i], post_compose_matrix(y.inclusion(i), x.term(i)));
        sys.add(eq, unk[i - 1], pre_compose_matrix(x.inclusion(i), y.term(i - 1)).scaled(-fld.one()));
    }
    kernel_ = sys.kernel();
    for (std::size_t c = 0; c < kernel_.cols(); ++c) {
        const Vector v = kernel_.column_vector(c);
        FiltMorphism m{x, y, {}};
        for (int i = lo_; i <= hi_; ++i) m.f[i] = from_coords(p, x.term(i), y.term(i), sys.part(v, unk[i]));
        basis_.push_back(std::move(m));
    }
}

Vector FiltHomSpace::coords(const FiltMorphism& f) const {
    Vector v;
    for (int i = lo_; i <= hi_; ++i) {
        const AddMorphism c = f.component(i);
        v.insert(v.end(), c.coords().begin(), c.coords().end());
    }
    if (basis_.empty()) {
        for (const auto& s : v)
            if (!s.is_zero()) throw CheckFailure("FiltHomSpace::coords: not a filtered morphism");
        return {};
    }
    auto c = solve(kernel_, v);
    if (!c) throw CheckFailure("FiltHomSpace::coords: not a filtered morphism");
    return *c;
}

SplitDecomposition split_decompose(const FilteredObject& x) {
    const auto& p = *x.cat;
    SplitDecomposition out;
    out.a = filtered_zero(p);
    out.b = filtered_zero(p);
    if (x.is_zero()) {
        out.sum = out.a;
        out.to_x = filt_zero(out.sum, x);
        out.from_x = filt_zero(x, out.sum);
        out.oplus_shape = out.verified = true;
        return out;
    }
    const AddObject a1 = x.term(1);
    if (!a1.empty()) {
        out.a.a = std::max(1, x.a);
        out.a.b = x.b;
        for (int i = out.a.a; i <= x.b; ++i) out.a.x[i] = x.term(i);
        for (int i = out.a.a + 1; i <= x.b; ++i) {
            out.a.e[i] = x.inclusion(i);
            out.a.r[i] = x.retraction(i);
        }
    }
    // phi_i : A_1 ⊕ B_i → X_i and its inverse psi_i, built downward from i = 1
    std::map<int, AddObject> bterm;
    std::map<int, AddMorphism> phi, psi;
    bterm[1] = {};
    phi[1] = identity_morphism(p, a1);
    psi[1] = identity_morphism(p, a1);
    for (int i = 0; i >= x.a; --i) {
        const IdempotentSplitting y = complement(x, i);
        const AddObject prev = concat(a1, bterm[i + 1]);
        bterm[i] = concat(bterm[i + 1], y.image);
        const AddObject cur = concat(a1, bterm[i]);
        AddMorphism f = zero_morphism(p, cur, x.term(i));
        AddMorphism g = zero_morphism(p, x.term(i), cur);
        const auto rows_x = iota_positions(0, x.term(i).size());
        place_morphism(f, compose(x.inclusion(i + 1), phi[i + 1]), rows_x, iota_positions(0, prev.size()));
        place_morphism(f, y.inclusion, rows_x, iota_positions(prev.size(), y.image.size()));
        place_morphism(g, compose(psi[i + 1], x.retraction(i + 1)), iota_positions(0, prev.size()), rows_x);
        place_morphism(g, y.projection, iota_positions(prev.size(), y.image.size()), rows_x);
        phi[i] = f;
        psi[i] = g;
    }
    int top = 0;
    while (top >= x.a && bterm[top].empty()) --top;
    if (top >= x.a) {
        out.b.a = x.a;
        out.b.b = top;
        for (int i = x.a; i <= top; ++i) out.b.x[i] = bterm[i];
        for (int i = x.a + 1; i <= top; ++i) {
            const auto n = bterm[i].size();
            out.b.e[i] = selection(p, bterm[i], bterm[i - 1], iota_positions(0, n), iota_positions(0, n));
            out.b.r[i] = selection(p, bterm[i - 1], bterm[i], iota_positions(0, n), iota_positions(0, n));
        }
    }
    out.sum = filt_sum(out.a, out.b);
    out.to_x = FiltMorphism{out.sum, x, {}};
    out.from_x = FiltMorphism{x, out.sum, {}};
    const int lo = std::min(x.a, 1), hi = std::max(x.b, 1);
    for (int i = lo; i <= hi; ++i) {
        if (i >= 1) {
            out.to_x.f[i] = identity_morphism(p, x.term(i));
            out.from_x.f[i] = identity_morphism(p, x.term(i));
        } else {
            out.to_x.f[i] = phi.count(i) ? phi[i] : phi[x.a];
            out.from_x.f[i] = psi.count(i) ? psi[i] : psi[x.a];
        }
    }
    auto fail = [&](const std::string& s) { out.failures.push_back(s); };
    try {
        validate_filtered(out.a);
        validate_filtered(out.b);
    } catch (const InputError& e) {
        fail(e.what());
    }
    if (!in_ge(out.a, 1)) fail("A is not in F(>=1)");
    if (!in_le(out.b, 0)) fail("B is not in F(<=0)");
    if (!is_filt_morphism(out.to_x) || !is_filt_morphism(out.from_x)) fail("decomposition maps are not filtered");
    if (!filt_equal(filt_compose(out.from_x, out.to_x), filt_identity(out.sum)) ||
        !filt_equal(filt_compose(out.to_x, out.from_x), filt_identity(x)))
        fail("decomposition maps are not inverse");
    out.oplus_shape = true;
    for (int i = lo; i < hi; ++i)
        if (!(compose(out.from_x.component(i), compose(x.inclusion(i + 1), out.to_x.component(i + 1))) ==
              out.sum.inclusion(i + 1)))
            out.oplus_shape = false;
    if (!out.oplus_shape) fail("e is not block diagonal in the decomposition");
    out.verified = out.failures.empty();
    return out;
}

FiltHomReport filt_hom_report(const FilteredObject& x, const FilteredObject& y) {
    if (!in_ge(x, 1)) throw InputError("filt_hom_report: X is not in F(>=1)");
    if (!in_le(y, 0)) throw InputError("filt_hom_report: Y is not in F(<=0)");
    FiltHomReport r;
    r.hom_xy = FiltHomSpace(x, y).dim();
    const FiltHomSpace yx(y, x);
    const FilteredObject sinv = s_shift(x, -1), sy = s_shift(y, 1);
    const FiltHomSpace y_sinv(y, sinv), sy_x(sy, x);
    r.hom_yx = yx.dim();
    r.hom_y_sinv_x = y_sinv.dim();
    r.hom_sy_x = sy_x.dim();
    const Field& fld = x.cat->field();
    const FiltMorphism al_x = alpha(sinv);
    Matrix post(fld, yx.dim(), y_sinv.dim());
    for (std::size_t k = 0; k < y_sinv.dim(); ++k) {
        FiltMorphism m = filt_compose(al_x, y_sinv.basis()[k]);
        m.target = x;
        post.set_column(k, yx.coords(m));
    }
    const FiltMorphism al_y = alpha(y);
    Matrix pre(fld, yx.dim(), sy_x.dim());
    for (std::size_t k = 0; k < sy_x.dim(); ++k) {
        FiltMorphism m = filt_compose(sy_x.basis()[k], al_y);
        pre.set_column(k, yx.coords(m));
    }
    r.rank_alpha_post = yx.dim() == 0 || y_sinv.dim() == 0 ? 0 : rank(post);
    r.rank_alpha_pre = yx.dim() == 0 || sy_x.dim() == 0 ? 0 : rank(pre);
    return r;
}

int FaCategory::index(int s, int n) const {
    if (n < lo || n > hi) throw InputError("filtration level " + std::to_string(n) + " outside the F𝒜 window");
    return s * (hi - lo + 1) + (n - lo);
}

int FaCategory::base_object(int k) const { return k / (hi - lo + 1); }

int FaCategory::level(int k) const { return lo + k % (hi - lo + 1); }

FaCategory fa_category(const Presentation& p, int lo, int hi) {
    if (hi < lo) throw InputError("fa_category: empty level window");
    FaCategory c;
    c.base = &p;
    c.lo = lo;
    c.hi = hi;
    c.fa = std::make_shared<Presentation>(p.field());
    Presentation& q = *c.fa;
    const int n = static_cast<int>(p.size());
    for (int s = 0; s < n; ++s)
        for (int l = lo; l <= hi; ++l) q.add_object(p.object(s).id + "#" + std::to_string(l), p.degree(s));
    auto label = [&](int s, int t, std::size_t x, int l, int m) {
        const std::string& base = p.basis(s, t)[x];
        if (s == t && l == m && p.identity_index(s) == x) return base + "#" + std::to_string(l);
        return base + "#" + std::to_string(l) + "#" + std::to_string(m);
    };
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            for (int l = lo; l <= hi; ++l)
                for (int m = l; m <= hi; ++m) {
                    std::vector<std::string> names;
                    for (std::size_t x = 0; x < p.dim(s, t); ++x) names.push_back(label(s, t, x, l, m));
                    q.set_basis(c.index(s, l), c.index(t, m), names);
                }
    q.finalize();
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            for (int u = 0; u < n; ++u)
                for (std::size_t x = 0; x < p.dim(t, u); ++x)
                    for (std::size_t y = 0; y < p.dim(s, t); ++y) {
                        Vector z(p.dim(s, u), p.field().zero());
                        for (std::size_t k = 0; k < z.size(); ++k) z[k] = p.product(s, t, u, x, y, k);
                        for (int l = lo; l <= hi; ++l)
                            for (int m = l; m <= hi; ++m)
                                for (int k2 = m; k2 <= hi; ++k2)
                                    q.set_product(label(t, u, x, m, k2), label(s, t, y, l, m), z);
                    }
    return c;
}

FilteredObject realize(const FaCategory& c, const AddObject& x) {
    const Presentation& p = *c.base;
    FilteredObject out = filtered_zero(p);
    if (x.empty()) return out;
    std::vector<int> lv;
    for (int k : x.summands) lv.push_back(c.level(k));
    out.a = *std::min_element(lv.begin(), lv.end());
    out.b = *std::max_element(lv.begin(), lv.end());
    std::map<int, std::vector<std::size_t>> pos;
    for (int i = out.a; i <= out.b; ++i) {
        AddObject t;
        for (std::size_t k = 0; k < x.size(); ++k)
            if (lv[k] >= i) {
                pos[i].push_back(k);
                t.summands.push_back(c.base_object(x[k]));
            }
        out.x[i] = t;
    }
    for (int i = out.a + 1; i <= out.b; ++i) {
        std::vector<std::size_t> rows, cols;
        const auto& small = pos[i];
        const auto& big = pos[i - 1];
        for (std::size_t k = 0; k < small.size(); ++k) {
            cols.push_back(k);
            rows.push_back(static_cast<std::size_t>(std::find(big.begin(), big.end(), small[k]) - big.begin()));
        }
        out.e[i] = selection(p, out.x[i], out.x[i - 1], rows, cols);
        out.r[i] = selection(p, out.x[i - 1], out.x[i], cols, rows);
    }
    return out;
}

FiltMorphism realize(const FaCategory& c, const AddMorphism& f) {
    const Presentation& p = *c.base;
    FiltMorphism out{realize(c, f.source()), realize(c, f.target()), {}};
    const auto [lo, hi] = filt_range(out.source, out.target);
    auto positions = [&](const AddObject& x, int i) {
        std::vector<std::size_t> v;
        for (std::size_t k = 0; k < x.size(); ++k)
            if (c.level(x[k]) >= i) v.push_back(k);
        return v;
    };
    for (int i = lo; i <= hi; ++i) {
        const auto cols = positions(f.source(), i), rows = positions(f.target(), i);
        AddMorphism m = zero_morphism(p, out.source.term(i), out.target.term(i));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t q = 0; q < cols.size(); ++q)
                for (std::size_t k = 0; k < f.block_dim(rows[r], cols[q]); ++k) m.coord(r, q, k) = f.coord(rows[r], cols[q], k);
        out.f[i] = m;
    }
    return out;
}

FaDecomposition fa_decompose(const FaCategory& c, const FilteredObject& x) {
    const Presentation& p = *c.base;
    FaDecomposition out;
    if (x.is_zero()) {
        out.iso = filt_zero(realize(c, AddObject{}), x);
        return out;
    }
    std::map<int, AddMorphism> phi;
    AddObject acc;
    for (int i = x.b; i >= x.a; --i) {
        const IdempotentSplitting y = complement(x, i);
        for (int s : y.image.summands) out.object.summands.push_back(c.index(s, i));
        const AddObject prev = acc;
        acc = concat(acc, y.image);
        AddMorphism f = zero_morphism(p, acc, x.term(i));
        const auto rows_x = iota_positions(0, x.term(i).size());
        if (i < x.b) place_morphism(f, compose(x.inclusion(i + 1), phi[i + 1]), rows_x, iota_positions(0, prev.size()));
        place_morphism(f, y.inclusion, rows_x, iota_positions(prev.size(), y.image.size()));
        phi[i] = f;
    }
    out.iso = FiltMorphism{realize(c, out.object), x, phi};
    if (!is_filt_morphism(out.iso)) throw std::logic_error("fa_decompose: comparison is not filtered");
    for (const auto& [i, m] : phi)
        if (!invert(m)) throw std::logic_error("fa_decompose: comparison is not invertible");
    return out;
}

FiltTriangle filt_triangle(const FaCategory& c, const Complex& x) {
    FiltTriangle out;
    std::map<int, std::vector<std::size_t>> apos, bpos;
    for (int i : x.degrees())
        for (std::size_t k = 0; k < x.term(i).size(); ++k) (c.level(x.term(i)[k]) >= 1 ? apos : bpos)[i].push_back(k);
    out.lower_left_zero = true;
    for (int i : x.degrees())
        if (!x.term(i + 1).empty() && !restrict_morphism(x.d(i), bpos[i + 1], apos[i]).is_zero())
            out.lower_left_zero = false;
    if (!out.lower_left_zero) return out;
    const SplitTriangle st = split_triangle(x, apos);
    out.a = st.sub;
    out.b = st.quotient;
    out.f = st.inclusion;
    out.g = st.projection;
    out.h = st.connecting;
    out.certificate = certify_triangle(out.f, out.g, out.h);
    const Complex cm = minimal_model(cone(out.f).z, false).minimal;
    const Complex bm = minimal_model(out.b, false).minimal;
    out.cone_matches = cm.degrees() == bm.degrees();
    for (int i : cm.degrees())
        if (!same_multiset(cm.term(i), bm.term(i))) out.cone_matches = false;
    out.a_in_ge1 = out.b_in_le0 = out.b_in_heart = true;
    for (int i : out.a.degrees())
        for (int k : out.a.term(i).summands)
            if (c.level(k) < 1) out.a_in_ge1 = false;
    for (int i : out.b.degrees())
        for (int k : out.b.term(i).summands) {
            if (c.level(k) > 0) out.b_in_le0 = false;
            if (c.level(k) != 0) out.b_in_heart = false;
        }
    return out;
}

FilteredObject random_filtered(const Presentation& p, std::mt19937_64& rng, int lo, int hi, int max_step) {
    std::uniform_int_distribution<int> lvl(lo, hi), obj(0, static_cast<int>(p.size()) - 1), step(0, max_step),
        top(1, std::max(1, max_step));
    int a = lvl(rng), b = lvl(rng);
    if (a > b) std::swap(a, b);
    FilteredObject x = filtered_zero(p);
    x.a = a;
    x.b = b;
    AddObject cur;
    for (int k = top(rng); k > 0; --k) cur.summands.push_back(obj(rng));
    x.x[b] = cur;
    for (int i = b; i > a; --i) {
        AddObject big = cur;
        for (int k = step(rng); k > 0; --k) big.summands.push_back(obj(rng));
        const AddMorphism g = random_automorphism(p, big, rng);
        const AddMorphism gi = *invert(g);
        const auto n = cur.size();
        const AddMorphism inc = selection(p, cur, big, iota_positions(0, n), iota_positions(0, n));
        const AddMorphism proj = selection(p, big, cur, iota_positions(0, n), iota_positions(0, n));
        x.e[i] = compose(g, inc);
        x.r[i] = compose(proj, gi);
        x.x[i - 1] = big;
        cur = big;
    }
    return x;
}

FilteredSuiteReport filtered_suite(const Presentation& p, std::uint64_t seed, int samples) {
    FilteredSuiteReport rep;
    std::mt19937_64 rng(seed);
    const FaCategory fa = fa_category(p, -2, 2);
    const FaCategory small = fa_category(p, -1, 1);
    auto fail = [&](const std::string& s) { rep.failures.push_back(s); };
    FilteredObject prev = filtered_zero(p);
    for (int k = 0; k < samples; ++k) {
        const std::string tag = "sample " + std::to_string(k) + ": ";
        const FilteredObject x = random_filtered(p, rng);
        validate_filtered(x);
        const SplitDecomposition d = split_decompose(x);
        ++rep.decompositions;
        for (const auto& f : d.failures) fail(tag + f);
        ++rep.hom_reports;
        if (!filt_hom_report(d.a, d.b).pass()) fail(tag + "Hom report fails for the decomposition pieces");
        const FilteredObject sa = s_shift(d.a, k % 3), sb = s_shift(d.b, -(k % 3));
        if (!filt_hom_report(sa, sb).pass()) fail(tag + "Hom report fails for shifted pieces");
        ++rep.hom_reports;
        ++rep.alpha_checks;
        if (!filt_equal(alpha(x), s_shift(alpha(s_shift(x, -1)), 1))) fail(tag + "alpha_X differs from s(alpha_{s^-1 X})");
        ++rep.shift_checks;
        for (int n : {-1, 1, 2})
            if (!in_le(s_shift(d.b, n), n) || !in_ge(s_shift(d.a, n), n + 1)) fail(tag + "s^n moves membership wrongly");
        ++rep.fa_checks;
        const FaDecomposition fx = fa_decompose(fa, x);
        const FaDecomposition fp = fa_decompose(fa, prev);
        if (FiltHomSpace(x, prev).dim() != hom_dim(*fa.fa, fx.object, fp.object) ||
            FiltHomSpace(prev, x).dim() != hom_dim(*fa.fa, fp.object, fx.object))
            fail(tag + "filtered Hom differs from the F𝒜 presentation");
        prev = x;
    }
    for (int s = 0; s < static_cast<int>(p.size()); ++s)
        for (int t = 0; t < static_cast<int>(p.size()); ++t) {
            ++rep.j_checks;
            const AddObject as{{s}}, at{{t}};
            if (FiltHomSpace(j_embed(p, as), j_embed(p, at)).dim() != p.dim(s, t))
                fail("j is not full on (" + p.object(s).id + "," + p.object(t).id + ")");
            for (int u = 0; u < static_cast<int>(p.size()); ++u) {
                const AddObject au{{u}};
                for (const auto& f : hom_basis(p, as, at))
                    for (const auto& g : hom_basis(p, at, au))
                        if (!filt_equal(j_map(compose(g, f)), filt_compose(j_map(g), j_map(f))))
                            fail("j does not preserve composition");
            }
            const FilteredObject jz = j_embed(p, AddObject{{s, t}});
            if (!in_le(jz, 0) || !in_ge(jz, 0) || !same_filtered(j_embed(p, jz.term(0)), jz))
                fail("heart object is not a j-image");
        }
    RandomComplexParams rp;
    rp.lo = -1;
    rp.amplitude = 3;
    rp.max_multiplicity = 1;
    for (int k = 0; k < std::max(1, samples / 5); ++k) {
        const std::string tag = "triangle " + std::to_string(k) + ": ";
        const Complex x = random_complex(*small.fa, rng, rp);
        ++rep.triangles;
        if (!filt_triangle(small, x).pass()) fail(tag + "filtered triangle failed");
        std::map<int, std::vector<std::size_t>> ge0;
        for (int i : x.degrees())
            for (std::size_t q = 0; q < x.term(i).size(); ++q)
                if (small.level(x.term(i)[q]) >= 0) ge0[i].push_back(q);
        const Complex x0 = split_triangle(x, ge0).sub;
        ++rep.triangles;
        const FiltTriangle t0 = filt_triangle(small, x0);
        if (!t0.pass() || !t0.b_in_heart) fail(tag + "F(>=0) input did not give B in the heart");
    }
    return rep;
}

} // namespace koszulkit
