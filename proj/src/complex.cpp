#include "koszulkit/complex.hpp"

#include <algorithm>
#include <numeric>

namespace koszulkit {

namespace {

const AddObject& empty_object() {
    static const AddObject e;
    return e;
}

std::vector<std::size_t> positions(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
}

std::vector<std::size_t> without(std::size_t n, std::size_t skip) {
    std::vector<std::size_t> v;
    for (std::size_t k = 0; k < n; ++k)
        if (k != skip) v.push_back(k);
    return v;
}

std::optional<std::size_t> layout_slot(const GradedLayout& l, int degree) {
    auto it = std::lower_bound(l.degrees.begin(), l.degrees.end(), degree);
    if (it == l.degrees.end() || *it != degree) return std::nullopt;
    return static_cast<std::size_t>(it - l.degrees.begin());
}

} // namespace

const AddObject& Complex::term(int i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? empty_object() : it->second;
}

AddMorphism Complex::d(int i) const {
    auto it = diff_.find(i);
    if (it != diff_.end()) return it->second;
    return AddMorphism(*cat_, term(i), term(i + 1));
}

void Complex::set_term(int i, AddObject x) {
    diff_.erase(i - 1);
    diff_.erase(i);
    if (x.empty())
        terms_.erase(i);
    else
        terms_[i] = std::move(x);
}

void Complex::set_d(int i, AddMorphism m) {
    if (m.source() != term(i) || m.target() != term(i + 1))
        throw InputError("differential d^" + std::to_string(i) + " does not match the terms");
    if (m.is_zero())
        diff_.erase(i);
    else
        diff_[i] = std::move(m);
}

std::vector<int> Complex::degrees() const {
    std::vector<int> v;
    for (const auto& [i, x] : terms_) v.push_back(i);
    return v;
}

int Complex::lo() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int Complex::hi() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

std::size_t Complex::total_rank() const {
    std::size_t n = 0;
    for (const auto& [i, x] : terms_) n += x.size();
    return n;
}

void Complex::check() const {
    for (const auto& [i, m] : diff_) {
        if (term(i + 2).empty()) continue;
        if (!compose(d(i + 1), m).is_zero())
            throw CheckFailure("d^" + std::to_string(i + 1) + " ∘ d^" + std::to_string(i) + " != 0");
    }
}

bool operator==(const Complex& a, const Complex& b) {
    if (a.terms_ != b.terms_) return false;
    for (const auto& [i, x] : a.terms_)
        if (!(a.d(i) == b.d(i))) return false;
    return true;
}

Complex concentrated(const Presentation& p, const AddObject& x, int i) {
    Complex c(p);
    c.set_term(i, x);
    return c;
}

AddMorphism ChainMap::at(int i) const {
    auto it = comp.find(i);
    if (it != comp.end()) return it->second;
    return AddMorphism(source.cat(), source.term(i), target.term(i));
}

void ChainMap::set(int i, AddMorphism m) {
    if (m.source() != source.term(i) || m.target() != target.term(i))
        throw InputError("chain map component " + std::to_string(i) + " does not match the terms");
    if (m.is_zero())
        comp.erase(i);
    else
        comp[i] = std::move(m);
}

AddMorphism Homotopy::at(int i) const {
    auto it = comp.find(i);
    if (it != comp.end()) return it->second;
    return AddMorphism(source.cat(), source.term(i), target.term(i - 1));
}

ChainMap zero_map(const Complex& x, const Complex& y) { return ChainMap{x, y, {}}; }

ChainMap identity_map(const Complex& x) {
    ChainMap f{x, x, {}};
    for (int i : x.degrees()) f.set(i, identity_morphism(x.cat(), x.term(i)));
    return f;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    ChainMap r{f.source, g.target, {}};
    for (const auto& [i, fi] : f.comp) {
        auto it = g.comp.find(i);
        if (it == g.comp.end()) continue;
        r.set(i, compose(it->second, fi));
    }
    return r;
}

ChainMap add(const ChainMap& a, const ChainMap& b) {
    ChainMap r{a.source, a.target, {}};
    for (int i : a.source.degrees()) r.set(i, a.at(i) + b.at(i));
    return r;
}

ChainMap subtract(const ChainMap& a, const ChainMap& b) {
    ChainMap r{a.source, a.target, {}};
    for (int i : a.source.degrees()) r.set(i, a.at(i) - b.at(i));
    return r;
}

ChainMap scale(const ChainMap& a, const Scalar& s) {
    ChainMap r{a.source, a.target, {}};
    for (const auto& [i, m] : a.comp) r.set(i, m.scaled(s));
    return r;
}

bool is_chain_map(const ChainMap& f) {
    for (int i : f.source.degrees()) {
        const AddMorphism lhs = compose(f.target.d(i), f.at(i));
        const AddMorphism rhs = compose(f.at(i + 1), f.source.d(i));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

ChainMap boundary_of(const Homotopy& h) {
    ChainMap r{h.source, h.target, {}};
    for (int i : h.source.degrees()) {
        AddMorphism m = compose(h.target.d(i - 1), h.at(i)) + compose(h.at(i + 1), h.source.d(i));
        r.set(i, std::move(m));
    }
    return r;
}

bool equal_on_the_nose(const ChainMap& a, const ChainMap& b) {
    for (int i : a.source.degrees())
        if (!(a.at(i) == b.at(i))) return false;
    return true;
}

Complex shift(const Complex& x, int n) {
    Complex s(x.cat());
    for (int i : x.degrees()) s.set_term(i - n, x.term(i));
    const bool odd = (n % 2) != 0;
    for (int i : x.degrees()) {
        if (x.term(i + 1).empty()) continue;
        AddMorphism m = x.d(i);
        s.set_d(i - n, odd ? -m : m);
    }
    return s;
}

ChainMap shift(const ChainMap& f, int n) {
    ChainMap r{shift(f.source, n), shift(f.target, n), {}};
    for (const auto& [i, m] : f.comp) r.set(i - n, m);
    return r;
}

DirectSum direct_sum(const std::vector<Complex>& parts) {
    if (parts.empty()) throw std::logic_error("direct_sum of no complexes");
    const auto& p = parts.front().cat();
    std::set<int> degs;
    for (const auto& c : parts)
        for (int i : c.degrees()) degs.insert(i);
    Complex s(p);
    std::map<int, std::vector<std::size_t>> offs;
    for (int i : degs) {
        AddObject t;
        for (const auto& c : parts) {
            offs[i].push_back(t.size());
            t = concat(t, c.term(i));
        }
        s.set_term(i, t);
    }
    for (int i : degs) {
        if (s.term(i + 1).empty()) continue;
        AddMorphism m(p, s.term(i), s.term(i + 1));
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const AddMorphism dk = parts[k].d(i);
            std::vector<std::size_t> rows(dk.target().size()), cols(dk.source().size());
            std::iota(rows.begin(), rows.end(), offs[i + 1][k]);
            std::iota(cols.begin(), cols.end(), offs[i][k]);
            place_morphism(m, dk, rows, cols);
        }
        s.set_d(i, std::move(m));
    }
    DirectSum out{s, {}, {}};
    for (std::size_t k = 0; k < parts.size(); ++k) {
        ChainMap inc{parts[k], s, {}}, pr{s, parts[k], {}};
        for (int i : parts[k].degrees()) {
            const auto& t = parts[k].term(i);
            std::vector<std::size_t> rows(t.size());
            std::iota(rows.begin(), rows.end(), offs[i][k]);
            AddMorphism a(p, t, s.term(i)), b(p, s.term(i), t);
            place_morphism(a, identity_morphism(p, t), rows, positions(t.size()));
            place_morphism(b, identity_morphism(p, t), positions(t.size()), rows);
            inc.set(i, std::move(a));
            pr.set(i, std::move(b));
        }
        out.inclusions.push_back(std::move(inc));
        out.projections.push_back(std::move(pr));
    }
    return out;
}

ChainMap block_map(const std::vector<Complex>& src_parts, const std::vector<Complex>& tgt_parts,
                   const std::vector<std::vector<std::optional<ChainMap>>>& blocks) {
    const DirectSum s = direct_sum(src_parts), t = direct_sum(tgt_parts);
    ChainMap r = zero_map(s.sum, t.sum);
    for (std::size_t a = 0; a < tgt_parts.size(); ++a)
        for (std::size_t b = 0; b < src_parts.size(); ++b) {
            if (!blocks[a][b]) continue;
            r = add(r, compose(t.inclusions[a], compose(*blocks[a][b], s.projections[b])));
        }
    return r;
}

Cone cone(const ChainMap& f) {
    const auto& p = f.source.cat();
    const Complex& x = f.source;
    const Complex& y = f.target;
    std::set<int> degs;
    for (int i : x.degrees()) degs.insert(i - 1);
    for (int i : y.degrees()) degs.insert(i);
    Complex z(p);
    for (int i : degs) z.set_term(i, concat(x.term(i + 1), y.term(i)));
    for (int i : degs) {
        if (z.term(i + 1).empty()) continue;
        AddMorphism m(p, z.term(i), z.term(i + 1));
        const std::size_t nx0 = x.term(i + 1).size(), nx1 = x.term(i + 2).size();
        const std::size_t ny0 = y.term(i).size(), ny1 = y.term(i + 1).size();
        auto rng = [](std::size_t from, std::size_t n) {
            std::vector<std::size_t> v(n);
            std::iota(v.begin(), v.end(), from);
            return v;
        };
        place_morphism(m, -x.d(i + 1), rng(0, nx1), rng(0, nx0));
        place_morphism(m, f.at(i + 1), rng(nx1, ny1), rng(0, nx0));
        place_morphism(m, y.d(i), rng(nx1, ny1), rng(nx0, ny0));
        z.set_d(i, std::move(m));
    }
    const Complex x1 = shift(x, 1);
    ChainMap inc{y, z, {}}, pr{z, x1, {}};
    for (int i : degs) {
        const std::size_t nx = x.term(i + 1).size(), ny = y.term(i).size();
        std::vector<std::size_t> yr(ny), xr(nx);
        std::iota(yr.begin(), yr.end(), nx);
        std::iota(xr.begin(), xr.end(), std::size_t{0});
        if (ny) {
            AddMorphism a(p, y.term(i), z.term(i));
            place_morphism(a, identity_morphism(p, y.term(i)), yr, positions(ny));
            inc.set(i, std::move(a));
        }
        if (nx) {
            AddMorphism b(p, z.term(i), x1.term(i));
            place_morphism(b, identity_morphism(p, x.term(i + 1)), positions(nx), xr);
            pr.set(i, std::move(b));
        }
    }
    return {z, inc, pr};
}

Support support(const Complex& x) {
    Support s;
    for (int i : x.degrees())
        for (int k : x.term(i).summands) s.insert({i, x.cat().degree(k)});
    return s;
}

GradedLayout graded_layout(const Complex& x, const Complex& y, int delta) {
    GradedLayout l;
    l.delta = delta;
    for (int i : x.degrees()) {
        const auto& t = y.term(i + delta);
        if (t.empty()) continue;
        const std::size_t d = hom_dim(x.cat(), x.term(i), t);
        if (d == 0) continue;
        l.degrees.push_back(i);
        l.offsets.push_back(l.total);
        l.total += d;
    }
    return l;
}

Vector flatten(const std::map<int, AddMorphism>& family, const Complex& x, const Complex& y,
               const GradedLayout& layout) {
    Vector v = x.cat().field().zeros(layout.total);
    for (std::size_t k = 0; k < layout.degrees.size(); ++k) {
        auto it = family.find(layout.degrees[k]);
        if (it == family.end()) continue;
        const Vector& c = it->second.coords();
        if (it->second.source() != x.term(layout.degrees[k]) ||
            it->second.target() != y.term(layout.degrees[k] + layout.delta))
            throw InputError("family component does not match the graded layout");
        std::copy(c.begin(), c.end(), v.begin() + static_cast<std::ptrdiff_t>(layout.offsets[k]));
    }
    return v;
}

std::map<int, AddMorphism> unflatten(const Vector& v, const Complex& x, const Complex& y,
                                     const GradedLayout& layout) {
    std::map<int, AddMorphism> out;
    for (std::size_t k = 0; k < layout.degrees.size(); ++k) {
        const int i = layout.degrees[k];
        AddMorphism m(x.cat(), x.term(i), y.term(i + layout.delta));
        for (std::size_t c = 0; c < m.dim(); ++c) m.coords()[c] = v[layout.offsets[k] + c];
        if (!m.is_zero()) out.emplace(i, std::move(m));
    }
    return out;
}

Matrix chain_condition_matrix(const Complex& x, const Complex& y, const GradedLayout& l0,
                              const GradedLayout& l1) {
    const auto& p = x.cat();
    Matrix m(p.field(), l1.total, l0.total);
    for (std::size_t r = 0; r < l1.degrees.size(); ++r) {
        const int i = l1.degrees[r];
        if (auto c = layout_slot(l0, i))
            m.set_block(l1.offsets[r], l0.offsets[*c], post_compose_matrix(y.d(i), x.term(i)));
        if (auto c = layout_slot(l0, i + 1))
            m.set_block(l1.offsets[r], l0.offsets[*c],
                        pre_compose_matrix(x.d(i), y.term(i + 1)).scaled(-p.field().one()));
    }
    return m;
}

Matrix boundary_matrix(const Complex& x, const Complex& y, const GradedLayout& lm1, const GradedLayout& l0) {
    const auto& p = x.cat();
    Matrix m(p.field(), l0.total, lm1.total);
    for (std::size_t r = 0; r < l0.degrees.size(); ++r) {
        const int i = l0.degrees[r];
        if (auto c = layout_slot(lm1, i))
            m.set_block(l0.offsets[r], lm1.offsets[*c], post_compose_matrix(y.d(i - 1), x.term(i)));
        if (auto c = layout_slot(lm1, i + 1))
            m.set_block(l0.offsets[r], lm1.offsets[*c], pre_compose_matrix(x.d(i), y.term(i)));
    }
    return m;
}

Matrix postcompose_family_matrix(const ChainMap& f, const Complex& w) {
    const GradedLayout from = graded_layout(w, f.source, 0), to = graded_layout(w, f.target, 0);
    Matrix m(w.cat().field(), to.total, from.total);
    for (std::size_t c = 0; c < from.degrees.size(); ++c) {
        const int i = from.degrees[c];
        auto r = layout_slot(to, i);
        if (!r) continue;
        m.set_block(to.offsets[*r], from.offsets[c], post_compose_matrix(f.at(i), w.term(i)));
    }
    return m;
}

Matrix precompose_family_matrix(const ChainMap& f, const Complex& w) {
    const GradedLayout from = graded_layout(f.target, w, 0), to = graded_layout(f.source, w, 0);
    Matrix m(w.cat().field(), to.total, from.total);
    for (std::size_t c = 0; c < from.degrees.size(); ++c) {
        const int i = from.degrees[c];
        auto r = layout_slot(to, i);
        if (!r) continue;
        m.set_block(to.offsets[*r], from.offsets[c], pre_compose_matrix(f.at(i), w.term(i)));
    }
    return m;
}

std::size_t BlockSystem::add_unknown(std::size_t n) {
    unk_off_.push_back(unk_off_.back() + n);
    return unk_off_.size() - 2;
}

std::size_t BlockSystem::add_equation(std::size_t n) {
    eq_off_.push_back(eq_off_.back() + n);
    return eq_off_.size() - 2;
}

void BlockSystem::add(std::size_t eq, std::size_t unk, const Matrix& m) {
    if (m.rows() != eq_off_[eq + 1] - eq_off_[eq] || m.cols() != unk_off_[unk + 1] - unk_off_[unk])
        throw std::logic_error("BlockSystem: block shape mismatch");
    blocks_.emplace_back(eq, unk, m);
}

void BlockSystem::set_rhs(std::size_t eq, const Vector& v) {
    if (v.size() != eq_off_[eq + 1] - eq_off_[eq]) throw std::logic_error("BlockSystem: rhs shape mismatch");
    rhs_[eq] = v;
}

Matrix BlockSystem::matrix() const {
    Matrix m(field_, eq_off_.back(), unk_off_.back());
    for (const auto& [e, u, b] : blocks_) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                if (!b.at(r, c).is_zero()) m.at(eq_off_[e] + r, unk_off_[u] + c) += b.at(r, c);
    }
    return m;
}

Vector BlockSystem::rhs() const {
    Vector v = field_.zeros(eq_off_.back());
    for (const auto& [e, b] : rhs_)
        for (std::size_t k = 0; k < b.size(); ++k) v[eq_off_[e] + k] = b[k];
    return v;
}

std::optional<Vector> BlockSystem::solve() const { return koszulkit::solve(matrix(), rhs()); }

Matrix BlockSystem::kernel() const { return kernel_basis(matrix()); }

Vector BlockSystem::part(const Vector& x, std::size_t unk) const {
    return Vector(x.begin() + static_cast<std::ptrdiff_t>(unk_off_[unk]),
                  x.begin() + static_cast<std::ptrdiff_t>(unk_off_[unk + 1]));
}

Matrix BlockSystem::part_rows(const Matrix& k, std::size_t unk) const {
    return k.block(unk_off_[unk], 0, unk_off_[unk + 1] - unk_off_[unk], k.cols());
}

HomSpace::HomSpace(const Complex& x, const Complex& y)
    : x_(x), y_(y), lm1_(graded_layout(x, y, -1)), l0_(graded_layout(x, y, 0)), l1_(graded_layout(x, y, 1)) {
    const Field& f = x.cat().field();
    cmat_ = chain_condition_matrix(x_, y_, l0_, l1_);
    bmat_ = boundary_matrix(x_, y_, lm1_, l0_);
    const Matrix z = kernel_basis(cmat_);
    cycle_dim_ = z.cols();
    const Matrix b = bmat_.select_columns(independent_columns(bmat_));
    boundary_dim_ = b.cols();
    const auto piv = independent_columns(hstack(b, z));
    std::vector<std::size_t> q;
    for (auto c : piv)
        if (c >= b.cols()) q.push_back(c - b.cols());
    const Matrix qm = z.select_columns(q);
    const Matrix m = hstack(qm, b);
    const auto r = rref(hstack(m, Matrix::identity(f, l0_.total)));
    left_inverse_ = r.reduced.block(0, m.cols(), q.size(), l0_.total);
    for (std::size_t k = 0; k < q.size(); ++k)
        basis_.push_back(ChainMap{x_, y_, unflatten(qm.column_vector(k), x_, y_, l0_)});
}

Vector HomSpace::coords(const ChainMap& f) const {
    const Vector v = flatten(f.comp, x_, y_, l0_);
    const Vector c = cmat_ * v;
    for (const auto& s : c)
        if (!s.is_zero()) throw CheckFailure("HomSpace::coords: argument is not a chain map");
    return left_inverse_ * v;
}

ChainMap HomSpace::element(const Vector& c) const {
    if (c.size() != basis_.size()) throw InputError("HomSpace::element: wrong coordinate length");
    Vector v = x_.cat().field().zeros(l0_.total);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        const Vector b = flatten(basis_[k].comp, x_, y_, l0_);
        for (std::size_t t = 0; t < v.size(); ++t) v[t] += c[k] * b[t];
    }
    return ChainMap{x_, y_, unflatten(v, x_, y_, l0_)};
}

bool HomSpace::is_zero_class(const ChainMap& f) const {
    const Vector c = coords(f);
    return std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::optional<Homotopy> HomSpace::null_homotopy(const ChainMap& f) const {
    auto h = solve(bmat_, flatten(f.comp, x_, y_, l0_));
    if (!h) return std::nullopt;
    return Homotopy{x_, y_, unflatten(*h, x_, y_, lm1_)};
}

HomSpace hom_space(const Complex& x, const Complex& y, int k) { return HomSpace(x, k == 0 ? y : shift(y, k)); }

std::optional<Homotopy> is_null_homotopic(const ChainMap& f) {
    const GradedLayout lm1 = graded_layout(f.source, f.target, -1), l0 = graded_layout(f.source, f.target, 0);
    const Matrix b = boundary_matrix(f.source, f.target, lm1, l0);
    auto h = solve(b, flatten(f.comp, f.source, f.target, l0));
    if (!h) return std::nullopt;
    return Homotopy{f.source, f.target, unflatten(*h, f.source, f.target, lm1)};
}

bool homotopic(const ChainMap& a, const ChainMap& b) { return is_null_homotopic(subtract(a, b)).has_value(); }

EliminationStep eliminate(const Complex& x, int i, std::size_t a, std::size_t b) {
    const auto& p = x.cat();
    const AddMorphism di = x.d(i);
    const Scalar c = di.identity_coefficient(b, a);
    if (c.is_zero() || x.term(i)[a] != x.term(i + 1)[b]) throw std::logic_error("eliminate: block is not invertible");
    const Scalar cinv = c.inverse();
    const auto& xi = x.term(i);
    const auto& xj = x.term(i + 1);
    const auto dpos = without(xi.size(), a), epos = without(xj.size(), b);
    const std::vector<std::size_t> apos{a}, bpos{b};

    Complex r(p);
    for (int k : x.degrees()) {
        if (k == i)
            r.set_term(k, restrict_morphism(identity_morphism(p, xi), dpos, {}).target());
        else if (k == i + 1)
            r.set_term(k, restrict_morphism(identity_morphism(p, xj), epos, {}).target());
        else
            r.set_term(k, x.term(k));
    }
    const AddMorphism d_ea = restrict_morphism(di, epos, apos);
    const AddMorphism d_bd = restrict_morphism(di, bpos, dpos);
    for (int k : x.degrees()) {
        if (r.term(k).empty() || r.term(k + 1).empty()) continue;
        if (k == i - 1)
            r.set_d(k, restrict_morphism(x.d(k), dpos, positions(x.term(k).size())));
        else if (k == i)
            r.set_d(k, restrict_morphism(di, epos, dpos) - compose(d_ea, d_bd).scaled(cinv));
        else if (k == i + 1)
            r.set_d(k, restrict_morphism(x.d(k), positions(x.term(k + 1).size()), epos));
        else
            r.set_d(k, x.d(k));
    }

    ChainMap proj{x, r, {}}, inc{r, x, {}};
    for (int k : x.degrees()) {
        if (k == i) {
            if (!dpos.empty()) {
                proj.set(k, restrict_morphism(identity_morphism(p, xi), dpos, positions(xi.size())));
                AddMorphism m = restrict_morphism(identity_morphism(p, xi), positions(xi.size()), dpos);
                place_morphism(m, d_bd.scaled(-cinv), apos, positions(dpos.size()));
                inc.set(k, std::move(m));
            }
        } else if (k == i + 1) {
            if (!epos.empty()) {
                AddMorphism m = restrict_morphism(identity_morphism(p, xj), epos, positions(xj.size()));
                place_morphism(m, d_ea.scaled(-cinv), positions(epos.size()), bpos);
                proj.set(k, std::move(m));
                inc.set(k, restrict_morphism(identity_morphism(p, xj), positions(xj.size()), epos));
            }
        } else {
            proj.set(k, identity_morphism(p, x.term(k)));
            inc.set(k, identity_morphism(p, x.term(k)));
        }
    }
    return {r, proj, inc};
}

namespace {

struct Pivot {
    int degree;
    std::size_t a, b;
};

std::optional<Pivot> find_pivot(const Complex& x) {
    for (int i : x.degrees()) {
        const auto& t1 = x.term(i + 1);
        if (t1.empty()) continue;
        const AddMorphism d = x.d(i);
        const auto& t0 = x.term(i);
        for (std::size_t a = 0; a < t0.size(); ++a)
            for (std::size_t b = 0; b < t1.size(); ++b)
                if (t0[a] == t1[b] && !d.identity_coefficient(b, a).is_zero()) return Pivot{i, a, b};
    }
    return std::nullopt;
}

} // namespace

MinimalModel minimal_model(const Complex& x, bool with_maps) {
    MinimalModel out{x, std::nullopt, std::nullopt};
    if (with_maps) {
        out.to_minimal = identity_map(x);
        out.from_minimal = identity_map(x);
    }
    while (auto pv = find_pivot(out.minimal)) {
        EliminationStep st = eliminate(out.minimal, pv->degree, pv->a, pv->b);
        if (with_maps) {
            out.to_minimal = compose(st.projection, *out.to_minimal);
            out.from_minimal = compose(*out.from_minimal, st.inclusion);
        }
        out.minimal = std::move(st.reduced);
    }
    return out;
}

bool is_minimal(const Complex& x) { return !find_pivot(x).has_value(); }

bool is_contractible(const Complex& x) { return minimal_model(x, false).minimal.empty(); }

bool is_quasi_iso(const ChainMap& f) { return is_contractible(cone(f).z); }

std::optional<ChainMap> homotopy_inverse(const ChainMap& f) {
    const Complex& x = f.source;
    const Complex& y = f.target;
    const Field& fld = x.cat().field();
    BlockSystem sys(fld);
    const GradedLayout g0 = graded_layout(y, x, 0), g1 = graded_layout(y, x, 1);
    const GradedLayout hm1 = graded_layout(y, y, -1), h0 = graded_layout(y, y, 0);
    const auto ug = sys.add_unknown(g0.total);
    const auto uh = sys.add_unknown(hm1.total);
    const auto e_chain = sys.add_equation(g1.total);
    const auto e_inv = sys.add_equation(h0.total);
    sys.add(e_chain, ug, chain_condition_matrix(y, x, g0, g1));
    sys.add(e_inv, ug, postcompose_family_matrix(f, y));
    sys.add(e_inv, uh, boundary_matrix(y, y, hm1, h0).scaled(-fld.one()));
    sys.set_rhs(e_inv, flatten(identity_map(y).comp, y, y, h0));
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    ChainMap g{y, x, unflatten(sys.part(*sol, ug), y, x, g0)};
    if (!homotopic(compose(g, f), identity_map(x))) return std::nullopt;
    return g;
}

Complex random_complex(const Presentation& p, std::mt19937_64& rng, const RandomComplexParams& params) {
    Complex x(p);
    std::uniform_int_distribution<int> mult(0, params.max_multiplicity);
    for (int i = params.lo; i < params.lo + params.amplitude; ++i) {
        AddObject t;
        for (std::size_t s = 0; s < p.size(); ++s) {
            const int m = mult(rng);
            for (int k = 0; k < m; ++k) t.summands.push_back(static_cast<int>(s));
        }
        std::shuffle(t.summands.begin(), t.summands.end(), rng);
        x.set_term(i, t);
    }
    std::bernoulli_distribution keep(params.density);
    for (int i = params.lo; i + 1 < params.lo + params.amplitude; ++i) {
        if (x.term(i).empty() || x.term(i + 1).empty()) continue;
        const AddMorphism prev = x.d(i - 1);
        const Matrix k = kernel_basis(pre_compose_matrix(prev, x.term(i + 1)));
        Vector v = p.field().zeros(k.rows());
        for (std::size_t c = 0; c < k.cols(); ++c) {
            if (!keep(rng)) continue;
            const Scalar w = random_scalar(p.field(), rng);
            if (w.is_zero()) continue;
            for (std::size_t r = 0; r < k.rows(); ++r)
                if (!k.at(r, c).is_zero()) v[r] += w * k.at(r, c);
        }
        x.set_d(i, from_coords(p, x.term(i), x.term(i + 1), v));
    }
    return x;
}

ChainMap random_chain_map(const Complex& x, const Complex& y, std::mt19937_64& rng) {
    const GradedLayout l0 = graded_layout(x, y, 0), l1 = graded_layout(x, y, 1);
    const Matrix k = kernel_basis(chain_condition_matrix(x, y, l0, l1));
    const Field& f = x.cat().field();
    Vector v = f.zeros(k.rows());
    for (std::size_t c = 0; c < k.cols(); ++c) {
        const Scalar w = random_scalar(f, rng);
        if (w.is_zero()) continue;
        for (std::size_t r = 0; r < k.rows(); ++r)
            if (!k.at(r, c).is_zero()) v[r] += w * k.at(r, c);
    }
    return ChainMap{x, y, unflatten(v, x, y, l0)};
}

ChainMap random_conjugation(const Complex& x, std::mt19937_64& rng) {
    const auto& p = x.cat();
    std::map<int, AddMorphism> g, ginv;
    for (int i : x.degrees()) {
        g[i] = random_automorphism(p, x.term(i), rng);
        ginv[i] = *invert(g[i]);
    }
    Complex y(p);
    for (int i : x.degrees()) y.set_term(i, x.term(i));
    for (int i : x.degrees()) {
        if (x.term(i + 1).empty()) continue;
        y.set_d(i, compose(g[i + 1], compose(x.d(i), ginv[i])));
    }
    ChainMap m{x, y, {}};
    for (int i : x.degrees()) m.set(i, g[i]);
    return m;
}

SplitTriangle split_triangle(const Complex& x, const std::map<int, std::vector<std::size_t>>& sub_positions) {
    const auto& p = x.cat();
    std::map<int, std::vector<std::size_t>> apos, bpos;
    for (int i : x.degrees()) {
        std::vector<bool> in(x.term(i).size(), false);
        if (auto it = sub_positions.find(i); it != sub_positions.end())
            for (auto k : it->second) in.at(k) = true;
        for (std::size_t k = 0; k < in.size(); ++k) (in[k] ? apos[i] : bpos[i]).push_back(k);
    }
    auto sel = [&](std::map<int, std::vector<std::size_t>>& m, int i) -> const std::vector<std::size_t>& {
        return m[i];
    };
    Complex a(p), b(p);
    for (int i : x.degrees()) {
        a.set_term(i, restrict_morphism(identity_morphism(p, x.term(i)), sel(apos, i), {}).target());
        b.set_term(i, restrict_morphism(identity_morphism(p, x.term(i)), sel(bpos, i), {}).target());
    }
    for (int i : x.degrees()) {
        const AddMorphism d = x.d(i);
        if (!restrict_morphism(d, sel(bpos, i + 1), sel(apos, i)).is_zero())
            throw CheckFailure("split_triangle: selected summands are not closed under d at degree " +
                               std::to_string(i));
        if (!a.term(i).empty() && !a.term(i + 1).empty())
            a.set_d(i, restrict_morphism(d, sel(apos, i + 1), sel(apos, i)));
        if (!b.term(i).empty() && !b.term(i + 1).empty())
            b.set_d(i, restrict_morphism(d, sel(bpos, i + 1), sel(bpos, i)));
    }
    const Complex a1 = shift(a, 1);
    ChainMap inc{a, x, {}}, proj{x, b, {}}, conn{b, a1, {}};
    for (int i : x.degrees()) {
        const AddMorphism id = identity_morphism(p, x.term(i));
        if (!a.term(i).empty()) inc.set(i, restrict_morphism(id, positions(x.term(i).size()), sel(apos, i)));
        if (!b.term(i).empty()) proj.set(i, restrict_morphism(id, sel(bpos, i), positions(x.term(i).size())));
        if (!b.term(i).empty() && !a1.term(i).empty())
            conn.set(i, -restrict_morphism(x.d(i), sel(apos, i + 1), sel(bpos, i)));
    }
    return {a, b, inc, proj, conn};
}

TriangleCertificate certify_triangle(const ChainMap& f, const ChainMap& g, const ChainMap& h) {
    TriangleCertificate cert;
    for (const ChainMap* m : {&f, &g, &h})
        if (!is_chain_map(*m)) {
            cert.reason = "a triangle map is not a chain map";
            return cert;
        }
    const Complex& xc = f.target;
    const Complex& bc = g.target;
    const Cone c = cone(f);
    const Field& fld = xc.cat().field();
    const Complex a1 = shift(f.source, 1);
    // unknowns: phi : B → C, h1 : X → C of degree -1, h2 : B → A[1] of degree -1
    const GradedLayout phi0 = graded_layout(bc, c.z, 0), phi1 = graded_layout(bc, c.z, 1);
    const GradedLayout x0 = graded_layout(xc, c.z, 0), xm1 = graded_layout(xc, c.z, -1);
    const GradedLayout b0 = graded_layout(bc, a1, 0), bm1 = graded_layout(bc, a1, -1);
    BlockSystem sys(fld);
    const auto u_phi = sys.add_unknown(phi0.total);
    const auto u_h1 = sys.add_unknown(xm1.total);
    const auto u_h2 = sys.add_unknown(bm1.total);
    const auto e_chain = sys.add_equation(phi1.total);
    const auto e_left = sys.add_equation(x0.total);
    const auto e_right = sys.add_equation(b0.total);
    const Scalar minus = -fld.one();
    sys.add(e_chain, u_phi, chain_condition_matrix(bc, c.z, phi0, phi1));
    sys.add(e_left, u_phi, precompose_family_matrix(g, c.z));
    sys.add(e_left, u_h1, boundary_matrix(xc, c.z, xm1, x0).scaled(minus));
    sys.set_rhs(e_left, flatten(compose(c.inclusion, identity_map(xc)).comp, xc, c.z, x0));
    sys.add(e_right, u_phi, postcompose_family_matrix(c.projection, bc));
    sys.add(e_right, u_h2, boundary_matrix(bc, a1, bm1, b0).scaled(minus));
    sys.set_rhs(e_right, flatten(h.comp, bc, a1, b0));
    auto sol = sys.solve();
    if (!sol) {
        cert.reason = "no morphism of triangles to the cone triangle exists";
        return cert;
    }
    ChainMap phi{bc, c.z, unflatten(sys.part(*sol, u_phi), bc, c.z, phi0)};
    if (!is_quasi_iso(phi)) {
        cert.reason = "comparison map to the cone is not an isomorphism";
        return cert;
    }
    cert.distinguished = true;
    cert.comparison = std::move(phi);
    return cert;
}

} // namespace koszulkit
