#include "koszulkit/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace koszulkit {

int Presentation::add_object(const std::string& id, int degree, const std::string& name) {
    if (finalized_) throw std::logic_error("presentation already finalized");
    if (index_.count(id)) throw InputError("duplicate indecomposable id '" + id + "'");
    const int k = static_cast<int>(objects_.size());
    objects_.push_back({id, name.empty() ? id : name, degree});
    index_[id] = k;
    return k;
}

void Presentation::set_basis(int src, int tgt, const std::vector<std::string>& labels) {
    if (finalized_) throw std::logic_error("presentation already finalized");
    const auto n = objects_.size();
    if (basis_.size() != n * n) basis_.resize(n * n);
    for (const auto& l : labels) {
        if (labels_.count(l)) throw InputError("basis label '" + l + "' used twice");
    }
    auto& b = basis_[slot(src, tgt)];
    for (const auto& l : labels) {
        labels_[l] = {src, tgt, b.size()};
        b.push_back(l);
    }
}

void Presentation::finalize() {
    const auto n = objects_.size();
    if (basis_.size() != n * n) basis_.resize(n * n);
    tensor_.assign(n * n * n, {});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const int ia = static_cast<int>(a), ib = static_cast<int>(b), ic = static_cast<int>(c);
                tensor_[tslot(ia, ib, ic)] =
                    field_.zeros(dim(ib, ic) * dim(ia, ib) * dim(ia, ic));
            }
    finalized_ = true;
    for (std::size_t s = 0; s < n; ++s) {
        const int is = static_cast<int>(s);
        if (!identity_index(is))
            note_malformed({"missing-identity",
                            "End(" + objects_[s].id + ") lacks the identity label 1@" + objects_[s].id,
                            {objects_[s].id}});
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const int ia = static_cast<int>(a), ib = static_cast<int>(b);
            const auto da = dim(ia, ib);
            // left identity: 1@b ∘ y = y
            if (auto e = identity_index(ib)) {
                auto& t = tensor_[tslot(ia, ib, ib)];
                for (std::size_t y = 0; y < da; ++y) t[(*e * da + y) * da + y] = field_.one();
            }
            // right identity: x ∘ 1@a = x
            if (auto e = identity_index(ia)) {
                auto& t = tensor_[tslot(ia, ia, ib)];
                const auto daa = dim(ia, ia);
                for (std::size_t x = 0; x < da; ++x) t[(x * daa + *e) * da + x] = field_.one();
            }
        }
}

void Presentation::require_finalized() const {
    if (!finalized_) throw std::logic_error("presentation not finalized");
}

void Presentation::set_product(const std::string& left, const std::string& right, const Vector& result) {
    require_finalized();
    auto l = locate(left), r = locate(right);
    if (!l || !r) throw InputError("unknown basis label in composition");
    const auto [b, c, x] = *l;
    const auto [a, b2, y] = *r;
    if (b != b2) throw InputError("labels '" + left + "' and '" + right + "' are not composable");
    const auto dz = dim(a, c);
    if (result.size() != dz) throw InputError("composition result has wrong length");
    auto& t = tensor_[tslot(a, b, c)];
    const auto dy = dim(a, b);
    for (std::size_t z = 0; z < dz; ++z) t[(x * dy + y) * dz + z] = result[z];
}

int Presentation::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw InputError("unknown indecomposable '" + id + "'");
    return it->second;
}

std::optional<int> Presentation::find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::tuple<int, int, std::size_t>> Presentation::locate(const std::string& label) const {
    auto it = labels_.find(label);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Presentation::identity_index(int s) const {
    auto loc = locate("1@" + object(s).id);
    if (!loc) return std::nullopt;
    const auto [a, b, k] = *loc;
    if (a != s || b != s) return std::nullopt;
    return k;
}

const Scalar& Presentation::product(int a, int b, int c, std::size_t x, std::size_t y, std::size_t z) const {
    const auto dy = dim(a, b), dz = dim(a, c);
    return tensor_[tslot(a, b, c)][(x * dy + y) * dz + z];
}

namespace {

Vector product_vector(const Presentation& p, int a, int b, int c, std::size_t x, std::size_t y) {
    const auto dz = p.dim(a, c);
    Vector v;
    v.reserve(dz);
    for (std::size_t z = 0; z < dz; ++z) v.push_back(p.product(a, b, c, x, y, z));
    return v;
}

// (x ∘ v) for x in Hom(b,c) and a coordinate vector v in Hom(a,b).
Vector left_apply(const Presentation& p, int a, int b, int c, std::size_t x, const Vector& v) {
    Vector out = p.field().zeros(p.dim(a, c));
    for (std::size_t y = 0; y < v.size(); ++y) {
        if (v[y].is_zero()) continue;
        for (std::size_t z = 0; z < out.size(); ++z) out[z] += v[y] * p.product(a, b, c, x, y, z);
    }
    return out;
}

// (v ∘ y) for a coordinate vector v in Hom(b,c) and y in Hom(a,b).
Vector right_apply(const Presentation& p, int a, int b, int c, const Vector& v, std::size_t y) {
    Vector out = p.field().zeros(p.dim(a, c));
    for (std::size_t x = 0; x < v.size(); ++x) {
        if (v[x].is_zero()) continue;
        for (std::size_t z = 0; z < out.size(); ++z) out[z] += v[x] * p.product(a, b, c, x, y, z);
    }
    return out;
}

} // namespace

ValidationReport validate_presentation(const Presentation& p) {
    ValidationReport rep;
    rep.malformed = p.malformed();
    const int n = static_cast<int>(p.size());
    for (int s = 0; s < n; ++s) {
        const auto& id = p.object(s).id;
        if (p.dim(s, s) != 1)
            rep.violations.push_back({"endomorphisms",
                                      "End(" + id + ") has dimension " + std::to_string(p.dim(s, s)) +
                                          ", expected 1",
                                      {id, id}});
    }
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            if (s == t || p.dim(s, t) == 0) continue;
            if (p.degree(s) <= p.degree(t))
                rep.violations.push_back({"degree-vanishing",
                                          "Hom(" + p.object(s).id + "," + p.object(t).id +
                                              ") is nonzero although deg " + p.object(s).id +
                                              " <= deg " + p.object(t).id,
                                          {p.object(s).id, p.object(t).id}});
        }
    if (!rep.malformed.empty()) return rep;
    // unit laws
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const auto ea = p.identity_index(a), eb = p.identity_index(b);
            for (std::size_t y = 0; y < p.dim(a, b); ++y) {
                Vector unit = p.field().zeros(p.dim(a, b));
                unit[y] = p.field().one();
                const auto& label = p.basis(a, b)[y];
                if (eb && product_vector(p, a, b, b, *eb, y) != unit)
                    rep.violations.push_back({"unit", "1@" + p.object(b).id + " ∘ " + label + " != " + label,
                                              {"1@" + p.object(b).id, label}});
                if (ea && product_vector(p, a, a, b, y, *ea) != unit)
                    rep.violations.push_back({"unit", label + " ∘ 1@" + p.object(a).id + " != " + label,
                                              {label, "1@" + p.object(a).id}});
            }
        }
    // associativity: (x ∘ y) ∘ z = x ∘ (y ∘ z), z: a→b, y: b→c, x: c→d
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    for (std::size_t x = 0; x < p.dim(c, d); ++x)
                        for (std::size_t y = 0; y < p.dim(b, c); ++y)
                            for (std::size_t z = 0; z < p.dim(a, b); ++z) {
                                const Vector xy = product_vector(p, b, c, d, x, y);
                                const Vector lhs = right_apply(p, a, b, d, xy, z);
                                const Vector yz = product_vector(p, a, b, c, y, z);
                                const Vector rhs = left_apply(p, a, c, d, x, yz);
                                if (lhs != rhs) {
                                    const auto& lx = p.basis(c, d)[x];
                                    const auto& ly = p.basis(b, c)[y];
                                    const auto& lz = p.basis(a, b)[z];
                                    rep.violations.push_back(
                                        {"associativity",
                                         "(" + lx + " ∘ " + ly + ") ∘ " + lz + " != " + lx + " ∘ (" + ly +
                                             " ∘ " + lz + ")",
                                         {lx, ly, lz}});
                                }
                            }
    return rep;
}

AddObject concat(const AddObject& a, const AddObject& b) {
    AddObject c = a;
    c.summands.insert(c.summands.end(), b.summands.begin(), b.summands.end());
    return c;
}

bool same_multiset(const AddObject& a, const AddObject& b) {
    auto x = a.summands, y = b.summands;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

bool is_homogeneous(const Presentation& p, const AddObject& x, int degree) {
    return std::all_of(x.summands.begin(), x.summands.end(), [&](int s) { return p.degree(s) == degree; });
}

std::string describe(const Presentation& p, const AddObject& x) {
    if (x.empty()) return "0";
    std::ostringstream os;
    for (std::size_t k = 0; k < x.size(); ++k) os << (k ? "+" : "") << p.object(x[k]).id;
    return os.str();
}

AddMorphism::AddMorphism(const Presentation& cat, AddObject source, AddObject target)
    : cat_(&cat), src_(std::move(source)), tgt_(std::move(target)) {
    off_.reserve(src_.size() * tgt_.size() + 1);
    std::size_t acc = 0;
    for (std::size_t i = 0; i < tgt_.size(); ++i)
        for (std::size_t j = 0; j < src_.size(); ++j) {
            off_.push_back(acc);
            acc += cat.dim(src_[j], tgt_[i]);
        }
    off_.push_back(acc);
    v_ = cat.field().zeros(acc);
}

Scalar AddMorphism::identity_coefficient(std::size_t i, std::size_t j) const {
    if (src_[j] != tgt_[i]) return cat_->field().zero();
    auto e = cat_->identity_index(src_[j]);
    if (!e) return cat_->field().zero();
    return coord(i, j, *e);
}

bool AddMorphism::is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](const Scalar& s) { return s.is_zero(); });
}

namespace {

void require_same_shape(const AddMorphism& a, const AddMorphism& b) {
    if (a.source() != b.source() || a.target() != b.target())
        throw InputError("morphisms have different source or target");
}

} // namespace

AddMorphism AddMorphism::operator+(const AddMorphism& o) const {
    require_same_shape(*this, o);
    AddMorphism r = *this;
    for (std::size_t k = 0; k < v_.size(); ++k) r.v_[k] += o.v_[k];
    return r;
}

AddMorphism AddMorphism::operator-(const AddMorphism& o) const {
    require_same_shape(*this, o);
    AddMorphism r = *this;
    for (std::size_t k = 0; k < v_.size(); ++k) r.v_[k] -= o.v_[k];
    return r;
}

AddMorphism AddMorphism::operator-() const {
    AddMorphism r = *this;
    for (auto& s : r.v_) s = -s;
    return r;
}

AddMorphism AddMorphism::scaled(const Scalar& s) const {
    AddMorphism r = *this;
    for (auto& x : r.v_) x *= s;
    return r;
}

bool operator==(const AddMorphism& a, const AddMorphism& b) {
    return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.v_ == b.v_;
}

AddMorphism zero_morphism(const Presentation& p, const AddObject& x, const AddObject& y) {
    return AddMorphism(p, x, y);
}

AddMorphism identity_morphism(const Presentation& p, const AddObject& x) {
    AddMorphism m(p, x, x);
    for (std::size_t k = 0; k < x.size(); ++k) {
        auto e = p.identity_index(x[k]);
        if (!e) throw InputError("object " + p.object(x[k]).id + " has no identity");
        m.coord(k, k, *e) = p.field().one();
    }
    return m;
}

AddMorphism compose(const AddMorphism& g, const AddMorphism& f) {
    if (f.target() != g.source())
        throw InputError("compose: target of f does not match source of g");
    const auto& p = f.cat();
    const auto& x = f.source();
    const auto& y = f.target();
    const auto& z = g.target();
    AddMorphism r(p, x, z);
    for (std::size_t k = 0; k < z.size(); ++k)
        for (std::size_t i = 0; i < y.size(); ++i) {
            const auto gd = g.block_dim(k, i);
            if (gd == 0) continue;
            for (std::size_t j = 0; j < x.size(); ++j) {
                const auto fd = f.block_dim(i, j);
                const auto rd = r.block_dim(k, j);
                if (fd == 0 || rd == 0) continue;
                for (std::size_t a = 0; a < gd; ++a) {
                    const Scalar& ga = g.coord(k, i, a);
                    if (ga.is_zero()) continue;
                    for (std::size_t b = 0; b < fd; ++b) {
                        const Scalar& fb = f.coord(i, j, b);
                        if (fb.is_zero()) continue;
                        const Scalar w = ga * fb;
                        for (std::size_t c = 0; c < rd; ++c) {
                            const Scalar& t = p.product(x[j], y[i], z[k], a, b, c);
                            if (!t.is_zero()) r.coord(k, j, c) += w * t;
                        }
                    }
                }
            }
        }
    return r;
}

std::size_t hom_dim(const Presentation& p, const AddObject& x, const AddObject& y) {
    std::size_t d = 0;
    for (int t : y.summands)
        for (int s : x.summands) d += p.dim(s, t);
    return d;
}

std::vector<AddMorphism> hom_basis(const Presentation& p, const AddObject& x, const AddObject& y) {
    std::vector<AddMorphism> out;
    AddMorphism z(p, x, y);
    for (std::size_t k = 0; k < z.dim(); ++k) {
        AddMorphism e = z;
        e.coords()[k] = p.field().one();
        out.push_back(std::move(e));
    }
    return out;
}

AddMorphism from_coords(const Presentation& p, const AddObject& x, const AddObject& y, const Vector& v) {
    AddMorphism m(p, x, y);
    if (v.size() != m.dim()) throw InputError("coordinate vector has wrong length");
    m.coords() = v;
    return m;
}

Matrix post_compose_matrix(const AddMorphism& g, const AddObject& x) {
    const auto& p = g.cat();
    const auto& y = g.source();
    const auto& z = g.target();
    AddMorphism in(p, x, y), out(p, x, z);
    Matrix m(p.field(), out.dim(), in.dim());
    for (std::size_t k = 0; k < z.size(); ++k)
        for (std::size_t i = 0; i < y.size(); ++i) {
            const auto gd = g.block_dim(k, i);
            for (std::size_t a = 0; a < gd; ++a) {
                const Scalar& ga = g.coord(k, i, a);
                if (ga.is_zero()) continue;
                for (std::size_t j = 0; j < x.size(); ++j) {
                    const auto fd = in.block_dim(i, j);
                    const auto rd = out.block_dim(k, j);
                    for (std::size_t b = 0; b < fd; ++b)
                        for (std::size_t c = 0; c < rd; ++c) {
                            const Scalar& t = p.product(x[j], y[i], z[k], a, b, c);
                            if (!t.is_zero()) m.at(out.offset(k, j) + c, in.offset(i, j) + b) += ga * t;
                        }
                }
            }
        }
    return m;
}

Matrix pre_compose_matrix(const AddMorphism& f, const AddObject& z) {
    const auto& p = f.cat();
    const auto& x = f.source();
    const auto& y = f.target();
    AddMorphism in(p, y, z), out(p, x, z);
    Matrix m(p.field(), out.dim(), in.dim());
    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) {
            const auto fd = f.block_dim(i, j);
            for (std::size_t b = 0; b < fd; ++b) {
                const Scalar& fb = f.coord(i, j, b);
                if (fb.is_zero()) continue;
                for (std::size_t k = 0; k < z.size(); ++k) {
                    const auto gd = in.block_dim(k, i);
                    const auto rd = out.block_dim(k, j);
                    for (std::size_t a = 0; a < gd; ++a)
                        for (std::size_t c = 0; c < rd; ++c) {
                            const Scalar& t = p.product(x[j], y[i], z[k], a, b, c);
                            if (!t.is_zero()) m.at(out.offset(k, j) + c, in.offset(k, i) + a) += fb * t;
                        }
                }
            }
        }
    return m;
}

AddMorphism restrict_morphism(const AddMorphism& f, const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols) {
    AddObject s, t;
    for (auto c : cols) s.summands.push_back(f.source()[c]);
    for (auto r : rows) t.summands.push_back(f.target()[r]);
    AddMorphism m(f.cat(), s, t);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t k = 0; k < m.block_dim(i, j); ++k) m.coord(i, j, k) = f.coord(rows[i], cols[j], k);
    return m;
}

void place_morphism(AddMorphism& big, const AddMorphism& f, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (big.target()[rows[i]] != f.target()[i] || big.source()[cols[j]] != f.source()[j])
                throw std::logic_error("place_morphism: summand mismatch");
            for (std::size_t k = 0; k < f.block_dim(i, j); ++k) big.coord(rows[i], cols[j], k) = f.coord(i, j, k);
        }
}

namespace {

std::vector<std::size_t> iota_range(std::size_t from, std::size_t count) {
    std::vector<std::size_t> v(count);
    for (std::size_t k = 0; k < count; ++k) v[k] = from + k;
    return v;
}

} // namespace

AddMorphism direct_sum(const AddMorphism& f, const AddMorphism& g) {
    AddMorphism m(f.cat(), concat(f.source(), g.source()), concat(f.target(), g.target()));
    place_morphism(m, f, iota_range(0, f.target().size()), iota_range(0, f.source().size()));
    place_morphism(m, g, iota_range(f.target().size(), g.target().size()),
                   iota_range(f.source().size(), g.source().size()));
    return m;
}

std::optional<AddMorphism> invert(const AddMorphism& f) {
    const auto& p = f.cat();
    if (f.source().size() != f.target().size()) return std::nullopt;
    const Matrix m = post_compose_matrix(f, f.target());
    const AddMorphism id = identity_morphism(p, f.target());
    auto x = solve(m, id.coords());
    if (!x) return std::nullopt;
    AddMorphism g = from_coords(p, f.target(), f.source(), *x);
    if (!(compose(g, f) == identity_morphism(p, f.source()))) return std::nullopt;
    return g;
}

IdempotentSplitting split_idempotent(const AddMorphism& e) {
    const auto& p = e.cat();
    const auto& x = e.source();
    if (x != e.target()) throw InputError("split_idempotent: not an endomorphism");
    if (!(compose(e, e) == e)) throw CheckFailure("split_idempotent: morphism is not idempotent");
    std::map<int, std::vector<std::size_t>> iso;
    for (std::size_t k = 0; k < x.size(); ++k) iso[x[k]].push_back(k);
    AddObject z;
    std::vector<std::size_t> pick_cols, pick_rows;
    for (const auto& [s, pos] : iso) {
        Matrix es(p.field(), pos.size(), pos.size());
        for (std::size_t r = 0; r < pos.size(); ++r)
            for (std::size_t c = 0; c < pos.size(); ++c) es.at(r, c) = e.identity_coefficient(pos[r], pos[c]);
        const auto cols = independent_columns(es);
        const auto rows = independent_columns(es.select_columns(cols).transpose());
        for (std::size_t k = 0; k < cols.size(); ++k) {
            z.summands.push_back(s);
            pick_cols.push_back(pos[cols[k]]);
            pick_rows.push_back(pos[rows[k]]);
        }
    }
    // j: Z → X picks columns, k: X → Z picks rows
    AddMorphism j(p, z, x), k(p, x, z);
    for (std::size_t t = 0; t < z.size(); ++t) {
        const auto id = *p.identity_index(z[t]);
        j.coord(pick_cols[t], t, id) = p.field().one();
        k.coord(t, pick_rows[t], id) = p.field().one();
    }
    const AddMorphism incl = compose(e, j);
    const AddMorphism m = compose(k, incl);
    auto minv = invert(m);
    if (!minv) throw std::logic_error("split_idempotent: selected minor not invertible");
    const AddMorphism proj = compose(*minv, compose(k, e));
    if (!(compose(incl, proj) == e) || !(compose(proj, incl) == identity_morphism(p, z)))
        throw std::logic_error("split_idempotent: splitting identities failed");
    return {z, proj, incl};
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    return f.from_int(d(rng));
}

AddMorphism random_morphism(const Presentation& p, const AddObject& x, const AddObject& y,
                            std::mt19937_64& rng, double density) {
    AddMorphism m(p, x, y);
    std::bernoulli_distribution keep(density);
    for (auto& c : m.coords())
        if (keep(rng)) c = random_scalar(p.field(), rng);
    return m;
}

AddMorphism random_automorphism(const Presentation& p, const AddObject& x, std::mt19937_64& rng) {
    AddMorphism g = random_morphism(p, x, x, rng, 0.5);
    std::map<int, std::vector<std::size_t>> iso;
    for (std::size_t k = 0; k < x.size(); ++k) iso[x[k]].push_back(k);
    for (const auto& [s, pos] : iso) {
        const auto id = *p.identity_index(s);
        for (;;) {
            Matrix es(p.field(), pos.size(), pos.size());
            for (std::size_t r = 0; r < pos.size(); ++r)
                for (std::size_t c = 0; c < pos.size(); ++c) {
                    es.at(r, c) = random_scalar(p.field(), rng);
                    g.coord(pos[r], pos[c], id) = es.at(r, c);
                }
            if (rank(es) == pos.size()) break;
        }
    }
    return g;
}

} // namespace koszulkit
