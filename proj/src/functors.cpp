#include "koszulkit/functors.hpp"

#include <numeric>

namespace koszulkit {

namespace {

Scalar power(const Scalar& c, int e) {
    Scalar r = Scalar(c.characteristic(), 1);
    const Scalar b = e < 0 ? c.inverse() : c;
    for (int k = 0; k < std::abs(e); ++k) r *= b;
    return r;
}

/// Start position of each summand image inside F(x).
std::vector<std::size_t> image_offsets(const HomogeneousFunctor& f, const AddObject& x) {
    std::vector<std::size_t> off{0};
    for (int s : x.summands) off.push_back(off.back() + f.on_objects.at(static_cast<std::size_t>(s)).size());
    return off;
}

std::vector<std::size_t> range(std::size_t from, std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), from);
    return v;
}

AddMorphism single(const Presentation& p, int s, int t, std::size_t k) {
    return hom_basis(p, AddObject{{s}}, AddObject{{t}}).at(k);
}

std::string label_of(const Presentation& p, int s, int t, std::size_t k) { return p.basis(s, t).at(k); }

RandomComplexParams small_params() {
    RandomComplexParams rp;
    rp.lo = -1;
    rp.amplitude = 3;
    rp.max_multiplicity = 2;
    return rp;
}

} // namespace

AddObject HomogeneousFunctor::object(const AddObject& x) const {
    AddObject out;
    for (int s : x.summands) {
        const AddObject& img = on_objects.at(static_cast<std::size_t>(s));
        out.summands.insert(out.summands.end(), img.summands.begin(), img.summands.end());
    }
    return out;
}

AddMorphism HomogeneousFunctor::morphism(const AddMorphism& f) const {
    const AddObject src = object(f.source()), tgt = object(f.target());
    AddMorphism out = zero_morphism(*target, src, tgt);
    const auto so = image_offsets(*this, f.source()), to = image_offsets(*this, f.target());
    for (std::size_t i = 0; i < f.target().size(); ++i)
        for (std::size_t j = 0; j < f.source().size(); ++j) {
            const std::size_t n = f.block_dim(i, j);
            if (n == 0) continue;
            const int s = f.source()[j], t = f.target()[i];
            const AddObject& fs = on_objects.at(static_cast<std::size_t>(s));
            const AddObject& ft = on_objects.at(static_cast<std::size_t>(t));
            if (fs.empty() || ft.empty()) continue;
            const Vector v(f.coords().begin() + static_cast<std::ptrdiff_t>(f.offset(i, j)),
                           f.coords().begin() + static_cast<std::ptrdiff_t>(f.offset(i, j) + n));
            const AddMorphism piece = from_coords(*target, fs, ft, on_hom.at({s, t}) * v);
            place_morphism(out, piece, range(to[i], ft.size()), range(so[j], fs.size()));
        }
    return out;
}

void validate_functor(const HomogeneousFunctor& f) {
    if (!f.source || !f.target) throw InputError("functor without source or target");
    const Presentation& p = *f.source;
    const Presentation& q = *f.target;
    if (f.on_objects.size() != p.size()) throw InputError("functor: object map has the wrong length");
    bool all_empty = true, any_empty = false;
    for (const auto& o : f.on_objects) {
        all_empty = all_empty && o.empty();
        any_empty = any_empty || o.empty();
        for (int k : o.summands)
            if (k < 0 || k >= static_cast<int>(q.size())) throw InputError("functor: image object out of range");
    }
    if (any_empty && !all_empty) throw InputError("functor: zero image for some but not all indecomposables");
    const int n = static_cast<int>(p.size());
    for (int s = 0; s < n; ++s) {
        const AddObject& fs = f.on_objects[static_cast<std::size_t>(s)];
        if (!all_empty && !is_homogeneous(q, fs, p.degree(s)))
            throw InputError("functor: image of " + p.object(s).id + " is not homogeneous of degree " +
                             std::to_string(p.degree(s)));
    }
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            if (p.dim(s, t) == 0) continue;
            const AddObject& fs = f.on_objects[static_cast<std::size_t>(s)];
            const AddObject& ft = f.on_objects[static_cast<std::size_t>(t)];
            auto it = f.on_hom.find({s, t});
            if (it == f.on_hom.end()) throw InputError("functor: no morphism map on Hom(" + p.object(s).id + "," + p.object(t).id + ")");
            if (it->second.rows() != hom_dim(q, fs, ft) || it->second.cols() != p.dim(s, t))
                throw InputError("functor: morphism map on Hom(" + p.object(s).id + "," + p.object(t).id +
                                 ") has the wrong shape");
        }
    for (int s = 0; s < n; ++s) {
        const AddObject one{{s}};
        if (!(f.morphism(identity_morphism(p, one)) == identity_morphism(q, f.object(one))))
            throw InputError("functor does not preserve the identity of " + p.object(s).id);
    }
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            for (int u = 0; u < n; ++u)
                for (std::size_t y = 0; y < p.dim(s, t); ++y)
                    for (std::size_t x = 0; x < p.dim(t, u); ++x) {
                        const AddMorphism g = single(p, t, u, x), h = single(p, s, t, y);
                        if (!(f.morphism(compose(g, h)) == compose(f.morphism(g), f.morphism(h))))
                            throw InputError("functor does not preserve the composite " + label_of(p, t, u, x) +
                                             " ∘ " + label_of(p, s, t, y));
                    }
}

HomogeneousFunctor identity_functor(const Presentation& p) {
    HomogeneousFunctor f{&p, &p, {}, {}};
    const int n = static_cast<int>(p.size());
    for (int s = 0; s < n; ++s) f.on_objects.push_back(AddObject{{s}});
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (p.dim(s, t) > 0) f.on_hom[{s, t}] = Matrix::identity(p.field(), p.dim(s, t));
    return f;
}

HomogeneousFunctor twist_functor(const Presentation& p, const Scalar& c) {
    HomogeneousFunctor f = identity_functor(p);
    for (auto& [st, m] : f.on_hom) m = m.scaled(power(c, p.degree(st.first) - p.degree(st.second)));
    return f;
}

HomogeneousFunctor zero_functor(const Presentation& p) {
    HomogeneousFunctor f{&p, &p, std::vector<AddObject>(p.size()), {}};
    const int n = static_cast<int>(p.size());
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (p.dim(s, t) > 0) f.on_hom[{s, t}] = Matrix(p.field(), 0, p.dim(s, t));
    return f;
}

HomogeneousFunctor compose_functors(const HomogeneousFunctor& g, const HomogeneousFunctor& f) {
    const Presentation& p = *f.source;
    HomogeneousFunctor h{f.source, g.target, {}, {}};
    const int n = static_cast<int>(p.size());
    for (int s = 0; s < n; ++s) h.on_objects.push_back(g.object(f.on_objects[static_cast<std::size_t>(s)]));
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            if (p.dim(s, t) == 0) continue;
            Matrix m(p.field(), hom_dim(*g.target, h.on_objects[static_cast<std::size_t>(s)],
                                        h.on_objects[static_cast<std::size_t>(t)]),
                     p.dim(s, t));
            for (std::size_t k = 0; k < p.dim(s, t); ++k) m.set_column(k, g.morphism(f.morphism(single(p, s, t, k))).coords());
            h.on_hom[{s, t}] = m;
        }
    return h;
}

Complex apply_to_complex(const HomogeneousFunctor& f, const Complex& x) {
    Complex y(*f.target);
    for (int i : x.degrees()) {
        AddObject t = f.object(x.term(i));
        if (!t.empty()) y.set_term(i, std::move(t));
    }
    for (int i : x.degrees())
        if (!y.term(i).empty() && !y.term(i + 1).empty()) y.set_d(i, f.morphism(x.d(i)));
    return y;
}

ChainMap apply_to_map(const HomogeneousFunctor& f, const ChainMap& m) {
    ChainMap out{apply_to_complex(f, m.source), apply_to_complex(f, m.target), {}};
    for (const auto& [i, c] : m.comp)
        if (!out.source.term(i).empty() && !out.target.term(i).empty()) out.set(i, f.morphism(c));
    return out;
}

Homotopy apply_to_homotopy(const HomogeneousFunctor& f, const Homotopy& h) {
    Homotopy out{apply_to_complex(f, h.source), apply_to_complex(f, h.target), {}};
    for (const auto& [i, c] : h.comp)
        if (!out.source.term(i).empty() && !out.target.term(i - 1).empty()) out.comp[i] = f.morphism(c);
    return out;
}

InfMorphism apply_to_inf(const HomogeneousFunctor& f, const InfMorphism& m) {
    InfMorphism out{apply_to_map(f, m.f0), apply_to_map(f, m.finf)};
    out.finf.target = shift(out.f0.target, -1);
    return out;
}

NatTrans identity_nat_trans(const HomogeneousFunctor& f) {
    NatTrans t{f, f, {}};
    for (const auto& o : f.on_objects) t.components.push_back(identity_morphism(*f.target, o));
    return t;
}

NatTrans twist_nat_trans(const Presentation& p, const Scalar& c1, const Scalar& c2) {
    NatTrans t{twist_functor(p, c1), twist_functor(p, c2), {}};
    const Scalar ratio = c1 / c2;
    for (std::size_t s = 0; s < p.size(); ++s)
        t.components.push_back(
            identity_morphism(p, AddObject{{static_cast<int>(s)}}).scaled(power(ratio, p.degree(static_cast<int>(s)))));
    return t;
}

NatTrans zero_nat_trans(const HomogeneousFunctor& f, const HomogeneousFunctor& g) {
    NatTrans t{f, g, {}};
    for (std::size_t s = 0; s < f.on_objects.size(); ++s)
        t.components.push_back(zero_morphism(*f.target, f.on_objects[s], g.on_objects[s]));
    return t;
}

std::optional<std::string> naturality_witness(const NatTrans& t) {
    const Presentation& p = *t.from.source;
    const int n = static_cast<int>(p.size());
    if (t.components.size() != p.size()) throw InputError("natural transformation has the wrong number of components");
    for (int s = 0; s < n; ++s) {
        const AddMorphism& c = t.components[static_cast<std::size_t>(s)];
        if (!(c.source() == t.from.on_objects[static_cast<std::size_t>(s)]) ||
            !(c.target() == t.to.on_objects[static_cast<std::size_t>(s)]))
            throw InputError("natural transformation component at " + p.object(s).id + " has the wrong shape");
    }
    for (int s = 0; s < n; ++s)
        for (int u = 0; u < n; ++u)
            for (std::size_t k = 0; k < p.dim(s, u); ++k) {
                const AddMorphism x = single(p, s, u, k);
                if (!(compose(t.to.morphism(x), t.components[static_cast<std::size_t>(s)]) ==
                      compose(t.components[static_cast<std::size_t>(u)], t.from.morphism(x))))
                    return label_of(p, s, u, k);
            }
    return std::nullopt;
}

bool is_nat_iso(const NatTrans& t) {
    for (const auto& c : t.components)
        if (!invert(c)) return false;
    return true;
}

AddMorphism nat_component(const NatTrans& t, const AddObject& x) {
    AddMorphism out = zero_morphism(*t.from.target, t.from.object(x), t.to.object(x));
    const auto so = image_offsets(t.from, x), to = image_offsets(t.to, x);
    for (std::size_t k = 0; k < x.size(); ++k) {
        const AddMorphism& c = t.components[static_cast<std::size_t>(x[k])];
        place_morphism(out, c, range(to[k], c.target().size()), range(so[k], c.source().size()));
    }
    return out;
}

NatTransExtension extend_nat_trans(const NatTrans& t, const Complex& x) {
    if (auto w = naturality_witness(t)) throw CheckFailure("natural transformation fails naturality on " + *w);
    NatTransExtension out;
    out.theta = ChainMap{apply_to_complex(t.from, x), apply_to_complex(t.to, x), {}};
    for (int i : x.degrees())
        if (!out.theta.source.term(i).empty() && !out.theta.target.term(i).empty())
            out.theta.set(i, nat_component(t, x.term(i)));
    if (!is_chain_map(out.theta)) throw std::logic_error("extend_nat_trans: termwise map is not a chain map");
    if (is_nat_iso(t)) {
        ChainMap inv{out.theta.target, out.theta.source, {}};
        for (const auto& [i, c] : out.theta.comp) inv.set(i, *invert(c));
        if (!equal_on_the_nose(compose(inv, out.theta), identity_map(out.theta.source)))
            throw std::logic_error("extend_nat_trans: termwise inverse failed");
        out.inverse = inv;
        out.invertible = true;
    } else {
        out.inverse = homotopy_inverse(out.theta);
        out.invertible = out.inverse.has_value();
    }
    return out;
}

InfMorphism extend_nat_trans_inf(const NatTrans& t, const Complex& x) { return iota(extend_nat_trans(t, x).theta); }

namespace {

ChainMap theta_by_extraction(const NatTrans& t, const Complex& x, UniquenessProbe& rep) {
    if (support(x).size() <= 1) return extend_nat_trans(t, x).theta;
    const TopExtraction te = top_extraction(x);
    ++rep.extraction_steps;
    const ChainMap a = apply_to_map(t.from, te.triangle.inclusion), b = apply_to_map(t.from, te.triangle.projection);
    const ChainMap a2 = apply_to_map(t.to, te.triangle.inclusion), b2 = apply_to_map(t.to, te.triangle.projection);
    const ChainMap tp = extend_nat_trans(t, te.p).theta;
    const ChainMap ty = theta_by_extraction(t, te.y, rep);
    const FillResult fill = unique_fill(a, b, a2, b2, tp, ty);
    if (!fill.q) throw CheckFailure("uniqueness probe: no fill at point (" + std::to_string(te.point.first) + "," +
                                    std::to_string(te.point.second) + ")");
    if (fill.unique)
        ++rep.unique_fills;
    else
        rep.failures.push_back("fill space of dimension " + std::to_string(fill.fill_space_dim) + " at point (" +
                               std::to_string(te.point.first) + "," + std::to_string(te.point.second) + ")");
    return *fill.q;
}

} // namespace

UniquenessProbe nat_trans_uniqueness_probe(const NatTrans& t, const Complex& x, std::size_t orders, std::uint64_t seed) {
    UniquenessProbe rep;
    const Presentation& p = x.cat();
    std::mt19937_64 rng(seed);
    const ChainMap base = extend_nat_trans(t, x).theta;
    std::uniform_int_distribution<int> obj(0, static_cast<int>(p.size()) - 1), pads(0, 2);
    const int lo = x.empty() ? 0 : x.lo() - 1, hi = x.empty() ? 0 : x.hi();
    std::uniform_int_distribution<int> deg(lo, hi);
    for (std::size_t k = 0; k < orders; ++k) {
        ++rep.orders;
        ChainMap u = identity_map(x);
        if (k > 0) {
            std::vector<Complex> parts{x};
            for (int c = pads(rng); c > 0; --c)
                parts.push_back(cone(identity_map(concentrated(p, AddObject{{obj(rng)}}, deg(rng)))).z);
            std::vector<std::vector<std::optional<ChainMap>>> blocks(parts.size(), {std::nullopt});
            blocks[0][0] = identity_map(x);
            const ChainMap incl = block_map({x}, parts, blocks);
            u = compose(random_conjugation(incl.target, rng), incl);
        }
        try {
            const ChainMap routed = theta_by_extraction(t, u.target, rep);
            if (homotopic(compose(routed, apply_to_map(t.from, u)), compose(apply_to_map(t.to, u), base)))
                ++rep.equal;
            else
                rep.failures.push_back("order " + std::to_string(k) + ": extraction route differs from θ_X");
        } catch (const CheckFailure& e) {
            rep.failures.push_back("order " + std::to_string(k) + ": " + e.what());
        }
    }
    return rep;
}

GenuinenessReport induced_functor_check(const HomogeneousFunctor& f, std::uint64_t seed, int samples) {
    GenuinenessReport rep;
    const Presentation& p = *f.source;
    std::mt19937_64 rng(seed);
    auto fail = [&](int k, const std::string& s) { rep.failures.push_back("sample " + std::to_string(k) + ": " + s); };
    for (int k = 0; k < samples; ++k) {
        const Complex x = random_complex(p, rng, small_params()), y = random_complex(p, rng, small_params()),
                      z = random_complex(p, rng, small_params());
        ++rep.objects;
        if (!(apply_to_complex(f, rho(x)) == rho(apply_to_complex(f, x)))) fail(k, "F(ϱX) differs from ϱ(FX)");
        if (!(apply_to_complex(f, shift(x, -1)) == shift(apply_to_complex(f, x), -1))) fail(k, "F(X[-1]) differs from F(X)[-1]");
        const InfMorphism m = random_inf_morphism(x, y, rng), m2 = random_inf_morphism(y, z, rng);
        ++rep.morphisms;
        const InfMorphism fm = apply_to_inf(f, m);
        if (!inf_equal(iota(apply_to_map(f, m.f0)), apply_to_inf(f, iota(m.f0)))) fail(k, "ι∘F̃ differs from F∘ι");
        if (!is_genuine(apply_to_inf(f, iota(m.f0)))) fail(k, "F does not preserve genuine morphisms");
        if (!equal_on_the_nose(varpi(fm), apply_to_map(f, varpi(m)))) fail(k, "ϖ∘F differs from F̃∘ϖ");
        if (!equal_on_the_nose(rho_map(fm), apply_to_map(f, rho_map(m)))) fail(k, "ϱ∘F differs from F̃∘ϱ");
        if (!inf_equal(apply_to_inf(f, inf_compose(m2, m)), inf_compose(apply_to_inf(f, m2), fm)))
            fail(k, "F does not preserve the twisted composition");
    }
    return rep;
}

InducedAdjunctionReport induced_adjunction_check(const HomogeneousFunctor& f, const HomogeneousFunctor& g,
                                                 const NatTrans& eta, const NatTrans& eps, int shift_by,
                                                 std::uint64_t seed, int samples) {
    InducedAdjunctionReport rep;
    const Presentation& p = *f.source;
    for (const NatTrans* t : {&eta, &eps})
        if (auto w = naturality_witness(*t)) rep.failures.push_back("unit or counit not natural on " + *w);
    const int n = static_cast<int>(p.size());
    for (int s = 0; s < n; ++s) {
        const AddObject one{{s}};
        const AddMorphism left = compose(nat_component(eps, f.object(one)), f.morphism(nat_component(eta, one)));
        if (!(left == identity_morphism(*f.target, f.object(one))))
            rep.failures.push_back("ε_F ∘ F(η) ≠ id at " + p.object(s).id);
        const AddObject gs = g.object(one);
        const AddMorphism right = compose(g.morphism(nat_component(eps, one)), nat_component(eta, gs));
        if (!(right == identity_morphism(p, gs))) rep.failures.push_back("G(ε) ∘ η_G ≠ id at " + p.object(s).id);
    }
    if (!rep.failures.empty()) return rep;
    std::mt19937_64 rng(seed);
    auto ftil = [&](const InfMorphism& m) { return apply_to_inf(f, inf_shift(m, shift_by)); };
    auto gtil = [&](const InfMorphism& m) { return inf_shift(apply_to_inf(g, m), -shift_by); };
    auto eta_til = [&](const Complex& x) {
        ChainMap e = extend_nat_trans(eta, x).theta;
        e.target = shift(apply_to_complex(g, apply_to_complex(f, shift(x, shift_by))), -shift_by);
        return iota(e);
    };
    auto eps_til = [&](const Complex& x) {
        ChainMap e = extend_nat_trans(eps, x).theta;
        e.source = apply_to_complex(f, shift(shift(apply_to_complex(g, x), -shift_by), shift_by));
        return iota(e);
    };
    for (int k = 0; k < samples; ++k) {
        const std::string tag = "sample " + std::to_string(k) + ": ";
        const Complex x = random_complex(p, rng, small_params()), y = random_complex(p, rng, small_params());
        ++rep.objects;
        const InfMorphism ex = eta_til(x);
        const Complex fx = apply_to_complex(f, shift(x, shift_by));
        if (!inf_equal(inf_compose(eps_til(fx), ftil(ex)), inf_identity(fx))) rep.failures.push_back(tag + "ε̃F̃ ∘ F̃η̃ ≠ id");
        const Complex gx = shift(apply_to_complex(g, x), -shift_by);
        if (!inf_equal(inf_compose(gtil(eps_til(x)), eta_til(gx)), inf_identity(gx)))
            rep.failures.push_back(tag + "G̃ε̃ ∘ η̃G̃ ≠ id");
        const InfMorphism m = random_inf_morphism(x, y, rng);
        if (!inf_equal(inf_compose(gtil(ftil(m)), ex), inf_compose(eta_til(y), m)))
            rep.failures.push_back(tag + "η̃ is not natural");
    }
    return rep;
}

FunctorSuiteReport functor_suite(const Presentation& p, std::uint64_t seed, std::size_t orders) {
    FunctorSuiteReport rep;
    const Field& fld = p.field();
    const Scalar c = fld.characteristic() == 2 ? fld.one() : fld.from_int(2);
    const Scalar one = fld.one();
    auto fail = [&](const std::string& s) { rep.failures.push_back(s); };
    const HomogeneousFunctor id = identity_functor(p), tw = twist_functor(p, c), zero = zero_functor(p);
    for (const auto* f : {&id, &tw, &zero}) {
        ++rep.functors;
        validate_functor(*f);
    }
    const std::vector<std::pair<std::string, NatTrans>> thetas{
        {"id", identity_nat_trans(id)},
        {"twist->id", twist_nat_trans(p, c, one)},
        {"id->twist", twist_nat_trans(p, one, c)},
        {"zero", zero_nat_trans(tw, id)},
    };
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 6; ++k) {
        const Complex x = random_complex(p, rng, small_params()), y = random_complex(p, rng, small_params());
        const ChainMap f = random_chain_map(x, y, rng);
        const ChainMap g = random_chain_map(y, x, rng);
        for (const auto& [name, t] : thetas) {
            const std::string tag = name + " sample " + std::to_string(k) + ": ";
            ++rep.extensions;
            const NatTransExtension ex = extend_nat_trans(t, x), ey = extend_nat_trans(t, y);
            const bool expect_iso = is_nat_iso(t);
            if (expect_iso && !ex.invertible) fail(tag + "θ_X not invertible for an invertible θ");
            if (name == "zero" && !equal_on_the_nose(ex.theta, zero_map(ex.theta.source, ex.theta.target)))
                fail(tag + "zero θ extends to a nonzero map");
            ++rep.naturality;
            if (!homotopic(compose(ey.theta, apply_to_map(t.from, f)), compose(apply_to_map(t.to, f), ex.theta)))
                fail(tag + "θ is not natural in K^b");
        }
        for (const auto* fn : {&id, &tw, &zero}) {
            ++rep.functoriality;
            if (!equal_on_the_nose(apply_to_map(*fn, compose(g, f)), compose(apply_to_map(*fn, g), apply_to_map(*fn, f))))
                fail("functoriality fails on sample " + std::to_string(k));
            if (!(apply_to_complex(*fn, cone(f).z) == cone(apply_to_map(*fn, f)).z))
                fail("F(cone f) differs from cone(F f) on sample " + std::to_string(k));
            if (!(apply_to_complex(*fn, shift(x, 1)) == shift(apply_to_complex(*fn, x), 1)))
                fail("F(X[1]) differs from F(X)[1] on sample " + std::to_string(k));
        }
    }
    if (!c.is_one()) {
        NatTrans bad{tw, id, thetas[0].second.components};
        bool has_arrow = false;
        for (std::size_t s = 0; s < p.size(); ++s)
            for (std::size_t t = 0; t < p.size(); ++t)
                if (s != t && p.dim(static_cast<int>(s), static_cast<int>(t)) > 0) has_arrow = true;
        if (has_arrow) {
            try {
                extend_nat_trans(bad, Complex(p));
                fail("non-natural θ was accepted");
            } catch (const CheckFailure&) {
            }
        }
    }
    RandomComplexParams probe_params;
    probe_params.lo = -1;
    probe_params.amplitude = 3;
    probe_params.max_multiplicity = 2;
    for (int k = 0; k < 3; ++k) {
        const Complex x = random_complex(p, rng, probe_params);
        const NatTrans& t = thetas[static_cast<std::size_t>(1 + k % 2)].second;
        ++rep.probes;
        const UniquenessProbe pr = nat_trans_uniqueness_probe(t, x, orders, seed + static_cast<std::uint64_t>(k));
        rep.probe_orders += pr.orders;
        for (const auto& s : pr.failures) fail("probe " + std::to_string(k) + ": " + s);
        if (pr.equal != pr.orders) fail("probe " + std::to_string(k) + ": unequal routes");
    }
    for (const auto* fn : {&id, &tw, &zero}) {
        const GenuinenessReport gr = induced_functor_check(*fn, seed, 4);
        for (const auto& s : gr.failures) fail("genuineness: " + s);
    }
    const HomogeneousFunctor tw_inv = twist_functor(p, c.inverse());
    const HomogeneousFunctor both = compose_functors(tw_inv, tw), both2 = compose_functors(tw, tw_inv);
    const NatTrans eta{id, both, identity_nat_trans(id).components};
    const NatTrans eps{both2, id, identity_nat_trans(id).components};
    for (int shift_by : {0, 1, -2}) {
        const InducedAdjunctionReport a = induced_adjunction_check(id, id, identity_nat_trans(id), identity_nat_trans(id),
                                                                   shift_by, seed, 3);
        for (const auto& s : a.failures) fail("identity adjunction [" + std::to_string(shift_by) + "]: " + s);
        const InducedAdjunctionReport b = induced_adjunction_check(tw, tw_inv, eta, eps, shift_by, seed, 3);
        for (const auto& s : b.failures) fail("twist adjunction [" + std::to_string(shift_by) + "]: " + s);
    }
    return rep;
}

} // namespace koszulkit
