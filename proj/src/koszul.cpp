#include "koszulkit/koszul.hpp"

#include <algorithm>
#include <numeric>

namespace koszulkit {

namespace {

/// Coordinates of a chain map in the chosen basis of a DualPresentation Hom space.
Vector basis_coords(const HomSpace& h, const Matrix& basis_in_h, const ChainMap& f) {
    auto v = solve(basis_in_h, h.coords(f));
    if (!v) throw std::logic_error("chosen basis does not span the Hom space");
    return *v;
}

} // namespace

std::size_t ExtTable::dim(int s, int t, int i) const {
    const HomSpace* g = group(s, t, i);
    return g ? g->dim() : 0;
}

const HomSpace* ExtTable::group(int s, int t, int i) const {
    auto it = groups.find({s, t, i});
    return it == groups.end() ? nullptr : &it->second;
}

ChainMap ExtTable::yoneda_map(int, int, int, int i, int, const ChainMap& x, const ChainMap& y) const {
    return compose(shift(y, i), x);
}

Vector ExtTable::yoneda(int s, int t, int u, int i, int j, const Vector& x, const Vector& y) const {
    const HomSpace* gx = group(s, t, i);
    const HomSpace* gy = group(t, u, j);
    const HomSpace* gz = group(s, u, i + j);
    if (!gx || !gy) throw std::logic_error("yoneda: factor group is zero or outside the window");
    if (!gz) return {};
    return gz->coords(yoneda_map(s, t, u, i, j, gx->element(x), gy->element(y)));
}

ExtTable ext_table(const Presentation& p, ShiftWindow window) {
    ExtTable t;
    t.window = window;
    t.simples = heart_simples(p);
    const int n = static_cast<int>(p.size());
    for (int s = 0; s < n; ++s)
        for (int u = 0; u < n; ++u)
            for (int i = window.first; i <= window.second; ++i) {
                HomSpace h = hom_space(t.simples[static_cast<std::size_t>(s)], t.simples[static_cast<std::size_t>(u)], i);
                if (h.dim() > 0) t.groups.emplace(std::make_tuple(s, u, i), std::move(h));
            }
    return t;
}

KoszulityReport koszulity_check(const Presentation& p, ShiftWindow window, std::uint64_t seed, int samples) {
    KoszulityReport r;
    r.window = window;
    r.violations = mixed_vanishing_report(p, window).violations;
    std::mt19937_64 rng(seed);
    int wmin = p.degree(0), wmax = wmin;
    for (std::size_t s = 0; s < p.size(); ++s) {
        wmin = std::min(wmin, p.degree(static_cast<int>(s)));
        wmax = std::max(wmax, p.degree(static_cast<int>(s)));
    }
    for (int k = 0; k < samples && wmin < wmax; ++k) {
        const Complex m = random_heart_complex(p, rng);
        std::uniform_int_distribution<int> wd(wmin, wmax - 1);
        const int w = wd(rng);
        std::map<int, std::vector<std::size_t>> low;
        for (int i : m.degrees())
            if (i >= -w)
                for (std::size_t t = 0; t < m.term(i).size(); ++t) low[i].push_back(t);
        const SplitTriangle st = split_triangle(m, low);
        ++r.separated_pairs;
        if (hom_space(st.sub, st.quotient, 0).dim() != 0 || hom_space(st.quotient, st.sub, 0).dim() != 0)
            r.separation_failures.push_back("sample " + std::to_string(k) + " weight " + std::to_string(w));
    }
    for (int k = 0; k < samples && wmax - wmin >= 2; ++k) {
        Complex m = random_heart_complex(p, rng);
        std::uniform_int_distribution<int> wd(wmin + 1, wmax - 1);
        const int w = wd(rng);
        m.set_term(-w, {});
        const HeartObject h = to_heart(disguise(m, rng));
        std::map<int, std::vector<std::size_t>> low;
        for (int i : h.normal_form.degrees())
            if (i > -w)
                for (std::size_t t = 0; t < h.normal_form.term(i).size(); ++t) low[i].push_back(t);
        const SplitTriangle st = split_triangle(h.normal_form, low);
        ++r.split_checks;
        if (!st.connecting.comp.empty())
            r.split_failures.push_back("sample " + std::to_string(k) + " missing weight " + std::to_string(w));
    }
    return r;
}

SurrogateReport koszulescence_surrogate(const Presentation& p, ShiftWindow window) {
    SurrogateReport r;
    r.window = window;
    const ExtTable t = ext_table(p, window);
    const int n = static_cast<int>(p.size());
    for (const auto& [key, gz] : t.groups) {
        const auto [s, u, i] = key;
        if (i < 2) continue;
        std::vector<Vector> cols;
        for (int m = 0; m < n; ++m) {
            const HomSpace* gx = t.group(s, m, i - 1);
            const HomSpace* gy = t.group(m, u, 1);
            if (!gx || !gy) continue;
            for (const auto& x : gx->basis())
                for (const auto& y : gy->basis()) cols.push_back(gz.coords(t.yoneda_map(s, m, u, i - 1, 1, x, y)));
        }
        Matrix span(p.field(), gz.dim(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) span.set_column(c, cols[c]);
        SurrogateCell cell{s, u, i, gz.dim(), rank(span)};
        r.cells.push_back(cell);
        if (cell.generated < cell.dim && !r.witness) r.witness = cell;
    }
    return r;
}

DualPresentation presentation_of_objects(const Field& field, const std::vector<NamedObject>& objects) {
    DualPresentation out;
    out.presentation = std::make_shared<Presentation>(field);
    Presentation& q = *out.presentation;
    const int n = static_cast<int>(objects.size());
    for (const auto& o : objects) {
        q.add_object(o.id, o.degree);
        out.objects.push_back(o.x);
    }
    std::map<std::pair<int, int>, HomSpace> spaces;
    std::map<std::pair<int, int>, Matrix> in_h;
    std::map<std::pair<int, int>, std::vector<std::string>> labels;
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            HomSpace h(objects[static_cast<std::size_t>(s)].x, objects[static_cast<std::size_t>(t)].x);
            std::vector<ChainMap> basis;
            std::vector<std::string> names;
            Matrix cols(field, h.dim(), 0);
            if (s == t) {
                const ChainMap id = identity_map(objects[static_cast<std::size_t>(s)].x);
                if (!h.is_zero_class(id)) {
                    basis.push_back(id);
                    names.push_back("1@" + objects[static_cast<std::size_t>(s)].id);
                    cols = Matrix::column(field, h.coords(id));
                }
            }
            for (std::size_t k = 0; k < h.dim(); ++k) {
                const Matrix trial = hstack(cols, Matrix::column(field, h.coords(h.basis()[k])));
                if (rank(trial) == cols.cols()) continue;
                cols = trial;
                basis.push_back(h.basis()[k]);
                names.push_back(objects[static_cast<std::size_t>(s)].id + ">" + objects[static_cast<std::size_t>(t)].id +
                                "#" + std::to_string(basis.size() - 1));
            }
            q.set_basis(s, t, names);
            out.basis.emplace(std::make_pair(s, t), std::move(basis));
            labels.emplace(std::make_pair(s, t), std::move(names));
            in_h.emplace(std::make_pair(s, t), std::move(cols));
            spaces.emplace(std::make_pair(s, t), std::move(h));
        }
    q.finalize();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const auto& bx = out.basis.at({b, c});
                const auto& by = out.basis.at({a, b});
                const HomSpace& hz = spaces.at({a, c});
                const Matrix& mz = in_h.at({a, c});
                for (std::size_t x = 0; x < bx.size(); ++x)
                    for (std::size_t y = 0; y < by.size(); ++y)
                        q.set_product(labels.at({b, c})[x], labels.at({a, b})[y],
                                      basis_coords(hz, mz, compose(bx[x], by[y])));
            }
    return out;
}

DualPresentation orl_of_kos(const Presentation& p) {
    std::vector<NamedObject> objs;
    for (std::size_t s = 0; s < p.size(); ++s) {
        const int i = static_cast<int>(s);
        // S[deg S] shifted by -wt sits in degree 0
        const Complex l = shift(heart_simple(p, i), -p.degree(i));
        objs.push_back({p.object(i).id, p.degree(i), l});
    }
    return presentation_of_objects(p.field(), objs);
}

Matrix roundtrip_change_of_basis(const Presentation& p, const DualPresentation& q, int s, int t) {
    const auto& basis = q.basis.at({s, t});
    Matrix b(p.field(), p.dim(s, t), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const AddMorphism m = basis[k].at(0);
        if (m.source() != AddObject{{s}} || m.target() != AddObject{{t}})
            throw InputError("roundtrip: dual objects are not the indecomposables in degree 0");
        b.set_column(k, m.coords());
    }
    auto inv = inverse(b);
    if (!inv) throw CheckFailure("roundtrip: Hom(" + p.object(s).id + "," + p.object(t).id + ") bases do not match");
    return *inv;
}

RoundtripReport roundtrip_compare(const Presentation& p, const DualPresentation& q) {
    RoundtripReport r;
    const Presentation& d = *q.presentation;
    const int n = static_cast<int>(p.size());
    r.degrees_match = d.size() == p.size();
    r.dims_match = r.degrees_match;
    for (int s = 0; s < n && r.degrees_match; ++s)
        if (d.degree(s) != p.degree(s) || d.object(s).id != p.object(s).id) r.degrees_match = false;
    for (int s = 0; s < n && r.dims_match; ++s)
        for (int t = 0; t < n; ++t)
            if (d.dim(s, t) != p.dim(s, t)) r.dims_match = false;
    if (!r.degrees_match || !r.dims_match) return r;
    std::map<std::pair<int, int>, Matrix> c;
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) c.emplace(std::make_pair(s, t), roundtrip_change_of_basis(p, q, s, t));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int cc = 0; cc < n; ++cc)
                for (std::size_t x = 0; x < p.dim(b, cc); ++x)
                    for (std::size_t y = 0; y < p.dim(a, b); ++y) {
                        ++r.checked;
                        Vector prod = p.field().zeros(p.dim(a, cc));
                        for (std::size_t z = 0; z < prod.size(); ++z) prod[z] = p.product(a, b, cc, x, y, z);
                        const Vector lhs = c.at({a, cc}) * prod;
                        const Matrix& cx = c.at({b, cc});
                        const Matrix& cy = c.at({a, b});
                        Vector rhs = p.field().zeros(p.dim(a, cc));
                        for (std::size_t x2 = 0; x2 < d.dim(b, cc); ++x2)
                            for (std::size_t y2 = 0; y2 < d.dim(a, b); ++y2) {
                                const Scalar w = cx.at(x2, x) * cy.at(y2, y);
                                if (w.is_zero()) continue;
                                for (std::size_t z = 0; z < rhs.size(); ++z) rhs[z] += w * d.product(a, b, cc, x2, y2, z);
                            }
                        if (lhs != rhs && !r.witness)
                            r.witness = std::make_tuple(p.basis(b, cc)[x], p.basis(a, b)[y],
                                                        p.object(a).id + "," + p.object(b).id + "," + p.object(cc).id);
                    }
    return r;
}

RoundtripReport roundtrip_check(const Presentation& p) { return roundtrip_compare(p, orl_of_kos(p)); }

Complex q_functor(const HeartObject& m, const DualPresentation& orl) {
    const Complex& x = m.normal_form;
    const Presentation& p = x.cat();
    const Presentation& q = *orl.presentation;
    for (const auto& pt : support(x))
        if (pt.first + pt.second != 0) throw InputError("q_functor: object is not in antidiagonal normal form");
    Complex out(q);
    for (int i : x.degrees()) out.set_term(i, x.term(i));
    std::map<std::pair<int, int>, Matrix> c;
    for (int i : x.degrees()) {
        if (x.term(i + 1).empty()) continue;
        const AddMorphism d = x.d(i);
        AddMorphism e(q, x.term(i), x.term(i + 1));
        for (std::size_t r = 0; r < d.target().size(); ++r)
            for (std::size_t col = 0; col < d.source().size(); ++col) {
                const int s = d.source()[col], t = d.target()[r];
                if (d.block_dim(r, col) == 0) continue;
                auto it = c.find({s, t});
                if (it == c.end()) it = c.emplace(std::make_pair(s, t), roundtrip_change_of_basis(p, orl, s, t)).first;
                Vector v(d.coords().begin() + static_cast<std::ptrdiff_t>(d.offset(r, col)),
                         d.coords().begin() + static_cast<std::ptrdiff_t>(d.offset(r, col) + d.block_dim(r, col)));
                const Vector w = it->second * v;
                for (std::size_t k = 0; k < w.size(); ++k) e.coord(r, col, k) = w[k];
            }
        out.set_d(i, std::move(e));
    }
    out.check();
    return out;
}

std::vector<InjectiveCandidate> injective_detect(const Presentation& p, ShiftWindow, std::size_t length_bound) {
    std::vector<InjectiveCandidate> out;
    const auto simples = heart_simples(p);
    const int n = static_cast<int>(p.size());
    for (int s = 0; s < n; ++s) {
        InjectiveCandidate cand;
        Complex j = simples[static_cast<std::size_t>(s)];
        cand.length = 1;
        while (true) {
            std::vector<Complex> parts;
            std::vector<std::vector<std::optional<ChainMap>>> blocks(1);
            std::size_t added = 0;
            for (int m = 0; m < n; ++m) {
                const HomSpace h = hom_space(simples[static_cast<std::size_t>(m)], j, 1);
                for (const auto& b : h.basis()) {
                    parts.push_back(simples[static_cast<std::size_t>(m)]);
                    blocks[0].push_back(b);
                    ++added;
                }
            }
            if (added == 0) {
                cand.found = true;
                break;
            }
            if (cand.length + added > length_bound) {
                cand.note = "length bound " + std::to_string(length_bound) + " reached";
                break;
            }
            const ChainMap xi = block_map(parts, {shift(j, 1)}, blocks);
            j = to_heart(shift(cone(xi).z, -1)).normal_form;
            cand.length += added;
        }
        cand.j = j;
        if (cand.found) {
            std::size_t socle_dim = 0;
            for (int m = 0; m < n; ++m) {
                const std::size_t d = hom_space(simples[static_cast<std::size_t>(m)], j, 0).dim();
                socle_dim += d;
                if (d > 0) cand.socle = m;
            }
            if (socle_dim != 1) {
                cand.found = false;
                cand.note = "socle is not simple";
            } else {
                cand.degree = -p.degree(cand.socle);
            }
        }
        out.push_back(std::move(cand));
    }
    return out;
}

DualPresentation koszul_dual(const Presentation& p, ShiftWindow window, std::size_t length_bound) {
    const auto inj = injective_detect(p, window, length_bound);
    std::vector<NamedObject> objs;
    for (const auto& c : inj) {
        if (!c.found) throw CheckFailure("injective hull of " + p.object(static_cast<int>(objs.size())).id +
                                         " not found: " + c.note);
        objs.push_back({"I(" + p.object(c.socle).id + ")", c.degree, c.j});
    }
    DualPresentation d = presentation_of_objects(p.field(), objs);
    const ValidationReport v = validate_presentation(*d.presentation);
    if (!v.valid()) {
        const auto& issue = v.malformed.empty() ? v.violations.front() : v.malformed.front();
        throw CheckFailure("dual presentation is not Orlov: " + issue.message);
    }
    return d;
}

std::vector<std::vector<std::size_t>> ext1_matrix(const Presentation& p) {
    const auto simples = heart_simples(p);
    std::vector<std::vector<std::size_t>> e(p.size(), std::vector<std::size_t>(p.size(), 0));
    for (std::size_t s = 0; s < p.size(); ++s)
        for (std::size_t t = 0; t < p.size(); ++t) e[s][t] = hom_space(simples[s], simples[t], 1).dim();
    return e;
}

DoubleDualReport double_dual_check(const Presentation& p, ShiftWindow window, std::size_t length_bound) {
    DoubleDualReport r;
    const DualPresentation d = koszul_dual(p, window, length_bound);
    r.original = ext1_matrix(p);
    r.dual = ext1_matrix(*d.presentation);
    const std::size_t n = p.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (bool transpose : {false, true}) {
        std::sort(perm.begin(), perm.end());
        do {
            bool ok = true;
            for (std::size_t s = 0; s < n && ok; ++s)
                for (std::size_t t = 0; t < n && ok; ++t) {
                    const auto ps = static_cast<std::size_t>(perm[s]), pt = static_cast<std::size_t>(perm[t]);
                    ok = r.original[s][t] == (transpose ? r.dual[pt][ps] : r.dual[ps][pt]);
                }
            if (ok) {
                r.matching = perm;
                r.transposed = transpose;
                return r;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return r;
}

std::vector<std::vector<std::size_t>> hom_dimension_table(const Presentation& p) {
    std::vector<int> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return p.degree(a) > p.degree(b); });
    std::vector<std::vector<std::size_t>> t(p.size(), std::vector<std::size_t>(p.size(), 0));
    for (std::size_t r = 0; r < order.size(); ++r)
        for (std::size_t c = 0; c < order.size(); ++c) t[r][c] = p.dim(order[r], order[c]);
    return t;
}

} // namespace koszulkit
