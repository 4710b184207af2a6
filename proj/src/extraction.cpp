#include "koszulkit/extraction.hpp"

#include <map>

namespace koszulkit {

namespace {

std::vector<std::size_t> all_positions(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = k;
    return v;
}

} // namespace

HomogeneousCokernel homogeneous_cokernel(const AddMorphism& f) {
    const auto& p = f.cat();
    const Field& fld = p.field();
    const AddObject& a = f.source();
    const AddObject& b = f.target();
    if (!b.empty() && !is_homogeneous(p, b, p.degree(b[0])))
        throw InputError("homogeneous_cokernel: target is not homogeneous");

    std::map<int, std::vector<std::size_t>> iso;
    for (std::size_t k = 0; k < b.size(); ++k) iso[b[k]].push_back(k);

    struct Part {
        int s;
        std::vector<std::size_t> pos;
        Matrix e, c, minv;
    };
    std::vector<Part> parts;
    for (const auto& [s, pos] : iso) {
        const AddObject so{{s}};
        const std::size_t hd = hom_dim(p, a, so);
        Matrix m(fld, pos.size(), hd);
        for (std::size_t k = 0; k < pos.size(); ++k) {
            const AddMorphism row = restrict_morphism(f, {pos[k]}, all_positions(a.size()));
            for (std::size_t t = 0; t < hd; ++t) m.at(k, t) = row.coords()[t];
        }
        const Matrix e = kernel_basis(m.transpose()).transpose();
        // complete the rows of e to a basis with standard vectors
        Matrix c(fld, 0, pos.size());
        Matrix acc = e;
        for (std::size_t k = 0; k < pos.size() && acc.rows() < pos.size(); ++k) {
            Matrix unit(fld, 1, pos.size());
            unit.at(0, k) = fld.one();
            const Matrix trial = vstack(acc, unit);
            if (rank(trial) > acc.rows()) {
                acc = trial;
                c = vstack(c, unit);
            }
        }
        const Matrix full = vstack(c, e);
        parts.push_back({s, pos, e, c, *inverse(full)});
    }

    HomogeneousCokernel out;
    for (const auto& pt : parts) {
        for (std::size_t k = 0; k < pt.c.rows(); ++k) out.complement.summands.push_back(pt.s);
        for (std::size_t k = 0; k < pt.e.rows(); ++k) out.q_object.summands.push_back(pt.s);
    }
    const AddObject qq = concat(out.complement, out.q_object);
    out.q = AddMorphism(p, b, out.q_object);
    out.u = AddMorphism(p, qq, b);
    std::size_t qoff = 0, coff = 0;
    const std::size_t nc = out.complement.size();
    for (const auto& pt : parts) {
        const std::size_t m = pt.pos.size(), r = pt.e.rows(), cr = pt.c.rows();
        for (std::size_t t = 0; t < r; ++t)
            for (std::size_t k = 0; k < m; ++k)
                if (!pt.e.at(t, k).is_zero()) out.q.coord(qoff + t, pt.pos[k], 0) = pt.e.at(t, k);
        // columns of minv: first the complement rows, then the e rows
        for (std::size_t k = 0; k < m; ++k) {
            for (std::size_t t = 0; t < cr; ++t)
                if (!pt.minv.at(k, t).is_zero()) out.u.coord(pt.pos[k], coff + t, 0) = pt.minv.at(k, t);
            for (std::size_t t = 0; t < r; ++t)
                if (!pt.minv.at(k, cr + t).is_zero())
                    out.u.coord(pt.pos[k], nc + qoff + t, 0) = pt.minv.at(k, cr + t);
        }
        qoff += r;
        coff += cr;
    }
    if (!compose(out.q, f).is_zero()) throw std::logic_error("homogeneous_cokernel: q ∘ f != 0");
    return out;
}

AddMorphism coker_idempotent(const AddMorphism& f) {
    const HomogeneousCokernel hc = homogeneous_cokernel(f);
    const std::size_t nc = hc.complement.size(), nq = hc.q_object.size();
    std::vector<std::size_t> qcols(nq);
    for (std::size_t k = 0; k < nq; ++k) qcols[k] = nc + k;
    const AddMorphism uq = restrict_morphism(hc.u, all_positions(hc.u.target().size()), qcols);
    return compose(uq, hc.q);
}

TopExtraction top_extraction(const Complex& x, const Support& sigma_in) {
    const Support supp = support(x);
    const Support sigma = sigma_in.empty() ? supp : sigma_in;
    for (const auto& pt : supp)
        if (!sigma.count(pt))
            throw InputError("top_extraction: support point (" + std::to_string(pt.first) + "," +
                             std::to_string(pt.second) + ") lies outside the given set");
    TopExtraction out;
    if (sigma.empty()) {
        out.point = {0, 0};
        out.triangle = split_triangle(x, {});
    } else {
        out.point = *sigma.rbegin();
        const auto [i, j] = out.point;
        std::vector<std::size_t> pos;
        const auto& t = x.term(i);
        for (std::size_t k = 0; k < t.size(); ++k)
            if (x.cat().degree(t[k]) == j) pos.push_back(k);
        out.triangle = split_triangle(x, {{i, pos}});
    }
    out.p = out.triangle.sub;
    out.y = out.triangle.quotient;
    // delta^k = -(connecting)^{k-1} viewed from Y[-1]
    const Complex ym1 = shift(out.y, -1);
    out.delta = ChainMap{ym1, out.p, {}};
    for (const auto& [k, m] : out.triangle.connecting.comp) out.delta.set(k + 1, -m);
    if (!is_chain_map(out.delta)) throw std::logic_error("top_extraction: delta is not a chain map");
    return out;
}

FillResult unique_fill(const ChainMap& a, const ChainMap& b, const ChainMap& a2, const ChainMap& b2,
                       const ChainMap& p, const ChainMap& r) {
    const Complex& pc = a.source;
    const Complex& xc = a.target;
    const Complex& x2 = a2.target;
    const Complex& y2 = b2.target;
    const Field& fld = xc.cat().field();
    const Scalar minus = -fld.one();
    const GradedLayout q0 = graded_layout(xc, x2, 0), q1 = graded_layout(xc, x2, 1), qm1 = graded_layout(xc, x2, -1);
    const GradedLayout p0 = graded_layout(pc, x2, 0), pm1 = graded_layout(pc, x2, -1);
    const GradedLayout y0 = graded_layout(xc, y2, 0), ym1 = graded_layout(xc, y2, -1);
    BlockSystem sys(fld);
    const auto uq = sys.add_unknown(q0.total);
    const auto uh1 = sys.add_unknown(pm1.total);
    const auto uh2 = sys.add_unknown(ym1.total);
    const auto e_chain = sys.add_equation(q1.total);
    const auto e_left = sys.add_equation(p0.total);
    const auto e_right = sys.add_equation(y0.total);
    sys.add(e_chain, uq, chain_condition_matrix(xc, x2, q0, q1));
    sys.add(e_left, uq, precompose_family_matrix(a, x2));
    sys.add(e_left, uh1, boundary_matrix(pc, x2, pm1, p0).scaled(minus));
    sys.set_rhs(e_left, flatten(compose(a2, p).comp, pc, x2, p0));
    sys.add(e_right, uq, postcompose_family_matrix(b2, xc));
    sys.add(e_right, uh2, boundary_matrix(xc, y2, ym1, y0).scaled(minus));
    sys.set_rhs(e_right, flatten(compose(r, b).comp, xc, y2, y0));

    FillResult out;
    auto sol = sys.solve();
    if (!sol) {
        out.witness = "no fill exists: the input diagram is inconsistent";
        return out;
    }
    out.q = ChainMap{xc, x2, unflatten(sys.part(*sol, uq), xc, x2, q0)};
    const Matrix kq = sys.part_rows(sys.kernel(), uq);
    const Matrix bm = boundary_matrix(xc, x2, qm1, q0);
    const std::size_t rb = rank(bm);
    out.fill_space_dim = rank(hstack(kq, bm)) - rb;
    out.unique = out.fill_space_dim == 0;
    if (!out.unique)
        out.witness = "homogeneous fills modulo homotopy have dimension " + std::to_string(out.fill_space_dim);
    return out;
}

CompletedSquare complete_square(const ChainMap& f, const ChainMap& i, const ChainMap& p, const ChainMap& q,
                                const std::optional<Homotopy>& h_in) {
    const ChainMap diff = subtract(compose(q, f), compose(i, p));
    Homotopy h;
    if (h_in) {
        h = *h_in;
        if (!equal_on_the_nose(boundary_of(h), diff))
            throw CheckFailure("complete_square: supplied homotopy does not witness the square");
    } else {
        auto solved = is_null_homotopic(diff);
        if (!solved) throw CheckFailure("complete_square: square does not commute up to homotopy");
        h = std::move(*solved);
    }
    const auto& cat = f.source.cat();
    const Cone c1 = cone(f), c2 = cone(i);
    ChainMap r{c1.z, c2.z, {}};
    for (int k : c1.z.degrees()) {
        const AddObject& src = c1.z.term(k);
        const AddObject& tgt = c2.z.term(k);
        if (tgt.empty()) continue;
        AddMorphism m(cat, src, tgt);
        const std::size_t nx = f.source.term(k + 1).size(), ny = f.target.term(k).size();
        const std::size_t nx2 = i.source.term(k + 1).size(), ny2 = i.target.term(k).size();
        std::vector<std::size_t> sx(nx), sy(ny), tx(nx2), ty(ny2);
        for (std::size_t t = 0; t < nx; ++t) sx[t] = t;
        for (std::size_t t = 0; t < ny; ++t) sy[t] = nx + t;
        for (std::size_t t = 0; t < nx2; ++t) tx[t] = t;
        for (std::size_t t = 0; t < ny2; ++t) ty[t] = nx2 + t;
        place_morphism(m, p.at(k + 1), tx, sx);
        place_morphism(m, h.at(k + 1), ty, sx);
        place_morphism(m, q.at(k), ty, sy);
        r.set(k, std::move(m));
    }
    if (!is_chain_map(r)) throw std::logic_error("complete_square: completion is not a chain map");
    return {r, h};
}

} // namespace koszulkit
