#include "gpc/classical.hpp"

#include "gpc/errors.hpp"
#include "gpc/linalg.hpp"

namespace gpc {

CheckReport check_apc(const AlmostParaContact& a) {
    CheckReport report;
    report.subject = "almost para-contact axioms";
    const LieAlgebraContext& ctx = a.ctx;
    const Index n = ctx.dim();
    const auto& fr = ctx.frame_names();

    if (n % 2 == 0)
        throw ContextMismatch("almost para-contact structures live on odd-dimensional contexts");

    auto& phi_e = report.add("apc.phiE");
    RVec pe = a.phi * a.E;
    if (!is_zero(pe)) report.fail(phi_e, "E", vec_str(pe, fr), "0");

    auto& eta_phi = report.add("apc.etaphi");
    RVec ep = a.phi.transpose() * a.eta;
    if (!is_zero(ep)) report.fail(eta_phi, "eta", vec_str(ep, ctx.coframe_names()), "0");

    auto& eta_e = report.add("apc.etaE");
    Rational ee = dot(a.eta, a.E);
    if (!ee.is_one()) report.fail(eta_e, "eta(E)", ee.str(), "1");

    auto& square = report.add("apc.square");
    RMat rhs = RMat::Identity(n, n) - RMat(a.E * a.eta.transpose());
    RMat lhs = a.phi * a.phi;
    for (Index col = 0; col < n && square.pass; ++col) {
        RVec v = RMat(lhs - rhs).col(col);
        if (!is_zero(v))
            report.fail(square, fr[static_cast<size_t>(col)], vec_str(RVec(lhs.col(col)), fr),
                        vec_str(RVec(rhs.col(col)), fr));
    }

    // phi restricted to ker eta must split into +-1 eigenspaces of dimension
    // (n-1)/2 each
    auto& balance = report.add("apc.balance");
    RMat ker_eta = kernel_basis(RMat(a.eta.transpose())); // columns
    auto eigdim = [&](int sign) {
        RMat m = RMat(a.phi * ker_eta);
        if (sign > 0)
            m -= ker_eta;
        else
            m += ker_eta;
        return kernel_basis(m).cols();
    };
    Index plus = eigdim(+1), minus = eigdim(-1);
    if (plus != (n - 1) / 2 || minus != (n - 1) / 2)
        report.fail(balance, "ker eta",
                    "dim(+1) = " + std::to_string(plus) + ", dim(-1) = " + std::to_string(minus),
                    "both " + std::to_string((n - 1) / 2));

    auto& rk = report.add("apc.rank");
    Index r = rank(a.phi);
    if (r != n - 1)
        report.fail(rk, "phi", std::to_string(r), std::to_string(n - 1));

    return report;
}

CheckReport check_normal(const AlmostParaContact& a) {
    CheckReport report;
    report.subject = "classical normality";
    const LieAlgebraContext& ctx = a.ctx;
    const Index n = ctx.dim();
    const auto& fr = ctx.frame_names();

    Form<Rational> d_eta = chevalley_d(ctx, one_form(a.eta));

    auto& nphi = report.add("5.1a");
    for (Index i = 0; i < n && nphi.pass; ++i)
        for (Index j = i + 1; j < n; ++j) {
            RVec x = RVec::Unit(n, i);
            RVec y = RVec::Unit(n, j);
            RVec lhs = nijenhuis_endo(ctx, a.phi, x, y);
            RVec rhs = d_eta.eval(IndexTuple{i, j}) * a.E;
            if (!same(lhs, rhs)) {
                report.fail(nphi,
                            "(" + fr[static_cast<size_t>(i)] + ", " + fr[static_cast<size_t>(j)] + ")",
                            vec_str(lhs, fr), vec_str(rhs, fr));
                break;
            }
        }

    auto& l_eta = report.add("5.1b");
    RVec le = -(ctx.ad(a.E).transpose() * a.eta);
    if (!is_zero(le)) {
        Index w = 0;
        while (le(w).is_zero()) ++w;
        report.fail(l_eta, fr[static_cast<size_t>(w)], vec_str(le, ctx.coframe_names()), "0");
    }

    auto& l_phi = report.add("5.1c");
    RMat lp = lie_derivative(ctx, a.E, a.phi);
    for (Index col = 0; col < n && l_phi.pass; ++col) {
        RVec v = lp.col(col);
        if (!is_zero(v))
            report.fail(l_phi, fr[static_cast<size_t>(col)], vec_str(v, fr), "0");
    }

    return report;
}

GAParacomplexStructure product_J(const AlmostParaContact& a) {
    if (!check_apc(a).passed())
        throw APCViolation("product structure requires a valid almost para-contact structure");
    ExtendedContext ext = central_extension(a.ctx);
    const Index n = a.ctx.dim();
    const Index t = ext.t_axis();
    RMat j = RMat::Zero(n + 1, n + 1);
    j.topLeftCorner(n, n) = a.phi;
    for (Index i = 0; i < n; ++i) {
        j(t, i) = a.eta(i); // eta(X_i) d/dt
        j(i, t) = a.E(i);   // J(d/dt) = E
    }
    return GAParacomplexStructure{std::move(ext.algebra), std::move(j),
                                  Multivector<Rational>(n + 1, 2), Form<Rational>(n + 1, 2)};
}

CheckReport product_J_integrability(const AlmostParaContact& a) {
    GAParacomplexStructure j = product_J(a);
    CheckReport report;
    report.subject = "product-structure integrability";
    const Index m = j.ctx.dim();
    const auto& fr = j.ctx.frame_names();

    auto& invol = report.add("J^2=I");
    RMat defect = j.a * j.a - RMat::Identity(m, m);
    if (!is_zero(defect)) {
        Index col = 0;
        while (is_zero(RVec(defect.col(col)))) ++col;
        report.fail(invol, fr[static_cast<size_t>(col)],
                    vec_str(RVec(RMat(j.a * j.a).col(col)), fr), fr[static_cast<size_t>(col)]);
    }

    auto& nj = report.add("N_J");
    for (Index i = 0; i < m && nj.pass; ++i)
        for (Index k = i + 1; k < m; ++k) {
            RVec val = nijenhuis_endo(j.ctx, j.a, RVec(RVec::Unit(m, i)), RVec(RVec::Unit(m, k)));
            if (!is_zero(val)) {
                report.fail(nj, "(" + fr[static_cast<size_t>(i)] + ", " + fr[static_cast<size_t>(k)] + ")",
                            vec_str(val, fr), "0");
                break;
            }
        }

    return report;
}

GAPContactStructure lift_to_generalized(const AlmostParaContact& a) {
    if (!check_apc(a).passed())
        throw APCViolation("generalized lift requires a valid almost para-contact structure");
    const Index n = a.ctx.dim();
    return GAPContactStructure(a.ctx, a.phi, Multivector<Rational>(n, 2), Form<Rational>(n, 2),
                               a.E, a.eta);
}

} // namespace gpc
