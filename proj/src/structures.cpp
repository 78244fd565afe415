#include "gpc/structures.hpp"

#include "gpc/errors.hpp"
#include "gpc/linalg.hpp"

namespace gpc {

GAPContactStructure::GAPContactStructure(LieAlgebraContext c, RMat f, Multivector<Rational> p,
                                         Form<Rational> s, RVec z, RVec x)
    : ctx(std::move(c)), F(std::move(f)), pi(std::move(p)), sigma(std::move(s)), Z(std::move(z)),
      xi(std::move(x)) {
    ctx.require_dim(F.rows());
    ctx.require_dim(F.cols());
    ctx.require_dim(pi.dim);
    ctx.require_dim(sigma.dim);
    ctx.require_dim(Z.size());
    ctx.require_dim(xi.size());
    if (pi.degree != 2 || sigma.degree != 2)
        throw std::invalid_argument("pi must be a bivector and sigma a 2-form");
}

std::vector<std::string> stacked_names(const LieAlgebraContext& ctx) {
    std::vector<std::string> names = ctx.frame_names();
    names.insert(names.end(), ctx.coframe_names().begin(), ctx.coframe_names().end());
    return names;
}

RMat assemble_F(const GAPContactStructure& s) {
    const Index n = s.ctx.dim();
    RMat pi_m = as_matrix(s.pi);
    RMat sg_m = as_matrix(s.sigma);
    RMat out = RMat::Zero(2 * n, 2 * n);
    out.topLeftCorner(n, n) = s.F;
    out.topRightCorner(n, n) = pi_m.transpose();   // pi_sharp
    out.bottomLeftCorner(n, n) = sg_m.transpose(); // sigma_flat
    out.bottomRightCorner(n, n) = RMat(-s.F.transpose());
    return out;
}

RMat assemble_Z(const GAPContactStructure& s) {
    const Index n = s.ctx.dim();
    RMat out = RMat::Zero(2 * n, 2 * n);
    out.topLeftCorner(n, n) = s.Z * s.xi.transpose();
    out.bottomRightCorner(n, n) = s.xi * s.Z.transpose();
    return out;
}

RMat GAParacomplexStructure::jmatrix() const {
    const Index n = ctx.dim();
    RMat pi_m = as_matrix(pi);
    RMat th_m = as_matrix(theta);
    RMat out = RMat::Zero(2 * n, 2 * n);
    out.topLeftCorner(n, n) = a;
    out.topRightCorner(n, n) = pi_m.transpose();
    out.bottomLeftCorner(n, n) = th_m.transpose();
    out.bottomRightCorner(n, n) = RMat(-a.transpose());
    return out;
}

namespace {

RSection stacked_unit(Index two_n, Index i) {
    return RSection::from_stacked(RVec(RVec::Unit(two_n, i)));
}

/// Pairing Gram matrix without the 1/2 factor: g(u,v) = u^T G v.
RMat neutral_gram(Index n) {
    RMat g = RMat::Zero(2 * n, 2 * n);
    g.topRightCorner(n, n) = RMat::Identity(n, n);
    g.bottomLeftCorner(n, n) = RMat::Identity(n, n);
    return g;
}

std::string rvec_or_zero(const RVec& v, const std::vector<std::string>& names) {
    return vec_str(v, names);
}

} // namespace

CheckReport check_def1(const GAPContactStructure& s) {
    CheckReport report;
    report.subject = "definition-1 axioms";
    const Index n = s.ctx.dim();
    const auto names = stacked_names(s.ctx);
    RMat ff = assemble_F(s);
    RMat zz = assemble_Z(s);

    auto& skew = report.add("3.1a");
    RMat g = neutral_gram(n);
    RMat skew_defect = g * ff + ff.transpose() * g;
    for (Index i = 0; i < 2 * n && skew.pass; ++i)
        for (Index j = 0; j < 2 * n; ++j)
            if (!skew_defect(i, j).is_zero()) {
                report.fail(skew, "(" + names[static_cast<size_t>(i)] + ", " + names[static_cast<size_t>(j)] + ")",
                            skew_defect(i, j).str(), "0");
                break;
            }

    auto& unit = report.add("3.1b");
    Rational xi_z = dot(s.xi, s.Z);
    if (!xi_z.is_one())
        report.fail(unit, "xi(Z)", xi_z.str(), "1");

    auto& kills_z = report.add("3.2a");
    RSection fz = apply_endo(ff, RSection::vector(s.Z));
    if (!fz.is_zero_section())
        report.fail(kills_z, "Z", section_str(fz, s.ctx), "0");

    auto& kills_xi = report.add("3.2b");
    RSection fxi = apply_endo(ff, RSection::one_form(s.xi));
    if (!fxi.is_zero_section())
        report.fail(kills_xi, "xi", section_str(fxi, s.ctx), "0");

    auto& square = report.add("3.3");
    RMat defect = ff * ff - (RMat::Identity(2 * n, 2 * n) - zz);
    for (Index j = 0; j < 2 * n && square.pass; ++j) {
        RVec col = defect.col(j);
        if (!is_zero(col)) {
            RSection got = apply_endo(RMat(ff * ff), stacked_unit(2 * n, j));
            RSection want = apply_endo(RMat(RMat::Identity(2 * n, 2 * n) - zz), stacked_unit(2 * n, j));
            report.fail(square, names[static_cast<size_t>(j)], section_str(got, s.ctx),
                        section_str(want, s.ctx));
        }
    }

    return report;
}

GAParacomplexStructure adapted_lift(const GAPContactStructure& s) {
    if (!check_def1(s).passed())
        throw Def1Violation("adapted lift requires a structure satisfying the definition-1 axioms");
    ExtendedContext ext = central_extension(s.ctx);
    const Index n = s.ctx.dim();
    const Index t = ext.t_axis();

    RMat a = RMat::Zero(n + 1, n + 1);
    a.topLeftCorner(n, n) = s.F;

    // pi + (d/dt) ^ Z and sigma + xi ^ dt; this sign split is the one that
    // squares to the identity and stays orthogonal for the pairing.
    Multivector<Rational> pi_e(n + 1, 2);
    for (size_t r = 0; r < s.pi.tuples.size(); ++r)
        pi_e.coeff(s.pi.tuples[r]) = s.pi.comp(static_cast<Index>(r));
    for (Index i = 0; i < n; ++i)
        if (!s.Z(i).is_zero()) pi_e.add_term(IndexTuple{t, i}, s.Z(i));

    Form<Rational> theta_e(n + 1, 2);
    for (size_t r = 0; r < s.sigma.tuples.size(); ++r)
        theta_e.coeff(s.sigma.tuples[r]) = s.sigma.comp(static_cast<Index>(r));
    for (Index i = 0; i < n; ++i)
        if (!s.xi(i).is_zero()) theta_e.add_term(IndexTuple{i, t}, s.xi(i));

    return GAParacomplexStructure{std::move(ext.algebra), std::move(a), std::move(pi_e),
                                  std::move(theta_e)};
}

CheckReport check_paracomplex(const GAParacomplexStructure& j) {
    CheckReport report;
    report.subject = "paracomplex-structure axioms";
    const Index n = j.ctx.dim();
    const auto names = stacked_names(j.ctx);
    RMat jm = j.jmatrix();

    auto& invol = report.add("J^2=I");
    RMat defect = jm * jm - RMat::Identity(2 * n, 2 * n);
    for (Index col = 0; col < 2 * n && invol.pass; ++col) {
        RVec v = defect.col(col);
        if (!is_zero(v)) {
            RSection got = apply_endo(RMat(jm * jm), stacked_unit(2 * n, col));
            report.fail(invol, names[static_cast<size_t>(col)], section_str(got, j.ctx),
                        names[static_cast<size_t>(col)]);
        }
    }

    auto& proper = report.add("J!=I");
    if (same(jm, RMat(RMat::Identity(2 * n, 2 * n))))
        report.fail(proper, "J", "I", "any involution other than the identity");

    auto& ortho = report.add("2.0");
    RMat g = neutral_gram(n);
    RMat skew_defect = g * jm + jm.transpose() * g;
    for (Index i = 0; i < 2 * n && ortho.pass; ++i)
        for (Index k = 0; k < 2 * n; ++k)
            if (!skew_defect(i, k).is_zero()) {
                report.fail(ortho, "(" + names[static_cast<size_t>(i)] + ", " + names[static_cast<size_t>(k)] + ")",
                            skew_defect(i, k).str(), "0");
                break;
            }

    return report;
}

CheckReport check_integrability_gapx(const GAParacomplexStructure& j) {
    CheckReport report = check_paracomplex(j);
    report.subject = "paracomplex integrability";
    const Index n = j.ctx.dim();
    const auto names = stacked_names(j.ctx);
    RMat jm = j.jmatrix();

    auto& integ = report.add("2.2");
    for (Index i = 0; i < 2 * n && integ.pass; ++i)
        for (Index k = i + 1; k < 2 * n; ++k) {
            RSection u = stacked_unit(2 * n, i);
            RSection v = stacked_unit(2 * n, k);
            RSection nij = gen_nijenhuis(j.ctx, jm, u, v);
            if (!nij.is_zero_section()) {
                report.fail(integ, "(" + names[static_cast<size_t>(i)] + ", " + names[static_cast<size_t>(k)] + ")",
                            section_str(nij, j.ctx), "0");
                break;
            }
        }

    return report;
}

namespace {

/// d of a possibly non-antisymmetric invariant bilinear (0,2) tensor, via the
/// cyclic frame formula dT(X,Y,W) = -T([X,Y],W) + T([X,W],Y) - T([Y,W],X);
/// agrees with the exterior derivative when T is a 2-form.
Rational cyclic_d(const LieAlgebraContext& ctx, const RMat& t, Index i, Index j, Index k) {
    // T(v, e_m) = v^T T e_m
    auto tvm = [&](const RVec& v, Index m) {
        Rational acc(0);
        for (Index p = 0; p < ctx.dim(); ++p) acc += v(p) * t(p, m);
        return acc;
    };
    return -tvm(ctx.bracket(i, j), k) + tvm(ctx.bracket(i, k), j) - tvm(ctx.bracket(j, k), i);
}

} // namespace

CheckReport normality_thm31(const GAPContactStructure& s) {
    CheckReport report;
    report.subject = "normality via classical tensor fields";
    const LieAlgebraContext& ctx = s.ctx;
    const Index n = ctx.dim();
    const auto& fr = ctx.frame_names();
    const auto& co = ctx.coframe_names();

    auto coframe_pair = [&](Index a, Index b) {
        return "(" + co[static_cast<size_t>(a)] + ", " + co[static_cast<size_t>(b)] + ")";
    };
    auto frame_pair = [&](Index a, Index b) {
        return "(" + fr[static_cast<size_t>(a)] + ", " + fr[static_cast<size_t>(b)] + ")";
    };

    // A1: [P#a, P#b] = P#([a, b]_P)
    auto& a1 = report.add("A1");
    for (Index a = 0; a < n && a1.pass; ++a)
        for (Index b = a + 1; b < n; ++b) {
            RVec alpha = RVec::Unit(n, a);
            RVec beta = RVec::Unit(n, b);
            RVec lhs = ctx.bracket(RVec(sharp(s.pi, alpha)), RVec(sharp(s.pi, beta)));
            RVec rhs = sharp(s.pi, RVec(koszul(ctx, s.pi, alpha, beta)));
            if (!same(lhs, rhs)) {
                report.fail(a1, coframe_pair(a, b), rvec_or_zero(lhs, fr), rvec_or_zero(rhs, fr));
                break;
            }
        }

    // A2 first formula: F P# = P# F*
    auto& a21 = report.add("A2.1");
    RMat pi_sharp = as_matrix(s.pi).transpose();
    RMat a2_defect = s.F * pi_sharp - pi_sharp * s.F.transpose();
    for (Index col = 0; col < n && a21.pass; ++col) {
        RVec v = a2_defect.col(col);
        if (!is_zero(v))
            report.fail(a21, co[static_cast<size_t>(col)],
                        rvec_or_zero(RVec(RMat(s.F * pi_sharp).col(col)), fr),
                        rvec_or_zero(RVec(RMat(pi_sharp * s.F.transpose()).col(col)), fr));
    }

    // A2 second formula: F*([a,b]_P) = L_{P#a} F*b - L_{P#b} F*a + d P(b, F*a)
    auto& a22 = report.add("A2.2");
    for (Index a = 0; a < n && a22.pass; ++a)
        for (Index b = a + 1; b < n; ++b) {
            RVec alpha = RVec::Unit(n, a);
            RVec beta = RVec::Unit(n, b);
            RVec lhs = s.F.transpose() * koszul(ctx, s.pi, alpha, beta);
            RVec pa = sharp(s.pi, alpha);
            RVec pb = sharp(s.pi, beta);
            RVec fsb = s.F.transpose() * beta;
            RVec fsa = s.F.transpose() * alpha;
            RVec rhs = RVec(-(ctx.ad(pa).transpose() * fsb)) - RVec(-(ctx.ad(pb).transpose() * fsa));
            std::vector<RVec> args{beta, fsa};
            rhs += chevalley_d_scalar(ctx, s.pi.eval_on(args)).comp;
            if (!same(lhs, rhs)) {
                report.fail(a22, coframe_pair(a, b), rvec_or_zero(lhs, co), rvec_or_zero(rhs, co));
                break;
            }
        }

    // A3: i_Z sigma = 0, i_xi P = 0, F^2 = Id - P# sigma_flat - xi (x) Z, and
    // N_F(X,Y) = P#(d sigma(X,Y,.)) - d xi(X,Y) Z
    auto& a31 = report.add("A3.1");
    RVec i_z_sigma = flat(s.sigma, s.Z);
    if (!is_zero(i_z_sigma)) report.fail(a31, "Z", rvec_or_zero(i_z_sigma, co), "0");

    auto& a32 = report.add("A3.2");
    RVec i_xi_p = sharp(s.pi, s.xi);
    if (!is_zero(i_xi_p)) report.fail(a32, "xi", rvec_or_zero(i_xi_p, fr), "0");

    auto& a33 = report.add("A3.3");
    RMat sigma_flat = as_matrix(s.sigma).transpose();
    RMat rhs33 = RMat::Identity(n, n) - RMat(pi_sharp * sigma_flat) - RMat(s.Z * s.xi.transpose());
    RMat lhs33 = s.F * s.F;
    for (Index col = 0; col < n && a33.pass; ++col) {
        RVec v = RMat(lhs33 - rhs33).col(col);
        if (!is_zero(v))
            report.fail(a33, fr[static_cast<size_t>(col)], rvec_or_zero(RVec(lhs33.col(col)), fr),
                        rvec_or_zero(RVec(rhs33.col(col)), fr));
    }

    // N_F(X,Y) = P#(d sigma(X,Y,.)) + d xi(X,Y) Z; the sign of the reeb term
    // is the one forced by the non-normalized exterior derivative, pinned by
    // the agreement with the adapted lift's integrability
    auto& a34 = report.add("A3.4");
    Form<Rational> d_sigma = chevalley_d(ctx, s.sigma);
    Form<Rational> d_xi = chevalley_d(ctx, one_form(s.xi));
    for (Index i = 0; i < n && a34.pass; ++i)
        for (Index j = i + 1; j < n; ++j) {
            RVec x = RVec::Unit(n, i);
            RVec y = RVec::Unit(n, j);
            RVec lhs = nijenhuis_endo(ctx, s.F, x, y);
            RVec rhs = sharp(s.pi, RVec(interior_pair(d_sigma, x, y)));
            rhs += RVec(d_xi.eval(IndexTuple{i, j}) * s.Z);
            if (!same(lhs, rhs)) {
                report.fail(a34, frame_pair(i, j), rvec_or_zero(lhs, fr), rvec_or_zero(rhs, fr));
                break;
            }
        }

    // A4: F Z = 0, xi o F = 0, (L_{FX} xi) Y - (L_{FY} xi) X = 0, and the
    // companion identity for d(sigma_F) with sigma_F(X, Y) = sigma(FX, Y)
    auto& a41 = report.add("A4.1");
    RVec f_z = s.F * s.Z;
    if (!is_zero(f_z)) report.fail(a41, "Z", rvec_or_zero(f_z, fr), "0");

    auto& a42 = report.add("A4.2");
    RVec xi_f = s.F.transpose() * s.xi;
    if (!is_zero(xi_f)) report.fail(a42, "xi", rvec_or_zero(xi_f, co), "0");

    auto& a43 = report.add("A4.3");
    for (Index i = 0; i < n && a43.pass; ++i)
        for (Index j = i + 1; j < n; ++j) {
            // invariant case: xi([FX, Y]) + xi([X, FY]) = 0
            RVec fx = s.F.col(i);
            RVec fy = s.F.col(j);
            Rational lhs = dot(s.xi, ctx.bracket(fx, RVec(RVec::Unit(n, j)))) +
                           dot(s.xi, ctx.bracket(RVec(RVec::Unit(n, i)), fy));
            if (!lhs.is_zero()) {
                report.fail(a43, frame_pair(i, j), lhs.str(), "0");
                break;
            }
        }

    auto& a44 = report.add("A4.4");
    RMat sigma_f = s.F.transpose() * as_matrix(s.sigma); // sigma_F(e_i, e_j) = sigma(F e_i, e_j)
    for (Index i = 0; i < n && a44.pass; ++i)
        for (Index j = i + 1; j < n && a44.pass; ++j)
            for (Index k = j + 1; k < n; ++k) {
                Rational lhs = cyclic_d(ctx, sigma_f, i, j, k);
                RVec x = RVec::Unit(n, i), y = RVec::Unit(n, j), w = RVec::Unit(n, k);
                std::vector<RVec> a1v{RVec(s.F * x), y, w};
                std::vector<RVec> a2v{x, RVec(s.F * y), w};
                std::vector<RVec> a3v{x, y, RVec(s.F * w)};
                Rational rhs = d_sigma.eval_on(a1v) + d_sigma.eval_on(a2v) + d_sigma.eval_on(a3v);
                if (lhs != rhs) {
                    report.fail(a44,
                                "(" + fr[static_cast<size_t>(i)] + ", " + fr[static_cast<size_t>(j)] + ", " +
                                    fr[static_cast<size_t>(k)] + ")",
                                lhs.str(), rhs.str());
                    break;
                }
            }

    // A5: the five Lie-derivative conditions
    auto& a51 = report.add("A5.1");
    RVec l_z_xi = -(ctx.ad(s.Z).transpose() * s.xi);
    if (!is_zero(l_z_xi)) report.fail(a51, "Z", rvec_or_zero(l_z_xi, co), "0");

    auto& a52 = report.add("A5.2");
    Multivector<Rational> l_z_p = lie_derivative(ctx, s.Z, s.pi);
    if (!l_z_p.is_zero_tensor())
        report.fail(a52, "Z", multivector_str(l_z_p, ctx), "0");

    auto& a53 = report.add("A5.3");
    RMat l_z_f = lie_derivative(ctx, s.Z, s.F);
    for (Index col = 0; col < n && a53.pass; ++col) {
        RVec v = l_z_f.col(col);
        if (!is_zero(v))
            report.fail(a53, fr[static_cast<size_t>(col)], rvec_or_zero(v, fr), "0");
    }

    auto& a54 = report.add("A5.4");
    Form<Rational> l_z_sigma = lie_derivative(ctx, s.Z, s.sigma);
    if (!l_z_sigma.is_zero_tensor())
        report.fail(a54, "Z", form_str(l_z_sigma, ctx), "0");

    auto& a55 = report.add("A5.5");
    for (Index a = 0; a < n && a55.pass; ++a) {
        RVec alpha = RVec::Unit(n, a);
        RVec pa = sharp(s.pi, alpha);
        RVec l = -(ctx.ad(pa).transpose() * s.xi);
        if (!is_zero(l))
            report.fail(a55, co[static_cast<size_t>(a)], rvec_or_zero(l, co), "0");
    }

    return report;
}

CheckReport normality_thm32(const GAPContactStructure& s) {
    CheckReport report;
    report.subject = "normality via assembled endomorphisms";
    const LieAlgebraContext& ctx = s.ctx;
    const Index n = ctx.dim();
    const auto names = stacked_names(ctx);
    RMat ff = assemble_F(s);
    RMat zz = assemble_Z(s);

    auto& sq = report.add("3.20");
    RMat defect = ff * ff - (RMat::Identity(2 * n, 2 * n) - zz);
    for (Index col = 0; col < 2 * n && sq.pass; ++col) {
        RVec v = defect.col(col);
        if (!is_zero(v))
            report.fail(sq, names[static_cast<size_t>(col)],
                        section_str(apply_endo(RMat(ff * ff), stacked_unit(2 * n, col)), ctx),
                        section_str(apply_endo(RMat(RMat::Identity(2 * n, 2 * n) - zz),
                                               stacked_unit(2 * n, col)),
                                    ctx));
    }

    // basis of im F = { (X, a) : xi(X) = 0, a(Z) = 0 }
    RMat ker_xi = kernel_basis(RMat(s.xi.transpose()));
    RMat ker_z = kernel_basis(RMat(s.Z.transpose()));
    std::vector<RSection> im_f;
    std::vector<std::string> im_names;
    for (Index c = 0; c < ker_xi.cols(); ++c) {
        im_f.push_back(RSection::vector(ker_xi.col(c)));
        im_names.push_back(vec_str(RVec(ker_xi.col(c)), ctx.frame_names()));
    }
    for (Index c = 0; c < ker_z.cols(); ++c) {
        im_f.push_back(RSection::one_form(ker_z.col(c)));
        im_names.push_back(vec_str(RVec(ker_z.col(c)), ctx.coframe_names()));
    }

    // The operator condition is the im F residue of the adapted lift's
    // integrability: the Nijenhuis combination of F vanishes on im F pairs and
    // the reeb projector annihilates the mixed bracket sum, together with
    // L_Z xi = 0. The naive all-pairs identity fails on normal structures.
    auto& nij = report.add("3.21");
    nij.note = "operator identity on im F section pairs plus the translation residue L_Z xi = 0";
    for (size_t k = 0; k < im_f.size() && nij.pass; ++k)
        for (size_t l = k + 1; l < im_f.size(); ++l) {
            const RSection& u = im_f[k];
            const RSection& v = im_f[l];
            RSection fu = apply_endo(ff, u);
            RSection fv = apply_endo(ff, v);
            RSection inner = courant(ctx, fu, v) + courant(ctx, u, fv);
            RSection operator_part =
                courant(ctx, fu, fv) - apply_endo(ff, inner) + courant(ctx, u, v);
            RSection reeb_part = apply_endo(zz, inner);
            if (!operator_part.is_zero_section() || !reeb_part.is_zero_section()) {
                RSection defect = operator_part.is_zero_section() ? reeb_part : operator_part;
                report.fail(nij, "(" + im_names[k] + ", " + im_names[l] + ")",
                            section_str(defect, ctx), "0");
                break;
            }
        }
    if (nij.pass) {
        RVec l_z_xi = -(ctx.ad(s.Z).transpose() * s.xi);
        if (!is_zero(l_z_xi))
            report.fail(nij, "Z", vec_str(l_z_xi, ctx.coframe_names()), "0");
    }

    auto& norm = report.add("3.22");
    norm.note = "evaluated with the 1/2-normalized pairing; the displayed neutral metric g "
                "would give the value 2";
    RSection z_xi(s.Z, s.xi);
    Rational val = pairing(z_xi, z_xi);
    if (!val.is_one()) report.fail(norm, "Z+xi", val.str(), "1");

    auto& transl = report.add("3.23");
    for (size_t k = 0; k < im_f.size(); ++k) {
        RSection fu = apply_endo(ff, im_f[k]);
        RSection lhs = courant(ctx, RSection::vector(s.Z), fu);
        RSection rhs = apply_endo(ff, lie_derivative(ctx, s.Z, im_f[k]));
        if (!(lhs == rhs)) {
            report.fail(transl, im_names[k], section_str(lhs, ctx), section_str(rhs, ctx));
            break;
        }
    }

    auto& skew = report.add("3.24a");
    RMat g = neutral_gram(n);
    RMat skew_defect = g * ff + ff.transpose() * g;
    for (Index i = 0; i < 2 * n && skew.pass; ++i)
        for (Index j = 0; j < 2 * n; ++j)
            if (!skew_defect(i, j).is_zero()) {
                report.fail(skew, "(" + names[static_cast<size_t>(i)] + ", " + names[static_cast<size_t>(j)] + ")",
                            skew_defect(i, j).str(), "0");
                break;
            }

    auto& fz = report.add("3.24b");
    RMat fz_m = ff * zz;
    for (Index col = 0; col < 2 * n && fz.pass; ++col) {
        RVec v = fz_m.col(col);
        if (!is_zero(v))
            report.fail(fz, names[static_cast<size_t>(col)],
                        section_str(apply_endo(fz_m, stacked_unit(2 * n, col)), ctx), "0");
    }

    auto& reeb = report.add("3.25");
    for (size_t k = 0; k < im_f.size(); ++k) {
        RSection fu = apply_endo(ff, im_f[k]);
        RSection lhs = courant(ctx, fu, RSection::one_form(s.xi));
        RVec l_x_xi = -(ctx.ad(im_f[k].vec).transpose() * s.xi);
        RSection rhs = apply_endo(ff, RSection::one_form(l_x_xi));
        if (!(lhs == rhs)) {
            report.fail(reeb, im_names[k], section_str(lhs, ctx), section_str(rhs, ctx));
            break;
        }
    }

    return report;
}

} // namespace gpc
