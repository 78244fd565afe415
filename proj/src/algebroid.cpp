#include "gpc/algebroid.hpp"

#include "gpc/errors.hpp"
#include "gpc/linalg.hpp"

namespace gpc {

std::string to_string(BundleLabel label) {
    switch (label) {
        case BundleLabel::L_Z: return "L_Z";
        case BundleLabel::L_xi: return "L_xi";
        case BundleLabel::E10: return "E(1,0)";
        case BundleLabel::E01: return "E(0,1)";
        case BundleLabel::L: return "L";
        case BundleLabel::Lbar: return "Lbar";
        case BundleLabel::Lstar: return "L*";
        case BundleLabel::Lbarstar: return "Lbar*";
    }
    return "?";
}

std::string to_string(StructureClass c) {
    switch (c) {
        case StructureClass::almost: return "almost";
        case StructureClass::para_contact: return "para_contact";
        case StructureClass::strong: return "strong";
    }
    return "?";
}

Index SubbundleSpan::rank_plus() const { return rank(plus); }
Index SubbundleSpan::rank_minus() const { return rank(minus); }

bool SubbundleSpan::contains(const SSection& s) const {
    return in_span(plus, lightcone_plus(s).stacked()) && in_span(minus, lightcone_minus(s).stacked());
}

SSection SubbundleSpan::residual(const SSection& s) const {
    RVec rp = span_residual(plus, lightcone_plus(s).stacked());
    RVec rm = span_residual(minus, lightcone_minus(s).stacked());
    return SSection::from_stacked(from_lightcone(rp, rm));
}

SubbundleSpan SubbundleSpan::from_generators(BundleLabel label, std::vector<SSection> gens, Index dim) {
    SubbundleSpan out;
    out.label = label;
    out.generators = std::move(gens);
    out.plus = RMat::Zero(static_cast<Index>(out.generators.size()), 2 * dim);
    out.minus = RMat::Zero(static_cast<Index>(out.generators.size()), 2 * dim);
    for (size_t g = 0; g < out.generators.size(); ++g) {
        out.plus.row(static_cast<Index>(g)) = lightcone_plus(out.generators[g]).stacked().transpose();
        out.minus.row(static_cast<Index>(g)) = lightcone_minus(out.generators[g]).stacked().transpose();
    }
    return out;
}

const SubbundleSpan& EigenbundleSet::by_label(BundleLabel label) const {
    switch (label) {
        case BundleLabel::L_Z: return l_z;
        case BundleLabel::L_xi: return l_xi;
        case BundleLabel::E10: return e10;
        case BundleLabel::E01: return e01;
        case BundleLabel::L: return l;
        case BundleLabel::Lbar: return lbar;
        case BundleLabel::Lstar: return lstar;
        case BundleLabel::Lbarstar: return lbarstar;
    }
    throw std::logic_error("unknown bundle label");
}

std::vector<const SubbundleSpan*> EigenbundleSet::all() const {
    return {&l_z, &l_xi, &e10, &e01, &l, &lbar, &lstar, &lbarstar};
}

EigenbundleSet eigenbundles(const GAPContactStructure& s, bool require_def1) {
    if (require_def1 && !check_def1(s).passed())
        throw Def1Violation("eigenbundle decomposition requires the definition-1 axioms");
    const Index n = s.ctx.dim();
    RMat ff = assemble_F(s);

    // W = ker xi + ker Z in stacked coordinates (columns of w_basis)
    RMat ker_xi = kernel_basis(RMat(s.xi.transpose()));
    RMat ker_z = kernel_basis(RMat(s.Z.transpose()));
    const Index w_dim = ker_xi.cols() + ker_z.cols();
    RMat w_basis = RMat::Zero(2 * n, w_dim);
    w_basis.topLeftCorner(n, ker_xi.cols()) = ker_xi;
    w_basis.bottomRightCorner(n, ker_z.cols()) = ker_z;

    // the endomorphism must square to the identity on W
    RMat sq_defect = RMat(ff * ff * w_basis - w_basis);
    if (!is_zero(sq_defect))
        throw DegenerateStructure("assembled endomorphism does not square to the identity on ker xi + ker Z");

    // V+- = ker(F -+ I) restricted to W, via coordinates in the W basis
    auto eigenspace = [&](int sign) {
        RMat a = RMat(ff * w_basis);
        if (sign > 0)
            a -= w_basis;
        else
            a += w_basis;
        RMat coords = kernel_basis(a); // w_dim x r
        RMat vectors = RMat(w_basis * coords);
        RMat rows(vectors.cols(), 2 * n);
        for (Index c = 0; c < vectors.cols(); ++c) rows.row(c) = vectors.col(c).transpose();
        return row_space_basis(rows);
    };
    RMat v_plus = eigenspace(+1);
    RMat v_minus = eigenspace(-1);

    EigenbundleSet out;
    out.v_plus = v_plus;
    out.v_minus = v_minus;

    SSection z_sec = to_split(RSection::vector(s.Z));
    SSection xi_sec = to_split(RSection::one_form(s.xi));

    out.l_z = SubbundleSpan::from_generators(BundleLabel::L_Z, {z_sec}, n);
    out.l_xi = SubbundleSpan::from_generators(BundleLabel::L_xi, {xi_sec}, n);

    // E(1,0) = e+ V+ + e- V-, generated freely by e+ v+_i + e- v-_i
    auto paired_generators = [&](const RMat& pl, const RMat& mi) {
        std::vector<SSection> gens;
        Index count = std::max(pl.rows(), mi.rows());
        for (Index i = 0; i < count; ++i) {
            RVec p = i < pl.rows() ? RVec(pl.row(i).transpose()) : RVec(RVec::Zero(2 * n));
            RVec m = i < mi.rows() ? RVec(mi.row(i).transpose()) : RVec(RVec::Zero(2 * n));
            gens.push_back(SSection::from_stacked(from_lightcone(p, m)));
        }
        return gens;
    };
    out.e10 = SubbundleSpan::from_generators(BundleLabel::E10, paired_generators(v_plus, v_minus), n);
    out.e01 = SubbundleSpan::from_generators(BundleLabel::E01, paired_generators(v_minus, v_plus), n);

    auto joined = [&](BundleLabel label, const SSection& line, const SubbundleSpan& e_part) {
        std::vector<SSection> gens;
        gens.push_back(line);
        gens.insert(gens.end(), e_part.generators.begin(), e_part.generators.end());
        return SubbundleSpan::from_generators(label, std::move(gens), n);
    };
    out.l = joined(BundleLabel::L, z_sec, out.e10);
    out.lbar = joined(BundleLabel::Lbar, z_sec, out.e01);
    out.lstar = joined(BundleLabel::Lstar, xi_sec, out.e01);
    out.lbarstar = joined(BundleLabel::Lbarstar, xi_sec, out.e10);

    return out;
}

CheckReport isotropy_check(const SubbundleSpan& b) {
    CheckReport report;
    report.subject = "isotropy of " + to_string(b.label);
    auto& cond = report.add("isotropy(" + to_string(b.label) + ")");
    for (size_t i = 0; i < b.generators.size() && cond.pass; ++i)
        for (size_t j = i; j < b.generators.size(); ++j) {
            SplitComplex p = pairing(b.generators[i], b.generators[j]);
            if (!p.is_zero()) {
                report.fail(cond, "(g" + std::to_string(i + 1) + ", g" + std::to_string(j + 1) + ")",
                            p.str(), "0");
                break;
            }
        }
    return report;
}

ClosureResult closure_check(const GAPContactStructure& s, const SubbundleSpan& b) {
    ClosureResult out;
    out.report.subject = "courant closure of " + to_string(b.label);
    auto& cond = out.report.add("closure(" + to_string(b.label) + ")");
    for (size_t i = 0; i < b.generators.size(); ++i)
        for (size_t j = i + 1; j < b.generators.size(); ++j) {
            ClosureEntry entry;
            entry.i = i;
            entry.j = j;
            entry.bracket = courant(s.ctx, b.generators[i], b.generators[j]);
            entry.in_span = b.contains(entry.bracket);
            entry.residual = entry.in_span ? SSection::zero(s.ctx.dim()) : b.residual(entry.bracket);
            if (!entry.in_span && cond.pass) {
                out.report.fail(cond,
                                "(" + section_str(b.generators[i], s.ctx) + ", " +
                                    section_str(b.generators[j], s.ctx) + ")",
                                section_str(entry.bracket, s.ctx),
                                "a section of " + to_string(b.label) + " (residual " +
                                    section_str(entry.residual, s.ctx) + ")");
            }
            out.entries.push_back(std::move(entry));
        }
    return out;
}

StructureClass classify(const GAPContactStructure& s) {
    EigenbundleSet bundles = eigenbundles(s); // throws Def1Violation if axioms fail
    bool l_closed = closure_check(s, bundles.l).report.passed();
    if (!l_closed) return StructureClass::almost;
    bool lstar_closed = closure_check(s, bundles.lstar).report.passed();
    return lstar_closed ? StructureClass::strong : StructureClass::para_contact;
}

CheckReport bialgebroid_check(const GAPContactStructure& s) {
    EigenbundleSet bundles = eigenbundles(s);
    if (!closure_check(s, bundles.l).report.passed())
        throw PreconditionViolation("bialgebroid test requires L to be closed under the Courant bracket");

    CheckReport report;
    report.subject = "lie-bialgebroid obstruction";
    Form<Rational> d_xi = chevalley_d(s.ctx, one_form(s.xi));
    SMat d_xi_split = to_split(as_matrix(d_xi));

    auto sweep = [&](const SubbundleSpan& bundle, const std::string& label) {
        auto& cond = report.add(label);
        const auto& gens = bundle.generators;
        for (size_t i = 0; i < gens.size() && cond.pass; ++i)
            for (size_t j = i + 1; j < gens.size(); ++j) {
                // anchor projection, then the bilinear extension of d xi:
                // d xi (x, y) = x^T D y with D(p,q) = d xi (X_p, X_q)
                SVec x = gens[i].vec;
                SVec y = gens[j].vec;
                SplitComplex value = dot(SVec(d_xi_split.transpose() * x), y);
                if (!value.is_zero()) {
                    report.fail(cond,
                                "(" + section_str(gens[i], s.ctx) + ", " + section_str(gens[j], s.ctx) + ")",
                                value.str(), "0");
                    break;
                }
            }
    };
    sweep(bundles.e10, "dxi(2,0)");
    sweep(bundles.e01, "dxi(0,2)");
    return report;
}

} // namespace gpc
