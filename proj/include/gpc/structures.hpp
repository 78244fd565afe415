#pragma once

#include "gpc/calculus.hpp"

namespace gpc {

/// The tuple (F, pi, sigma, Z, xi) of classical tensor fields assembling a
/// generalized almost para-contact structure on an odd-dimensional context.
struct GAPContactStructure {
    LieAlgebraContext ctx;
    RMat F;                    // F(i,j) = coefficient of X_i in F(X_j)
    Multivector<Rational> pi;  // bivector
    Form<Rational> sigma;      // 2-form
    RVec Z;
    RVec xi;

    GAPContactStructure(LieAlgebraContext c, RMat f, Multivector<Rational> p, Form<Rational> s,
                        RVec z, RVec x);
};

/// Generalized almost paracomplex structure in block form
/// [[a, pi_sharp], [theta_flat, -a*]].
struct GAParacomplexStructure {
    LieAlgebraContext ctx;
    RMat a;
    Multivector<Rational> pi;
    Form<Rational> theta;

    RMat jmatrix() const;
};

/// Names of the stacked frame of TM + TM* (frame then coframe labels).
std::vector<std::string> stacked_names(const LieAlgebraContext& ctx);

/// Block endomorphism [[F, pi_sharp], [sigma_flat, -F*]] of TM + TM*.
RMat assemble_F(const GAPContactStructure& s);

/// Block endomorphism (X, a) -> (xi(X) Z, a(Z) xi).
RMat assemble_Z(const GAPContactStructure& s);

template <class S>
GeneralizedSection<S> apply_endo(const Mat<S>& m, const GeneralizedSection<S>& u) {
    return GeneralizedSection<S>::from_stacked(Vec<S>(m * u.stacked()));
}

/// Axioms of a generalized almost para-contact structure, one labeled result
/// per displayed identity, each swept over the stacked frame.
CheckReport check_def1(const GAPContactStructure& s);

/// Adapted lift to the central extension; throws Def1Violation if the input
/// fails check_def1. The lift sends (0,dt) to (Z,0) and (d/dt,0) to (0,-xi);
/// the sign split between the two is forced by <,>-orthogonality.
GAParacomplexStructure adapted_lift(const GAPContactStructure& s);

/// J^2 = I, J != I and orthogonality with respect to the pairing.
CheckReport check_paracomplex(const GAParacomplexStructure& j);

/// Vanishing of the generalized Nijenhuis operator on all frame pairs.
CheckReport check_integrability_gapx(const GAParacomplexStructure& j);

/// Normality in terms of the classical tensor fields (conditions A1-A5).
CheckReport normality_thm31(const GAPContactStructure& s);

/// Normality in terms of the assembled endomorphisms (conditions 3.20-3.25).
CheckReport normality_thm32(const GAPContactStructure& s);

} // namespace gpc
