#pragma once

#include "gpc/structures.hpp"

namespace gpc {

/// Classical almost para-contact data (phi, E, eta) on an odd-dimensional
/// context: phi^2 = id - eta (x) E with balanced +-1 eigenspaces on ker eta.
struct AlmostParaContact {
    LieAlgebraContext ctx;
    RMat phi;
    RVec E;
    RVec eta;
};

/// Compatibility axioms, including the eigen-dimension balance on ker eta and
/// rank phi = dim - 1, decided by exact row reduction.
CheckReport check_apc(const AlmostParaContact& a);

/// Normality: N_phi = d eta (x) E plus L_E eta = 0 and L_E phi = 0. The usual
/// factor 2 belongs to the 1/2-normalized exterior derivative; with the
/// convention used here the constant is 1, which the cross-pipeline agreement
/// suite pins down.
CheckReport check_normal(const AlmostParaContact& a);

/// Product paracomplex structure on the central extension:
/// J(X) = phi X + eta(X) d/dt, J(d/dt) = E, packaged with zero pi and theta.
/// Throws APCViolation if check_apc fails.
GAParacomplexStructure product_J(const AlmostParaContact& a);

/// Classical Nijenhuis tensor of the product structure on all extended pairs;
/// vanishes exactly when check_normal passes.
CheckReport product_J_integrability(const AlmostParaContact& a);

/// Embedding as a generalized structure: F = phi, pi = 0, sigma = 0, Z = E,
/// xi = eta. Throws APCViolation if check_apc fails.
GAPContactStructure lift_to_generalized(const AlmostParaContact& a);

} // namespace gpc
