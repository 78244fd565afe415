#pragma once

#include "gpc/classical.hpp"
#include "gpc/structures.hpp"

#include <map>
#include <variant>

namespace gpc {

using CatalogParams = std::map<std::string, Rational>;

struct CatalogEntry {
    std::string name;
    std::string description;
    CatalogParams defaults;
    std::string expectation; // declared behaviour, revalidated by the acceptance suite
};

using BuiltStructure = std::variant<GAPContactStructure, AlmostParaContact>;

const std::vector<CatalogEntry>& catalog_entries();

/// Builds a named structure with the given parameters (missing ones take the
/// entry defaults). Throws SingularParameter / DegenerateParameter on
/// out-of-domain values and std::invalid_argument for unknown names.
BuiltStructure catalog_build(const std::string& name, const CatalogParams& params = {});

/// Components (F_c, sigma_c, pi_c) of the hyperbolic two-parameter family;
/// they satisfy F_c^2 - sigma_c * pi_c = 1 for every admissible (r, point).
struct FamilyCoefficients {
    Rational f;
    Rational sigma;
    Rational pi;
};
FamilyCoefficients example3_coefficients(const Rational& r, const HyperbolicPoint& hp);

/// The published trivializing generators of L and L* for the two-parameter
/// family, in the normalization used by the worked example.
std::vector<SSection> example3_L_generators(const Rational& r, const HyperbolicPoint& hp);
std::vector<SSection> example3_Lstar_generators(const Rational& r, const HyperbolicPoint& hp);

/// The unique nonzero Courant bracket on L in that normalization,
/// [[X1, g2]] = (r^2 + r c - e r s) X3 + (-r s + e(-r^2 + r c)) a2.
SSection example3_expected_bracket(const Rational& r, const HyperbolicPoint& hp);

} // namespace gpc
