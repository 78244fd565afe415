#pragma once

#include "gpc/structures.hpp"

namespace gpc {

enum class BundleLabel { L_Z, L_xi, E10, E01, L, Lbar, Lstar, Lbarstar };

std::string to_string(BundleLabel label);

/// A paracomplexified subbundle of TM + TM*, given by split-complex generators
/// together with its light-cone model: the pair of real row-spans (plus, minus)
/// such that the split span equals e+*plus + e-*minus. Membership, rank and
/// closure are all decided on the light-cone components by exact row reduction,
/// since Gaussian elimination over a ring with zero divisors is unsound.
struct SubbundleSpan {
    BundleLabel label;
    std::vector<SSection> generators;
    RMat plus;  // rows span the e+ component (stacked coordinates)
    RMat minus; // rows span the e- component

    Index rank_plus() const;
    Index rank_minus() const;

    bool contains(const SSection& s) const;
    /// Light-cone residual after reduction; zero iff contains().
    SSection residual(const SSection& s) const;

    /// Builds the light-cone spans from a generator list.
    static SubbundleSpan from_generators(BundleLabel label, std::vector<SSection> gens, Index dim);
};

struct EigenbundleSet {
    SubbundleSpan l_z, l_xi, e10, e01, l, lbar, lstar, lbarstar;
    RMat v_plus;  // rows: +1 eigenvectors of the assembled endomorphism on ker xi + ker Z
    RMat v_minus; // rows: -1 eigenvectors

    const SubbundleSpan& by_label(BundleLabel label) const;
    std::vector<const SubbundleSpan*> all() const;
};

/// Eigenbundle decomposition of the paracomplexified TM + TM*. Throws
/// Def1Violation when the axioms fail (skippable only for the guard-path test)
/// and DegenerateStructure when the square of the endomorphism is not the
/// identity on ker xi + ker Z.
EigenbundleSet eigenbundles(const GAPContactStructure& s, bool require_def1 = true);

/// Pairing of every generator pair (including repeats) must vanish exactly.
CheckReport isotropy_check(const SubbundleSpan& b);

struct ClosureEntry {
    size_t i, j;
    SSection bracket;
    bool in_span;
    SSection residual;
};

struct ClosureResult {
    CheckReport report;
    std::vector<ClosureEntry> entries;

    size_t nonzero_brackets() const {
        size_t n = 0;
        for (const auto& e : entries)
            if (!e.bracket.is_zero_section()) ++n;
        return n;
    }
};

/// Courant closure of an isotropic span: every generator-pair bracket must lie
/// in the span (light-cone membership); failures carry the residual section.
ClosureResult closure_check(const GAPContactStructure& s, const SubbundleSpan& b);

enum class StructureClass { almost, para_contact, strong };

std::string to_string(StructureClass c);

/// strong when both L and L* close, para_contact when only L closes.
StructureClass classify(const GAPContactStructure& s);

/// Lie-bialgebroid obstruction: d xi must have no (2,0) or (0,2) component,
/// i.e. d xi (rho u, rho v) = 0 for generator pairs of E10 and of E01.
/// Requires L to be Courant-closed.
CheckReport bialgebroid_check(const GAPContactStructure& s);

} // namespace gpc
