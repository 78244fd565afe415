#include "gpc/catalog.hpp"

#include "gpc/errors.hpp"

namespace gpc {

namespace {

Rational param(const CatalogParams& params, const CatalogParams& defaults, const std::string& key) {
    auto it = params.find(key);
    if (it != params.end()) return it->second;
    auto dt = defaults.find(key);
    if (dt == defaults.end()) throw std::invalid_argument("missing parameter --" + key);
    return dt->second;
}

const CatalogEntry* find_entry(const std::string& name) {
    for (const auto& e : catalog_entries())
        if (e.name == name) return &e;
    return nullptr;
}

/// F = f*(X2 (x) a2 + X3 (x) a3), sigma = s*a2^a3, pi = p*X2^X3 on h3,
/// with Z = X1 and xi = a1.
GAPContactStructure h3_family(const Rational& f, const Rational& sg, const Rational& p) {
    LieAlgebraContext ctx = heisenberg3();
    RMat F = RMat::Zero(3, 3);
    F(1, 1) = f;
    F(2, 2) = f;
    Form<Rational> sigma(3, 2);
    sigma.coeff(IndexTuple{1, 2}) = sg;
    Multivector<Rational> pi(3, 2);
    pi.coeff(IndexTuple{1, 2}) = p;
    RVec Z = RVec::Unit(3, 0);
    RVec xi = RVec::Unit(3, 0);
    return GAPContactStructure(std::move(ctx), std::move(F), std::move(pi), std::move(sigma), Z, xi);
}

AlmostParaContact abelian_normal() {
    LieAlgebraContext ctx = LieAlgebraContext::abelian(3);
    RMat phi = RMat::Zero(3, 3);
    phi(0, 0) = Rational(1);
    phi(1, 1) = Rational(-1);
    return AlmostParaContact{std::move(ctx), std::move(phi), RVec(RVec::Unit(3, 2)),
                             RVec(RVec::Unit(3, 2))};
}

AlmostParaContact twisted_h3() {
    LieAlgebraContext ctx = heisenberg3();
    RMat phi = RMat::Zero(3, 3);
    phi(2, 1) = Rational(1); // phi X2 = X3
    phi(1, 2) = Rational(1); // phi X3 = X2
    return AlmostParaContact{std::move(ctx), std::move(phi), RVec(RVec::Unit(3, 0)),
                             RVec(RVec::Unit(3, 0))};
}

/// Normal structure whose contact form has nonvanishing differential:
/// eta = a3 with d a3 = a1^a2, E = X3, phi = diag(1, -1, 0).
AlmostParaContact sasaki_h3() {
    LieAlgebraContext ctx = heisenberg3();
    RMat phi = RMat::Zero(3, 3);
    phi(0, 0) = Rational(1);
    phi(1, 1) = Rational(-1);
    return AlmostParaContact{std::move(ctx), std::move(phi), RVec(RVec::Unit(3, 2)),
                             RVec(RVec::Unit(3, 2))};
}

GAPContactStructure broken_a3() {
    LieAlgebraContext ctx = heisenberg3();
    RMat F = RMat::Zero(3, 3);
    Form<Rational> sigma(3, 2);
    sigma.coeff(IndexTuple{1, 2}) = Rational(1);
    Multivector<Rational> pi(3, 2);
    return GAPContactStructure(std::move(ctx), std::move(F), std::move(pi), std::move(sigma),
                               RVec(RVec::Unit(3, 0)), RVec(RVec::Unit(3, 0)));
}

/// Five-dimensional two-step nilpotent algebra with [X2, X3] = -X1 and the
/// diagonal involution F = diag(0, 1, 1, -1, -1). L closes but d xi pairs two
/// plus-eigenvectors, so the bialgebroid obstruction is nonzero.
GAPContactStructure bialgebroid_counter5() {
    LieAlgebraContext ctx(5, {}, {});
    ctx.set_bracket(1, 2, 0, Rational(-1));
    RMat F = RMat::Zero(5, 5);
    F(1, 1) = Rational(1);
    F(2, 2) = Rational(1);
    F(3, 3) = Rational(-1);
    F(4, 4) = Rational(-1);
    return GAPContactStructure(std::move(ctx), std::move(F), Multivector<Rational>(5, 2),
                               Form<Rational>(5, 2), RVec(RVec::Unit(5, 0)), RVec(RVec::Unit(5, 0)));
}

} // namespace

FamilyCoefficients example3_coefficients(const Rational& r, const HyperbolicPoint& hp) {
    Rational r2 = r * r;
    if (r2 == Rational(1)) throw SingularParameter("family parameter r with r^2 = 1");
    Rational den = Rational(1) - r2;
    return FamilyCoefficients{
        Rational(2) * r * hp.s / den,
        (-r2 + Rational(2) * r * hp.c - Rational(1)) / den,
        (r2 + Rational(2) * r * hp.c + Rational(1)) / den,
    };
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"example2",
         "one-parameter hyperbolic structure on h3: F = c(X2(x)a2 + X3(x)a3), sigma = s a2^a3, "
         "pi = s X2^X3, Z = X1, xi = a1",
         {{"t", Rational(1, 2)}},
         "def1 pass, normal, classifies strong"},
        {"example3",
         "two-parameter family on h3 with coefficients 2rs/(1-r^2), (-r^2+2rc-1)/(1-r^2), "
         "(r^2+2rc+1)/(1-r^2); singular at r^2 = 1",
         {{"r", Rational(1, 2)}, {"t", Rational(1, 2)}},
         "def1 pass, normal, classifies strong"},
        {"classical-abelian",
         "diagonal normal almost para-contact structure on abelian R^3 "
         "(phi = diag(1,-1,0), E = X3, eta = a3)",
         {},
         "apc pass, normal, lift classifies strong"},
        {"classical-twisted-h3",
         "non-normal almost para-contact structure on h3 (phi swaps X2 and X3, E = X1, eta = a1)",
         {},
         "apc pass, not normal, lift classifies almost"},
        {"classical-sasaki-h3",
         "normal almost para-contact structure on h3 with contact form eta = a3 "
         "(phi = diag(1,-1,0), E = X3); d eta = a1^a2 is nonzero",
         {},
         "apc pass, normal, lift classifies strong"},
        {"broken-a3",
         "negative control on h3: F = 0, pi = 0, sigma = a2^a3; violates the squared-endomorphism "
         "axiom with witness X2",
         {},
         "def1 fails, A3.3 fails with witness X2"},
        {"bialgebroid-counter5",
         "five-dimensional structure whose L closes while d xi has a nonzero (2,0) component",
         {},
         "def1 pass, classifies para_contact, bialgebroid obstruction fails"},
    };
    return entries;
}

BuiltStructure catalog_build(const std::string& name, const CatalogParams& params) {
    const CatalogEntry* entry = find_entry(name);
    if (!entry) throw std::invalid_argument("unknown catalog entry '" + name + "'");
    for (const auto& [key, value] : params) {
        (void)value;
        if (entry->defaults.find(key) == entry->defaults.end())
            throw std::invalid_argument("entry '" + name + "' takes no parameter --" + key);
    }

    if (name == "example2") {
        HyperbolicPoint hp = hyperbolic_point(param(params, entry->defaults, "t"));
        return h3_family(hp.c, hp.s, hp.s);
    }
    if (name == "example3") {
        Rational r = param(params, entry->defaults, "r");
        HyperbolicPoint hp = hyperbolic_point(param(params, entry->defaults, "t"));
        FamilyCoefficients co = example3_coefficients(r, hp);
        if (co.f * co.f - co.sigma * co.pi != Rational(1))
            throw std::logic_error("family coefficient identity violated at r = " + r.str());
        return h3_family(co.f, co.sigma, co.pi);
    }
    if (name == "classical-abelian") return abelian_normal();
    if (name == "classical-twisted-h3") return twisted_h3();
    if (name == "classical-sasaki-h3") return sasaki_h3();
    if (name == "broken-a3") return broken_a3();
    if (name == "bialgebroid-counter5") return bialgebroid_counter5();
    throw std::logic_error("catalog entry '" + name + "' has no builder");
}

std::vector<SSection> example3_L_generators(const Rational& r, const HyperbolicPoint& hp) {
    if (r * r == Rational(1)) throw SingularParameter("family parameter r with r^2 = 1");
    const SplitComplex e = SplitComplex::e();
    SplitComplex rc(r * hp.c), rs(r * hp.s), r2(r * r);

    SVec zero = SVec::Zero(3);
    SVec x1 = zero, g2v = zero, g2f = zero, g3v = zero, g3f = zero;
    x1(0) = SplitComplex(1);

    // g2 = (-(r^2 + r c) + e r s) X2 + (-r s + e(-r^2 + r c)) a3
    g2v(1) = SplitComplex(0) - r2 - rc + e * rs;
    g2f(2) = SplitComplex(0) - rs + e * (SplitComplex(0) - r2 + rc);
    // g3 = (-(r^2 + r c) + e r s) X3 + (r s + e(r^2 - r c)) a2
    g3v(2) = SplitComplex(0) - r2 - rc + e * rs;
    g3f(1) = rs + e * (r2 - rc);

    return {SSection(x1, zero), SSection(g2v, g2f), SSection(g3v, g3f)};
}

std::vector<SSection> example3_Lstar_generators(const Rational& r, const HyperbolicPoint& hp) {
    if (r * r == Rational(1)) throw SingularParameter("family parameter r with r^2 = 1");
    const SplitComplex e = SplitComplex::e();
    SplitComplex rc(r * hp.c), rs(r * hp.s), r2(r * r);

    SVec zero = SVec::Zero(3);
    SVec a1 = zero, h2v = zero, h2f = zero, h3v = zero, h3f = zero;
    a1(0) = SplitComplex(1);

    // h2 = (-r s - e(r^2 + r c)) X3 + ((-r^2 + r c) + e r s) a2
    h2v(2) = SplitComplex(0) - rs - e * (r2 + rc);
    h2f(1) = SplitComplex(0) - r2 + rc + e * rs;
    // h3 = (r s + e(r^2 + r c)) X2 + ((-r^2 + r c) + e r s) a3
    h3v(1) = rs + e * (r2 + rc);
    h3f(2) = SplitComplex(0) - r2 + rc + e * rs;

    return {SSection(zero, a1), SSection(h2v, h2f), SSection(h3v, h3f)};
}

SSection example3_expected_bracket(const Rational& r, const HyperbolicPoint& hp) {
    const SplitComplex e = SplitComplex::e();
    SplitComplex rc(r * hp.c), rs(r * hp.s), r2(r * r);
    SVec v = SVec::Zero(3), f = SVec::Zero(3);
    v(2) = r2 + rc - e * rs;                               // (r^2 + r c - e r s) X3
    f(1) = SplitComplex(0) - rs + e * (SplitComplex(0) - r2 + rc); // (-r s + e(-r^2 + r c)) a2
    return SSection(v, f);
}

} // namespace gpc
