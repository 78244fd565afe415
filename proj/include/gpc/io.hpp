#pragma once

#include "gpc/catalog.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>

namespace gpc {

using Json = nlohmann::json;

/// One parsed input file; exactly one of the structure kinds is set when the
/// corresponding block is present (all require the algebra block).
struct LoadedFile {
    std::string name;
    std::optional<LieAlgebraContext> algebra;
    std::optional<GAPContactStructure> generalized;
    std::optional<AlmostParaContact> classical;
    std::optional<GAParacomplexStructure> paracomplex;
};

Rational parse_rational(const Json& j, const std::string& where);
/// Split-complex literals are objects {"re": "p/q", "im": "p/q"}; plain
/// rational literals are accepted as purely real values.
SplitComplex parse_split_complex(const Json& j, const std::string& where);
Json emit_split_complex(const SplitComplex& x);
LieAlgebraContext parse_algebra(const Json& j, const std::string& where);
LoadedFile parse_file(const Json& j);

Json emit_algebra(const LieAlgebraContext& ctx);
Json emit_generalized(const GAPContactStructure& s, const std::string& name);
Json emit_classical(const AlmostParaContact& a, const std::string& name);
Json emit_paracomplex(const GAParacomplexStructure& j, const std::string& name);

Json report_to_json(const CheckReport& report);

} // namespace gpc
