#include "gpc/io.hpp"

#include "gpc/errors.hpp"

#include <nlohmann/json.hpp>

namespace gpc {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(where, std::string("missing field '") + key + "'");
    return *it;
}

Index parse_index(const Json& j, Index dim, const std::string& where) {
    if (!j.is_number_integer()) throw SchemaError(where, "expected a 0-based integer index");
    long long v = j.get<long long>();
    if (v < 0 || v >= dim) throw SchemaError(where, "index " + std::to_string(v) + " out of range");
    return static_cast<Index>(v);
}

RVec parse_vector(const Json& j, Index dim, const std::string& where) {
    if (!j.is_array() || static_cast<Index>(j.size()) != dim)
        throw SchemaError(where, "expected an array of " + std::to_string(dim) + " rationals");
    RVec out(dim);
    for (Index i = 0; i < dim; ++i)
        out(i) = parse_rational(j[static_cast<size_t>(i)], where + "[" + std::to_string(i) + "]");
    return out;
}

RMat parse_matrix(const Json& j, Index dim, const std::string& where) {
    if (!j.is_array() || static_cast<Index>(j.size()) != dim)
        throw SchemaError(where, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    RMat out(dim, dim);
    for (Index i = 0; i < dim; ++i)
        out.row(i) = parse_vector(j[static_cast<size_t>(i)], dim, where + "[" + std::to_string(i) + "]")
                         .transpose();
    return out;
}

/// Strictly-upper-triangular coefficient matrix of an antisymmetric tensor.
RMat parse_upper(const Json& j, Index dim, const std::string& where) {
    RMat m = parse_matrix(j, dim, where);
    for (Index i = 0; i < dim; ++i)
        for (Index k = 0; k <= i; ++k)
            if (!m(i, k).is_zero())
                throw SchemaError(where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]",
                                  "entries on or below the diagonal must be zero "
                                  "(strictly upper-triangular input)");
    return m;
}

Form<Rational> parse_two_form(const Json& j, Index dim, const std::string& where) {
    RMat upper = parse_upper(j, dim, where);
    Form<Rational> out(dim, 2);
    for (size_t r = 0; r < out.tuples.size(); ++r)
        out.comp(static_cast<Index>(r)) = upper(out.tuples[r][0], out.tuples[r][1]);
    return out;
}

Multivector<Rational> parse_bivector(const Json& j, Index dim, const std::string& where) {
    RMat upper = parse_upper(j, dim, where);
    Multivector<Rational> out(dim, 2);
    for (size_t r = 0; r < out.tuples.size(); ++r)
        out.comp(static_cast<Index>(r)) = upper(out.tuples[r][0], out.tuples[r][1]);
    return out;
}

Json emit_vector(const RVec& v) {
    Json out = Json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
    return out;
}

Json emit_matrix(const RMat& m) {
    Json out = Json::array();
    for (Index i = 0; i < m.rows(); ++i) out.push_back(emit_vector(RVec(m.row(i).transpose())));
    return out;
}

Json emit_upper(const RMat& full) {
    RMat upper = RMat::Zero(full.rows(), full.cols());
    for (Index i = 0; i < full.rows(); ++i)
        for (Index j = i + 1; j < full.cols(); ++j) upper(i, j) = full(i, j);
    return emit_matrix(upper);
}

} // namespace

Rational parse_rational(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw SchemaError(where, e.what());
        }
    }
    throw SchemaError(where, "expected a rational string \"p/q\" or an integer");
}

SplitComplex parse_split_complex(const Json& j, const std::string& where) {
    if (j.is_object()) {
        Rational re = j.contains("re") ? parse_rational(j.at("re"), where + ".re") : Rational(0);
        Rational im = j.contains("im") ? parse_rational(j.at("im"), where + ".im") : Rational(0);
        for (const auto& [key, value] : j.items()) {
            (void)value;
            if (key != "re" && key != "im")
                throw SchemaError(where, "unknown field '" + key + "' in a split-complex literal");
        }
        return SplitComplex(std::move(re), std::move(im));
    }
    return SplitComplex(parse_rational(j, where));
}

Json emit_split_complex(const SplitComplex& x) {
    return Json{{"re", x.re.str()}, {"im", x.im.str()}};
}

LieAlgebraContext parse_algebra(const Json& j, const std::string& where) {
    const Json& dim_j = field(j, "dim", where);
    if (!dim_j.is_number_integer() || dim_j.get<long long>() <= 0)
        throw SchemaError(where + ".dim", "expected a positive integer");
    Index dim = static_cast<Index>(dim_j.get<long long>());

    std::vector<std::string> frame, coframe;
    if (j.contains("frame")) {
        for (const auto& f : j.at("frame")) {
            if (!f.is_string()) throw SchemaError(where + ".frame", "labels must be strings");
            frame.push_back(f.get<std::string>());
        }
        if (static_cast<Index>(frame.size()) != dim)
            throw SchemaError(where + ".frame", "expected " + std::to_string(dim) + " labels");
    }
    if (j.contains("coframe")) {
        for (const auto& f : j.at("coframe")) {
            if (!f.is_string()) throw SchemaError(where + ".coframe", "labels must be strings");
            coframe.push_back(f.get<std::string>());
        }
        if (static_cast<Index>(coframe.size()) != dim)
            throw SchemaError(where + ".coframe", "expected " + std::to_string(dim) + " labels");
    }

    LieAlgebraContext ctx(dim, std::move(frame), std::move(coframe));
    if (j.contains("brackets")) {
        const Json& brackets = j.at("brackets");
        if (!brackets.is_array()) throw SchemaError(where + ".brackets", "expected an array");
        for (size_t b = 0; b < brackets.size(); ++b) {
            std::string bw = where + ".brackets[" + std::to_string(b) + "]";
            const Json& entry = brackets[b];
            Index i = parse_index(field(entry, "i", bw), dim, bw + ".i");
            Index jj = parse_index(field(entry, "j", bw), dim, bw + ".j");
            if (i == jj) throw SchemaError(bw, "bracket of a frame element with itself");
            const Json& out = field(entry, "out", bw);
            if (!out.is_array()) throw SchemaError(bw + ".out", "expected an array");
            for (size_t t = 0; t < out.size(); ++t) {
                std::string tw = bw + ".out[" + std::to_string(t) + "]";
                Index k = parse_index(field(out[t], "k", tw), dim, tw + ".k");
                ctx.set_bracket(i, jj, k, parse_rational(field(out[t], "c", tw), tw + ".c"));
            }
        }
    }
    return ctx;
}

LoadedFile parse_file(const Json& j) {
    LoadedFile out;
    if (j.contains("name") && j.at("name").is_string()) out.name = j.at("name").get<std::string>();
    out.algebra = parse_algebra(field(j, "algebra", "$"), "$.algebra");
    const Index dim = out.algebra->dim();

    int kinds = (j.contains("structure") ? 1 : 0) + (j.contains("classical") ? 1 : 0) +
                (j.contains("paracomplex") ? 1 : 0);
    if (kinds > 1)
        throw SchemaError("$", "at most one of 'structure', 'classical', 'paracomplex' may be present");

    if (j.contains("structure")) {
        const Json& s = j.at("structure");
        out.generalized = GAPContactStructure(
            *out.algebra, parse_matrix(field(s, "F", "$.structure"), dim, "$.structure.F"),
            parse_bivector(field(s, "pi", "$.structure"), dim, "$.structure.pi"),
            parse_two_form(field(s, "sigma", "$.structure"), dim, "$.structure.sigma"),
            parse_vector(field(s, "Z", "$.structure"), dim, "$.structure.Z"),
            parse_vector(field(s, "xi", "$.structure"), dim, "$.structure.xi"));
    } else if (j.contains("classical")) {
        const Json& c = j.at("classical");
        out.classical = AlmostParaContact{
            *out.algebra, parse_matrix(field(c, "phi", "$.classical"), dim, "$.classical.phi"),
            parse_vector(field(c, "E", "$.classical"), dim, "$.classical.E"),
            parse_vector(field(c, "eta", "$.classical"), dim, "$.classical.eta")};
    } else if (j.contains("paracomplex")) {
        const Json& p = j.at("paracomplex");
        out.paracomplex = GAParacomplexStructure{
            *out.algebra, parse_matrix(field(p, "a", "$.paracomplex"), dim, "$.paracomplex.a"),
            parse_bivector(field(p, "pi", "$.paracomplex"), dim, "$.paracomplex.pi"),
            parse_two_form(field(p, "theta", "$.paracomplex"), dim, "$.paracomplex.theta")};
    }
    return out;
}

Json emit_algebra(const LieAlgebraContext& ctx) {
    Json out;
    out["dim"] = ctx.dim();
    out["frame"] = ctx.frame_names();
    out["coframe"] = ctx.coframe_names();
    Json brackets = Json::array();
    for (Index i = 0; i < ctx.dim(); ++i)
        for (Index j = i + 1; j < ctx.dim(); ++j) {
            Json terms = Json::array();
            for (Index k = 0; k < ctx.dim(); ++k)
                if (!ctx.c(k, i, j).is_zero())
                    terms.push_back(Json{{"k", k}, {"c", ctx.c(k, i, j).str()}});
            if (!terms.empty()) brackets.push_back(Json{{"i", i}, {"j", j}, {"out", terms}});
        }
    out["brackets"] = brackets;
    return out;
}

Json emit_generalized(const GAPContactStructure& s, const std::string& name) {
    Json out;
    if (!name.empty()) out["name"] = name;
    out["algebra"] = emit_algebra(s.ctx);
    out["structure"] = Json{{"F", emit_matrix(s.F)},
                            {"pi", emit_upper(as_matrix(s.pi))},
                            {"sigma", emit_upper(as_matrix(s.sigma))},
                            {"Z", emit_vector(s.Z)},
                            {"xi", emit_vector(s.xi)}};
    return out;
}

Json emit_classical(const AlmostParaContact& a, const std::string& name) {
    Json out;
    if (!name.empty()) out["name"] = name;
    out["algebra"] = emit_algebra(a.ctx);
    out["classical"] = Json{{"phi", emit_matrix(a.phi)}, {"E", emit_vector(a.E)}, {"eta", emit_vector(a.eta)}};
    return out;
}

Json emit_paracomplex(const GAParacomplexStructure& j, const std::string& name) {
    Json out;
    if (!name.empty()) out["name"] = name;
    out["algebra"] = emit_algebra(j.ctx);
    out["paracomplex"] = Json{{"a", emit_matrix(j.a)},
                              {"pi", emit_upper(as_matrix(j.pi))},
                              {"theta", emit_upper(as_matrix(j.theta))}};
    return out;
}

Json report_to_json(const CheckReport& report) {
    Json out;
    out["structure"] = report.subject;
    out["summary"] = report.passed() ? "pass" : "fail";
    if (!report.classification.empty()) out["classification"] = report.classification;
    Json conditions = Json::array();
    for (const auto& c : report.conditions) {
        Json entry{{"condition", c.label}, {"pass", c.pass}};
        if (c.witness)
            entry["witness"] = Json{{"input", c.witness->input}, {"lhs", c.witness->lhs}, {"rhs", c.witness->rhs}};
        if (!c.note.empty()) entry["note"] = c.note;
        conditions.push_back(entry);
    }
    out["conditions"] = conditions;
    return out;
}

} // namespace gpc
