#include "gpc/context.hpp"

#include "gpc/errors.hpp"

namespace gpc {

LieAlgebraContext::LieAlgebraContext(Index dim, std::vector<std::string> frame,
                                     std::vector<std::string> coframe)
    : dim_(dim), frame_(std::move(frame)), coframe_(std::move(coframe)) {
    if (dim_ <= 0) throw std::invalid_argument("context dimension must be positive");
    if (frame_.empty()) {
        for (Index i = 0; i < dim_; ++i) frame_.push_back("X" + std::to_string(i + 1));
    }
    if (coframe_.empty()) {
        for (Index i = 0; i < dim_; ++i) coframe_.push_back("a" + std::to_string(i + 1));
    }
    if (static_cast<Index>(frame_.size()) != dim_ || static_cast<Index>(coframe_.size()) != dim_)
        throw std::invalid_argument("frame/coframe label count does not match dimension");
    c_.assign(static_cast<size_t>(dim_), RMat::Zero(dim_, dim_));
}

LieAlgebraContext LieAlgebraContext::abelian(Index dim) {
    return LieAlgebraContext(dim, {}, {});
}

void LieAlgebraContext::set_bracket(Index i, Index j, Index k, const Rational& value) {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_ || k < 0 || k >= dim_)
        throw std::out_of_range("bracket index out of range");
    if (i == j && !value.is_zero()) throw std::invalid_argument("[X,X] must vanish");
    c_[static_cast<size_t>(k)](i, j) = value;
    c_[static_cast<size_t>(k)](j, i) = -value;
}

RVec LieAlgebraContext::bracket(Index i, Index j) const {
    RVec out(dim_);
    for (Index k = 0; k < dim_; ++k) out(k) = c(k, i, j);
    return out;
}

void LieAlgebraContext::require_dim(Index n) const {
    if (n != dim_)
        throw ContextMismatch("object of dimension " + std::to_string(n) +
                              " used on a context of dimension " + std::to_string(dim_));
}

bool LieAlgebraContext::operator==(const LieAlgebraContext& o) const {
    if (dim_ != o.dim_) return false;
    for (Index k = 0; k < dim_; ++k)
        if (!same(c_[static_cast<size_t>(k)], o.c_[static_cast<size_t>(k)])) return false;
    return true;
}

CheckReport validate_context(const LieAlgebraContext& ctx) {
    CheckReport report;
    report.subject = "context";
    const Index n = ctx.dim();

    auto& anti = report.add("antisymmetry");
    for (Index i = 0; i < n && anti.pass; ++i)
        for (Index j = 0; j < n && anti.pass; ++j)
            for (Index k = 0; k < n; ++k)
                if (ctx.c(k, i, j) + ctx.c(k, j, i) != Rational(0)) {
                    report.fail(anti,
                                "(" + ctx.frame_names()[static_cast<size_t>(i)] + ", " +
                                    ctx.frame_names()[static_cast<size_t>(j)] + ")",
                                ctx.c(k, i, j).str(), (-ctx.c(k, j, i)).str());
                    break;
                }

    auto& jacobi = report.add("jacobi");
    for (Index i = 0; i < n && jacobi.pass; ++i)
        for (Index j = i + 1; j < n && jacobi.pass; ++j)
            for (Index k = j + 1; k < n && jacobi.pass; ++k) {
                // [[Xi,Xj],Xk] + [[Xj,Xk],Xi] + [[Xk,Xi],Xj]
                RVec sum = ctx.bracket(ctx.bracket(i, j), RVec(RVec::Unit(n, k)));
                sum += ctx.bracket(ctx.bracket(j, k), RVec(RVec::Unit(n, i)));
                sum += ctx.bracket(ctx.bracket(k, i), RVec(RVec::Unit(n, j)));
                if (!is_zero(sum)) {
                    std::string terms;
                    for (Index m = 0; m < n; ++m)
                        if (!sum(m).is_zero()) {
                            if (!terms.empty()) terms += " + ";
                            terms += "(" + sum(m).str() + ")*" + ctx.frame_names()[static_cast<size_t>(m)];
                        }
                    report.fail(jacobi,
                                "(" + ctx.frame_names()[static_cast<size_t>(i)] + ", " +
                                    ctx.frame_names()[static_cast<size_t>(j)] + ", " +
                                    ctx.frame_names()[static_cast<size_t>(k)] + ")",
                                terms, "0");
                }
            }

    return report;
}

ExtendedContext central_extension(const LieAlgebraContext& ctx) {
    const Index n = ctx.dim();
    std::vector<std::string> frame = ctx.frame_names();
    std::vector<std::string> coframe = ctx.coframe_names();
    frame.push_back("d/dt");
    coframe.push_back("dt");
    LieAlgebraContext ext(n + 1, std::move(frame), std::move(coframe));
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            for (Index k = 0; k < n; ++k)
                if (!ctx.c(k, i, j).is_zero()) ext.set_bracket(i, j, k, ctx.c(k, i, j));
    return ExtendedContext{std::move(ext), n};
}

LieAlgebraContext heisenberg3() {
    LieAlgebraContext ctx(3, {}, {});
    ctx.set_bracket(0, 1, 2, Rational(-1)); // [X1, X2] = -X3
    return ctx;
}

} // namespace gpc
