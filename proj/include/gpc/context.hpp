#pragma once

#include "gpc/eigen_support.hpp"
#include "gpc/report.hpp"

#include <string>
#include <vector>

namespace gpc {

/// A finite-dimensional real Lie algebra with named frame and coframe; the
/// "manifold" all calculus runs on. Structure constants follow the convention
/// [X_i, X_j] = sum_k c(k,i,j) X_k. Immutable after construction.
class LieAlgebraContext {
public:
    LieAlgebraContext(Index dim, std::vector<std::string> frame, std::vector<std::string> coframe);

    static LieAlgebraContext abelian(Index dim);

    Index dim() const { return dim_; }
    const std::vector<std::string>& frame_names() const { return frame_; }
    const std::vector<std::string>& coframe_names() const { return coframe_; }

    const Rational& c(Index k, Index i, Index j) const { return c_[static_cast<size_t>(k)](i, j); }
    /// Sets c(k,i,j) and its antisymmetric partner c(k,j,i) = -c.
    void set_bracket(Index i, Index j, Index k, const Rational& value);

    /// Coefficients of [X_i, X_j] in the frame.
    RVec bracket(Index i, Index j) const;

    /// Bilinear extension of the bracket to constant-coefficient vectors.
    template <class S>
    Vec<S> bracket(const Vec<S>& x, const Vec<S>& y) const {
        require_dim(x.size());
        require_dim(y.size());
        Vec<S> out = Vec<S>::Zero(dim_);
        for (Index i = 0; i < dim_; ++i)
            for (Index j = 0; j < dim_; ++j) {
                if (x(i) == S(0) || y(j) == S(0)) continue;
                S f = x(i) * y(j);
                for (Index k = 0; k < dim_; ++k) {
                    const Rational& ck = c(k, i, j);
                    if (!ck.is_zero()) out(k) += f * S(ck);
                }
            }
        return out;
    }

    /// Matrix of ad_X = [X, .] acting on frame coefficients.
    template <class S>
    Mat<S> ad(const Vec<S>& x) const {
        require_dim(x.size());
        Mat<S> out = Mat<S>::Zero(dim_, dim_);
        for (Index j = 0; j < dim_; ++j) {
            for (Index i = 0; i < dim_; ++i) {
                if (x(i) == S(0)) continue;
                for (Index k = 0; k < dim_; ++k) {
                    const Rational& ck = c(k, i, j);
                    if (!ck.is_zero()) out(k, j) += x(i) * S(ck);
                }
            }
        }
        return out;
    }

    void require_dim(Index n) const;

    bool operator==(const LieAlgebraContext& o) const;

private:
    Index dim_;
    std::vector<std::string> frame_;
    std::vector<std::string> coframe_;
    std::vector<RMat> c_; // c_[k](i,j)
};

/// Central extension of a base context by one generator (frame "d/dt",
/// coframe "dt"); the new generator commutes with everything.
struct ExtendedContext {
    LieAlgebraContext algebra;
    Index base_dim;

    Index t_axis() const { return base_dim; }
};

/// Antisymmetry and Jacobi, reported with the first violating index tuple.
CheckReport validate_context(const LieAlgebraContext& ctx);

ExtendedContext central_extension(const LieAlgebraContext& ctx);

/// The three-dimensional Heisenberg algebra with [X1, X2] = -X3.
LieAlgebraContext heisenberg3();

} // namespace gpc
