#pragma once

#include "gpc/scalars.hpp"

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<gpc::Rational> : GenericNumTraits<gpc::Rational> {
    typedef gpc::Rational Real;
    typedef gpc::Rational NonInteger;
    typedef gpc::Rational Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 40,
        MulCost = 40
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<gpc::SplitComplex> : GenericNumTraits<gpc::SplitComplex> {
    typedef gpc::SplitComplex Real;
    typedef gpc::SplitComplex NonInteger;
    typedef gpc::SplitComplex Nested;
    enum {
        IsComplex = 0, // commutative ring scalar; never let Eigen conjugate it
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 16,
        AddCost = 80,
        MulCost = 80
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace gpc {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using RMat = Mat<Rational>;
using RVec = Vec<Rational>;
using SMat = Mat<SplitComplex>;
using SVec = Vec<SplitComplex>;

using Index = Eigen::Index;

template <class S>
bool is_zero(const Mat<S>& m) {
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (!(m(i, j) == S(0))) return false;
    return true;
}

template <class S>
bool is_zero(const Vec<S>& v) {
    for (Index i = 0; i < v.size(); ++i)
        if (!(v(i) == S(0))) return false;
    return true;
}

template <class S>
bool same(const Mat<S>& a, const Mat<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return is_zero<S>(Mat<S>(a - b));
}

template <class S>
bool same(const Vec<S>& a, const Vec<S>& b) {
    if (a.size() != b.size()) return false;
    return is_zero<S>(Vec<S>(a - b));
}

/// Exact dot product with no conjugation, valid over any commutative ring.
template <class S>
S dot(const Vec<S>& a, const Vec<S>& b) {
    S acc(0);
    for (Index i = 0; i < a.size(); ++i) acc += a(i) * b(i);
    return acc;
}

inline SVec to_split(const RVec& v) {
    SVec out(v.size());
    for (Index i = 0; i < v.size(); ++i) out(i) = SplitComplex(v(i));
    return out;
}

inline SMat to_split(const RMat& m) {
    SMat out(m.rows(), m.cols());
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i) out(i, j) = SplitComplex(m(i, j));
    return out;
}

/// Light-cone components of a split-complex vector: v = e+*plus + e-*minus.
inline RVec lightcone_plus(const SVec& v) {
    RVec out(v.size());
    for (Index i = 0; i < v.size(); ++i) out(i) = v(i).plus();
    return out;
}

inline RVec lightcone_minus(const SVec& v) {
    RVec out(v.size());
    for (Index i = 0; i < v.size(); ++i) out(i) = v(i).minus();
    return out;
}

inline SVec from_lightcone(const RVec& p, const RVec& m) {
    SVec out(p.size());
    for (Index i = 0; i < p.size(); ++i) out(i) = SplitComplex::from_lightcone(p(i), m(i));
    return out;
}

} // namespace gpc
