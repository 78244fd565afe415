#pragma once

#include "gpc/eigen_support.hpp"

#include <random>

namespace gpc::testing {

/// Deterministic small-rational generator for property-style sweeps.
class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}

    Rational rational(int max_abs_num = 9, int max_den = 9) {
        std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
        std::uniform_int_distribution<int> den(1, max_den);
        return Rational(num(gen_), den(gen_));
    }

    Rational nonzero_rational(int max_abs_num = 9, int max_den = 9) {
        while (true) {
            Rational r = rational(max_abs_num, max_den);
            if (!r.is_zero()) return r;
        }
    }

    SplitComplex split() { return SplitComplex(rational(), rational()); }

    RVec rvec(Index n) {
        RVec v(n);
        for (Index i = 0; i < n; ++i) v(i) = rational();
        return v;
    }

    SVec svec(Index n) {
        SVec v(n);
        for (Index i = 0; i < n; ++i) v(i) = split();
        return v;
    }

    int integer(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(gen_);
    }

private:
    std::mt19937 gen_;
};

} // namespace gpc::testing
