#pragma once

#include "gpc/context.hpp"
#include "gpc/errors.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace gpc {

// Conventions used throughout (no 1/2 normalization anywhere):
//   (a ^ b)(X, Y)      = a(X) b(Y) - a(Y) b(X), and the same shuffle rule in
//                        every degree;
//   (X ^ Y)(a, b)      = a(X) b(Y) - a(Y) b(X) for multivectors;
//   d w (X0, ..., Xk)  = sum_{i<j} (-1)^{i+j} w([Xi, Xj], X0, ..оmitting i,j..)
//                        on invariant forms, so d a (X, Y) = -a([X, Y]);
//   invariant scalars (degree-0 forms) have vanishing differential.

using IndexTuple = std::vector<Index>;

/// All strictly increasing k-tuples drawn from {0..n-1}, in lexicographic order.
inline std::vector<IndexTuple> increasing_tuples(Index n, Index k) {
    std::vector<IndexTuple> out;
    if (k < 0 || k > n) return out;
    IndexTuple cur(static_cast<size_t>(k));
    // iterative enumeration
    for (Index i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        Index pos = k - 1;
        while (pos >= 0 && cur[static_cast<size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++cur[static_cast<size_t>(pos)];
        for (Index i = pos + 1; i < k; ++i) cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)] + 1;
    }
    if (k == 0) out.assign(1, IndexTuple{});
    return out;
}

/// Sorts a tuple, returning (sorted tuple, permutation sign); sign 0 on repeats.
inline std::pair<IndexTuple, int> sort_with_sign(IndexTuple idx) {
    int sign = 1;
    for (size_t i = 1; i < idx.size(); ++i)
        for (size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
            std::swap(idx[j], idx[j - 1]);
            sign = -sign;
        }
    for (size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return {idx, 0};
    return {idx, sign};
}

namespace detail {

/// Shared component storage for fully antisymmetric tensors of one degree.
template <class S>
struct Alternating {
    Index dim = 0;
    Index degree = 0;
    std::vector<IndexTuple> tuples;
    Vec<S> comp;

    Alternating() = default;
    Alternating(Index dim_, Index degree_)
        : dim(dim_), degree(degree_), tuples(increasing_tuples(dim_, degree_)) {
        comp = Vec<S>::Zero(static_cast<Index>(tuples.size()));
    }

    Index tuple_rank(const IndexTuple& t) const {
        for (size_t r = 0; r < tuples.size(); ++r)
            if (tuples[r] == t) return static_cast<Index>(r);
        throw std::out_of_range("tuple not in component table");
    }

    S& coeff(const IndexTuple& increasing) { return comp(tuple_rank(increasing)); }
    const S& coeff(const IndexTuple& increasing) const { return comp(tuple_rank(increasing)); }

    /// Value on an arbitrary index tuple, via sorting sign.
    S eval(const IndexTuple& idx) const {
        auto [sorted, sign] = sort_with_sign(idx);
        if (sign == 0) return S(0);
        S v = comp(tuple_rank(sorted));
        return sign > 0 ? v : S(0) - v;
    }

    /// Accumulate a (possibly unsorted, possibly repeating) term.
    void add_term(const IndexTuple& idx, const S& value) {
        auto [sorted, sign] = sort_with_sign(idx);
        if (sign == 0) return;
        comp(tuple_rank(sorted)) += sign > 0 ? value : S(0) - value;
    }

    bool is_zero_tensor() const { return is_zero(comp); }

    /// Multilinear evaluation against degree-many coefficient vectors.
    S eval_on(const std::vector<Vec<S>>& args) const {
        if (static_cast<Index>(args.size()) != degree)
            throw std::invalid_argument("argument count does not match tensor degree");
        S acc(0);
        // iterate over all index assignments; dims are tiny
        IndexTuple idx(static_cast<size_t>(degree), 0);
        while (true) {
            S factor(1);
            bool skip = false;
            for (Index p = 0; p < degree && !skip; ++p) {
                const S& x = args[static_cast<size_t>(p)](idx[static_cast<size_t>(p)]);
                if (x == S(0)) skip = true;
                factor *= x;
            }
            if (!skip) {
                S w = eval(idx);
                if (!(w == S(0))) acc += factor * w;
            }
            Index p = degree - 1;
            while (p >= 0 && idx[static_cast<size_t>(p)] == dim - 1) {
                idx[static_cast<size_t>(p)] = 0;
                --p;
            }
            if (p < 0) break;
            ++idx[static_cast<size_t>(p)];
        }
        return acc;
    }
};

} // namespace detail

/// Invariant differential k-form with exact coefficients in the coframe.
template <class S>
struct Form : detail::Alternating<S> {
    Form() = default;
    Form(Index dim, Index degree) : detail::Alternating<S>(dim, degree) {}
    static Form zero_like(const Form& f) { return Form(f.dim, f.degree); }
};

/// Invariant k-multivector with exact coefficients in the frame.
template <class S>
struct Multivector : detail::Alternating<S> {
    Multivector() = default;
    Multivector(Index dim, Index degree) : detail::Alternating<S>(dim, degree) {}
};

template <class S, class T>
T combine_like(const T& a, const T& b, const char* op) {
    if (a.dim != b.dim || a.degree != b.degree)
        throw ContextMismatch(std::string("tensor shape mismatch in ") + op);
    T out = a;
    return out;
}

template <class S>
Form<S> operator+(const Form<S>& a, const Form<S>& b) {
    Form<S> out = combine_like<S>(a, b, "+");
    out.comp = a.comp + b.comp;
    return out;
}

template <class S>
Form<S> operator-(const Form<S>& a, const Form<S>& b) {
    Form<S> out = combine_like<S>(a, b, "-");
    out.comp = a.comp - b.comp;
    return out;
}

template <class S>
Form<S> operator*(const S& c, const Form<S>& a) {
    Form<S> out = a;
    out.comp = a.comp * c;
    return out;
}

template <class S>
Multivector<S> operator+(const Multivector<S>& a, const Multivector<S>& b) {
    Multivector<S> out = combine_like<S>(a, b, "+");
    out.comp = a.comp + b.comp;
    return out;
}

template <class S>
Multivector<S> operator-(const Multivector<S>& a, const Multivector<S>& b) {
    Multivector<S> out = combine_like<S>(a, b, "-");
    out.comp = a.comp - b.comp;
    return out;
}

template <class S>
Multivector<S> operator*(const S& c, const Multivector<S>& a) {
    Multivector<S> out = a;
    out.comp = a.comp * c;
    return out;
}

/// Full antisymmetric coefficient matrix of a 2-form: M(i,j) = w(Xi, Xj).
template <class S>
Mat<S> as_matrix(const Form<S>& w) {
    if (w.degree != 2) throw std::invalid_argument("as_matrix expects degree 2");
    Mat<S> m = Mat<S>::Zero(w.dim, w.dim);
    for (size_t r = 0; r < w.tuples.size(); ++r) {
        Index i = w.tuples[r][0], j = w.tuples[r][1];
        m(i, j) = w.comp(static_cast<Index>(r));
        m(j, i) = S(0) - w.comp(static_cast<Index>(r));
    }
    return m;
}

template <class S>
Mat<S> as_matrix(const Multivector<S>& p) {
    if (p.degree != 2) throw std::invalid_argument("as_matrix expects degree 2");
    Mat<S> m = Mat<S>::Zero(p.dim, p.dim);
    for (size_t r = 0; r < p.tuples.size(); ++r) {
        Index i = p.tuples[r][0], j = p.tuples[r][1];
        m(i, j) = p.comp(static_cast<Index>(r));
        m(j, i) = S(0) - p.comp(static_cast<Index>(r));
    }
    return m;
}

template <class S>
Form<S> form_from_matrix(Index dim, const Mat<S>& m) {
    Form<S> w(dim, 2);
    for (size_t r = 0; r < w.tuples.size(); ++r)
        w.comp(static_cast<Index>(r)) = m(w.tuples[r][0], w.tuples[r][1]);
    return w;
}

template <class S>
Multivector<S> multivector_from_matrix(Index dim, const Mat<S>& m) {
    Multivector<S> p(dim, 2);
    for (size_t r = 0; r < p.tuples.size(); ++r)
        p.comp(static_cast<Index>(r)) = m(p.tuples[r][0], p.tuples[r][1]);
    return p;
}

/// A section of TM + TM*, stored as (vector part, 1-form part).
template <class S>
struct GeneralizedSection {
    Vec<S> vec;
    Vec<S> form;

    GeneralizedSection() = default;
    GeneralizedSection(Vec<S> v, Vec<S> f) : vec(std::move(v)), form(std::move(f)) {}

    static GeneralizedSection zero(Index dim) {
        return GeneralizedSection(Vec<S>::Zero(dim), Vec<S>::Zero(dim));
    }
    static GeneralizedSection vector(const Vec<S>& v) {
        return GeneralizedSection(v, Vec<S>::Zero(v.size()));
    }
    static GeneralizedSection one_form(const Vec<S>& f) {
        return GeneralizedSection(Vec<S>::Zero(f.size()), f);
    }

    Index dim() const { return vec.size(); }
    bool is_zero_section() const { return is_zero(vec) && is_zero(form); }

    /// Stacked (vec; form) coordinates of length 2*dim.
    Vec<S> stacked() const {
        Vec<S> out(2 * dim());
        out.head(dim()) = vec;
        out.tail(dim()) = form;
        return out;
    }
    static GeneralizedSection from_stacked(const Vec<S>& s) {
        Index n = s.size() / 2;
        return GeneralizedSection(s.head(n), s.tail(n));
    }

    friend GeneralizedSection operator+(const GeneralizedSection& a, const GeneralizedSection& b) {
        return GeneralizedSection(a.vec + b.vec, a.form + b.form);
    }
    friend GeneralizedSection operator-(const GeneralizedSection& a, const GeneralizedSection& b) {
        return GeneralizedSection(a.vec - b.vec, a.form - b.form);
    }
    friend GeneralizedSection operator*(const S& c, const GeneralizedSection& a) {
        return GeneralizedSection(Vec<S>(a.vec * c), Vec<S>(a.form * c));
    }
    friend bool operator==(const GeneralizedSection& a, const GeneralizedSection& b) {
        return same(a.vec, b.vec) && same(a.form, b.form);
    }
};

using RSection = GeneralizedSection<Rational>;
using SSection = GeneralizedSection<SplitComplex>;

inline SSection to_split(const RSection& s) { return SSection(to_split(s.vec), to_split(s.form)); }

/// Light-cone components of a split section (pair of real sections).
inline RSection lightcone_plus(const SSection& s) {
    return RSection(lightcone_plus(s.vec), lightcone_plus(s.form));
}
inline RSection lightcone_minus(const SSection& s) {
    return RSection(lightcone_minus(s.vec), lightcone_minus(s.form));
}

// ---- printing ---------------------------------------------------------------

template <class S>
std::string scalar_str(const S& x);

template <>
inline std::string scalar_str<Rational>(const Rational& x) {
    return x.str();
}
template <>
inline std::string scalar_str<SplitComplex>(const SplitComplex& x) {
    return x.im.is_zero() ? x.re.str() : "(" + x.str() + ")";
}

template <class S>
std::string vec_str(const Vec<S>& v, const std::vector<std::string>& names) {
    std::string out;
    for (Index i = 0; i < v.size(); ++i) {
        if (v(i) == S(0)) continue;
        if (!out.empty()) out += " + ";
        out += scalar_str<S>(v(i)) + "*" + names[static_cast<size_t>(i)];
    }
    return out.empty() ? "0" : out;
}

template <class S>
std::string section_str(const GeneralizedSection<S>& s, const LieAlgebraContext& ctx) {
    std::string v = vec_str(s.vec, ctx.frame_names());
    std::string f = vec_str(s.form, ctx.coframe_names());
    if (v == "0") return f;
    if (f == "0") return v;
    return v + " + " + f;
}

template <class S>
std::string form_str(const Form<S>& w, const LieAlgebraContext& ctx) {
    std::string out;
    for (size_t r = 0; r < w.tuples.size(); ++r) {
        const S& c = w.comp(static_cast<Index>(r));
        if (c == S(0)) continue;
        if (!out.empty()) out += " + ";
        std::string basis;
        for (Index i : w.tuples[r]) {
            if (!basis.empty()) basis += "^";
            basis += ctx.coframe_names()[static_cast<size_t>(i)];
        }
        out += scalar_str<S>(c) + (basis.empty() ? "" : "*" + basis);
    }
    return out.empty() ? "0" : out;
}

template <class S>
std::string multivector_str(const Multivector<S>& p, const LieAlgebraContext& ctx) {
    std::string out;
    for (size_t r = 0; r < p.tuples.size(); ++r) {
        const S& c = p.comp(static_cast<Index>(r));
        if (c == S(0)) continue;
        if (!out.empty()) out += " + ";
        std::string basis;
        for (Index i : p.tuples[r]) {
            if (!basis.empty()) basis += "^";
            basis += ctx.frame_names()[static_cast<size_t>(i)];
        }
        out += scalar_str<S>(c) + (basis.empty() ? "" : "*" + basis);
    }
    return out.empty() ? "0" : out;
}

} // namespace gpc
