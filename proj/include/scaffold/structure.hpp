#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "scaffold/padic.hpp"

namespace scaffold {

/**
 * Shift parameters (p, n, b_1..b_n) with each b_i coprime to p.
 *
 * Carries the two basic maps on S_{p^n}: b(s) = sum s_(n-i) p^(n-i) b_i,
 * and its "inverse" a(t), the unique s with b(s) = -t mod p^n. The
 * inverse table is built eagerly; bijectivity of r(b(.)) is verified
 * rather than assumed.
 */
class ScaffoldParams {
public:
    ScaffoldParams(Int p, Int n, std::vector<Int> shifts)
        : p_(p), n_(n), shifts_(std::move(shifts)) {
        require(is_prime(p_), "p must be prime");
        require(n_ >= 1, "rank n must be >= 1");
        require(static_cast<Int>(shifts_.size()) == n_,
                "expected exactly n shift parameters");
        pn_ = checked_pow(p_, n_);
        for (Int i = 1; i <= n_; ++i)
            require(mod_floor(shifts_[static_cast<size_t>(i - 1)], p_) != 0,
                    "shift parameter b_" + std::to_string(i) +
                        " must be coprime to p");
        a_table_.assign(static_cast<size_t>(pn_), -1);
        for (Int s = 0; s < pn_; ++s) {
            const Int slot = mod_floor(-b_func(s), pn_);
            check_internal(a_table_[static_cast<size_t>(slot)] == -1,
                           "r(b(.)) is not injective on S_{p^n}");
            a_table_[static_cast<size_t>(slot)] = s;
        }
    }

    Int p() const { return p_; }
    Int n() const { return n_; }
    Int modulus() const { return pn_; }
    const std::vector<Int>& shifts() const { return shifts_; }

    Int residue(Int t) const { return mod_floor(t, pn_); }

    // b(s) = sum_{i=1..n} s_(n-i) p^(n-i) b_i; exact, may be negative
    // or exceed p^n.
    Int b_func(Int s) const {
        require(0 <= s && s < pn_, "s out of range [0, p^n)");
        Int value = 0, pw = 1;
        for (Int j = 0; j < n_; ++j) { // j = n - i
            const Int digit = (s / pw) % p_;
            value += digit * pw * shifts_[static_cast<size_t>(n_ - 1 - j)];
            pw *= p_;
        }
        return value;
    }

    // a(t): the unique s in S_{p^n} with b(s) = -t mod p^n, extended to
    // all integers through t -> r(t).
    Int a_func(Int t) const { return a_table_[static_cast<size_t>(residue(t))]; }

private:
    Int p_, n_, pn_;
    std::vector<Int> shifts_;
    std::vector<Int> a_table_;
};

// The window S_{p^n}(h) = {t : h <= t < h + p^n}.
struct IdealWindow {
    Int h;
    Int pn;
    Int lo() const { return h; }
    Int hi() const { return h + pn; } // exclusive
    bool contains(Int t) const { return h <= t && t < h + pn; }
};

// The unique b in S_{p^n}(h) with a(b) = p^n - 1 (the valuation
// criterion exponent).
inline Int valuation_criterion_b(const ScaffoldParams& params, Int h) {
    const Int pn = params.modulus();
    const Int cls = mod_floor(-params.b_func(pn - 1), pn);
    const Int b = h + mod_floor(cls - h, pn);
    check_internal(params.a_func(b) == pn - 1, "valuation criterion exponent");
    return b;
}

inline Int D_func(const ScaffoldParams& params, Int h, Int s, Int t) {
    const IdealWindow win{h, params.modulus()};
    require(win.contains(t), "t outside the window S_{p^n}(h)");
    return floor_div(params.b_func(s) + t - h, params.modulus());
}

inline Int H_func(const ScaffoldParams& params, Int h, Int s, Int t) {
    const IdealWindow win{h, params.modulus()};
    require(win.contains(t), "t outside the window S_{p^n}(h)");
    const Int pn = params.modulus();
    const Int H = h + mod_floor(params.b_func(s) + t - h, pn);
    check_internal(t + params.b_func(s) == H + pn * D_func(params, h, s, t),
                   "t + b(s) = H(s,t) + p^n D(s,t) violated");
    return H;
}

inline Int d_func(const ScaffoldParams& params, Int h, Int s) {
    return D_func(params, h, s, valuation_criterion_b(params, h));
}

inline std::vector<Int> d_vector(const ScaffoldParams& params, Int h) {
    const Int pn = params.modulus();
    const Int b = valuation_criterion_b(params, h);
    std::vector<Int> d(static_cast<size_t>(pn));
    for (Int s = 0; s < pn; ++s)
        d[static_cast<size_t>(s)] = floor_div(params.b_func(s) + b - h, pn);
    return d;
}

namespace detail {

// Flat digit table for the O(p^2n) inner loops; one lookup per pair
// instead of two DigitVector constructions.
class DigitTable {
public:
    explicit DigitTable(const ScaffoldParams& params)
        : n_(params.n()), dig_(static_cast<size_t>(params.modulus() * n_)) {
        const Int p = params.p(), pn = params.modulus();
        for (Int s = 0; s < pn; ++s) {
            Int v = s;
            for (Int j = 0; j < n_; ++j) {
                dig_[static_cast<size_t>(s * n_ + j)] = static_cast<int8_t>(v % p);
                v /= p;
            }
        }
    }

    bool below(Int s, Int t) const {
        for (Int j = 0; j < n_; ++j)
            if (dig_[static_cast<size_t>(s * n_ + j)] >
                dig_[static_cast<size_t>(t * n_ + j)])
                return false;
        return true;
    }

private:
    Int n_;
    std::vector<int8_t> dig_;
};

// w(s) by the defining minimization over u >= s, cross-checked against
// the equivalent j-form and against the window form
// min{ D(s,t) : t in S_{p^n}(h), a(t) >= s }.
inline Int w_of(const ScaffoldParams& params, Int h, Int s,
                const std::vector<Int>& d, const DigitTable& digits) {
    const Int pn = params.modulus();
    std::optional<Int> by_def, by_j, by_window;
    for (Int u = s; u < pn; ++u) {
        if (!digits.below(s, u)) continue;
        const Int cand = d[static_cast<size_t>(u)] - d[static_cast<size_t>(u - s)];
        if (!by_def || cand < *by_def) by_def = cand;
    }
    for (Int j = 0; j <= pn - 1 - s; ++j) {
        if (!digits.below(j, pn - 1 - s)) continue;
        const Int cand = d[static_cast<size_t>(s + j)] - d[static_cast<size_t>(j)];
        if (!by_j || cand < *by_j) by_j = cand;
    }
    for (Int t = h; t < h + pn; ++t) {
        if (!digits.below(s, params.a_func(t))) continue;
        const Int cand = D_func(params, h, s, t);
        if (!by_window || cand < *by_window) by_window = cand;
    }
    check_internal(by_def && by_def == by_j && by_def == by_window,
                   "w(s): the three computation routes disagree");
    return *by_def;
}

inline std::vector<Int> w_vector_impl(const ScaffoldParams& params, Int h,
                                      const std::vector<Int>& d,
                                      const DigitTable& digits) {
    const Int pn = params.modulus();
    std::vector<Int> w(static_cast<size_t>(pn));
    for (Int s = 0; s < pn; ++s)
        w[static_cast<size_t>(s)] = w_of(params, h, s, d, digits);
    return w;
}

inline std::vector<Int> dd_impl(Int pn, const std::vector<Int>& d,
                                const std::vector<Int>& w,
                                const DigitTable& digits) {
    std::vector<Int> dd;
    for (Int u = 0; u < pn; ++u) {
        bool in = true;
        for (Int s = 1; in && s <= u; ++s) {
            if (!digits.below(s, u)) continue;
            if (!(d[static_cast<size_t>(u)] >
                  d[static_cast<size_t>(u - s)] + w[static_cast<size_t>(s)]))
                in = false;
        }
        if (in) dd.push_back(u);
    }
    return dd;
}

inline std::vector<Int> ee_impl(Int pn, const std::vector<Int>& w,
                                const DigitTable& digits) {
    std::vector<Int> ee;
    for (Int u = 0; u < pn; ++u) {
        bool in = true;
        for (Int s = 1; in && s < u; ++s) {
            if (!digits.below(s, u)) continue;
            if (!(w[static_cast<size_t>(u)] >
                  w[static_cast<size_t>(u - s)] + w[static_cast<size_t>(s)]))
                in = false;
        }
        if (in) ee.push_back(u);
    }
    return ee;
}

} // namespace detail

inline Int w_func(const ScaffoldParams& params, Int h, Int s) {
    require(0 <= s && s < params.modulus(), "s out of range [0, p^n)");
    return detail::w_of(params, h, s, d_vector(params, h),
                        detail::DigitTable(params));
}

inline std::vector<Int> w_vector(const ScaffoldParams& params, Int h) {
    return detail::w_vector_impl(params, h, d_vector(params, h),
                                 detail::DigitTable(params));
}

// epsilon(s,t) = D(s,t) - w(s), defined for s preceq a(t); always 0 or 1.
inline Int epsilon(const ScaffoldParams& params, Int h, Int s, Int t) {
    require(preceq(s, params.a_func(t), params.p(), params.n()),
            "epsilon(s,t) requires s preceq a(t)");
    const Int e = D_func(params, h, s, t) - w_func(params, h, s);
    check_internal(e == 0 || e == 1, "epsilon(s,t) outside {0,1}");
    return e;
}

inline std::vector<Int> dd_set(const ScaffoldParams& params, Int h) {
    const detail::DigitTable digits(params);
    const auto d = d_vector(params, h);
    const auto w = detail::w_vector_impl(params, h, d, digits);
    return detail::dd_impl(params.modulus(), d, w, digits);
}

inline std::vector<Int> ee_set(const ScaffoldParams& params, Int h) {
    const detail::DigitTable digits(params);
    const auto d = d_vector(params, h);
    const auto w = detail::w_vector_impl(params, h, d, digits);
    return detail::ee_impl(params.modulus(), w, digits);
}

/**
 * Everything the scaffold machinery says about the ideal P_L^h: the
 * valuation-criterion exponent b, the d and w vectors, freeness over the
 * associated order, the generator set DD, the embedding set EE, and the
 * tolerance an actual scaffold must meet for these conclusions to apply.
 */
struct StructureReport {
    Int p = 0, n = 0;
    std::vector<Int> shifts;
    Int h = 0;
    Int b_exponent = 0;
    std::vector<Int> d, w;
    bool free = false;
    std::vector<Int> dd, ee;
    Int min_generators = 0;
    Int embedding_dimension = 0;
    Int tolerance_required = 0;

    bool operator==(const StructureReport&) const = default;
};

inline StructureReport analyze(const ScaffoldParams& params, Int h) {
    const Int p = params.p(), n = params.n(), pn = params.modulus();
    const detail::DigitTable digits(params);
    StructureReport r;
    r.p = p;
    r.n = n;
    r.shifts = params.shifts();
    r.h = h;
    r.b_exponent = valuation_criterion_b(params, h);
    r.d = d_vector(params, h);
    r.w = detail::w_vector_impl(params, h, r.d, digits);
    r.free = (r.d == r.w);
    r.dd = detail::dd_impl(pn, r.d, r.w, digits);
    r.ee = detail::ee_impl(pn, r.w, digits);
    r.min_generators = static_cast<Int>(r.dd.size());
    r.embedding_dimension = static_cast<Int>(r.ee.size());
    r.tolerance_required = pn + r.b_exponent - h;

    check_internal(r.d[0] == 0 && r.w[0] == 0, "d(0) = w(0) = 0 violated");
    // b(.) is nonnegative exactly when every shift parameter is positive;
    // only then are d and w bounded below by 0. (Shifting b_i by p^i
    // translates both d and w, so negative values occur for unnormalized
    // shifts.)
    bool positive_shifts = true;
    for (Int bi : params.shifts())
        if (bi < 1) positive_shifts = false;
    for (Int s = 0; s < pn; ++s) {
        check_internal(r.w[static_cast<size_t>(s)] <= r.d[static_cast<size_t>(s)],
                       "w(s) <= d(s) violated");
        if (positive_shifts)
            check_internal(0 <= r.w[static_cast<size_t>(s)],
                           "0 <= w(s) violated for positive shifts");
    }
    check_internal(r.free == (r.min_generators == 1),
                   "free iff one generator violated");
    check_internal(!r.dd.empty() && r.dd[0] == 0, "0 must lie in DD");
    for (Int j = 0, pw = 1; j < n; ++j, pw *= p)
        check_internal(std::binary_search(r.ee.begin(), r.ee.end(), pw),
                       "powers of p must lie in EE");
    check_internal(std::binary_search(r.ee.begin(), r.ee.end(), Int(0)),
                   "0 must lie in EE");
    return r;
}

// Corollary-level criteria; both require b_i = b_n mod p^i for all i.
struct RingOfIntegersFreeness {
    bool free = false;
    std::optional<Int> witness_m; // least m <= n with r(b_n) | p^m - 1
};

namespace detail {

inline void require_congruent_shifts(const ScaffoldParams& params) {
    Int pi = 1;
    for (Int i = 1; i <= params.n(); ++i) {
        pi *= params.p();
        const Int bi = params.shifts()[static_cast<size_t>(i - 1)];
        const Int bn = params.shifts().back();
        require(mod_floor(bi - bn, pi) == 0,
                "shift parameter b_" + std::to_string(i) +
                    " is not congruent to b_n mod p^" + std::to_string(i));
    }
}

} // namespace detail

inline RingOfIntegersFreeness ring_of_integers_free(const ScaffoldParams& params) {
    detail::require_congruent_shifts(params);
    RingOfIntegersFreeness result;
    result.free = analyze(params, 0).free;
    const Int bn = params.residue(params.shifts().back());
    Int pm = 1;
    for (Int m = 1; m <= params.n(); ++m) {
        pm *= params.p();
        if ((pm - 1) % bn == 0) {
            result.witness_m = m;
            break;
        }
    }
    return result;
}

inline bool inverse_different_free(const ScaffoldParams& params) {
    detail::require_congruent_shifts(params);
    const Int bn = params.residue(params.shifts().back());
    const bool free = analyze(params, bn + 1).free;
    check_internal(free == (bn == params.modulus() - 1),
                   "inverse different freeness must match r(b_n) = p^n - 1");
    return free;
}

/**
 * Brute-force bijectivity of (x_1..x_n) -> sum a_i x_i mod p^n on
 * S_p^n, checked against the valuation-profile criterion: bijective iff
 * the a_i can be relabelled so that v_p(a_i) = n - i.
 */
struct BFunctionResult {
    bool bijective = false;
    // relabeling[i-1] = original index (1-based) of the coefficient
    // placed in slot i, so that v_p(a_relabeling[i-1]) = n - i.
    std::vector<Int> relabeling;
    // two distinct digit tuples with the same image, when not bijective
    std::vector<Int> collision_x, collision_y;
};

inline BFunctionResult bfunction_bijective(const std::vector<Int>& a, Int p, Int n) {
    require(is_prime(p), "p must be prime");
    require(n >= 1 && static_cast<Int>(a.size()) == n,
            "expected exactly n coefficients");
    const Int pn = checked_pow(p, n);
    if (pn > 3125)
        throw resource_error("brute-force bijectivity limited to p^n <= 3125");

    BFunctionResult result;
    std::vector<Int> seen(static_cast<size_t>(pn), -1);
    std::vector<Int> x(static_cast<size_t>(n), 0);
    bool brute = true;
    for (Int code = 0; code < pn && brute; ++code) {
        Int c = code, value = 0;
        for (Int i = 0; i < n; ++i) {
            x[static_cast<size_t>(i)] = c % p;
            c /= p;
            value += a[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
        }
        const Int slot = mod_floor(value, pn);
        if (seen[static_cast<size_t>(slot)] >= 0) {
            brute = false;
            const Int prev = seen[static_cast<size_t>(slot)];
            for (Int i = 0, cc = prev; i < n; ++i, cc /= p)
                result.collision_x.push_back(cc % p);
            result.collision_y.assign(x.begin(), x.end());
        } else {
            seen[static_cast<size_t>(slot)] = code;
        }
    }

    // Criterion: the multiset {v_p(a_i)} is exactly {0, 1, ..., n-1}.
    bool criterion = true;
    std::vector<Int> slot_of(static_cast<size_t>(n), 0); // v -> original index
    std::vector<bool> used(static_cast<size_t>(n), false);
    for (Int i = 0; i < n && criterion; ++i) {
        const Int ai = a[static_cast<size_t>(i)];
        if (ai == 0) { criterion = false; break; }
        const Int v = vp(ai, p);
        if (v >= n || used[static_cast<size_t>(v)]) { criterion = false; break; }
        used[static_cast<size_t>(v)] = true;
        slot_of[static_cast<size_t>(v)] = i + 1;
    }

    check_internal(brute == criterion,
                   "bijectivity brute force and valuation profile disagree");
    result.bijective = brute;
    if (brute)
        for (Int i = 1; i <= n; ++i) // slot i wants v_p = n - i
            result.relabeling.push_back(slot_of[static_cast<size_t>(n - i)]);
    return result;
}

} // namespace scaffold
