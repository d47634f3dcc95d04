#pragma once

#include <vector>

#include "scaffold/common.hpp"

namespace scaffold {

/**
 * Base-p digit vector of an element of S_{p^n} = {0, ..., p^n - 1}.
 *
 * Digits are stored most-significant-first, so for
 * s = sum_{i=1..n} s_(n-i) p^(n-i) the stored sequence is
 * (s_(n-1), ..., s_(0)). Leading zeros are kept: there are always
 * exactly n digits. coeff(j) returns the coefficient of p^j.
 */
class DigitVector {
public:
    DigitVector(Int s, Int p, Int n)
        : p_(p), n_(n), digits_(static_cast<size_t>(n), 0) {
        require(is_prime(p), "p must be prime");
        require(n >= 1, "rank n must be >= 1");
        const Int pn = checked_pow(p, n);
        require(0 <= s && s < pn, "s out of range [0, p^n)");
        for (Int j = 0; j < n; ++j) {
            digits_[static_cast<size_t>(n - 1 - j)] = static_cast<int>(s % p);
            s /= p;
        }
    }

    Int p() const { return p_; }
    Int n() const { return n_; }

    // Coefficient of p^j, written s_(j); j in [0, n).
    int coeff(Int j) const {
        require(0 <= j && j < n_, "digit index out of range");
        return digits_[static_cast<size_t>(n_ - 1 - j)];
    }

    // Most-significant-first digit sequence (s_(n-1), ..., s_(0)).
    const std::vector<int>& msd_first() const { return digits_; }

    Int value() const {
        Int v = 0;
        for (int d : digits_) v = v * p_ + d;
        return v;
    }

    Int sum() const {
        Int t = 0;
        for (int d : digits_) t += d;
        return t;
    }

    bool operator==(const DigitVector&) const = default;

private:
    Int p_, n_;
    std::vector<int> digits_;
};

inline DigitVector digits(Int s, Int p, Int n) { return DigitVector(s, p, n); }

inline Int from_digits(const DigitVector& d) { return d.value(); }

inline Int digit_sum(Int s, Int p, Int n) { return digits(s, p, n).sum(); }

// s <= t digit by digit (the multi-index partial order on S_{p^n}).
inline bool preceq_digitwise(Int s, Int t, Int p, Int n) {
    const DigitVector ds(s, p, n), dt(t, p, n);
    for (Int j = 0; j < n; ++j)
        if (ds.coeff(j) > dt.coeff(j)) return false;
    return true;
}

// Equivalent route: s <= t and the base-p addition of s and t-s is
// carry-free.
inline bool preceq_carry_free(Int s, Int t, Int p, Int n) {
    const DigitVector ds(s, p, n);
    DigitVector{t, p, n}; // range check
    if (s > t) return false;
    const DigitVector dm(t - s, p, n);
    for (Int j = 0; j < n; ++j)
        if (ds.coeff(j) + dm.coeff(j) > p - 1) return false;
    return true;
}

inline bool preceq(Int s, Int t, Int p, Int n) {
    const bool by_digits = preceq_digitwise(s, t, p, n);
    check_internal(by_digits == preceq_carry_free(s, t, p, n),
                   "preceq: digitwise and carry-free routes disagree");
    return by_digits;
}

inline bool prec(Int s, Int t, Int p, Int n) {
    return s != t && preceq(s, t, p, n);
}

// C(a,b) mod p, computed digit by digit. Zero exactly when some base-p
// digit of b exceeds the corresponding digit of a.
inline Int lucas_binom(Int a, Int b, Int p) {
    require(is_prime(p), "p must be prime");
    require(a >= 0 && b >= 0, "lucas_binom requires nonnegative arguments");
    Int result = 1;
    while (a > 0 || b > 0) {
        const Int ad = a % p, bd = b % p;
        if (bd > ad) return 0;
        // C(ad, bd) mod p via factorials; every factor is a unit mod p.
        Int num = 1, den = 1;
        for (Int i = 1; i <= bd; ++i) {
            num = mul_mod(num, ad + 1 - i, p);
            den = mul_mod(den, i, p);
        }
        result = mul_mod(result, mul_mod(num, pow_mod(den, p - 2, p), p), p);
        a /= p;
        b /= p;
    }
    return result;
}

// p^j * floor(s / p^j).
inline Int floor_j(Int s, Int j, Int p, Int n) {
    DigitVector{s, p, n};
    require(0 <= j && j < n, "j out of range [0, n)");
    const Int pj = checked_pow(p, j);
    return pj * (s / pj);
}

// p^j * ceil(s / p^j); equals floor_j(s) when p^j | s, and may be p^n.
inline Int ceil_j(Int s, Int j, Int p, Int n) {
    const Int f = floor_j(s, j, p, n);
    return f == s ? f : f + checked_pow(p, j);
}

// Number of base-p digits of s above the last nonzero one that differ
// from p-1: |{j : 1 <= j <= n-1, j > v_p(s), s_(j) != p-1}|.
inline Int alpha(Int s, Int p, Int n) {
    const DigitVector d(s, p, n);
    if (s == 0) return 0;
    const Int v = vp(s, p);
    Int count = 0;
    for (Int j = 1; j <= n - 1; ++j)
        if (j > v && d.coeff(j) != p - 1) ++count;
    return count;
}

// max{c : 0 <= c < n - v_p(s), top c digits all equal (p-1)/2};
// zero whenever p = 2.
inline Int beta(Int s, Int p, Int n) {
    const DigitVector d(s, p, n);
    if (s == 0 || p == 2) return 0;
    const Int v = vp(s, p);
    const Int half = (p - 1) / 2;
    Int c = 0;
    while (c < n - v - 1 && d.coeff(n - 1 - c) == half) ++c;
    return c;
}

inline Int gamma_fn(Int s, Int p, Int n) {
    DigitVector{s, p, n};
    return (p == 2 && s == checked_pow(2, n - 1)) ? 1 : 0;
}

} // namespace scaffold
