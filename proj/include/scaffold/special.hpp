#pragma once

#include <numeric>
#include <vector>

#include "scaffold/structure.hpp"

namespace scaffold {

/**
 * Canonical continued fraction [0; q_1, ..., q_m] of a rational in
 * (0,1), computed by the Euclidean algorithm. The canonical form has
 * q_m >= 2, which the algorithm produces automatically once the input
 * is reduced to lowest terms.
 */
struct ContinuedFraction {
    std::vector<Int> quotients; // q_1..q_m; the leading 0 is implicit
    Int num = 0, den = 1;       // the represented rational, lowest terms

    Int length() const { return static_cast<Int>(quotients.size()); }

    // Re-evaluate the expansion; must reproduce num/den exactly.
    std::pair<Int, Int> evaluate() const {
        Int nu = 0, de = 1; // value accumulates right to left
        for (auto it = quotients.rbegin(); it != quotients.rend(); ++it) {
            // x -> 1 / (q + x)
            const Int q = *it;
            const Int new_de = q * de + nu;
            nu = de;
            de = new_de;
        }
        return {nu, de};
    }
};

inline ContinuedFraction continued_fraction(Int num, Int den) {
    require(den > 0 && 0 < num && num < den,
            "continued_fraction requires 0 < num/den < 1");
    const Int g = std::gcd(num, den);
    ContinuedFraction cf;
    cf.num = num / g;
    cf.den = den / g;
    Int a = cf.den, b = cf.num; // expand b/a after the leading 0
    while (b != 0) {
        cf.quotients.push_back(a / b);
        const Int r = a % b;
        a = b;
        b = r;
    }
    check_internal(cf.quotients.back() >= 2,
                   "canonical continued fraction has last quotient >= 2");
    const auto [nu, de] = cf.evaluate();
    check_internal(nu == cf.num && de == cf.den,
                   "continued fraction does not re-evaluate to its input");
    return cf;
}

// Ferton's freeness criterion for P_L^h in degree p, read off the
// continued fraction expansion of b'/p.
inline bool ferton_free(Int h, Int b_prime, Int p) {
    require(is_prime(p), "p must be prime");
    require(1 <= b_prime && b_prime <= p - 1, "b' must lie in [1, p-1]");
    h = mod_floor(h, p);
    if (b_prime == 1)
        return h == 0 || h == 1 || 2 * h > p + 1;
    if (h > b_prime)
        return false;
    const ContinuedFraction cf = continued_fraction(b_prime, p);
    const Int qm = cf.quotients.back();
    if (cf.length() % 2 == 0)
        return h == b_prime || h == b_prime - qm;
    // odd length: b' - q_m/2 <= h <= b', compared exactly
    return 2 * (b_prime - h) <= qm;
}

struct BiquadReport {
    bool free = false;
    Int min_generators = 0;
    Int embedding_dimension = 0;

    bool operator==(const BiquadReport&) const = default;
};

// Closed-form structure of P_L^h for biquadratic extensions (p = 2,
// n = 2), parameterized by b_1 mod 4 and h mod 4.
inline BiquadReport biquad_report(Int b1_mod4, Int h) {
    require(b1_mod4 == 1 || b1_mod4 == 3, "b_1 mod 4 must be 1 or 3");
    const Int hm = mod_floor(h, 4);
    BiquadReport r;
    r.free = (b1_mod4 == 1) ? (hm != 2) : (hm != 1);
    r.min_generators = r.free ? 1 : 3;
    const bool h_odd = (hm % 2 == 1);
    r.embedding_dimension =
        ((b1_mod4 == 1 && h_odd) || (b1_mod4 == 3 && !h_odd)) ? 3 : 4;
    return r;
}

/**
 * Structure of P_L^h for totally and weakly ramified extensions of
 * degree p^n (all shift parameters 1), by the digit formulas. h is
 * canonicalized to h' in [2, p^n] except in the group-ring case
 * h = 1 mod p^n, which is flagged.
 */
struct WeakReport {
    bool h_is_one_mod_pn = false;
    Int h_prime = 0; // canonical residue in [2, p^n]; 1 when flagged
    Int m = 0;       // h' - 1
    Int k = 0;       // max(m, p^n - m)
    bool free = false;
    Int min_generators = 0;
    Int embedding_dimension = 0;

    bool operator==(const WeakReport&) const = default;
};

inline WeakReport weak_report(Int p, Int n, Int h) {
    require(is_prime(p), "p must be prime");
    require(n >= 1, "rank n must be >= 1");
    const Int pn = checked_pow(p, n);
    WeakReport r;
    if (mod_floor(h - 1, pn) == 0) {
        r.h_is_one_mod_pn = true;
        r.h_prime = 1;
        r.free = true;
        r.min_generators = 1;
        r.embedding_dimension = n + 1;
        return r;
    }
    r.h_prime = mod_floor(h - 2, pn) + 2; // in [2, p^n]
    r.m = r.h_prime - 1;
    r.k = std::max(r.m, pn - r.m);
    r.free = 2 * r.h_prime >= pn + 2; // h' >= 1 + p^n/2, exactly
    r.min_generators = r.free ? 1 : 2 + alpha(r.m, p, n) - beta(r.m, p, n);
    r.embedding_dimension = n + 2 + alpha(r.k, p, n) - gamma_fn(r.k, p, n);
    return r;
}

/**
 * Sweep of all ideal classes h mod p^n in the weakly ramified case,
 * with the extreme generator counts and embedding dimensions and
 * witnessing exponents. Construction re-derives the stated extremes
 * and fails on any discrepancy.
 */
struct WeakExtremes {
    Int p = 0, n = 0;
    Int max_generators = 0;
    Int max_generators_h = 0;
    // over non-free classes; absent when every ideal is free (p^n = 2)
    std::optional<Int> min_nonfree_generators;
    std::optional<Int> min_nonfree_generators_h;
    Int min_embedding_dimension = 0;
    Int min_embedding_dimension_h = 0;
    Int max_embedding_dimension = 0;
    Int max_embedding_dimension_h = 0;
};

inline WeakExtremes weak_extremes(Int p, Int n) {
    const Int pn = checked_pow(p, n);
    WeakExtremes x;
    x.p = p;
    x.n = n;
    std::vector<WeakReport> reports;
    reports.reserve(static_cast<size_t>(pn));
    for (Int h = 1; h <= pn; ++h) reports.push_back(weak_report(p, n, h));

    x.max_generators = 0;
    x.min_embedding_dimension = reports[0].embedding_dimension;
    x.max_embedding_dimension = reports[0].embedding_dimension;
    x.min_embedding_dimension_h = 1;
    x.max_embedding_dimension_h = 1;
    for (Int h = 1; h <= pn; ++h) {
        const WeakReport& r = reports[static_cast<size_t>(h - 1)];
        if (r.min_generators > x.max_generators) {
            x.max_generators = r.min_generators;
            x.max_generators_h = h;
        }
        if (!r.free &&
            (!x.min_nonfree_generators || r.min_generators < *x.min_nonfree_generators)) {
            x.min_nonfree_generators = r.min_generators;
            x.min_nonfree_generators_h = h;
        }
        if (r.embedding_dimension < x.min_embedding_dimension) {
            x.min_embedding_dimension = r.embedding_dimension;
            x.min_embedding_dimension_h = h;
        }
        if (r.embedding_dimension > x.max_embedding_dimension) {
            x.max_embedding_dimension = r.embedding_dimension;
            x.max_embedding_dimension_h = h;
        }
    }

    const auto rep = [&](Int h) -> const WeakReport& {
        return reports[static_cast<size_t>(mod_floor(h - 1, pn))];
    };
    if (p > 2) {
        check_internal(x.max_generators == n + 1,
                       "weak extremes: max generators must be n+1");
        check_internal(x.min_nonfree_generators && *x.min_nonfree_generators == 2,
                       "weak extremes: min non-free generators must be 2");
        check_internal(rep((pn + 1) / 2).min_generators == 2 &&
                           !rep((pn + 1) / 2).free,
                       "weak extremes: h = (p^n+1)/2 must need exactly 2 generators");
        check_internal(x.min_embedding_dimension == n + 1 &&
                           x.max_embedding_dimension == 2 * n + 1,
                       "weak extremes: embedding dimension range is [n+1, 2n+1]");
        check_internal(rep((pn + 1) / 2).embedding_dimension == 2 * n + 1,
                       "weak extremes: h = (p^n+1)/2 attains 2n+1");
        check_internal(rep(2).embedding_dimension == n + 2 &&
                           rep(pn).embedding_dimension == n + 2,
                       "weak extremes: h = 2 and h = p^n attain n+2");
        for (Int h = 1; h <= pn; ++h)
            check_internal((rep(h).embedding_dimension == n + 1) == (h == 1),
                           "weak extremes: minimal embedding dimension only at h = 1");
        // every value between the extremes occurs
        std::vector<bool> hit(static_cast<size_t>(2 * n + 2), false);
        for (const auto& r : reports)
            hit[static_cast<size_t>(r.embedding_dimension)] = true;
        for (Int v = n + 1; v <= 2 * n + 1; ++v)
            check_internal(hit[static_cast<size_t>(v)],
                           "weak extremes: embedding dimension skips a value");
    } else if (n > 1) {
        check_internal(x.max_generators == n + 1,
                       "weak extremes: max generators must be n+1");
        for (const auto& r : reports)
            check_internal(r.min_generators != 2,
                           "weak extremes: no ideal needs exactly 2 generators for p=2");
        check_internal(rep(pn / 2).min_generators == 3,
                       "weak extremes: h = 2^(n-1) must need exactly 3 generators");
        for (Int h = 1; h <= pn; ++h) {
            const bool is_min = rep(h).embedding_dimension == n + 1;
            check_internal(is_min == (h == 1 || h == pn / 2 + 1),
                           "weak extremes: minimal embedding dimension exactly at "
                           "h = 1 and h = 2^(n-1)+1");
            const bool is_max = rep(h).embedding_dimension == 2 * n;
            check_internal(is_max == (h == pn / 2 || h == pn / 2 + 2),
                           "weak extremes: maximal embedding dimension exactly at "
                           "h = 2^(n-1) and h = 2^(n-1)+2");
        }
    } else {
        // p^n = 2: every ideal is free and both orders look alike.
        for (const auto& r : reports) {
            check_internal(r.free, "weak extremes: all ideals free for p^n = 2");
            check_internal(r.embedding_dimension == 2,
                           "weak extremes: embedding dimension 2 for p^n = 2");
        }
    }
    return x;
}

// Ramification breaks of Miyata's cyclic Kummer extensions from
// v_K(a-1) and v_K(p); the b_i come out congruent mod p^n, which is
// verified.
inline std::vector<Int> miyata_breaks(Int p, Int n, Int vK_a_minus_1, Int vK_p) {
    require(is_prime(p), "p must be prime");
    require(n >= 1, "rank n must be >= 1");
    require(vK_a_minus_1 > 0 && vK_p > 0, "valuations must be positive");
    require(std::gcd(vK_a_minus_1, p) == 1, "v_K(a-1) must be coprime to p");
    require((p * vK_p) % (p - 1) == 0, "b_1 is not integral: (p-1) must divide p*v_K(p)");
    const Int b1 = (p * vK_p) / (p - 1) - vK_a_minus_1;
    std::vector<Int> b{b1};
    Int geom = 0, pw = 1;
    for (Int i = 2; i <= n; ++i) {
        pw *= p;
        geom += pw; // p + p^2 + ... + p^(i-1)
        b.push_back(b1 + vK_p * geom);
    }
    const Int pn = checked_pow(p, n);
    for (Int i = 1; i <= n; ++i)
        require(mod_floor(b[static_cast<size_t>(i - 1)] - b.back(), pn) == 0,
                "break b_" + std::to_string(i) +
                    " is not congruent to b_n mod p^n; inputs are outside "
                    "the Kummer setting");
    return b;
}

// Strong-tolerance bound for degree-p extensions in characteristic 0:
// b_1 < p v_K(p)/(p-1) - 2, compared exactly.
inline bool char0_degree_p_applicable(Int b1, Int p, Int vK_p) {
    require(is_prime(p), "p must be prime");
    require(vK_p > 0, "v_K(p) must be positive");
    return (p - 1) * b1 < p * vK_p - 2 * (p - 1);
}

} // namespace scaffold
