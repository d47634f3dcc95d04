#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace scaffold {

// All arithmetic is done in 64-bit integers. Constructors bound the
// working modulus p^n so that every intermediate value (in particular
// b(s), which is at most p^n * max|b_i|) stays exact.
using Int = long long;

// Internal consistency failure: a relation the theory guarantees did not
// hold. Distinct from domain_error so callers can map it to exit code 1.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// A configured size cap (term count, table size) was exceeded.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw std::domain_error(what);
}

inline void check_internal(bool cond, const std::string& what) {
    if (!cond) throw internal_error(what);
}

// Floor division, exact for any sign of a (b > 0).
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Least nonnegative residue of a mod m (m > 0); the residue map r.
inline Int mod_floor(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

inline bool is_prime(Int p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (Int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// p^n with overflow guard; bound chosen so Int arithmetic stays exact.
inline constexpr Int kMaxModulus = Int(1) << 20;

inline Int checked_pow(Int p, Int n) {
    Int r = 1;
    for (Int i = 0; i < n; ++i) {
        if (r > kMaxModulus / p)
            throw resource_error("p^n exceeds supported bound 2^20");
        r *= p;
    }
    return r;
}

inline Int mul_mod(Int a, Int b, Int m) {
    return Int((__int128)a * b % m);
}

inline Int pow_mod(Int a, Int e, Int m) {
    Int r = 1 % m;
    a = mod_floor(a, m);
    while (e > 0) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

// v_p(s) for s != 0.
inline Int vp(Int s, Int p) {
    require(s != 0, "v_p(0) is undefined");
    if (s < 0) s = -s;
    Int v = 0;
    while (s % p == 0) { s /= p; ++v; }
    return v;
}

} // namespace scaffold
