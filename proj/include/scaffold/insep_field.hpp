#pragma once

#include <sstream>
#include <vector>

#include "scaffold/laurent.hpp"

namespace scaffold {

/**
 * Element of the totally ramified purely inseparable extension
 * L = K(x) of degree p^n, where K = F_p((t)) and x^(p^n) = t^(-b),
 * stored as the coefficient vector (c_0, ..., c_(p^n-1)) of
 * sum_a c_a x^a with c_a in K.
 *
 * v_L(t) = p^n and v_L(x) = -b, so v_L(c_a x^a) = p^n v_K(c_a) - a b;
 * since gcd(b, p) = 1 these hit distinct residues mod p^n across a,
 * and the valuation of a sum is the minimum over its nonzero slots.
 */
class InsepElement {
public:
    InsepElement(Int p, Int n, Int b)
        : p_(p), n_(n), b_(b), pn_(checked_pow(p, n)),
          coeffs_(static_cast<size_t>(pn_), LaurentPoly(p)) {
        require(is_prime(p), "p must be prime");
        require(n >= 1, "rank n must be >= 1");
        require(0 < b && b < pn_ && b % p != 0,
                "b must satisfy 0 < b < p^n and gcd(b, p) = 1");
    }

    static InsepElement monomial(Int p, Int n, Int b, const LaurentPoly& c, Int a) {
        InsepElement z(p, n, b);
        require(0 <= a && a < z.pn_, "x-exponent out of range [0, p^n)");
        z.coeffs_[static_cast<size_t>(a)] = c;
        return z;
    }

    static InsepElement one(Int p, Int n, Int b) {
        return monomial(p, n, b, LaurentPoly::one(p), 0);
    }

    Int p() const { return p_; }
    Int n() const { return n_; }
    Int b() const { return b_; }
    Int modulus() const { return pn_; }

    const LaurentPoly& coeff(Int a) const {
        require(0 <= a && a < pn_, "x-exponent out of range [0, p^n)");
        return coeffs_[static_cast<size_t>(a)];
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    InsepElement operator+(const InsepElement& other) const {
        check_same(other);
        InsepElement out(p_, n_, b_);
        for (Int a = 0; a < pn_; ++a)
            out.coeffs_[static_cast<size_t>(a)] =
                coeffs_[static_cast<size_t>(a)] + other.coeffs_[static_cast<size_t>(a)];
        return out;
    }

    InsepElement operator-(const InsepElement& other) const {
        check_same(other);
        InsepElement out(p_, n_, b_);
        for (Int a = 0; a < pn_; ++a)
            out.coeffs_[static_cast<size_t>(a)] =
                coeffs_[static_cast<size_t>(a)] - other.coeffs_[static_cast<size_t>(a)];
        return out;
    }

    // Product in L, reduced by x^(p^n) = t^(-b).
    InsepElement operator*(const InsepElement& other) const {
        check_same(other);
        InsepElement out(p_, n_, b_);
        for (Int a1 = 0; a1 < pn_; ++a1) {
            if (coeffs_[static_cast<size_t>(a1)].is_zero()) continue;
            for (Int a2 = 0; a2 < pn_; ++a2) {
                if (other.coeffs_[static_cast<size_t>(a2)].is_zero()) continue;
                LaurentPoly c = coeffs_[static_cast<size_t>(a1)] *
                                other.coeffs_[static_cast<size_t>(a2)];
                Int a = a1 + a2;
                if (a >= pn_) {
                    a -= pn_;
                    c = c.shifted(-b_);
                }
                out.coeffs_[static_cast<size_t>(a)] =
                    out.coeffs_[static_cast<size_t>(a)] + c;
            }
        }
        return out;
    }

    InsepElement scaled(const LaurentPoly& c) const {
        InsepElement out(p_, n_, b_);
        for (Int a = 0; a < pn_; ++a)
            out.coeffs_[static_cast<size_t>(a)] = coeffs_[static_cast<size_t>(a)] * c;
        return out;
    }

    // v_L; nullopt (= +infinity) for the zero element.
    std::optional<Int> valuation() const {
        std::optional<Int> best;
        for (Int a = 0; a < pn_; ++a) {
            const auto vk = coeffs_[static_cast<size_t>(a)].valuation();
            if (!vk) continue;
            const Int v = pn_ * *vk - a * b_;
            if (!best || v < *best) best = v;
        }
        return best;
    }

    bool operator==(const InsepElement& other) const {
        return p_ == other.p_ && n_ == other.n_ && b_ == other.b_ &&
               coeffs_ == other.coeffs_;
    }

    // Human-readable sum of terms "c*t^k*x^a", sorted by (a, k).
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (Int a = 0; a < pn_; ++a) {
            for (const auto& [e, c] : coeffs_[static_cast<size_t>(a)].terms()) {
                if (!first) os << " + ";
                first = false;
                bool printed = false;
                if (c != 1 || (e == 0 && a == 0)) {
                    os << c;
                    printed = true;
                }
                if (e != 0) {
                    if (printed) os << "*";
                    os << "t";
                    if (e != 1) os << "^" << e;
                    printed = true;
                }
                if (a != 0) {
                    if (printed) os << "*";
                    os << "x";
                    if (a != 1) os << "^" << a;
                }
            }
        }
        return first ? "0" : os.str();
    }

private:
    void check_same(const InsepElement& other) const {
        require(p_ == other.p_ && n_ == other.n_ && b_ == other.b_,
                "mismatched field parameters");
    }

    Int p_, n_, b_, pn_;
    std::vector<LaurentPoly> coeffs_;
};

inline InsepElement insep_mul(const InsepElement& u, const InsepElement& v) {
    return u * v;
}

inline std::optional<Int> insep_valuation(const InsepElement& u) {
    return u.valuation();
}

} // namespace scaffold
