#pragma once

#include <sstream>
#include <vector>

#include "scaffold/insep_field.hpp"
#include "scaffold/padic.hpp"

namespace scaffold {

/**
 * Element of the divided power Hopf algebra A(n) of dimension p^n,
 * with K-coefficients over the basis D_0, ..., D_(p^n-1):
 *
 *   D_i D_j = C(i+j, j) D_(i+j)  if i+j < p^n, else 0,
 *
 * the binomial taken mod p via Lucas. D_0 is the identity. The basis
 * acts on L = K(x) by D_r(x^a) = C(a, r) x^(a-r), extended K-linearly.
 * Coefficients live in K (Laurent polynomials), so negative powers of
 * t are available for the normalized elements t^(-w) D.
 */
class DividedPowerElement {
public:
    DividedPowerElement(Int p, Int n)
        : p_(p), n_(n), pn_(checked_pow(p, n)),
          coeffs_(static_cast<size_t>(pn_), LaurentPoly(p)) {
        require(is_prime(p), "p must be prime");
        require(n >= 1, "rank n must be >= 1");
    }

    static DividedPowerElement basis(Int p, Int n, Int r) {
        DividedPowerElement u(p, n);
        require(0 <= r && r < u.pn_, "basis index out of range [0, p^n)");
        u.coeffs_[static_cast<size_t>(r)] = LaurentPoly::one(p);
        return u;
    }

    static DividedPowerElement identity(Int p, Int n) { return basis(p, n, 0); }

    Int p() const { return p_; }
    Int n() const { return n_; }
    Int modulus() const { return pn_; }

    const LaurentPoly& coeff(Int r) const {
        require(0 <= r && r < pn_, "basis index out of range [0, p^n)");
        return coeffs_[static_cast<size_t>(r)];
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    DividedPowerElement operator+(const DividedPowerElement& other) const {
        check_same(other);
        DividedPowerElement out(p_, n_);
        for (Int r = 0; r < pn_; ++r)
            out.coeffs_[static_cast<size_t>(r)] =
                coeffs_[static_cast<size_t>(r)] + other.coeffs_[static_cast<size_t>(r)];
        return out;
    }

    DividedPowerElement operator-(const DividedPowerElement& other) const {
        check_same(other);
        DividedPowerElement out(p_, n_);
        for (Int r = 0; r < pn_; ++r)
            out.coeffs_[static_cast<size_t>(r)] =
                coeffs_[static_cast<size_t>(r)] - other.coeffs_[static_cast<size_t>(r)];
        return out;
    }

    DividedPowerElement operator*(const DividedPowerElement& other) const {
        check_same(other);
        DividedPowerElement out(p_, n_);
        for (Int i = 0; i < pn_; ++i) {
            if (coeffs_[static_cast<size_t>(i)].is_zero()) continue;
            for (Int j = 0; j < pn_; ++j) {
                if (other.coeffs_[static_cast<size_t>(j)].is_zero()) continue;
                if (i + j >= pn_) continue; // D_i D_j = 0 past the truncation
                const Int c = lucas_binom(i + j, j, p_);
                if (c == 0) continue;
                out.coeffs_[static_cast<size_t>(i + j)] =
                    out.coeffs_[static_cast<size_t>(i + j)] +
                    (coeffs_[static_cast<size_t>(i)] *
                     other.coeffs_[static_cast<size_t>(j)])
                        .shifted(0, c);
            }
        }
        return out;
    }

    DividedPowerElement scaled(const LaurentPoly& c) const {
        DividedPowerElement out(p_, n_);
        for (Int r = 0; r < pn_; ++r)
            out.coeffs_[static_cast<size_t>(r)] = coeffs_[static_cast<size_t>(r)] * c;
        return out;
    }

    // K-linear action on L: D_r(x^a) = C(a, r) x^(a-r), zero when r > a.
    InsepElement act(const InsepElement& z) const {
        require(p_ == z.p() && pn_ == z.modulus(), "mismatched parameters");
        InsepElement out(z.p(), z.n(), z.b());
        for (Int r = 0; r < pn_; ++r) {
            if (coeffs_[static_cast<size_t>(r)].is_zero()) continue;
            for (Int a = r; a < pn_; ++a) {
                if (z.coeff(a).is_zero()) continue;
                const Int c = lucas_binom(a, r, p_);
                if (c == 0) continue;
                const LaurentPoly term =
                    (coeffs_[static_cast<size_t>(r)] * z.coeff(a)).shifted(0, c);
                out = out + InsepElement::monomial(z.p(), z.n(), z.b(), term, a - r);
            }
        }
        return out;
    }

    bool operator==(const DividedPowerElement& other) const {
        return p_ == other.p_ && n_ == other.n_ && coeffs_ == other.coeffs_;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (Int r = 0; r < pn_; ++r) {
            const auto& c = coeffs_[static_cast<size_t>(r)];
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << c.to_string() << ")*D" << r;
        }
        return first ? "0" : os.str();
    }

private:
    void check_same(const DividedPowerElement& other) const {
        require(p_ == other.p_ && n_ == other.n_, "mismatched parameters");
    }

    Int p_, n_, pn_;
    std::vector<LaurentPoly> coeffs_;
};

inline DividedPowerElement dp_mul(const DividedPowerElement& u,
                                  const DividedPowerElement& v) {
    return u * v;
}

inline InsepElement dp_act(const DividedPowerElement& u, const InsepElement& z) {
    return u.act(z);
}

} // namespace scaffold
