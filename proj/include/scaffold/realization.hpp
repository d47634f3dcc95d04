#pragma once

#include <set>
#include <string>
#include <vector>

#include "scaffold/divided_power.hpp"
#include "scaffold/structure.hpp"

namespace scaffold {

/**
 * The divided-power scaffold on L = K(x), x^(p^n) = t^(-b): elements
 *
 *   lambda_t = t^(f_t) x^(a(t)) / (a(t)_(0)! ... a(t)_(n-1)!),
 *   Psi_i    = D_(p^(n-i)),
 *
 * where t = -b a(t) + p^n f_t. All shift parameters equal b, every
 * unit is 1, and the scaffold relations hold exactly (tolerance
 * infinity); the verification routines below check rather than assume
 * this.
 */
class ScaffoldRealization {
public:
    ScaffoldRealization(Int p, Int n, Int b)
        : p_(p), n_(n), b_(b), pn_(checked_pow(p, n)),
          params_(p, n, std::vector<Int>(static_cast<size_t>(n), b)) {
        require(0 < b && b < pn_ && b % p != 0,
                "b must satisfy 0 < b < p^n and gcd(b, p) = 1");
        for (Int i = 1; i <= n; ++i)
            psi_.push_back(DividedPowerElement::basis(p, n, checked_pow(p, n - i)));
    }

    Int p() const { return p_; }
    Int n() const { return n_; }
    Int shift() const { return b_; }
    Int modulus() const { return pn_; }
    const ScaffoldParams& params() const { return params_; }

    // f_t with t = -b a(t) + p^n f_t.
    Int f(Int t) const {
        const Int num = t + b_ * params_.a_func(t);
        check_internal(num % pn_ == 0, "f_t is not integral");
        return num / pn_;
    }

    InsepElement lambda(Int t) const {
        const Int a = params_.a_func(t);
        const DigitVector ad(a, p_, n_);
        Int den = 1;
        for (Int j = 0; j < n_; ++j) {
            Int f = 1;
            for (Int k = 2; k <= ad.coeff(j); ++k) f = mul_mod(f, k, p_);
            den = mul_mod(den, f, p_);
        }
        const Int inv = pow_mod(den, p_ - 2, p_); // digit factorials are units
        return InsepElement::monomial(p_, n_, b_,
                                      LaurentPoly::monomial(p_, inv, f(t)), a);
    }

    const DividedPowerElement& psi(Int i) const {
        require(1 <= i && i <= n_, "psi index out of range [1, n]");
        return psi_[static_cast<size_t>(i - 1)];
    }

    // Psi^(s) = Psi_n^(s_(0)) Psi_(n-1)^(s_(1)) ... Psi_1^(s_(n-1)).
    DividedPowerElement psi_monomial(Int s) const {
        const DigitVector sd(s, p_, n_);
        DividedPowerElement out = DividedPowerElement::identity(p_, n_);
        for (Int i = n_; i >= 1; --i)
            for (Int k = 0; k < sd.coeff(n_ - i); ++k)
                out = out * psi(i);
        return out;
    }

    // Phi^(s) = t^(-w(s)) Psi^(s), the normalized basis element.
    DividedPowerElement phi(Int s, Int w_s) const {
        return psi_monomial(s).scaled(LaurentPoly::monomial(p_, 1, -w_s));
    }

private:
    Int p_, n_, b_, pn_;
    ScaffoldParams params_;
    std::vector<DividedPowerElement> psi_;
};

struct VerificationFailure {
    std::string kind;
    Int i = 0, s = 0, t = 0;
    std::string expected, got;
};

struct VerificationReport {
    Int checks_run = 0;
    std::vector<VerificationFailure> failures;
    bool ok() const { return failures.empty(); }
};

namespace detail {

inline std::string val_str(const std::optional<Int>& v) {
    return v ? std::to_string(*v) : "inf";
}

inline void record(VerificationReport& report, std::string kind, Int i, Int s,
                   Int t, std::string expected, std::string got) {
    report.failures.push_back({std::move(kind), i, s, t, std::move(expected),
                               std::move(got)});
}

} // namespace detail

/**
 * Check the scaffold relations exactly over t in [t_lo, t_hi]:
 * Psi_i lambda_t = lambda_(t + p^(n-i) b) when a(t)_(n-i) >= 1 and 0
 * otherwise, plus the algebra-side conditions Psi_i . 1 = 0 and
 * Psi_i^p = 0 and the valuation shifts v_L(Psi^(s) rho) = v_L(rho) + b(s)
 * for rho of valuation-criterion degree.
 */
inline VerificationReport verify_scaffold(const ScaffoldRealization& real,
                                          Int t_lo, Int t_hi) {
    require(t_lo <= t_hi, "empty t-range");
    const Int p = real.p(), n = real.n(), pn = real.modulus(), b = real.shift();
    const ScaffoldParams& params = real.params();
    VerificationReport report;

    for (Int t = t_lo; t <= t_hi; ++t) {
        const InsepElement lam = real.lambda(t);
        ++report.checks_run;
        if (lam.valuation() != std::optional<Int>(t))
            detail::record(report, "lambda-valuation", 0, 0, t, std::to_string(t),
                           detail::val_str(lam.valuation()));
        if (t + pn <= t_hi) {
            // lambda_(t+p^n) = t^1 * lambda_t: the periodicity seam.
            ++report.checks_run;
            if (!(real.lambda(t + pn) == lam.scaled(LaurentPoly::monomial(p, 1, 1))))
                detail::record(report, "lambda-periodicity", 0, 0, t,
                               "pi * lambda_t", "different element");
        }
        const DigitVector at(params.a_func(t), p, n);
        for (Int i = 1; i <= n; ++i) {
            const InsepElement got = real.psi(i).act(lam);
            ++report.checks_run;
            if (at.coeff(n - i) >= 1) {
                const InsepElement want = real.lambda(t + checked_pow(p, n - i) * b);
                if (!(got == want))
                    detail::record(report, "psi-action", i, 0, t,
                                   "lambda_(t + p^(n-i) b)", got.to_string());
            } else if (!got.is_zero()) {
                detail::record(report, "psi-action", i, 0, t, "0", got.to_string());
            }
        }
    }

    const InsepElement one = InsepElement::one(p, n, b);
    for (Int i = 1; i <= n; ++i) {
        ++report.checks_run;
        if (!real.psi(i).act(one).is_zero())
            detail::record(report, "augmentation", i, 0, 0, "0",
                           real.psi(i).act(one).to_string());
        DividedPowerElement power = real.psi(i);
        for (Int k = 1; k < p; ++k) power = power * real.psi(i);
        ++report.checks_run;
        if (!power.is_zero())
            detail::record(report, "psi-p-power", i, 0, 0, "0", power.to_string());
    }

    // rho = lambda_(b') with a(b') = p^n - 1; shifts and residues.
    const Int bprime = valuation_criterion_b(params, 0);
    const InsepElement rho = real.lambda(bprime);
    std::set<Int> residues;
    for (Int s = 0; s < pn; ++s) {
        const InsepElement z = real.psi_monomial(s).act(rho);
        const auto v = z.valuation();
        ++report.checks_run;
        if (v != std::optional<Int>(bprime + params.b_func(s)))
            detail::record(report, "eub-shift", 0, s, bprime,
                           std::to_string(bprime + params.b_func(s)),
                           detail::val_str(v));
        if (v) residues.insert(mod_floor(*v, pn));
    }
    ++report.checks_run;
    if (static_cast<Int>(residues.size()) != pn)
        detail::record(report, "all-residues", 0, 0, bprime,
                       std::to_string(pn) + " residue classes",
                       std::to_string(residues.size()));
    return report;
}

namespace detail {

inline void require_matching_report(const ScaffoldRealization& real, Int h,
                                    const StructureReport& report) {
    require(report.p == real.p() && report.n == real.n() && report.h == h,
            "report does not belong to this realization and exponent");
    for (Int bi : report.shifts)
        require(mod_floor(bi - real.shift(), real.modulus()) == 0,
                "report shift parameters disagree with the realization");
}

} // namespace detail

/**
 * Check that the normalized elements Phi^(s) = t^(-w(s)) Psi^(s) act
 * on the ideal basis exactly as the engine predicts:
 * v_L(Phi^(s) lambda_t) = H(s,t) + p^n eps(s,t) when s preceq a(t),
 * and Phi^(s) lambda_t = 0 otherwise; in particular every valuation
 * is >= h, so Phi^(s) lies in the associated order.
 */
inline VerificationReport realize_associated_order_check(
    const ScaffoldRealization& real, Int h, const StructureReport& report) {
    detail::require_matching_report(real, h, report);
    const Int p = real.p(), n = real.n(), pn = real.modulus();
    const ScaffoldParams& params = real.params();
    VerificationReport out;
    for (Int s = 0; s < pn; ++s) {
        const Int ws = report.w[static_cast<size_t>(s)];
        const DividedPowerElement phi = real.phi(s, ws);
        for (Int t = h; t < h + pn; ++t) {
            const InsepElement z = phi.act(real.lambda(t));
            const auto v = z.valuation();
            ++out.checks_run;
            if (preceq(s, params.a_func(t), p, n)) {
                const Int eps = D_func(params, h, s, t) - ws;
                check_internal(eps == 0 || eps == 1, "epsilon outside {0,1}");
                const Int want = H_func(params, h, s, t) + pn * eps;
                if (v != std::optional<Int>(want))
                    detail::record(out, "phi-valuation", 0, s, t,
                                   std::to_string(want), detail::val_str(v));
                if (v && *v < h)
                    detail::record(out, "integrality", 0, s, t,
                                   ">= " + std::to_string(h), detail::val_str(v));
            } else if (!z.is_zero()) {
                detail::record(out, "phi-annihilation", 0, s, t, "0", z.to_string());
            }
        }
    }
    return out;
}

/**
 * The headline engine-versus-realization test. When the report says
 * P_L^h is free, the valuations of Phi^(s) lambda_b must cover the
 * window S_{p^n}(h) exactly (a triangular basis, so lambda_b
 * generates); when it is not free, some Phi^(s) lambda_b must land
 * p^n too high and the window is not covered.
 */
inline VerificationReport realize_freeness_check(const ScaffoldRealization& real,
                                                 Int h,
                                                 const StructureReport& report) {
    detail::require_matching_report(real, h, report);
    const Int pn = real.modulus();
    const ScaffoldParams& params = real.params();
    const Int b = report.b_exponent;
    const InsepElement lam_b = real.lambda(b);
    VerificationReport out;
    std::set<Int> covered;
    bool lifted = false;
    for (Int s = 0; s < pn; ++s) {
        const Int ws = report.w[static_cast<size_t>(s)];
        const InsepElement z = real.phi(s, ws).act(lam_b);
        const auto v = z.valuation();
        ++out.checks_run;
        // s preceq a(b) = p^n - 1 always, so the action never vanishes.
        const Int eps = report.d[static_cast<size_t>(s)] - ws;
        const Int want = H_func(params, h, s, b) + pn * eps;
        if (v != std::optional<Int>(want)) {
            detail::record(out, "generator-valuation", 0, s, b,
                           std::to_string(want), detail::val_str(v));
            continue;
        }
        if (eps == 1) lifted = true;
        covered.insert(*v);
    }
    const IdealWindow win{h, pn};
    bool covers = static_cast<Int>(covered.size()) == pn;
    for (Int t = win.lo(); covers && t < win.hi(); ++t)
        covers = covered.count(t) > 0;
    ++out.checks_run;
    if (report.free != covers)
        detail::record(out, "freeness", 0, 0, b,
                       report.free ? "valuations cover S_{p^n}(h)"
                                   : "valuations fail to cover S_{p^n}(h)",
                       covers ? "covered" : "not covered");
    ++out.checks_run;
    if (!report.free && !lifted)
        detail::record(out, "freeness", 0, 0, b,
                       "some Phi^(s) lambda_b lifted by p^n", "none lifted");
    return out;
}

/**
 * Products of the normalized basis: Phi^(r) Phi^(s) lies in pi*A
 * unless r preceq p^n-1-s and w(r) + w(s) = w(r+s), in which case
 * Phi^(r) Phi^(s) - Phi^(r+s) lies in pi*A (all units are 1 here).
 * Membership in pi*A is checked semantically: applying the element to
 * every basis lambda_t of P_L^h must land in valuation >= h + p^n.
 */
inline VerificationReport psi_prod_check(const ScaffoldRealization& real, Int h,
                                         const StructureReport& report) {
    detail::require_matching_report(real, h, report);
    const Int p = real.p(), n = real.n(), pn = real.modulus();
    VerificationReport out;
    std::vector<DividedPowerElement> phi;
    phi.reserve(static_cast<size_t>(pn));
    for (Int s = 0; s < pn; ++s)
        phi.push_back(real.phi(s, report.w[static_cast<size_t>(s)]));
    for (Int r = 0; r < pn; ++r) {
        for (Int s = 0; s < pn; ++s) {
            // r preceq p^n-1-s forces r+s < p^n (no digit carries).
            bool merges = false;
            if (preceq(r, pn - 1 - s, p, n))
                merges = report.w[static_cast<size_t>(r)] +
                             report.w[static_cast<size_t>(s)] ==
                         report.w[static_cast<size_t>(r + s)];
            const DividedPowerElement product =
                phi[static_cast<size_t>(r)] * phi[static_cast<size_t>(s)];
            const DividedPowerElement element =
                merges ? product - phi[static_cast<size_t>(r + s)] : product;
            for (Int t = h; t < h + pn; ++t) {
                const auto v = element.act(real.lambda(t)).valuation();
                ++out.checks_run;
                if (v && *v < h + pn)
                    detail::record(out, merges ? "phi-product-unit" : "phi-product",
                                   r, s, t, ">= " + std::to_string(h + pn),
                                   detail::val_str(v));
            }
        }
    }
    return out;
}

} // namespace scaffold
