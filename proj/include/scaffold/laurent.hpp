#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "scaffold/common.hpp"

namespace scaffold {

// Combined term-count cap for Laurent arithmetic; guards against
// runaway expressions. Overridable via SCAFFOLD_TERM_LIMIT or the
// setter.
inline Int& term_limit() {
    static Int limit = [] {
        if (const char* env = std::getenv("SCAFFOLD_TERM_LIMIT")) {
            const Int v = std::atoll(env);
            if (v > 0) return v;
        }
        return Int(1'000'000);
    }();
    return limit;
}

inline void set_term_limit(Int limit) {
    require(limit > 0, "term limit must be positive");
    term_limit() = limit;
}

/**
 * Sparse exact Laurent polynomial in t over F_p: a finite map from
 * exponents (any integer) to nonzero residues mod p. Models elements
 * of K = F_p((t)) as they arise here -- every computation stays
 * polynomial in t and 1/t. The valuation is the least exponent;
 * the zero element has valuation +infinity, modeled as nullopt.
 */
class LaurentPoly {
public:
    explicit LaurentPoly(Int p) : p_(p) {
        require(is_prime(p), "p must be prime");
    }

    static LaurentPoly constant(Int p, Int c) { return monomial(p, c, 0); }

    // c * t^exp
    static LaurentPoly monomial(Int p, Int c, Int exp) {
        LaurentPoly f(p);
        const Int r = mod_floor(c, p);
        if (r != 0) f.terms_[exp] = static_cast<int>(r);
        return f;
    }

    static LaurentPoly one(Int p) { return constant(p, 1); }

    Int prime() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    Int term_count() const { return static_cast<Int>(terms_.size()); }

    std::optional<Int> valuation() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first;
    }

    int coeff(Int exp) const {
        const auto it = terms_.find(exp);
        return it == terms_.end() ? 0 : it->second;
    }

    const std::map<Int, int>& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& other) const {
        check_same_prime(other);
        LaurentPoly out(p_);
        out.terms_ = terms_;
        for (const auto& [e, c] : other.terms_) out.add_term(e, c);
        out.check_size();
        return out;
    }

    LaurentPoly operator-() const {
        LaurentPoly out(p_);
        for (const auto& [e, c] : terms_)
            out.terms_[e] = static_cast<int>(p_ - c);
        return out;
    }

    LaurentPoly operator-(const LaurentPoly& other) const { return *this + (-other); }

    LaurentPoly operator*(const LaurentPoly& other) const {
        check_same_prime(other);
        LaurentPoly out(p_);
        for (const auto& [e1, c1] : terms_) {
            for (const auto& [e2, c2] : other.terms_)
                out.add_term(e1 + e2, Int(c1) * c2);
            out.check_size(); // catch runaway growth mid-product
        }
        return out;
    }

    // Multiply by c * t^exp in place; cheap and exact.
    LaurentPoly shifted(Int exp, Int c = 1) const {
        LaurentPoly out(p_);
        const Int r = mod_floor(c, p_);
        if (r == 0) return out;
        for (const auto& [e, co] : terms_) {
            const Int nc = mod_floor(Int(co) * r, p_);
            if (nc != 0) out.terms_[e + exp] = static_cast<int>(nc);
        }
        return out;
    }

    bool operator==(const LaurentPoly& other) const {
        return p_ == other.p_ && terms_ == other.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            if (c != 1 || e == 0) os << c;
            if (e != 0) {
                if (c != 1) os << "*";
                os << "t";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    void check_same_prime(const LaurentPoly& other) const {
        require(p_ == other.p_, "mixed characteristic");
    }

    void add_term(Int exp, Int c) {
        const Int r = mod_floor(Int(coeff(exp)) + c, p_);
        if (r == 0)
            terms_.erase(exp);
        else
            terms_[exp] = static_cast<int>(r);
    }

    void check_size() const {
        if (static_cast<Int>(terms_.size()) > term_limit())
            throw resource_error("Laurent term count exceeds the configured limit");
    }

    Int p_;
    std::map<Int, int> terms_;
};

inline LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline std::optional<Int> laurent_val(const LaurentPoly& a) { return a.valuation(); }

} // namespace scaffold
