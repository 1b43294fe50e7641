#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hpf/rational.hpp"

namespace hpf {

/// Exponent vector of a fixed arity.
class Monomial {
public:
    explicit Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {}
    static Monomial constant(int arity) {
        return Monomial(std::vector<std::uint32_t>(static_cast<std::size_t>(arity), 0));
    }
    static Monomial variable(int arity, int slot);

    int arity() const { return static_cast<int>(exps_.size()); }
    std::uint32_t degree() const;
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    Monomial times(const Monomial& other) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

private:
    std::vector<std::uint32_t> exps_;
};

// Graded lexicographic ordering: total degree first, then the exponent
// vectors lexicographically.  This is the canonical term order everywhere
// (storage, printing, comparison).
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/*
 * Sparse multivariate polynomial with exact rational coefficients.  Zero
 * coefficients are never stored.  A default-constructed polynomial is the
 * zero polynomial with unspecified arity; it compares equal to every zero
 * polynomial and adopts the other operand's arity when combined, so
 * accumulating into fresh values works for any arity.
 */
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    Polynomial() = default;
    static Polynomial zero(int arity);
    static Polynomial constant(int arity, const Rational& c);
    static Polynomial variable(int arity, int slot);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::uint32_t total_degree() const;
    const TermMap& terms() const { return terms_; }

    void add_term(const Monomial& mono, const Rational& coeff);
    Rational coefficient(const Monomial& mono) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }

    Polynomial scaled(const Rational& c) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    // Zero polynomials are equal regardless of arity.
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    // Canonical rendering in graded-lex order, e.g. "1/2 + x1*x2^2".
    // The namer maps a variable slot to its display name.
    std::string str(const std::function<std::string(int)>& namer) const;
    std::string str() const;

private:
    int arity_ = 0;
    TermMap terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

// Coefficient-ring hooks for the generic tensor evaluators.
Polynomial unit_for(const Polynomial& zero);
Polynomial scale_by_factorial(const Polynomial& value, unsigned long d);

}  // namespace hpf
