#include "hpf/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "hpf/errors.hpp"

namespace hpf {

Monomial Monomial::variable(int arity, int slot) {
    if (slot < 0 || slot >= arity) {
        throw ValidationError("variable slot out of range");
    }
    std::vector<std::uint32_t> e(static_cast<std::size_t>(arity), 0);
    e[static_cast<std::size_t>(slot)] = 1;
    return Monomial(std::move(e));
}

std::uint32_t Monomial::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::times(const Monomial& other) const {
    if (arity() != other.arity()) {
        throw DimensionMismatchError("monomial arity mismatch in product");
    }
    std::vector<std::uint32_t> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] += other.exps_[i];
    }
    return Monomial(std::move(e));
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
    const std::uint32_t da = a.degree();
    const std::uint32_t db = b.degree();
    if (da != db) {
        return da < db;
    }
    return a.exponents() < b.exponents();
}

Polynomial Polynomial::zero(int arity) {
    Polynomial p;
    p.arity_ = arity;
    return p;
}

Polynomial Polynomial::constant(int arity, const Rational& c) {
    Polynomial p = zero(arity);
    p.add_term(Monomial::constant(arity), c);
    return p;
}

Polynomial Polynomial::variable(int arity, int slot) {
    Polynomial p = zero(arity);
    p.add_term(Monomial::variable(arity, slot), Rational(1));
    return p;
}

std::uint32_t Polynomial::total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

void Polynomial::add_term(const Monomial& mono, const Rational& coeff) {
    if (mono.arity() != arity_) {
        if (is_zero()) {
            arity_ = mono.arity();  // zero adopts the incoming arity
        } else {
            throw DimensionMismatchError("monomial arity does not match polynomial arity");
        }
    }
    if (coeff.is_zero()) {
        return;
    }
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Rational Polynomial::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = zero(arity_);
    for (const auto& [mono, coeff] : terms_) {
        out.terms_.emplace(mono, -coeff);
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (arity_ != o.arity_) {
        throw DimensionMismatchError("polynomial arity mismatch in sum");
    }
    for (const auto& [mono, coeff] : o.terms_) {
        add_term(mono, coeff);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    return *this += -o;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        *this = zero(is_zero() ? (o.is_zero() ? std::max(arity_, o.arity_) : o.arity_) : arity_);
        return *this;
    }
    if (arity_ != o.arity_) {
        throw DimensionMismatchError("polynomial arity mismatch in product");
    }
    Polynomial out = zero(arity_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            out.add_term(ma.times(mb), ca * cb);
        }
    }
    *this = std::move(out);
    return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out = zero(arity_);
    if (c.is_zero()) {
        return out;
    }
    for (const auto& [mono, coeff] : terms_) {
        out.terms_.emplace(mono, coeff * c);
    }
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != arity_ && !is_zero()) {
        throw DimensionMismatchError("evaluation point size does not match polynomial arity");
    }
    Rational total(0);
    for (const auto& [mono, coeff] : terms_) {
        Rational term = coeff;
        const auto& exps = mono.exponents();
        for (std::size_t s = 0; s < exps.size(); ++s) {
            if (exps[s] > 0) {
                term *= pow(point[s], exps[s]);
            }
        }
        total += term;
    }
    return total;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) {
        return true;  // zero is zero in every arity
    }
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
}

std::string Polynomial::str(const std::function<std::string(int)>& namer) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        Rational c = coeff;
        if (first) {
            if (c.signum() < 0) {
                out << "-";
                c = -c;
            }
            first = false;
        } else if (c.signum() < 0) {
            out << " - ";
            c = -c;
        } else {
            out << " + ";
        }
        std::string vars;
        for (std::size_t s = 0; s < mono.exponents().size(); ++s) {
            const std::uint32_t e = mono.exponents()[s];
            if (e == 0) {
                continue;
            }
            if (!vars.empty()) {
                vars += "*";
            }
            vars += namer(static_cast<int>(s));
            if (e > 1) {
                vars += "^" + std::to_string(e);
            }
        }
        if (vars.empty()) {
            out << c.str();
        } else if (c == Rational(1)) {
            out << vars;
        } else {
            out << c.str() << "*" << vars;
        }
    }
    return out.str();
}

std::string Polynomial::str() const {
    return str([](int slot) { return "x" + std::to_string(slot + 1); });
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    return p.scaled(c);
}

Polynomial unit_for(const Polynomial& zero) {
    return Polynomial::constant(zero.arity(), Rational(1));
}

Polynomial scale_by_factorial(const Polynomial& value, unsigned long d) {
    return value.scaled(Rational(factorial(d)));
}

}  // namespace hpf
