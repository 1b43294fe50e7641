#include "hpf/rational.hpp"

#include <cctype>
#include <ostream>

#include "hpf/errors.hpp"

namespace hpf {

namespace {

void require_nonzero_denominator(const BigInt& den) {
    if (sgn(den) == 0) throw ValidationError("rational with zero denominator");
}

}  // namespace

Rational::Rational(long num, long den) : v_(mpq_class(static_cast<signed long>(num))) {
    require_nonzero_denominator(BigInt(den));
    v_ /= mpq_class(static_cast<signed long>(den));
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    require_nonzero_denominator(den);
    v_ = mpq_class(num);
    v_ /= mpq_class(den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ValidationError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    // Grammar: '-'? digit+ ('/' digit+)?   -- no whitespace, no '+'.
    auto bad = [&] { throw ValidationError("malformed rational '" + text + "'"); };
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) bad();
    BigInt num(text.substr(0, i));
    if (i == text.size()) return Rational(num);
    if (text[i] != '/') bad();
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) bad();
    BigInt den(text.substr(den_begin));
    if (sgn(den) == 0) throw ValidationError("zero denominator in '" + text + "'");
    return Rational(num, den);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational pow(const Rational& base, unsigned long exp) {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exp);
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt factorial(unsigned long n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace hpf
