#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hpf/errors.hpp>
#include <hpf/polynomial.hpp>

using namespace hpf;

namespace {

Polynomial x(int slot) { return Polynomial::variable(3, slot); }

}  // namespace

TEST_CASE("monomial basics") {
    Monomial c = Monomial::constant(3);
    CHECK(c.arity() == 3);
    CHECK(c.degree() == 0);

    Monomial v1 = Monomial::variable(3, 1);
    CHECK(v1.degree() == 1);
    CHECK(v1.exponents() == std::vector<std::uint32_t>{0, 1, 0});

    Monomial sq = v1.times(v1).times(Monomial::variable(3, 0));
    CHECK(sq.degree() == 3);
    CHECK(sq.exponents() == std::vector<std::uint32_t>{1, 2, 0});
}

TEST_CASE("graded lex order: degree first, then exponents") {
    GradedLexLess less;
    Monomial one = Monomial::constant(2);
    Monomial a = Monomial::variable(2, 0);
    Monomial b = Monomial::variable(2, 1);
    Monomial a2({2, 0});
    Monomial ab({1, 1});
    CHECK(less(one, a));
    CHECK(less(b, a2));               // degree 1 < degree 2
    CHECK(less(ab, a2));              // same degree, lex on exponents
    CHECK_FALSE(less(a, a));
    // Within degree 1, x2 = (0,1) precedes x1 = (1,0) lexicographically? No:
    // (0,1) < (1,0) holds, so b sorts before a.
    CHECK(less(b, a));
}

TEST_CASE("zero handling and arity adoption") {
    Polynomial fresh;  // arity unspecified
    CHECK(fresh.is_zero());
    CHECK(fresh == Polynomial::zero(5));
    CHECK(Polynomial::zero(2) == Polynomial::zero(7));

    fresh += x(1);
    CHECK(fresh.arity() == 3);
    CHECK(fresh == x(1));

    Polynomial sum = Polynomial();
    sum += Polynomial::constant(2, Rational(1, 2));
    sum += Polynomial::constant(2, Rational(-1, 2));
    CHECK(sum.is_zero());
    CHECK(sum.term_count() == 0);
}

TEST_CASE("add_term accumulates and erases cancellations") {
    Polynomial p = Polynomial::zero(2);
    Monomial ab({1, 1});
    p.add_term(ab, Rational(2, 3));
    p.add_term(ab, Rational(1, 3));
    CHECK(p.coefficient(ab) == Rational(1));
    p.add_term(ab, Rational(-1));
    CHECK(p.is_zero());
    CHECK(p.coefficient(ab) == Rational(0));
}

TEST_CASE("ring operations") {
    Polynomial p = x(0) + x(1);
    Polynomial q = x(0) - x(1);
    Polynomial prod = p * q;

    Polynomial expected = Polynomial::zero(3);
    expected.add_term(Monomial({2, 0, 0}), Rational(1));
    expected.add_term(Monomial({0, 2, 0}), Rational(-1));
    CHECK(prod == expected);

    CHECK(p - p == Polynomial());
    CHECK(-q == x(1) - x(0));
    CHECK(p.scaled(Rational(0)).is_zero());
    CHECK(Rational(2) * p == p + p);
    CHECK(p * Polynomial::constant(3, Rational(1)) == p);

    Polynomial binom = x(0) + Polynomial::constant(3, Rational(1));
    Polynomial square = binom * binom;
    CHECK(square.term_count() == 3);
    CHECK(square.coefficient(Monomial({1, 0, 0})) == Rational(2));
    CHECK(square.total_degree() == 2);
}

TEST_CASE("mixing distinct arities is rejected once both sides are nonzero") {
    Polynomial two_vars = Polynomial::variable(2, 0);
    Polynomial three_vars = Polynomial::variable(3, 0);
    CHECK_THROWS_AS(two_vars + three_vars, ValidationError);
    CHECK_THROWS_AS(two_vars * three_vars, ValidationError);
}

TEST_CASE("evaluation") {
    // (x1 + 1) * x3 - x2 at (2, 3, 1/2) = 3/2 - 3 = -3/2.
    Polynomial p = (x(0) + Polynomial::constant(3, Rational(1))) * x(2) - x(1);
    CHECK(p.evaluate({Rational(2), Rational(3), Rational(1, 2)}) == Rational(-3, 2));
    CHECK_THROWS_AS(p.evaluate({Rational(1)}), ValidationError);
    CHECK(Polynomial().evaluate({}) == Rational(0));

    Polynomial cube = x(1) * x(1) * x(1);
    CHECK(cube.evaluate({Rational(0), Rational(-2, 3), Rational(0)}) == Rational(-8, 27));
}

TEST_CASE("rendering follows graded-lex order") {
    Polynomial p = x(0) * x(1) + x(0).scaled(Rational(2)) -
                   Polynomial::constant(3, Rational(1, 2)) + x(2) * x(2).scaled(Rational(-1));
    auto namer = [](int slot) { return "x" + std::to_string(slot + 1); };
    // Graded-lex puts the constant first, then x1, then the degree-2 terms
    // with x3^2 = (0,0,2) preceding x1*x2 = (1,1,0).
    CHECK(p.str(namer) == "-1/2 + 2*x1 - x3^2 + x1*x2");
    CHECK(Polynomial().str() == "0");
    CHECK(Polynomial::constant(2, Rational(-3, 4)).str() == "-3/4");
    CHECK((x(1) - x(0)).str(namer) == "x2 - x1");
}

TEST_CASE("coefficient-ring hooks used by the generic evaluators") {
    Polynomial z = Polynomial::zero(4);
    Polynomial one = unit_for(z);
    CHECK(one.arity() == 4);
    CHECK(one == Polynomial::constant(4, Rational(1)));

    Polynomial p = Polynomial::variable(4, 2);
    CHECK(scale_by_factorial(p, 4) == p.scaled(Rational(24)));
    CHECK(scale_by_factorial(p, 0) == p);
}
