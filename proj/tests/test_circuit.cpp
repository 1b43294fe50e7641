#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <hpf/circuit.hpp>
#include <hpf/projection.hpp>
#include <hpf/rng.hpp>

using namespace hpf;

namespace {

ArithmeticCircuit square_plus_double() {
    // x*x + 2*x
    ArithmeticCircuit c;
    const auto x = c.add_input("x");
    const auto two = c.add_constant(Rational(2));
    const auto sq = c.add_product(x, x);
    const auto dbl = c.add_product(two, x);
    c.set_output(c.add_sum(sq, dbl));
    return c;
}

ArithmeticCircuit random_circuit(SeededRng& rng, const std::vector<std::string>& vars) {
    ArithmeticCircuit c;
    std::vector<std::uint32_t> pool;
    for (const auto& v : vars) pool.push_back(c.add_input(v));
    pool.push_back(c.add_constant(rng.rational(3, 2)));
    const long gates = rng.int_in(3, 10);
    for (long g = 0; g < gates; ++g) {
        const auto pick = [&] {
            return pool[static_cast<std::size_t>(rng.int_in(0, static_cast<long>(pool.size()) - 1))];
        };
        const auto a = pick();
        const auto b = pick();
        pool.push_back(rng.int_in(0, 1) ? c.add_sum(a, b) : c.add_product(a, b));
    }
    c.set_output(pool.back());
    return c;
}

Rational eval_affine(const AffineForm& f, const std::map<std::string, Rational>& point) {
    Rational out = f.constant;
    for (const auto& [var, coeff] : f.terms) out += coeff * point.at(var);
    return out;
}

}  // namespace

TEST_CASE("construction and evaluation") {
    ArithmeticCircuit c = square_plus_double();
    CHECK(c.size() == 5);
    CHECK(c.input_names() == std::vector<std::string>{"x"});
    CHECK(c.evaluate({{"x", Rational(3)}}) == Rational(15));
    CHECK(c.evaluate({{"x", Rational(-1, 2)}}) == Rational(-3, 4));
    // Extra assignments are ignored; missing ones are an error.
    CHECK(c.evaluate({{"x", Rational(1)}, {"y", Rational(9)}}) == Rational(3));
    CHECK_THROWS_AS(c.evaluate({{"y", Rational(1)}}), EvalError);

    Polynomial p = c.to_polynomial();
    CHECK(p.term_count() == 2);
    CHECK(p.coefficient(Monomial({2})) == Rational(1));
    CHECK(p.coefficient(Monomial({1})) == Rational(2));
}

TEST_CASE("structural validation") {
    ArithmeticCircuit c;
    CHECK_FALSE(c.has_output());
    CHECK_THROWS_AS(c.output(), ValidationError);
    CHECK_THROWS_AS(c.set_output(0), ValidationError);
    CHECK_THROWS_AS(c.add_sum(0, 1), ValidationError);
    CHECK_THROWS_AS(c.add_input(""), ValidationError);
    const auto k = c.add_constant(Rational(4));
    CHECK_THROWS_AS(c.add_product(k, k + 1), ValidationError);
    c.set_output(k);
    CHECK(c.evaluate({}) == Rational(4));
    CHECK(c.input_names().empty());
}

TEST_CASE("permanent circuit") {
    ArithmeticCircuit per2 = build_permanent_circuit(2);
    CHECK(per2.size() == 7);  // 4 inputs, 2 products, 1 sum
    CHECK(per2.input_names() ==
          std::vector<std::string>{"x1_1", "x1_2", "x2_1", "x2_2"});
    CHECK(per2.evaluate({{"x1_1", Rational(1)},
                         {"x1_2", Rational(2)},
                         {"x2_1", Rational(2)},
                         {"x2_2", Rational(1)}}) == Rational(5));

    ArithmeticCircuit per3 = build_permanent_circuit(3);
    std::map<std::string, Rational> ones;
    for (const std::string& name : per3.input_names()) ones[name] = Rational(1);
    CHECK(per3.evaluate(ones) == Rational(6));
    CHECK(per3.to_polynomial().term_count() == 6);

    // Sorted input names are exactly the row-major grid order, so the
    // expanded circuit matches the reference grid polynomials slot for slot.
    CHECK(per2.to_polynomial() == permanent_polynomial(2));
    CHECK(per3.to_polynomial() == permanent_polynomial(3));

    CHECK_THROWS_AS(build_permanent_circuit(0), ValidationError);
    CHECK_THROWS_AS(build_permanent_circuit(7), ValidationError);
}

TEST_CASE("affine form parsing") {
    AffineForm f = AffineForm::parse("2*u + 1/2*v - 3");
    CHECK(f.constant == Rational(-3));
    REQUIRE(f.terms.size() == 2);
    CHECK(f.terms[0] == std::pair<std::string, Rational>{"u", Rational(2)});
    CHECK(f.terms[1] == std::pair<std::string, Rational>{"v", Rational(1, 2)});

    AffineForm bare = AffineForm::parse("x");
    CHECK(bare.constant == Rational(0));
    REQUIRE(bare.terms.size() == 1);
    CHECK(bare.terms[0] == std::pair<std::string, Rational>{"x", Rational(1)});

    AffineForm neg = AffineForm::parse("-x + 4");
    CHECK(neg.constant == Rational(4));
    CHECK(neg.terms[0].second == Rational(-1));

    CHECK(AffineForm::parse("7").constant == Rational(7));
    CHECK(AffineForm::parse("1/2 - 1/2").constant == Rational(0));
    CHECK(AffineForm::parse("2 * u").terms[0].second == Rational(2));

    CHECK_THROWS_AS(AffineForm::parse(""), ValidationError);
    CHECK_THROWS_AS(AffineForm::parse("   "), ValidationError);
    CHECK_THROWS_AS(AffineForm::parse("x*y"), ValidationError);
    CHECK_THROWS_AS(AffineForm::parse("2*"), ValidationError);
    CHECK_THROWS_AS(AffineForm::parse("x +"), ValidationError);
    CHECK_THROWS_AS(AffineForm::parse("x y"), ValidationError);
}

TEST_CASE("projection of the 2x2 permanent yields the worked polynomial") {
    ArithmeticCircuit per2 = build_permanent_circuit(2);
    AffineSubstitution sub;
    sub["x1_1"] = AffineForm::parse("x");
    sub["x1_2"] = AffineForm::parse("y + 1");
    sub["x2_1"] = AffineForm::parse("x + 1");
    sub["x2_2"] = AffineForm::parse("z");
    ArithmeticCircuit projected = project(per2, sub);

    CHECK(projected.input_names() == std::vector<std::string>{"x", "y", "z"});
    Polynomial got = projected.to_polynomial();
    Polynomial expected;  // x*z + x*y + x + y + 1 over (x, y, z)
    const Polynomial x = Polynomial::variable(3, 0);
    const Polynomial y = Polynomial::variable(3, 1);
    const Polynomial z = Polynomial::variable(3, 2);
    expected = x * z + x * y + x + y + Polynomial::constant(3, Rational(1));
    CHECK(got == expected);
    // Graded-lex on slots (x,y,z): constant, y=(0,1,0) before x=(1,0,0),
    // then x*z=(1,0,1) before x*y=(1,1,0).
    CHECK(got.str() == "1 + x2 + x1 + x1*x3 + x1*x2");

    // Spot values: x=y=z=1 gives the 2x2 permanent of [[1,2],[2,1]].
    CHECK(projected.evaluate({{"x", Rational(1)}, {"y", Rational(1)}, {"z", Rational(1)}}) ==
          Rational(5));
}

TEST_CASE("projection commutes with evaluation") {
    SeededRng rng(112358);
    for (int trial = 0; trial < 40; ++trial) {
        ArithmeticCircuit c = random_circuit(rng, {"u", "v", "w"});
        AffineSubstitution sub;
        for (const char* var : {"u", "v", "w"}) {
            AffineForm f;
            f.constant = rng.rational(3, 2);
            if (rng.int_in(0, 3) > 0) f.terms.emplace_back("a", rng.rational(3, 2));
            if (rng.int_in(0, 3) > 0) f.terms.emplace_back("b", rng.rational(3, 2));
            sub[var] = f;
        }
        ArithmeticCircuit projected = project(c, sub);

        const std::map<std::string, Rational> point{{"a", rng.rational(5, 3)},
                                                    {"b", rng.rational(5, 3)}};
        std::map<std::string, Rational> lifted;
        for (const auto& [var, form] : sub) lifted[var] = eval_affine(form, point);
        REQUIRE(projected.evaluate(point) == c.evaluate(lifted));

        // Documented size bound.
        std::size_t input_nodes = 0;
        for (const CircuitNode& node : c.nodes())
            if (node.kind == NodeKind::Input) ++input_nodes;
        std::size_t t_max = 0;
        for (const auto& [var, form] : sub) t_max = std::max(t_max, form.terms.size());
        REQUIRE(projected.size() <= c.size() + (4 * t_max + 1) * input_nodes);
    }
}

TEST_CASE("projection corner cases") {
    ArithmeticCircuit c = square_plus_double();

    AffineSubstitution identity;
    identity["x"] = AffineForm::parse("x");
    CHECK(project(c, identity).to_polynomial() == c.to_polynomial());

    AffineSubstitution to_const;
    to_const["x"] = AffineForm::parse("3");
    ArithmeticCircuit constant = project(c, to_const);
    CHECK(constant.input_names().empty());
    CHECK(constant.evaluate({}) == Rational(15));

    AffineSubstitution zero_coeff;
    zero_coeff["x"] = AffineForm::parse("0*a + 1");
    ArithmeticCircuit dropped = project(c, zero_coeff);
    CHECK(dropped.input_names().empty());  // the 0*a leaf is never spliced
    CHECK(dropped.evaluate({}) == Rational(3));

    CHECK_THROWS_AS(project(c, AffineSubstitution{}), ValidationError);
}

TEST_CASE("text format round-trips") {
    SeededRng rng(777);
    std::vector<ArithmeticCircuit> cases;
    cases.push_back(square_plus_double());
    cases.push_back(build_permanent_circuit(3));
    for (int i = 0; i < 10; ++i) cases.push_back(random_circuit(rng, {"u", "v"}));
    for (const ArithmeticCircuit& c : cases) {
        const std::string text = circuit_to_string(c);
        std::istringstream in(text);
        ArithmeticCircuit back = read_circuit(in);
        CHECK(circuit_to_string(back) == text);
    }
}

TEST_CASE("reading a hand-written circuit") {
    std::istringstream in(
        "0 input x\n"
        "1 const 2\n"
        "\n"
        "2 mul 0 0\n"
        "3 mul 1 0\n"
        "4 add 2 3\n"
        "output 4\n");
    ArithmeticCircuit c = read_circuit(in);
    CHECK(c.size() == 5);
    CHECK(c.evaluate({{"x", Rational(3)}}) == Rational(15));
    CHECK(c.to_polynomial() == square_plus_double().to_polynomial());
}

TEST_CASE("format errors carry line numbers") {
    auto expect_error_at = [](const std::string& text, std::size_t line) {
        std::istringstream in(text);
        try {
            read_circuit(in);
            FAIL_CHECK("expected a parse error for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
        }
    };
    expect_error_at("0 input x\noutput 5\n", 2);          // unknown output id
    expect_error_at("1 input x\noutput 0\n", 1);          // ids must start at 0
    expect_error_at("0 input x\n0 input y\noutput 0\n", 2);
    expect_error_at("0 input x\n1 add 1 0\noutput 1\n", 2);  // operand not before gate
    expect_error_at("0 input x\n", 1);                    // missing output line
    expect_error_at("0 input x\noutput 0\n0 input y\n", 3);
    expect_error_at("a input x\noutput 0\n", 1);          // malformed id
    expect_error_at("0 widget 1 2\noutput 0\n", 1);       // unknown kind
    expect_error_at("0 const 1.5\noutput 0\n", 1);        // bad rational
    expect_error_at("0 add 1\noutput 0\n", 1);            // wrong arity
    expect_error_at("output\n", 1);                       // output needs an id
}

TEST_CASE("expansion budget") {
    ArithmeticCircuit per3 = build_permanent_circuit(3);
    CHECK_THROWS_AS(per3.to_polynomial(3), ResourceError);
    CHECK(per3.to_polynomial(6).term_count() == 6);
}
