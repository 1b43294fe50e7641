#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "hpf/errors.hpp"
#include "hpf/invariants.hpp"
#include "hpf/rng.hpp"
#include "hpf/tensor.hpp"
#include "hpf/tensor_io.hpp"
#include "oracle.hpp"

using namespace hpf;

namespace {

SparseTensor random_tensor(SeededRng& rng, int n, int order, int entries) {
    SparseTensor t(n, order);
    for (int e = 0; e < entries; ++e) {
        MultiIndex idx(static_cast<std::size_t>(order));
        for (int& v : idx) {
            v = static_cast<int>(rng.int_in(1, n));
        }
        t.add(idx, rng.rational(4, 3));
    }
    return t;
}

}  // namespace

TEST_CASE("sparse tensor accumulation drops zeros") {
    SparseTensor t(3, 2);
    t.add({1, 2}, Rational(1, 2));
    t.add({1, 2}, Rational(1, 2));
    CHECK(t.coefficient({1, 2}) == Rational(1));
    t.add({1, 2}, Rational(-1));
    CHECK_FALSE(t.contains({1, 2}));
    CHECK(t.is_zero_tensor());
    t.set({2, 3}, Rational(5));
    t.set({2, 3}, Rational(0));
    CHECK(t.is_zero_tensor());
    CHECK(t.coefficient({3, 3}) == Rational(0));
}

TEST_CASE("sparse tensor validates shape") {
    CHECK_THROWS_AS(SparseTensor(0, 1), ValidationError);
    CHECK_THROWS_AS(SparseTensor(2, 0), ValidationError);
    SparseTensor t(2, 3);
    CHECK_THROWS_AS(t.add({1, 2}, Rational(1)), DimensionMismatchError);
    CHECK_THROWS_AS(t.add({1, 2, 3}, Rational(1)), ValidationError);
    SparseTensor other(2, 2);
    CHECK_THROWS_AS(t.plus(other), DimensionMismatchError);
}

TEST_CASE("scaling and addition") {
    SparseTensor t(2, 1);
    t.set({1}, Rational(2));
    t.set({2}, Rational(-3));
    const SparseTensor s = t.scaled(Rational(1, 2));
    CHECK(s.coefficient({1}) == Rational(1));
    CHECK(s.coefficient({2}) == Rational(-3, 2));
    CHECK(t.scaled(Rational(0)).is_zero_tensor());
    const SparseTensor sum = t.plus(t.scaled(Rational(-1)));
    CHECK(sum.is_zero_tensor());
}

TEST_CASE("tensor product concatenates indices and multiplies coefficients") {
    SparseTensor a(3, 1);
    a.set({1}, Rational(2));
    a.set({2}, Rational(3));
    SparseTensor b(3, 2);
    b.set({1, 3}, Rational(1, 2));
    const SparseTensor ab = tensor_product(a, b);
    CHECK(ab.order() == 3);
    CHECK(ab.term_count() == 2);
    CHECK(ab.coefficient({1, 1, 3}) == Rational(1));
    CHECK(ab.coefficient({2, 1, 3}) == Rational(3, 2));

    SparseTensor c(2, 1);
    c.set({1}, Rational(1));
    CHECK_THROWS_AS(tensor_product(a, c), DimensionMismatchError);
}

TEST_CASE("tensor power") {
    SparseTensor t(2, 1);
    t.set({1}, Rational(1));
    t.set({2}, Rational(1));
    const SparseTensor cube = tensor_power(t, 3);
    CHECK(cube.order() == 3);
    CHECK(cube.term_count() == 8);
    CHECK(cube.coefficient({2, 1, 2}) == Rational(1));
    CHECK_THROWS_AS(tensor_power(t, 0), ValidationError);
}

TEST_CASE("pairing with the wedge vector gives signs of permutation words") {
    SparseTensor t(3, 3);
    t.set({1, 2, 3}, Rational(1));
    CHECK(pair_with_antisymmetrizer(t) == Rational(1));
    t.set({1, 2, 3}, Rational(0));
    t.set({2, 1, 3}, Rational(1));
    CHECK(pair_with_antisymmetrizer(t) == Rational(-1));
    // repeated letters pair to zero
    t.set({2, 1, 3}, Rational(0));
    t.set({2, 2, 3}, Rational(7));
    CHECK(pair_with_antisymmetrizer(t) == Rational(0));

    SparseTensor wrong(3, 2);
    wrong.set({1, 2}, Rational(1));
    CHECK_THROWS_AS(pair_with_antisymmetrizer(wrong), DimensionMismatchError);
}

TEST_CASE("matrix basics and antisymmetry") {
    SquareMatrix m(2);
    m.set_entry(1, 2, Rational(3));
    m.set_entry(2, 1, Rational(-3));
    CHECK(m.is_antisymmetric());
    m.set_entry(1, 1, Rational(1));
    CHECK_FALSE(m.is_antisymmetric());

    const SquareMatrix id = SquareMatrix::identity(3);
    CHECK(id.multiply(id) == id);
    CHECK(id.transpose() == id);

    SquareMatrix a(2);
    a.set_entry(1, 1, Rational(1));
    a.set_entry(1, 2, Rational(2));
    a.set_entry(2, 1, Rational(3));
    a.set_entry(2, 2, Rational(4));
    const SparseTensor t = a.as_order2_tensor();
    CHECK(t.coefficient({1, 2}) == Rational(2));
    CHECK(t.coefficient({2, 1}) == Rational(3));
    CHECK(t.term_count() == 4);
}

TEST_CASE("block swap of a multi-index") {
    CHECK(swap_adjacent_blocks({1, 2, 3, 4}, 2, 1) == MultiIndex{3, 4, 1, 2});
    CHECK(swap_adjacent_blocks({1, 2, 3, 4, 5, 6}, 2, 2) == MultiIndex{1, 2, 5, 6, 3, 4});
    CHECK_THROWS_AS(swap_adjacent_blocks({1, 2, 3}, 2, 1), ValidationError);
    CHECK_THROWS_AS(swap_adjacent_blocks({1, 2, 3, 4}, 2, 2), ValidationError);
}

TEST_CASE("block symmetry detection") {
    // symmetric: e1 (x) e2 + e2 (x) e1 with blocks of size 1
    SparseTensor s(2, 2);
    s.set({1, 2}, Rational(1));
    s.set({2, 1}, Rational(1));
    CHECK(is_block_symmetric(s, 1));
    // antisymmetric version is not block symmetric
    SparseTensor a(2, 2);
    a.set({1, 2}, Rational(1));
    a.set({2, 1}, Rational(-1));
    CHECK_FALSE(is_block_symmetric(a, 1));
    // but with block size 2 there is a single block: trivially symmetric
    CHECK(is_block_symmetric(a, 2));
    CHECK_THROWS_AS(is_block_symmetric(a, 3), ValidationError);
}

TEST_CASE("group action is multiplicative and respects identity") {
    SeededRng rng(31);
    const SparseTensor t = random_tensor(rng, 3, 2, 5);
    CHECK(apply_group_element(SquareMatrix::identity(3), t) == t);
    const SquareMatrix g = random_special_linear(3, 17, 5);
    const SquareMatrix h = random_special_linear(3, 23, 5);
    const SparseTensor lhs = apply_group_element(g, apply_group_element(h, t));
    const SparseTensor rhs = apply_group_element(g.multiply(h), t);
    CHECK(lhs == rhs);
}

TEST_CASE("random special linear matrices have determinant one") {
    for (std::uint64_t seed : {1ull, 2ull, 42ull, 777ull}) {
        for (int n : {2, 3, 4, 6}) {
            const SquareMatrix g = random_special_linear(n, seed, 8);
            CHECK(determinant(g) == Rational(1));
            CHECK(oracle::determinant_laplace(g) == Rational(1));
        }
    }
}

TEST_CASE("lie generator action is a derivation across tensor products") {
    SeededRng rng(57);
    const SparseTensor a = random_tensor(rng, 3, 1, 3);
    const SparseTensor b = random_tensor(rng, 3, 2, 4);
    const SparseTensor ab = tensor_product(a, b);
    // E(a (x) b) = E(a) (x) b + a (x) E(b)
    const SparseTensor lhs = apply_lie_generator(1, 2, ab);
    const SparseTensor rhs =
        tensor_product(apply_lie_generator(1, 2, a), b)
            .plus(tensor_product(a, apply_lie_generator(1, 2, b)));
    CHECK(lhs == rhs);
    CHECK_THROWS_AS(apply_lie_generator(1, 1, a), ValidationError);
    CHECK_THROWS_AS(apply_lie_generator(0, 1, a), ValidationError);
}

TEST_CASE("wedge vector has n! signed entries") {
    const SparseTensor v = antisymmetrizer(3);
    CHECK(v.term_count() == 6);
    CHECK(v.coefficient({1, 2, 3}) == Rational(1));
    CHECK(v.coefficient({2, 1, 3}) == Rational(-1));
    CHECK(v.coefficient({3, 1, 2}) == Rational(1));
    CHECK_THROWS_AS(antisymmetrizer(9), ResourceError);
}

TEST_CASE("tensor io round trip") {
    SeededRng rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        const SparseTensor t = random_tensor(rng, 4, 3, 6);
        const std::string text = tensor_to_string(t);
        std::istringstream in(text);
        CHECK(read_tensor(in) == t);
    }
}

TEST_CASE("tensor io rejects malformed input with line numbers") {
    const auto expect_parse_error = [](const std::string& text, std::size_t line) {
        std::istringstream in(text);
        try {
            read_tensor(in);
            FAIL_CHECK("expected a parse error for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
        }
    };
    expect_parse_error("hpft 2\nn 2 m 2\n", 1);
    expect_parse_error("nope\n", 1);
    expect_parse_error("hpft 1\nn 0 m 2\n", 2);
    expect_parse_error("hpft 1\nn 2 m 2\n1 2\n", 3);            // missing coefficient
    expect_parse_error("hpft 1\nn 2 m 2\n1 3 1\n", 3);          // out of range
    expect_parse_error("hpft 1\nn 2 m 2\n1 2 1\n1 2 2\n", 4);   // duplicate index
    expect_parse_error("hpft 1\nn 2 m 2\n1 2 0\n", 3);          // zero coefficient
    expect_parse_error("hpft 1\nn 2 m 2\n1 2 x\n", 3);          // bad rational
}

TEST_CASE("tensor io permits blank lines and empty entry lists") {
    std::istringstream in("hpft 1\n\nn 2 m 2\n\n");
    const SparseTensor t = read_tensor(in);
    CHECK(t.dim() == 2);
    CHECK(t.order() == 2);
    CHECK(t.is_zero_tensor());
}
