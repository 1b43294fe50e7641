#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hpf/polynomial.hpp"
#include "hpf/rational.hpp"

namespace hpf {

enum class NodeKind { Input, Constant, Add, Mul };

struct CircuitNode {
    NodeKind kind = NodeKind::Constant;
    std::string name;              // Input
    Rational value;                // Constant
    std::uint32_t lhs = 0;         // Add / Mul
    std::uint32_t rhs = 0;
};

/*
 * Arithmetic circuit as an append-only node list.  Operands must already
 * exist when a gate is added, so the stored order is topological and the
 * graph is acyclic by construction.  Exactly one node is the output.
 */
class ArithmeticCircuit {
public:
    std::uint32_t add_input(std::string name);
    std::uint32_t add_constant(Rational value);
    std::uint32_t add_sum(std::uint32_t lhs, std::uint32_t rhs);
    std::uint32_t add_product(std::uint32_t lhs, std::uint32_t rhs);

    void set_output(std::uint32_t id);
    std::uint32_t output() const;
    bool has_output() const { return has_output_; }

    const std::vector<CircuitNode>& nodes() const { return nodes_; }

    /// Vertex count.
    std::size_t size() const { return nodes_.size(); }

    /// Sorted distinct input variable names.
    std::vector<std::string> input_names() const;

    /// Value by structural induction; every input must be assigned.
    Rational evaluate(const std::map<std::string, Rational>& assignment) const;

    /// Canonical sparse polynomial over the sorted input variables.
    /// Throws a resource error when an intermediate exceeds term_budget terms.
    Polynomial to_polynomial(std::uint64_t term_budget = 1'000'000) const;

private:
    std::uint32_t check_operand(std::uint32_t id) const;

    std::vector<CircuitNode> nodes_;
    std::uint32_t output_ = 0;
    bool has_output_ = false;
};

/// Affine-linear form c0 + sum coeff_i * var_i over a new variable set.
struct AffineForm {
    Rational constant;
    std::vector<std::pair<std::string, Rational>> terms;

    /// Parses e.g. "2*u + 1/2*v - 3"; terms are "<coeff>*<name>", "<name>",
    /// or a bare rational constant, joined by '+' or '-'.
    static AffineForm parse(const std::string& text);
};

using AffineSubstitution = std::map<std::string, AffineForm>;

/*
 * Projection: every input leaf of c is replaced by a freshly spliced
 * subcircuit computing its affine form (no sharing between occurrences).
 * An affine form with t terms costs at most 4t + 1 nodes (3 per term, one
 * constant, t joining sums), so
 * size(project(c, s)) <= size(c) + (4*t_max + 1) * (number of input nodes).
 */
ArithmeticCircuit project(const ArithmeticCircuit& c, const AffineSubstitution& s);

/// Naive permanent circuit: n! products of n inputs each, summed. n <= 6.
ArithmeticCircuit build_permanent_circuit(int n);

/// Circuit text format "hpfc 1": `<id> input <name>` | `<id> const <p/q>` |
/// `<id> add <l> <r>` | `<id> mul <l> <r>`, ids consecutive from 0, operands
/// strictly below their gate, one final `output <id>` line.
ArithmeticCircuit read_circuit(std::istream& in);
ArithmeticCircuit read_circuit_file(const std::string& path);
void write_circuit(std::ostream& out, const ArithmeticCircuit& c);
std::string circuit_to_string(const ArithmeticCircuit& c);

}  // namespace hpf
