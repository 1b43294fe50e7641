#pragma once

#include <vector>

#include "hpf/rational.hpp"

namespace hpf {

/// Nonincreasing sequence of positive integers.
class Partition {
public:
    explicit Partition(std::vector<int> parts);
    static Partition rectangle(int rows, int cols);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;

    // Number of standard Young tableaux of this shape, by the hook length
    // formula.  Big-integer throughout; these counts grow fast.
    BigInt standard_tableau_count() const;

private:
    std::vector<int> parts_;
};

// Multiplicity of the trivial SL_n representation in the m-th tensor power of
// C^n: zero unless n divides m, else the tableau count of the n x (m/n)
// rectangle.
BigInt rectangle_dimension(int n, int m);

}  // namespace hpf
