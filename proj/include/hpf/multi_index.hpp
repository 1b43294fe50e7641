#pragma once

#include <vector>

namespace hpf {

// Index into the standard basis of an order-m tensor over C^n: a length-m
// sequence with entries in 1..n.  Ordered lexicographically (the std::vector
// ordering), which is the canonical form used by every associative container
// in this library.
using MultiIndex = std::vector<int>;

bool indices_in_range(const MultiIndex& idx, int n);

// True iff all entries are pairwise distinct.
bool has_distinct_entries(const MultiIndex& idx);

MultiIndex concat(const MultiIndex& a, const MultiIndex& b);

// Letter counts: result[i-1] = number of occurrences of i in idx.
std::vector<int> content_vector(const MultiIndex& idx, int n);

}  // namespace hpf
