#pragma once

#include <iosfwd>
#include <string>

#include "hpf/tensor.hpp"

namespace hpf {

/*
 * "hpft 1" tensor format, ASCII and line-based:
 *
 *   hpft 1
 *   n <n> m <m>
 *   <i1> <i2> ... <im> <p/q>      (one stored entry per line, 1-based)
 *
 * Readers reject duplicate multi-indices, out-of-range indices, and zero
 * coefficients; blank lines are permitted.
 */
SparseTensor read_tensor(std::istream& in);
SparseTensor read_tensor_file(const std::string& path);

void write_tensor(std::ostream& out, const SparseTensor& t);
std::string tensor_to_string(const SparseTensor& t);

}  // namespace hpf
