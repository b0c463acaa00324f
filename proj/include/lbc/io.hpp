#pragma once

#include <iosfwd>
#include <string>

#include "lbc/gf2.hpp"

namespace lbc {

// Text format: line 1 = "m n"; then m lines of exactly n characters from
// {0,1}, character j = coordinate j; trailing newline required. Round-trips
// bit-exactly.
BitMatrix parse_matrix(const std::string& text);
std::string write_matrix(const BitMatrix& m);

BitMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const BitMatrix& m);

std::string to_bitstring(const BitVector& v);
BitVector parse_bitvector(const std::string& line);

} // namespace lbc
