#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>

#include "minrank/ff_linalg.hpp"

namespace minrank {

// Text format: a header line `rows cols modulus`, then one whitespace
// separated row per line. Modulus 0 means the entries are integers or
// rationals written `num/den`.
using AnyMatrix = std::variant<FpMatrix, IntMatrix, RationalMatrix>;

AnyMatrix parse_matrix(std::istream& in);
AnyMatrix read_matrix_file(const std::filesystem::path& path);

void write_matrix(std::ostream& out, const FpMatrix& m);
void write_matrix(std::ostream& out, const IntMatrix& m);
void write_matrix(std::ostream& out, const RationalMatrix& m);

template <class M>
std::string to_matrix_text(const M& m);

// Rank over F_p for FpMatrix, over Q otherwise.
std::size_t rank_of(const AnyMatrix& m);

}  // namespace minrank
