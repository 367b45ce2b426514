#pragma once

#include <iosfwd>
#include <string>

#include "pdmc/bch.hpp"
#include "pdmc/linear_code.hpp"
#include "pdmc/matrix.hpp"

namespace pdmc {

// Field spec strings: "p", "p^m", or "p^m/c0,c1,...,cm" with modulus
// coefficients listed low-to-high.
FieldPtr parse_field_spec(const std::string& spec);

// Matrix text format: first line "rows cols fieldspec", then one line per
// row of space-separated integer labels.
MatrixFq read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const MatrixFq& m);
MatrixFq read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const MatrixFq& m);

// Code description file. Either
//   generator
//   <matrix text>
// or
//   bch p m n b delta
struct CodeDescription {
  LinearCode code;
  std::optional<BchCode> bch;
};
CodeDescription read_code(std::istream& in);
CodeDescription read_code_file(const std::string& path);
void write_generator_code(std::ostream& out, const LinearCode& code);

}  // namespace pdmc
