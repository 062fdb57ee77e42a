#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nonsep/states.hpp"

namespace nonsep {

// Shortest-exact rendering of a double at 17 significant digits, independent
// of the global locale.
std::string format_double(double x);

// Complex entry in the `re+imj` form, e.g. "0.5-0.25j".
std::string format_complex(Complex z);

// Parses the `re+imj` form. Throws ParseError on anything else, including
// non-finite values.
Complex parse_complex(std::string_view token);

// Parsed contents of a matrix file:
//   dims <d_a> <d_b>
//   followed by d_a*d_b rows of d_a*d_b whitespace-separated `re+imj`
//   entries.
struct MatrixFile {
  std::vector<int> dims;
  ComplexMatrix matrix;
};

MatrixFile parse_matrix_text(const std::string& text);
MatrixFile read_matrix_file(const std::string& path);

std::string format_matrix_text(const std::vector<int>& dims, const ComplexMatrix& matrix);
void write_matrix_file(const std::string& path, const std::vector<int>& dims,
                       const ComplexMatrix& matrix);

}  // namespace nonsep
