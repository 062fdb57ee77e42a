#include "nonsep/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace nonsep {

std::string format_double(double x) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), x, std::chars_format::general, 17);
  return std::string(buffer, result.ptr);
}

std::string format_complex(Complex z) {
  std::string out = format_double(z.real());
  out += std::signbit(z.imag()) ? '-' : '+';
  out += format_double(std::abs(z.imag()));
  out += 'j';
  return out;
}

namespace {

// Parses a double with an optional leading sign (std::from_chars itself
// rejects a leading '+').
const char* parse_signed_double(const char* first, const char* last, double& value,
                                std::string_view token) {
  double sign = 1.0;
  if (first != last && (*first == '+' || *first == '-')) {
    if (*first == '-') sign = -1.0;
    ++first;
  }
  double magnitude = 0.0;
  const auto result = std::from_chars(first, last, magnitude);
  if (result.ec != std::errc()) {
    throw ParseError("bad complex entry '" + std::string(token) + "'");
  }
  value = sign * magnitude;
  return result.ptr;
}

}  // namespace

Complex parse_complex(std::string_view token) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  double re = 0.0;
  const char* after_re = parse_signed_double(first, last, re, token);
  if (after_re == last || (*after_re != '+' && *after_re != '-')) {
    throw ParseError("bad complex entry '" + std::string(token) +
                     "': expected a signed imaginary part");
  }
  double im = 0.0;
  const char* after_im = parse_signed_double(after_re, last, im, token);
  if (after_im == last || *after_im != 'j' || after_im + 1 != last) {
    throw ParseError("bad complex entry '" + std::string(token) + "': expected trailing 'j'");
  }
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw ParseError("bad complex entry '" + std::string(token) + "': non-finite value");
  }
  return {re, im};
}

MatrixFile parse_matrix_text(const std::string& text) {
  std::istringstream stream(text);
  std::string header_line;
  if (!std::getline(stream, header_line)) {
    throw ParseError("matrix file is empty");
  }
  std::istringstream header(header_line);
  std::string tag;
  long da = 0;
  long db = 0;
  if (!(header >> tag >> da >> db) || tag != "dims") {
    throw ParseError("matrix file must start with 'dims <d_a> <d_b>'");
  }
  std::string extra;
  if (header >> extra) {
    throw ParseError("matrix file header has trailing tokens");
  }
  if (da < 1 || db < 1 || da * db > tol::kMaxTotalDimension) {
    throw ParseError("matrix file dimensions out of range");
  }
  const long side = da * db;
  MatrixFile out;
  out.dims = {static_cast<int>(da), static_cast<int>(db)};
  out.matrix.resize(side, side);
  std::string token;
  for (long r = 0; r < side; ++r) {
    for (long c = 0; c < side; ++c) {
      if (!(stream >> token)) {
        throw ParseError("matrix file ends after " + std::to_string(r * side + c) + " of " +
                         std::to_string(side * side) + " entries");
      }
      out.matrix(r, c) = parse_complex(token);
    }
  }
  if (stream >> token) {
    throw ParseError("matrix file has trailing tokens after the last entry");
  }
  return out;
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open matrix file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_text(buffer.str());
}

std::string format_matrix_text(const std::vector<int>& dims, const ComplexMatrix& matrix) {
  if (dims.size() != 2) {
    throw DimensionMismatch("format_matrix_text: need exactly two factor dimensions");
  }
  if (matrix.rows() != matrix.cols() ||
      matrix.rows() != static_cast<long>(dims[0]) * dims[1]) {
    throw DimensionMismatch("format_matrix_text: matrix side does not match the dimensions");
  }
  std::string out = "dims " + std::to_string(dims[0]) + " " + std::to_string(dims[1]) + "\n";
  for (long r = 0; r < matrix.rows(); ++r) {
    for (long c = 0; c < matrix.cols(); ++c) {
      if (c > 0) out += ' ';
      out += format_complex(matrix(r, c));
    }
    out += '\n';
  }
  return out;
}

void write_matrix_file(const std::string& path, const std::vector<int>& dims,
                       const ComplexMatrix& matrix) {
  const std::string text = format_matrix_text(dims, matrix);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) {
    throw Error("cannot write matrix file '" + path + "'");
  }
}

}  // namespace nonsep
