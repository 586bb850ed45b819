#pragma once

#include <iosfwd>

#include "sttilt/ffla/matrix.hpp"
#include "sttilt/ffla/poly.hpp"

namespace sttilt::ffla {

// Plain text: the field header line, then a "rows cols" line (matrices) or
// a "degree" line (polynomials), then rows of integer element codes.

void write_matrix(std::ostream& os, const Matrix& a);
/// Matrix body only (dims line and rows), for embedding in larger documents.
void write_matrix_body(std::ostream& os, const Matrix& a);
Matrix read_matrix(std::istream& is);
Matrix read_matrix_body(std::istream& is, const Field& f);

void write_poly(std::ostream& os, const Poly& f);
Poly read_poly(std::istream& is);

/// Parse "GF(p^m) mod c0,...,cm".
const Field& parse_field_header(const std::string& line);

}  // namespace sttilt::ffla
