#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sttilt/ffla/matrix.hpp"

namespace sttilt::ffla {

/// Univariate polynomial, coefficients low to high, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Field& f) : field_(&f) {}
  Poly(const Field& f, std::vector<Elt> coeffs);

  static Poly constant(const Field& f, Elt c);
  static Poly x(const Field& f);
  /// x - a
  static Poly linear(const Field& f, Elt a);

  const Field& field() const { return *field_; }
  const std::vector<Elt>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Elt lead() const { return c_.empty() ? 0 : c_.back(); }
  Elt operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  bool operator<(const Poly& o) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Elt c) const;
  Poly monic() const;
  Poly derivative() const;
  Elt eval(Elt a) const;

  std::string to_string() const;

 private:
  void trim();
  const Field* field_ = nullptr;
  std::vector<Elt> c_;
};

/// (quotient, remainder)
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
/// g = s a + t b with g the monic gcd.
struct ExtGcd {
  Poly g, s, t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& a, std::uint64_t e, const Poly& m);

struct Factor {
  Poly f;
  int multiplicity;
};
/// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
/// The leading coefficient of the input is dropped.
std::vector<Factor> factor(const Poly& f);
bool is_irreducible(const Poly& f);

/// f(A) for square A.
Matrix eval(const Poly& f, const Matrix& a);
/// Monic minimal polynomial of a square matrix.
Poly min_poly(const Matrix& a);

}  // namespace sttilt::ffla
