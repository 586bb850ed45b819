#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sttilt::ffla {

/// A field element, encoded as the integer sum c_i p^i of the coefficients of
/// its polynomial representative modulo the field's modulus.  The prime
/// subfield is therefore {0, ..., p-1} with its usual integer labels.
using Elt = std::uint16_t;

/// Finite field GF(p^m).  Instances are interned and live for the whole
/// program; obtain them with Field::get and compare by address.
class Field {
 public:
  /// Field with the default modulus: the first primitive monic polynomial of
  /// degree m over GF(p) in coefficient-index order.
  static const Field& get(int p, int m);
  /// Field with an explicit monic irreducible modulus (coefficients low to high).
  static const Field& get(int p, const std::vector<int>& modulus);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  int p() const { return p_; }
  int m() const { return m_; }
  int size() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }
  /// "GF(p^m) mod c0,c1,...,cm"
  std::string header() const;

  Elt add(Elt a, Elt b) const {
    if (p_ == 2) return static_cast<Elt>(a ^ b);
    if (!add_.empty()) return add_[static_cast<std::size_t>(a) * q_ + b];
    return add_slow(a, b);
  }
  Elt neg(Elt a) const { return neg_[a]; }
  Elt sub(Elt a, Elt b) const { return add(a, neg_[b]); }
  Elt mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    if (!mul_.empty()) return mul_[static_cast<std::size_t>(a) * q_ + b];
    return exp_[log_[a] + log_[b]];
  }
  /// Multiplicative inverse; a must be nonzero.
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, std::uint64_t e) const;
  /// Image of an integer in the prime subfield.
  Elt from_int(long long v) const;
  /// A generator of the multiplicative group.
  Elt primitive() const { return exp_[1]; }
  /// Discrete log with respect to primitive(); a must be nonzero.
  int log(Elt a) const { return log_[a]; }
  /// p-th root (the inverse of the Frobenius map).
  Elt pth_root(Elt a) const;

  /// dst[i] += c * src[i]
  void axpy(Elt* dst, const Elt* src, Elt c, std::size_t n) const;
  /// row[i] *= c
  void scale(Elt* row, Elt c, std::size_t n) const;

 private:
  Field(int p, std::vector<int> modulus);
  Elt add_slow(Elt a, Elt b) const;

  int p_;
  int m_;
  int q_;
  std::vector<int> modulus_;
  std::vector<Elt> add_;  // q*q, only for small odd-characteristic fields
  std::vector<Elt> mul_;  // q*q, only for q <= 256
  std::vector<Elt> neg_;
  std::vector<Elt> inv_;
  std::vector<Elt> exp_;  // length 2(q-1)
  std::vector<int> log_;
};

bool is_prime(long long n);

/// Smallest m >= 1 with p^m = 1 modulo the p'-part of `exponent`.  A field of
/// that size contains all e-th roots of unity for e dividing the exponent,
/// which makes it a splitting field for every group of that exponent.
int splitting_degree(int p, long long exponent);

}  // namespace sttilt::ffla
