#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "sttilt/ffla/matrix.hpp"
#include "sttilt/grp/group.hpp"

namespace sttilt::rep {

using ffla::Elt;
using ffla::Field;
using ffla::Matrix;
using grp::GroupPtr;

/// Spin basis of a module: vectors w_j obtained from a few seeds by applying
/// generators.  Used to turn intertwining equations into a small linear
/// system (see hom.hpp).
struct SpinBasis {
  std::vector<int> seed;    // seed number of each w_j
  std::vector<int> parent;  // w_j = A_via[j] w_parent[j], or -1 for seeds
  std::vector<int> via;
  std::size_t num_seeds = 0;
  Matrix t;                  // columns w_j
  Matrix t_inv;
  std::vector<Matrix> coords;  // coords[g] = T^-1 A_g T
};

/// A finite-dimensional left module over kG: one invertible matrix per group
/// generator, acting on column vectors.  Values are immutable and cheap to
/// copy; derived data (all element matrices, the spin basis) is computed on
/// first use and shared between copies.
class GModule {
 public:
  GModule() = default;
  GModule(GroupPtr g, const Field& f, std::vector<Matrix> gens);
  static GModule zero(GroupPtr g, const Field& f);

  bool valid() const { return d_ != nullptr; }
  const GroupPtr& group() const;
  const Field& field() const;
  std::size_t dim() const;
  const std::vector<Matrix>& generators() const;
  const Matrix& gen(std::size_t k) const { return generators()[k]; }

  /// Matrix of a group element (by index in the group's element table).
  const Matrix& act(int element) const;
  const SpinBasis& spin_basis() const;

  /// Every element matrix agrees with the product over a second
  /// factorization: rho(g) rho(x) = rho(gx) for all generators g, elements x.
  bool verify_relations() const;

  bool same_algebra(const GModule& o) const;
  void require_same_algebra(const GModule& o) const;

 private:
  struct Data;
  std::shared_ptr<Data> d_;
};

}  // namespace sttilt::rep
