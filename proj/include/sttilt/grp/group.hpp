#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace sttilt::grp {

/// Images of 0..n-1.
using Perm = std::vector<std::uint16_t>;

inline constexpr std::size_t kDefaultOrderCap = 10000;

std::string perm_to_cycles(const Perm& p);
Perm perm_identity(int degree);
/// (a*b)(x) = a(b(x))
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
/// "(1 2 3)(4 5)" on `degree` points, 1-based.  "()" is the identity.
Perm parse_cycles(const std::string& text, int degree);

/// A permutation group with its full element table.  Elements are indexed in
/// breadth-first order from the identity over the generators, so element i
/// (i > 0) equals generator bfs_gen(i) times element bfs_parent(i), and
/// bfs_parent(i) < i.
class Group {
 public:
  static std::shared_ptr<const Group> from_generators(int degree, std::vector<Perm> gens,
                                                      std::string name = "",
                                                      std::size_t cap = kDefaultOrderCap);

  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(int i) const { return elements_[i]; }
  /// Element indices of the generators.
  const std::vector<int>& generators() const { return gens_; }
  std::size_t num_generators() const { return gens_.size(); }

  int mul(int a, int b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
    return mul_slow(a, b);
  }
  int inv(int a) const { return inv_[a]; }
  /// g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inv_[g]); }
  /// -1 if the permutation is not in the group.
  int index_of(const Perm& p) const;

  int bfs_parent(int i) const { return parent_[i]; }
  int bfs_gen(int i) const { return via_[i]; }

  int element_order(int i) const;
  long long exponent() const;
  bool is_abelian() const;

  /// Orbits of conjugation; the identity class first, then by smallest element.
  const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
  int class_of(int i) const { return class_of_[i]; }

  std::string describe(int i) const { return perm_to_cycles(elements_[i]); }

 private:
  Group() = default;
  int mul_slow(int a, int b) const;

  std::string name_;
  int degree_ = 0;
  std::vector<Perm> elements_;
  std::vector<int> gens_;
  std::vector<int> parent_, via_;
  std::vector<int> inv_;
  std::vector<int> table_;
  std::unordered_map<std::string, int> lookup_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

using GroupPtr = std::shared_ptr<const Group>;

}  // namespace sttilt::grp
