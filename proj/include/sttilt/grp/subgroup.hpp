#pragma once

#include <string>
#include <vector>

#include "sttilt/grp/group.hpp"

namespace sttilt::grp {

/// A subgroup realized as a group in its own right whose elements are the
/// parent's permutations.
struct Subgroup {
  GroupPtr parent;
  GroupPtr group;
  std::vector<int> embed;   // group index -> parent index
  std::vector<int> member;  // parent index -> group index, or -1

  bool contains(int parent_elt) const { return member[parent_elt] >= 0; }
  std::size_t order() const { return embed.size(); }
  std::size_t index() const { return parent->order() / embed.size(); }
};

/// Subgroup generated by the given parent elements.
Subgroup make_subgroup(const GroupPtr& parent, const std::vector<int>& gens, std::string name = "");
/// Embed an independently built group whose permutations (padded with fixed
/// points if of smaller degree) lie in the parent.
Subgroup embed_group(const GroupPtr& parent, const GroupPtr& sub);
Subgroup whole(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);

bool is_normal(const Subgroup& h);
/// Sorted list of parent elements of h.
std::vector<int> elements_of(const Subgroup& h);

/// Left cosets g H.  reps[0] is the identity; coset_of maps each parent element
/// to the index of its coset.
struct Cosets {
  std::vector<int> reps;
  std::vector<int> coset_of;
};
Cosets left_cosets(const Subgroup& h);
std::vector<int> coset_reps(const Subgroup& h);

struct Quotient {
  Subgroup kernel;
  GroupPtr group;               // action on the left cosets
  std::vector<int> projection;  // parent index -> quotient index
};
Quotient quotient(const Subgroup& n);

/// All normal subgroups, by increasing order.
std::vector<Subgroup> normal_subgroups(const GroupPtr& g);

/// A Sylow p-subgroup (trivial if p does not divide the order).
Subgroup sylow(const GroupPtr& g, int p);

/// Subgroups of h, one per conjugacy class under the parent, by increasing
/// order.
std::vector<Subgroup> subgroups_up_to_conjugacy(const Subgroup& h);

/// x H x^-1 = K for some x in the parent.
bool conjugate_in_parent(const Subgroup& a, const Subgroup& b);
/// x H x^-1 as a subgroup.
Subgroup conjugate_subgroup(const Subgroup& h, int x);

}  // namespace sttilt::grp
