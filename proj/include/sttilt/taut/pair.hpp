#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "sttilt/rep/catalog.hpp"

namespace sttilt::taut {

using rep::Catalog;
using rep::GModule;

/// A pair (M, P): catalog ids of the indecomposable summands of M and
/// indices of the projective covers making up P.  Both sorted, no repeats.
struct SttPair {
  std::vector<int> m;
  std::vector<std::size_t> p;
  auto operator<=>(const SttPair&) const = default;
};

/// The algebra in which pairs live: the group algebra, or one of its blocks
/// given as the set of simple modules it contains (the "view").
class Scope {
 public:
  /// Whole group algebra.
  explicit Scope(std::shared_ptr<Catalog> cat);
  Scope(std::shared_ptr<Catalog> cat, std::vector<std::size_t> view);

  Catalog& catalog() const { return *cat_; }
  const std::shared_ptr<Catalog>& catalog_ptr() const { return cat_; }
  const rep::GroupAlgebra& algebra() const { return cat_->algebra(); }
  const std::vector<std::size_t>& view() const { return view_; }
  std::size_t rank() const { return view_.size(); }
  bool in_view(std::size_t simple) const;

  /// (sum of projectives in the view, 0) and (0, same).
  SttPair top() const;
  SttPair bottom() const;

  bool is_tau_rigid(const std::vector<int>& ids) const;
  bool is_tau_rigid(const GModule& m) const;
  /// tau-rigid, Hom(P, M) = 0, everything inside the view, and
  /// |M| + |P| equals the number of simples in the view.
  bool is_stt_pair(const SttPair& t) const;
  /// All composition factors of the module lie in the view.
  bool lies_in_view(int id) const;

  /// x is a quotient of a sum of copies of the modules `by`.
  bool generates(const std::vector<int>& by, int x) const;
  /// Fac M_a is contained in Fac M_b.
  bool leq(const SttPair& a, const SttPair& b) const;

  /// No discovered indecomposable outside add M satisfies the three
  /// vanishing conditions that would let it join the pair.
  bool maximality_check(const SttPair& t, const std::vector<int>& candidates) const;

  std::string describe(const SttPair& t) const;

 private:
  std::shared_ptr<Catalog> cat_;
  std::vector<std::size_t> view_;
};

}  // namespace sttilt::taut
