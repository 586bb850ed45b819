#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sttilt/blk/block.hpp"
#include "sttilt/rep/meataxe.hpp"
#include "sttilt/taut/actions.hpp"
#include "sttilt/taut/enumerate.hpp"

namespace sttilt::harness {

/// A normal inclusion G <= Gt over GF(p^m) and what to verify on it.  Stored
/// as flat "key = value" lines; '#' starts a comment.
struct Scenario {
  std::string name = "custom";
  int p = 2;
  int field_degree = 0;  // 0 picks the smallest splitting degree for the overgroup
  std::string group;     // overgroup, in group spec notation
  std::string normal;    // normal subgroup; empty means the whole group
  std::string block;     // block of the normal subgroup ("B1", ...), empty for all
  std::vector<std::string> suites{"modules", "tilting", "blocks", "vertices", "audits"};
  std::uint64_t seed = 1;
  std::size_t cap = 100000;
  int instances = 50;  // random instances per module identity
};

Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);
/// Every key with its value, defaults included.
std::string to_text(const Scenario& s);

const std::vector<std::string>& all_suites();

/// Resolved groups, algebras, catalogs and (lazily) posets of a scenario.
class Context {
 public:
  explicit Context(Scenario s);

  const Scenario& scenario() const { return sc_; }
  const ffla::Field& field() const { return *field_; }
  const grp::GroupPtr& big_group() const { return big_group_; }
  const grp::Subgroup& normal() const { return normal_; }
  const rep::GroupAlgebra& big() const { return *big_alg_; }
  const rep::GroupAlgebra& small() const { return *small_alg_; }
  const std::shared_ptr<rep::GroupAlgebra>& big_ptr() const { return big_alg_; }
  const std::shared_ptr<rep::GroupAlgebra>& small_ptr() const { return small_alg_; }
  const taut::Scope& big_scope() const { return *big_scope_; }
  const taut::Scope& small_scope() const { return *small_scope_; }
  const taut::SttPoset& big_poset();
  const taut::SttPoset& small_poset();

  const std::vector<blk::Block>& big_blocks();
  const std::vector<blk::Block>& small_blocks();
  /// Blocks of kG selected by the scenario (all of them by default).
  std::vector<std::size_t> selected_small_blocks();

  /// Scope and poset of a block (by index) of kG or kGt.
  const taut::Scope& block_scope(bool big, std::size_t b);
  const taut::SttPoset& block_poset(bool big, std::size_t b);

  /// Simples of Gt/G inflated to Gt.
  const std::vector<rep::GModule>& quotient_simples();
  /// Coset representatives of G in Gt.
  const std::vector<int>& coset_reps() const { return reps_; }
  std::size_t index() const { return normal_.index(); }
  bool p_power_index() const;

  /// Invariant nodes of kG, their images under induction and the three
  /// equivalent conditions on every node of kGt.
  const taut::InductionReport& induction();

 private:
  Scenario sc_;
  const ffla::Field* field_ = nullptr;
  grp::GroupPtr big_group_;
  grp::Subgroup normal_;
  std::vector<int> reps_;
  std::shared_ptr<rep::GroupAlgebra> big_alg_, small_alg_;
  std::unique_ptr<taut::Scope> big_scope_, small_scope_;
  std::optional<taut::SttPoset> big_poset_, small_poset_;
  std::optional<std::vector<blk::Block>> big_blocks_, small_blocks_;
  std::vector<std::unique_ptr<taut::Scope>> block_scopes_[2];
  std::vector<std::optional<taut::SttPoset>> block_posets_[2];
  std::optional<std::vector<rep::GModule>> quotient_simples_;
  std::optional<taut::InductionReport> induction_;
};

}  // namespace sttilt::harness
