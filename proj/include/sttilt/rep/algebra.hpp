#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sttilt/rep/decompose.hpp"

namespace sttilt::rep {

struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> top;
  std::vector<std::size_t> socle;
  std::vector<std::size_t> layers;  // radical layer dimensions
  auto operator<=>(const Fingerprint&) const = default;
};

struct ProjCover {
  GModule module;
  Matrix map;                     // m.dim x module.dim, surjective
  std::vector<std::size_t> pims;  // indices of the summands, in order
};

struct AlgebraOptions {
  std::string suffix;  // appended to simple labels, e.g. "'"
  std::uint64_t seed = 1;
  int budget = kDefaultBudget;
};

/// The group algebra kG with its simple and projective indecomposable
/// modules.  Simples are ordered trivial first, then by dimension, then by
/// their generator matrices; simple i is labelled i+1 (plus the suffix) and
/// P_i is its projective cover.
class GroupAlgebra {
 public:
  GroupAlgebra(GroupPtr g, const Field& f, AlgebraOptions opt = {});

  const GroupPtr& group() const { return group_; }
  const Field& field() const { return *field_; }
  const AlgebraOptions& options() const { return opt_; }

  std::size_t num_simples() const { return simples_.size(); }
  const GModule& simple(std::size_t i) const { return simples_[i]; }
  const GModule& pim(std::size_t i) const { return pims_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  /// Index of the simple with this label, or -1.
  int find_label(const std::string& label) const;
  /// Index of the simple isomorphic to s, or -1.
  int simple_index(const GModule& s) const;

  GModule regular() const;
  GModule trivial() const;

  /// Rows spanning the radical: the common kernel of all maps to simples.
  Matrix radical(const GModule& m) const;
  GModule top(const GModule& m) const;
  /// Rows spanning the socle: the sum of images of all maps from simples.
  Matrix socle(const GModule& m) const;
  std::vector<std::size_t> top_mults(const GModule& m) const;
  std::vector<std::size_t> socle_mults(const GModule& m) const;
  std::vector<std::size_t> composition_mults(const GModule& m) const;
  /// Multiplicity vectors of the radical layers, top first.
  std::vector<std::vector<std::size_t>> radical_layers(const GModule& m) const;
  /// Radical layers written top to bottom, e.g. "1/2,3/1".
  std::string stack_name(const GModule& m) const;

  ProjCover proj_cover(const GModule& m) const;
  GModule syzygy(const GModule& m) const;
  /// Auslander-Reiten translate, computed as the second syzygy.
  GModule tau(const GModule& m) const;
  bool is_projective(const GModule& m) const;
  std::size_t ext1_dim(const GModule& m, const GModule& n) const;

  Fingerprint fingerprint(const GModule& m) const;
  std::vector<Summand> decompose(const GModule& m) const;
  bool is_isomorphic(const GModule& m, const GModule& n) const;

  /// Sum of the images of all maps from m into n, as rows.
  Matrix trace(const GModule& m, const GModule& n) const;
  /// n is a quotient of a sum of copies of m.
  bool generates(const GModule& m, const GModule& n) const;

 private:
  GroupPtr group_;
  const Field* field_;
  AlgebraOptions opt_;
  std::vector<GModule> simples_;
  std::vector<GModule> pims_;
  std::vector<std::string> labels_;
};

using AlgebraPtr = std::shared_ptr<const GroupAlgebra>;

}  // namespace sttilt::rep
