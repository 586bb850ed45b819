#pragma once

#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sttilt/rep/algebra.hpp"

namespace sttilt::rep {

/// Registry of indecomposable modules up to isomorphism.  Ids are assigned
/// in order of first registration; Hom spaces, translates and endomorphism
/// radicals are cached per id.  All members are safe to call concurrently,
/// but ids depend on registration order, so callers that need reproducible
/// ids must register from a single thread.
class Catalog {
 public:
  explicit Catalog(AlgebraPtr a);

  const GroupAlgebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }

  /// Id of an indecomposable module, registering it if new.
  int intern(const GModule& x);
  /// Id if already registered.
  std::optional<int> find(const GModule& x) const;
  /// Ids of the indecomposable summands with multiplicity, sorted.
  std::vector<int> classify(const GModule& m);
  /// Distinct ids of the summands, sorted.
  std::vector<int> basic(const GModule& m);

  std::size_t size() const;
  const GModule& module(int id) const;
  const std::string& name(int id) const;
  const Fingerprint& fingerprint(int id) const;
  /// Id of the projective cover of simple i.
  int pim(std::size_t i);
  /// Index of the simple top if the module is projective, else nothing.
  std::optional<std::size_t> projective_top(int id);

  GModule sum(const std::vector<int>& ids) const;

  const std::vector<Matrix>& hom_basis(int a, int b);
  std::size_t hom_dim(int a, int b);
  /// Dimension of Hom(a, tau b).
  std::size_t hom_to_tau(int a, int b);
  const GModule& tau(int id);
  /// Basis of the radical of End(id).
  const std::vector<Matrix>& end_radical(int id);

 private:
  struct Entry {
    GModule module;
    Fingerprint fp;
    std::string name;
    std::optional<GModule> tau;
    std::optional<std::vector<Matrix>> radical;
    std::optional<std::optional<std::size_t>> proj_top;
  };

  AlgebraPtr alg_;
  mutable std::mutex mu_;
  std::deque<Entry> entries_;
  std::multimap<Fingerprint, int> by_fp_;
  std::map<std::pair<int, int>, std::vector<Matrix>> homs_;
  std::map<std::pair<int, int>, std::size_t> hom_tau_;
  std::vector<int> pims_;
};

}  // namespace sttilt::rep
