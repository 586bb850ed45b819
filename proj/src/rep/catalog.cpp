#include "sttilt/rep/catalog.hpp"

#include <algorithm>

#include "sttilt/error.hpp"
#include "sttilt/rep/functors.hpp"
#include "sttilt/rep/hom.hpp"

namespace sttilt::rep {

Catalog::Catalog(AlgebraPtr a) : alg_(std::move(a)) {
  for (std::size_t i = 0; i < alg_->num_simples(); ++i) pims_.push_back(intern(alg_->pim(i)));
}

std::optional<int> Catalog::find(const GModule& x) const {
  const Fingerprint fp = alg_->fingerprint(x);
  std::lock_guard lock(mu_);
  auto [lo, hi] = by_fp_.equal_range(fp);
  for (auto it = lo; it != hi; ++it)
    if (isomorphic_indecomposables(entries_[it->second].module, x)) return it->second;
  return std::nullopt;
}

int Catalog::intern(const GModule& x) {
  if (x.dim() == 0) throw MismatchError("the zero module is not indecomposable");
  const Fingerprint fp = alg_->fingerprint(x);
  std::lock_guard lock(mu_);
  auto [lo, hi] = by_fp_.equal_range(fp);
  for (auto it = lo; it != hi; ++it)
    if (isomorphic_indecomposables(entries_[it->second].module, x)) return it->second;
  const int id = static_cast<int>(entries_.size());
  entries_.push_back({x, fp, alg_->stack_name(x), std::nullopt, std::nullopt, std::nullopt});
  by_fp_.emplace(fp, id);
  return id;
}

std::vector<int> Catalog::classify(const GModule& m) {
  std::vector<int> ids;
  for (const auto& s : alg_->decompose(m)) ids.push_back(intern(s.module));
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<int> Catalog::basic(const GModule& m) {
  auto ids = classify(m);
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::size_t Catalog::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

const GModule& Catalog::module(int id) const {
  std::lock_guard lock(mu_);
  return entries_.at(id).module;
}

const std::string& Catalog::name(int id) const {
  std::lock_guard lock(mu_);
  return entries_.at(id).name;
}

const Fingerprint& Catalog::fingerprint(int id) const {
  std::lock_guard lock(mu_);
  return entries_.at(id).fp;
}

int Catalog::pim(std::size_t i) { return pims_.at(i); }

std::optional<std::size_t> Catalog::projective_top(int id) {
  {
    std::lock_guard lock(mu_);
    if (entries_.at(id).proj_top) return *entries_[id].proj_top;
  }
  std::optional<std::size_t> top;
  for (std::size_t i = 0; i < pims_.size(); ++i)
    if (pims_[i] == id) top = i;
  std::lock_guard lock(mu_);
  entries_[id].proj_top = top;
  return top;
}

GModule Catalog::sum(const std::vector<int>& ids) const {
  if (ids.empty()) return GModule::zero(alg_->group(), alg_->field());
  std::vector<GModule> ms;
  for (int id : ids) ms.push_back(module(id));
  return direct_sum(ms);
}

const std::vector<Matrix>& Catalog::hom_basis(int a, int b) {
  {
    std::lock_guard lock(mu_);
    auto it = homs_.find({a, b});
    if (it != homs_.end()) return it->second;
  }
  auto basis = hom_space(module(a), module(b));
  std::lock_guard lock(mu_);
  return homs_.emplace(std::pair{a, b}, std::move(basis)).first->second;
}

std::size_t Catalog::hom_dim(int a, int b) { return hom_basis(a, b).size(); }

const GModule& Catalog::tau(int id) {
  {
    std::lock_guard lock(mu_);
    if (entries_.at(id).tau) return *entries_[id].tau;
  }
  GModule t = alg_->tau(module(id));
  std::lock_guard lock(mu_);
  if (!entries_[id].tau) entries_[id].tau = std::move(t);
  return *entries_[id].tau;
}

std::size_t Catalog::hom_to_tau(int a, int b) {
  {
    std::lock_guard lock(mu_);
    auto it = hom_tau_.find({a, b});
    if (it != hom_tau_.end()) return it->second;
  }
  const GModule& t = tau(b);
  const std::size_t d = t.dim() ? rep::hom_dim(module(a), t) : 0;
  std::lock_guard lock(mu_);
  hom_tau_[{a, b}] = d;
  return d;
}

const std::vector<Matrix>& Catalog::end_radical(int id) {
  {
    std::lock_guard lock(mu_);
    if (entries_.at(id).radical) return *entries_[id].radical;
  }
  Rng rng(alg_->options().seed);
  EndSplit s = split_or_certify(module(id), rng, alg_->options().budget);
  if (s.split()) throw ConsistencyError("registered module is decomposable");
  std::lock_guard lock(mu_);
  if (!entries_[id].radical) entries_[id].radical = std::move(s.local.radical);
  return *entries_[id].radical;
}

}  // namespace sttilt::rep
