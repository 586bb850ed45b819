#include "sttilt/taut/pair.hpp"

#include <algorithm>
#include <numeric>

#include "sttilt/ffla/linalg.hpp"
#include "sttilt/rep/submodule.hpp"

namespace sttilt::taut {

Scope::Scope(std::shared_ptr<Catalog> cat) : cat_(std::move(cat)) {
  view_.resize(cat_->algebra().num_simples());
  std::iota(view_.begin(), view_.end(), 0);
}

Scope::Scope(std::shared_ptr<Catalog> cat, std::vector<std::size_t> view) : cat_(std::move(cat)), view_(std::move(view)) {
  std::sort(view_.begin(), view_.end());
}

bool Scope::in_view(std::size_t simple) const { return std::binary_search(view_.begin(), view_.end(), simple); }

SttPair Scope::top() const {
  SttPair t;
  for (auto i : view_) t.m.push_back(cat_->pim(i));
  std::sort(t.m.begin(), t.m.end());
  return t;
}

SttPair Scope::bottom() const { return {{}, view_}; }

bool Scope::is_tau_rigid(const std::vector<int>& ids) const {
  for (int a : ids)
    for (int b : ids)
      if (cat_->hom_to_tau(a, b) != 0) return false;
  return true;
}

bool Scope::is_tau_rigid(const GModule& m) const {
  if (m.dim() == 0) return true;
  return is_tau_rigid(cat_->basic(m));
}

bool Scope::lies_in_view(int id) const {
  for (std::size_t i = 0; i < algebra().num_simples(); ++i)
    if (!in_view(i) && cat_->hom_dim(cat_->pim(i), id) != 0) return false;
  return true;
}

bool Scope::is_stt_pair(const SttPair& t) const {
  if (t.m.size() + t.p.size() != view_.size()) return false;
  for (auto i : t.p)
    if (!in_view(i)) return false;
  for (int x : t.m) {
    if (!lies_in_view(x)) return false;
    for (auto i : t.p)
      if (cat_->hom_dim(cat_->pim(i), x) != 0) return false;
  }
  return is_tau_rigid(t.m);
}

bool Scope::generates(const std::vector<int>& by, int x) const {
  const GModule& target = cat_->module(x);
  const std::size_t n = target.dim();
  ffla::Matrix acc(target.field(), 0, n);
  for (int b : by)
    for (const auto& h : cat_->hom_basis(b, x)) {
      acc = ffla::subspace_sum(acc, rep::image_rows(h));
      if (acc.rows() == n) return true;
    }
  return false;
}

bool Scope::leq(const SttPair& a, const SttPair& b) const {
  for (int x : a.m)
    if (!std::binary_search(b.m.begin(), b.m.end(), x) && !generates(b.m, x)) return false;
  return true;
}

bool Scope::maximality_check(const SttPair& t, const std::vector<int>& candidates) const {
  for (int x : candidates) {
    if (std::binary_search(t.m.begin(), t.m.end(), x) || !lies_in_view(x)) continue;
    bool fits = true;
    for (auto i : t.p) fits = fits && cat_->hom_dim(cat_->pim(i), x) == 0;
    for (int y : t.m) fits = fits && cat_->hom_to_tau(y, x) == 0 && cat_->hom_to_tau(x, y) == 0;
    if (fits) return false;
  }
  return true;
}

std::string Scope::describe(const SttPair& t) const {
  std::string out;
  for (int x : t.m) out += (out.empty() ? "" : " + ") + cat_->name(x);
  if (out.empty()) out = "0";
  if (!t.p.empty()) {
    out += " | ";
    bool first = true;
    for (auto i : t.p) {
      out += (first ? "P" : " + P") + algebra().label(i);
      first = false;
    }
  }
  return out;
}

}  // namespace sttilt::taut
