#include "sttilt/rep/algebra.hpp"

#include <algorithm>

#include "sttilt/error.hpp"
#include "sttilt/ffla/linalg.hpp"
#include "sttilt/rep/functors.hpp"
#include "sttilt/rep/hom.hpp"
#include "sttilt/rep/submodule.hpp"

namespace sttilt::rep {

namespace {

bool is_trivial_module(const GModule& s) {
  if (s.dim() != 1) return false;
  for (const auto& g : s.generators())
    if (!g.is_identity()) return false;
  return true;
}

bool simple_before(const GModule& a, const GModule& b) {
  const bool ta = is_trivial_module(a), tb = is_trivial_module(b);
  if (ta != tb) return ta;
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t k = 0; k < a.generators().size(); ++k)
    if (a.gen(k).data() != b.gen(k).data()) return a.gen(k).data() < b.gen(k).data();
  return false;
}

// Stack the rows of every matrix in hs.
Matrix stack_rows(const Field& f, const std::vector<Matrix>& hs, std::size_t cols) {
  std::vector<Matrix> parts{Matrix(f, 0, cols)};
  parts.insert(parts.end(), hs.begin(), hs.end());
  return Matrix::vstack(parts);
}

}  // namespace

GroupAlgebra::GroupAlgebra(GroupPtr g, const Field& f, AlgebraOptions opt)
    : group_(std::move(g)), field_(&f), opt_(std::move(opt)) {
  Rng rng(opt_.seed);
  const GModule reg = rep::regular(group_, f);
  for (const auto& c : composition_factors(reg, rng, opt_.budget)) {
    bool seen = false;
    for (const auto& s : simples_)
      if (s.dim() == c.dim() && hom_dim(s, c) > 0) {
        seen = true;
        break;
      }
    if (seen) continue;
    if (hom_dim(c, c) != 1)
      throw SplittingFieldError("a simple module of dimension " + std::to_string(c.dim()) + " over " + f.header() +
                                " is not absolutely simple; enlarge the field degree");
    simples_.push_back(c);
  }
  std::stable_sort(simples_.begin(), simples_.end(), simple_before);
  for (std::size_t i = 0; i < simples_.size(); ++i) labels_.push_back(std::to_string(i + 1) + opt_.suffix);

  pims_.resize(simples_.size());
  for (auto& s : rep::decompose(reg, opt_.seed, opt_.budget)) {
    const auto t = top_mults(s.module);
    const auto it = std::find(t.begin(), t.end(), 1);
    if (std::count(t.begin(), t.end(), 0) + 1 != static_cast<long>(t.size()) || it == t.end())
      throw ConsistencyError("summand of the regular module without a simple top");
    const std::size_t i = it - t.begin();
    if (!pims_[i].valid()) pims_[i] = s.module;
  }
  for (const auto& p : pims_)
    if (!p.valid()) throw ConsistencyError("some simple module has no projective cover in the regular module");
}

int GroupAlgebra::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return -1;
}

int GroupAlgebra::simple_index(const GModule& s) const {
  for (std::size_t i = 0; i < simples_.size(); ++i)
    if (simples_[i].dim() == s.dim() && hom_dim(simples_[i], s) > 0) return static_cast<int>(i);
  return -1;
}

GModule GroupAlgebra::regular() const { return rep::regular(group_, *field_); }
GModule GroupAlgebra::trivial() const { return rep::trivial(group_, *field_); }

Matrix GroupAlgebra::radical(const GModule& m) const {
  std::vector<Matrix> hs;
  for (const auto& s : simples_)
    for (auto& h : hom_space(m, s)) hs.push_back(std::move(h));
  return ffla::reduce_basis(ffla::kernel(stack_rows(*field_, hs, m.dim())));
}

GModule GroupAlgebra::top(const GModule& m) const { return quotient(m, radical(m)).module; }

Matrix GroupAlgebra::socle(const GModule& m) const {
  Matrix acc(*field_, 0, m.dim());
  for (const auto& s : simples_)
    for (const auto& h : hom_space(s, m)) acc = ffla::subspace_sum(acc, image_rows(h));
  return acc;
}

std::vector<std::size_t> GroupAlgebra::top_mults(const GModule& m) const {
  std::vector<std::size_t> out;
  for (const auto& s : simples_) out.push_back(hom_dim(m, s));
  return out;
}

std::vector<std::size_t> GroupAlgebra::socle_mults(const GModule& m) const {
  std::vector<std::size_t> out;
  for (const auto& s : simples_) out.push_back(hom_dim(s, m));
  return out;
}

std::vector<std::size_t> GroupAlgebra::composition_mults(const GModule& m) const {
  std::vector<std::size_t> out;
  for (const auto& p : pims_) out.push_back(hom_dim(p, m));
  return out;
}

std::vector<std::vector<std::size_t>> GroupAlgebra::radical_layers(const GModule& m) const {
  std::vector<std::vector<std::size_t>> out;
  GModule cur = m;
  while (cur.dim() > 0) {
    out.push_back(top_mults(cur));
    cur = submodule(cur, radical(cur)).module;
  }
  return out;
}

std::string GroupAlgebra::stack_name(const GModule& m) const {
  if (m.dim() == 0) return "0";
  std::string out;
  for (const auto& layer : radical_layers(m)) {
    if (!out.empty()) out += "/";
    bool first = true;
    for (std::size_t i = 0; i < layer.size(); ++i)
      for (std::size_t k = 0; k < layer[i]; ++k) {
        if (!first) out += ",";
        out += labels_[i];
        first = false;
      }
  }
  return out;
}

ProjCover GroupAlgebra::proj_cover(const GModule& m) const {
  ProjCover pc;
  const Field& f = *field_;
  if (m.dim() == 0) {
    pc.module = GModule::zero(group_, f);
    pc.map = Matrix(f, 0, 0);
    return pc;
  }
  const Matrix to_top = quotient(m, radical(m)).projection;
  const auto mults = top_mults(m);
  Matrix reached(f, 0, to_top.rows());
  std::vector<GModule> parts;
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < simples_.size(); ++i) {
    std::size_t taken = 0;
    for (const auto& h : hom_space(pims_[i], m)) {
      if (taken == mults[i]) break;
      const Matrix grown = ffla::subspace_sum(reached, image_rows(to_top * h));
      if (grown.rows() == reached.rows()) continue;
      reached = grown;
      parts.push_back(pims_[i]);
      maps.push_back(h);
      pc.pims.push_back(i);
      ++taken;
    }
    if (taken != mults[i]) throw ConsistencyError("projective cover does not reach the top");
  }
  pc.module = direct_sum(parts);
  pc.map = Matrix::hstack(maps);
  return pc;
}

GModule GroupAlgebra::syzygy(const GModule& m) const {
  const ProjCover pc = proj_cover(m);
  if (pc.module.dim() == 0) return pc.module;
  const Matrix k = kernel_rows(pc.map);
  if (k.rows() == 0) return GModule::zero(group_, *field_);
  return submodule(pc.module, k).module;
}

GModule GroupAlgebra::tau(const GModule& m) const { return syzygy(syzygy(m)); }

bool GroupAlgebra::is_projective(const GModule& m) const { return proj_cover(m).module.dim() == m.dim(); }

std::size_t GroupAlgebra::ext1_dim(const GModule& m, const GModule& n) const {
  const ProjCover pc = proj_cover(m);
  const GModule om = syzygy(m);
  return hom_dim(om, n) + hom_dim(m, n) - hom_dim(pc.module, n);
}

Fingerprint GroupAlgebra::fingerprint(const GModule& m) const {
  Fingerprint fp;
  fp.dim = m.dim();
  fp.top = top_mults(m);
  fp.socle = socle_mults(m);
  for (const auto& layer : radical_layers(m)) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < layer.size(); ++i) d += layer[i] * simples_[i].dim();
    fp.layers.push_back(d);
  }
  return fp;
}

std::vector<Summand> GroupAlgebra::decompose(const GModule& m) const {
  return rep::decompose(m, opt_.seed, opt_.budget);
}

bool GroupAlgebra::is_isomorphic(const GModule& m, const GModule& n) const {
  m.require_same_algebra(n);
  if (m.dim() != n.dim()) return false;
  if (m.dim() == 0) return true;
  if (fingerprint(m) != fingerprint(n)) return false;
  auto a = decompose(m);
  auto b = decompose(n);
  if (a.size() != b.size()) return false;
  std::vector<char> used(b.size(), 0);
  for (const auto& x : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (used[j] || b[j].module.dim() != x.module.dim()) continue;
      if (isomorphic_indecomposables(x.module, b[j].module)) {
        used[j] = 1;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

Matrix GroupAlgebra::trace(const GModule& m, const GModule& n) const {
  Matrix acc(*field_, 0, n.dim());
  if (m.dim() == 0 || n.dim() == 0) return acc;
  for (const auto& h : hom_space(m, n)) {
    acc = ffla::subspace_sum(acc, image_rows(h));
    if (acc.rows() == n.dim()) break;
  }
  return acc;
}

bool GroupAlgebra::generates(const GModule& m, const GModule& n) const {
  return trace(m, n).rows() == n.dim();
}

}  // namespace sttilt::rep
