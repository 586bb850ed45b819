#include "sttilt/taut/mutation.hpp"

#include <algorithm>

#include "sttilt/error.hpp"
#include "sttilt/ffla/linalg.hpp"
#include "sttilt/rep/functors.hpp"
#include "sttilt/rep/hom.hpp"
#include "sttilt/rep/submodule.hpp"

namespace sttilt::taut {

using ffla::Matrix;

namespace {

std::size_t dual_simple(const rep::GroupAlgebra& a, std::size_t i) {
  const int j = a.simple_index(rep::dual(a.simple(i)));
  if (j < 0) throw ConsistencyError("dual of a simple module is not simple");
  return static_cast<std::size_t>(j);
}

}  // namespace

MutationDraft draft_left_mutation(const Scope& s, const SttPair& t, std::size_t index) {
  Catalog& c = s.catalog();
  MutationDraft d;
  const int x = t.m.at(index);
  for (std::size_t k = 0; k < t.m.size(); ++k)
    if (k != index) d.kept.push_back(t.m[k]);
  if (s.generates(d.kept, x)) return d;
  d.applicable = true;

  const GModule& mx = c.module(x);
  std::vector<GModule> targets;
  std::vector<Matrix> maps;
  for (int u : d.kept) {
    const auto& homs = c.hom_basis(x, u);
    if (homs.empty()) continue;
    const std::size_t rows = c.module(u).dim(), cols = mx.dim();
    // maps X -> u factoring through a radical map from some summand of M/X
    std::vector<Matrix> rad;
    for (int w : d.kept) {
      const auto& hw = c.hom_basis(x, w);
      if (hw.empty()) continue;
      const auto& g = w == u ? c.end_radical(u) : c.hom_basis(w, u);
      for (const auto& gi : g)
        for (const auto& h : hw) rad.push_back(gi * h);
    }
    Matrix span = rad.empty() ? Matrix(mx.field(), 0, rows * cols) : ffla::reduce_basis(rep::flatten(rad, rows, cols));
    for (const auto& h : homs) {
      const Matrix grown = ffla::subspace_sum(span, Matrix(mx.field(), 1, rows * cols, h.data()));
      if (grown.rows() == span.rows()) continue;
      span = grown;
      targets.push_back(c.module(u));
      maps.push_back(h);
    }
  }

  GModule z = GModule::zero(mx.group(), mx.field());
  if (!maps.empty()) {
    const GModule e = rep::direct_sum(targets);
    z = rep::quotient(e, rep::image_rows(Matrix::vstack(maps))).module;
  }
  if (z.dim() > 0) {
    for (auto& part : s.algebra().decompose(z)) d.cokernel_summands.push_back(std::move(part.module));
    return d;
  }
  for (auto i : s.view()) {
    if (std::binary_search(t.p.begin(), t.p.end(), i)) continue;
    bool kills = true;
    for (int u : d.kept) kills = kills && c.hom_dim(c.pim(i), u) == 0;
    if (!kills) continue;
    if (d.new_projective) throw ConsistencyError("mutation to a projective summand is not unique");
    d.new_projective = i;
  }
  if (!d.new_projective) throw ConsistencyError("mutation found no projective summand to add");
  return d;
}

SttPair finish_mutation(const Scope& s, const SttPair& t, const MutationDraft& d) {
  if (!d.applicable) throw MismatchError("finishing a mutation that does not apply");
  SttPair out{d.kept, t.p};
  for (const auto& z : d.cokernel_summands) {
    const int id = s.catalog().intern(z);
    if (!std::binary_search(d.kept.begin(), d.kept.end(), id) && std::find(out.m.begin(), out.m.end(), id) == out.m.end())
      out.m.push_back(id);
  }
  std::sort(out.m.begin(), out.m.end());
  if (d.new_projective) {
    out.p.push_back(*d.new_projective);
    std::sort(out.p.begin(), out.p.end());
  }
  if (!s.is_stt_pair(out))
    throw ConsistencyError("mutation of " + s.describe(t) + " produced " + s.describe(out) +
                           ", which is not a support tau-tilting pair");
  return out;
}

std::optional<SttPair> left_mutate(const Scope& s, const SttPair& t, std::size_t index) {
  const MutationDraft d = draft_left_mutation(s, t, index);
  if (!d.applicable) return std::nullopt;
  return finish_mutation(s, t, d);
}

Scope dual_scope(const Scope& s) {
  std::vector<std::size_t> v;
  for (auto i : s.view()) v.push_back(dual_simple(s.algebra(), i));
  return Scope(s.catalog_ptr(), v);
}

SttPair dagger(const Scope& s, const SttPair& t) {
  Catalog& c = s.catalog();
  const auto& a = s.algebra();
  SttPair out;
  for (int x : t.m) {
    if (auto top = c.projective_top(x)) {
      out.p.push_back(dual_simple(a, *top));
    } else {
      out.m.push_back(c.intern(rep::dual(c.tau(x))));
    }
  }
  for (auto i : t.p) out.m.push_back(c.pim(dual_simple(a, i)));
  std::sort(out.m.begin(), out.m.end());
  std::sort(out.p.begin(), out.p.end());
  return out;
}

SttPair mutate(const Scope& s, const SttPair& t, std::size_t index) {
  Catalog& c = s.catalog();
  const auto& a = s.algebra();
  if (index < t.m.size())
    if (auto r = left_mutate(s, t, index)) return *r;
  // right mutation: find the matching summand of the dagger
  const Scope ds = dual_scope(s);
  const SttPair dt = dagger(s, t);
  int target = -1;
  if (index < t.m.size()) {
    const int x = t.m[index];
    if (c.projective_top(x)) throw ConsistencyError("projective summand generated by the others");
    target = c.intern(rep::dual(c.tau(x)));
  } else {
    target = c.pim(dual_simple(a, t.p.at(index - t.m.size())));
  }
  const auto pos = std::find(dt.m.begin(), dt.m.end(), target);
  if (pos == dt.m.end()) throw ConsistencyError("dagger lost a summand");
  const auto r = left_mutate(ds, dt, pos - dt.m.begin());
  if (!r) throw ConsistencyError("neither left nor right mutation applies");
  return dagger(ds, *r);
}

}  // namespace sttilt::taut
