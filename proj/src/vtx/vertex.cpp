#include "sttilt/vtx/vertex.hpp"

#include <algorithm>
#include <memory>

#include "sttilt/error.hpp"
#include "sttilt/ffla/linalg.hpp"
#include "sttilt/rep/decompose.hpp"
#include "sttilt/rep/functors.hpp"
#include "sttilt/rep/hom.hpp"
#include "sttilt/taut/enumerate.hpp"

namespace sttilt::vtx {

using ffla::Matrix;

bool is_summand(const GModule& x, const GModule& y) {
  x.require_same_algebra(y);
  if (x.dim() == 0) return true;
  if (y.dim() < x.dim()) return false;
  const auto into = rep::hom_space(x, y);
  if (into.empty()) return false;
  const auto back = rep::hom_space(y, x);
  // the composites span a two-sided ideal of the local ring End(x); it is
  // everything iff one of the spanning composites is a unit
  for (const auto& g : back)
    for (const auto& f : into)
      if (ffla::invertible(g * f)) return true;
  return false;
}

bool is_rel_projective(const GModule& m, const grp::Subgroup& h) {
  if (m.group() != h.parent) throw MismatchError("subgroup of a different group");
  if (h.order() == h.parent->order()) return true;
  const GModule big = rep::induce(rep::restrict(m, h), h);
  for (const auto& s : rep::decompose(m))
    if (!is_summand(s.module, big)) return false;
  return true;
}

bool higman_rel_projective(const GModule& m, const grp::Subgroup& h) {
  if (m.group() != h.parent) throw MismatchError("subgroup of a different group");
  const auto& g = *h.parent;
  const auto ends = rep::hom_space(rep::restrict(m, h), rep::restrict(m, h));
  const auto reps = grp::coset_reps(h);
  std::vector<Matrix> traces;
  for (const auto& phi : ends) {
    Matrix t(m.field(), m.dim(), m.dim());
    for (int x : reps) t = t + m.act(x) * phi * m.act(g.inv(x));
    traces.push_back(t);
  }
  const std::size_t n = m.dim();
  const Matrix span = rep::flatten(traces, n, n);
  const Matrix id = Matrix::identity(m.field(), n);
  return ffla::coordinates(span, id.data()).has_value();
}

VertexReport vertex(const GModule& m) {
  if (!rep::is_indecomposable(m)) throw MismatchError("vertex needs an indecomposable module");
  const int p = m.field().p();
  const grp::Subgroup syl = grp::sylow(m.group(), p);
  VertexReport r;
  r.module = m;
  r.sylow_order = syl.order();
  for (const auto& q : grp::subgroups_up_to_conjugacy(syl)) {
    if (is_rel_projective(m, q)) {
      r.vertex = q;
      r.proper = q.order() < syl.order();
      return r;
    }
  }
  throw ConsistencyError("module is not relatively projective over a Sylow subgroup");
}

VertexTheoremReport verify_vertex_theorem(const grp::GroupPtr& g, const ffla::Field& f) {
  VertexTheoremReport r;
  r.p = f.p();
  const std::size_t order = g->order();
  for (const auto& n : grp::normal_subgroups(g)) {
    std::size_t idx = order / n.order();
    if (idx == 1) continue;
    while (idx % r.p == 0) idx /= r.p;
    if (idx == 1) {
      r.has_p_normal = true;
      r.normal_witness = n;
      break;
    }
  }

  auto alg = std::make_shared<rep::GroupAlgebra>(g, f);
  auto cat = std::make_shared<taut::Catalog>(alg);
  taut::Scope scope(cat);
  const auto poset = taut::enumerate(scope);
  std::vector<int> ids;
  for (const auto& t : poset.nodes)
    for (int id : t.m)
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  r.all_proper = true;
  std::size_t witness_dim = 0;
  bool witness_is_trivial = false;
  const int trivial_id = cat->intern(alg->trivial());
  for (int id : ids) {
    const auto v = vertex(cat->module(id));
    r.rows.push_back({cat->name(id), cat->module(id).dim(), v.vertex.order(), v.proper});
    if (!v.proper) {
      r.all_proper = false;
      // the trivial module when it qualifies, else a smallest one
      const bool triv = id == trivial_id;
      if (!r.full_vertex_witness || triv || (!witness_is_trivial && witness_dim > cat->module(id).dim())) {
        witness_is_trivial = triv;
        r.full_vertex_witness = cat->name(id);
        witness_dim = cat->module(id).dim();
      }
    }
  }
  return r;
}

}  // namespace sttilt::vtx
