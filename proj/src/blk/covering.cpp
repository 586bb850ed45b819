#include "sttilt/blk/covering.hpp"

#include "sttilt/error.hpp"
#include "sttilt/rep/functors.hpp"
#include "sttilt/rep/hom.hpp"

namespace sttilt::blk {

bool covers(const grp::Subgroup& normal, const GroupAlgebra& big, const Block& bt, const Block& b) {
  const AlgebraElement e = algebra_embed(normal, b.idempotent);
  return !algebra_is_zero(algebra_mul(*normal.parent, big.field(), e, bt.idempotent));
}

grp::Subgroup inertia(const grp::Subgroup& normal, const Block& b) {
  const auto& g = *normal.parent;
  const AlgebraElement e = algebra_embed(normal, b.idempotent);
  std::vector<int> stab;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (algebra_conj(g, e, static_cast<int>(x)) == e) stab.push_back(static_cast<int>(x));
  return grp::make_subgroup(normal.parent, stab);
}

FongDatum fong_correspondent(const grp::Subgroup& normal, const GroupAlgebra& small, const Block& b,
                             const GroupAlgebra& big, const Block& bt) {
  if (!covers(normal, big, bt, b)) throw MismatchError(bt.name + " does not cover " + b.name);
  FongDatum d;
  d.normal = normal;
  d.b = b;
  d.bt = bt;
  d.inertia = inertia(normal, b);
  d.normal_in_inertia = grp::embed_group(d.inertia.group, normal.group);
  d.inertia_algebra = std::make_shared<GroupAlgebra>(d.inertia.group, small.field(), small.options());
  d.inertia_blocks = blocks(*d.inertia_algebra);
  const auto& g = *normal.parent;
  const auto reps = grp::coset_reps(d.inertia);
  bool found = false;
  for (std::size_t i = 0; i < d.inertia_blocks.size(); ++i) {
    const AlgebraElement e = algebra_embed(d.inertia, d.inertia_blocks[i].idempotent);
    AlgebraElement sum(g.order(), 0);
    for (int x : reps) sum = algebra_add(big.field(), sum, algebra_conj(g, e, x));
    if (sum != bt.idempotent) continue;
    if (!covers(d.normal_in_inertia, *d.inertia_algebra, d.inertia_blocks[i], b)) continue;
    if (found) throw ConsistencyError("two blocks of the inertial group correspond to " + bt.name);
    d.beta = i;
    found = true;
  }
  if (!found) throw ConsistencyError("no block of the inertial group corresponds to " + bt.name);
  return d;
}

GModule block_induce(const Block& bt, const GModule& m, const grp::Subgroup& normal) {
  return project(bt, rep::induce(m, normal));
}

GModule block_restrict(const Block& beta, const GModule& mt, const grp::Subgroup& inertia) {
  return project(beta, rep::restrict(mt, inertia));
}

MoritaReport verify_fong_morita(const FongDatum& d, const GroupAlgebra& big) {
  MoritaReport r;
  const GroupAlgebra& ia = *d.inertia_algebra;
  const Block& beta = d.inertia_blocks[d.beta];
  std::vector<GModule> family;
  for (auto i : beta.simples) {
    family.push_back(ia.simple(i));
    family.push_back(ia.pim(i));
  }
  std::vector<GModule> induced;
  for (const auto& x : family) {
    const GModule y = rep::induce(x, d.inertia);
    induced.push_back(y);
    ++r.checked;
    if (project(d.bt, y).dim() != y.dim()) r.problems.push_back("induced module leaves the covering block");
    if (!ia.is_isomorphic(block_restrict(beta, y, d.inertia), x))
      r.problems.push_back("beta Res Ind does not return a module of dimension " + std::to_string(x.dim()));
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j)
      if (rep::hom_dim(family[i], family[j]) != rep::hom_dim(induced[i], induced[j]))
        r.problems.push_back("induction changes a Hom dimension");
  for (auto i : d.bt.simples)
    for (const GModule& y : {big.simple(i), big.pim(i)}) {
      ++r.checked;
      const GModule back = rep::induce(block_restrict(beta, y, d.inertia), d.inertia);
      if (!big.is_isomorphic(back, y))
        r.problems.push_back("Ind beta Res does not return a module of dimension " + std::to_string(y.dim()));
    }
  return r;
}

}  // namespace sttilt::blk
