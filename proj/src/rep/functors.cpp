#include "sttilt/rep/functors.hpp"

#include "sttilt/error.hpp"
#include "sttilt/ffla/linalg.hpp"

namespace sttilt::rep {

GModule trivial(const GroupPtr& g, const Field& f) {
  return GModule(g, f, std::vector<Matrix>(g->num_generators(), Matrix::identity(f, 1)));
}

GModule regular(const GroupPtr& g, const Field& f) {
  const std::size_t n = g->order();
  std::vector<Matrix> gens;
  for (int x : g->generators()) {
    Matrix a(f, n, n);
    for (std::size_t y = 0; y < n; ++y) a(g->mul(x, static_cast<int>(y)), y) = 1;
    gens.push_back(std::move(a));
  }
  return GModule(g, f, std::move(gens));
}

GModule coset_module(const grp::Subgroup& h, const Field& f) {
  const auto c = grp::left_cosets(h);
  const auto& g = *h.parent;
  const std::size_t k = c.reps.size();
  std::vector<Matrix> gens;
  for (int x : g.generators()) {
    Matrix a(f, k, k);
    for (std::size_t i = 0; i < k; ++i) a(c.coset_of[g.mul(x, c.reps[i])], i) = 1;
    gens.push_back(std::move(a));
  }
  return GModule(h.parent, f, std::move(gens));
}

GModule direct_sum(const std::vector<GModule>& ms) {
  if (ms.empty()) throw MismatchError("direct sum of nothing");
  for (const auto& m : ms) ms[0].require_same_algebra(m);
  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < ms[0].generators().size(); ++k) {
    std::vector<Matrix> blocks;
    for (const auto& m : ms) blocks.push_back(m.gen(k));
    gens.push_back(Matrix::diag_sum(blocks));
  }
  return GModule(ms[0].group(), ms[0].field(), std::move(gens));
}

GModule tensor(const GModule& a, const GModule& b) {
  a.require_same_algebra(b);
  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < a.generators().size(); ++k) gens.push_back(ffla::kron(a.gen(k), b.gen(k)));
  if (a.dim() * b.dim() == 0) return GModule::zero(a.group(), a.field());
  return GModule(a.group(), a.field(), std::move(gens));
}

GModule dual(const GModule& m) {
  std::vector<Matrix> gens;
  for (const auto& g : m.generators()) gens.push_back(m.dim() ? ffla::inverse(g)->transpose() : g);
  return GModule(m.group(), m.field(), std::move(gens));
}

GModule restrict(const GModule& m, const grp::Subgroup& h) {
  if (m.group() != h.parent) throw MismatchError("restriction to a subgroup of a different group");
  std::vector<Matrix> gens;
  for (int x : h.group->generators()) gens.push_back(m.act(h.embed[x]));
  return GModule(h.group, m.field(), std::move(gens));
}

GModule induce(const GModule& v, const grp::Subgroup& h) {
  if (v.group() != h.group) throw MismatchError("induction from a module over a different group");
  const auto& g = *h.parent;
  const auto c = grp::left_cosets(h);
  const std::size_t k = c.reps.size(), d = v.dim();
  const Field& f = v.field();
  std::vector<Matrix> gens;
  for (int x : g.generators()) {
    Matrix a(f, k * d, k * d);
    for (std::size_t i = 0; i < k; ++i) {
      // x t_i = t_j h
      const int xt = g.mul(x, c.reps[i]);
      const int j = c.coset_of[xt];
      const int hh = g.mul(g.inv(c.reps[j]), xt);
      a.set_block(j * d, i * d, v.act(h.member[hh]));
    }
    gens.push_back(std::move(a));
  }
  if (k * d == 0) return GModule::zero(h.parent, f);
  return GModule(h.parent, f, std::move(gens));
}

GModule conjugate(const GModule& m, const grp::Subgroup& n, int g) {
  if (m.group() != n.group) throw MismatchError("conjugation of a module over a different group");
  const auto& big = *n.parent;
  std::vector<Matrix> gens;
  for (int x : n.group->generators()) {
    const int y = big.mul(big.mul(big.inv(g), n.embed[x]), g);
    if (!n.contains(y)) throw MismatchError("conjugation needs a normal subgroup");
    gens.push_back(m.act(n.member[y]));
  }
  return GModule(n.group, m.field(), std::move(gens));
}

GModule inflate(const GModule& m, const grp::Quotient& q) {
  if (m.group() != q.group) throw MismatchError("inflation of a module over a different group");
  std::vector<Matrix> gens;
  for (int x : q.kernel.parent->generators()) gens.push_back(m.act(q.projection[x]));
  return GModule(q.kernel.parent, m.field(), std::move(gens));
}

Matrix algebra_element(const GModule& m, const std::vector<Elt>& coeffs) {
  const Field& f = m.field();
  Matrix r(f, m.dim(), m.dim());
  for (std::size_t x = 0; x < coeffs.size(); ++x)
    if (coeffs[x]) f.axpy(r.data().data(), m.act(static_cast<int>(x)).data().data(), coeffs[x], r.data().size());
  return r;
}

}  // namespace sttilt::rep
