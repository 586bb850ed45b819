#include "sttilt/blk/block.hpp"

#include <algorithm>
#include <random>

#include "sttilt/error.hpp"
#include "sttilt/ffla/linalg.hpp"
#include "sttilt/ffla/poly.hpp"
#include "sttilt/rep/decompose.hpp"
#include "sttilt/rep/functors.hpp"
#include "sttilt/rep/submodule.hpp"

namespace sttilt::blk {

using ffla::Field;
using ffla::Matrix;
using ffla::Poly;

AlgebraElement algebra_one(const grp::Group& g) {
  AlgebraElement e(g.order(), 0);
  e[0] = 1;
  return e;
}

AlgebraElement algebra_mul(const grp::Group& g, const Field& f, const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement c(g.order(), 0);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (!a[x]) continue;
    for (std::size_t y = 0; y < b.size(); ++y)
      if (b[y]) {
        const int xy = g.mul(static_cast<int>(x), static_cast<int>(y));
        c[xy] = f.add(c[xy], f.mul(a[x], b[y]));
      }
  }
  return c;
}

AlgebraElement algebra_add(const Field& f, const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = f.add(a[i], b[i]);
  return c;
}

AlgebraElement algebra_conj(const grp::Group& g, const AlgebraElement& a, int x) {
  AlgebraElement c(a.size(), 0);
  for (std::size_t y = 0; y < a.size(); ++y)
    if (a[y]) c[g.conj(x, static_cast<int>(y))] = a[y];
  return c;
}

AlgebraElement algebra_embed(const grp::Subgroup& h, const AlgebraElement& a) {
  AlgebraElement c(h.parent->order(), 0);
  for (std::size_t y = 0; y < a.size(); ++y) c[h.embed[y]] = a[y];
  return c;
}

bool algebra_is_zero(const AlgebraElement& a) {
  return std::all_of(a.begin(), a.end(), [](Elt x) { return x == 0; });
}

namespace {

// Minimal polynomial of y in the algebra with identity e.
Poly element_min_poly(const grp::Group& g, const Field& f, const AlgebraElement& e, const AlgebraElement& y) {
  std::vector<AlgebraElement> powers{e};
  while (true) {
    Matrix rows(f, powers.size(), e.size());
    for (std::size_t i = 0; i < powers.size(); ++i) std::copy(powers[i].begin(), powers[i].end(), rows.row(i));
    const Matrix k = ffla::kernel(rows.transpose());
    if (k.rows() > 0) return Poly(f, k.row_vector(0)).monic();
    powers.push_back(algebra_mul(g, f, powers.back(), y));
  }
}

AlgebraElement eval_at(const grp::Group& g, const Field& f, const Poly& u, const AlgebraElement& e,
                       const AlgebraElement& y) {
  AlgebraElement acc(e.size(), 0);
  for (int i = u.degree(); i >= 0; --i) {
    acc = algebra_mul(g, f, acc, y);
    AlgebraElement c = e;
    for (auto& v : c) v = f.mul(v, u[i]);
    acc = algebra_add(f, acc, c);
  }
  return acc;
}

// Split e by the primary decomposition of y e; returns {e} if y e is primary.
std::vector<AlgebraElement> split(const grp::Group& g, const Field& f, const AlgebraElement& e,
                                  const AlgebraElement& y) {
  const AlgebraElement ye = algebra_mul(g, f, y, e);
  const auto fac = ffla::factor(element_min_poly(g, f, e, ye));
  if (fac.size() < 2) return {e};
  std::vector<Poly> parts;
  for (const auto& fa : fac) {
    Poly pw = Poly::constant(f, 1);
    for (int i = 0; i < fa.multiplicity; ++i) pw = pw * fa.f;
    parts.push_back(pw);
  }
  std::vector<AlgebraElement> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Poly rest = Poly::constant(f, 1);
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (j != i) rest = rest * parts[j];
    // u = s * rest with s * rest = 1 mod parts[i]
    const auto eg = ffla::ext_gcd(rest, parts[i]);
    out.push_back(eval_at(g, f, eg.s * rest, e, ye));
  }
  return out;
}

}  // namespace

std::vector<Block> blocks(const GroupAlgebra& a) {
  const grp::Group& g = *a.group();
  const Field& f = a.field();
  std::vector<AlgebraElement> sums;
  for (const auto& cls : g.conjugacy_classes()) {
    AlgebraElement c(g.order(), 0);
    for (int x : cls) c[x] = 1;
    sums.push_back(std::move(c));
  }
  std::vector<AlgebraElement> idem{algebra_one(g)};
  auto refine = [&](const AlgebraElement& y) {
    std::vector<AlgebraElement> next;
    for (const auto& e : idem)
      for (auto& part : split(g, f, e, y)) next.push_back(std::move(part));
    idem = std::move(next);
  };
  for (const auto& c : sums) refine(c);
  std::mt19937_64 rng(a.options().seed);
  std::uniform_int_distribution<int> pick(0, f.size() - 1);
  for (int t = 0; t < 4; ++t) {
    AlgebraElement y(g.order(), 0);
    for (const auto& c : sums) {
      const Elt k = static_cast<Elt>(pick(rng));
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = f.add(y[i], f.mul(k, c[i]));
    }
    refine(y);
  }

  std::vector<Block> out;
  for (auto& e : idem) {
    Block b;
    b.idempotent = e;
    for (std::size_t i = 0; i < a.num_simples(); ++i) {
      const Matrix r = rep::algebra_element(a.simple(i), e);
      if (r.is_identity()) {
        b.simples.push_back(i);
        b.dim += a.simple(i).dim() * a.pim(i).dim();
      } else if (!r.is_zero()) {
        throw ConsistencyError("block idempotent acts on a simple module by neither 0 nor 1");
      }
    }
    if (b.simples.empty()) throw ConsistencyError("block without simple modules");
    b.principal = b.simples[0] == 0;
    b.defect_zero = b.simples.size() == 1 && a.pim(b.simples[0]).dim() == a.simple(b.simples[0]).dim();
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const Block& x, const Block& y) { return x.simples[0] < y.simples[0]; });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].name = "B" + std::to_string(i);
  return out;
}

std::string audit_blocks(const GroupAlgebra& a, const std::vector<Block>& bs) {
  const grp::Group& g = *a.group();
  const Field& f = a.field();
  AlgebraElement total(g.order(), 0);
  std::size_t dims = 0;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const auto& e = bs[i].idempotent;
    if (algebra_mul(g, f, e, e) != e) return bs[i].name + " is not idempotent";
    for (int x : g.generators())
      if (algebra_conj(g, e, x) != e) return bs[i].name + " is not central";
    for (std::size_t j = 0; j < bs.size(); ++j)
      if (j != i && !algebra_is_zero(algebra_mul(g, f, e, bs[j].idempotent)))
        return bs[i].name + " and " + bs[j].name + " are not orthogonal";
    total = algebra_add(f, total, e);
    dims += bs[i].dim;
  }
  if (total != algebra_one(g)) return "block idempotents do not sum to 1";
  if (dims != g.order()) return "block dimensions do not sum to the group order";
  return "";
}

GModule project(const Block& b, const GModule& m) {
  if (m.dim() == 0) return m;
  const Matrix r = rep::algebra_element(m, b.idempotent);
  const Matrix img = rep::image_rows(r);
  if (img.rows() == 0) return GModule::zero(m.group(), m.field());
  if (img.rows() == m.dim()) return m;
  return rep::submodule(m, img).module;
}

std::size_t block_of(const std::vector<Block>& bs, const GModule& m) {
  if (!rep::is_indecomposable(m)) throw MismatchError("block_of needs an indecomposable module");
  for (std::size_t i = 0; i < bs.size(); ++i)
    if (rep::algebra_element(m, bs[i].idempotent).is_identity()) return i;
  throw MismatchError("module does not lie in a single block");
}

}  // namespace sttilt::blk
