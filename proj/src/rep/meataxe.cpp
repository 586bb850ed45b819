#include "sttilt/rep/meataxe.hpp"

#include "sttilt/error.hpp"
#include "sttilt/ffla/linalg.hpp"
#include "sttilt/ffla/poly.hpp"
#include "sttilt/rep/submodule.hpp"

namespace sttilt::rep {

namespace {

Matrix spin_transposed(const GModule& m, const Matrix& rows) {
  std::vector<Matrix> gt;
  for (const auto& g : m.generators()) gt.push_back(g.transpose());
  return spin(GModule(m.group(), m.field(), std::move(gt)), rows);
}

}  // namespace

Matrix random_algebra_element(const GModule& m, Rng& rng) {
  const Field& f = m.field();
  std::uniform_int_distribution<int> pick(0, f.size() - 1);
  Matrix a(f, m.dim(), m.dim());
  for (std::size_t x = 0; x < m.group()->order(); ++x) {
    const Elt c = static_cast<Elt>(pick(rng));
    if (c) f.axpy(a.data().data(), m.act(static_cast<int>(x)).data().data(), c, a.data().size());
  }
  return a;
}

std::optional<Matrix> find_submodule(const GModule& m, Rng& rng, int budget) {
  const std::size_t n = m.dim();
  if (n <= 1) return std::nullopt;
  for (int draw = 0; draw < budget; ++draw) {
    const Matrix a = random_algebra_element(m, rng);
    for (const auto& fac : ffla::factor(ffla::min_poly(a))) {
      const Matrix pa = ffla::eval(fac.f, a);
      const Matrix nul = ffla::kernel(pa);
      Matrix s = spin(m, nul.select_rows({0}));
      if (s.rows() < n) return s;
      if (static_cast<int>(nul.rows()) != fac.f.degree()) continue;
      const Matrix nul_t = ffla::kernel(pa.transpose());
      const Matrix w = spin_transposed(m, nul_t.select_rows({0}));
      if (w.rows() < n) return ffla::reduce_basis(ffla::kernel(w));
      return std::nullopt;
    }
  }
  throw InconclusiveError("irreducibility test ran out of random elements");
}

bool is_irreducible(const GModule& m, Rng& rng, int budget) {
  return m.dim() > 0 && !find_submodule(m, rng, budget);
}

std::vector<GModule> composition_factors(const GModule& m, Rng& rng, int budget) {
  if (m.dim() == 0) return {};
  auto sub = find_submodule(m, rng, budget);
  if (!sub) return {m};
  auto lower = composition_factors(submodule(m, *sub).module, rng, budget);
  auto upper = composition_factors(quotient(m, *sub).module, rng, budget);
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

}  // namespace sttilt::rep
