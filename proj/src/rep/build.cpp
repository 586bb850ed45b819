#include "sttilt/rep/build.hpp"

#include "sttilt/error.hpp"
#include "sttilt/ffla/linalg.hpp"
#include "sttilt/rep/hom.hpp"
#include "sttilt/rep/submodule.hpp"

namespace sttilt::rep {

namespace {

Matrix random_row(const Field& f, std::size_t n, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, f.size() - 1);
  Matrix v(f, 1, n);
  for (std::size_t i = 0; i < n; ++i) v(0, i) = static_cast<Elt>(pick(rng));
  return v;
}

}  // namespace

GModule stack(const GroupAlgebra& a, const std::vector<std::size_t>& layers) {
  if (layers.empty()) return GModule::zero(a.group(), a.field());
  for (auto i : layers)
    if (i >= a.num_simples()) throw MismatchError("no simple module with index " + std::to_string(i));
  if (layers.size() == 1) return a.simple(layers[0]);
  const GModule below = stack(a, std::vector<std::size_t>(layers.begin() + 1, layers.end()));
  const GModule& p = a.pim(layers[0]);
  const Sub rad = submodule(p, a.radical(p));
  const auto homs = hom_space(rad.module, below);
  std::optional<Matrix> onto;
  for (const auto& h : homs)
    if (ffla::rank(h) == below.dim()) {
      onto = h;
      break;
    }
  Rng rng(a.options().seed);
  std::uniform_int_distribution<int> pick(0, a.field().size() - 1);
  for (int t = 0; !onto && !homs.empty() && t < a.options().budget; ++t) {
    Matrix h(a.field(), below.dim(), rad.module.dim());
    for (const auto& b : homs) {
      const Elt c = static_cast<Elt>(pick(rng));
      if (c) a.field().axpy(h.data().data(), b.data().data(), c, h.data().size());
    }
    if (ffla::rank(h) == below.dim()) onto = h;
  }
  if (!onto) {
    std::string name;
    for (auto i : layers) name += (name.empty() ? "" : "/") + a.label(i);
    throw MismatchError("no uniserial module " + name);
  }
  const Matrix k = kernel_rows(*onto);
  const Matrix in_p = k.rows() ? k * rad.inclusion.transpose() : Matrix(a.field(), 0, p.dim());
  return quotient(p, in_p).module;
}

GModule random_cyclic_submodule(const GModule& m, Rng& rng) {
  if (m.dim() == 0) return m;
  return submodule(m, spin(m, random_row(m.field(), m.dim(), rng))).module;
}

GModule random_cyclic_quotient(const GModule& m, Rng& rng) {
  if (m.dim() == 0) return m;
  return quotient(m, spin(m, random_row(m.field(), m.dim(), rng))).module;
}

}  // namespace sttilt::rep
