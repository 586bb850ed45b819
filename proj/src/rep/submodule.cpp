#include "sttilt/rep/submodule.hpp"

#include "sttilt/error.hpp"
#include "sttilt/ffla/linalg.hpp"

namespace sttilt::rep {

Matrix spin(const GModule& m, const Matrix& rows) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  std::vector<std::vector<Elt>> red;
  std::vector<std::size_t> piv;
  std::vector<std::vector<Elt>> queue;
  auto add = [&](std::vector<Elt> v) {
    for (std::size_t i = 0; i < red.size(); ++i)
      if (v[piv[i]]) f.axpy(v.data(), red[i].data(), f.neg(v[piv[i]]), n);
    std::size_t p = 0;
    while (p < n && v[p] == 0) ++p;
    if (p == n) return;
    f.scale(v.data(), f.inv(v[p]), n);
    red.push_back(v);
    piv.push_back(p);
    queue.push_back(std::move(v));
  };
  for (std::size_t i = 0; i < rows.rows(); ++i) add(rows.row_vector(i));
  for (std::size_t h = 0; h < queue.size() && red.size() < n; ++h)
    for (const auto& g : m.generators()) add(g.apply(queue[h]));
  Matrix out(f, red.size(), n);
  for (std::size_t i = 0; i < red.size(); ++i) std::copy(red[i].begin(), red[i].end(), out.row(i));
  return ffla::reduce_basis(out);
}

bool is_invariant(const GModule& m, const Matrix& rows) {
  if (rows.rows() == 0) return true;
  const auto e = ffla::echelon(rows);
  for (const auto& g : m.generators())
    for (std::size_t i = 0; i < e.rank(); ++i)
      if (!ffla::in_span(e, g.apply(e.rref.row_vector(i)))) return false;
  return true;
}

Sub submodule(const GModule& m, const Matrix& rows) {
  const Field& f = m.field();
  const auto e = ffla::echelon(rows);
  const std::size_t k = e.rank();
  std::vector<Matrix> gens;
  for (const auto& g : m.generators()) {
    Matrix a(f, k, k);
    for (std::size_t j = 0; j < k; ++j) {
      auto v = g.apply(e.rref.row_vector(j));
      // coordinates in an RREF basis are the entries at the pivots
      auto r = ffla::reduce_vector(e, v);
      for (Elt x : r)
        if (x) throw MismatchError("subspace is not a submodule");
      for (std::size_t i = 0; i < k; ++i) a(i, j) = v[e.pivots[i]];
    }
    gens.push_back(std::move(a));
  }
  return {GModule(m.group(), f, std::move(gens)), e.rref.transpose()};
}

Quo quotient(const GModule& m, const Matrix& rows) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  const auto e = ffla::echelon(rows);
  std::vector<char> is_piv(n, 0);
  for (auto p : e.pivots) is_piv[p] = 1;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_piv[j]) free.push_back(j);
  const std::size_t q = free.size();
  // projection: reduce against the subspace, read off the free coordinates
  Matrix proj(f, q, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Elt> unit(n, 0);
    unit[c] = 1;
    auto r = ffla::reduce_vector(e, unit);
    for (std::size_t i = 0; i < q; ++i) proj(i, c) = r[free[i]];
  }
  std::vector<Matrix> gens;
  for (const auto& g : m.generators()) {
    Matrix a(f, q, q);
    for (std::size_t j = 0; j < q; ++j) {
      const auto col = g.apply([&] {
        std::vector<Elt> u(n, 0);
        u[free[j]] = 1;
        return u;
      }());
      const auto pc = proj.apply(col);
      for (std::size_t i = 0; i < q; ++i) a(i, j) = pc[i];
    }
    gens.push_back(std::move(a));
  }
  return {GModule(m.group(), f, std::move(gens)), std::move(proj)};
}

Matrix image_rows(const Matrix& h) { return ffla::reduce_basis(h.transpose()); }

Matrix kernel_rows(const Matrix& h) { return ffla::kernel(h); }

Matrix map_rows(const Matrix& h, const Matrix& rows) {
  if (rows.rows() == 0) return Matrix(h.field(), 0, h.rows());
  return ffla::reduce_basis((h * rows.transpose()).transpose());
}

}  // namespace sttilt::rep
