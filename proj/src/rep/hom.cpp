#include "sttilt/rep/hom.hpp"

#include <algorithm>

#include "sttilt/error.hpp"
#include "sttilt/ffla/kernels.hpp"
#include "sttilt/ffla/linalg.hpp"

namespace sttilt::rep {

namespace {

// Intertwiners M -> N are determined by the images y_s of the spin seeds of
// M.  With w_j = A_g w_i along the spin tree, H w_j = Phi_j y_seed(j) where
// Phi_j = B_g Phi_i.  The remaining constraints H A_g w_j = B_g H w_j, written
// in spin coordinates, form a linear system in the y_s.
struct HomSystem {
  std::size_t unknowns = 0;
  Matrix constraints;       // rows: equations in the stacked y
  std::vector<Matrix> phi;  // n x n, per spin vector
};

HomSystem build_system(const GModule& m, const GModule& n) {
  m.require_same_algebra(n);
  const Field& f = m.field();
  const SpinBasis& sb = m.spin_basis();
  const std::size_t dm = m.dim(), dn = n.dim(), ng = m.generators().size();
  const std::size_t ns = sb.num_seeds;
  HomSystem sys;
  sys.unknowns = dn * ns;
  sys.phi.resize(dm);
  for (std::size_t j = 0; j < dm; ++j)
    sys.phi[j] = sb.parent[j] < 0 ? Matrix::identity(f, dn) : n.gen(sb.via[j]) * sys.phi[sb.parent[j]];

  std::vector<std::vector<char>> tree(dm, std::vector<char>(ng, 0));
  for (std::size_t j = 0; j < dm; ++j)
    if (sb.parent[j] >= 0) tree[sb.parent[j]][sb.via[j]] = 1;

  std::size_t neq = 0;
  for (std::size_t j = 0; j < dm; ++j)
    for (std::size_t g = 0; g < ng; ++g)
      if (!tree[j][g]) ++neq;
  sys.constraints = Matrix(f, neq * dn, sys.unknowns);
  if (sys.unknowns == 0) return sys;

  std::size_t row = 0;
  for (std::size_t j = 0; j < dm; ++j)
    for (std::size_t g = 0; g < ng; ++g) {
      if (tree[j][g]) continue;
      // sum_l C[l][j] Phi_l - B_g Phi_j, block column seed(l)
      const Matrix& c = sb.coords[g];
      for (std::size_t l = 0; l < dm; ++l) {
        const Elt x = c(l, j);
        if (!x) continue;
        const std::size_t col0 = static_cast<std::size_t>(sb.seed[l]) * dn;
        for (std::size_t r = 0; r < dn; ++r)
          f.axpy(sys.constraints.row(row + r) + col0, sys.phi[l].row(r), x, dn);
      }
      const Matrix bphi = n.gen(g) * sys.phi[j];
      const std::size_t col0 = static_cast<std::size_t>(sb.seed[j]) * dn;
      for (std::size_t r = 0; r < dn; ++r)
        f.axpy(sys.constraints.row(row + r) + col0, bphi.row(r), f.neg(1), dn);
      row += dn;
    }
  return sys;
}

}  // namespace

std::vector<Matrix> hom_space(const GModule& m, const GModule& n) {
  const HomSystem sys = build_system(m, n);
  const Field& f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim();
  std::vector<Matrix> out;
  if (sys.unknowns == 0) return out;
  const SpinBasis& sb = m.spin_basis();
  const Matrix k = ffla::kernel(sys.constraints);
  out.reserve(k.rows());
  for (std::size_t b = 0; b < k.rows(); ++b) {
    // columns H w_j, then H = (H T) T^-1
    Matrix ht(f, dn, dm);
    for (std::size_t j = 0; j < dm; ++j) {
      const Elt* y = k.row(b) + static_cast<std::size_t>(sb.seed[j]) * dn;
      for (std::size_t r = 0; r < dn; ++r) {
        Elt s = 0;
        const Elt* pr = sys.phi[j].row(r);
        for (std::size_t c = 0; c < dn; ++c) s = f.add(s, f.mul(pr[c], y[c]));
        ht(r, j) = s;
      }
    }
    out.push_back(ht * sb.t_inv);
  }
  return out;
}

std::size_t hom_dim(const GModule& m, const GModule& n) {
  const HomSystem sys = build_system(m, n);
  if (sys.unknowns == 0) return 0;
  return sys.unknowns - ffla::rank(sys.constraints);
}

bool is_hom(const Matrix& h, const GModule& m, const GModule& n) {
  m.require_same_algebra(n);
  if (h.rows() != n.dim() || h.cols() != m.dim()) return false;
  if (m.dim() == 0 || n.dim() == 0) return true;
  for (std::size_t g = 0; g < m.generators().size(); ++g)
    if (n.gen(g) * h != h * m.gen(g)) return false;
  return true;
}

Matrix flatten(const std::vector<Matrix>& ms, std::size_t rows, std::size_t cols) {
  if (ms.empty()) throw MismatchError("flatten of nothing");
  Matrix out(ms[0].field(), ms.size(), rows * cols);
  for (std::size_t i = 0; i < ms.size(); ++i) std::copy(ms[i].data().begin(), ms[i].data().end(), out.row(i));
  return out;
}

Matrix unflatten(const Field& f, const Elt* row, std::size_t rows, std::size_t cols) {
  return Matrix(f, rows, cols, std::vector<Elt>(row, row + rows * cols));
}

}  // namespace sttilt::rep
