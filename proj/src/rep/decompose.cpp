#include "sttilt/rep/decompose.hpp"

#include "sttilt/error.hpp"
#include "sttilt/ffla/linalg.hpp"
#include "sttilt/ffla/poly.hpp"
#include "sttilt/rep/hom.hpp"
#include "sttilt/rep/submodule.hpp"

namespace sttilt::rep {

namespace {

// Span of matrices, kept as flattened RREF rows.
class MatrixSpan {
 public:
  MatrixSpan(const Field& f, std::size_t n) : f_(&f), n_(n), rows_(f, 0, n * n) {}

  std::size_t dim() const { return rows_.rows(); }
  bool add(const Matrix& m) {
    auto v = m.data();
    if (ech_.rank() > 0) v = ffla::reduce_vector(ech_, std::move(v));
    bool nz = false;
    for (Elt x : v) nz |= x != 0;
    if (!nz) return false;
    rows_ = Matrix::vstack({rows_, Matrix(*f_, 1, n_ * n_, m.data())});
    ech_ = ffla::echelon(rows_);
    rows_ = ech_.rref;
    return true;
  }
  std::vector<Matrix> basis() const {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < rows_.rows(); ++i) out.push_back(unflatten(*f_, rows_.row(i), n_, n_));
    return out;
  }
  const ffla::Echelon& echelon() const { return ech_; }

 private:
  const Field* f_;
  std::size_t n_;
  Matrix rows_;
  ffla::Echelon ech_;
};

Matrix random_combination(const std::vector<Matrix>& basis, Rng& rng) {
  const Field& f = basis[0].field();
  std::uniform_int_distribution<int> pick(0, f.size() - 1);
  Matrix r(f, basis[0].rows(), basis[0].cols());
  for (const auto& b : basis) {
    const Elt c = static_cast<Elt>(pick(rng));
    if (c) f.axpy(r.data().data(), b.data().data(), c, r.data().size());
  }
  return r;
}

// Smallest two-sided ideal containing the seeds, if it is nilpotent.
std::optional<std::vector<Matrix>> nilpotent_ideal(const std::vector<Matrix>& e, const std::vector<Matrix>& seeds,
                                                   std::size_t n) {
  const Field& f = e[0].field();
  MatrixSpan span(f, n);
  std::vector<Matrix> queue;
  for (const auto& s : seeds)
    if (span.add(s)) queue.push_back(s);
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const auto& x : e) {
      const Matrix l = x * queue[h];
      if (span.add(l)) queue.push_back(l);
      const Matrix r = queue[h] * x;
      if (span.add(r)) queue.push_back(r);
    }
  std::vector<Matrix> ideal = span.basis();
  // powers of the ideal must reach zero
  std::vector<Matrix> power = ideal;
  std::size_t last = power.size();
  while (!power.empty()) {
    MatrixSpan next(f, n);
    for (const auto& a : power)
      for (const auto& b : ideal) next.add(a * b);
    power = next.basis();
    if (power.size() >= last) return std::nullopt;
    last = power.size();
  }
  return ideal;
}

// With N a nilpotent ideal of E, E is local iff E/N is a field; then N = J(E).
std::optional<std::size_t> residue_field_degree(const std::vector<Matrix>& e, const std::vector<Matrix>& ideal,
                                                std::size_t n, Rng& rng) {
  const Field& f = e[0].field();
  const std::size_t r = e.size() - ideal.size();
  if (r == 1) return 1;
  if (r == 0) return std::nullopt;
  MatrixSpan span(f, n);
  for (const auto& x : ideal) span.add(x);
  const std::size_t base = span.dim();
  std::vector<Matrix> comp;
  for (const auto& x : e)
    if (span.add(x)) comp.push_back(x);
  // coordinates modulo N in the basis comp: express against ideal + comp
  std::vector<Matrix> all = ideal;
  all.insert(all.end(), comp.begin(), comp.end());
  const Matrix basis_rows = flatten(all, n, n);
  const Matrix bt = basis_rows.transpose();
  auto coords = [&](const Matrix& x) {
    const auto sol = ffla::solve(bt, x.data());
    std::vector<Elt> c(r);
    for (std::size_t i = 0; i < r; ++i) c[i] = (*sol.particular)[base + i];
    return c;
  };
  for (int attempt = 0; attempt < 16 + static_cast<int>(comp.size()); ++attempt) {
    const Matrix u = attempt < static_cast<int>(comp.size()) ? comp[attempt] : random_combination(e, rng);
    Matrix lu(f, r, r);
    for (std::size_t j = 0; j < r; ++j) {
      const auto c = coords(u * comp[j]);
      for (std::size_t i = 0; i < r; ++i) lu(i, j) = c[i];
    }
    const auto mp = ffla::min_poly(lu);
    if (mp.degree() == static_cast<int>(r) && ffla::is_irreducible(mp)) return r;
  }
  return std::nullopt;
}

}  // namespace

EndSplit split_or_certify(const GModule& m, Rng& rng, int budget) {
  EndSplit out;
  const std::size_t n = m.dim();
  const Field& f = m.field();
  if (n == 0) throw MismatchError("zero module has no endomorphism ring to analyse");
  const std::vector<Matrix> e = hom_space(m, m);
  out.local.basis = e;
  if (e.size() == 1) return out;

  std::vector<Matrix> seeds;
  int next_attempt = static_cast<int>(e.size()) + 8;
  for (int t = 0; t < budget + static_cast<int>(e.size()); ++t) {
    const Matrix b = t < static_cast<int>(e.size()) ? e[t] : random_combination(e, rng);
    const auto fac = ffla::factor(ffla::min_poly(b));
    if (fac.size() > 1) {
      for (const auto& fa : fac) {
        ffla::Poly pw = ffla::Poly::constant(f, 1);
        for (int i = 0; i < fa.multiplicity; ++i) pw = pw * fa.f;
        out.components.push_back(ffla::kernel(ffla::eval(pw, b)));
      }
      return out;
    }
    const Matrix g = ffla::eval(fac[0].f, b);
    if (!g.is_zero()) seeds.push_back(g);
    if (t + 1 == next_attempt) {
      next_attempt += 32;
      if (auto ideal = nilpotent_ideal(e, seeds, n)) {
        if (auto deg = residue_field_degree(e, *ideal, n, rng)) {
          out.local.radical = std::move(*ideal);
          out.local.residue_degree = *deg;
          return out;
        }
      }
    }
  }
  throw InconclusiveError("could not split or certify the endomorphism ring");
}

namespace {

void decompose_into(const GModule& m, const Matrix& incl, Rng& rng, int budget, std::vector<Summand>& out) {
  const EndSplit s = split_or_certify(m, rng, budget);
  if (!s.split()) {
    out.push_back({m, incl, Matrix()});
    return;
  }
  for (const auto& rows : s.components) {
    Sub sub = submodule(m, rows);
    decompose_into(sub.module, incl * sub.inclusion, rng, budget, out);
  }
}

}  // namespace

std::vector<Summand> decompose(const GModule& m, std::uint64_t seed, int budget) {
  std::vector<Summand> out;
  if (m.dim() == 0) return out;
  Rng rng(seed);
  decompose_into(m, Matrix::identity(m.field(), m.dim()), rng, budget, out);
  std::vector<Matrix> cols;
  for (const auto& s : out) cols.push_back(s.inclusion);
  const auto inv = ffla::inverse(Matrix::hstack(cols));
  if (!inv) throw ConsistencyError("summands do not span the module");
  std::size_t r = 0;
  for (auto& s : out) {
    s.projection = inv->block(r, 0, s.module.dim(), m.dim());
    r += s.module.dim();
  }
  return out;
}

bool is_indecomposable(const GModule& m, std::uint64_t seed) {
  if (m.dim() == 0) return false;
  Rng rng(seed);
  return !split_or_certify(m, rng).split();
}

bool isomorphic_indecomposables(const GModule& x, const GModule& y) {
  if (x.dim() != y.dim()) return false;
  for (const auto& h : hom_space(x, y))
    if (ffla::invertible(h)) return true;
  return false;
}

}  // namespace sttilt::rep
