#include <doctest.h>

#include <random>
#include <sstream>

#include "sttilt/error.hpp"
#include "sttilt/ffla/kernels.hpp"
#include "sttilt/ffla/linalg.hpp"
#include "sttilt/ffla/poly.hpp"
#include "sttilt/ffla/text_io.hpp"

using namespace sttilt::ffla;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, f.size() - 1);
  Matrix m(f, r, c);
  for (auto& x : m.data()) x = static_cast<Elt>(d(rng));
  return m;
}

// Rank by brute force: size of the row span, counted by enumeration.
std::size_t brute_rank(const Matrix& a) {
  const Field& f = a.field();
  std::vector<std::vector<Elt>> span{std::vector<Elt>(a.cols(), 0)};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row_vector(i);
    std::vector<std::vector<Elt>> next;
    for (const auto& v : span)
      for (int c = 0; c < f.size(); ++c) {
        auto w = v;
        f.axpy(w.data(), r.data(), static_cast<Elt>(c), w.size());
        next.push_back(w);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    span = std::move(next);
  }
  std::size_t k = 0, n = 1;
  while (n < span.size()) {
    n *= f.size();
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("field axioms hold exhaustively") {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {2, 8}, {3, 5}, {7, 2}}) {
    const Field& f = Field::get(p, m);
    CHECK(f.size() > 1);
    const auto q = static_cast<std::uint64_t>(f.size());
    for (int a = 0; a < f.size(); ++a) {
      const Elt x = static_cast<Elt>(a);
      CHECK(f.pow(x, q) == x);
      CHECK(f.add(x, f.neg(x)) == 0);
      if (x) CHECK(f.mul(x, f.inv(x)) == 1);
      CHECK(f.pow(f.pth_root(x), static_cast<std::uint64_t>(p)) == x);
    }
  }
  // distributivity on a small field
  const Field& f = Field::get(3, 2);
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b)
      for (int c = 0; c < 9; ++c) {
        const Elt x = a, y = b, z = c;
        CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
      }
}

TEST_CASE("field moduli are irreducible and headers round-trip") {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 3}, {5, 2}, {2, 8}}) {
    const Field& f = Field::get(p, m);
    const Field& prime = Field::get(p, 1);
    std::vector<Elt> c;
    for (int x : f.modulus()) c.push_back(static_cast<Elt>(x));
    CHECK(is_irreducible(Poly(prime, c)));
    CHECK(&parse_field_header(f.header()) == &f);
  }
  CHECK(Field::get(2, 2).header() == "GF(2^2) mod 1,1,1");
  CHECK_THROWS(Field::get(4, 1));
  CHECK_THROWS(Field::get(2, std::vector<int>{1, 0, 1}));
}

TEST_CASE("splitting degree") {
  CHECK(splitting_degree(2, 6) == 2);   // A4, S4 exponents 6 and 12
  CHECK(splitting_degree(2, 12) == 2);
  CHECK(splitting_degree(3, 6) == 1);
  CHECK(splitting_degree(2, 4) == 1);
  CHECK(splitting_degree(2, 7) == 3);
}

TEST_CASE("rank examples") {
  const Field& f2 = Field::get(2, 1);
  CHECK(rank(Matrix::identity(f2, 3)) == 3);
  CHECK(rank(Matrix(f2, 4, 5)) == 0);
  CHECK(rank(Matrix(f2, 2, 2, {1, 1, 1, 1})) == 1);
}

TEST_CASE("solve examples") {
  const Field& f3 = Field::get(3, 1);
  auto s = solve(Matrix::identity(f3, 2), {1, 0});
  REQUIRE(s.particular);
  CHECK(*s.particular == std::vector<Elt>{1, 0});
  CHECK(s.kernel.rows() == 0);

  auto z = solve(Matrix(f3, 2, 3), {0, 0});
  CHECK(z.particular);
  CHECK(z.kernel.rows() == 3);

  const Field& f2 = Field::get(2, 1);
  auto t = solve(Matrix(f2, 1, 2, {1, 1}), {1});
  REQUIRE(t.particular);
  CHECK(*t.particular == std::vector<Elt>{1, 0});
  REQUIRE(t.kernel.rows() == 1);
  CHECK(t.kernel.row_vector(0) == std::vector<Elt>{1, 1});

  CHECK_FALSE(solve(Matrix(f2, 2, 1, {1, 1}), {1, 0}).particular);
  CHECK_THROWS_AS(solve(Matrix(f2, 2, 1), {1}), sttilt::MismatchError);
}

TEST_CASE("rank agrees with span enumeration") {
  std::mt19937 rng(7);
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    const Field& f = Field::get(p, m);
    for (int t = 0; t < 20; ++t) {
      auto a = random_matrix(f, 1 + rng() % 4, 1 + rng() % 4, rng);
      if (t % 3 == 0 && a.rows() > 1) a.set_block(1, 0, a.block(0, 0, 1, a.cols()));
      CHECK(rank(a) == brute_rank(a));
    }
  }
}

TEST_CASE("rank(AB) <= min(rank A, rank B); solve is exact") {
  std::mt19937 rng(11);
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {5, 1}, {3, 2}}) {
    const Field& f = Field::get(p, m);
    for (int t = 0; t < 30; ++t) {
      const std::size_t r = 1 + rng() % 7, k = 1 + rng() % 7, c = 1 + rng() % 7;
      auto a = random_matrix(f, r, k, rng);
      auto b = random_matrix(f, k, c, rng);
      if (t % 4 == 0) b = b * Matrix(f, c, c);  // force low rank sometimes
      CHECK(rank(a * b) <= std::min(rank(a), rank(b)));

      auto x = random_matrix(f, k, 1, rng);
      auto rhs = (a * x).col_vector(0);
      auto s = solve(a, rhs);
      REQUIRE(s.particular);
      CHECK(a.apply(*s.particular) == rhs);
      CHECK((a * s.kernel.transpose()).is_zero());
      CHECK(s.kernel.rows() + rank(a) == k);
    }
  }
}

TEST_CASE("inverse and subspaces") {
  std::mt19937 rng(3);
  const Field& f = Field::get(2, 2);
  for (int t = 0; t < 20; ++t) {
    auto a = random_matrix(f, 5, 5, rng);
    auto inv = inverse(a);
    CHECK(inv.has_value() == invertible(a));
    if (inv) CHECK((a * *inv).is_identity());
    auto u = random_matrix(f, 2, 5, rng), v = random_matrix(f, 3, 5, rng);
    auto s = subspace_sum(u, v), i = subspace_intersect(u, v);
    CHECK(s.rows() + i.rows() == rank(u) + rank(v));
    CHECK(subspace_contains(s, u));
    CHECK(subspace_contains(u, i));
    CHECK(subspace_contains(v, i));
    auto e = echelon(u);
    CHECK(rank(Matrix::vstack({e.rref, complement(e)})) == 5);
  }
}

TEST_CASE("parallel kernels match the serial reference") {
  std::mt19937 rng(5);
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {2, 9}}) {
    const Field& f = Field::get(p, m);
    for (std::size_t n : {1u, 7u, 64u, 150u}) {
      auto a = random_matrix(f, n, n + 3, rng), b = random_matrix(f, n + 3, n, rng);
      Matrix c1(f, 0, 0), c2(f, 0, 0);
      gemm_serial(a, b, c1);
      gemm_omp(a, b, c2);
      CHECK(c1 == c2);
      auto r1 = a, r2 = a;
      CHECK(rref_serial(r1) == rref_omp(r2));
      CHECK(r1 == r2);
    }
  }
}

TEST_CASE("min_poly examples") {
  const Field& f = Field::get(3, 1);
  CHECK(min_poly(Matrix::identity(f, 4)) == Poly::linear(f, 1));
  CHECK(min_poly(Matrix(f, 2, 2, {0, 1, 0, 0})) == Poly(f, {0, 0, 1}));
  CHECK(min_poly(Matrix(f, 2, 2, {1, 0, 0, 2})) == Poly::linear(f, 1) * Poly::linear(f, 2));
  CHECK_THROWS(min_poly(Matrix(f, 2, 3)));
}

TEST_CASE("min_poly annihilates and is minimal") {
  std::mt19937 rng(9);
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}}) {
    const Field& f = Field::get(p, m);
    for (int t = 0; t < 20; ++t) {
      const std::size_t n = 1 + rng() % 6;
      auto a = random_matrix(f, n, n, rng);
      if (t % 2) a = Matrix::diag_sum({a.block(0, 0, (n + 1) / 2, (n + 1) / 2), a.block(0, 0, (n + 1) / 2, (n + 1) / 2)});
      auto mp = min_poly(a);
      CHECK(eval(mp, a).is_zero());
      for (const auto& fa : factor(mp)) CHECK_FALSE(eval(mp / fa.f, a).is_zero());
    }
  }
}

TEST_CASE("factor examples") {
  const Field& f2 = Field::get(2, 1);
  auto a = factor(Poly(f2, {0, 1, 1}));
  REQUIRE(a.size() == 2);
  CHECK(a[0].f == Poly(f2, {0, 1}));
  CHECK(a[1].f == Poly(f2, {1, 1}));
  auto b = factor(Poly(f2, {1, 1, 1}));
  REQUIRE(b.size() == 1);
  CHECK(b[0].multiplicity == 1);
  const Field& f3 = Field::get(3, 1);
  auto c = factor(Poly(f3, {0, 0, 0, 0, 1}));
  REQUIRE(c.size() == 1);
  CHECK(c[0].f == Poly::x(f3));
  CHECK(c[0].multiplicity == 4);
  CHECK_THROWS(factor(Poly(f3)));
  // x^2 + x + 1 splits over GF(4)
  const Field& f4 = Field::get(2, 2);
  CHECK(factor(Poly(f4, {1, 1, 1})).size() == 2);
}

TEST_CASE("factor multiplies back; factors have no proper factor") {
  std::mt19937 rng(13);
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {5, 1}, {3, 2}}) {
    const Field& f = Field::get(p, m);
    std::uniform_int_distribution<int> d(0, f.size() - 1);
    for (int t = 0; t < 25; ++t) {
      Poly g = Poly::constant(f, 1);
      const int parts = 1 + rng() % 4;
      for (int i = 0; i < parts; ++i) {
        std::vector<Elt> c(1 + rng() % 4);
        for (auto& x : c) x = static_cast<Elt>(d(rng));
        c.back() = 1;
        Poly h(f, c);
        g = g * h;
        if (rng() % 3 == 0) g = g * h;
      }
      if (g.degree() < 1) continue;
      Poly back = Poly::constant(f, 1);
      for (const auto& fa : factor(g)) {
        for (int i = 0; i < fa.multiplicity; ++i) back = back * fa.f;
        // no root-based or small-degree split: check against all monic
        // polynomials of degree 1 (roots) as an independent oracle
        if (fa.f.degree() > 1)
          for (int r = 0; r < f.size(); ++r) CHECK(fa.f.eval(static_cast<Elt>(r)) != 0);
      }
      CHECK(back == g.monic());
    }
  }
}

TEST_CASE("text round trip") {
  const Field& f = Field::get(3, 2);
  Matrix a(f, 2, 3, {0, 1, 8, 7, 2, 3});
  std::stringstream ss;
  write_matrix(ss, a);
  CHECK(read_matrix(ss) == a);
  Poly g(f, {1, 0, 5});
  std::stringstream sp;
  write_poly(sp, g);
  CHECK(read_poly(sp) == g);
  std::stringstream bad("GF(3^2) mod 2,2,1\n1 2\n0 9\n");
  CHECK_THROWS_AS(read_matrix(bad), sttilt::ParseError);
}
