#include "sttilt/ffla/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "sttilt/error.hpp"

namespace sttilt::ffla {

Poly::Poly(const Field& f, std::vector<Elt> coeffs) : field_(&f), c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Field& f, Elt c) { return Poly(f, {c}); }
Poly Poly::x(const Field& f) { return Poly(f, {0, 1}); }
Poly Poly::linear(const Field& f, Elt a) { return Poly(f, {f.neg(a), 1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool Poly::operator<(const Poly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(), o.c_.rend());
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Elt> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->add((*this)[i], o[i]);
  return Poly(*field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Elt> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->sub((*this)[i], o[i]);
  return Poly(*field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(*field_);
  std::vector<Elt> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) field_->axpy(r.data() + i, o.c_.data(), c_[i], o.c_.size());
  return Poly(*field_, std::move(r));
}

Poly Poly::scaled(Elt c) const {
  std::vector<Elt> r = c_;
  for (auto& x : r) x = field_->mul(x, c);
  return Poly(*field_, std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(lead()));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(*field_);
  std::vector<Elt> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<long long>(i)));
  return Poly(*field_, std::move(r));
}

Elt Poly::eval(Elt a) const {
  Elt s = 0;
  for (std::size_t i = c_.size(); i-- > 0;) s = field_->add(field_->mul(s, a), c_[i]);
  return s;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& f = b.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Elt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const Elt linv = f.inv(b.lead());
  std::vector<Elt> q(r.size() - bc.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Elt c = f.mul(r[k + bc.size() - 1], linv);
    q[k] = c;
    if (c) f.axpy(r.data() + k, bc.data(), f.neg(c), bc.size());
  }
  r.resize(bc.size() - 1);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  return ((a * b) / gcd(a, b)).monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, 1), s1(f);
  Poly t0(f), t1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Elt li = f.inv(r0.lead());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

Poly powmod(const Poly& a, std::uint64_t e, const Poly& m) {
  const Field& f = m.field();
  Poly result = Poly::constant(f, 1) % m;
  Poly base = a % m;
  while (e) {
    if (e & 1) result = (result * base) % m;
    e >>= 1;
    if (e) base = (base * base) % m;
  }
  return result;
}

namespace {

// Replace each coefficient c of f(x) = g(x^p) by its p-th root, giving g'
// with g'(x)^p = f(x).
Poly pth_root_poly(const Poly& f) {
  const Field& F = f.field();
  const int p = F.p();
  std::vector<Elt> r(f.degree() / p + 1, 0);
  for (int i = 0; i <= f.degree(); i += p) r[i / p] = F.pth_root(f[i]);
  return Poly(F, std::move(r));
}

void squarefree(const Poly& f, int mult, std::vector<Factor>& out) {
  const Field& F = f.field();
  if (f.degree() < 1) return;
  const int p = F.p();
  Poly d = f.derivative();
  if (d.is_zero()) {
    squarefree(pth_root_poly(f), mult * p, out);
    return;
  }
  Poly c = gcd(f, d);
  Poly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i * mult});
    w = y;
    c = c / y;
    ++i;
  }
  c = c.monic();
  if (!c.is_one()) squarefree(pth_root_poly(c), mult * p, out);
}

// Iterated q-th powering.
Poly frob(const Poly& a, const Poly& m, int times) {
  const Field& F = m.field();
  Poly r = a;
  for (int i = 0; i < times; ++i) r = powmod(r, static_cast<std::uint64_t>(F.size()), m);
  return r;
}

void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  const Field& F = f.field();
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const int n = f.degree();
  std::uniform_int_distribution<int> coin(0, F.size() - 1);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Elt> c(n);
    for (auto& x : c) x = static_cast<Elt>(coin(rng));
    Poly a(F, c);
    if (a.degree() < 1) continue;
    Poly g = gcd(a, f);
    if (g.degree() > 0 && g.degree() < n) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
    Poly b;
    if (F.p() == 2) {
      // absolute trace to GF(2): sum of a^(2^i), i < m d
      Poly t = a, s = a;
      for (int i = 1; i < F.m() * d; ++i) {
        t = (t * t) % f;
        s = s + t;
      }
      b = s;
    } else {
      // a^((q^d - 1)/2) = prod_i (a^((q-1)/2))^(q^i)
      Poly h = powmod(a, static_cast<std::uint64_t>((F.size() - 1) / 2), f);
      Poly acc = h;
      Poly cur = h;
      for (int i = 1; i < d; ++i) {
        cur = frob(cur, f, 1);
        acc = (acc * cur) % f;
      }
      b = acc - Poly::constant(F, 1);
    }
    g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < n) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
  throw InconclusiveError("equal-degree factorization did not split");
}

}  // namespace

std::vector<Factor> factor(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("factor of the zero polynomial");
  const Field& F = f.field();
  std::vector<Factor> sqf;
  squarefree(f.monic(), 1, sqf);
  std::mt19937_64 rng(0x5eed);
  std::vector<Factor> out;
  for (const auto& [g0, mult] : sqf) {
    Poly g = g0;
    Poly h = Poly::x(F) % g;
    const Poly x = Poly::x(F);
    for (int d = 1; g.degree() >= 2 * d; ++d) {
      h = frob(h, g, 1);
      Poly dd = gcd(h - x, g);
      if (dd.degree() > 0) {
        std::vector<Poly> parts;
        equal_degree(dd, d, rng, parts);
        for (auto& p : parts) out.push_back({p, mult});
        g = g / dd;
        h = h % g;
      }
    }
    if (g.degree() > 0) out.push_back({g.monic(), mult});
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.f < b.f; });
  // squarefree parts are coprime, but merge defensively
  std::vector<Factor> merged;
  for (auto& fa : out) {
    if (!merged.empty() && merged.back().f == fa.f)
      merged.back().multiplicity += fa.multiplicity;
    else
      merged.push_back(fa);
  }
  return merged;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  auto fs = factor(f);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

Matrix eval(const Poly& f, const Matrix& a) {
  if (!a.square()) throw MismatchError("polynomial evaluation needs a square matrix");
  const Field& F = a.field();
  const std::size_t n = a.rows();
  Matrix r(F, n, n);
  for (int i = f.degree(); i >= 0; --i) {
    r = r * a;
    const Elt c = f[static_cast<std::size_t>(i)];
    if (c)
      for (std::size_t j = 0; j < n; ++j) r(j, j) = F.add(r(j, j), c);
  }
  return r;
}

Poly min_poly(const Matrix& a) {
  if (!a.square()) throw MismatchError("min_poly needs a square matrix");
  const Field& F = a.field();
  const std::size_t n = a.rows();
  Poly result = Poly::constant(F, 1);
  // span of all Krylov vectors seen so far, kept reduced
  std::vector<std::vector<Elt>> span_rows;
  std::vector<std::size_t> span_piv;
  auto reduce_span = [&](std::vector<Elt>& v) {
    for (std::size_t i = 0; i < span_rows.size(); ++i) {
      const Elt x = v[span_piv[i]];
      if (x) F.axpy(v.data(), span_rows[i].data(), F.neg(x), n);
    }
  };
  auto add_span = [&](std::vector<Elt> v) {
    reduce_span(v);
    std::size_t p = 0;
    while (p < n && v[p] == 0) ++p;
    if (p == n) return;
    F.scale(v.data(), F.inv(v[p]), n);
    for (auto& r : span_rows)
      if (r[p]) F.axpy(r.data(), v.data(), F.neg(r[p]), n);
    span_rows.push_back(std::move(v));
    span_piv.push_back(p);
  };

  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Elt> e(n, 0);
    e[j] = 1;
    {
      auto t = e;
      reduce_span(t);
      if (std::all_of(t.begin(), t.end(), [](Elt x) { return x == 0; })) continue;
    }
    // local minimal polynomial of e_j with tracked combinations
    std::vector<std::vector<Elt>> rows, combos;
    std::vector<std::size_t> piv;
    std::vector<Elt> v = e;
    for (std::size_t k = 0;; ++k) {
      std::vector<Elt> w = v;
      std::vector<Elt> comb(k + 1, 0);
      comb[k] = 1;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const Elt x = w[piv[i]];
        if (!x) continue;
        F.axpy(w.data(), rows[i].data(), F.neg(x), n);
        F.axpy(comb.data(), combos[i].data(), F.neg(x), combos[i].size());
      }
      std::size_t p = 0;
      while (p < n && w[p] == 0) ++p;
      if (p == n) {
        result = lcm(result, Poly(F, comb));
        break;
      }
      const Elt inv = F.inv(w[p]);
      F.scale(w.data(), inv, n);
      F.scale(comb.data(), inv, comb.size());
      rows.push_back(std::move(w));
      combos.push_back(std::move(comb));
      piv.push_back(p);
      add_span(v);
      v = a.apply(v);
    }
  }
  return result.monic();
}

}  // namespace sttilt::ffla
