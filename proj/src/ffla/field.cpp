#include "sttilt/ffla/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "sttilt/error.hpp"

namespace sttilt::ffla {

namespace {

// Dense polynomials over GF(p) with small integer coefficients, low to high.
using IntPoly = std::vector<int>;

void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

IntPoly mulmod(const IntPoly& a, const IntPoly& b, const IntPoly& f, int p) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  // f is monic
  const int d = static_cast<int>(f.size()) - 1;
  for (int k = static_cast<int>(r.size()) - 1; k >= d; --k) {
    const int c = r[k];
    if (c == 0) continue;
    for (int i = 0; i <= d; ++i) r[k - d + i] = ((r[k - d + i] - c * f[i]) % p + p) % p;
  }
  trim(r);
  return r;
}

IntPoly powmod(IntPoly base, unsigned long long e, const IntPoly& f, int p) {
  IntPoly r{1};
  while (e) {
    if (e & 1) r = mulmod(r, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

IntPoly gcd(IntPoly a, IntPoly b, int p) {
  trim(a);
  trim(b);
  auto inv = [p](int v) {
    for (int x = 1; x < p; ++x)
      if ((v * x) % p == 1) return x;
    return 0;
  };
  while (!b.empty()) {
    // a mod b
    const int lb = inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      const int c = (a.back() * lb) % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
      trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Rabin's irreducibility test for a monic polynomial of degree m over GF(p).
bool irreducible(const IntPoly& f, int p) {
  const int m = static_cast<int>(f.size()) - 1;
  if (m < 1) return false;
  if (m == 1) return true;
  const IntPoly x{0, 1};
  if (powmod(x, static_cast<unsigned long long>(ipow(p, m)), f, p) != x) return false;
  for (long long r : prime_factors(m)) {
    IntPoly h = powmod(x, static_cast<unsigned long long>(ipow(p, m / static_cast<int>(r))), f, p);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = ((h[1] - 1) % p + p) % p;
    trim(h);
    if (gcd(h, f, p).size() != 1) return false;
  }
  return true;
}

bool primitive(const IntPoly& f, int p) {
  const int m = static_cast<int>(f.size()) - 1;
  const long long order = ipow(p, m) - 1;
  const IntPoly x{0, 1};
  if (m == 1) {
    // the residue of x is -f[0]
    const int g = (p - f[0]) % p;
    if (g == 0) return false;
    for (long long r : prime_factors(order)) {
      long long v = 1;
      for (long long i = 0; i < order / r; ++i) v = (v * g) % p;
      if (v == 1) return false;
    }
    return true;
  }
  for (long long r : prime_factors(order))
    if (powmod(x, static_cast<unsigned long long>(order / r), f, p) == IntPoly{1}) return false;
  return true;
}

IntPoly default_modulus(int p, int m) {
  const long long count = ipow(p, m);
  for (long long idx = 0; idx < count; ++idx) {
    IntPoly f(m + 1, 0);
    long long v = idx;
    for (int i = 0; i < m; ++i) {
      f[i] = static_cast<int>(v % p);
      v /= p;
    }
    f[m] = 1;
    if (irreducible(f, p) && primitive(f, p)) return f;
  }
  throw Error("no primitive polynomial found");
}

struct Registry {
  std::mutex mu;
  std::map<std::pair<int, std::vector<int>>, std::unique_ptr<Field>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int splitting_degree(int p, long long exponent) {
  long long e = exponent;
  while (e % p == 0) e /= p;
  if (e <= 1) return 1;
  long long v = p % e;
  int m = 1;
  while (v != 1 % e) {
    v = (v * p) % e;
    ++m;
  }
  return m;
}

const Field& Field::get(int p, int m) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (m < 1) throw std::invalid_argument("field degree must be >= 1");
  if (ipow(p, m) > 65536) throw std::invalid_argument("fields larger than 2^16 are not supported");
  return get(p, default_modulus(p, m));
}

const Field& Field::get(int p, const std::vector<int>& modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (modulus.size() < 2 || modulus.back() != 1)
    throw std::invalid_argument("modulus must be monic of degree >= 1");
  for (int c : modulus)
    if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range");
  if (!irreducible(modulus, p)) throw std::invalid_argument("modulus is not irreducible");
  const int m = static_cast<int>(modulus.size()) - 1;
  if (ipow(p, m) > 65536) throw std::invalid_argument("fields larger than 2^16 are not supported");
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto key = std::make_pair(p, modulus);
  auto it = reg.fields.find(key);
  if (it == reg.fields.end())
    it = reg.fields.emplace(key, std::unique_ptr<Field>(new Field(p, modulus))).first;
  return *it->second;
}

Field::Field(int p, std::vector<int> modulus)
    : p_(p), m_(static_cast<int>(modulus.size()) - 1), q_(static_cast<int>(ipow(p, m_))),
      modulus_(std::move(modulus)) {
  const std::size_t q = static_cast<std::size_t>(q_);
  neg_.resize(q);
  for (std::size_t a = 0; a < q; ++a) {
    std::size_t v = a, out = 0, place = 1;
    for (int i = 0; i < m_; ++i) {
      const std::size_t c = v % p_;
      v /= p_;
      out += ((p_ - c) % p_) * place;
      place *= p_;
    }
    neg_[a] = static_cast<Elt>(out);
  }
  if (p_ != 2 && q <= 256) {
    add_.resize(q * q);
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b) add_[a * q + b] = add_slow(static_cast<Elt>(a), static_cast<Elt>(b));
  }

  // Powers of a multiplicative generator.  The residue of x generates when the
  // modulus is primitive; otherwise search.
  auto to_poly = [&](std::size_t a) {
    IntPoly f(m_, 0);
    for (int i = 0; i < m_; ++i) {
      f[i] = static_cast<int>(a % p_);
      a /= p_;
    }
    trim(f);
    return f;
  };
  auto from_poly = [&](const IntPoly& f) {
    std::size_t out = 0, place = 1;
    for (int i = 0; i < m_; ++i) {
      out += static_cast<std::size_t>(i < static_cast<int>(f.size()) ? f[i] : 0) * place;
      place *= p_;
    }
    return static_cast<Elt>(out);
  };
  auto polymul = [&](std::size_t a, std::size_t b) {
    return from_poly(mulmod(to_poly(a), to_poly(b), modulus_, p_));
  };

  exp_.assign(2 * (q - 1), 0);
  log_.assign(q, 0);
  for (std::size_t g = 2; g <= q; ++g) {
    // candidate generator: residue of x first, then search
    std::size_t cand;
    if (g == 2)
      cand = (m_ == 1) ? static_cast<std::size_t>((p_ - modulus_[0]) % p_) : static_cast<std::size_t>(p_);
    else
      cand = g - 1;
    if (cand == 0 || cand >= q) continue;
    std::vector<char> seen(q, 0);
    Elt cur = 1;
    std::size_t k = 0;
    bool ok = true;
    for (; k < q - 1; ++k) {
      if (seen[cur]) {
        ok = false;
        break;
      }
      seen[cur] = 1;
      exp_[k] = cur;
      log_[cur] = static_cast<int>(k);
      cur = polymul(cur, cand);
    }
    if (ok && cur == 1) break;
  }
  for (std::size_t k = q - 1; k < exp_.size(); ++k) exp_[k] = exp_[k - (q - 1)];

  inv_.assign(q, 0);
  for (std::size_t a = 1; a < q; ++a) inv_[a] = exp_[(q - 1 - log_[a]) % (q - 1)];

  if (q <= 256) {
    mul_.assign(q * q, 0);
    for (std::size_t a = 1; a < q; ++a)
      for (std::size_t b = 1; b < q; ++b) mul_[a * q + b] = exp_[log_[a] + log_[b]];
  }
}

Elt Field::add_slow(Elt a, Elt b) const {
  if (p_ == 2) return static_cast<Elt>(a ^ b);
  std::size_t out = 0, place = 1;
  std::size_t x = a, y = b;
  for (int i = 0; i < m_; ++i) {
    out += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return static_cast<Elt>(out);
}

Elt Field::inv(Elt a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

Elt Field::pow(Elt a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t k = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
  return exp_[k];
}

Elt Field::from_int(long long v) const {
  v %= p_;
  if (v < 0) v += p_;
  return static_cast<Elt>(v);
}

Elt Field::pth_root(Elt a) const {
  // Frobenius has order m, so its inverse is a -> a^(p^(m-1)).
  return pow(a, static_cast<std::uint64_t>(ipow(p_, m_ - 1)));
}

std::string Field::header() const {
  std::string s = "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ") mod ";
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(modulus_[i]);
  }
  return s;
}

void Field::axpy(Elt* dst, const Elt* src, Elt c, std::size_t n) const {
  if (c == 0) return;
  if (c == 1) {
    if (p_ == 2) {
      for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
    } else {
      for (std::size_t i = 0; i < n; ++i) dst[i] = add(dst[i], src[i]);
    }
    return;
  }
  if (!mul_.empty()) {
    const Elt* row = &mul_[static_cast<std::size_t>(c) * q_];
    if (p_ == 2) {
      for (std::size_t i = 0; i < n; ++i) dst[i] ^= row[src[i]];
    } else {
      for (std::size_t i = 0; i < n; ++i) dst[i] = add(dst[i], row[src[i]]);
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) dst[i] = add(dst[i], mul(c, src[i]));
}

void Field::scale(Elt* row, Elt c, std::size_t n) const {
  if (c == 1) return;
  for (std::size_t i = 0; i < n; ++i) row[i] = mul(row[i], c);
}

}  // namespace sttilt::ffla
