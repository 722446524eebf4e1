#include "ws/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ws::gf {

namespace {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> ps;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Dense polynomials over GF(p), coefficient vectors with trailing zeros trimmed.
using Poly = std::vector<uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + (uint64_t)a[i] * b[j]) % p;
  // reduce mod the monic polynomial `mod`
  size_t k = mod.size() - 1;
  for (size_t i = c.size(); i-- > k;) {
    uint64_t t = c[i];
    if (t == 0) continue;
    c[i] = 0;
    for (size_t j = 0; j < k; ++j)
      c[i - k + j] = (c[i - k + j] + (p - mod[j] % p) * t) % p;
  }
  c.resize(k);
  trim(c);
  return c;
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& mod, uint64_t p) {
  Poly r = {1};
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, mod, p);
    base = poly_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    uint32_t lead_inv = 1;
    {  // inverse of b's leading coefficient mod p
      uint64_t x = b.back(), r = 1, e = p - 2;
      while (e) {
        if (e & 1) r = r * x % p;
        x = x * x % p;
        e >>= 1;
      }
      lead_inv = (uint32_t)r;
    }
    while (a.size() >= b.size() && !a.empty()) {
      uint64_t t = (uint64_t)a.back() * lead_inv % p;
      size_t off = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j)
        a[off + j] = (a[off + j] + (p - b[j]) * t) % p;
      trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

// x^(p^m) mod f
Poly frob_power(const Poly& f, unsigned m, uint64_t p) {
  Poly r = {0, 1};
  for (unsigned i = 0; i < m; ++i) r = poly_powmod(r, p, f, p);
  return r;
}

bool poly_irreducible(const Poly& f, uint64_t p) {
  unsigned k = (unsigned)f.size() - 1;
  // Rabin: x^(p^k) = x mod f, and gcd(x^(p^(k/t)) - x, f) = 1 per prime t | k.
  Poly xk = frob_power(f, k, p);
  Poly x = {0, 1};
  if (xk != x) return false;
  for (uint64_t t : prime_factors(k)) {
    Poly g = frob_power(f, k / (unsigned)t, p);
    // g - x
    Poly d = g;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (uint32_t)((d[1] + p - 1) % p);
    trim(d);
    Poly gc = poly_gcd(d, f, p);
    if (gc.size() != 1) return false;
  }
  return true;
}

}  // namespace

FieldCtx::FieldCtx(uint64_t p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::domain_error("gf: characteristic must be prime");
  if (k == 0) throw std::domain_error("gf: extension degree must be positive");
  q_ = 1;
  for (unsigned i = 0; i < k; ++i) {
    q_ *= p;
    if (q_ > kMaxFieldSize) throw std::domain_error("gf: field size exceeds 2^20");
  }

  if (k == 1) {
    modulus_ = {0, 1};
  } else {
    // smallest packed monic irreducible of degree k
    bool found = false;
    for (uint64_t low = 0; low < q_ && !found; ++low) {
      Poly f(k + 1, 0);
      uint64_t t = low;
      for (unsigned i = 0; i < k; ++i) {
        f[i] = (uint32_t)(t % p);
        t /= p;
      }
      f[k] = 1;
      if (poly_irreducible(f, p)) {
        modulus_ = f;
        found = true;
      }
    }
    if (!found) throw std::runtime_error("gf: no irreducible polynomial found");
  }

  // primitive element: smallest packed value whose order is q-1
  order_primes_ = prime_factors(q_ - 1);
  auto packed_to_poly = [&](uint64_t a) {
    Poly f;
    while (a) {
      f.push_back((uint32_t)(a % p));
      a /= p;
    }
    return f;
  };
  auto poly_to_packed = [&](const Poly& f) {
    uint64_t a = 0;
    for (size_t i = f.size(); i-- > 0;) a = a * p + f[i];
    return (uint32_t)a;
  };
  for (uint64_t cand = 2; cand < q_; ++cand) {
    Poly g = packed_to_poly(cand);
    bool primitive = true;
    for (uint64_t ell : order_primes_) {
      Poly t = poly_powmod(g, (q_ - 1) / ell, modulus_, p);
      if (t == Poly{1}) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;
    gen_ = (uint32_t)cand;
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    Poly cur = {1};
    for (uint64_t i = 0; i < q_ - 1; ++i) {
      uint32_t v = poly_to_packed(cur);
      exp_[i] = v;
      log_[v] = (uint32_t)i;
      cur = poly_mulmod(cur, g, modulus_, p);
    }
    break;
  }
  if (gen_ == 0 && q_ > 2) throw std::runtime_error("gf: no primitive element found");
  if (q_ == 2) {
    gen_ = 1;
    exp_ = {1};
    log_.assign(2, 0);
  }

  negtab_.resize(q_);
  for (uint64_t a = 0; a < q_; ++a) {
    uint64_t r = 0, m = 1, t = a;
    for (unsigned i = 0; i < k_; ++i) {
      uint64_t c = t % p;
      r += ((p - c) % p) * m;
      m *= p;
      t /= p;
    }
    negtab_[a] = (uint32_t)r;
  }
  if (q_ <= 512 && p != 2) {
    addtab_.resize(q_ * q_);
    for (uint64_t a = 0; a < q_; ++a)
      for (uint64_t b = 0; b < q_; ++b) {
        uint64_t r = 0, m = 1, ta = a, tb = b;
        for (unsigned i = 0; i < k_; ++i) {
          r += ((ta % p) + (tb % p)) % p * m;
          m *= p;
          ta /= p;
          tb /= p;
        }
        addtab_[a * q_ + b] = (uint32_t)r;
      }
  }
}

const FieldCtx& FieldCtx::get(uint64_t p, unsigned k) {
  static std::mutex mu;
  static std::map<std::pair<uint64_t, unsigned>, std::unique_ptr<FieldCtx>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, k}];
  if (!slot) slot.reset(new FieldCtx(p, k));
  return *slot;
}

uint32_t FieldCtx::add_slow(uint32_t a, uint32_t b) const {
  uint64_t r = 0, m = 1, ta = a, tb = b;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((ta % p_) + (tb % p_)) % p_ * m;
    m *= p_;
    ta /= p_;
    tb /= p_;
  }
  return (uint32_t)r;
}

uint32_t FieldCtx::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("gf: division by zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

uint32_t FieldCtx::pow(uint32_t a, long long e) const {
  if (a == 0) {
    if (e < 0) throw std::domain_error("gf: division by zero");
    return e == 0 ? 1 : 0;
  }
  long long m = (long long)(q_ - 1);
  long long r = ((long long)log_[a] * (e % m)) % m;
  if (r < 0) r += m;
  return exp_[r];
}

uint32_t FieldCtx::frobenius(uint32_t a, unsigned e) const {
  if (a == 0) return 0;
  uint64_t m = q_ - 1, r = log_[a] % m;
  for (unsigned i = 0; i < e; ++i) r = r * (p_ % m) % m;
  return exp_[r];
}

uint32_t FieldCtx::from_int(long long n) const {
  long long r = n % (long long)p_;
  if (r < 0) r += p_;
  return (uint32_t)r;
}

uint64_t FieldCtx::log(uint32_t a) const {
  if (a == 0) throw std::domain_error("gf: log of zero");
  return log_[a];
}

uint64_t FieldCtx::mult_order(uint32_t a) const {
  if (a == 0) throw std::domain_error("gf: order of zero");
  uint64_t n = q_ - 1;
  uint64_t e = log_[a];
  uint64_t ord = n / std::gcd(n, e == 0 ? n : e);
  return ord;
}

std::vector<uint32_t> FieldCtx::roots_of_unity(long long n) const {
  if (n <= 0) throw std::domain_error("gf: roots_of_unity needs n > 0");
  uint64_t d = std::gcd((uint64_t)n, q_ - 1);
  std::vector<uint32_t> out;
  out.reserve(d);
  uint64_t step = (q_ - 1) / d;
  for (uint64_t i = 0; i < d; ++i) out.push_back(exp_[i * step % (q_ - 1)]);
  std::sort(out.begin(), out.end());
  return out;
}

uint32_t FieldCtx::coeff(uint32_t a, unsigned i) const {
  uint64_t t = a;
  for (unsigned j = 0; j < i; ++j) t /= p_;
  return (uint32_t)(t % p_);
}

std::string FieldCtx::show(uint32_t a) const {
  if (a == 0) return "0";
  std::string s;
  for (unsigned i = 0; i < k_; ++i) {
    uint32_t c = coeff(a, i);
    if (!c) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || c != 1) s += std::to_string(c);
    if (i >= 1) {
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

namespace {
void check_same(const FieldElem& a, const FieldElem& b) {
  if (a.F != b.F) throw std::domain_error("gf: mixed field contexts");
}
}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  return FieldElem(*a.F, a.F->add(a.v, b.v));
}
FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  return FieldElem(*a.F, a.F->sub(a.v, b.v));
}
FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  return FieldElem(*a.F, a.F->mul(a.v, b.v));
}

uint32_t embed(const FieldCtx& from, uint32_t a, const FieldCtx& into) {
  if (&from == &into) return a;
  if (from.p() != into.p() || into.k() % from.k() != 0)
    throw std::domain_error("gf: no embedding between these fields");

  static std::mutex mu;
  static std::map<std::pair<const FieldCtx*, const FieldCtx*>, uint32_t> roots;
  uint32_t beta;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = roots.find({&from, &into});
    if (it != roots.end()) {
      beta = it->second;
    } else {
      // smallest root of `from`'s modulus inside `into`
      const auto& f = from.modulus();
      beta = 0;
      bool found = false;
      for (uint64_t cand = 0; cand < into.q(); ++cand) {
        uint32_t acc = 0;
        for (size_t i = f.size(); i-- > 0;) {
          acc = into.mul(acc, (uint32_t)cand);
          acc = into.add(acc, into.from_int(f[i]));
        }
        if (acc == 0) {
          beta = (uint32_t)cand;
          found = true;
          break;
        }
      }
      if (!found) throw std::runtime_error("gf: embedding root not found");
      roots[{&from, &into}] = beta;
    }
  }
  uint32_t out = 0, pw = 1;
  for (unsigned i = 0; i < from.k(); ++i) {
    out = into.add(out, into.mul(into.from_int(from.coeff(a, i)), pw));
    pw = into.mul(pw, beta);
  }
  return out;
}

FieldElem embed(const FieldElem& a, const FieldCtx& into) {
  return FieldElem(into, embed(*a.F, a.v, into));
}

}  // namespace ws::gf
