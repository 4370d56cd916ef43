#include "redscope/ff_poly.hpp"

#include <algorithm>
#include <random>

#include "redscope/errors.hpp"

namespace redscope {

struct PolyOps {
  static PolyModP make(u64 p, std::vector<u64> c) {
    PolyModP r(PolyModP::Unchecked{}, p, std::move(c));
    r.trim();
    return r;
  }
};

namespace {

void require_same_modulus(const PolyModP& a, const PolyModP& b) {
  if (a.modulus() != b.modulus()) {
    fail(ErrorKind::Domain, "polynomials over different prime fields");
  }
}

PolyModP one(u64 p) { return PolyOps::make(p, {1}); }

PolyModP mul_mod_poly(const PolyModP& a, const PolyModP& b, const PolyModP& m) {
  return (a * b) % m;
}

u64 seed_from(const PolyModP& f) {
  // FNV-1a over the modulus and coefficients
  u64 h = 0xcbf29ce484222325ULL;
  auto mix = [&h](u64 v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(f.modulus());
  for (u64 c : f.coeffs()) mix(c);
  return h;
}

struct PartialFactor {
  PolyModP poly;
  int multiplicity;
};

PolyModP pth_root(const PolyModP& f) {
  const u64 p = f.modulus();
  std::vector<u64> out;
  const auto& c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); i += p) out.push_back(c[i]);
  return PolyOps::make(p, std::move(out));
}

// Musser/Yun square-free decomposition for characteristic p; f monic.
void squarefree_parts(const PolyModP& f, int scale, std::vector<PartialFactor>& out) {
  if (f.degree() <= 0) return;
  const u64 p = f.modulus();
  PolyModP d = f.derivative();
  if (d.is_zero()) {
    squarefree_parts(pth_root(f), scale * static_cast<int>(p), out);
    return;
  }
  PolyModP c = gcd(f, d);
  PolyModP w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    PolyModP y = gcd(w, c);
    PolyModP part = w / y;
    if (part.degree() > 0) out.push_back({part.monic(), i * scale});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree_parts(pth_root(c).monic(), scale * static_cast<int>(p), out);
}

// Distinct-degree factorization of a monic square-free polynomial:
// (product of all irreducible factors of degree d, d).
std::vector<std::pair<PolyModP, int>> distinct_degree(const PolyModP& f) {
  const u64 p = f.modulus();
  std::vector<std::pair<PolyModP, int>> out;
  const PolyModP x = PolyModP::monomial(p, 1);
  PolyModP rest = f;
  PolyModP h = x % rest;
  int d = 1;
  while (2 * d <= rest.degree()) {
    h = pow_mod(h, p, rest);
    PolyModP g = gcd(rest, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = rest / g;
      h = h % rest;
    }
    ++d;
  }
  if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
  return out;
}

// Cantor-Zassenhaus splitting of a monic product of degree-d irreducibles.
void equal_degree(const PolyModP& g, int d, std::mt19937_64& rng, std::vector<PolyModP>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const u64 p = g.modulus();
  const int n = g.degree();
  for (;;) {
    std::vector<u64> ac(static_cast<std::size_t>(n));
    for (auto& v : ac) v = rng() % p;
    PolyModP a = PolyOps::make(p, std::move(ac));
    if (a.degree() < 1) continue;

    PolyModP candidate = PolyOps::make(p, {});
    if (p == 2) {
      // absolute trace down to F_2, one bit per irreducible component
      PolyModP s = a;
      PolyModP t = a;
      for (int j = 1; j < d; ++j) {
        s = mul_mod_poly(s, s, g);
        t = t + s;
      }
      candidate = gcd(g, t);
    } else {
      // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
      PolyModP s = a;
      PolyModP norm = a;
      for (int j = 1; j < d; ++j) {
        s = pow_mod(s, p, g);
        norm = mul_mod_poly(norm, s, g);
      }
      PolyModP b = pow_mod(norm, (p - 1) / 2, g);
      candidate = gcd(g, b - one(p));
    }
    if (candidate.degree() > 0 && candidate.degree() < n) {
      equal_degree(candidate, d, rng, out);
      equal_degree(g / candidate, d, rng, out);
      return;
    }
  }
}

void require_factorable(const PolyModP& f) {
  if (f.is_zero()) fail(ErrorKind::Domain, "cannot factor the zero polynomial");
  if (f.degree() < 1) fail(ErrorKind::Domain, "cannot factor a constant polynomial");
}

}  // namespace

PolyModP::PolyModP(Unchecked, u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {}

PolyModP::PolyModP(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p >= kMaxModulus) fail(ErrorKind::Modulus, "modulus " + std::to_string(p) + " is not below 2^62");
  if (!is_prime(p)) fail(ErrorKind::Modulus, "modulus " + std::to_string(p) + " is not prime");
  for (auto& v : c_) v %= p_;
  trim();
}

PolyModP PolyModP::from_integers(u64 p, std::span<const i64> coeffs) {
  std::vector<u64> c;
  c.reserve(coeffs.size());
  if (p == 0) fail(ErrorKind::Modulus, "modulus 0 is not prime");
  for (i64 v : coeffs) c.push_back(reduce_signed(v, p));
  return PolyModP(p, std::move(c));
}

PolyModP PolyModP::monomial(u64 p, std::size_t degree) {
  std::vector<u64> c(degree + 1, 0);
  c.back() = 1;
  return PolyModP(p, std::move(c));
}

void PolyModP::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyModP PolyModP::monic() const {
  if (is_zero() || leading() == 1) return *this;
  u64 inv = inv_mod(leading(), p_);
  std::vector<u64> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = mul_mod(c_[i], inv, p_);
  return PolyOps::make(p_, std::move(out));
}

PolyModP PolyModP::derivative() const {
  if (c_.size() <= 1) return PolyOps::make(p_, {});
  std::vector<u64> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = mul_mod(c_[i], i % p_, p_);
  return PolyOps::make(p_, std::move(out));
}

PolyModP operator+(const PolyModP& a, const PolyModP& b) {
  require_same_modulus(a, b);
  const u64 p = a.modulus();
  std::vector<u64> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = add_mod(out[i], b.c_[i], p);
  return PolyOps::make(p, std::move(out));
}

PolyModP operator-(const PolyModP& a, const PolyModP& b) {
  require_same_modulus(a, b);
  const u64 p = a.modulus();
  std::vector<u64> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = sub_mod(out[i], b.c_[i], p);
  return PolyOps::make(p, std::move(out));
}

PolyModP operator*(const PolyModP& a, const PolyModP& b) {
  require_same_modulus(a, b);
  const u64 p = a.modulus();
  if (a.is_zero() || b.is_zero()) return PolyOps::make(p, {});
  std::vector<u64> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      out[i + j] = add_mod(out[i + j], mul_mod(a.c_[i], b.c_[j], p), p);
    }
  }
  return PolyOps::make(p, std::move(out));
}

std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b) {
  require_same_modulus(a, b);
  if (b.is_zero()) fail(ErrorKind::Domain, "polynomial division by zero");
  const u64 p = a.modulus();
  if (a.degree() < b.degree()) return {PolyOps::make(p, {}), a};
  std::vector<u64> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<u64> quo(rem.size() - db, 0);
  const u64 inv = inv_mod(b.leading(), p);
  for (std::size_t k = quo.size(); k-- > 0;) {
    u64 q = mul_mod(rem[k + db], inv, p);
    quo[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[k + j] = sub_mod(rem[k + j], mul_mod(q, bc[j], p), p);
    }
  }
  rem.resize(db);
  return {PolyOps::make(p, std::move(quo)), PolyOps::make(p, std::move(rem))};
}

PolyModP operator/(const PolyModP& a, const PolyModP& b) { return divmod(a, b).first; }
PolyModP operator%(const PolyModP& a, const PolyModP& b) { return divmod(a, b).second; }

PolyModP gcd(const PolyModP& a, const PolyModP& b) {
  require_same_modulus(a, b);
  PolyModP x = a;
  PolyModP y = b;
  while (!y.is_zero()) {
    PolyModP r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

PolyModP pow_mod(const PolyModP& base, u64 exp, const PolyModP& mod) {
  require_same_modulus(base, mod);
  PolyModP result = one(mod.modulus()) % mod;
  PolyModP b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = mul_mod_poly(result, b, mod);
    exp >>= 1;
    if (exp > 0) b = mul_mod_poly(b, b, mod);
  }
  return result;
}

std::string PolyModP::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0 || c_[i] != 1) out += std::to_string(c_[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::vector<Factor> factor_mod_p(const PolyModP& f) {
  require_factorable(f);
  std::mt19937_64 rng(seed_from(f));
  std::vector<PartialFactor> parts;
  squarefree_parts(f.monic(), 1, parts);

  std::vector<Factor> out;
  for (const auto& part : parts) {
    for (const auto& [block, d] : distinct_degree(part.poly)) {
      std::vector<PolyModP> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& g : irreducibles) out.push_back({std::move(g), part.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    return a.poly.coeffs() < b.poly.coeffs();
  });
  return out;
}

bool is_irreducible(const PolyModP& f) {
  require_factorable(f);
  if (!f.is_monic()) fail(ErrorKind::Domain, "irreducibility test expects a monic polynomial");
  if (f.degree() == 1) return true;
  DegreePattern pattern = factor_degree_pattern(f);
  return pattern.squarefree && pattern.degrees.size() == 1;
}

DegreePattern factor_degree_pattern(const PolyModP& f) {
  require_factorable(f);
  PolyModP m = f.monic();
  DegreePattern out;
  PolyModP d = m.derivative();
  if (d.is_zero() || gcd(m, d).degree() > 0) {
    out.squarefree = false;
    return out;
  }
  for (const auto& [block, deg] : distinct_degree(m)) {
    for (int k = 0; k < block.degree() / deg; ++k) out.degrees.push_back(deg);
  }
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

}  // namespace redscope
