#include "hadprod/poly.hpp"

#include <algorithm>
#include <sstream>

namespace hadprod {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const Rational& c) { return Poly(std::vector<Rational>{c, Rational(1)}); }

Poly Poly::linear_power(const Rational& c, std::size_t k) {
  // binomial expansion, avoids k convolutions
  std::vector<Rational> v(k + 1);
  Rational cpow = 1;
  for (std::size_t j = 0; j <= k; ++j) {
    v[k - j] = Rational(binomial(static_cast<long>(k), static_cast<long>(j))) * cpow;
    cpow *= c;
  }
  return Poly(std::move(v));
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly add(const Poly& a, const Poly& b) { return a + b; }
Poly mul(const Poly& a, const Poly& b) { return a * b; }

Poly pow(const Poly& p, std::size_t k) {
  Poly result = Poly::constant(1);
  Poly base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Poly derivative(const Poly& p, std::size_t order) {
  const auto& c = p.coeffs();
  if (order >= c.size()) return {};
  std::vector<Rational> out(c.size() - order);
  for (std::size_t i = order; i < c.size(); ++i) {
    // falling factorial i (i-1) ... (i-order+1)
    Integer f = 1;
    for (std::size_t t = 0; t < order; ++t) f *= static_cast<unsigned long>(i - t);
    out[i - order] = c[i] * Rational(f);
  }
  return Poly(std::move(out));
}

Rational evaluate(const Poly& p, const Rational& x) {
  Rational acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly compose(const Poly& p, const Poly& q) {
  Poly acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + Poly::constant(*it);
  return acc;
}

Poly taylor_shift(const Poly& p, const Rational& c) {
  std::vector<Rational> a = p.coeffs();
  const std::size_t n = a.size();
  if (n == 0 || sgn(c) == 0) return p;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) a[j - 1] += c * a[j];
  return Poly(std::move(a));
}

namespace {

void require_degree_at_most(const Poly& p, std::size_t d, const char* op) {
  if (p.size() > d + 1)
    throw PreconditionError(std::string(op) + ": degree overflow (deg " + std::to_string(*p.degree()) +
                            " > " + std::to_string(d) + ")");
}

} // namespace

Poly reverse(const Poly& h, std::size_t d) {
  require_degree_at_most(h, d, "reverse");
  std::vector<Rational> out(d + 1);
  for (std::size_t i = 0; i < h.size(); ++i) out[d - i] = h.coeffs()[i];
  return Poly(std::move(out));
}

Poly reflect(const Poly& f, std::size_t d) {
  require_degree_at_most(f, d, "reflect");
  // f(-x-1) = g(-x) with g(y) = f(y - 1)
  std::vector<Rational> g = taylor_shift(f, -1).coeffs();
  for (std::size_t i = 1; i < g.size(); i += 2) g[i] = -g[i];
  Poly r(std::move(g));
  if (d % 2 == 1) r = -r;
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw PreconditionError("divmod: division by the zero polynomial");
  if (a.size() < b.size()) return {Poly{}, a};
  std::vector<Rational> rem = a.coeffs();
  const std::vector<Rational>& den = b.coeffs();
  const std::size_t db = den.size() - 1;
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv_lead = 1 / den.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    Rational q = rem[k] * inv_lead;
    if (sgn(q) == 0) continue;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * den[j];
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (1 / p.leading());
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw PreconditionError("gcd: both inputs are zero");
  Poly u = monic(a), v = monic(b);
  while (!v.is_zero()) {
    Poly r = divmod(u, v).second;
    u = std::move(v);
    v = monic(r);
  }
  return monic(u);
}

Poly square_free_part(const Poly& p) {
  if (p.is_zero()) throw PreconditionError("square_free_part: zero polynomial");
  if (p.size() == 1) return Poly::constant(1);
  return monic(divmod(p, gcd(p, derivative(p))).first);
}

Integer binomial(long n, long k) {
  if (k < 0) return 0;
  Integer r;
  if (n >= 0) {
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  } else {
    // C(n, k) = (-1)^k C(k - n - 1, k)
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
    if (k % 2 == 1) r = -r;
  }
  return r;
}

Poly binomial_poly(long shift, std::size_t k) {
  Poly acc = Poly::constant(1);
  Integer fact = 1;
  for (std::size_t t = 0; t < k; ++t) {
    acc *= Poly::linear(Rational(shift - static_cast<long>(t)));
    fact *= static_cast<unsigned long>(t + 1);
  }
  return acc * Rational(Rational(1) / Rational(fact));
}

bool all_nonnegative(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return sgn(c) >= 0; });
}

bool all_nonnegative(const Poly& p) { return all_nonnegative(p.coeffs()); }

std::string to_csv(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += p.coeffs()[i].get_str();
  }
  return out;
}

std::string to_pretty(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Rational& c = p.coeffs()[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0 || !unit) {
      if (mag.get_den() != 1 && i > 0)
        os << '(' << mag.get_str() << ')';
      else
        os << mag.get_str();
    }
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

} // namespace hadprod
