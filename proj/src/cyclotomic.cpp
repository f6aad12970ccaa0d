#include "ptcat/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ptcat {

namespace {

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n, m = n;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

// Exact division of integer polynomials, remainder must vanish.
std::vector<Integer> poly_divide_exact(std::vector<Integer> num,
                                       const std::vector<Integer>& den) {
  if (den.empty() || den.back() == 0)
    throw std::logic_error("poly_divide_exact: bad divisor");
  std::vector<Integer> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    Integer c = num[i + den.size() - 1] / den.back();
    quot[i] = c;
    if (c != 0)
      for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (const auto& c : num)
    if (c != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
  return quot;
}

// Per-order tables: Phi_N and rows x^e mod Phi_N for e up to the largest
// exponent produced by lifting or by products of reduced elements.
struct CycTables {
  unsigned long n = 1;
  unsigned long deg = 1;  // phi(n)
  std::vector<Integer> phi_poly;
  std::vector<std::vector<Rational>> power_rows;  // x^e mod Phi_N
};

const CycTables& tables_for(unsigned long n) {
  static std::mutex mu;
  static std::map<unsigned long, std::unique_ptr<CycTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto t = std::make_unique<CycTables>();
  t->n = n;
  t->phi_poly = cyclotomic_polynomial(n);
  t->deg = t->phi_poly.size() - 1;

  std::size_t max_exp = std::max<std::size_t>(n, 2 * t->deg);
  t->power_rows.resize(max_exp + 1);
  for (std::size_t e = 0; e < t->deg; ++e) {
    std::vector<Rational> row(t->deg, 0);
    row[e] = 1;
    t->power_rows[e] = std::move(row);
  }
  // x^e = x * x^{e-1}, reduced against the monic Phi_N.
  for (std::size_t e = t->deg; e <= max_exp; ++e) {
    const auto& prev = t->power_rows[e - 1];
    std::vector<Rational> row(t->deg, 0);
    Rational top = prev[t->deg - 1];
    for (std::size_t j = 0; j + 1 < t->deg; ++j) row[j + 1] = prev[j];
    if (top != 0)
      for (std::size_t j = 0; j < t->deg; ++j)
        row[j] -= top * Rational(t->phi_poly[j]);
    t->power_rows[e] = std::move(row);
  }
  auto* raw = t.get();
  cache.emplace(n, std::move(t));
  return *raw;
}

// Reduce a raw coefficient list (arbitrary degree within table range).
std::vector<Rational> reduce_mod_phi(unsigned long n, const std::vector<Rational>& raw) {
  const auto& t = tables_for(n);
  std::vector<Rational> out(t.deg, 0);
  for (std::size_t e = 0; e < raw.size(); ++e) {
    if (raw[e] == 0) continue;
    if (e < t.deg) {
      out[e] += raw[e];
    } else {
      const auto& row = t.power_rows.at(e);
      for (std::size_t j = 0; j < t.deg; ++j)
        if (row[j] != 0) out[j] += raw[e] * row[j];
    }
  }
  return out;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned long n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  // x^n - 1 divided by the product of Phi_d over proper divisors d.
  std::vector<Integer> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    poly = poly_divide_exact(std::move(poly), cyclotomic_polynomial(d));
  }
  return poly;
}

Cyc::Cyc(unsigned long order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  trim();
}

void Cyc::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  for (auto& c : coeffs_) c.canonicalize();
}

Cyc Cyc::from_rational(const Rational& q) {
  if (q == 0) return Cyc();
  return Cyc(1, {q});
}

Cyc Cyc::root_of_unity(unsigned long n, long k) {
  if (n == 0) throw std::invalid_argument("root_of_unity: order must be positive");
  long r = k % static_cast<long>(n);
  if (r < 0) r += static_cast<long>(n);
  const auto& t = tables_for(n);
  return Cyc(n, t.power_rows.at(static_cast<std::size_t>(r)));
}

Cyc Cyc::half_turns(const Rational& t) {
  Rational r = t;
  r.canonicalize();
  Integer den = r.get_den();
  Integer num = r.get_num();
  if (!den.fits_ulong_p()) throw std::invalid_argument("half_turns: denominator too large");
  unsigned long q = den.get_ui();
  Integer e = num % Integer(2 * q);
  if (!e.fits_slong_p()) e = e % Integer(2 * q);
  return root_of_unity(2 * q, e.get_si());
}

Cyc Cyc::from_coeffs(unsigned long n, std::vector<Rational> coeffs) {
  if (n == 0) throw std::invalid_argument("from_coeffs: order must be positive");
  const auto& t = tables_for(n);
  if (coeffs.size() > t.power_rows.size())
    throw std::invalid_argument("from_coeffs: coefficient vector too long");
  for (auto& c : coeffs) c.canonicalize();
  return Cyc(n, reduce_mod_phi(n, coeffs));
}

bool Cyc::is_one() const {
  return coeffs_.size() == 1 && coeffs_[0] == 1;
}

bool Cyc::is_rational() const {
  return coeffs_.size() <= 1;
}

Rational Cyc::rational_value() const {
  if (!is_rational()) throw std::logic_error("rational_value: element is irrational");
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Cyc Cyc::lifted_to(unsigned long m) const {
  if (m == order_) return *this;
  if (m == 0 || m % order_ != 0)
    throw std::invalid_argument("lifted_to: target order must be a multiple");
  unsigned long stride = m / order_;
  std::vector<Rational> raw(coeffs_.size() == 0 ? 0 : (coeffs_.size() - 1) * stride + 1, 0);
  for (std::size_t e = 0; e < coeffs_.size(); ++e)
    if (coeffs_[e] != 0) raw[e * stride] = coeffs_[e];
  return Cyc(m, reduce_mod_phi(m, raw));
}

Cyc Cyc::conj() const {
  if (coeffs_.empty()) return Cyc();
  // Galois action zeta -> zeta^{N-1}.
  std::vector<Rational> raw(order_ == 1 ? 1 : (coeffs_.size() - 1) * (order_ - 1) + 1, 0);
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (coeffs_[e] == 0) continue;
    std::size_t img = (e * (order_ - 1)) % order_;
    raw.resize(std::max(raw.size(), img + 1), 0);
    raw[img] += coeffs_[e];
  }
  return Cyc(order_, reduce_mod_phi(order_, raw));
}

Cyc Cyc::inv() const {
  if (is_zero()) throw std::invalid_argument("inv: division by zero");
  if (is_rational()) return from_rational(Rational(1) / coeffs_[0]);
  // Extended Euclid in Q[x] against Phi_N: a*s + Phi*t = 1.
  const auto& t = tables_for(order_);
  std::vector<Rational> r0(t.phi_poly.size());
  for (std::size_t i = 0; i < t.phi_poly.size(); ++i) r0[i] = Rational(t.phi_poly[i]);
  std::vector<Rational> r1 = coeffs_;
  std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};

  auto deg = [](const std::vector<Rational>& p) -> long {
    for (std::size_t i = p.size(); i-- > 0;)
      if (p[i] != 0) return static_cast<long>(i);
    return -1;
  };
  auto scale_sub = [](std::vector<Rational>& a, const std::vector<Rational>& b,
                      const Rational& c, std::size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
  };

  while (deg(r1) > 0) {
    // One full division step r0 = q*r1 + r.
    long d1 = deg(r1);
    Rational lead1 = r1[static_cast<std::size_t>(d1)];
    while (deg(r0) >= d1) {
      long d0 = deg(r0);
      Rational c = r0[static_cast<std::size_t>(d0)] / lead1;
      std::size_t shift = static_cast<std::size_t>(d0 - d1);
      scale_sub(r0, r1, c, shift);
      scale_sub(s0, s1, c, shift);
    }
    std::swap(r0, r1);
    std::swap(s0, s1);
  }
  if (deg(r1) != 0)
    throw std::logic_error("inv: element not invertible mod Phi_N");
  Rational unit = r1[0];
  std::vector<Rational> out = s1;
  for (auto& c : out) c /= unit;
  return Cyc(order_, reduce_mod_phi(order_, out));
}

Cyc Cyc::pow(long e) const {
  if (e == 0) return one();
  Cyc base = e > 0 ? *this : inv();
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  Cyc acc = one();
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::complex<double> Cyc::approx() const {
  std::complex<double> sum(0.0, 0.0);
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (coeffs_[e] == 0) continue;
    double angle = 2.0 * M_PI * static_cast<double>(e) / static_cast<double>(order_);
    sum += coeffs_[e].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

std::string Cyc::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (coeffs_[e] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << coeffs_[e].get_str();
    } else {
      if (coeffs_[e] != 1) os << coeffs_[e].get_str() << "*";
      os << "z" << order_ << "^" << e;
    }
  }
  return os.str();
}

Cyc operator+(const Cyc& x, const Cyc& y) {
  unsigned long m = std::lcm(x.order_, y.order_);
  Cyc a = x.lifted_to(m), b = y.lifted_to(m);
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Cyc(m, std::move(out));
}

Cyc operator-(const Cyc& x) {
  std::vector<Rational> out = x.coeffs_;
  for (auto& c : out) c = -c;
  return Cyc(x.order_, std::move(out));
}

Cyc operator-(const Cyc& x, const Cyc& y) { return x + (-y); }

Cyc operator*(const Cyc& x, const Cyc& y) {
  if (x.is_zero() || y.is_zero()) return Cyc();
  if (x.is_rational() || y.is_rational()) {
    const Cyc& scalar = x.is_rational() ? x : y;
    const Cyc& other = x.is_rational() ? y : x;
    std::vector<Rational> out = other.coeffs_;
    for (auto& c : out) c *= scalar.coeffs_[0];
    return Cyc(other.order_, std::move(out));
  }
  unsigned long m = std::lcm(x.order_, y.order_);
  Cyc a = x.lifted_to(m), b = y.lifted_to(m);

  // Monomial times monomial: one reduction row, no convolution.
  auto single_term = [](const Cyc& c) -> long {
    long idx = -1;
    for (std::size_t i = 0; i < c.coeffs_.size(); ++i) {
      if (c.coeffs_[i] == 0) continue;
      if (idx >= 0) return -1;
      idx = static_cast<long>(i);
    }
    return idx;
  };
  long ia = single_term(a), ib = single_term(b);
  if (ia >= 0 && ib >= 0) {
    const auto& t = tables_for(m);
    const auto& row = t.power_rows.at(static_cast<std::size_t>(ia + ib));
    Rational c = a.coeffs_[static_cast<std::size_t>(ia)] * b.coeffs_[static_cast<std::size_t>(ib)];
    std::vector<Rational> out(row.size(), 0);
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) out[j] = c * row[j];
    return Cyc(m, std::move(out));
  }

  std::vector<Rational> raw(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (b.coeffs_[j] != 0) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Cyc(m, reduce_mod_phi(m, raw));
}

bool operator==(const Cyc& x, const Cyc& y) {
  if (x.order_ == y.order_) return x.coeffs_ == y.coeffs_;
  unsigned long m = std::lcm(x.order_, y.order_);
  return x.lifted_to(m).coeffs_ == y.lifted_to(m).coeffs_;
}

}  // namespace ptcat
