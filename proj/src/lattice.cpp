#include "ptcat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ptcat/circle.hpp"

namespace ptcat {

namespace {

IntMat identity(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat matmul(const IntMat& x, const IntMat& y) {
  std::size_t n = x.size(), p = y[0].size(), k = y.size();
  IntMat out(n, IntVec(p, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      if (x[i][l] != 0)
        for (std::size_t j = 0; j < p; ++j) out[i][j] += x[i][l] * y[l][j];
  return out;
}

// Fraction-free determinant (Bareiss).
Integer int_det(IntMat m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Solve U X = I over the rationals; entries must come out integral for a
// unimodular U.
IntMat unimodular_inverse(const IntMat& u) {
  std::size_t n = u.size();
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(u[i][j]);
    aug[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && aug[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("unimodular_inverse: singular matrix");
    std::swap(aug[col], aug[piv]);
    Rational lead = aug[col][col];
    for (auto& v : aug[col]) v /= lead;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || aug[row][col] == 0) continue;
      Rational c = aug[row][col];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[row][j] -= c * aug[col][j];
    }
  }
  IntMat inv(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = aug[i][n + j];
      v.canonicalize();
      if (v.get_den() != 1) throw std::logic_error("unimodular_inverse: non-integer entry");
      inv[i][j] = v.get_num();
    }
  return inv;
}

}  // namespace

GramMatrix::GramMatrix(IntMat m) : entries(std::move(m)) {
  std::size_t n = entries.size();
  for (const auto& row : entries)
    if (row.size() != n) throw std::invalid_argument("GramMatrix: matrix must be square");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i][i] % 2 != 0)
      throw std::invalid_argument("GramMatrix: diagonal must be even (even lattice)");
    for (std::size_t j = i + 1; j < n; ++j)
      if (entries[i][j] != entries[j][i])
        throw std::invalid_argument("GramMatrix: matrix must be symmetric");
  }
  if (int_det(entries) == 0)
    throw std::invalid_argument("GramMatrix: determinant must be nonzero");
}

Integer GramMatrix::determinant() const { return int_det(entries); }

Rational GramMatrix::pairing(const RatVec& x, const RatVec& y) const {
  std::size_t n = rank();
  if (x.size() != n || y.size() != n)
    throw std::invalid_argument("pairing: dimension mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (y[j] != 0) sum += x[i] * Rational(entries[i][j]) * y[j];
  }
  sum.canonicalize();
  return sum;
}

SmithResult smith_normal_form(const IntMat& m_in) {
  std::size_t rows = m_in.size();
  std::size_t cols = rows == 0 ? 0 : m_in[0].size();
  SmithResult res{identity(rows), m_in, identity(cols)};
  IntMat& m = res.d;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(m[i], m[j]);
    std::swap(res.u[i], res.u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : m) std::swap(row[i], row[j]);
    for (auto& row : res.v) std::swap(row[i], row[j]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& c) {
    for (std::size_t j = 0; j < cols; ++j) m[dst][j] += c * m[src][j];
    for (std::size_t j = 0; j < rows; ++j) res.u[dst][j] += c * res.u[src][j];
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Integer& c) {
    for (std::size_t i = 0; i < rows; ++i) m[i][dst] += c * m[i][src];
    for (std::size_t i = 0; i < cols; ++i) res.v[i][dst] += c * res.v[i][src];
  };
  auto negate_row = [&](std::size_t i) {
    for (auto& x : m[i]) x = -x;
    for (auto& x : res.u[i]) x = -x;
  };

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest absolute nonzero pivot in the trailing block, row-major ties.
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        if (!found || abs(m[i][j]) < abs(m[pi][pj])) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    if (pi != t) swap_rows(t, pi);
    if (pj != t) swap_cols(t, pj);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      Integer q = m[i][t] / m[t][t];
      // Round toward keeping the remainder small in absolute value.
      if (m[i][t] - q * m[t][t] != 0 || q != 0) add_row(i, t, -q);
      if (m[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      Integer q = m[t][j] / m[t][t];
      if (m[t][j] - q * m[t][t] != 0 || q != 0) add_col(j, t, -q);
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // pick a fresh (smaller) pivot

    // Divisibility: fold any non-divisible trailing entry into the pivot row.
    bool divisible = true;
    for (std::size_t i = t + 1; i < rows && divisible; ++i)
      for (std::size_t j = t + 1; j < cols && divisible; ++j)
        if (m[i][j] % m[t][t] != 0) {
          add_row(t, i, 1);
          divisible = false;
        }
    if (!divisible) continue;

    if (m[t][t] < 0) negate_row(t);
    ++t;
  }
  return res;
}

DiscriminantGroup::DiscriminantGroup(GramMatrix gram, std::vector<long> factors,
                                     std::vector<RatVec> generator_reps)
    : gram_(std::move(gram)), factors_(std::move(factors)), gens_(std::move(generator_reps)) {
  if (factors_.size() != gens_.size())
    throw std::invalid_argument("DiscriminantGroup: factor/generator mismatch");
}

std::size_t DiscriminantGroup::order() const {
  std::size_t n = 1;
  for (long d : factors_) n *= static_cast<std::size_t>(d);
  return n;
}

DiscriminantGroup::Elem DiscriminantGroup::add(const Elem& x, const Elem& y) const {
  Elem z(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i)
    z[i] = (x[i] + y[i]) % factors_[i];
  return z;
}

DiscriminantGroup::Elem DiscriminantGroup::neg(const Elem& x) const {
  Elem z(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i)
    z[i] = (factors_[i] - x[i]) % factors_[i];
  return z;
}

bool DiscriminantGroup::is_zero(const Elem& x) const {
  return std::all_of(x.begin(), x.end(), [](long v) { return v == 0; });
}

std::vector<DiscriminantGroup::Elem> DiscriminantGroup::elements() const {
  std::vector<Elem> out;
  out.reserve(order());
  for (std::size_t idx = 0; idx < order(); ++idx) out.push_back(element(idx));
  return out;
}

std::size_t DiscriminantGroup::index_of(const Elem& x) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    idx = idx * static_cast<std::size_t>(factors_[i]) + static_cast<std::size_t>(x[i]);
  return idx;
}

DiscriminantGroup::Elem DiscriminantGroup::element(std::size_t index) const {
  Elem x(factors_.size(), 0);
  for (std::size_t i = factors_.size(); i-- > 0;) {
    x[i] = static_cast<long>(index % static_cast<std::size_t>(factors_[i]));
    index /= static_cast<std::size_t>(factors_[i]);
  }
  return x;
}

std::string DiscriminantGroup::label(const Elem& x) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) os << ",";
    os << x[i];
  }
  return x.empty() ? "0" : os.str();
}

RatVec DiscriminantGroup::section(const Elem& x) const {
  std::size_t n = gram_.rank();
  RatVec v(n, 0);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) v[j] += Rational(x[i]) * gens_[i][j];
  }
  for (auto& c : v) c.canonicalize();
  return v;
}

Rational DiscriminantGroup::pairing(const Elem& x, const Elem& y) const {
  return gram_.pairing(section(x), section(y));
}

Rational DiscriminantGroup::q_value(const Elem& x) const {
  Rational p = pairing(x, x) / 2;
  Rational r = rational_mod1(p) * 2;
  r.canonicalize();
  return r;
}

Rational DiscriminantGroup::bilinear(const Elem& x, const Elem& y) const {
  return rational_mod1(pairing(x, y));
}

IntVec DiscriminantGroup::section_defect(const Elem& x, const Elem& y) const {
  RatVec sx = section(x), sy = section(y), sxy = section(add(x, y));
  IntVec out(sx.size());
  for (std::size_t i = 0; i < sx.size(); ++i) {
    Rational v = sx[i] + sy[i] - sxy[i];
    v.canonicalize();
    if (v.get_den() != 1)
      throw std::logic_error("section_defect: defect is not a lattice vector");
    out[i] = v.get_num();
  }
  return out;
}

namespace {

DiscriminantGroup make_group(const GramMatrix& g, const std::vector<IntVec>* shifts) {
  std::size_t n = g.rank();
  auto snf = smith_normal_form(g.entries);
  IntMat u_inv = unimodular_inverse(snf.u);

  // Dual-basis coordinates of the quotient generators are the columns of
  // U^{-1}; convert into lattice-basis coordinates via G^{-1} (solve G w = col).
  std::vector<long> factors;
  std::vector<RatVec> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Integer di = snf.d[i][i];
    if (di == 1) continue;
    if (!di.fits_slong_p()) throw std::invalid_argument("discriminant factor too large");
    factors.push_back(di.get_si());

    // Solve G w = U^{-1} e_i exactly.
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1, 0));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) aug[r][c] = Rational(g.entries[r][c]);
      aug[r][n] = Rational(u_inv[r][i]);
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && aug[piv][col] == 0) ++piv;
      if (piv == n) throw std::logic_error("discriminant_group: singular Gram");
      std::swap(aug[col], aug[piv]);
      Rational lead = aug[col][col];
      for (auto& vvv : aug[col]) vvv /= lead;
      for (std::size_t row = 0; row < n; ++row) {
        if (row == col || aug[row][col] == 0) continue;
        Rational c = aug[row][col];
        for (std::size_t j = 0; j <= n; ++j) aug[row][j] -= c * aug[col][j];
      }
    }
    RatVec w(n);
    for (std::size_t r = 0; r < n; ++r) {
      w[r] = aug[r][n];
      w[r].canonicalize();
    }
    gens.push_back(std::move(w));
  }

  if (shifts) {
    if (shifts->size() != gens.size())
      throw std::invalid_argument("discriminant_group_shifted: one shift per factor required");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if ((*shifts)[i].size() != n)
        throw std::invalid_argument("discriminant_group_shifted: shift dimension mismatch");
      for (std::size_t j = 0; j < n; ++j) gens[i][j] += Rational((*shifts)[i][j]);
    }
  } else {
    // Parity repair: the induced associator is a coboundary sign
    // (-1)^{(x_i|x_j)} on the scaled generators x_i = d_i w_i.  Diagonal
    // self-pairings are even automatically; shift representatives until the
    // cross-pairings are even too.
    std::size_t r = gens.size();
    auto scaled = [&](std::size_t i, const IntVec& shift) {
      RatVec x(n);
      for (std::size_t j = 0; j < n; ++j)
        x[j] = Rational(factors[i]) * (gens[i][j] + Rational(shift[j]));
      return x;
    };
    auto all_even = [&](const std::vector<IntVec>& sh) {
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
          Rational p = g.pairing(scaled(i, sh[i]), scaled(j, sh[j]));
          p.canonicalize();
          if (p.get_den() != 1) throw std::logic_error("scaled generator left the lattice");
          if (p.get_num() % 2 != 0) return false;
        }
      return true;
    };
    std::vector<IntVec> shifts_try(r, IntVec(n, 0));
    if (!all_even(shifts_try)) {
      // Deterministic search over 0/1 shift vectors, lexicographic.
      std::size_t total_bits = r * n;
      bool fixed = false;
      for (std::size_t mask = 1; mask < (std::size_t{1} << std::min<std::size_t>(total_bits, 20)); ++mask) {
        for (std::size_t b = 0; b < total_bits; ++b)
          shifts_try[b / n][b % n] = (mask >> b) & 1;
        if (all_even(shifts_try)) {
          fixed = true;
          break;
        }
      }
      if (!fixed)
        throw std::logic_error(
            "discriminant_group: no parity-even section found; the bilinear "
            "associator ansatz cannot satisfy the pentagon for this lattice");
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) gens[i][j] += Rational(shifts_try[i][j]);
    }
  }

  DiscriminantGroup group(g, factors, gens);
  Integer det = g.determinant();
  if (Integer(static_cast<unsigned long>(group.order())) != abs(det))
    throw std::logic_error("discriminant_group: order does not match |det|");
  return group;
}

}  // namespace

DiscriminantGroup discriminant_group(const GramMatrix& g) {
  return make_group(g, nullptr);
}

DiscriminantGroup discriminant_group_shifted(const GramMatrix& g,
                                             const std::vector<IntVec>& shifts) {
  return make_group(g, &shifts);
}

Cyc epsilon(const GramMatrix& g, const IntVec& alpha, const IntVec& beta) {
  std::size_t n = g.rank();
  if (alpha.size() != n || beta.size() != n)
    throw std::invalid_argument("epsilon: dimension mismatch");
  Integer exponent = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      exponent += alpha[i] * beta[j] * g.entries[i][j];
  return exponent % 2 == 0 ? Cyc::one() : -Cyc::one();
}

FusionData build_pointed_mtc(const GramMatrix& g) {
  return build_pointed_mtc(discriminant_group(g));
}

FusionData build_pointed_mtc(const DiscriminantGroup& group) {
  const auto elems = group.elements();
  const std::size_t L = elems.size();
  const auto& g = group.gram();

  FusionData d;
  d.labels.reserve(L);
  for (const auto& e : elems) d.labels.push_back(group.label(e));
  d.unit = group.index_of(group.zero());
  d.dual.resize(L);
  d.twists.resize(L);
  d.fusion.assign(L * L * L, 0);

  unsigned long denom_lcm = 1;
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      Rational p = group.pairing(elems[i], elems[j]);
      Integer den = p.get_den();
      if (!den.fits_ulong_p()) throw std::logic_error("pairing denominator too large");
      denom_lcm = std::lcm(denom_lcm, den.get_ui());
    }
  d.cyclotomic_order = 2 * denom_lcm;

  auto phase = [&](const Rational& half_turn_count) {
    return Cyc::half_turns(half_turn_count).lifted_to(d.cyclotomic_order);
  };

  for (std::size_t i = 0; i < L; ++i) {
    d.dual[i] = group.index_of(group.neg(elems[i]));
    d.twists[i] = phase(group.pairing(elems[i], elems[i]));
    for (std::size_t j = 0; j < L; ++j) {
      std::size_t k = group.index_of(group.add(elems[i], elems[j]));
      d.fusion[(i * L + j) * L + k] = 1;
      d.r_symbols[{i, j, k}] = phase(group.pairing(elems[i], elems[j]));
    }
  }

  for (std::size_t a = 0; a < L; ++a) {
    RatVec sa = group.section(elems[a]);
    for (std::size_t b = 0; b < L; ++b)
      for (std::size_t c = 0; c < L; ++c) {
        IntVec defect = group.section_defect(elems[b], elems[c]);
        RatVec defect_rat(defect.size());
        for (std::size_t t = 0; t < defect.size(); ++t) defect_rat[t] = Rational(defect[t]);
        Rational expo = g.pairing(sa, defect_rat);
        std::size_t ab = group.index_of(group.add(elems[a], elems[b]));
        std::size_t bc = group.index_of(group.add(elems[b], elems[c]));
        std::size_t abc = group.index_of(group.add(group.add(elems[a], elems[b]), elems[c]));
        d.f_symbols[{a, b, c, abc, ab, bc}] = phase(expo);
      }
  }

  for (const auto& rep : verify_all(d)) {
    if (!rep.ok()) {
      std::ostringstream os;
      os << "build_pointed_mtc: constructed data failed validator '" << rep.suite << "' at "
         << rep.violations.front().location << ": " << rep.violations.front().detail;
      throw std::logic_error(os.str());
    }
  }
  return d;
}

GramMatrix parse_gram(const std::string& text) {
  IntMat m;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    IntVec r;
    std::stringstream entries(row);
    std::string tok;
    while (entries >> tok) {
      try {
        r.emplace_back(tok);
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parse_gram: bad integer '" + tok + "'");
      }
    }
    if (!r.empty()) m.push_back(std::move(r));
  }
  if (m.empty()) throw std::invalid_argument("parse_gram: empty matrix");
  return GramMatrix(std::move(m));
}

}  // namespace ptcat
