#include "ptcat/fusion.hpp"

#include <sstream>
#include <stdexcept>

namespace ptcat {

namespace {

std::string tuple_str(const FusionData& d, std::initializer_list<std::size_t> idx) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) os << ",";
    os << d.labels[i];
    first = false;
  }
  os << ")";
  return os.str();
}

std::string diff_str(const Cyc& lhs, const Cyc& rhs) {
  std::ostringstream os;
  os << "lhs = " << lhs.str() << " [" << lhs.approx().real() << (lhs.approx().imag() < 0 ? "" : "+")
     << lhs.approx().imag() << "i], rhs = " << rhs.str() << " [" << rhs.approx().real()
     << (rhs.approx().imag() < 0 ? "" : "+") << rhs.approx().imag() << "i]";
  return os.str();
}

}  // namespace

std::optional<Cyc> FusionData::f(std::size_t a, std::size_t b, std::size_t c, std::size_t d,
                                 std::size_t m, std::size_t nn) const {
  auto it = f_symbols.find({a, b, c, d, m, nn});
  if (it == f_symbols.end()) return std::nullopt;
  return it->second;
}

std::optional<Cyc> FusionData::r(std::size_t a, std::size_t b, std::size_t c) const {
  auto it = r_symbols.find({a, b, c});
  if (it == r_symbols.end()) return std::nullopt;
  return it->second;
}

std::size_t FusionData::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw std::invalid_argument("unknown label: " + label);
}

Report verify_fusion_ring(const FusionData& d) {
  Report rep;
  rep.suite = "fusion-ring";
  const std::size_t L = d.size();
  if (d.dual.size() != L || d.twists.size() != L || d.fusion.size() != L * L * L)
    throw std::invalid_argument("verify_fusion_ring: inconsistent table sizes");

  for (std::size_t i = 0; i < L; ++i) {
    if (d.dual[d.dual[i]] != i)
      rep.add("duality-involution", tuple_str(d, {i}), "dual map is not an involution");
  }

  // Multiplicity-free bound.
  for (std::size_t i = 0; i < L * L * L; ++i) {
    ++rep.checks_run;
    if (d.fusion[i] > 1) {
      rep.add("multiplicity-free", "flat index " + std::to_string(i),
              "fusion coefficient exceeds 1");
    }
  }

  // Unit: N(0,i,k) = N(i,0,k) = delta_{ik}.
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t k = 0; k < L; ++k) {
      ++rep.checks_run;
      unsigned char want = (i == k) ? 1 : 0;
      if (d.n(d.unit, i, k) != want)
        rep.add("unit-left", tuple_str(d, {i, k}), "N(1,i,k) != delta");
      if (d.n(i, d.unit, k) != want)
        rep.add("unit-right", tuple_str(d, {i, k}), "N(i,1,k) != delta");
    }

  // Duality: N(i,j,0) = delta_{j, dual(i)}.
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      ++rep.checks_run;
      unsigned char want = (j == d.dual[i]) ? 1 : 0;
      if (d.n(i, j, d.unit) != want)
        rep.add("duality", tuple_str(d, {i, j}), "N(i,j,1) != delta_{j,dual(i)}");
    }

  // Associativity of the ring.
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j)
      for (std::size_t k = 0; k < L; ++k)
        for (std::size_t l = 0; l < L; ++l) {
          ++rep.checks_run;
          unsigned lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < L; ++m) {
            lhs += d.n(i, j, m) * d.n(m, k, l);
            rhs += d.n(j, k, m) * d.n(i, m, l);
          }
          if (lhs != rhs)
            rep.add("associativity", tuple_str(d, {i, j, k, l}),
                    "sum_m N(i,j,m)N(m,k,l) != sum_n N(j,k,n)N(i,n,l)");
        }
  return rep;
}

Report verify_pentagon(const FusionData& d) {
  Report rep;
  rep.suite = "pentagon";
  const std::size_t L = d.size();

  // Structural pass: F defined and nonzero exactly on admissible tuples,
  // unit entries normalized to 1.
  for (const auto& [key, value] : d.f_symbols) {
    ++rep.checks_run;
    auto [a, b, c, e, m, nn] = key;
    if (!d.f_admissible(a, b, c, e, m, nn))
      rep.add("f-support", tuple_str(d, {a, b, c, e, m, nn}), "F entry on inadmissible tuple");
    else if (value.is_zero())
      rep.add("f-nonzero", tuple_str(d, {a, b, c, e, m, nn}), "F entry is zero");
    else if ((a == d.unit || b == d.unit || c == d.unit) && !value.is_one())
      rep.add("triangle", tuple_str(d, {a, b, c, e, m, nn}),
              "unit-strict gauge requires F = 1, got " + value.str());
  }
  for (std::size_t a = 0; a < L; ++a)
    for (std::size_t b = 0; b < L; ++b)
      for (std::size_t c = 0; c < L; ++c)
        for (std::size_t e = 0; e < L; ++e)
          for (std::size_t m = 0; m < L; ++m)
            for (std::size_t nn = 0; nn < L; ++nn) {
              if (!d.f_admissible(a, b, c, e, m, nn)) continue;
              ++rep.checks_run;
              if (!d.f(a, b, c, e, m, nn))
                rep.add("f-missing", tuple_str(d, {a, b, c, e, m, nn}),
                        "no F entry on admissible tuple");
            }
  if (!rep.ok()) return rep;

  // Pentagon: F(m,c,d,e)[g,l] F(a,b,l,e)[m,k]
  //           = sum_h F(a,b,c,g)[m,h] F(a,h,d,e)[g,k] F(b,c,d,k)[h,l].
  for (std::size_t a = 0; a < L; ++a)
    for (std::size_t b = 0; b < L; ++b)
      for (std::size_t c = 0; c < L; ++c)
        for (std::size_t dd = 0; dd < L; ++dd)
          for (std::size_t m = 0; m < L; ++m) {
            if (!d.n(a, b, m)) continue;
            for (std::size_t g = 0; g < L; ++g) {
              if (!d.n(m, c, g)) continue;
              for (std::size_t e = 0; e < L; ++e) {
                if (!d.n(g, dd, e)) continue;
                for (std::size_t l = 0; l < L; ++l) {
                  if (!d.n(c, dd, l)) continue;
                  for (std::size_t k = 0; k < L; ++k) {
                    if (!d.n(b, l, k) || !d.n(a, k, e)) continue;
                    if (!d.n(m, l, e)) continue;
                    ++rep.checks_run;
                    Cyc lhs = *d.f(m, c, dd, e, g, l) * *d.f(a, b, l, e, m, k);
                    Cyc rhs = Cyc::zero();
                    for (std::size_t h = 0; h < L; ++h) {
                      if (!d.n(b, c, h) || !d.n(a, h, g) || !d.n(h, dd, k)) continue;
                      rhs += *d.f(a, b, c, g, m, h) * *d.f(a, h, dd, e, g, k) *
                             *d.f(b, c, dd, k, h, l);
                    }
                    if (lhs != rhs)
                      rep.add("pentagon", tuple_str(d, {a, b, c, dd, e, m, g, k, l}),
                              diff_str(lhs, rhs));
                  }
                }
              }
            }
          }
  return rep;
}

Report verify_hexagon(const FusionData& d) {
  Report rep;
  rep.suite = "hexagon";
  const std::size_t L = d.size();

  for (const auto& [key, value] : d.r_symbols) {
    ++rep.checks_run;
    auto [a, b, c] = key;
    if (!d.n(a, b, c))
      rep.add("r-support", tuple_str(d, {a, b, c}), "R entry on inadmissible channel");
    else if (value.is_zero())
      rep.add("r-nonzero", tuple_str(d, {a, b, c}), "R entry is zero");
  }
  for (std::size_t a = 0; a < L; ++a)
    for (std::size_t b = 0; b < L; ++b)
      for (std::size_t c = 0; c < L; ++c) {
        if (!d.n(a, b, c)) continue;
        ++rep.checks_run;
        if (!d.r(a, b, c))
          rep.add("r-missing", tuple_str(d, {a, b, c}), "no R entry on admissible channel");
      }
  if (!rep.ok()) return rep;

  // Hexagon 1: R(c,a,e) F(a,c,b,d)[e,g] R(c,b,g)
  //            = sum_f F(c,a,b,d)[e,f] R(c,f,d) F(a,b,c,d)[f,g].
  // Hexagon 2: the same shape with every R replaced by its inverse.
  for (std::size_t a = 0; a < L; ++a)
    for (std::size_t b = 0; b < L; ++b)
      for (std::size_t c = 0; c < L; ++c)
        for (std::size_t dd = 0; dd < L; ++dd)
          for (std::size_t e = 0; e < L; ++e) {
            if (!d.n(a, c, e) || !d.n(e, b, dd)) continue;
            for (std::size_t g = 0; g < L; ++g) {
              if (!d.n(c, b, g) || !d.n(a, g, dd)) continue;
              ++rep.checks_run;
              Cyc lhs1 = *d.r(c, a, e) * *d.f(a, c, b, dd, e, g) * *d.r(c, b, g);
              Cyc lhs2 = d.r(a, c, e)->inv() * *d.f(a, c, b, dd, e, g) * d.r(b, c, g)->inv();
              Cyc rhs1 = Cyc::zero(), rhs2 = Cyc::zero();
              for (std::size_t ff = 0; ff < L; ++ff) {
                if (!d.n(a, b, ff) || !d.n(c, ff, dd)) continue;
                Cyc outer = *d.f(c, a, b, dd, e, ff) * *d.f(a, b, c, dd, ff, g);
                rhs1 += outer * *d.r(c, ff, dd);
                rhs2 += outer * d.r(ff, c, dd)->inv();
              }
              if (lhs1 != rhs1)
                rep.add("hexagon-1", tuple_str(d, {a, b, c, dd, e, g}), diff_str(lhs1, rhs1));
              if (lhs2 != rhs2)
                rep.add("hexagon-2", tuple_str(d, {a, b, c, dd, e, g}), diff_str(lhs2, rhs2));
            }
          }
  return rep;
}

Report verify_ribbon(const FusionData& d) {
  Report rep;
  rep.suite = "ribbon";
  const std::size_t L = d.size();
  ++rep.checks_run;
  if (!d.twists[d.unit].is_one())
    rep.add("twist-unit", tuple_str(d, {d.unit}), "twist of the unit must be 1");
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j)
      for (std::size_t k = 0; k < L; ++k) {
        if (!d.n(i, j, k)) continue;
        ++rep.checks_run;
        Cyc rhs = *d.r(j, i, k) * *d.r(i, j, k) * d.twists[i] * d.twists[j];
        if (d.twists[k] != rhs)
          rep.add("balancing", tuple_str(d, {i, j, k}), diff_str(d.twists[k], rhs));
      }
  // With every quantum dimension 1 the twist is the self-braiding scalar.
  if (is_pointed(d)) {
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t k = 0; k < L; ++k) {
        if (!d.n(i, i, k)) continue;
        ++rep.checks_run;
        if (d.twists[i] != *d.r(i, i, k))
          rep.add("self-statistics", tuple_str(d, {i, i, k}),
                  diff_str(d.twists[i], *d.r(i, i, k)));
      }
  }
  return rep;
}

bool is_pointed(const FusionData& d) {
  const std::size_t L = d.size();
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      unsigned count = 0;
      for (std::size_t k = 0; k < L; ++k) count += d.n(i, j, k);
      if (count != 1) return false;
    }
  return true;
}

namespace {

std::size_t pointed_product(const FusionData& d, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d.n(i, j, k)) return k;
  throw std::logic_error("pointed_product: no fusion channel");
}

}  // namespace

PointedModularData pointed_modular_data(const FusionData& d) {
  if (!is_pointed(d))
    throw std::invalid_argument("pointed_modular_data: category is not pointed");
  const std::size_t L = d.size();
  PointedModularData md;
  md.s.assign(L, std::vector<Cyc>(L, Cyc::zero()));
  md.t.resize(L);
  md.gauss_sum = Cyc::zero();
  for (std::size_t i = 0; i < L; ++i) {
    md.t[i] = d.twists[i];
    md.gauss_sum += d.twists[i];
    for (std::size_t j = 0; j < L; ++j) {
      std::size_t k = pointed_product(d, i, j);
      md.s[i][j] = (*d.r(j, i, k) * *d.r(i, j, k)).inv();
    }
  }
  return md;
}

Report verlinde_check(const FusionData& d) {
  Report rep;
  rep.suite = "verlinde";
  auto md = pointed_modular_data(d);
  const std::size_t L = d.size();
  Rational inv_order(1, static_cast<unsigned long>(L));
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j)
      for (std::size_t k = 0; k < L; ++k) {
        ++rep.checks_run;
        Cyc sum = Cyc::zero();
        for (std::size_t s = 0; s < L; ++s)
          sum += md.s[i][s] * md.s[j][s] * md.s[k][s].conj();
        Cyc got = Cyc::from_rational(inv_order) * sum;
        Cyc want = Cyc::from_rational(Rational(static_cast<int>(d.n(i, j, k))));
        if (got != want)
          rep.add("verlinde", tuple_str(d, {i, j, k}), diff_str(got, want));
      }
  return rep;
}

Report modular_relation_check(const FusionData& d) {
  Report rep;
  rep.suite = "modular-relation";
  auto md = pointed_modular_data(d);
  const std::size_t L = d.size();
  const Cyc order = Cyc::from_rational(Rational(static_cast<unsigned long>(L)));

  auto matmul = [L](const std::vector<std::vector<Cyc>>& x,
                    const std::vector<std::vector<Cyc>>& y) {
    std::vector<std::vector<Cyc>> out(L, std::vector<Cyc>(L, Cyc::zero()));
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t k = 0; k < L; ++k)
        for (std::size_t j = 0; j < L; ++j) out[i][j] += x[i][k] * y[k][j];
    return out;
  };

  // S conj(S)^T = |L| I.
  bool degenerate = false;
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      ++rep.checks_run;
      Cyc sum = Cyc::zero();
      for (std::size_t s = 0; s < L; ++s) sum += md.s[i][s] * md.s[j][s].conj();
      Cyc want = (i == j) ? order : Cyc::zero();
      if (sum != want) {
        rep.add("s-nondegenerate", tuple_str(d, {i, j}), diff_str(sum, want));
        degenerate = true;
      }
    }

  // S S^T = |L| * (dual permutation).
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      ++rep.checks_run;
      Cyc sum = Cyc::zero();
      for (std::size_t s = 0; s < L; ++s) sum += md.s[i][s] * md.s[j][s];
      Cyc want = (j == d.dual[i]) ? order : Cyc::zero();
      if (sum != want)
        rep.add("s-dual-permutation", tuple_str(d, {i, j}), diff_str(sum, want));
    }

  ++rep.checks_run;
  if (md.gauss_sum.is_zero()) {
    rep.add("gauss-sum", "", "Gauss sum vanishes; form is non-modular");
    degenerate = true;
  }
  if (degenerate) return rep;

  // (S T)^3 = g S^2.
  std::vector<std::vector<Cyc>> st(L, std::vector<Cyc>(L, Cyc::zero()));
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) st[i][j] = md.s[i][j] * md.t[j];
  auto lhs = matmul(matmul(st, st), st);
  auto s2 = matmul(md.s, md.s);
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      ++rep.checks_run;
      Cyc want = md.gauss_sum * s2[i][j];
      if (lhs[i][j] != want)
        rep.add("st-cubed", tuple_str(d, {i, j}), diff_str(lhs[i][j], want));
    }
  return rep;
}

std::vector<Report> verify_all(const FusionData& d) {
  std::vector<Report> out;
  out.push_back(verify_fusion_ring(d));
  if (!out.back().ok()) return out;
  out.push_back(verify_pentagon(d));
  if (!out.back().ok()) return out;
  out.push_back(verify_hexagon(d));
  if (!out.back().ok()) return out;
  out.push_back(verify_ribbon(d));
  if (!out.back().ok()) return out;
  if (is_pointed(d)) {
    out.push_back(verlinde_check(d));
    out.push_back(modular_relation_check(d));
  }
  return out;
}

}  // namespace ptcat
