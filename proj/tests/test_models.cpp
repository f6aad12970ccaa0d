#include <doctest.h>

#include <algorithm>
#include <random>

#include "ptcat/models.hpp"

using ptcat::Cyc;
using ptcat::HeisenbergSector;
using ptcat::Rational;

namespace {

// Independent weight oracle on plain machine integers.
struct Frac {
  long long num, den;
  static long long gcd(long long a, long long b) { return b ? gcd(b, a % b) : (a < 0 ? -a : a); }
  static Frac make(long long n, long long d) {
    long long g = gcd(n, d);
    if (g == 0) g = 1;
    if (d < 0) g = -g;
    return {n / g, d / g};
  }
  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
  bool operator<(const Frac& o) const { return num * o.den < o.num * den; }
};

Frac oracle_weight(long long m, long long r, long long s) {
  long long top = (m + 1) * r - m * s;
  return Frac::make(top * top - 1, 4 * m * (m + 1));
}

Rational to_rational(const Frac& f) {
  return Rational(static_cast<long>(f.num)) / Rational(static_cast<long>(f.den));
}

std::vector<std::vector<Rational>> gram1(long diag) {
  return {{Rational(diag)}};
}

}  // namespace

TEST_CASE("series endpoints") {
  auto t2 = ptcat::minimal_model(2);
  CHECK(t2.central_charge == Rational(0));
  for (const auto& e : t2.entries) CHECK(e.h == Rational(0));

  auto t3 = ptcat::minimal_model(3);
  CHECK(t3.central_charge == Rational(1, 2));
  std::vector<Rational> weights;
  for (const auto& e : t3.reduced) weights.push_back(e.h);
  std::sort(weights.begin(), weights.end(), [](const Rational& a, const Rational& b) {
    return a < b;
  });
  CHECK(weights == std::vector<Rational>{Rational(0), Rational(1, 16), Rational(1, 2)});

  auto t4 = ptcat::minimal_model(4);
  CHECK(t4.central_charge == Rational(7, 10));
  bool found = false;
  for (const auto& e : t4.entries)
    if (e.r == 2 && e.s == 2) {
      CHECK(e.h == Rational(3, 80));
      found = true;
    }
  CHECK(found);

  CHECK_THROWS_AS(ptcat::minimal_model(1), std::invalid_argument);
}

TEST_CASE("weights match the independent oracle") {
  for (long m = 2; m <= 12; ++m) {
    auto table = ptcat::minimal_model(m);
    for (const auto& e : table.entries)
      CHECK(e.h == to_rational(oracle_weight(m, e.r, e.s)));
  }
}

TEST_CASE("kac symmetry and deduplication") {
  for (long m = 2; m <= 20; ++m) {
    auto table = ptcat::minimal_model(m);
    for (const auto& e : table.entries) {
      long r2 = m - e.r, s2 = m + 1 - e.s;
      bool found = false;
      for (const auto& o : table.entries)
        if (o.r == r2 && o.s == s2) {
          CHECK(o.h == e.h);
          found = true;
        }
      CHECK(found);
    }
    // Reduced keeps the lexicographically smallest orbit member.
    for (const auto& e : table.reduced) {
      std::pair<long, long> self{e.r, e.s}, mirror{m - e.r, m + 1 - e.s};
      CHECK(self <= mirror);
    }
    CHECK(2 * table.reduced.size() >= table.entries.size());
  }
}

TEST_CASE("twists are exact phases of the weights") {
  auto t3 = ptcat::minimal_model(3);
  for (const auto& e : t3.entries) CHECK(e.twist == Cyc::half_turns(2 * e.h));
  CHECK(t3.generating_set ==
        std::vector<std::pair<long, long>>{{1, 2}, {2, 2}});
  CHECK(ptcat::minimal_model(2).generating_set ==
        std::vector<std::pair<long, long>>{{1, 2}});
}

TEST_CASE("charged sector fusion") {
  HeisenbergSector zero(gram1(2), {Rational(0)});
  HeisenbergSector half(gram1(2), {Rational(1, 2)});
  CHECK(ptcat::heisenberg_fusion(half, zero).weight == half.weight);
  CHECK(ptcat::heisenberg_fusion(half, half).weight == std::vector<Rational>{Rational(1)});

  HeisenbergSector other(gram1(4), {Rational(1, 2)});
  CHECK_THROWS_AS(ptcat::heisenberg_fusion(half, other), std::invalid_argument);

  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> num(-8, 8);
  for (int trial = 0; trial < 100; ++trial) {
    HeisenbergSector a(gram1(2), {Rational(num(rng), 4)});
    HeisenbergSector b(gram1(2), {Rational(num(rng), 4)});
    CHECK(ptcat::heisenberg_fusion(a, b).weight == ptcat::heisenberg_fusion(b, a).weight);
  }
}

TEST_CASE("exchange phases") {
  HeisenbergSector zero(gram1(2), {Rational(0)});
  HeisenbergSector half(gram1(2), {Rational(1, 2)});
  CHECK(ptcat::heisenberg_braid_phase(half, zero) == Cyc::one());
  CHECK(ptcat::heisenberg_braid_phase(half, half) == Cyc::root_of_unity(4, 1));

  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> num(-6, 6);
  auto rand_sector = [&]() {
    Rational w(num(rng), 4);
    w.canonicalize();
    return HeisenbergSector(gram1(2), {w});
  };
  for (int trial = 0; trial < 100; ++trial) {
    HeisenbergSector a = rand_sector(), b = rand_sector(), c = rand_sector();
    // Monodromy identity.
    CHECK(ptcat::heisenberg_braid_phase(a, b) * ptcat::heisenberg_braid_phase(b, a) ==
          Cyc::half_turns(2 * ptcat::heisenberg_pairing(a, b)));
    // Bimultiplicativity.
    CHECK(ptcat::heisenberg_braid_phase(ptcat::heisenberg_fusion(a, c), b) ==
          ptcat::heisenberg_braid_phase(a, b) * ptcat::heisenberg_braid_phase(c, b));
  }
  // Integer vectors in an even lattice: the phase squares to one and the
  // self-phase is trivial.
  for (long k = -4; k <= 4; ++k) {
    HeisenbergSector v(gram1(2), {Rational(k)});
    CHECK(ptcat::heisenberg_braid_phase(v, v) == Cyc::one());
    for (long l = -4; l <= 4; ++l) {
      HeisenbergSector w(gram1(2), {Rational(l)});
      Cyc p = ptcat::heisenberg_braid_phase(v, w);
      CHECK(p * p == Cyc::one());
    }
  }
}
