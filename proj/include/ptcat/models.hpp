#pragma once

#include <utility>
#include <vector>

#include "ptcat/cyclotomic.hpp"

namespace ptcat {

/// Discrete-series Virasoro data: central charge, conformal weights and the
/// induced twists.  Data only; no fusion rules are emitted.
struct MinimalModelTable {
  struct Entry {
    long r;
    long s;
    Rational h;
    Cyc twist;  // e^{2 pi i h}
  };

  long m = 2;
  Rational central_charge;
  std::vector<Entry> entries;         // full Kac range
  std::vector<Entry> reduced;         // one entry per Kac orbit, lex smallest
  std::vector<std::pair<long, long>> generating_set;
};

/// Table for the series point m >= 2: c = 1 - 6/(m(m+1)) and
/// h_{r,s} = (((m+1)r - ms)^2 - 1) / (4m(m+1)) over 1 <= r <= m-1,
/// 1 <= s <= m.  Orbits are identified under (r,s) ~ (m-r, m+1-s).
MinimalModelTable minimal_model(long m);

/// A charged sector of the rank-n free boson: a rational vector in an
/// ambient space with a fixed rational symmetric pairing.
struct HeisenbergSector {
  std::vector<std::vector<Rational>> ambient;  // symmetric Gram of the pairing
  std::vector<Rational> weight;

  HeisenbergSector(std::vector<std::vector<Rational>> gram, std::vector<Rational> v);
};

/// Exact pairing (lambda|mu); ambient spaces must agree.
Rational heisenberg_pairing(const HeisenbergSector& x, const HeisenbergSector& y);

/// The fused sector lambda + mu; ambient spaces must agree.
HeisenbergSector heisenberg_fusion(const HeisenbergSector& x, const HeisenbergSector& y);

/// Exchange phase e^{i pi (lambda|mu)} as an exact root of unity.
Cyc heisenberg_braid_phase(const HeisenbergSector& x, const HeisenbergSector& y);

}  // namespace ptcat
