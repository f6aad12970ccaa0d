#include "ptcat/models.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptcat {

MinimalModelTable minimal_model(long m) {
  if (m < 2) throw std::invalid_argument("minimal_model: need m >= 2");
  MinimalModelTable table;
  table.m = m;
  table.central_charge = Rational(1) - Rational(6) / Rational(m * (m + 1));
  table.central_charge.canonicalize();

  for (long r = 1; r <= m - 1; ++r)
    for (long s = 1; s <= m; ++s) {
      Rational num((m + 1) * r - m * s);
      Rational h = (num * num - 1) / Rational(4 * m * (m + 1));
      h.canonicalize();
      table.entries.push_back({r, s, h, Cyc::half_turns(2 * h)});
    }

  for (const auto& e : table.entries) {
    std::pair<long, long> self{e.r, e.s};
    std::pair<long, long> mirror{m - e.r, m + 1 - e.s};
    if (self <= mirror) table.reduced.push_back(e);
  }
  std::sort(table.reduced.begin(), table.reduced.end(),
            [](const auto& x, const auto& y) {
              return std::pair{x.r, x.s} < std::pair{y.r, y.s};
            });

  table.generating_set.emplace_back(1, 2);
  if (m >= 3) table.generating_set.emplace_back(2, 2);
  return table;
}

HeisenbergSector::HeisenbergSector(std::vector<std::vector<Rational>> gram,
                                   std::vector<Rational> v)
    : ambient(std::move(gram)), weight(std::move(v)) {
  std::size_t n = ambient.size();
  if (weight.size() != n)
    throw std::invalid_argument("HeisenbergSector: dimension mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (ambient[i].size() != n)
      throw std::invalid_argument("HeisenbergSector: ambient Gram must be square");
    for (std::size_t j = 0; j < n; ++j)
      if (ambient[i][j] != ambient[j][i])
        throw std::invalid_argument("HeisenbergSector: ambient Gram must be symmetric");
  }
  for (auto& row : ambient)
    for (auto& x : row) x.canonicalize();
  for (auto& x : weight) x.canonicalize();
}

namespace {
void require_same_ambient(const HeisenbergSector& x, const HeisenbergSector& y) {
  if (x.ambient != y.ambient)
    throw std::invalid_argument("heisenberg: ambient spaces differ");
}
}  // namespace

Rational heisenberg_pairing(const HeisenbergSector& x, const HeisenbergSector& y) {
  require_same_ambient(x, y);
  Rational sum = 0;
  for (std::size_t i = 0; i < x.weight.size(); ++i)
    for (std::size_t j = 0; j < y.weight.size(); ++j)
      if (x.weight[i] != 0 && y.weight[j] != 0)
        sum += x.weight[i] * x.ambient[i][j] * y.weight[j];
  sum.canonicalize();
  return sum;
}

HeisenbergSector heisenberg_fusion(const HeisenbergSector& x, const HeisenbergSector& y) {
  require_same_ambient(x, y);
  std::vector<Rational> sum = x.weight;
  for (std::size_t i = 0; i < sum.size(); ++i) {
    sum[i] += y.weight[i];
    sum[i].canonicalize();
  }
  return HeisenbergSector(x.ambient, std::move(sum));
}

Cyc heisenberg_braid_phase(const HeisenbergSector& x, const HeisenbergSector& y) {
  return Cyc::half_turns(heisenberg_pairing(x, y));
}

}  // namespace ptcat
