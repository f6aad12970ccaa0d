#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptcat/cyclotomic.hpp"
#include "ptcat/report.hpp"

namespace ptcat {

/// Skeletal data of a multiplicity-free fusion category with braiding and
/// twist.  All structure scalars live in one cyclotomic field.
///
/// Index conventions, fixed once and used by every validator:
///   * N(i,j,k) in {0,1} is the dimension of the (i,j) -> k fusion channel.
///   * F-symbols are keyed by (a,b,c,d,m,n): the associativity scalar
///     relating ((a b) c) -> d through m = a*b against (a (b c)) -> d
///     through n = b*c.  Unit-strict gauge: entries with a, b or c equal to
///     the unit must be 1.
///   * R-symbols are keyed by (a,b,c): the braiding scalar on the channel
///     a*b -> c, for the exchange that moves the left factor anticlockwise
///     past the right one.
///   * twist[i] is the ribbon scalar of object i.
struct FusionData {
  std::vector<std::string> labels;
  std::size_t unit = 0;
  std::vector<std::size_t> dual;
  std::vector<unsigned char> fusion;  // row-major (i*L + j)*L + k
  std::map<std::array<std::size_t, 6>, Cyc> f_symbols;
  std::map<std::array<std::size_t, 3>, Cyc> r_symbols;
  std::vector<Cyc> twists;
  unsigned long cyclotomic_order = 1;

  std::size_t size() const { return labels.size(); }

  unsigned char n(std::size_t i, std::size_t j, std::size_t k) const {
    return fusion[(i * size() + j) * size() + k];
  }

  bool f_admissible(std::size_t a, std::size_t b, std::size_t c, std::size_t d,
                    std::size_t m, std::size_t nn) const {
    return n(a, b, m) && n(m, c, d) && n(b, c, nn) && n(a, nn, d);
  }

  /// F entry on an admissible tuple; nullopt when the entry is missing.
  std::optional<Cyc> f(std::size_t a, std::size_t b, std::size_t c, std::size_t d,
                       std::size_t m, std::size_t nn) const;
  std::optional<Cyc> r(std::size_t a, std::size_t b, std::size_t c) const;

  /// Label index lookup; throws on unknown label.
  std::size_t index_of(const std::string& label) const;
};

/// Unit, duality and associativity of the fusion coefficients, plus the
/// multiplicity-free bound.
Report verify_fusion_ring(const FusionData& d);

/// Pentagon identity over all admissible label tuples, together with the
/// structural requirements on F (defined and nonzero exactly on admissible
/// tuples, unit-strict gauge).
Report verify_pentagon(const FusionData& d);

/// Both hexagon identities relating R against F.
Report verify_hexagon(const FusionData& d);

/// Balancing: twist(c) = R(b,a,c) R(a,b,c) twist(a) twist(b) on admissible
/// channels, twist(unit) = 1.  For pointed data the twist must also equal
/// the self-braiding scalar R(a,a), the dimension-one case of the anyon
/// twist formula; this pins the ribbon structure to the braiding.
Report verify_ribbon(const FusionData& d);

/// True iff every object is invertible (each (i,j) fuses to exactly one k).
bool is_pointed(const FusionData& d);

struct PointedModularData {
  std::vector<std::vector<Cyc>> s;  // unnormalized: inverse monodromy
  std::vector<Cyc> t;               // diagonal of twists
  Cyc gauss_sum;
};

/// Unnormalized S and T data of a pointed braided category.  Rejects
/// non-pointed input.
PointedModularData pointed_modular_data(const FusionData& d);

/// Recover the fusion coefficients from S via the exact pointed Verlinde
/// sum N(i,j,k) = (1/|L|) sum_s S_is S_js conj(S_ks).
Report verlinde_check(const FusionData& d);

/// Exact modular consistency for pointed data:
///   S conj(S)^T = |L| I,   S S^T = |L| C  (C = dual permutation),
///   (S T)^3 = g S^2   with g the Gauss sum.
/// A degenerate S or vanishing g is reported as non-modular, not thrown.
Report modular_relation_check(const FusionData& d);

/// Every validator in dependency order; stops adding suites after the first
/// failing stage but always reports what ran.
std::vector<Report> verify_all(const FusionData& d);

}  // namespace ptcat
