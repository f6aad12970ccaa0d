#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ptcat/cyclotomic.hpp"
#include "ptcat/fusion.hpp"

namespace ptcat {

using IntMat = std::vector<std::vector<Integer>>;
using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

/// Symmetric integer matrix with even diagonal and nonzero determinant.
struct GramMatrix {
  IntMat entries;

  explicit GramMatrix(IntMat m);

  std::size_t rank() const { return entries.size(); }
  Integer determinant() const;

  /// Exact pairing x^T G y of rational coordinate vectors.
  Rational pairing(const RatVec& x, const RatVec& y) const;
};

struct SmithResult {
  IntMat u;  // unimodular
  IntMat d;  // diagonal, d_1 | d_2 | ..., nonnegative
  IntMat v;  // unimodular
};

/// U M V = D with U, V unimodular and D in Smith form.  Deterministic for a
/// fixed pivoting rule (smallest absolute nonzero entry, row-major ties).
SmithResult smith_normal_form(const IntMat& m);

/// The quotient of the dual lattice by the lattice, with a fixed section.
/// Elements are tuples (a_1, ..., a_r) with 0 <= a_i < d_i over the
/// invariant factors d_i > 1.  The section sends a generator tuple to a
/// fixed dual vector in lattice-basis coordinates, extended by integer
/// combinations with coefficients in [0, d_i).
class DiscriminantGroup {
 public:
  using Elem = std::vector<long>;

  DiscriminantGroup(GramMatrix gram, std::vector<long> factors,
                    std::vector<RatVec> generator_reps);

  const GramMatrix& gram() const { return gram_; }
  const std::vector<long>& invariant_factors() const { return factors_; }
  const std::vector<RatVec>& generator_reps() const { return gens_; }

  std::size_t order() const;
  Elem zero() const { return Elem(factors_.size(), 0); }
  Elem add(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  bool is_zero(const Elem& x) const;

  /// Enumeration of all elements in mixed-radix order, zero first.
  std::vector<Elem> elements() const;
  std::size_t index_of(const Elem& x) const;
  Elem element(std::size_t index) const;
  std::string label(const Elem& x) const;

  /// Section representative in Upsilon-dual, lattice-basis coordinates.
  RatVec section(const Elem& x) const;
  /// Exact pairing of section representatives.
  Rational pairing(const Elem& x, const Elem& y) const;
  /// Self-pairing reduced into [0,2): section-independent.
  Rational q_value(const Elem& x) const;
  /// Pairing reduced into [0,1): section-independent.
  Rational bilinear(const Elem& x, const Elem& y) const;

  /// s(x) + s(y) - s(x+y): an integer vector in the lattice.
  IntVec section_defect(const Elem& x, const Elem& y) const;

 private:
  GramMatrix gram_;
  std::vector<long> factors_;
  std::vector<RatVec> gens_;
};

/// Build the discriminant group with the default deterministic section.
/// Generator representatives start at coordinates in [0,1) in the Smith
/// basis; when cross-pairings of the scaled generators come out odd the
/// representatives are shifted by a deterministic search over small lattice
/// vectors so that the induced associator satisfies the pentagon.
DiscriminantGroup discriminant_group(const GramMatrix& g);

/// Same group with every generator representative shifted by the given
/// lattice vectors (one integer vector per invariant factor).  Used to
/// exercise section-independence.
DiscriminantGroup discriminant_group_shifted(const GramMatrix& g,
                                             const std::vector<IntVec>& shifts);

/// Bilinear sign cocycle on lattice vectors: on basis vectors
/// eps(e_i, e_j) = (-1)^{(e_i|e_j)} for i > j and 1 otherwise, extended
/// biadditively.
Cyc epsilon(const GramMatrix& g, const IntVec& alpha, const IntVec& beta);

/// The pointed braided category of the discriminant form:
///   labels      the group elements,
///   N(x,y,z)    = [z = x + y],
///   R(x,y)      = exp(i pi (s(x)|s(y))),
///   F(x,y,z)    = exp(i pi (s(x)| s(y)+s(z)-s(y+z))),
///   twist(x)    = exp(i pi (s(x)|s(x))).
/// The output is re-verified by every fusion validator; a failure there is
/// raised as a logic error.
FusionData build_pointed_mtc(const GramMatrix& g);
FusionData build_pointed_mtc(const DiscriminantGroup& group);

/// Parse "2 -1; -1 2" style text (rows split by ';') into a Gram matrix.
GramMatrix parse_gram(const std::string& text);

}  // namespace ptcat
