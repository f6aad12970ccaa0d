#pragma once

#include <utility>

#include "ptcat/cyclotomic.hpp"

namespace ptcat {

/// Floor of an exact rational.
Integer rational_floor(const Rational& q);
/// Fractional part in [0,1).
Rational rational_mod1(const Rational& q);

/// An open interval on the unit circle together with a continuous choice of
/// argument, recorded as rational endpoint lifts in units of full turns.
/// Two intervals whose lifts differ by the same integer cover the same
/// circle arc but carry different argument functions and are distinct.
struct ArgInterval {
  Rational a;
  Rational b;

  ArgInterval(Rational lo, Rational hi);

  friend bool operator==(const ArgInterval& x, const ArgInterval& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const ArgInterval& x, const ArgInterval& y) {
    return !(x == y);
  }

  std::string str() const;
};

/// True iff i is an arg-valued subinterval of j (same argument branch).
bool contained_in(const ArgInterval& i, const ArgInterval& j);

/// True iff the underlying circle arcs are disjoint.
bool underlying_disjoint(const ArgInterval& i, const ArgInterval& j);

/// True iff i is anticlockwise to j: arcs disjoint and every argument of i
/// lies within one turn above every argument of j.  Rejects overlapping arcs.
bool anticlockwise_to(const ArgInterval& i, const ArgInterval& j);

/// Shift both lifts by t turns.
ArgInterval rotate(const ArgInterval& i, const Rational& t);

/// Relative winding of i over j.  For disjoint arcs this is the unique
/// integer k with i anticlockwise to rotate(j, k); the floor of the start
/// lift difference extends it to every pair, which keeps word evaluation
/// total.
Integer winding(const ArgInterval& i, const ArgInterval& j);

/// Display normalization: shift the start lift into [0,1).
ArgInterval normalized(const ArgInterval& i);

/// A homotopy class of motions of two marked points on the circle, encoded
/// by the argument lifts of the endpoints.  Paths with equal endpoint lifts
/// are the same class.
struct PathClass {
  std::pair<Rational, Rational> start;
  std::pair<Rational, Rational> end;

  PathClass(std::pair<Rational, Rational> s, std::pair<Rational, Rational> e);

  friend bool operator==(const PathClass& p, const PathClass& q) {
    return p.start == q.start && p.end == q.end;
  }
  friend bool operator!=(const PathClass& p, const PathClass& q) {
    return !(p == q);
  }
};

/// The half-turn exchange move: the first point rotates clockwise by 1/2
/// turn while the second stays fixed.  Rejects words whose endpoints would
/// land on the same circle point.
PathClass braid_path(const Rational& first_lift, const Rational& second_lift);

/// Concatenation p then q; junction lifts must match exactly.
PathClass compose(const PathClass& p, const PathClass& q);

/// The constant path at the endpoint of p.
PathClass identity_path_at_end(const PathClass& p);

}  // namespace ptcat
