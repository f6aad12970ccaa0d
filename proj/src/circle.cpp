#include "ptcat/circle.hpp"

#include <sstream>
#include <stdexcept>

namespace ptcat {

Integer rational_floor(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

Rational rational_mod1(const Rational& q) {
  Rational r = q - Rational(rational_floor(q));
  r.canonicalize();
  return r;
}

ArgInterval::ArgInterval(Rational lo, Rational hi) : a(std::move(lo)), b(std::move(hi)) {
  a.canonicalize();
  b.canonicalize();
  Rational len = b - a;
  if (!(len > 0 && len < 1))
    throw std::invalid_argument("ArgInterval: need 0 < b - a < 1");
}

std::string ArgInterval::str() const {
  std::ostringstream os;
  os << "(" << a.get_str() << ", " << b.get_str() << ")";
  return os.str();
}

bool contained_in(const ArgInterval& i, const ArgInterval& j) {
  return j.a <= i.a && i.b <= j.b;
}

bool underlying_disjoint(const ArgInterval& i, const ArgInterval& j) {
  // Shift j's arc so its start lands in [i.a, i.a + 1), then compare arcs.
  Rational shift(rational_floor(j.a - i.a));
  Rational ja = j.a - shift, jb = j.b - shift;
  if (ja == i.a) return false;  // arcs start at the same point
  return (i.b <= ja) && (jb <= i.a + 1);
}

bool anticlockwise_to(const ArgInterval& i, const ArgInterval& j) {
  if (!underlying_disjoint(i, j))
    throw std::invalid_argument("anticlockwise_to: arcs overlap");
  return j.b <= i.a && i.b <= j.a + 1;
}

ArgInterval rotate(const ArgInterval& i, const Rational& t) {
  return ArgInterval(i.a + t, i.b + t);
}

Integer winding(const ArgInterval& i, const ArgInterval& j) {
  return rational_floor(i.a - j.a);
}

ArgInterval normalized(const ArgInterval& i) {
  Rational shift(rational_floor(i.a));
  return ArgInterval(i.a - shift, i.b - shift);
}

namespace {
bool same_circle_point(const Rational& x, const Rational& y) {
  return rational_mod1(x - y) == 0;
}
}  // namespace

PathClass::PathClass(std::pair<Rational, Rational> s, std::pair<Rational, Rational> e)
    : start(std::move(s)), end(std::move(e)) {
  start.first.canonicalize();
  start.second.canonicalize();
  end.first.canonicalize();
  end.second.canonicalize();
  if (same_circle_point(start.first, start.second) ||
      same_circle_point(end.first, end.second))
    throw std::invalid_argument("PathClass: marked points must stay distinct");
}

PathClass braid_path(const Rational& first_lift, const Rational& second_lift) {
  if (same_circle_point(first_lift, second_lift))
    throw std::invalid_argument("braid_path: points coincide");
  Rational moved = first_lift - Rational(1, 2);
  if (same_circle_point(moved, second_lift))
    throw std::invalid_argument("braid_path: endpoints collide");
  return PathClass({first_lift, second_lift}, {moved, second_lift});
}

PathClass compose(const PathClass& p, const PathClass& q) {
  if (p.end != q.start)
    throw std::invalid_argument("compose: junction lifts do not match");
  return PathClass(p.start, q.end);
}

PathClass identity_path_at_end(const PathClass& p) {
  return PathClass(p.end, p.end);
}

}  // namespace ptcat
