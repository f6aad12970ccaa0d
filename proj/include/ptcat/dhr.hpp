#pragma once

#include <cstdint>
#include <memory>

#include "ptcat/catext.hpp"

namespace ptcat {

/// Ambient data for localized sector endomorphisms: the pointed model and
/// the fixed reference interval (default: the upper half circle).
struct DhrContext {
  std::shared_ptr<const PointedModel> model;
  ArgInterval ref{Rational(0), Rational(1, 2)};
};

/// A transportable sector endomorphism, given by its charge and the
/// interval it is localized in (always stored as an arg-subinterval of the
/// reference interval).
struct DhrEndo {
  DiscriminantGroup::Elem sector;
  ArgInterval loc;
};

/// Build an endomorphism; the localization's underlying arc must fit in the
/// reference interval (the lift is normalized to sit inside it).
DhrEndo make_endo(const DhrContext& ctx, const DiscriminantGroup::Elem& sector,
                  const ArgInterval& loc);

/// Composite endomorphism: charges add, localized in the smallest
/// arg-subinterval of the reference containing both.
DhrEndo compose(const DhrContext& ctx, const DhrEndo& a, const DhrEndo& b);

/// The statistics phase of the pair, computed by transporting both charges
/// to a staging pair (stg2 anticlockwise to stg1 inside the reference),
/// where the exchange is trivial, and accumulating every crossing along the
/// way.  The value is independent of the admissible staging choice.
Cyc statistics_operator(const DhrContext& ctx, const DhrEndo& a, const DhrEndo& b,
                        const ArgInterval& stg1, const ArgInterval& stg2);

/// Same with a fixed deterministic staging choice.
Cyc statistics_operator(const DhrContext& ctx, const DhrEndo& a, const DhrEndo& b);

/// statistics(b,a) * statistics(a,b); equals the full monodromy phase of
/// the two charges.
Cyc monodromy(const DhrContext& ctx, const DhrEndo& a, const DhrEndo& b);

/// For every sector pair: the statistics phase of a same-interval pair
/// equals the braiding entry of the category, anticlockwise pairs give 1,
/// the value is staging-independent over seeded random choices, and the
/// monodromy matches the discriminant pairing.
Report verify_statistics_braiding(const DhrContext& ctx, std::size_t staging_trials,
                                  std::uint64_t seed);

}  // namespace ptcat
