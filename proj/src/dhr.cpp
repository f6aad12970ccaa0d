#include "ptcat/dhr.hpp"

#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ptcat {

namespace {

// Shift an interval by a whole number of turns so it sits inside the
// reference as an arg-subinterval, when the underlying arc fits at all.
ArgInterval align_into(const ArgInterval& i, const ArgInterval& ref) {
  Rational lo = ref.a - i.a;        // admissible shift window [lo, hi]
  Rational hi = ref.b - i.b;
  Integer n = rational_floor(hi);
  if (Rational(n) < lo)
    throw std::invalid_argument("localization does not fit in the reference interval");
  return rotate(i, Rational(n));
}

Rational charge_pairing(const DhrContext& ctx, const DhrEndo& a, const DhrEndo& b) {
  const auto& g = ctx.model->group;
  return g.gram().pairing(g.section(a.sector), g.section(b.sector));
}

}  // namespace

DhrEndo make_endo(const DhrContext& ctx, const DiscriminantGroup::Elem& sector,
                  const ArgInterval& loc) {
  return DhrEndo{sector, align_into(loc, ctx.ref)};
}

DhrEndo compose(const DhrContext& ctx, const DhrEndo& a, const DhrEndo& b) {
  Rational lo = std::min(a.loc.a, b.loc.a);
  Rational hi = std::max(a.loc.b, b.loc.b);
  ArgInterval hull(lo, hi);
  if (!contained_in(hull, ctx.ref))
    throw std::invalid_argument("compose: hull leaves the reference interval");
  return DhrEndo{ctx.model->group.add(a.sector, b.sector), hull};
}

Cyc statistics_operator(const DhrContext& ctx, const DhrEndo& a, const DhrEndo& b,
                        const ArgInterval& stg1, const ArgInterval& stg2) {
  if (!contained_in(stg1, ctx.ref) || !contained_in(stg2, ctx.ref))
    throw std::invalid_argument("statistics_operator: staging must lie in the reference");
  if (!anticlockwise_to(stg2, stg1))
    throw std::invalid_argument(
        "statistics_operator: second staging interval must be anticlockwise to the first");
  for (const ArgInterval* stg : {&stg1, &stg2})
    for (const ArgInterval* loc : {&a.loc, &b.loc})
      if (!underlying_disjoint(*stg, *loc))
        throw std::invalid_argument(
            "statistics_operator: staging must stay clear of both localizations");

  // Transport both charges to the staging pair, exchange there for free,
  // and transport back.  Every phase below is an evaluation ratio of
  // two-insertion words: the legs pick up their crossings over the other
  // charge, the start and staging configurations contribute their exchange
  // phases.
  const PointedModel& model = *ctx.model;
  RatVec va = model.group.section(a.sector), vb = model.group.section(b.sector);
  auto pair_phase = [&](const RatVec& v1, const ArgInterval& i1, const RatVec& v2,
                        const ArgInterval& i2) {
    return insertion_phase(model, {Insertion{v1, i1}, Insertion{v2, i2}});
  };
  // Frame change of moving the first charge from `from` to `to` with the
  // second as spectator.
  auto leg = [&](const RatVec& mover, const ArgInterval& from, const ArgInterval& to,
                 const RatVec& spectator, const ArgInterval& at) {
    return pair_phase(mover, to, spectator, at) * pair_phase(mover, from, spectator, at).inv();
  };
  // Exchange phase of the two charge orders.  For disjoint arcs this equals
  // the evaluation ratio of the two orders; coincident localizations are
  // resolved by an infinitesimal anticlockwise perturbation of the first
  // charge, which keeps the odd winding multiple.
  Rational pairing = charge_pairing(ctx, a, b);
  auto swap_phase = [&](const ArgInterval& i1, const ArgInterval& i2) {
    return Cyc::half_turns(pairing * Rational(2 * winding(i1, i2) + 1));
  };

  Cyc out = leg(va, a.loc, stg1, vb, b.loc);          // charge a out
  out *= leg(vb, b.loc, stg2, va, stg1).inv();        // charge b out
  out *= leg(va, stg1, a.loc, vb, stg2);              // charge a back
  out *= leg(vb, stg2, b.loc, va, a.loc).inv();       // charge b back
  out *= swap_phase(a.loc, b.loc);                    // original configuration
  out *= swap_phase(stg1, stg2).inv();                // free exchange at staging
  return out;
}

Cyc statistics_operator(const DhrContext& ctx, const DhrEndo& a, const DhrEndo& b) {
  // First admissible pair of narrow slots clear of both localizations.
  Rational w = ctx.ref.b - ctx.ref.a;
  std::vector<ArgInterval> clear;
  for (unsigned long n = 0; n < 64 && clear.size() < 2; ++n) {
    ArgInterval slot(ctx.ref.a + w * Rational(2 * n, 128),
                     ctx.ref.a + w * Rational(2 * n + 1, 128));
    if (underlying_disjoint(slot, a.loc) && underlying_disjoint(slot, b.loc))
      clear.push_back(slot);
  }
  if (clear.size() < 2)
    throw std::invalid_argument("statistics_operator: no staging room in the reference");
  return statistics_operator(ctx, a, b, clear[0], clear[1]);
}

Cyc monodromy(const DhrContext& ctx, const DhrEndo& a, const DhrEndo& b) {
  return statistics_operator(ctx, b, a) * statistics_operator(ctx, a, b);
}

Report verify_statistics_braiding(const DhrContext& ctx, std::size_t staging_trials,
                                  std::uint64_t seed) {
  Report rep;
  rep.suite = "dhr-statistics";
  const auto& group = ctx.model->group;
  const auto elems = group.elements();
  std::mt19937_64 rng(seed);

  Rational w = ctx.ref.b - ctx.ref.a;
  auto slot = [&](unsigned long num, unsigned long den) {
    return ArgInterval(ctx.ref.a + w * Rational(num, den),
                       ctx.ref.a + w * Rational(num + 1, den));
  };
  ArgInterval lower = slot(2, 16), upper = slot(11, 16), shared = slot(6, 16);

  auto random_staging = [&](const DhrEndo& a, const DhrEndo& b) {
    std::uniform_int_distribution<unsigned long> num(0, 29);
    while (true) {
      unsigned long n1 = num(rng), n2 = num(rng);
      if (n1 + 1 >= n2) continue;
      ArgInterval s1 = slot(n1, 32), s2 = slot(n2, 32);
      if (underlying_disjoint(s1, a.loc) && underlying_disjoint(s1, b.loc) &&
          underlying_disjoint(s2, a.loc) && underlying_disjoint(s2, b.loc))
        return std::pair{s1, s2};
    }
  };

  for (const auto& x : elems)
    for (const auto& y : elems) {
      std::string loc_label = group.label(x) + "," + group.label(y);

      // Same-interval pair reproduces the braiding entry.
      DhrEndo rx = make_endo(ctx, x, shared), ry = make_endo(ctx, y, shared);
      ++rep.checks_run;
      Cyc same = statistics_operator(ctx, rx, ry);
      if (same != ctx.model->r_entry(x, y))
        rep.add("statistics-vs-braiding", loc_label,
                "same-interval statistics phase differs from the R entry");

      // Anticlockwise configuration is trivial.
      DhrEndo lo = make_endo(ctx, x, lower), hi = make_endo(ctx, y, upper);
      ++rep.checks_run;
      if (!statistics_operator(ctx, lo, hi).is_one())
        rep.add("statistics-anticlockwise", loc_label,
                "anticlockwise pair must have trivial statistics");

      // Staging independence.
      for (std::size_t t = 0; t < staging_trials; ++t) {
        auto [s1, s2] = random_staging(rx, ry);
        ++rep.checks_run;
        if (statistics_operator(ctx, rx, ry, s1, s2) != same) {
          rep.add("staging-independence", loc_label, "statistics depends on the staging choice");
          break;
        }
        auto [s3, s4] = random_staging(lo, hi);
        ++rep.checks_run;
        if (!statistics_operator(ctx, lo, hi, s3, s4).is_one()) {
          rep.add("staging-independence", loc_label,
                  "anticlockwise statistics depends on the staging choice");
          break;
        }
      }

      // Monodromy equals the discriminant pairing phase.
      ++rep.checks_run;
      Cyc mono = monodromy(ctx, rx, ry);
      Cyc expected = Cyc::half_turns(2 * group.pairing(x, y));
      if (mono != expected)
        rep.add("monodromy", loc_label, "monodromy differs from the pairing phase");
    }
  return rep;
}

}  // namespace ptcat
