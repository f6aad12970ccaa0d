#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ptcat/circle.hpp"
#include "ptcat/fusion.hpp"
#include "ptcat/lattice.hpp"
#include "ptcat/report.hpp"

namespace ptcat {

/// A discriminant group together with its pointed category; the ambient
/// data every word is evaluated against.
struct PointedModel {
  DiscriminantGroup group;
  FusionData category;

  using Elem = DiscriminantGroup::Elem;

  /// R entry on the (x,y) channel.
  Cyc r_entry(const Elem& x, const Elem& y) const;
  /// F entry for the triple (a,b,c) through the unique channels.
  Cyc f3_entry(const Elem& a, const Elem& b, const Elem& c) const;
};

std::shared_ptr<const PointedModel> build_pointed_model(const GramMatrix& g);

enum class Side : std::uint8_t { left, right };

/// One creation operator in a word: a sector attached to an arg-valued
/// interval, acting from the left or from the right.  Adjoint generators
/// carry the negated sector representative and conjugated phases.
struct Generator {
  Side side = Side::left;
  DiscriminantGroup::Elem sector;
  ArgInterval interval;
  bool adjoint = false;
};

/// A formal word of creation operators.  Operators are stored in
/// application order: ops[0] acts on the vacuum first.
struct ExtWord {
  std::shared_ptr<const PointedModel> model;
  std::vector<Generator> ops;

  explicit ExtWord(std::shared_ptr<const PointedModel> m) : model(std::move(m)) {}

  ExtWord& apply(const Generator& g) {
    ops.push_back(g);
    return *this;
  }
  ExtWord& apply_left(const DiscriminantGroup::Elem& sector, const ArgInterval& i) {
    return apply({Side::left, sector, i, false});
  }
  ExtWord& apply_right(const DiscriminantGroup::Elem& sector, const ArgInterval& i) {
    return apply({Side::right, sector, i, false});
  }
};

/// A charge insertion of the evaluation model: a dual-lattice vector at an
/// arg-valued interval.
struct Insertion {
  RatVec vec;
  ArgInterval interval;
};

struct WordValue {
  DiscriminantGroup::Elem sector;
  Cyc phase;

  friend bool operator==(const WordValue& x, const WordValue& y) {
    return x.sector == y.sector && x.phase == y.phase;
  }
  friend bool operator!=(const WordValue& x, const WordValue& y) { return !(x == y); }
};

/// The ordered product of charge insertions a word denotes: left operators
/// prepend, right operators append.
std::vector<Insertion> insertions_of(const ExtWord& w);

/// Phase of an insertion product relative to the reference trivialization:
/// the product over product-ordered pairs s < t of
/// exp(i pi (v_s|v_t) (winding(I_s, I_t) + 1)).
Cyc insertion_phase(const PointedModel& m, const std::vector<Insertion>& list);

/// Total evaluation: the fused sector and the phase of the word.
WordValue eval_word(const ExtWord& w);

/// Intervals (base + k*step) placed anticlockwise-increasingly inside the
/// upper half circle, pairwise disjoint; slot u hosts the u-th applied
/// generator of a standard word.
std::vector<ArgInterval> standard_intervals(std::size_t n);

/// Phase predicted by the category data alone for the canonical left word
/// with the given sector sequence (application order) in standard position:
/// the product over steps of R entries dressed by F entries tracking the
/// section defect.
Cyc skeletal_word_phase(const PointedModel& m,
                        const std::vector<DiscriminantGroup::Elem>& sectors);

/// Left/right commutation on every probe: the two operator orders evaluate
/// identically (including the adjoint variant), and the winding calculus
/// reproduces the braiding expansion of the right operator from the
/// category entries.  Pre: i anticlockwise to j; probe intervals disjoint
/// from j's arc.
bool check_locality(const std::shared_ptr<const PointedModel>& m,
                    const DiscriminantGroup::Elem& lambda, const ArgInterval& i,
                    const DiscriminantGroup::Elem& mu, const ArgInterval& j,
                    const ExtWord& probe);

/// Exchange of two left operators differs by exactly the R entry of the
/// pointed data.  Pre: i anticlockwise to j with a common covering interval.
bool check_braid_statistics(const std::shared_ptr<const PointedModel>& m,
                            const DiscriminantGroup::Elem& lambda, const ArgInterval& i,
                            const DiscriminantGroup::Elem& mu, const ArgInterval& j,
                            const ExtWord& probe);

/// Two nested left operators equal the single fused operator on the cover,
/// up to the coherence phase predicted by the R and F entries.  Pre: i and
/// j contained in cover; probe intervals disjoint from the cover's arc.
bool check_fusion_merge(const std::shared_ptr<const PointedModel>& m,
                        const DiscriminantGroup::Elem& lambda, const ArgInterval& i,
                        const DiscriminantGroup::Elem& mu, const ArgInterval& j,
                        const ArgInterval& cover, const ExtWord& probe);

/// A product of right operators in anticlockwise order equals the braided
/// composite of the reversed left word, with the braiding phase computed
/// from the category entries.  Pre: intervals pairwise disjoint inside
/// cover, each anticlockwise to its predecessor; probe disjoint from cover.
bool check_r_order_reversal(const std::shared_ptr<const PointedModel>& m,
                            const std::vector<DiscriminantGroup::Elem>& sectors,
                            const std::vector<ArgInterval>& intervals,
                            const ArgInterval& cover, const ExtWord& probe);

/// Replays the hexagon derivation at the word level on the triple (i,j,k):
/// the elementary exchange and merge phases of the winding model match the
/// R and F entries, and the hexagon equation itself holds on those entries.
bool derive_hexagon(const std::shared_ptr<const PointedModel>& m,
                    const DiscriminantGroup::Elem& i, const DiscriminantGroup::Elem& j,
                    const DiscriminantGroup::Elem& k);

struct ClosureResult {
  std::vector<DiscriminantGroup::Elem> reachable;
  Report report;
};

/// Subgroup generated by the given sectors, with a path-independence check:
/// two distinct factorizations of each reachable sector evaluate to the
/// phases the category entries predict.
ClosureResult closure_from_generators(const std::shared_ptr<const PointedModel>& m,
                                      const std::vector<DiscriminantGroup::Elem>& gens);

/// Seeded random words subjected to random legal exchange/merge rewrites;
/// every rewrite path must preserve (tracked phase) x (evaluated phase).
Report confluence_trials(const std::shared_ptr<const PointedModel>& m,
                         std::size_t trials, std::size_t max_len, std::uint64_t seed);

/// Neutrality, isotony, locality (with adjoints), braid statistics, fusion
/// merge and right-order reversal, exhaustively over sectors and over
/// several interval configurations each.
Report catext_axiom_suite(const std::shared_ptr<const PointedModel>& m);

/// derive_hexagon over every sector triple.
Report hexagon_derivation_suite(const std::shared_ptr<const PointedModel>& m);

}  // namespace ptcat
