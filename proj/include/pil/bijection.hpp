#ifndef PIL_BIJECTION_HPP
#define PIL_BIJECTION_HPP

/*
 * The staircase transforms between triples and constrained partitions.
 *
 * A triple (n1, n2, mu, eta) describes: the base partition with n1
 * singletons stacked above n2 pairs, a padded partition mu spent moving
 * singletons up (the i-th smallest singleton gains mu_i), and a padded
 * partition eta of multiples of the step spent moving pairs up, largest
 * pair first, eta_i / step forward moves for the i-th smallest pair.
 *
 * A forward move lifts a pair's weight by the step (3 or 4).  Most of
 * the time the pair just slides; when a singleton sits exactly step+1
 * above the pair, the move swaps them in a weight-bumping jump that the
 * trace records as a case step plus an adjustment.  Whenever the slide
 * creates a new streak, the split into pairs and singletons is recomputed
 * and the trace records a regrouping.  Backward moves mirror all of this
 * downward, and a move that would break the family's conditions (or
 * disturb the anchor) raises InadmissibleMove instead.
 */

#include <optional>
#include <string>
#include <vector>

#include "pil/paired.hpp"

namespace pil {

enum class CaseLabel {
    Ia,   /* fwd slide, pair at distance 2 */
    IIa,  /* fwd slide, pair at distance 3 */
    Ib,   /* fwd jump, pair at distance 2 */
    IIb,  /* fwd jump, pair at distance 3 */
    IaB,  /* bwd slide, pair at distance 3; prints as I'a */
    IIaB, /* bwd slide, pair at distance 2; prints as II'a */
    IbB,  /* bwd jump, pair at distance 3; prints as I'b */
    IIbB, /* bwd jump, pair at distance 2; prints as II'b */
    GGa,  /* fwd slide, step-4 pair */
    GGb,  /* fwd jump, step-4 pair */
    GGaB, /* bwd slide, step-4 pair; prints as GG'-a */
    GGbB, /* bwd jump, step-4 pair; prints as GG'-b */
    Regroup,
    Adjust,
};

std::string case_label_to_string(CaseLabel label);

struct TraceStep {
    CaseLabel label;
    /* A jump is recorded in two steps: first the uncorrected snapshot
     * (transient, may violate the family), then the adjustment. */
    bool transient = false;
    std::vector<Item> snapshot;
};

struct MoveTrace {
    std::vector<Item> start;
    /* Forward transform only: base with the singleton shifts applied. */
    std::optional<std::vector<Item>> after_placement;
    std::vector<TraceStep> steps;
};

enum class BaseVariant { plain, anchored };

struct Triple {
    int n1 = 0;
    int n2 = 0;
    PaddedPartition mu;  /* length n1 */
    PaddedPartition eta; /* length n2, parts divisible by the step */

    bool operator==(const Triple& other) const {
        return n1 == other.n1 && n2 == other.n2 && mu == other.mu && eta == other.eta;
    }
};

/*
 * The minimal configuration with n2 pairs below n1 singletons, everything
 * packed as low as the family allows.  Anchored variants prepend the
 * immovable anchor part and shift the rest accordingly; requesting the
 * anchored variant of a family without one raises InvalidVariant.
 * The returned pairing is the backward-direction split.
 */
PairedPartition base_partition(const Family& f, int n1, int n2,
                               BaseVariant variant = BaseVariant::plain);

bool family_has_anchored_variant(const Family& f);

/*
 * One forward (weight +step) or backward (weight -step) move of the
 * pair with the given 0-based rank among pairs, smallest first.  The
 * input must be paired in the matching direction.  The result is
 * re-split, so the pairing is always canonical afterwards.  Steps are
 * appended to *trace when given.
 */
PairedPartition forward_move(const PairedPartition& pp, int pair_index,
                             MoveTrace* trace = nullptr);
PairedPartition backward_move(const PairedPartition& pp, int pair_index,
                              MoveTrace* trace = nullptr);

struct ForwardResult {
    PairedPartition result;
    MoveTrace trace;
};

/* Build the partition a triple encodes.  Raises ConstraintViolation on a
 * malformed triple and InvalidVariant on a bad variant request. */
ForwardResult forward_map(const Family& f, const Triple& t,
                          BaseVariant variant = BaseVariant::plain);

struct BackwardResult {
    Triple triple;
    BaseVariant variant = BaseVariant::plain;
    PairedPartition base;
    MoveTrace trace;
};

/* Recover the unique triple for a partition of the family. */
BackwardResult backward_map(const Family& f, const Partition& p);

/*
 * Count partitions by (weight, part count) straight from the triples:
 * base weight plus mu and eta budgets, with the anchored variants
 * contributing one extra part.  Agreement with count_table() is the
 * bijectivity check, so this deliberately shares no code with the
 * partition enumerator.
 */
CountTable count_triples(const Family& f, int n_max);

/* Visit every triple (with variant) of total weight <= n_max. */
template <typename Fn>
void for_each_triple(const Family& f, int n_max, Fn&& fn);

/*
 * First trace invariant violation, if any: every case step must change
 * the weight by exactly +-step, adjustments and regroupings must keep it,
 * and every non-transient snapshot must satisfy the family.
 */
std::optional<std::string> trace_violation(const Family& f, const MoveTrace& trace,
                                           Direction direction);

struct FuzzResult {
    Family family;
    int n_max = 0;
    long long partitions_checked = 0;
    long long triples_checked = 0;
    long long failures = 0;
    std::string first_failure; /* empty when clean */
};

/*
 * Exhaustive round-trip sweep at weights <= n_max: backward then forward
 * over every partition, forward then backward over every triple, trace
 * invariants on both, and the triple count against the enumeration count.
 */
FuzzResult fuzz_family(const Family& f, int n_max);

namespace detail {

template <typename Fn>
void each_padded(int length, int budget, int scale, std::vector<int>& acc, int next_min,
                 Fn&& fn) {
    if (static_cast<int>(acc.size()) == length) {
        fn(acc);
        return;
    }
    for (int v = next_min; v * scale <= budget; ++v) {
        acc.push_back(v * scale);
        each_padded(length, budget - v * scale, scale, acc, v, fn);
        acc.pop_back();
    }
}

} // namespace detail

template <typename Fn>
void for_each_triple(const Family& f, int n_max, Fn&& fn) {
    const int step = move_step(f);
    std::vector<BaseVariant> variants = {BaseVariant::plain};
    if (family_has_anchored_variant(f)) variants.push_back(BaseVariant::anchored);
    for (BaseVariant variant : variants) {
        for (int n2 = 0;; ++n2) {
            if (base_partition(f, 0, n2, variant).weight() > n_max) break;
            for (int n1 = 0;; ++n1) {
                const int w0 = base_partition(f, n1, n2, variant).weight();
                if (w0 > n_max) break;
                std::vector<int> mu_acc;
                detail::each_padded(n1, n_max - w0, 1, mu_acc, 0, [&](const std::vector<int>& mu) {
                    int mu_sum = 0;
                    for (int v : mu) mu_sum += v;
                    std::vector<int> eta_acc;
                    detail::each_padded(n2, n_max - w0 - mu_sum, step, eta_acc, 0,
                                        [&](const std::vector<int>& eta) {
                                            Triple t{n1, n2, PaddedPartition(mu),
                                                     PaddedPartition(eta)};
                                            fn(t, variant);
                                        });
                });
            }
        }
    }
}

} // namespace pil

#endif
