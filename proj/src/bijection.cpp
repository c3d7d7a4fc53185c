#include "pil/bijection.hpp"

#include <algorithm>

namespace pil {

std::string case_label_to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::Ia: return "Ia";
        case CaseLabel::IIa: return "IIa";
        case CaseLabel::Ib: return "Ib";
        case CaseLabel::IIb: return "IIb";
        case CaseLabel::IaB: return "I'a";
        case CaseLabel::IIaB: return "II'a";
        case CaseLabel::IbB: return "I'b";
        case CaseLabel::IIbB: return "II'b";
        case CaseLabel::GGa: return "GG-a";
        case CaseLabel::GGb: return "GG-b";
        case CaseLabel::GGaB: return "GG'-a";
        case CaseLabel::GGbB: return "GG'-b";
        case CaseLabel::Regroup: return "regroup";
        case CaseLabel::Adjust: return "adjust";
    }
    throw Error("unreachable case label");
}

bool family_has_anchored_variant(const Family& f) { return anchor_value(f).has_value(); }

namespace {

struct BaseShape {
    int pair_low_start;  /* low of pair j is start + stride*(j-1) */
    int pair_stride;
    int pair_diff;
    int single_start;    /* singleton i is start + single_stride*(i-1), after n2 pairs */
    int single_stride;
};

/*
 * Lowest admissible stack for each family: n2 pairs packed from the
 * bottom, then n1 singletons as tight as the gap conditions allow.
 * Anchored variants put the immovable part first and shift the stack.
 */
BaseShape base_shape(const Family& f, int n2, bool anchored) {
    switch (f.tag) {
        case FamilyTag::cp1: return {2, 6, 2, 6 * n2 + 2, 4};
        case FamilyTag::cp2:
            return anchored ? BaseShape{5, 6, 2, 6 * n2 + 5, 4}
                            : BaseShape{3, 6, 3, 6 * n2 + 3, 4};
        case FamilyTag::cp0:
            return anchored ? BaseShape{5, 6, 2, 6 * n2 + 5, 4}
                            : BaseShape{2, 6, 2, 6 * n2 + 2, 4};
        case FamilyTag::cp1m1: return {1, 6, 2, 6 * n2 + 1, 4};
        case FamilyTag::cp1m2: return {1, 6, 3, 6 * n2 + 1, 4};
        case FamilyTag::gg22: return {1, 4, 2, 4 * n2 + 1, 3};
        case FamilyTag::gg21: return {3, 4, 2, 4 * n2 + 3, 3};
        case FamilyTag::ggo21:
            return anchored ? BaseShape{5, 4, 2, 4 * n2 + 5, 3}
                            : BaseShape{3, 4, 2, 4 * n2 + 3, 3};
        case FamilyTag::gge22:
            return anchored ? BaseShape{4, 4, 2, 4 * n2 + 4, 3}
                            : BaseShape{2, 4, 2, 4 * n2 + 2, 3};
        default: throw Error("family " + family_to_string(f) + " has no base partition");
    }
}

size_t pair_item_index(const std::vector<Item>& items, int pair_index) {
    if (pair_index < 0) throw Error("pair index must be >= 0");
    int n = 0;
    for (size_t i = 0; i < items.size(); ++i) {
        if (!items[i].pair) continue;
        if (n == pair_index) return i;
        ++n;
    }
    throw Error("pair index " + std::to_string(pair_index) + " out of range");
}

bool valid_partition_values(const std::vector<Item>& items) {
    int prev = 0;
    for (const Item& it : items) {
        if (it.low <= prev) return false;
        if (it.pair && it.high <= it.low) return false;
        prev = it.pair ? it.high : it.low;
    }
    return true;
}

std::vector<Item> with_pair(std::vector<Item> items, size_t ip, int lo, int hi) {
    items[ip] = make_pair_item(lo, hi);
    return items;
}

struct Rewrite {
    CaseLabel label = CaseLabel::Ia;
    bool jump = false;
    std::vector<Item> transient; /* jump only: pair slid but not yet corrected */
    std::vector<Item> raw;
};

PairedPartition finish_move(const PairedPartition& pp, const Rewrite& rw, MoveTrace* trace,
                            bool forward) {
    const Family& f = pp.family();
    if (!valid_partition_values(rw.raw) || !satisfies(f, Partition(flatten_items(rw.raw)))) {
        /* Backward this is the regular stopping condition; forward the
         * case analysis is exhaustive, so reaching here is a bug. */
        if (forward)
            throw Error("forward move produced an invalid configuration: " +
                        items_to_string(rw.raw));
        throw InadmissibleMove("move from " + pp.to_string() + " would leave the family");
    }
    if (trace) {
        if (rw.jump) {
            trace->steps.push_back({rw.label, true, rw.transient});
            trace->steps.push_back({CaseLabel::Adjust, false, rw.raw});
        } else {
            trace->steps.push_back({rw.label, false, rw.raw});
        }
    }
    PairedPartition next = decompose(f, Partition(flatten_items(rw.raw)), pp.direction());
    if (trace && next.items() != rw.raw)
        trace->steps.push_back({CaseLabel::Regroup, false, next.items()});
    if (next.pair_count() != pp.pair_count() ||
        next.singleton_count() != pp.singleton_count() || next.has_anchor() != pp.has_anchor())
        throw Error("move broke the pairing structure: " + next.to_string());
    return next;
}

} // namespace

PairedPartition base_partition(const Family& f, int n1, int n2, BaseVariant variant) {
    if (n1 < 0 || n2 < 0) throw Error("base partition sizes must be >= 0");
    const bool anchored = variant == BaseVariant::anchored;
    if (anchored && !family_has_anchored_variant(f))
        throw InvalidVariant("family " + family_to_string(f) + " has no anchored base");
    const BaseShape shape = base_shape(f, n2, anchored);
    std::vector<Item> items;
    if (anchored) items.push_back(make_anchor(*anchor_value(f)));
    for (int j = 1; j <= n2; ++j) {
        const int lo = shape.pair_low_start + shape.pair_stride * (j - 1);
        items.push_back(make_pair_item(lo, lo + shape.pair_diff));
    }
    for (int i = 1; i <= n1; ++i)
        items.push_back(make_singleton(shape.single_start + shape.single_stride * (i - 1)));
    return PairedPartition(f, Direction::backward, std::move(items));
}

PairedPartition forward_move(const PairedPartition& pp, int pair_index, MoveTrace* trace) {
    if (pp.direction() != Direction::forward)
        throw Error("forward_move needs a forward-split partition");
    const Family& f = pp.family();
    const std::vector<Item>& items = pp.items();
    const size_t ip = pair_item_index(items, pair_index);
    const int a = items[ip].low;
    const int b = items[ip].high;
    const Item* up = ip + 1 < items.size() ? &items[ip + 1] : nullptr;

    Rewrite rw;
    auto slide = [&](CaseLabel label, int lo, int hi) {
        rw.label = label;
        rw.raw = with_pair(items, ip, lo, hi);
    };
    /* A jump consumes the singleton just above: the pair overtakes it and
     * the singleton drops to where the pair's weight budget leaves it. */
    auto jump = [&](CaseLabel label, int t_lo, int t_hi, int single, int p_lo, int p_hi) {
        if (up->pair || up->anchor)
            throw InadmissibleMove("pair [" + std::to_string(a) + "," + std::to_string(b) +
                                   "] is blocked from above");
        rw.label = label;
        rw.jump = true;
        rw.transient = with_pair(items, ip, t_lo, t_hi);
        rw.raw = items;
        rw.raw[ip] = make_singleton(single);
        rw.raw[ip + 1] = make_pair_item(p_lo, p_hi);
    };

    if (is_capparelli_type(f)) {
        if (b == a + 2) {
            if (up && up->low == b + 4)
                jump(CaseLabel::Ib, a + 1, a + 4, a, a + 4, a + 7);
            else
                slide(CaseLabel::Ia, a + 1, a + 4);
        } else {
            if (up && up->low == b + 3)
                throw InadmissibleMove("pair [" + std::to_string(a) + "," + std::to_string(b) +
                                       "] is blocked by the streak above");
            if (up && up->low == b + 4)
                jump(CaseLabel::IIb, a + 2, a + 4, a + 1, a + 5, a + 7);
            else
                slide(CaseLabel::IIa, a + 2, a + 4);
        }
    } else {
        if (up && up->low == b + 2)
            throw InadmissibleMove("pair [" + std::to_string(a) + "," + std::to_string(b) +
                                   "] is blocked by the streak above");
        if (up && up->low == b + 3)
            jump(CaseLabel::GGb, a + 2, a + 4, a + 1, a + 4, a + 6);
        else
            slide(CaseLabel::GGa, a + 2, a + 4);
    }
    return finish_move(pp, rw, trace, true);
}

PairedPartition backward_move(const PairedPartition& pp, int pair_index, MoveTrace* trace) {
    if (pp.direction() != Direction::backward)
        throw Error("backward_move needs a backward-split partition");
    const Family& f = pp.family();
    const std::vector<Item>& items = pp.items();
    const size_t ip = pair_item_index(items, pair_index);
    const int a = items[ip].low;
    const int b = items[ip].high;
    const Item* down = ip > 0 ? &items[ip - 1] : nullptr;
    const int x = down ? down->high : 0;

    Rewrite rw;
    auto slide = [&](CaseLabel label, int lo, int hi) {
        rw.label = label;
        rw.raw = with_pair(items, ip, lo, hi);
    };
    auto jump = [&](CaseLabel label, int t_lo, int t_hi, int p_lo, int p_hi, int single) {
        if (down->pair || down->anchor)
            throw InadmissibleMove("pair [" + std::to_string(a) + "," + std::to_string(b) +
                                   "] is blocked from below");
        rw.label = label;
        rw.jump = true;
        rw.transient = with_pair(items, ip, t_lo, t_hi);
        rw.raw = items;
        rw.raw[ip - 1] = make_pair_item(p_lo, p_hi);
        rw.raw[ip] = make_singleton(single);
    };

    if (is_capparelli_type(f)) {
        if (b == a + 3) {
            if (down && x == a - 3)
                throw InadmissibleMove("pair [" + std::to_string(a) + "," + std::to_string(b) +
                                       "] is blocked by the streak below");
            if (down && x == a - 4)
                jump(CaseLabel::IbB, a - 1, a + 1, a - 4, a - 2, a + 2);
            else
                slide(CaseLabel::IaB, a - 1, a + 1);
        } else {
            if (down && x == a - 4)
                jump(CaseLabel::IIbB, a - 2, a + 1, a - 5, a - 2, a + 2);
            else
                slide(CaseLabel::IIaB, a - 2, a + 1);
        }
    } else {
        if (down && x == a - 2)
            throw InadmissibleMove("pair [" + std::to_string(a) + "," + std::to_string(b) +
                                   "] is blocked by the streak below");
        if (down && x == a - 3)
            jump(CaseLabel::GGbB, a - 2, a, a - 4, a - 2, a + 1);
        else
            slide(CaseLabel::GGaB, a - 2, a);
    }
    return finish_move(pp, rw, trace, false);
}

ForwardResult forward_map(const Family& f, const Triple& t, BaseVariant variant) {
    const int step = move_step(f);
    if (t.n1 < 0 || t.n2 < 0 || t.mu.size() != t.n1 || t.eta.size() != t.n2)
        throw ConstraintViolation("triple shape does not match n1/n2");
    for (int e : t.eta.parts())
        if (e % step != 0)
            throw ConstraintViolation("eta parts must be multiples of " + std::to_string(step));

    PairedPartition base = base_partition(f, t.n1, t.n2, variant);
    MoveTrace trace;
    trace.start = base.items();

    /* Singletons first: the i-th smallest gains mu_i.  Base gaps leave
     * room for any weakly increasing shift pattern. */
    std::vector<Item> placed = base.items();
    int si = 0;
    for (Item& it : placed) {
        if (it.pair || it.anchor) continue;
        it.low += t.mu.parts()[si];
        it.high = it.low;
        ++si;
    }
    PairedPartition pp = decompose(f, Partition(flatten_items(placed)), Direction::forward);
    trace.after_placement = pp.items();

    /* Pairs next, largest first.  A well-formed triple never runs into a
     * blocked configuration; if it does, the engine itself is broken. */
    try {
        for (int idx = t.n2 - 1; idx >= 0; --idx) {
            const int moves = t.eta.parts()[idx] / step;
            for (int c = 0; c < moves; ++c) pp = forward_move(pp, idx, &trace);
        }
    } catch (const InadmissibleMove& blocked) {
        throw Error(std::string("forward transform hit a blocked move: ") + blocked.what());
    }
    if (pp.weight() != base.weight() + t.mu.weight() + t.eta.weight())
        throw Error("forward transform lost weight somewhere");
    return {pp, trace};
}

BackwardResult backward_map(const Family& f, const Partition& p) {
    PairedPartition pp = decompose(f, p, Direction::backward);
    MoveTrace trace;
    trace.start = pp.items();
    const int n2 = pp.pair_count();
    const int n1 = pp.singleton_count();
    const BaseVariant variant =
        pp.has_anchor() ? BaseVariant::anchored : BaseVariant::plain;
    const int step = move_step(f);

    /* Stow pairs smallest first; each one walks down until blocked, and
     * the walk length is its eta entry. */
    std::vector<int> eta(n2, 0);
    for (int idx = 0; idx < n2; ++idx) {
        int count = 0;
        while (true) {
            try {
                pp = backward_move(pp, idx, &trace);
            } catch (const InadmissibleMove&) {
                break;
            }
            ++count;
        }
        eta[idx] = count * step;
    }

    PairedPartition base = base_partition(f, n1, n2, variant);
    for (int idx = 0; idx < n2; ++idx)
        if (!(pp.pair_at(idx) == base.pair_at(idx)))
            throw Error("backward transform stopped off the base: " + pp.to_string());

    std::vector<int> base_singles;
    std::vector<int> now_singles;
    for (const Item& it : base.items())
        if (!it.pair && !it.anchor) base_singles.push_back(it.low);
    for (const Item& it : pp.items())
        if (!it.pair && !it.anchor) now_singles.push_back(it.low);
    if (base_singles.size() != now_singles.size())
        throw Error("backward transform lost a singleton: " + pp.to_string());
    std::vector<int> mu(n1, 0);
    for (int i = 0; i < n1; ++i) {
        mu[i] = now_singles[i] - base_singles[i];
        if (mu[i] < 0)
            throw Error("backward transform pushed a singleton below the base: " +
                        pp.to_string());
    }

    Triple t{n1, n2, PaddedPartition(mu), PaddedPartition(eta)};
    return {t, variant, base, trace};
}

CountTable count_triples(const Family& f, int n_max) {
    if (n_max < 0) throw Error("count bound must be >= 0");
    const int step = move_step(f);
    CountTable c(n_max + 1, std::vector<long long>(n_max + 1, 0));

    /* atmost[k][u]: partitions of u into at most k parts. */
    std::vector<std::vector<long long>> atmost(n_max + 1,
                                               std::vector<long long>(n_max + 1, 0));
    for (int k = 0; k <= n_max; ++k) {
        atmost[k][0] = 1;
        for (int u = 1; u <= n_max && k > 0; ++u)
            atmost[k][u] = atmost[k - 1][u] + (u >= k ? atmost[k][u - k] : 0);
    }

    std::vector<BaseVariant> variants = {BaseVariant::plain};
    if (family_has_anchored_variant(f)) variants.push_back(BaseVariant::anchored);
    for (BaseVariant variant : variants) {
        const int extra = variant == BaseVariant::anchored ? 1 : 0;
        for (int n2 = 0;; ++n2) {
            if (base_partition(f, 0, n2, variant).weight() > n_max) break;
            for (int n1 = 0;; ++n1) {
                const int w0 = base_partition(f, n1, n2, variant).weight();
                if (w0 > n_max) break;
                const int m = n1 + 2 * n2 + extra;
                const int kmu = std::min(n1, n_max);
                const int keta = std::min(n2, n_max);
                for (int u = 0; w0 + u <= n_max; ++u) {
                    if (atmost[kmu][u] == 0) continue;
                    for (int v = 0; w0 + u + step * v <= n_max; ++v)
                        c[w0 + u + step * v][m] += atmost[kmu][u] * atmost[keta][v];
                }
            }
        }
    }
    return c;
}

std::optional<std::string> trace_violation(const Family& f, const MoveTrace& trace,
                                           Direction direction) {
    const int step = move_step(f);
    const int delta = direction == Direction::forward ? step : -step;
    /* A snapshot taken right after a case step may pair parts differently
     * from the canonical regrouping that follows, so only ask that the
     * values form a partition that is still inside the family. */
    auto broken = [&](const std::vector<Item>& items) -> std::optional<std::string> {
        if (!valid_partition_values(items))
            return "snapshot " + items_to_string(items) + " is not a partition";
        if (!satisfies(f, Partition(flatten_items(items))))
            return "snapshot " + items_to_string(items) + " leaves the family";
        return std::nullopt;
    };
    if (auto v = broken(trace.start)) return v;
    const std::vector<Item>* prev = &trace.start;
    if (trace.after_placement) {
        if (auto v = broken(*trace.after_placement)) return v;
        prev = &*trace.after_placement;
    }
    int prev_weight = items_weight(*prev);
    for (const TraceStep& s : trace.steps) {
        const bool keeps_weight =
            s.label == CaseLabel::Regroup || s.label == CaseLabel::Adjust;
        const int want = keeps_weight ? prev_weight : prev_weight + delta;
        const int got = items_weight(s.snapshot);
        if (got != want)
            return "step " + case_label_to_string(s.label) + " moved weight to " +
                   std::to_string(got) + ", expected " + std::to_string(want);
        if (!s.transient)
            if (auto v = broken(s.snapshot)) return v;
        prev_weight = got;
    }
    return std::nullopt;
}

FuzzResult fuzz_family(const Family& f, int n_max) {
    FuzzResult r;
    r.family = f;
    r.n_max = n_max;
    auto fail = [&](const std::string& msg) {
        ++r.failures;
        if (r.first_failure.empty()) r.first_failure = family_to_string(f) + ": " + msg;
    };

    for_each_partition(f, n_max, [&](const std::vector<int>& parts) {
        ++r.partitions_checked;
        const Partition p(parts);
        try {
            BackwardResult back = backward_map(f, p);
            if (auto v = trace_violation(f, back.trace, Direction::backward)) {
                fail(p.to_string() + ": " + *v);
                return;
            }
            ForwardResult fwd = forward_map(f, back.triple, back.variant);
            if (auto v = trace_violation(f, fwd.trace, Direction::forward)) {
                fail(p.to_string() + ": " + *v);
                return;
            }
            if (fwd.result.flatten() != p)
                fail("round trip turned " + p.to_string() + " into " +
                     fwd.result.flatten().to_string());
        } catch (const Error& e) {
            fail(p.to_string() + ": " + e.what());
        }
    });

    for_each_triple(f, n_max, [&](const Triple& t, BaseVariant variant) {
        ++r.triples_checked;
        try {
            ForwardResult fwd = forward_map(f, t, variant);
            BackwardResult back = backward_map(f, fwd.result.flatten());
            if (!(back.triple == t) || back.variant != variant)
                fail("triple round trip changed (" + std::to_string(t.n1) + "," +
                     std::to_string(t.n2) + "," + t.mu.to_string() + "," + t.eta.to_string() +
                     ")");
        } catch (const Error& e) {
            fail("triple (" + std::to_string(t.n1) + "," + std::to_string(t.n2) + "," +
                 t.mu.to_string() + "," + t.eta.to_string() + "): " + e.what());
        }
    });

    if (count_triples(f, n_max) != count_table(f, n_max))
        fail("triple counting disagrees with enumeration at some weight <= " +
             std::to_string(n_max));
    return r;
}

} // namespace pil
