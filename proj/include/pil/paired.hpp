#ifndef PIL_PAIRED_HPP
#define PIL_PAIRED_HPP

/*
 * Partitions split into moving blocks: adjacent parts at distance 2 or 3
 * (step-3 families) or exactly 2 (step-4 families) form pairs, everything
 * else is a singleton.  Inside a maximal streak of equally spaced parts
 * the split is ambiguous, and the two transforms resolve it differently:
 *
 *   forward   an odd streak declares its smallest part the singleton,
 *   backward  an odd streak declares its largest part the singleton.
 *
 * Even streaks pair off completely either way.  The anchored families
 * (cp2 and cp0 with a 1, ggo21 with a 2, gge22 with a 1) may carry an
 * immovable smallest part, marked as an anchor and excluded from the
 * singleton bookkeeping.
 */

#include <optional>
#include <string>
#include <vector>

#include "pil/family.hpp"
#include "pil/partition.hpp"

namespace pil {

enum class Direction { forward, backward };

struct Item {
    int low = 0;
    int high = 0; /* == low for singletons and anchors */
    bool pair = false;
    bool anchor = false;

    bool operator==(const Item& other) const {
        return low == other.low && high == other.high && pair == other.pair &&
               anchor == other.anchor;
    }
};

Item make_singleton(int value);
Item make_pair_item(int low, int high);
Item make_anchor(int value);

/* "[3,6],9,14,[18,21]" with anchors as "!1"; "-" for the empty list. */
std::string items_to_string(const std::vector<Item>& items);

/* Inverse of items_to_string; raises ParseError on bad syntax. */
std::vector<Item> items_from_string(const std::string& text);

std::vector<int> flatten_items(const std::vector<Item>& items);
int items_weight(const std::vector<Item>& items);

/*
 * A fully validated paired partition: the flattened parts satisfy the
 * family, pairs respect the family's distance and residue rules, and an
 * anchor may only sit in first position with the family's anchor value.
 */
class PairedPartition {
public:
    PairedPartition(Family family, Direction direction, std::vector<Item> items);

    const Family& family() const { return family_; }
    Direction direction() const { return direction_; }
    const std::vector<Item>& items() const { return items_; }

    Partition flatten() const { return Partition(flatten_items(items_)); }
    int weight() const { return items_weight(items_); }

    int pair_count() const;
    /* Singletons only; the anchor is not counted. */
    int singleton_count() const;
    bool has_anchor() const;

    /* Values of the idx-th pair counting from the smallest, 0-based. */
    const Item& pair_at(int idx) const;

    std::string to_string() const { return items_to_string(items_); }

    bool operator==(const PairedPartition& other) const {
        return family_ == other.family_ && direction_ == other.direction_ &&
               items_ == other.items_;
    }

private:
    Family family_;
    Direction direction_;
    std::vector<Item> items_;
};

/* The anchor value a family's anchored base variant carries, if any. */
std::optional<int> anchor_value(const Family& f);

/*
 * Split a partition of the family into pairs and singletons for the given
 * direction.  Raises ConstraintViolation if the partition is not in the
 * family at all.
 */
PairedPartition decompose(const Family& f, const Partition& p, Direction direction);

} // namespace pil

#endif
