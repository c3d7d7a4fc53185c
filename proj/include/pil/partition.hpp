#ifndef PIL_PARTITION_HPP
#define PIL_PARTITION_HPP

/*
 * Partitions are kept in weakly increasing order, e.g. 2+4+4+9, matching
 * the convention used throughout the combinatorics here: "successive
 * parts" always means adjacent entries of the increasing list.
 */

#include <string>
#include <vector>

#include "pil/errors.hpp"

namespace pil {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int weight() const;

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }
    bool operator!=(const Partition& other) const { return !(*this == other); }
    bool operator<(const Partition& other) const { return parts_ < other.parts_; }

    /* "2+4+9", or "0" for the empty partition. */
    std::string to_string() const;

private:
    std::vector<int> parts_;
};

/*
 * A weakly increasing list of fixed length whose entries may be zero.
 * Used for the move counts attached to singletons and pairs: a padded
 * partition of length r records how far each of r items travelled, and
 * items that never moved contribute zero parts.
 */
class PaddedPartition {
public:
    PaddedPartition() = default;
    explicit PaddedPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    int weight() const;

    bool operator==(const PaddedPartition& other) const { return parts_ == other.parts_; }
    bool operator!=(const PaddedPartition& other) const { return !(*this == other); }

    /* "0+1", or "-" when the length is zero. */
    std::string to_string() const;

private:
    std::vector<int> parts_;
};

} // namespace pil

#endif
