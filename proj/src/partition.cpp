#include "pil/partition.hpp"

#include <numeric>

namespace pil {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    int prev = 1;
    for (int p : parts_) {
        if (p < prev)
            throw ConstraintViolation("partition parts must be weakly increasing and >= 1");
        prev = p;
    }
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += '+';
        out += std::to_string(parts_[i]);
    }
    return out;
}

PaddedPartition::PaddedPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    int prev = 0;
    for (int p : parts_) {
        if (p < prev)
            throw ConstraintViolation(
                "padded partition parts must be weakly increasing and >= 0");
        prev = p;
    }
}

int PaddedPartition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string PaddedPartition::to_string() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += '+';
        out += std::to_string(parts_[i]);
    }
    return out;
}

} // namespace pil
