#include "pil/paired.hpp"

#include <algorithm>

namespace pil {

Item make_singleton(int value) { return Item{value, value, false, false}; }

Item make_pair_item(int low, int high) { return Item{low, high, true, false}; }

Item make_anchor(int value) { return Item{value, value, false, true}; }

std::string items_to_string(const std::vector<Item>& items) {
    if (items.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < items.size(); ++i) {
        if (i) out += ',';
        const Item& it = items[i];
        if (it.pair)
            out += "[" + std::to_string(it.low) + "," + std::to_string(it.high) + "]";
        else if (it.anchor)
            out += "!" + std::to_string(it.low);
        else
            out += std::to_string(it.low);
    }
    return out;
}

namespace {

int parse_int(const std::string& text, size_t& pos) {
    size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) throw ParseError("expected a number at '" + text.substr(start) + "'");
    try {
        return std::stoi(text.substr(start, pos - start));
    } catch (const std::out_of_range&) {
        throw ParseError("number out of range in '" + text + "'");
    }
}

} // namespace

std::vector<Item> items_from_string(const std::string& text) {
    std::vector<Item> items;
    if (text == "-" || text.empty()) return items;
    size_t pos = 0;
    while (true) {
        if (pos >= text.size()) throw ParseError("dangling comma in '" + text + "'");
        if (text[pos] == '[') {
            ++pos;
            int low = parse_int(text, pos);
            if (pos >= text.size() || text[pos] != ',')
                throw ParseError("expected ',' inside pair in '" + text + "'");
            ++pos;
            int high = parse_int(text, pos);
            if (pos >= text.size() || text[pos] != ']')
                throw ParseError("expected ']' in '" + text + "'");
            ++pos;
            items.push_back(make_pair_item(low, high));
        } else if (text[pos] == '!') {
            ++pos;
            items.push_back(make_anchor(parse_int(text, pos)));
        } else {
            items.push_back(make_singleton(parse_int(text, pos)));
        }
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ',' in '" + text + "'");
        ++pos;
    }
    return items;
}

std::vector<int> flatten_items(const std::vector<Item>& items) {
    std::vector<int> parts;
    for (const Item& it : items) {
        parts.push_back(it.low);
        if (it.pair) parts.push_back(it.high);
    }
    return parts;
}

int items_weight(const std::vector<Item>& items) {
    int w = 0;
    for (const Item& it : items) w += it.pair ? it.low + it.high : it.low;
    return w;
}

std::optional<int> anchor_value(const Family& f) {
    switch (f.tag) {
        case FamilyTag::cp2:
        case FamilyTag::cp0: return 1;
        case FamilyTag::ggo21: return 2;
        case FamilyTag::gge22: return 1;
        default: return std::nullopt;
    }
}

namespace {

/* Residue of low+high mod 3 required of step-3 pairs. */
int pair_residue(const Family& f) {
    switch (f.tag) {
        case FamilyTag::cp1m1: return 1;
        case FamilyTag::cp1m2: return 2;
        default: return 0;
    }
}

void validate_items(const Family& f, const std::vector<Item>& items) {
    const bool cap = is_capparelli_type(f);
    const std::optional<int> av = anchor_value(f);
    int prev = 0;
    for (size_t i = 0; i < items.size(); ++i) {
        const Item& it = items[i];
        if (it.pair) {
            const int d = it.high - it.low;
            if (cap) {
                if (d != 2 && d != 3)
                    throw ConstraintViolation("pair distance must be 2 or 3: " +
                                              items_to_string({it}));
                if ((it.low + it.high) % 3 != pair_residue(f))
                    throw ConstraintViolation("pair sum residue is wrong for " +
                                              family_to_string(f) + ": " + items_to_string({it}));
            } else if (d != 2) {
                throw ConstraintViolation("pair distance must be 2: " + items_to_string({it}));
            }
        } else {
            /* Singleton spacing: a part this close to its neighbours would
             * have to be inside a pair.  Step-3 singletons keep distance
             * >= 3 and may touch a streak on one side only; step-4
             * singletons keep distance >= 2 under the same one-side rule. */
            const int none = 1 << 20;
            const int left = i == 0 ? none : it.low - prev;
            const int right = i + 1 == items.size() ? none : items[i + 1].low - it.low;
            const int touch = cap ? 3 : 2;
            if (left < touch || right < touch)
                throw ConstraintViolation("part " + std::to_string(it.low) +
                                          " is too close to a neighbour to be a singleton");
            if (left == touch && right == touch)
                throw ConstraintViolation("part " + std::to_string(it.low) +
                                          " cannot be a singleton mid-streak");
        }
        if (it.anchor) {
            if (i != 0 || it.pair || !av || it.low != *av)
                throw ConstraintViolation("bad anchor in " + items_to_string(items));
        }
        if (it.low <= prev)
            throw ConstraintViolation("items must be strictly increasing: " +
                                      items_to_string(items));
        prev = it.pair ? it.high : it.low;
    }
}

} // namespace

PairedPartition::PairedPartition(Family family, Direction direction, std::vector<Item> items)
    : family_(family), direction_(direction), items_(std::move(items)) {
    if (!is_capparelli_type(family_) && !is_gg_type(family_))
        throw Error("family " + family_to_string(family_) + " has no move machinery");
    validate_items(family_, items_);
    const Partition p(flatten_items(items_));
    if (!satisfies(family_, p))
        throw ConstraintViolation("partition " + p.to_string() + " is not in " +
                                  family_to_string(family_));
}

int PairedPartition::pair_count() const {
    int n = 0;
    for (const Item& it : items_) n += it.pair;
    return n;
}

int PairedPartition::singleton_count() const {
    int n = 0;
    for (const Item& it : items_) n += !it.pair && !it.anchor;
    return n;
}

bool PairedPartition::has_anchor() const {
    return !items_.empty() && items_.front().anchor;
}

const Item& PairedPartition::pair_at(int idx) const {
    int n = 0;
    for (const Item& it : items_) {
        if (!it.pair) continue;
        if (n == idx) return it;
        ++n;
    }
    throw Error("pair index " + std::to_string(idx) + " out of range");
}

PairedPartition decompose(const Family& f, const Partition& p, Direction direction) {
    if (!satisfies(f, p))
        throw ConstraintViolation("partition " + p.to_string() + " is not in " +
                                  family_to_string(f));
    const int reach = is_capparelli_type(f) ? 3 : 2; /* widest pairable gap */
    const std::vector<int>& parts = p.parts();
    std::vector<Item> items;
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j + 1 < parts.size() && parts[j + 1] - parts[j] <= reach) ++j;
        const size_t len = j - i + 1;
        if (len == 1) {
            items.push_back(make_singleton(parts[i]));
        } else if (len % 2 == 0) {
            for (size_t t = i; t <= j; t += 2)
                items.push_back(make_pair_item(parts[t], parts[t + 1]));
        } else if (direction == Direction::forward) {
            items.push_back(make_singleton(parts[i]));
            for (size_t t = i + 1; t <= j; t += 2)
                items.push_back(make_pair_item(parts[t], parts[t + 1]));
        } else {
            for (size_t t = i; t + 1 <= j; t += 2)
                items.push_back(make_pair_item(parts[t], parts[t + 1]));
            items.push_back(make_singleton(parts[j]));
        }
        i = j + 1;
    }
    const std::optional<int> av = anchor_value(f);
    if (av && !items.empty() && !items.front().pair && items.front().low == *av)
        items.front() = make_anchor(*av);
    return PairedPartition(f, direction, std::move(items));
}

} // namespace pil
