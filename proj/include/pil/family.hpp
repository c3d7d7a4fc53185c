#ifndef PIL_FAMILY_HPP
#define PIL_FAMILY_HPP

/*
 * Constraint families: each tag names a class of partitions cut out by
 * local conditions on successive parts (and sometimes a smallest-part or
 * forbidden-part rule).  The two staircase groups come in step-3 and
 * step-4 flavours:
 *
 *   cp1    parts >= 2, gaps >= 2, and >= 4 unless the two parts sum to 0 mod 3
 *   cp2    like cp1 but "no part equals 2" replaces the smallest-part rule
 *   cp0    like cp1 with no smallest-part rule at all
 *   cp1m1  gaps >= 2, >= 4 unless the sum is 1 mod 3
 *   cp1m2  gaps >= 2, >= 4 unless the sum is 2 mod 3
 *   gg22   gaps >= 2, >= 3 unless both parts are odd
 *   gg21   gg22 gaps with parts >= 3
 *   ggo21  gg22 gaps with parts >= 2
 *   gge22  gaps >= 2, >= 3 unless both parts are even
 *
 * plus the classical families: schur (gaps >= 3, > 3 when the lower part
 * is a multiple of 3), gordon(k, a) (at most a-1 ones, window condition
 * part[i+k-1] - part[i] >= 2), euler_distinct, euler_odd, and rr1
 * (distinct parts with gaps >= 2).
 */

#include <string>
#include <vector>

#include "pil/partition.hpp"

namespace pil {

enum class FamilyTag {
    cp1,
    cp2,
    cp0,
    cp1m1,
    cp1m2,
    gg22,
    gg21,
    ggo21,
    gge22,
    schur,
    gordon,
    euler_distinct,
    euler_odd,
    rr1,
};

struct Family {
    FamilyTag tag;
    int k = 0; // gordon only
    int a = 0; // gordon only

    bool operator==(const Family& other) const {
        return tag == other.tag && k == other.k && a == other.a;
    }
};

Family make_family(FamilyTag tag);

/* Requires 1 <= a <= k, k >= 2; anything else raises InvalidGordonParams. */
Family make_gordon(int k, int a);

std::string family_to_string(const Family& f);

/* Inverse of family_to_string, accepting e.g. "cp1" or "gordon(3,2)". */
Family family_from_string(const std::string& text);

bool satisfies(const Family& f, const Partition& p);

/* The nine families that carry the staircase move machinery. */
std::vector<Family> move_families();

bool is_capparelli_type(const Family& f);
bool is_gg_type(const Family& f);

/* Move length: 3 for the step-3 families, 4 for the step-4 ones. */
int move_step(const Family& f);

/* All partitions of n in the family, in lexicographic order of the
 * weakly increasing part lists.  n = 0 yields just the empty partition. */
std::vector<Partition> enumerate(const Family& f, int n);

/* Visit every partition of weight <= n_max in the family, empty included. */
template <typename Fn>
void for_each_partition(const Family& f, int n_max, Fn&& fn);

/*
 * c[n][m] = number of partitions of n with m parts in the family,
 * for 0 <= n <= n_max and 0 <= m <= n_max.  c[0][0] = 1.
 */
using CountTable = std::vector<std::vector<long long>>;
CountTable count_table(const Family& f, int n_max);

/*
 * Check the staircase shift relation  c_left[n + shift*m][m] = c_right[n][m]
 * for all 0 <= n <= n_max and all m.  The left table is built out to
 * weight n_max * (1 + shift) so every index the relation touches exists.
 */
bool shift_check(const Family& left, const Family& right, int shift, int n_max);

namespace detail {

int min_part(const Family& f);
int min_gap(const Family& f);
bool part_ok(const Family& f, int p);
bool adjacent_ok(const Family& f, int p, int q);

template <typename Fn>
void walk(const Family& f, int n_max, std::vector<int>& parts, int weight, Fn&& fn) {
    fn(static_cast<const std::vector<int>&>(parts));
    const int last = parts.empty() ? 0 : parts.back();
    const int lo = parts.empty() ? min_part(f) : last + min_gap(f);
    for (int q = lo; weight + q <= n_max; ++q) {
        if (!part_ok(f, q)) continue;
        if (!parts.empty() && !adjacent_ok(f, last, q)) continue;
        if (f.tag == FamilyTag::gordon) {
            if (q == 1) {
                int ones = 0;
                for (int p : parts) ones += (p == 1);
                if (ones + 1 > f.a - 1) continue;
            }
            const int j = static_cast<int>(parts.size());
            if (j - (f.k - 1) >= 0 && q - parts[j - (f.k - 1)] < 2) continue;
        }
        parts.push_back(q);
        walk(f, n_max, parts, weight + q, fn);
        parts.pop_back();
    }
}

} // namespace detail

template <typename Fn>
void for_each_partition(const Family& f, int n_max, Fn&& fn) {
    std::vector<int> parts;
    detail::walk(f, n_max, parts, 0, fn);
}

} // namespace pil

#endif
