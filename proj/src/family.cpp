#include "pil/family.hpp"

#include <algorithm>

namespace pil {

Family make_family(FamilyTag tag) {
    if (tag == FamilyTag::gordon) throw Error("gordon needs parameters, use make_gordon");
    return Family{tag, 0, 0};
}

Family make_gordon(int k, int a) {
    if (k < 2 || a < 1 || a > k)
        throw InvalidGordonParams("gordon(k,a) requires k >= 2 and 1 <= a <= k");
    return Family{FamilyTag::gordon, k, a};
}

std::string family_to_string(const Family& f) {
    switch (f.tag) {
        case FamilyTag::cp1: return "cp1";
        case FamilyTag::cp2: return "cp2";
        case FamilyTag::cp0: return "cp0";
        case FamilyTag::cp1m1: return "cp1m1";
        case FamilyTag::cp1m2: return "cp1m2";
        case FamilyTag::gg22: return "gg22";
        case FamilyTag::gg21: return "gg21";
        case FamilyTag::ggo21: return "ggo21";
        case FamilyTag::gge22: return "gge22";
        case FamilyTag::schur: return "schur";
        case FamilyTag::gordon:
            return "gordon(" + std::to_string(f.k) + "," + std::to_string(f.a) + ")";
        case FamilyTag::euler_distinct: return "euler_distinct";
        case FamilyTag::euler_odd: return "euler_odd";
        case FamilyTag::rr1: return "rr1";
    }
    throw Error("unreachable family tag");
}

Family family_from_string(const std::string& text) {
    static const std::vector<std::pair<std::string, FamilyTag>> plain = {
        {"cp1", FamilyTag::cp1},       {"cp2", FamilyTag::cp2},
        {"cp0", FamilyTag::cp0},       {"cp1m1", FamilyTag::cp1m1},
        {"cp1m2", FamilyTag::cp1m2},   {"gg22", FamilyTag::gg22},
        {"gg21", FamilyTag::gg21},     {"ggo21", FamilyTag::ggo21},
        {"gge22", FamilyTag::gge22},   {"schur", FamilyTag::schur},
        {"euler_distinct", FamilyTag::euler_distinct},
        {"euler_odd", FamilyTag::euler_odd},
        {"rr1", FamilyTag::rr1},
    };
    for (const auto& [name, tag] : plain)
        if (text == name) return make_family(tag);
    if (text.rfind("gordon(", 0) == 0 && text.back() == ')') {
        const std::string inner = text.substr(7, text.size() - 8);
        const size_t comma = inner.find(',');
        if (comma != std::string::npos) {
            try {
                const int k = std::stoi(inner.substr(0, comma));
                const int a = std::stoi(inner.substr(comma + 1));
                return make_gordon(k, a);
            } catch (const std::invalid_argument&) {
            } catch (const std::out_of_range&) {
            }
        }
        throw ParseError("malformed gordon family: " + text);
    }
    throw ParseError("unknown family: " + text);
}

namespace detail {

int min_part(const Family& f) {
    switch (f.tag) {
        case FamilyTag::cp1: return 2;
        case FamilyTag::gg21: return 3;
        case FamilyTag::ggo21: return 2;
        default: return 1;
    }
}

int min_gap(const Family& f) {
    switch (f.tag) {
        case FamilyTag::gordon:
        case FamilyTag::euler_odd: return 0;
        case FamilyTag::euler_distinct: return 1;
        case FamilyTag::schur: return 3;
        default: return 2;
    }
}

bool part_ok(const Family& f, int p) {
    if (p < min_part(f)) return false;
    if (f.tag == FamilyTag::cp2 && p == 2) return false;
    if (f.tag == FamilyTag::euler_odd && p % 2 == 0) return false;
    return true;
}

bool adjacent_ok(const Family& f, int p, int q) {
    const int d = q - p;
    if (d < min_gap(f)) return false;
    switch (f.tag) {
        case FamilyTag::cp1:
        case FamilyTag::cp2:
        case FamilyTag::cp0: return d >= 4 || (p + q) % 3 == 0;
        case FamilyTag::cp1m1: return d >= 4 || (p + q) % 3 == 1;
        case FamilyTag::cp1m2: return d >= 4 || (p + q) % 3 == 2;
        case FamilyTag::gg22:
        case FamilyTag::gg21:
        case FamilyTag::ggo21: return d >= 3 || (p % 2 == 1 && q % 2 == 1);
        case FamilyTag::gge22: return d >= 3 || (p % 2 == 0 && q % 2 == 0);
        case FamilyTag::schur: return d >= 4 || p % 3 != 0;
        default: return true;
    }
}

} // namespace detail

bool satisfies(const Family& f, const Partition& p) {
    const std::vector<int>& parts = p.parts();
    int ones = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (!detail::part_ok(f, parts[i])) return false;
        if (i > 0 && !detail::adjacent_ok(f, parts[i - 1], parts[i])) return false;
        if (parts[i] == 1) ++ones;
    }
    if (f.tag == FamilyTag::gordon) {
        if (ones > f.a - 1) return false;
        for (size_t i = 0; i + f.k - 1 < parts.size(); ++i)
            if (parts[i + f.k - 1] - parts[i] < 2) return false;
    }
    return true;
}

std::vector<Family> move_families() {
    return {
        make_family(FamilyTag::cp1),   make_family(FamilyTag::cp2),
        make_family(FamilyTag::cp0),   make_family(FamilyTag::cp1m1),
        make_family(FamilyTag::cp1m2), make_family(FamilyTag::gg22),
        make_family(FamilyTag::gg21),  make_family(FamilyTag::ggo21),
        make_family(FamilyTag::gge22),
    };
}

bool is_capparelli_type(const Family& f) {
    switch (f.tag) {
        case FamilyTag::cp1:
        case FamilyTag::cp2:
        case FamilyTag::cp0:
        case FamilyTag::cp1m1:
        case FamilyTag::cp1m2: return true;
        default: return false;
    }
}

bool is_gg_type(const Family& f) {
    switch (f.tag) {
        case FamilyTag::gg22:
        case FamilyTag::gg21:
        case FamilyTag::ggo21:
        case FamilyTag::gge22: return true;
        default: return false;
    }
}

int move_step(const Family& f) {
    if (is_capparelli_type(f)) return 3;
    if (is_gg_type(f)) return 4;
    throw Error("family " + family_to_string(f) + " has no move machinery");
}

std::vector<Partition> enumerate(const Family& f, int n) {
    if (n < 0) throw Error("partition weight must be >= 0");
    std::vector<Partition> out;
    for_each_partition(f, n, [&](const std::vector<int>& parts) {
        int w = 0;
        for (int p : parts) w += p;
        if (w == n) out.emplace_back(parts);
    });
    return out;
}

CountTable count_table(const Family& f, int n_max) {
    if (n_max < 0) throw Error("count table bound must be >= 0");
    CountTable c(n_max + 1, std::vector<long long>(n_max + 1, 0));
    for_each_partition(f, n_max, [&](const std::vector<int>& parts) {
        int w = 0;
        for (int p : parts) w += p;
        c[w][parts.size()] += 1;
    });
    return c;
}

bool shift_check(const Family& left, const Family& right, int shift, int n_max) {
    if (shift != 1 && shift != 2) throw Error("shift must be 1 or 2");
    if (n_max < 0) throw Error("shift check bound must be >= 0");
    const int left_bound = n_max * (1 + shift);
    const CountTable cl = count_table(left, left_bound);
    const CountTable cr = count_table(right, n_max);
    for (int n = 0; n <= n_max; ++n) {
        for (int m = 0; n + shift * m <= left_bound; ++m) {
            const long long lhs = cl[n + shift * m][m];
            const long long rhs = m <= n_max ? cr[n][m] : 0;
            if (lhs != rhs) return false;
        }
    }
    return true;
}

} // namespace pil
