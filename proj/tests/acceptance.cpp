/*
 * Acceptance suite: the eleven headline checks, one PASS/FAIL line each
 * on stdout, nonzero exit when anything fails.  Timings go to stderr so
 * stdout stays byte-stable.
 */

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pil/bijection.hpp"
#include "pil/generators.hpp"
#include "pil/verify.hpp"

using pil::BivariateSeries;
using pil::Family;
using pil::FamilyTag;
using pil::PaddedPartition;
using pil::Partition;
using pil::TruncatedSeries;

namespace {

Family fam(FamilyTag tag) { return pil::make_family(tag); }

struct Criterion {
    std::string name;
    std::function<std::string()> run; /* empty string = pass, else reason */
};

std::string check_forward_example() {
    const pil::Triple t{2, 2, PaddedPartition({1, 2}), PaddedPartition({3, 9})};
    const pil::ForwardResult res = pil::forward_map(fam(FamilyTag::cp1), t);
    if (res.result.to_string() != "3,[6,9],14,[18,21]")
        return "result was " + res.result.to_string();
    if (res.result.weight() != 71)
        return "weight was " + std::to_string(res.result.weight());
    bool saw = false;
    for (const pil::TraceStep& s : res.trace.steps)
        if (!s.transient && pil::items_to_string(s.snapshot) == "[2,4],9,[14,16],20")
            saw = true;
    if (!saw) return "trace is missing the [2,4],9,[14,16],20 snapshot";
    if (auto v = pil::trace_violation(fam(FamilyTag::cp1), res.trace,
                                      pil::Direction::forward))
        return *v;
    return "";
}

std::string check_backward_example() {
    const pil::BackwardResult res =
        pil::backward_map(fam(FamilyTag::cp2), Partition({3, 6, 9, 14, 18, 21}));
    if (res.base.weight() != 64)
        return "base weight was " + std::to_string(res.base.weight());
    if (res.base.to_string() != "[3,6],[9,12],15,19")
        return "base was " + res.base.to_string();
    if (!(res.triple.mu == PaddedPartition({0, 1})))
        return "mu was " + res.triple.mu.to_string();
    if (!(res.triple.eta == PaddedPartition({0, 6})))
        return "eta was " + res.triple.eta.to_string();
    return "";
}

std::string check_refined_cp1() {
    const int order = 40;
    const Family f = fam(FamilyTag::cp1);
    const BivariateSeries sum = pil::capparelli_family_multisum(f, order);
    const BivariateSeries table =
        pil::table_to_bivariate(pil::count_table(f, order), order);
    if (sum != table) return "double sum and count table disagree";
    return "";
}

std::string check_products() {
    const int order = 60;
    const struct {
        FamilyTag tag;
        const char* product;
    } rows[] = {
        {FamilyTag::cp1, "capparelli1"},
        {FamilyTag::cp2, "capparelli2"},
        {FamilyTag::gg22, "gg1"},
        {FamilyTag::gg21, "gg2"},
    };
    for (const auto& r : rows) {
        const Family f = fam(r.tag);
        const BivariateSeries sum = pil::is_capparelli_type(f)
                                        ? pil::capparelli_family_multisum(f, order)
                                        : pil::gg_family_multisum(f, order);
        if (sum.at_x1() != pil::product_side(r.product, order))
            return std::string(r.product) + " disagrees with the double sum";
    }
    return "";
}

std::string check_all_family_sums() {
    const int order = 40;
    for (const Family& f : pil::move_families()) {
        if (f.tag == FamilyTag::cp1) continue; /* covered by its own criterion */
        const BivariateSeries sum = pil::is_capparelli_type(f)
                                        ? pil::capparelli_family_multisum(f, order)
                                        : pil::gg_family_multisum(f, order);
        const BivariateSeries table =
            pil::table_to_bivariate(pil::count_table(f, order), order);
        if (sum != table) return pil::family_to_string(f) + " disagrees with its table";
    }
    return "";
}

std::string check_fuzz() {
    for (const Family& f : pil::move_families()) {
        const pil::FuzzResult r = pil::fuzz_family(f, 40);
        if (r.failures != 0)
            return pil::family_to_string(f) + ": " + std::to_string(r.failures) +
                   " failures, first: " + r.first_failure;
        std::fprintf(stderr, "#   fuzz %s: %lld partitions, %lld triples\n",
                     pil::family_to_string(f).c_str(), r.partitions_checked,
                     r.triples_checked);
    }
    return "";
}

std::string check_gordon() {
    const int order = 50;
    for (int k = 2; k <= 4; ++k) {
        for (int a = 1; a <= k; ++a) {
            const Family f = pil::make_gordon(k, a);
            const std::string name = pil::family_to_string(f);
            const TruncatedSeries sum =
                pil::andrews_gordon_multisum(k, a, order).at_x1();
            const TruncatedSeries product = pil::product_side(name, order);
            const TruncatedSeries counts =
                pil::table_x1(pil::count_table(f, order), order);
            if (sum != product) return name + ": double sum disagrees with product";
            if (sum != counts) return name + ": double sum disagrees with enumeration";
        }
    }
    return "";
}

std::string check_cross_series() {
    const int order = 50;
    const TruncatedSeries counts =
        pil::table_x1(pil::count_table(fam(FamilyTag::cp1), order), order);
    if (pil::aag_capparelli_series(order) != counts)
        return "theta-quotient cross-check series disagrees";
    if (pil::sills_capparelli_series(order) != counts)
        return "signed double-sum cross-check series disagrees";
    return "";
}

std::string check_shifts() {
    /* Note the orientation: adding 1 (or 2) to every part of the
     * right-hand family lands in the left-hand family. */
    if (!pil::shift_check(fam(FamilyTag::cp1), fam(FamilyTag::cp1m1), 1, 40))
        return "cp1 / cp1m1 shift fails";
    if (!pil::shift_check(fam(FamilyTag::gg21), fam(FamilyTag::gg22), 2, 40))
        return "gg21 / gg22 shift fails";
    if (!pil::shift_check(fam(FamilyTag::ggo21), fam(FamilyTag::gge22), 1, 40))
        return "ggo21 / gge22 shift fails";
    return "";
}

std::string check_schur() {
    const int order = 40;
    const BivariateSeries table =
        pil::table_to_bivariate(pil::count_table(fam(FamilyTag::schur), order), order);
    if (pil::schur_series(pil::SchurForm::a, order) != table)
        return "a-form series disagrees with the count table";
    if (pil::schur_series(pil::SchurForm::alpha, order) != table)
        return "alpha-form series disagrees with the count table";
    for (int n = 0; n <= 20; ++n) {
        const TruncatedSeries a = pil::schur_poly_a(n, order);
        for (int i = 0; i <= order; ++i)
            if (a.coeff(i) < 0)
                return "a_" + std::to_string(n) + " has a negative coefficient at q^" +
                       std::to_string(i);
    }
    /* alpha_n positivity is observational only: report, never fail. */
    for (int n = 0; n <= 20; ++n) {
        const TruncatedSeries al = pil::schur_poly_alpha(n, order);
        for (int i = 0; i <= order; ++i)
            if (al.coeff(i) < 0) {
                std::fprintf(stderr, "#   note: alpha_%d has a negative q^%d term\n", n,
                             i);
                i = order;
            }
    }
    return "";
}

std::string check_euler_rr() {
    const pil::VerificationReport rep = pil::run_identity("euler", 50);
    if (!rep.pass()) return "stacked/distinct/odd comparisons disagree";
    const pil::VerificationReport rr = pil::run_identity("rr1", 50);
    if (!rr.pass()) return "first Rogers-Ramanujan comparisons disagree";
    if (pil::product_side("gordon(2,2)", 10).coeff(4) != 2)
        return "q^4 coefficient of the RR product is wrong";
    return "";
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"forward construction reaches weight 71 with the recorded trace",
         check_forward_example},
        {"backward reduction reaches the weight 64 base", check_backward_example},
        {"cp1 double sum matches counts refined by part number to n=40",
         check_refined_cp1},
        {"all four product identities hold to n=60", check_products},
        {"every family double sum matches its count table to n=40",
         check_all_family_sums},
        {"exhaustive roundtrip fuzz is clean for all nine families to n=40",
         check_fuzz},
        {"gordon double sums match products and enumeration to n=50 for k=2,3,4",
         check_gordon},
        {"both cross-check series reproduce the cp1 counts to n=50",
         check_cross_series},
        {"staircase shift relations hold to n=40", check_shifts},
        {"schur recurrence series match the count table to n=40, a_n stays nonnegative",
         check_schur},
        {"euler identities and the first rogers-ramanujan coefficients check out",
         check_euler_rr},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string reason;
        try {
            reason = criteria[i].run();
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::fprintf(stderr, "# criterion %zu took %.2fs\n", i + 1, secs);
        if (reason.empty()) {
            std::printf("PASS %zu: %s\n", i + 1, criteria[i].name.c_str());
        } else {
            std::printf("FAIL %zu: %s (%s)\n", i + 1, criteria[i].name.c_str(),
                        reason.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
