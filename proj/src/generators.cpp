#include "pil/generators.hpp"

#include <algorithm>
#include <vector>

#include "pil/bijection.hpp"

namespace pil {

namespace {

int isqrt(int v) {
    int r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

/* inv[k] = 1/(q^modulus; q^modulus)_k truncated at `order` */
std::vector<TruncatedSeries> inverse_pochhammer_table(int modulus, int k_max, int order) {
    std::vector<TruncatedSeries> inv;
    inv.reserve(k_max + 1);
    for (int k = 0; k <= k_max; ++k)
        inv.push_back(series_invert(pochhammer_finite(1, modulus, modulus, k, order)));
    return inv;
}

long long base_weight(const Family& f, int n1, int n2, BaseVariant v) {
    return base_partition(f, n1, n2, v).weight();
}

TruncatedSeries q_power(int e, int order) { return TruncatedSeries::monomial(1, e, order); }

/* Shared engine for the family double sums. */
BivariateSeries family_multisum(const Family& f, int order) {
    const MultisumSpec spec = multisum_spec(f);
    const int x_bound = detail::min_part(f) >= 2 ? order / 2 : order;
    BivariateSeries out(order, x_bound);

    int n1_max = 0;
    while (spec.exponent(n1_max + 1, 0) <= order) ++n1_max;
    int n2_max = 0;
    while (spec.exponent(0, n2_max + 1) <= order) ++n2_max;
    const std::vector<TruncatedSeries> inv1 = inverse_pochhammer_table(1, n1_max, order);
    const std::vector<TruncatedSeries> invm =
        inverse_pochhammer_table(spec.modulus, n2_max, order);

    for (int n2 = 0; n2 <= n2_max; ++n2) {
        if (spec.exponent(0, n2) > order) break;
        for (int n1 = 0;; ++n1) {
            const int e = spec.exponent(n1, n2);
            if (e > order) break;
            const TruncatedSeries term = inv1[n1] * invm[n2];
            const int m = spec.x_weight(n1, n2);
            out.add_term(m, e, term);
            if (spec.anchored_term) out.add_term(m + 1, spec.anchored_exponent(n1, n2), term);
        }
    }
    return out;
}

} // namespace

int MultisumSpec::exponent(int n1, int n2) const {
    const long long twice = t20 * n1 * n1 + t11 * (long long)n1 * n2 + t02 * (long long)n2 * n2 +
                            t10 * n1 + t01 * n2;
    if (twice < 0 || twice % 2 != 0)
        throw Error("weight form broke down at n1=" + std::to_string(n1) +
                    ", n2=" + std::to_string(n2));
    return static_cast<int>(twice / 2);
}

int MultisumSpec::anchored_exponent(int n1, int n2) const {
    if (!anchored_term)
        throw Error("family " + family_to_string(family) + " has no anchored term");
    return exponent(n1, n2) + static_cast<int>(l10 * n1 + l01 * n2 + l00);
}

MultisumSpec multisum_spec(const Family& f) {
    MultisumSpec spec;
    spec.family = f;
    spec.modulus = move_step(f);
    spec.anchored_term = family_has_anchored_variant(f);

    auto w = [&](int n1, int n2) { return base_weight(f, n1, n2, BaseVariant::plain); };
    if (w(0, 0) != 0) throw Error("plain base of the empty stack must be empty");
    spec.t20 = w(2, 0) - 2 * w(1, 0);
    spec.t02 = w(0, 2) - 2 * w(0, 1);
    spec.t11 = 2 * (w(1, 1) - w(1, 0) - w(0, 1));
    spec.t10 = 2 * w(1, 0) - spec.t20;
    spec.t01 = 2 * w(0, 1) - spec.t02;
    if (spec.t20 <= 0 || spec.t02 <= 0 || 4 * spec.t20 * spec.t02 <= spec.t11 * spec.t11)
        throw Error("weight form of " + family_to_string(f) + " is not positive definite");

    if (spec.anchored_term) {
        auto l = [&](int n1, int n2) {
            return base_weight(f, n1, n2, BaseVariant::anchored) - w(n1, n2);
        };
        spec.l00 = l(0, 0);
        spec.l10 = l(1, 0) - spec.l00;
        spec.l01 = l(0, 1) - spec.l00;
    }

    /* The closed form must reproduce the constructed stacks. */
    for (int n1 = 0; n1 <= 4; ++n1)
        for (int n2 = 0; n2 <= 4; ++n2) {
            if (spec.exponent(n1, n2) != w(n1, n2))
                throw Error("weight form of " + family_to_string(f) + " is not quadratic");
            if (spec.anchored_term &&
                spec.anchored_exponent(n1, n2) != base_weight(f, n1, n2, BaseVariant::anchored))
                throw Error("anchored weight of " + family_to_string(f) + " is not linear");
        }
    return spec;
}

BivariateSeries capparelli_family_multisum(const Family& f, int order) {
    if (!is_capparelli_type(f))
        throw Error("capparelli_family_multisum expects a difference-2-or-4 family");
    return family_multisum(f, order);
}

BivariateSeries gg_family_multisum(const Family& f, int order) {
    if (!is_gg_type(f))
        throw Error("gg_family_multisum expects a difference-2-or-3 family");
    return family_multisum(f, order);
}

BivariateSeries andrews_gordon_multisum(int k, int a, int order) {
    if (k < 2 || k > 5 || a < 1 || a > k)
        throw InvalidGordonParams("need 2 <= k <= 5 and 1 <= a <= k, got k=" +
                                  std::to_string(k) + ", a=" + std::to_string(a));
    BivariateSeries out(order, order);
    const std::vector<TruncatedSeries> inv1 =
        inverse_pochhammer_table(1, isqrt(order) + 1, order);

    /* Depth-first over N_1 >= N_2 >= ... >= N_{k-1} >= 0, pruning once
     * the exponent alone exceeds the order. */
    std::vector<int> caps(k, 0); /* caps[r] = N_r, caps[0] unbounded */
    auto descend = [&](auto&& self, int r, int bound, int expo, int parts) -> void {
        if (r == k) {
            TruncatedSeries term = q_power(expo, order);
            for (int i = 1; i < k; ++i) {
                const int next = i + 1 < k ? caps[i + 1] : 0;
                term = term * inv1[caps[i] - next];
            }
            out.add_term(parts, 0, term);
            return;
        }
        for (int nr = 0; nr <= bound; ++nr) {
            const int e = expo + nr * nr + (r >= a ? nr : 0);
            if (e > order) break;
            caps[r] = nr;
            self(self, r + 1, nr, e, parts + nr);
        }
    };
    descend(descend, 1, isqrt(order) + 1, 0, 0);
    return out;
}

BivariateSeries classical_gg_series(int which, int order) {
    if (which != 1 && which != 2) throw Error("classical series selector must be 1 or 2");
    BivariateSeries out(order, order);
    for (int n = 0;; ++n) {
        const int e = which == 1 ? n * n : n * n + 2 * n;
        if (e > order) break;
        const TruncatedSeries term =
            pochhammer_finite(-1, 1, 2, n, order) *
            series_invert(pochhammer_finite(1, 2, 2, n, order));
        out.add_term(n, e, term);
    }
    return out;
}

TruncatedSeries aag_capparelli_series(int order) {
    TruncatedSeries sum(order);
    for (int n = 0;; ++n) {
        const int e = 6 * n * n - 3 * n;
        if (e > order) break;
        sum = sum + q_power(e, order) * series_invert(pochhammer_finite(1, 3, 3, 2 * n, order));
    }
    return pochhammer_infinite(-1, 4, 6, order) * pochhammer_infinite(-1, 2, 6, order) * sum;
}

TruncatedSeries sills_capparelli_series(int order) {
    TruncatedSeries sum(order);
    const int n_max = isqrt(order);
    const std::vector<TruncatedSeries> inv1 = inverse_pochhammer_table(1, 2 * n_max, order);
    for (int n = 0; n <= n_max; ++n) {
        for (int j = 0; j <= 2 * n; ++j) {
            const int residue = ((n - j + 1) % 3 + 3) % 3;
            if (residue == 0) continue;
            const int chi = residue == 1 ? 1 : -1;
            TruncatedSeries term = q_power(n * n, order) * inv1[2 * n - j] * inv1[j];
            sum = chi > 0 ? sum + term : sum - term;
        }
    }
    return sum;
}

namespace {

TruncatedSeries divide_exact(const TruncatedSeries& num, const TruncatedSeries& den) {
    const TruncatedSeries quotient = num * series_invert(den);
    if (quotient * den != num)
        throw NonIntegralDivision("recurrence division left a remainder");
    return quotient;
}

std::vector<TruncatedSeries> schur_table(SchurForm form, int n_max, int order) {
    const TruncatedSeries one = TruncatedSeries::one(order);
    TruncatedSeries one_plus_q = one;
    one_plus_q.set_coeff(1, 1);
    const TruncatedSeries q = q_power(1, order);

    std::vector<TruncatedSeries> table;
    table.push_back(one);
    for (int n = 1; n <= n_max; ++n) {
        const TruncatedSeries& p1 = table[n - 1];
        const TruncatedSeries p2 = n >= 2 ? table[n - 2] : TruncatedSeries(order);
        if (form == SchurForm::a) {
            const TruncatedSeries den = one - q_power(3 * n, order);
            table.push_back(divide_exact(one_plus_q * p1 - q * p2, den));
        } else {
            const TruncatedSeries drop = one - q_power(3 * n - 3, order);
            table.push_back(one_plus_q * p1 - q * drop * p2);
        }
    }
    return table;
}

/* Substitute q -> q^2: coefficient of q^n moves to q^(2n). */
TruncatedSeries stretched(const TruncatedSeries& s, int order) {
    TruncatedSeries out(order);
    for (int n = 0; 2 * n <= order && n <= s.order(); ++n)
        out.set_coeff(2 * n, s.coeff(n));
    return out;
}

} // namespace

TruncatedSeries schur_poly_a(int n, int order) {
    if (n < 0) return TruncatedSeries(order);
    return schur_table(SchurForm::a, n, order).back();
}

TruncatedSeries schur_poly_alpha(int n, int order) {
    if (n < 0) return TruncatedSeries(order);
    return schur_table(SchurForm::alpha, n, order).back();
}

BivariateSeries schur_series(SchurForm form, int order) {
    /* The gap-3 stacks pack to exactly the same weights as the cp1m2
     * ones, so reuse that closed form. */
    const MultisumSpec spec = multisum_spec(make_family(FamilyTag::cp1m2));
    BivariateSeries out(order, order);

    int n1_max = 0;
    while (spec.exponent(n1_max + 1, 0) <= order) ++n1_max;
    int n2_max = 0;
    while (spec.exponent(0, n2_max + 1) <= order) ++n2_max;
    const std::vector<TruncatedSeries> inv1 = inverse_pochhammer_table(1, n1_max, order);
    const std::vector<TruncatedSeries> inv6 = inverse_pochhammer_table(6, n2_max, order);

    /* The admissible gap-3 pairs sit on residues 1 and 2 mod 3, so one
     * unobstructed pair climbs by weights 0, 2, 6, 8, 12, ...: that is the
     * recurrence series taken at q^2, not at q.  (The m = 2 column decides
     * it: (1+q^2)/(1-q^6) matches the counts, (1+q)/(1-q^3) does not.)
     * The matching alpha denominator is (q^6;q^6)_{n2}. */
    std::vector<TruncatedSeries> polys;
    for (const TruncatedSeries& p : schur_table(form, n2_max, order / 2))
        polys.push_back(stretched(p, order));

    for (int n2 = 0; n2 <= n2_max; ++n2) {
        for (int n1 = 0;; ++n1) {
            const int e = spec.exponent(n1, n2);
            if (e > order) break;
            TruncatedSeries term = q_power(e, order) * polys[n2] * inv1[n1];
            if (form == SchurForm::alpha) term = term * inv6[n2];
            out.add_term(2 * n2 + n1, 0, term);
        }
    }
    return out;
}

TruncatedSeries product_side(const std::string& identity, int order) {
    ProductSpec spec;
    if (identity == "capparelli1") {
        for (int off : {2, 3, 4, 6}) spec.factors.push_back({-1, off, 6, false});
    } else if (identity == "capparelli2") {
        for (int off : {1, 3, 5, 6}) spec.factors.push_back({-1, off, 6, false});
    } else if (identity == "gg1") {
        for (int off : {1, 4, 7}) spec.factors.push_back({1, off, 8, true});
    } else if (identity == "gg2") {
        for (int off : {3, 4, 5}) spec.factors.push_back({1, off, 8, true});
    } else if (identity == "euler") {
        spec.factors.push_back({1, 1, 2, true}); /* odd parts */
    } else if (identity.rfind("gordon", 0) == 0) {
        const Family f = family_from_string(identity);
        const int mod = 2 * f.k + 1;
        for (int r = 1; r < mod; ++r) {
            if (r == f.a || r == mod - f.a) continue;
            spec.factors.push_back({1, r, mod, true});
        }
    } else {
        throw UnknownIdentity("no product named '" + identity + "'");
    }
    return product_series(spec, order);
}

} // namespace pil
