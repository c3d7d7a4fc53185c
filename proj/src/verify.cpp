#include "pil/verify.hpp"

#include <chrono>
#include <functional>

#include "pil/generators.hpp"

namespace pil {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SideComparison compare_uni(const std::string& ln, const TruncatedSeries& a,
                           const std::string& rn, const TruncatedSeries& b) {
    SideComparison c;
    c.left = ln;
    c.right = rn;
    const int top = std::min(a.order(), b.order());
    for (int n = 0; n <= top; ++n) {
        if (a.coeff(n) == b.coeff(n)) continue;
        c.pass = false;
        c.first_n = n;
        c.left_value = a.coeff(n).str();
        c.right_value = b.coeff(n).str();
        break;
    }
    return c;
}

SideComparison compare_bi(const std::string& ln, const BivariateSeries& a,
                          const std::string& rn, const BivariateSeries& b) {
    SideComparison c;
    c.left = ln;
    c.right = rn;
    const int top = std::min(a.order(), b.order());
    const int m_top = std::max(a.x_bound(), b.x_bound());
    for (int n = 0; n <= top && c.pass; ++n)
        for (int m = 0; m <= m_top; ++m) {
            if (a.coeff(n, m) == b.coeff(n, m)) continue;
            c.pass = false;
            c.first_n = n;
            c.first_m = m;
            c.left_value = a.coeff(n, m).str();
            c.right_value = b.coeff(n, m).str();
            break;
        }
    return c;
}

/* sum_n q^(n(n+1)/2) / (q;q)_n, the staircase form of the Euler identity */
TruncatedSeries euler_stacked_sum(int order) {
    TruncatedSeries sum(order);
    for (int n = 0;; ++n) {
        const int e = n * (n + 1) / 2;
        if (e > order) break;
        sum = sum + TruncatedSeries::monomial(1, e, order) *
                        series_invert(pochhammer_finite(1, 1, 1, n, order));
    }
    return sum;
}

/* (q^2;q^2)oo / (q;q)oo, the signed-expansion middle form */
TruncatedSeries euler_signed_product(int order) {
    ProductSpec spec;
    spec.factors.push_back({1, 2, 2, false});
    spec.factors.push_back({1, 1, 1, true});
    return product_series(spec, order);
}

class ReportBuilder {
  public:
    ReportBuilder(std::string identity, int order) {
        rep_.identity = std::move(identity);
        rep_.order = order;
    }

    TruncatedSeries uni(const std::string& name, const std::function<TruncatedSeries()>& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        TruncatedSeries s = fn();
        rep_.sides.push_back({name, seconds_since(t0)});
        return s;
    }

    BivariateSeries bi(const std::string& name, const std::function<BivariateSeries()>& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        BivariateSeries s = fn();
        rep_.sides.push_back({name, seconds_since(t0)});
        return s;
    }

    void check_uni(const std::string& ln, const TruncatedSeries& a, const std::string& rn,
                   const TruncatedSeries& b) {
        rep_.comparisons.push_back(compare_uni(ln, a, rn, b));
    }

    void check_bi(const std::string& ln, const BivariateSeries& a, const std::string& rn,
                  const BivariateSeries& b) {
        rep_.comparisons.push_back(compare_bi(ln, a, rn, b));
    }

    void push(SideComparison c) { rep_.comparisons.push_back(std::move(c)); }

    VerificationReport take() { return std::move(rep_); }

  private:
    VerificationReport rep_;
};

/* family multisum vs its own brute-force table, the refined claim */
BivariateSeries check_family_table(ReportBuilder& rb, const Family& f, int order) {
    const BivariateSeries ms = rb.bi("multisum", [&] {
        return is_capparelli_type(f) ? capparelli_family_multisum(f, order)
                                     : gg_family_multisum(f, order);
    });
    const BivariateSeries oracle =
        rb.bi("oracle", [&] { return table_to_bivariate(count_table(f, order), order); });
    rb.check_bi("multisum", ms, "oracle", oracle);
    return ms;
}

} // namespace

bool VerificationReport::pass() const {
    for (const SideComparison& c : comparisons)
        if (!c.pass) return false;
    return true;
}

std::vector<std::string> known_identities() {
    return {"euler",  "rr1",   "capparelli1", "capparelli2", "cp0",   "cp1m1", "cp1m2",
            "gg1",    "gg2",   "ggo21",       "gge22",       "gordon(k,a)", "schur",
            "shifts"};
}

TruncatedSeries table_x1(const CountTable& table, int order) {
    TruncatedSeries s(order);
    const int top = std::min<int>(order, static_cast<int>(table.size()) - 1);
    for (int n = 0; n <= top; ++n) {
        Coeff total = 0;
        for (long long c : table[n]) total += c;
        s.set_coeff(n, total);
    }
    return s;
}

BivariateSeries table_to_bivariate(const CountTable& table, int order) {
    BivariateSeries b(order, order);
    const int top = std::min<int>(order, static_cast<int>(table.size()) - 1);
    for (int n = 0; n <= top; ++n)
        for (int m = 0; m < static_cast<int>(table[n].size()); ++m) {
            if (table[n][m] == 0) continue;
            if (m > order) continue;
            b.add_term(m, 0, TruncatedSeries::monomial(table[n][m], n, order));
        }
    return b;
}

VerificationReport run_identity(const std::string& identity, int order) {
    ReportBuilder rb(identity, order);

    if (identity == "euler") {
        const TruncatedSeries stacked = rb.uni("stacked-sum", [&] { return euler_stacked_sum(order); });
        const TruncatedSeries signed_form =
            rb.uni("signed-product", [&] { return euler_signed_product(order); });
        const TruncatedSeries odd_form =
            rb.uni("odd-product", [&] { return product_side("euler", order); });
        const TruncatedSeries distinct_oracle = rb.uni("distinct-oracle", [&] {
            return table_x1(count_table(make_family(FamilyTag::euler_distinct), order), order);
        });
        const TruncatedSeries odd_oracle = rb.uni("odd-oracle", [&] {
            return table_x1(count_table(make_family(FamilyTag::euler_odd), order), order);
        });
        rb.check_uni("stacked-sum", stacked, "signed-product", signed_form);
        rb.check_uni("signed-product", signed_form, "odd-product", odd_form);
        rb.check_uni("odd-product", odd_form, "distinct-oracle", distinct_oracle);
        rb.check_uni("distinct-oracle", distinct_oracle, "odd-oracle", odd_oracle);
        return rb.take();
    }

    if (identity == "rr1") {
        const TruncatedSeries sum = rb.uni("multisum-x1", [&] {
            return andrews_gordon_multisum(2, 2, order).at_x1();
        });
        const TruncatedSeries prod =
            rb.uni("product", [&] { return product_side("gordon(2,2)", order); });
        const TruncatedSeries oracle = rb.uni("oracle", [&] {
            return table_x1(count_table(make_family(FamilyTag::rr1), order), order);
        });
        rb.check_uni("multisum-x1", sum, "product", prod);
        rb.check_uni("product", prod, "oracle", oracle);
        return rb.take();
    }

    if (identity == "capparelli1") {
        const Family f = make_family(FamilyTag::cp1);
        const TruncatedSeries x1 = check_family_table(rb, f, order).at_x1();
        const TruncatedSeries prod =
            rb.uni("product", [&] { return product_side("capparelli1", order); });
        const TruncatedSeries aag = rb.uni("aag-series", [&] { return aag_capparelli_series(order); });
        const TruncatedSeries sills =
            rb.uni("sills-series", [&] { return sills_capparelli_series(order); });
        rb.check_uni("multisum-x1", x1, "product", prod);
        rb.check_uni("multisum-x1", x1, "aag-series", aag);
        rb.check_uni("multisum-x1", x1, "sills-series", sills);
        return rb.take();
    }

    if (identity == "capparelli2") {
        const Family f = make_family(FamilyTag::cp2);
        const TruncatedSeries x1 = check_family_table(rb, f, order).at_x1();
        const TruncatedSeries prod =
            rb.uni("product", [&] { return product_side("capparelli2", order); });
        rb.check_uni("multisum-x1", x1, "product", prod);
        return rb.take();
    }

    if (identity == "cp0" || identity == "cp1m1" || identity == "cp1m2" ||
        identity == "ggo21" || identity == "gge22") {
        check_family_table(rb, family_from_string(identity), order);
        return rb.take();
    }

    if (identity == "gg1" || identity == "gg2") {
        const bool first = identity == "gg1";
        const Family f = make_family(first ? FamilyTag::gg22 : FamilyTag::gg21);
        const BivariateSeries ms = check_family_table(rb, f, order);
        const BivariateSeries classical =
            rb.bi("classical-sum", [&] { return classical_gg_series(first ? 1 : 2, order); });
        rb.check_bi("multisum", ms, "classical-sum", classical);
        const TruncatedSeries prod = rb.uni("product", [&] { return product_side(identity, order); });
        rb.check_uni("multisum-x1", ms.at_x1(), "product", prod);
        return rb.take();
    }

    if (identity.rfind("gordon", 0) == 0) {
        const Family f = family_from_string(identity);
        const BivariateSeries ms = rb.bi("multisum", [&] {
            return andrews_gordon_multisum(f.k, f.a, order);
        });
        const BivariateSeries oracle =
            rb.bi("oracle", [&] { return table_to_bivariate(count_table(f, order), order); });
        const TruncatedSeries prod = rb.uni("product", [&] { return product_side(identity, order); });
        rb.check_bi("multisum", ms, "oracle", oracle);
        rb.check_uni("multisum-x1", ms.at_x1(), "product", prod);
        return rb.take();
    }

    if (identity == "schur") {
        const Family f = make_family(FamilyTag::schur);
        const BivariateSeries a_form =
            rb.bi("a-series", [&] { return schur_series(SchurForm::a, order); });
        const BivariateSeries alpha_form =
            rb.bi("alpha-series", [&] { return schur_series(SchurForm::alpha, order); });
        const BivariateSeries oracle =
            rb.bi("oracle", [&] { return table_to_bivariate(count_table(f, order), order); });
        rb.check_bi("a-series", a_form, "oracle", oracle);
        rb.check_bi("alpha-series", alpha_form, "oracle", oracle);
        rb.check_bi("a-series", a_form, "alpha-series", alpha_form);
        return rb.take();
    }

    if (identity == "shifts") {
        /* left(n + shift*m, m) == right(n, m): dropping the staircase
         * 1 + shift, 1 + 2*shift, ... relates the two count tables. */
        auto shifted_pair = [&](FamilyTag lt, FamilyTag rt, int shift) {
            const Family lf = make_family(lt);
            const Family rf = make_family(rt);
            const int left_bound = order * (1 + shift);
            const BivariateSeries left = rb.bi(family_to_string(lf) + "-table", [&] {
                return table_to_bivariate(count_table(lf, left_bound), left_bound);
            });
            const BivariateSeries right = rb.bi(family_to_string(rf) + "-table", [&] {
                return table_to_bivariate(count_table(rf, order), order);
            });
            SideComparison c;
            const std::string sm = shift == 1 ? "m" : std::to_string(shift) + "m";
            c.left = family_to_string(lf) + "(n+" + sm + ",m)";
            c.right = family_to_string(rf) + "(n,m)";
            for (int n = 0; n <= order && c.pass; ++n)
                for (int m = 0; n + shift * m <= left_bound; ++m) {
                    if (left.coeff(n + shift * m, m) == right.coeff(n, m)) continue;
                    c.pass = false;
                    c.first_n = n;
                    c.first_m = m;
                    c.left_value = left.coeff(n + shift * m, m).str();
                    c.right_value = right.coeff(n, m).str();
                    break;
                }
            rb.push(std::move(c));
        };
        shifted_pair(FamilyTag::cp1, FamilyTag::cp1m1, 1);
        shifted_pair(FamilyTag::gg21, FamilyTag::gg22, 2);
        shifted_pair(FamilyTag::ggo21, FamilyTag::gge22, 1);
        return rb.take();
    }

    throw UnknownIdentity("no identity named '" + identity + "'");
}

} // namespace pil
