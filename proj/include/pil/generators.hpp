#pragma once

#include <string>

#include "pil/bivariate.hpp"
#include "pil/family.hpp"
#include "pil/series.hpp"

namespace pil {

/*
 * Closed-form data for a double-sum generating function
 *
 *     sum_{n1,n2 >= 0} q^Q(n1,n2) (1 + x q^L(n1,n2))^[anchored] x^(n1+2n2)
 *                      / ( (q;q)_{n1} (q^modulus;q^modulus)_{n2} )
 *
 * The exponents come straight from the stacked base partitions, so the
 * spec is derived rather than typed in: Q is the plain base weight and
 * L the extra weight of the anchored variant.  Coefficients are stored
 * doubled because some families have half-integer quadratic forms.
 */
struct MultisumSpec {
    Family family;
    int modulus = 1;          /* second denominator block */
    bool anchored_term = false;
    long long t20 = 0, t11 = 0, t02 = 0, t10 = 0, t01 = 0; /* 2*Q */
    long long l10 = 0, l01 = 0, l00 = 0;                   /* L, when anchored */

    int exponent(int n1, int n2) const;
    int anchored_exponent(int n1, int n2) const;
    int x_weight(int n1, int n2) const { return n1 + 2 * n2; }
};

/* Builds the spec from the family's base partitions and checks that the
 * quadratic form is positive definite, so truncated sums terminate. */
MultisumSpec multisum_spec(const Family& f);

/* The double sums for the move families, as bivariate tables. */
BivariateSeries capparelli_family_multisum(const Family& f, int order);
BivariateSeries gg_family_multisum(const Family& f, int order);

/* sum over N_1 >= ... >= N_{k-1} >= 0 of
 *   q^(N_1^2+...+N_{k-1}^2 + N_a+...+N_{k-1}) x^(N_1+...+N_{k-1})
 *   / ( (q;q)_{N_1-N_2} ... (q;q)_{N_{k-1}} ),
 * the evidently positive series for the Gordon families. */
BivariateSeries andrews_gordon_multisum(int k, int a, int order);

/* Classical single sums sum_n q^(n^2) (-q;q^2)_n x^n / (q^2;q^2)_n
 * (which = 1) and the q^(n^2+2n) variant (which = 2). */
BivariateSeries classical_gg_series(int which, int order);

/* (-q^4;q^6)oo (-q^2;q^6)oo sum_n q^(6n^2-3n) / (q^3;q^3)_{2n} */
TruncatedSeries aag_capparelli_series(int order);

/* sum_{n>=0} sum_{j=0..2n} chi(n-j+1) q^(n^2) / ( (q;q)_{2n-j} (q;q)_j )
 * where chi is the quadratic character mod 3.  Terms are signed but the
 * totals are non-negative. */
TruncatedSeries sills_capparelli_series(int order);

enum class SchurForm { a, alpha };

/* The recurrence families a_n(q) and alpha_n(q):
 *   (1 - q^(3n)) a_n = (1 + q) a_{n-1} - q a_{n-2}
 *   alpha_n = (1 + q) alpha_{n-1} - q (1 - q^(3n-3)) alpha_{n-2}
 * with a_0 = alpha_0 = 1 and both zero for n < 0.  a_n is a power
 * series; the division that defines it is re-multiplied as a check and
 * a mismatch throws NonIntegralDivision. */
TruncatedSeries schur_poly_a(int n, int order);
TruncatedSeries schur_poly_alpha(int n, int order);

/* sum q^(6n2^2-n2+2n1^2-n1+6n1n2) P_{n2}(q^2) x^(2n2+n1) / (q;q)_{n1},
 * with P = a_n (form a) or P = alpha_n over an extra (q^6;q^6)_{n2}
 * (form alpha).  The recurrence series enter at q^2 because the
 * admissible gap-3 pairs climb in weight steps of 2 and 4, twice the
 * 1 and 2 the recurrences encode.  Both forms tabulate the gap-3
 * family with no adjacent multiples of three. */
BivariateSeries schur_series(SchurForm form, int order);

/* Named infinite products: capparelli1, capparelli2, gg1, gg2, euler,
 * gordon(k,a).  Throws UnknownIdentity for anything else. */
TruncatedSeries product_side(const std::string& identity, int order);

} // namespace pil
