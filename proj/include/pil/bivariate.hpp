#ifndef PIL_BIVARIATE_HPP
#define PIL_BIVARIATE_HPP

/*
 * Two-variable truncated series $\sum_{m=0}^{M}\sum_{n=0}^{N} c_{n,m} x^m q^n$,
 * stored as one TruncatedSeries per x-degree.  Every row shares the q-order.
 * The x bound defaults to the q-order, which is always enough: a partition
 * of n has at most n parts, so no counted object ever exceeds m = n.
 */

#include <vector>

#include "pil/series.hpp"

namespace pil {

class BivariateSeries {
public:
    BivariateSeries(int order, int x_bound);
    explicit BivariateSeries(int order) : BivariateSeries(order, order) {}

    int order() const { return order_; }
    int x_bound() const { return static_cast<int>(rows_.size()) - 1; }

    /* Row m is the coefficient series of x^m; m beyond the bound reads zero. */
    const TruncatedSeries& row(int m) const;

    /* Coefficient of x^m q^n. */
    const Coeff& coeff(int n, int m) const;

    /* self += x^m * q^shift * s. */
    void add_term(int m, int shift, const TruncatedSeries& s);

    /* Specialize x = 1 by summing the rows. */
    TruncatedSeries at_x1() const;

    bool operator==(const BivariateSeries& other) const;
    bool operator!=(const BivariateSeries& other) const { return !(*this == other); }

private:
    int order_;
    std::vector<TruncatedSeries> rows_;
};

} // namespace pil

#endif
