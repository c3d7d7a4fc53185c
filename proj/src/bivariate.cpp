#include "pil/bivariate.hpp"

#include <algorithm>

namespace pil {

namespace {

const Coeff kZero = 0;

} // namespace

BivariateSeries::BivariateSeries(int order, int x_bound) : order_(order) {
    if (order < 0 || x_bound < 0) throw Error("bivariate bounds must be >= 0");
    rows_.assign(x_bound + 1, TruncatedSeries(order));
}

const TruncatedSeries& BivariateSeries::row(int m) const {
    if (m < 0) throw Error("x-degree must be >= 0");
    if (m >= static_cast<int>(rows_.size())) {
        static const TruncatedSeries zero(0);
        return zero;
    }
    return rows_[m];
}

const Coeff& BivariateSeries::coeff(int n, int m) const {
    if (m < 0 || n < 0) throw Error("bivariate coefficient index must be >= 0");
    if (m >= static_cast<int>(rows_.size())) return kZero;
    return rows_[m].coeff(n);
}

void BivariateSeries::add_term(int m, int shift, const TruncatedSeries& s) {
    if (m < 0 || shift < 0) throw Error("bivariate term indices must be >= 0");
    if (m >= static_cast<int>(rows_.size())) return; /* beyond the x bound */
    TruncatedSeries& row = rows_[m];
    for (int n = 0; n + shift <= order_ && n <= s.order(); ++n) {
        if (s.coeff(n) == 0) continue;
        row.set_coeff(n + shift, row.coeff(n + shift) + s.coeff(n));
    }
}

TruncatedSeries BivariateSeries::at_x1() const {
    TruncatedSeries total(order_);
    for (const TruncatedSeries& r : rows_) total = series_add(total, r);
    return total;
}

bool BivariateSeries::operator==(const BivariateSeries& other) const {
    if (order_ != other.order_) return false;
    const int m_max = std::max(x_bound(), other.x_bound());
    for (int m = 0; m <= m_max; ++m)
        for (int n = 0; n <= order_; ++n)
            if (coeff(n, m) != other.coeff(n, m)) return false;
    return true;
}

} // namespace pil
