#include "pil/series.hpp"

#include <utility>

namespace pil {

namespace {

const Coeff kZero = 0;

int check_order(int order) {
    if (order < 0) throw Error("series order must be >= 0");
    return order;
}

} // namespace

TruncatedSeries::TruncatedSeries(int order) : coeffs_(check_order(order) + 1) {}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Coeff& c, int power, int order) {
    if (power < 0) throw Error("monomial power must be >= 0");
    TruncatedSeries s(order);
    if (power <= order) s.coeffs_[power] = c;
    return s;
}

const Coeff& TruncatedSeries::coeff(int n) const {
    if (n < 0) throw Error("coefficient index must be >= 0");
    if (n >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[n];
}

void TruncatedSeries::set_coeff(int n, Coeff c) {
    if (n < 0 || n > order()) throw Error("coefficient index out of range");
    coeffs_[n] = std::move(c);
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order > order()) throw Error("cannot extend a truncated series");
    TruncatedSeries s(new_order);
    for (int n = 0; n <= new_order; ++n) s.coeffs_[n] = coeffs_[n];
    return s;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries s(n);
    for (int i = 0; i <= n; ++i) s.set_coeff(i, a.coeff(i) + b.coeff(i));
    return s;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries s(n);
    for (int i = 0; i <= n; ++i) s.set_coeff(i, a.coeff(i) - b.coeff(i));
    return s;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries s(n);
    /* Skip zero coefficients of a; sparse factors like 1 - q^j are common. */
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i) == 0) continue;
        for (int k = 0; i + k <= n; ++k) {
            if (b.coeff(k) == 0) continue;
            s.set_coeff(i + k, s.coeff(i + k) + a.coeff(i) * b.coeff(k));
        }
    }
    return s;
}

TruncatedSeries series_invert(const TruncatedSeries& a) {
    const Coeff& a0 = a.coeff(0);
    if (a0 != 1 && a0 != -1)
        throw NonUnitConstantTerm("series_invert: constant term must be +1 or -1");
    const int n = a.order();
    TruncatedSeries b(n);
    b.set_coeff(0, a0); /* 1/a0 = a0 for a unit */
    for (int m = 1; m <= n; ++m) {
        Coeff acc = 0;
        for (int k = 1; k <= m; ++k) {
            if (a.coeff(k) == 0) continue;
            acc += a.coeff(k) * b.coeff(m - k);
        }
        b.set_coeff(m, -a0 * acc);
    }
    return b;
}

namespace {

/* Multiply s by (1 - sign * q^e) in place; a no-op when e exceeds the order. */
void apply_binomial_factor(TruncatedSeries& s, int sign, int e) {
    const int n = s.order();
    if (e > n) return;
    for (int i = n; i >= e; --i) {
        Coeff c = s.coeff(i) - Coeff(sign) * s.coeff(i - e);
        s.set_coeff(i, std::move(c));
    }
}

} // namespace

TruncatedSeries pochhammer_finite(int sign, int offset, int modulus, int count, int order) {
    if (sign != 1 && sign != -1) throw Error("pochhammer sign must be +1 or -1");
    if (modulus < 1) throw Error("pochhammer modulus must be >= 1");
    if (offset < 0) throw Error("pochhammer offset must be >= 0");
    if (count < 0) throw Error("pochhammer count must be >= 0");
    TruncatedSeries s = TruncatedSeries::one(order);
    for (int i = 0; i < count; ++i) {
        const long long e = offset + static_cast<long long>(modulus) * i;
        if (e == 0) {
            /* (1 - sign): either annihilates the product or doubles it. */
            TruncatedSeries c = TruncatedSeries::monomial(1 - Coeff(sign), 0, order);
            s = series_mul(s, c);
            continue;
        }
        if (e > order) break; /* later exponents only grow */
        apply_binomial_factor(s, sign, static_cast<int>(e));
    }
    return s;
}

TruncatedSeries pochhammer_infinite(int sign, int offset, int modulus, int order) {
    if (sign != 1 && sign != -1) throw Error("pochhammer sign must be +1 or -1");
    if (modulus < 1) throw Error("pochhammer modulus must be >= 1");
    if (offset < 1)
        throw DivergentProduct("pochhammer_infinite: offset 0 gives no q-expansion");
    TruncatedSeries s = TruncatedSeries::one(order);
    for (long long e = offset; e <= order; e += modulus)
        apply_binomial_factor(s, sign, static_cast<int>(e));
    return s;
}

TruncatedSeries product_series(const ProductSpec& spec, int order) {
    TruncatedSeries num = TruncatedSeries::one(order);
    TruncatedSeries den = TruncatedSeries::one(order);
    bool have_den = false;
    for (const ProductFactor& f : spec.factors) {
        TruncatedSeries p = pochhammer_infinite(f.sign, f.offset, f.modulus, order);
        if (f.denominator) {
            den = series_mul(den, p);
            have_den = true;
        } else {
            num = series_mul(num, p);
        }
    }
    if (!have_den) return num;
    return series_mul(num, series_invert(den));
}

} // namespace pil
