#ifndef PIL_SERIES_HPP
#define PIL_SERIES_HPP

/*
 * Truncated formal power series in q with exact integer coefficients.
 *
 * A TruncatedSeries of order N stores the N+1 coefficients of
 * $\sum_{n=0}^{N} a_n q^n$ and stands for a series known modulo $q^{N+1}$.
 * All arithmetic is exact over the integers (boost cpp_int), floats are
 * never involved.  Binary operations truncate to the smaller order of the
 * two operands, so precision loss is explicit and monotone.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "pil/errors.hpp"

namespace pil {

using Coeff = boost::multiprecision::cpp_int;

class TruncatedSeries {
public:
    /* Zero series of the given order (order >= 0). */
    explicit TruncatedSeries(int order);

    static TruncatedSeries one(int order);

    /* c * q^power, coefficients beyond `order` are dropped. */
    static TruncatedSeries monomial(const Coeff& c, int power, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    /* Coefficient of q^n; n beyond the order reads as zero. */
    const Coeff& coeff(int n) const;
    void set_coeff(int n, Coeff c);

    /* Copy truncated to new_order <= order. */
    TruncatedSeries truncated(int new_order) const;

    bool operator==(const TruncatedSeries& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const TruncatedSeries& other) const { return !(*this == other); }

private:
    std::vector<Coeff> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);

/* Cauchy product, truncated to min(order a, order b). */
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/*
 * Reciprocal of a series whose constant term is a unit ($\pm 1$), via the
 * usual recursion $b_n = -a_0 \sum_{k=1}^{n} a_k b_{n-k}$.  Anything else
 * has no integer-coefficient inverse and raises NonUnitConstantTerm.
 */
TruncatedSeries series_invert(const TruncatedSeries& a);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return series_add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return series_sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }

/*
 * Finite rising factorial $(s\,q^j;\,q^d)_n = \prod_{i=0}^{n-1}(1 - s\,q^{j+di})$
 * with s = +1 or -1, truncated to the given order.  j = 0 is legal here;
 * for s = -1 it contributes a factor of 2.
 */
TruncatedSeries pochhammer_finite(int sign, int offset, int modulus, int count, int order);

/*
 * Infinite product $(s\,q^j;\,q^d)_\infty$, truncated to the given order.
 * Factors with exponent beyond the order are congruent to 1 and skipped,
 * so only about order/modulus factors are ever multiplied.  j >= 1 is
 * required: with j = 0 the product has no q-expansion (DivergentProduct).
 */
TruncatedSeries pochhammer_infinite(int sign, int offset, int modulus, int order);

/*
 * A finite multiset of infinite Pochhammer factors, each on the numerator
 * or denominator side.  Example: 1/(q, q^4, q^7; q^8)_\infty is three
 * denominator factors with sign +1, offsets 1, 4, 7, modulus 8.
 */
struct ProductFactor {
    int sign;         // sign of a in (a; q^d) where a = sign * q^offset
    int offset;       // j >= 1
    int modulus;      // d >= 1
    bool denominator; // true: factor divides instead of multiplies
};

struct ProductSpec {
    std::vector<ProductFactor> factors;
};

/* Expand the product to the given order.  Empty spec gives 1. */
TruncatedSeries product_series(const ProductSpec& spec, int order);

} // namespace pil

#endif
