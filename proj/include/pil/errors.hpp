#ifndef PIL_ERRORS_HPP
#define PIL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pil {

/* Common base so callers can catch everything from this library at once. */
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* Series inversion needs a unit constant term ($\pm 1$ over the integers). */
struct NonUnitConstantTerm : Error {
    explicit NonUnitConstantTerm(const std::string& msg) : Error(msg) {}
};

/* An infinite product $(\mp q^j; q^d)_\infty$ with $j = 0$ has no q-expansion. */
struct DivergentProduct : Error {
    explicit DivergentProduct(const std::string& msg) : Error(msg) {}
};

/* Gordon parameters outside the supported range (2 <= k <= 5, 1 <= a <= k). */
struct InvalidGordonParams : Error {
    explicit InvalidGordonParams(const std::string& msg) : Error(msg) {}
};

/* A partition fails the constraint family it was claimed to satisfy. */
struct ConstraintViolation : Error {
    explicit ConstraintViolation(const std::string& msg) : Error(msg) {}
};

/* Requested base-partition variant does not exist for the family. */
struct InvalidVariant : Error {
    explicit InvalidVariant(const std::string& msg) : Error(msg) {}
};

/* A forward or backward move from a blocked configuration. */
struct InadmissibleMove : Error {
    explicit InadmissibleMove(const std::string& msg) : Error(msg) {}
};

/* Bad text input (partition syntax, family tags, CLI values). */
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/* Unknown identity tag passed to the verifier. */
struct UnknownIdentity : Error {
    explicit UnknownIdentity(const std::string& msg) : Error(msg) {}
};

/* A polynomial division that should be exact left a remainder. */
struct NonIntegralDivision : Error {
    explicit NonIntegralDivision(const std::string& msg) : Error(msg) {}
};

} // namespace pil

#endif
