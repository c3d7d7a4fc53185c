#pragma once

#include <string>
#include <vector>

#include "pil/bivariate.hpp"
#include "pil/family.hpp"
#include "pil/series.hpp"

namespace pil {

/* One coefficientwise comparison between two sides of an identity. */
struct SideComparison {
    std::string left;
    std::string right;
    bool pass = true;
    int first_n = -1; /* first mismatching q-power, -1 when pass */
    int first_m = -1; /* x-power of the mismatch, -1 for univariate */
    std::string left_value;
    std::string right_value;
};

/* How long each side took to compute, for diagnostics (callers should
 * keep timings out of deterministic output streams). */
struct TimedSide {
    std::string name;
    double seconds = 0.0;
};

struct VerificationReport {
    std::string identity;
    int order = 0;
    std::vector<TimedSide> sides;
    std::vector<SideComparison> comparisons;
    bool pass() const;
};

/* Tags accepted by run_identity; gordon(k,a) stands for the whole
 * two-parameter family. */
std::vector<std::string> known_identities();

/* Computes every available side of the named identity up to q^order
 * and compares them all pairwise along a chain.  Unrecognized names
 * raise UnknownIdentity. */
VerificationReport run_identity(const std::string& identity, int order);

/* Brute-force count tables reshaped for comparisons. */
TruncatedSeries table_x1(const CountTable& table, int order);
BivariateSeries table_to_bivariate(const CountTable& table, int order);

} // namespace pil
