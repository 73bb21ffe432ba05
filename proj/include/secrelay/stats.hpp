#pragma once

#include <cstdint>

namespace secrelay {

// P(X <= k) for X ~ Binomial(n, p).
double binomial_cdf(std::uint64_t k, std::uint64_t n, double p);

// Smallest k in [0, n] with P(X <= k) >= q. Integer binary search on the
// CDF, so the discrete convention is explicit rather than inherited from a
// library's real-valued quantile.
std::uint64_t binomial_quantile(double q, std::uint64_t n, double p);

}  // namespace secrelay
