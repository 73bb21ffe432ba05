#include "secrelay/stats.hpp"

#include <boost/math/distributions/binomial.hpp>

#include "secrelay/errors.hpp"

namespace secrelay {

double binomial_cdf(std::uint64_t k, std::uint64_t n, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("binomial p must be in [0, 1]");
    if (n == 0 || k >= n) return 1.0;
    const boost::math::binomial_distribution<double> dist(static_cast<double>(n), p);
    return boost::math::cdf(dist, static_cast<double>(k));
}

std::uint64_t binomial_quantile(double q, std::uint64_t n, double p) {
    if (!(q > 0.0 && q < 1.0)) throw InvalidParameter("binomial quantile level must be in (0, 1)");
    std::uint64_t lo = 0, hi = n;
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (binomial_cdf(mid, n, p) >= q)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

}  // namespace secrelay
