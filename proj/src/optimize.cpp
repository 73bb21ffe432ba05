#include "secrelay/optimize.hpp"

#include <cmath>

#include "secrelay/errors.hpp"

namespace secrelay {

namespace {
constexpr double kStepFactor = 4.0;
constexpr int kMaxExpandSteps = 60;  // 4^60 spans ~1e36 in each direction
}  // namespace

Bracket bracket_maximum(const std::function<double(double)>& f, double p_init) {
    if (!(p_init > 0.0) || !std::isfinite(p_init))
        throw InvalidParameter("p_init must be finite and > 0");

    double m = p_init;
    double fm = f(m);
    if (!(fm > 0.0)) {
        // Probe outward in both directions for a positive value before
        // concluding the objective is flat-or-negative everywhere. A probe
        // only counts if it clears a noise floor relative to the largest
        // magnitude seen so far: the capacity objective is evaluated through
        // log differences whose absolute error at extreme powers reaches
        // ~1e-10, and a never-positive objective decays through that noise
        // on its way to zero.
        double noise_floor = 1e-9 * std::abs(fm);
        auto genuine = [&noise_floor](double v) { return v > noise_floor; };
        auto observe = [&noise_floor](double v) {
            noise_floor = std::max(noise_floor, 1e-9 * std::abs(v));
        };
        double up = p_init, dn = p_init;
        bool found = false;
        for (int i = 0; i < kMaxExpandSteps && !found; ++i) {
            up *= kStepFactor;
            if (double fu = f(up); genuine(fu)) {
                m = up;
                fm = fu;
                found = true;
                break;
            } else {
                observe(fu);
            }
            dn /= kStepFactor;
            if (double fd = f(dn); genuine(fd)) {
                m = dn;
                fm = fd;
                found = true;
                break;
            } else {
                observe(fd);
            }
        }
        if (!found)
            throw NoPositiveValue(
                "objective is non-positive at every probed power; "
                "no capacity-positive operating point exists");
    }

    double hi = m * kStepFactor;
    double fhi = f(hi);
    double lo = m / kStepFactor;
    double flo = f(lo);
    int guard = 0;
    while (fhi > fm) {
        lo = m;
        flo = fm;
        m = hi;
        fm = fhi;
        hi *= kStepFactor;
        fhi = f(hi);
        if (++guard > kMaxExpandSteps)
            throw MaxIterationsExceeded("upward bracket expansion did not find a turnover");
    }
    guard = 0;
    while (flo > fm) {
        hi = m;
        fhi = fm;
        m = lo;
        fm = flo;
        lo /= kStepFactor;
        flo = f(lo);
        if (++guard > kMaxExpandSteps)
            throw MaxIterationsExceeded("downward bracket expansion did not find a turnover");
    }
    return {lo, m, hi};
}

SearchResult golden_section_max(const std::function<double(double)>& f, const Bracket& bracket,
                                double rel_tol) {
    if (!(rel_tol > 1e-12 && rel_tol < 1e-2))
        throw InvalidParameter("rel_tol must lie in (1e-12, 1e-2)");
    if (!(bracket.low > 0.0) || !(bracket.low < bracket.mid) || !(bracket.mid < bracket.high) ||
        !std::isfinite(bracket.high))
        throw InvalidParameter("bracket must satisfy 0 < low < mid < high");

    constexpr double invphi = 0.6180339887498948482;
    constexpr unsigned max_iters = 500;

    double a = std::log(bracket.low);
    double b = std::log(bracket.high);
    double c = b - (b - a) * invphi;
    double d = a + (b - a) * invphi;
    double fc = f(std::exp(c));
    double fd = f(std::exp(d));
    unsigned iters = 0;
    while (b - a > rel_tol) {
        if (++iters > max_iters)
            throw MaxIterationsExceeded("golden-section refinement exceeded 500 iterations");
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * invphi;
            fc = f(std::exp(c));
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * invphi;
            fd = f(std::exp(d));
        }
    }

    // c and d sit strictly inside the final interval; report the best of
    // them and the midpoint so max_value matches an actually evaluated point.
    SearchResult res;
    res.low = std::exp(a);
    res.high = std::exp(b);
    res.iterations = iters;
    const double xm = std::exp(0.5 * (a + b));
    const double fxm = f(xm);
    res.argmax = xm;
    res.max_value = fxm;
    if (fc > res.max_value) {
        res.argmax = std::exp(c);
        res.max_value = fc;
    }
    if (fd > res.max_value) {
        res.argmax = std::exp(d);
        res.max_value = fd;
    }
    return res;
}

}  // namespace secrelay
