#pragma once

#include <functional>

namespace secrelay {

// Unimodal bracket: low < mid < high with f(mid) > max(f(low), f(high)).
struct Bracket {
    double low;
    double mid;
    double high;
};

struct SearchResult {
    double argmax;     // power, strictly inside (low, high)
    double max_value;  // f(argmax)
    double low;        // final narrowed bracket
    double high;
    unsigned iterations;
};

// Expands/contracts geometrically from p_init (factor 4 per step) until the
// middle point beats both ends. Assumes f -> 0 at both ends of (0, inf),
// which the capacity objective guarantees. Throws NoPositiveValue when no
// probed point has f > 0; for the capacity objective that means the
// relative path loss is >= 1 and no positive-capacity power exists.
Bracket bracket_maximum(const std::function<double(double)>& f, double p_init);

// Derivative-free golden-section refinement of a bracket, run in log-power
// space so rel_tol bounds the relative width of the final interval.
// rel_tol must lie in (1e-12, 1e-2); gives up at 500 iterations.
SearchResult golden_section_max(const std::function<double(double)>& f, const Bracket& bracket,
                                double rel_tol);

}  // namespace secrelay
