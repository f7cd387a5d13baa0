#pragma once

#include "hessbound/codelist.hpp"
#include "hessbound/interval.hpp"

namespace hb {

// What to carry through the codelist sweep besides value and gradient:
// the full interval Hessian, a scalar eigenvalue enclosure, or both.
enum class Mode { Hessian, Eigen, Both };

struct PropagateOptions {
    Mode mode = Mode::Both;
    // relative outward inflation applied to every computed interval;
    // 0 disables it
    double inflation_eps = 0.0;
};

struct EvalTrace {
    Interval value;
    IntervalVector gradient;
    IntervalMatrix hessian;  // dim() == 0 unless requested
    Interval eig;            // enclosure of all Hessian eigenvalues over the box
    bool has_hessian = false;
    bool has_eig = false;
};

// Forward sweep over the codelist carrying (value, gradient, Hessian/eig)
// enclosures per line; returns the final line's state.
EvalTrace propagate(const Codelist& cl, const Box& box, const PropagateOptions& opt = {});

// Exact (floating-point) Hessian at a point, via the same sweep on a
// degenerate box. Used by the sampling oracle.
std::vector<std::vector<double>> hessian_at_point(const Codelist& cl,
                                                  const std::vector<double>& x);

}  // namespace hb
