#pragma once

#include <optional>

#include "fconn/formaltype.hpp"

namespace fconn {

// X in g_x(l) with [X, beta0] = Y - pi_s(Y), taken in the kernel of pi_s.
LoopMatrix kernel_solve(const TorusData& t, const Stratum& st, const LoopMatrix& y, const Q& l);

struct ReductionResult {
    GaugeElement p;
    FormalType formal_type;
    LoopMatrix certificate;  // gauge(p, C) - A~, zero below certified_grade
    Q certified_grade;
    ApartmentPoint x;
};

// Gauge C into the torus up to grade `prec` (default: the input's grade
// precision, or 2 for exact input).
ReductionResult reduce_to_formal_type(const Connection& c, const TorusData& t, const ApartmentPoint& x,
                                      std::optional<Q> prec = std::nullopt);

}  // namespace fconn
