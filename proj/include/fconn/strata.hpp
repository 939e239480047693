#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fconn/torus.hpp"

namespace fconn {

struct Stratum {
    ApartmentPoint x;
    Q r;
    LoopMatrix beta0;  // homogeneous of grade -r at x
};

Stratum leading_stratum(const Connection& m, const ApartmentPoint& x);
bool is_fundamental(const Stratum& st);
bool contains_stratum(const Connection& m, const Stratum& st);

struct SlopeResult {
    Q slope;
    ApartmentPoint x;       // point carrying the minimal-depth stratum
    bool fundamental = false;
    GaugeElement gauge;     // the stratum sits in gauge(gauge, C) at x
    Stratum stratum;
};
SlopeResult slope(const Connection& m);

struct RegularInfo {
    WeylClass cls;
    std::vector<LoopMatrix> centralizer;  // graded basis of z(beta0), one period
};
// Returns the class of the centralizer torus when the stratum is regular;
// for r = 0 also requires nonresonance.
std::optional<RegularInfo> is_regular_stratum(const Stratum& st);

// Constant matrix z^{x} B z^{-x} of a grade-0 homogeneous B.
KMat residue_form(const LoopMatrix& b, const ApartmentPoint& x);
// Theta-lift z^{-x} C z^{x} of a constant matrix respecting the classes of x.
LoopMatrix lift_constant(const KMat& c, const ApartmentPoint& x);

bool is_resonant(const std::vector<Q>& eigenvalues, const ApartmentPoint& x);

struct DepthZeroDiagonal {
    GaugeElement m;
    Stratum stratum;           // beta0 diagonal constant
    std::vector<Q> eigenvalues;
};
DepthZeroDiagonal diagonalize_depth_zero(const Stratum& st);

}  // namespace fconn
