#pragma once

#include <string>
#include <vector>

#include "fconn/apartment.hpp"

namespace fconn {

// M = [nabla_tau] in a fixed trivialization, so [nabla] = M dz/z.
using Connection = LoopMatrix;

// exp(X) for X of positive depth at x, summed until the powers pass grade g,
// then truncated at grade g.
LoopMatrix graded_exp(const LoopMatrix& X, const ApartmentPoint& x, const Q& g);

// An invertible loop matrix carried together with its inverse.
struct GaugeElement {
    LoopMatrix g;
    LoopMatrix g_inv;
    std::vector<std::string> factors;

    static GaugeElement identity(int n);
    static GaugeElement constant(const KMat& c);
    // diag(z^mu_1, ..., z^mu_n)
    static GaugeElement shear(const std::vector<Q>& mu);
    static GaugeElement exponential(const LoopMatrix& X, const ApartmentPoint& x, const Q& g);
    static GaugeElement from_pair(LoopMatrix g, LoopMatrix g_inv, std::string label = "g");

    int n() const { return g.n(); }
    GaugeElement inverse() const;
    friend GaugeElement operator*(const GaugeElement& a, const GaugeElement& b);
};

// g M g^-1 - tau(g) g^-1
LoopMatrix gauge(const GaugeElement& g, const Connection& m);
// Ad(g) M = g M g^-1
LoopMatrix adjoint(const GaugeElement& g, const LoopMatrix& m);

}  // namespace fconn
