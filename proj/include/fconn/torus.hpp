#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fconn/gauge.hpp"

namespace fconn {

struct WeylClass {
    int n = 0;
    std::vector<int> cycle_type;  // descending

    static WeylClass from_partition(std::vector<int> parts);
    bool is_identity() const;
    // "[3,1]"
    std::string str() const;
    friend bool operator==(const WeylClass& a, const WeylClass& b) { return a.cycle_type == b.cycle_type; }
};

WeylClass parse_partition(const std::string& s);

bool is_regular_class(const WeylClass& c);
std::vector<WeylClass> regular_classes(int n);

// Admissible depths of regular strata for a regular class: r >= 0 with
// r * denom integral and, when denom > 1, the numerator prime to denom.
struct DepthSet {
    int denom = 1;
    bool admits(const Q& r) const;
    std::string str() const;
};
DepthSet regular_depths(const WeylClass& c);

// Block-Coxeter torus: block j occupies indices [offset_j, offset_j + e_j)
// and carries the uniformizer z*E_{last,first} + sum E_{i,i+1}.
struct TorusData {
    WeylClass cls;
    std::vector<int> sizes;
    std::vector<int> offsets;
    int e = 1;
    ApartmentPoint base_point;

    static TorusData make(const WeylClass& c);
    static TorusData split(int n) { return make(WeylClass::from_partition(std::vector<int>(static_cast<size_t>(n), 1))); }

    int n() const { return cls.n; }
    int blocks() const { return static_cast<int>(sizes.size()); }
    int size(int j) const { return sizes[static_cast<size_t>(j)]; }
    int offset(int j) const { return offsets[static_cast<size_t>(j)]; }
    int block_of(int i) const;
    bool is_split() const { return e == 1; }

    // varpi_j^k embedded in gl_n (zero outside block j); any integer k.
    LoopMatrix uniformizer_power(int j, long k) const;
    LoopMatrix block_identity(int j) const;
};

// Element of s: per block, coefficients of varpi_j^k. `prec[j]` is the first
// unknown power of varpi_j (nullopt if exact).
struct SElement {
    std::vector<std::map<long, Cyc>> coeffs;
    std::vector<std::optional<long>> prec;

    LoopMatrix to_matrix(const TorusData& t) const;
    bool is_zero() const;
};

SElement pi_s_element(const TorusData& t, const LoopMatrix& m);
// pi_s as a matrix, with entry precisions induced by the block precisions
LoopMatrix pi_s(const TorusData& t, const LoopMatrix& m);

// Ad(conj) s for the standard s of `torus`.
struct ConjugateTorus {
    TorusData torus;
    LoopMatrix conj;
    LoopMatrix conj_inv;

    static ConjugateTorus standard(const TorusData& t);
};

bool is_graded_compatible(const ApartmentPoint& x, const TorusData& t);
bool is_graded_compatible(const ApartmentPoint& x, const ConjugateTorus& t);

// Witness of y in Pi_gamma: w.y = base_point + sum_j center[j] * 1_{block j}.
struct CompatWitness {
    AffineWeylElt w;
    std::vector<Q> center;
};
std::optional<CompatWitness> compatible_points(const TorusData& t, const ApartmentPoint& y);

struct Diagonalizer {
    int ram = 1;
    LoopMatrix g, g_inv;  // g = z^{-t} h over E = F(z^{1/ram})
    KMat h, h_inv;
    KMat n0;              // g^-1 sigma(g), a cyclic permutation per block
};
Diagonalizer w_diagonalizer(const TorusData& t);

// q in G_x with Ad(q^-1 q0) s graded compatible with x, verified to grade
// `prec`. Needs x compatible with s and q0 acting trivially on grade 0.
struct ConjugatorResult {
    GaugeElement q;
    ConjugateTorus torus;  // Ad(q^-1 q0) s
};
ConjugatorResult graded_conjugator(const GaugeElement& q0, const TorusData& t, const ApartmentPoint& x, const Q& prec);

}  // namespace fconn
