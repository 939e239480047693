#pragma once

#include <random>

#include "fconn/io.hpp"
#include "fconn/reduce.hpp"

namespace testing_support {

using namespace fconn;

inline std::mt19937& rng() {
    static std::mt19937 g(20240611u);
    return g;
}

inline long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Q rand_q(long bound = 5, long den = 4) { return make_q(rand_int(-bound, bound), rand_int(1, den)); }

inline Q rand_nonzero_q(long bound = 5, long den = 4) {
    Q q;
    while (q == 0) q = rand_q(bound, den);
    return q;
}

inline Cyc rand_cyc(int order, long bound = 3) {
    if (order == 1) return Cyc(rand_q(bound, 3));
    std::vector<Q> c(static_cast<size_t>(euler_phi(order)));
    for (auto& v : c) v = rand_q(bound, 3);
    return Cyc(order, c);
}

// Laurent polynomial with integer exponents in [lo, hi].
inline Series rand_series(long lo, long hi, int order = 1, double density = 0.6) {
    Series s;
    std::bernoulli_distribution keep(density);
    for (long k = lo; k <= hi; ++k)
        if (keep(rng())) s.add_term(Q(k), rand_cyc(order));
    return s;
}

inline LoopMatrix rand_loop(int n, long lo, long hi, double density = 0.6) {
    LoopMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rand_series(lo, hi, 1, density);
    return m;
}

inline KMat rand_invertible(size_t n, long bound = 2) {
    while (true) {
        KMat a = kmat_zero(n, n);
        for (auto& row : a)
            for (auto& v : row) v = Cyc(Q(rand_int(-bound, bound)));
        if (!determinant(a).is_zero()) return a;
    }
}

// Random strictly positive-grade X at x: entries E_ij z^m with grade in (0, hi].
inline LoopMatrix rand_positive(const ApartmentPoint& x, const Q& hi, double density = 0.5) {
    int n = x.n();
    LoopMatrix m(n);
    std::bernoulli_distribution keep(density);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Q a = x.root_value(i, j);
            for (long k = floor_long(Q(-a)); Q(k + a) <= hi; ++k)
                if (Q(k + a) > 0 && keep(rng())) m(i, j).add_term(Q(k), Cyc(rand_nonzero_q(3, 2)));
        }
    return m;
}

inline LoopMatrix monomial(int n, int i, int j, const Cyc& c, const Q& q) {
    return LoopMatrix::elementary(n, i, j, Series::monomial(c, q, 1));
}

inline bool certified(const ReductionResult& r, const Connection& c) {
    LoopMatrix diff = truncate_grade(gauge(r.p, c), r.x, r.certified_grade) - r.formal_type.matrix();
    return truncate_grade(diff, r.x, r.certified_grade).is_zero();
}

}  // namespace testing_support
