#pragma once

#include <optional>
#include <vector>

#include "fconn/scalars.hpp"

namespace fconn {

// Dense matrices over the coefficient field, row-major.
using KVec = std::vector<Cyc>;
using KMat = std::vector<KVec>;

KMat kmat_zero(size_t rows, size_t cols);
KMat kmat_identity(size_t n);
KMat kmat_mul(const KMat& a, const KMat& b);
KVec kmat_apply(const KMat& a, const KVec& v);

struct Echelon {
    KMat rows;                // reduced row echelon form
    std::vector<size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_reduce(KMat a, size_t cols);
size_t rank(const KMat& a, size_t cols);
std::vector<KVec> nullspace(const KMat& a, size_t cols);
// Particular solution with all free variables set to zero.
std::optional<KVec> solve(const KMat& a, const KVec& b, size_t cols);
std::optional<KMat> inverse(const KMat& a);
Cyc determinant(const KMat& a);

// Polynomials over the coefficient field, low degree first, no trailing zeros.
using KPoly = std::vector<Cyc>;
KPoly kpoly_trim(KPoly p);
KPoly kpoly_gcd(KPoly a, KPoly b);
KPoly kpoly_derivative(const KPoly& p);
KPoly characteristic_polynomial(const KMat& a);
KPoly minimal_polynomial(const KMat& a);
bool is_semisimple(const KMat& a);
// Roots with multiplicity when the characteristic polynomial splits over Q.
std::optional<std::vector<Q>> rational_eigenvalues(const KMat& a);

}  // namespace fconn
