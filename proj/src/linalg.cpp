#include "fconn/linalg.hpp"

#include <algorithm>

namespace fconn {

KMat kmat_zero(size_t rows, size_t cols) { return KMat(rows, KVec(cols)); }

KMat kmat_identity(size_t n) {
    KMat m = kmat_zero(n, n);
    for (size_t i = 0; i < n; ++i) m[i][i] = Cyc(1L);
    return m;
}

KMat kmat_mul(const KMat& a, const KMat& b) {
    size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    KMat out = kmat_zero(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < c; ++j)
                if (!b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

KVec kmat_apply(const KMat& a, const KVec& v) {
    KVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (!a[i][j].is_zero() && !v[j].is_zero()) out[i] += a[i][j] * v[j];
    return out;
}

Echelon row_reduce(KMat a, size_t cols) {
    Echelon e;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < a.size(); ++col) {
        size_t piv = row;
        while (piv < a.size() && a[piv][col].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[row]);
        Cyc inv = a[row][col].inverse();
        for (size_t j = col; j < cols; ++j)
            if (!a[row][j].is_zero()) a[row][j] *= inv;
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            Cyc f = a[i][col];
            for (size_t j = col; j < cols; ++j)
                if (!a[row][j].is_zero()) a[i][j] -= f * a[row][j];
        }
        e.pivots.push_back(col);
        ++row;
    }
    a.resize(row);
    e.rows = std::move(a);
    return e;
}

size_t rank(const KMat& a, size_t cols) { return row_reduce(a, cols).pivots.size(); }

std::vector<KVec> nullspace(const KMat& a, size_t cols) {
    Echelon e = row_reduce(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : e.pivots) is_pivot[p] = true;
    std::vector<KVec> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        KVec v(cols);
        v[f] = Cyc(1L);
        for (size_t r = 0; r < e.pivots.size(); ++r)
            if (!e.rows[r][f].is_zero()) v[e.pivots[r]] = -e.rows[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<KVec> solve(const KMat& a, const KVec& b, size_t cols) {
    KMat aug = a;
    for (size_t i = 0; i < aug.size(); ++i) {
        aug[i].resize(cols + 1);
        aug[i][cols] = b[i];
    }
    Echelon e = row_reduce(aug, cols + 1);
    KVec x(cols);
    for (size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == cols) return std::nullopt;
        x[e.pivots[r]] = e.rows[r][cols];
    }
    return x;
}

std::optional<KMat> inverse(const KMat& a) {
    size_t n = a.size();
    KMat aug = a;
    for (size_t i = 0; i < n; ++i) {
        aug[i].resize(2 * n);
        aug[i][n + i] = Cyc(1L);
    }
    Echelon e = row_reduce(aug, 2 * n);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    KMat inv = kmat_zero(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = e.rows[i][n + j];
    return inv;
}

Cyc determinant(const KMat& a0) {
    KMat a = a0;
    size_t n = a.size();
    Cyc det(1L);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return Cyc();
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Cyc inv = a[col][col].inverse();
        for (size_t i = col + 1; i < n; ++i) {
            if (a[i][col].is_zero()) continue;
            Cyc f = a[i][col] * inv;
            for (size_t j = col; j < n; ++j)
                if (!a[col][j].is_zero()) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

}  // namespace fconn

namespace fconn {

KPoly kpoly_trim(KPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

namespace {

KPoly kpoly_rem(KPoly a, const KPoly& b) {
    a = kpoly_trim(std::move(a));
    Cyc lead_inv = b.back().inverse();
    while (a.size() >= b.size()) {
        Cyc f = a.back() * lead_inv;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a = kpoly_trim(std::move(a));
    }
    return a;
}

}  // namespace

KPoly kpoly_gcd(KPoly a, KPoly b) {
    a = kpoly_trim(std::move(a));
    b = kpoly_trim(std::move(b));
    while (!b.empty()) {
        KPoly r = kpoly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Cyc inv = a.back().inverse();
        for (auto& c : a) c *= inv;
    }
    return a;
}

KPoly kpoly_derivative(const KPoly& p) {
    KPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Cyc(Q(static_cast<long>(i))));
    return kpoly_trim(std::move(d));
}

KPoly characteristic_polynomial(const KMat& a) {
    // Faddeev-LeVerrier: c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I
    size_t n = a.size();
    KPoly c(n + 1);
    c[n] = Cyc(1L);
    KMat m = kmat_identity(n);
    for (size_t k = 1; k <= n; ++k) {
        KMat am = kmat_mul(a, m);
        Cyc tr;
        for (size_t i = 0; i < n; ++i) tr += am[i][i];
        c[n - k] = -(tr * Cyc(Q(1) / Q(static_cast<long>(k))));
        m = am;
        for (size_t i = 0; i < n; ++i) m[i][i] += c[n - k];
    }
    return c;
}

KPoly minimal_polynomial(const KMat& a) {
    size_t n = a.size();
    // rows are flattened powers I, A, A^2, ...; stop at the first dependency
    std::vector<KVec> powers;
    KMat p = kmat_identity(n);
    for (size_t d = 0; d <= n; ++d) {
        KVec flat;
        for (const auto& row : p) flat.insert(flat.end(), row.begin(), row.end());
        powers.push_back(flat);
        // solve sum_{i<d} c_i A^i = -A^d
        if (d > 0) {
            KMat sys = kmat_zero(n * n, d);
            KVec rhs(n * n);
            for (size_t r = 0; r < n * n; ++r) {
                for (size_t i = 0; i < d; ++i) sys[r][i] = powers[i][r];
                rhs[r] = -powers[d][r];
            }
            if (auto sol = solve(sys, rhs, d)) {
                KPoly mp(*sol);
                mp.push_back(Cyc(1L));
                return mp;
            }
        }
        p = kmat_mul(p, a);
    }
    return characteristic_polynomial(a);
}

bool is_semisimple(const KMat& a) {
    KPoly m = minimal_polynomial(a);
    return kpoly_gcd(m, kpoly_derivative(m)).size() == 1;
}

namespace {

std::vector<mpz_class> divisors(mpz_class v) {
    v = abs(v);
    std::vector<mpz_class> small, large;
    if (v > mpz_class("1000000000000000000")) throw Error(ErrorKind::Unsupported, "coefficient too large for rational root search");
    for (mpz_class d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            small.push_back(d);
            if (d * d != v) large.push_back(v / d);
        }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Q eval_q(const std::vector<Q>& p, const Q& x) {
    Q acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

}  // namespace

std::optional<std::vector<Q>> rational_eigenvalues(const KMat& a) {
    KPoly cp = characteristic_polynomial(a);
    std::vector<Q> p;
    for (const auto& c : cp) {
        if (!c.is_rational()) return std::nullopt;
        p.push_back(c.rational());
    }
    std::vector<Q> roots;
    while (p.size() > 1 && p[0] == 0) {
        roots.push_back(Q(0));
        p.erase(p.begin());
    }
    while (p.size() > 1) {
        mpz_class den = 1;
        for (const auto& c : p) den = lcm(den, c.get_den());
        std::vector<mpz_class> ip;
        for (const auto& c : p) ip.push_back(mpz_class(c * den));
        bool found = false;
        for (const auto& num : divisors(ip.front())) {
            for (const auto& dd : divisors(ip.back())) {
                for (int sign : {1, -1}) {
                    Q r(num * sign, dd);
                    r.canonicalize();
                    if (eval_q(p, r) != 0) continue;
                    roots.push_back(r);
                    // synthetic division by (x - r)
                    std::vector<Q> q(p.size() - 1);
                    Q carry = 0;
                    for (size_t i = p.size(); i-- > 1;) {
                        carry = carry * r + p[i];
                        q[i - 1] = carry;
                    }
                    p = q;
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) return std::nullopt;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace fconn
