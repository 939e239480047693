#include "fconn/strata.hpp"

#include <algorithm>
#include <map>

namespace fconn {

Stratum leading_stratum(const Connection& m, const ApartmentPoint& x) {
    if (m.n() != x.n()) throw Error(ErrorKind::Mismatch, "point and matrix have different sizes");
    LoopMatrix d = m - x.as_matrix();
    Q depth;
    try {
        depth = mp_depth(d, x);
    } catch (const PrecisionError& e) {
        auto p = grade_precision(d, x);
        if (p && *p > 0) return {x, Q(0), LoopMatrix(m.n())};
        throw;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::ZeroInput) throw;
        return {x, Q(0), LoopMatrix(m.n())};
    }
    Q r = depth < 0 ? Q(-depth) : Q(0);
    return {x, r, graded_component(d, x, -r)};
}

bool is_fundamental(const Stratum& st) {
    if (st.beta0.is_zero()) return false;
    return !power(st.beta0, st.beta0.n()).is_zero();
}

bool contains_stratum(const Connection& m, const Stratum& st) {
    LoopMatrix d = m - st.x.as_matrix();
    if (!graded_below(d, st.x, -st.r).is_zero()) return false;
    return graded_component(d, st.x, -st.r) == st.beta0;
}

KMat residue_form(const LoopMatrix& b, const ApartmentPoint& x) {
    size_t n = static_cast<size_t>(b.n());
    KMat c = kmat_zero(n, n);
    for (int i = 0; i < b.n(); ++i)
        for (int j = 0; j < b.n(); ++j) c[static_cast<size_t>(i)][static_cast<size_t>(j)] = b(i, j).coeff(-x.root_value(i, j));
    return c;
}

LoopMatrix lift_constant(const KMat& c, const ApartmentPoint& x) {
    int n = x.n();
    LoopMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Cyc& v = c[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (v.is_zero()) continue;
            Q a = x.root_value(i, j);
            if (!is_integer(a)) throw Error(ErrorKind::NotInHx, "constant matrix mixes coordinate classes of the point");
            m(i, j) = Series::monomial(v, -a, 1);
        }
    return m;
}

namespace {

struct Edge {
    int from, to;
    Q w;
};

// Karp's maximum cycle mean with every vertex as a start; nullopt if acyclic.
std::optional<Q> max_cycle_mean(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<std::optional<Q>>> dist(static_cast<size_t>(n + 1),
                                                    std::vector<std::optional<Q>>(static_cast<size_t>(n)));
    for (auto& v : dist[0]) v = Q(0);
    for (int k = 1; k <= n; ++k)
        for (const auto& e : edges) {
            const auto& prev = dist[static_cast<size_t>(k - 1)][static_cast<size_t>(e.from)];
            if (!prev) continue;
            Q cand = *prev + e.w;
            auto& cur = dist[static_cast<size_t>(k)][static_cast<size_t>(e.to)];
            if (!cur || cand > *cur) cur = cand;
        }
    std::optional<Q> best;
    for (int v = 0; v < n; ++v) {
        const auto& dn = dist[static_cast<size_t>(n)][static_cast<size_t>(v)];
        if (!dn) continue;
        std::optional<Q> worst;
        for (int k = 0; k < n; ++k) {
            const auto& dk = dist[static_cast<size_t>(k)][static_cast<size_t>(v)];
            if (!dk) continue;
            Q val = (*dn - *dk) / (n - k);
            if (!worst || val < *worst) worst = val;
        }
        if (worst && (!best || *worst > *best)) best = worst;
    }
    return best;
}

// Potentials y with y_j <= y_i + t - w for every edge, first coordinate 0.
ApartmentPoint potentials(int n, const std::vector<Edge>& edges, const Q& t) {
    std::vector<Q> y(static_cast<size_t>(n));
    for (int it = 0; it < n; ++it)
        for (const auto& e : edges) {
            Q cand = y[static_cast<size_t>(e.from)] + t - e.w;
            if (cand < y[static_cast<size_t>(e.to)]) y[static_cast<size_t>(e.to)] = cand;
        }
    Q y0 = y[0];
    for (auto& v : y) v -= y0;
    return ApartmentPoint(std::move(y));
}

// Basis adapted to the kernel flag of a nilpotent N, homogeneous in the
// coordinate classes of y. Columns sit at the coordinates of their class.
KMat flag_basis(const KMat& nmat, const ApartmentPoint& y) {
    size_t n = nmat.size();
    std::map<Q, std::vector<size_t>> classes;
    for (size_t i = 0; i < n; ++i) classes[frac(y[static_cast<int>(i)])].push_back(i);
    std::vector<KMat> powers{nmat};
    for (size_t k = 1; k < n; ++k) powers.push_back(kmat_mul(powers.back(), nmat));
    KMat p = kmat_zero(n, n);
    for (const auto& [c, idx] : classes) {
        std::vector<KVec> chosen;
        for (size_t k = 0; k < n && chosen.size() < idx.size(); ++k) {
            KMat sub = kmat_zero(n, idx.size());
            for (size_t r = 0; r < n; ++r)
                for (size_t a = 0; a < idx.size(); ++a) sub[r][a] = powers[k][r][idx[a]];
            for (const auto& v : nullspace(sub, idx.size())) {
                std::vector<KVec> trial = chosen;
                trial.push_back(v);
                if (rank(trial, idx.size()) == trial.size()) chosen = std::move(trial);
            }
        }
        if (chosen.size() != idx.size()) throw Error(ErrorKind::Unsupported, "leading term is not nilpotent");
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = 0; b < idx.size(); ++b) p[idx[b]][idx[a]] = chosen[a][b];
    }
    return p;
}

}  // namespace

SlopeResult slope(const Connection& m0) {
    int n = m0.n();
    LoopMatrix cur = m0;
    GaugeElement total = GaugeElement::identity(n);
    for (int iter = 0; iter < 1000; ++iter) {
        std::vector<Edge> real, all;
        std::optional<Q> unknown_from;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Series& s = cur(i, j);
                if (auto v = s.valuation()) {
                    real.push_back({i, j, -*v});
                    all.push_back({i, j, -*v});
                } else if (auto p = s.prec()) {
                    all.push_back({i, j, -*p});
                    if (!unknown_from || *p < *unknown_from) unknown_from = *p;
                }
            }
        auto lam = max_cycle_mean(n, real);
        auto lam_all = max_cycle_mean(n, all);
        if (lam_all && *lam_all > 0 && (!lam || *lam_all > *lam))
            throw PrecisionError(*unknown_from, "slope depends on matrix entries that are not known");
        if (!lam || *lam <= 0) {
            ApartmentPoint y = potentials(n, real, Q(0));
            Stratum st = leading_stratum(cur, y);
            return {Q(0), y, false, total, st};
        }
        Q t = *lam;
        ApartmentPoint y = potentials(n, real, t);
        Stratum st = leading_stratum(cur, y);
        if (st.r != t) throw Error(ErrorKind::Unsupported, "internal: optimal point does not attain the cycle mean");
        if (is_fundamental(st)) return {t, y, true, total, st};
        KMat nmat = kmat_zero(static_cast<size_t>(n), static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const auto& terms = st.beta0(i, j).terms();
                if (!terms.empty()) nmat[static_cast<size_t>(i)][static_cast<size_t>(j)] = terms.begin()->second;
            }
        KMat p = flag_basis(nmat, y);
        auto p_inv = inverse(p);
        GaugeElement g = GaugeElement::from_pair(lift_constant(*p_inv, y), lift_constant(p, y), "flag");
        cur = gauge(g, cur);
        total = g * total;
    }
    throw Error(ErrorKind::Unsupported, "slope iteration did not terminate");
}

bool is_resonant(const std::vector<Q>& b, const ApartmentPoint& x) {
    for (int i = 0; i < x.n(); ++i)
        for (int j = 0; j < x.n(); ++j) {
            if (i == j) continue;
            Q ab = b[static_cast<size_t>(i)] - b[static_cast<size_t>(j)];
            if (ab < 0 && is_integer(ab + x.root_value(i, j))) return true;
        }
    return false;
}

DepthZeroDiagonal diagonalize_depth_zero(const Stratum& st) {
    if (st.r != 0) throw Error(ErrorKind::Unsupported, "diagonalization is for depth-zero strata");
    const ApartmentPoint& x = st.x;
    size_t n = static_cast<size_t>(x.n());
    KMat c = residue_form(st.beta0, x);
    if (lift_constant(c, x) != st.beta0) throw Error(ErrorKind::NotRegular, "leading term is not homogeneous of grade 0");
    std::map<Q, std::vector<size_t>> classes;
    for (size_t i = 0; i < n; ++i) classes[frac(x[static_cast<int>(i)])].push_back(i);
    KMat p = kmat_zero(n, n);
    std::vector<Q> b(n);
    for (const auto& [cl, idx] : classes) {
        size_t k = idx.size();
        KMat sub = kmat_zero(k, k);
        for (size_t a = 0; a < k; ++a)
            for (size_t bb = 0; bb < k; ++bb) sub[a][bb] = c[idx[a]][idx[bb]];
        bool diagonal = true;
        for (size_t a = 0; a < k; ++a)
            for (size_t bb = 0; bb < k; ++bb)
                if (a != bb && !sub[a][bb].is_zero()) diagonal = false;
        if (diagonal) {
            std::vector<Q> seen;
            for (size_t a = 0; a < k; ++a) {
                if (!sub[a][a].is_rational()) throw Error(ErrorKind::Unsupported, "residue eigenvalues are not rational");
                Q v = sub[a][a].rational();
                if (std::find(seen.begin(), seen.end(), v) != seen.end())
                    throw Error(ErrorKind::NotRegular, "residue has a repeated eigenvalue");
                seen.push_back(v);
                p[idx[a]][idx[a]] = Cyc(1L);
                b[idx[a]] = v;
            }
            continue;
        }
        auto ev = rational_eigenvalues(sub);
        if (!ev) throw Error(ErrorKind::Unsupported, "residue eigenvalues are not rational");
        for (size_t a = 1; a < ev->size(); ++a)
            if ((*ev)[a] == (*ev)[a - 1]) throw Error(ErrorKind::NotRegular, "residue has a repeated eigenvalue");
        for (size_t a = 0; a < k; ++a) {
            KMat shifted = sub;
            for (size_t d = 0; d < k; ++d) shifted[d][d] -= Cyc((*ev)[a]);
            auto ns = nullspace(shifted, k);
            for (size_t d = 0; d < k; ++d) p[idx[d]][idx[a]] = ns.at(0)[d];
            b[idx[a]] = (*ev)[a];
        }
    }
    auto p_inv = inverse(p);
    GaugeElement m = GaugeElement::from_pair(lift_constant(*p_inv, x), lift_constant(p, x), "diag");
    LoopMatrix d(x.n());
    for (int i = 0; i < x.n(); ++i) d(i, i) = Series::constant(Cyc(b[static_cast<size_t>(i)]));
    return {m, {x, Q(0), d}, b};
}

std::optional<RegularInfo> is_regular_stratum(const Stratum& st) {
    if (!is_fundamental(st)) return std::nullopt;
    const ApartmentPoint& x = st.x;
    int n = x.n();
    RegularInfo info;
    std::map<long, long> by_denominator;
    for (const Q& g : critical_numbers(x)) {
        auto src = graded_slots(x, g);
        auto dst = graded_slots(x, g - st.r);
        KMat a = kmat_zero(dst.size(), src.size());
        for (size_t s = 0; s < src.size(); ++s) {
            KVec unit(src.size());
            unit[s] = Cyc(1L);
            LoopMatrix e = from_slot_coords(n, src, unit);
            KVec img = slot_coords(commutator(st.beta0, e), dst);
            for (size_t d = 0; d < dst.size(); ++d) a[d][s] = img[d];
        }
        for (const auto& v : nullspace(a, src.size())) {
            LoopMatrix k = from_slot_coords(n, src, v);
            if (g == 0 && !is_semisimple(residue_form(k, x))) return std::nullopt;
            info.centralizer.push_back(k);
            by_denominator[g.get_den().get_si()] += 1;
        }
        if (static_cast<int>(info.centralizer.size()) > n) return std::nullopt;
    }
    if (static_cast<int>(info.centralizer.size()) != n) return std::nullopt;
    for (size_t a = 0; a < info.centralizer.size(); ++a)
        for (size_t b = a + 1; b < info.centralizer.size(); ++b)
            if (!commutator(info.centralizer[a], info.centralizer[b]).is_zero()) return std::nullopt;
    // blocks with d | e_j contribute phi(d) kernel elements of exact denominator d
    std::map<long, long> exact;
    std::vector<int> parts;
    for (long d = n; d >= 1; --d) {
        long c = by_denominator.count(d) ? by_denominator[d] : 0;
        if (c % euler_phi(static_cast<int>(d)) != 0) return std::nullopt;
        long divisible = c / euler_phi(static_cast<int>(d));
        for (const auto& [e, cnt] : exact)
            if (e % d == 0) divisible -= cnt;
        if (divisible < 0) return std::nullopt;
        if (divisible > 0) exact[d] = divisible;
        for (long k = 0; k < divisible; ++k) parts.push_back(static_cast<int>(d));
    }
    for (const auto& [d, c] : by_denominator)
        if (d > n) return std::nullopt;
    info.cls = WeylClass::from_partition(parts);
    if (info.cls.n != n) return std::nullopt;
    if (st.r == 0) {
        try {
            auto diag = diagonalize_depth_zero(st);
            if (is_resonant(diag.eigenvalues, x)) return std::nullopt;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::NotRegular) return std::nullopt;
            throw;
        }
    }
    return info;
}

}  // namespace fconn
