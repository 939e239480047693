#include "fconn/torus.hpp"

#include <algorithm>
#include <sstream>

namespace fconn {

WeylClass WeylClass::from_partition(std::vector<int> parts) {
    WeylClass c;
    for (int p : parts) {
        if (p <= 0) throw Error(ErrorKind::Parse, "partition parts must be positive");
        c.n += p;
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    c.cycle_type = std::move(parts);
    return c;
}

bool WeylClass::is_identity() const {
    return std::all_of(cycle_type.begin(), cycle_type.end(), [](int p) { return p == 1; });
}

std::string WeylClass::str() const {
    std::string s = "[";
    for (size_t i = 0; i < cycle_type.size(); ++i) s += (i ? "," : "") + std::to_string(cycle_type[i]);
    return s + "]";
}

WeylClass parse_partition(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (ch != '[' && ch != ']' && ch != ' ') s.push_back(ch);
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw Error(ErrorKind::Parse, "bad partition '" + raw + "'");
        parts.push_back(std::stoi(tok));
    }
    if (parts.empty()) throw Error(ErrorKind::Parse, "empty partition");
    return WeylClass::from_partition(std::move(parts));
}

namespace {

// k such that the class is k^{n/k} or k^{(n-1)/k} 1; 0 if neither
int regular_block(const WeylClass& c) {
    if (c.is_identity()) return 1;
    int k = c.cycle_type.front();
    size_t big = static_cast<size_t>(std::count(c.cycle_type.begin(), c.cycle_type.end(), k));
    if (big == c.cycle_type.size()) return k;
    if (big + 1 == c.cycle_type.size() && c.cycle_type.back() == 1) return k;
    return 0;
}

void partitions_into(int n, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_into(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

bool is_regular_class(const WeylClass& c) { return regular_block(c) != 0; }

std::vector<WeylClass> regular_classes(int n) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    partitions_into(n, n, cur, all);
    std::vector<WeylClass> out;
    for (auto& p : all) {
        WeylClass c = WeylClass::from_partition(p);
        if (is_regular_class(c)) out.push_back(c);
    }
    return out;
}

bool DepthSet::admits(const Q& r) const {
    if (r < 0) return false;
    Q v = r * denom;
    if (!is_integer(v)) return false;
    if (denom == 1) return true;
    return gcd_long(v.get_num().get_si(), denom) == 1;
}

std::string DepthSet::str() const {
    if (denom == 1) return "{0, 1, 2, ...}";
    std::string d = std::to_string(denom);
    return "{m/" + d + " : m >= 1, gcd(m," + d + ") = 1}";
}

DepthSet regular_depths(const WeylClass& c) {
    int k = regular_block(c);
    if (k == 0) throw Error(ErrorKind::NotRegularClass, "class " + c.str() + " is not regular");
    return DepthSet{k};
}

TorusData TorusData::make(const WeylClass& c) {
    TorusData t;
    t.cls = c;
    t.sizes = c.cycle_type;
    std::vector<Q> base;
    int off = 0;
    long e = 1;
    for (int s : t.sizes) {
        t.offsets.push_back(off);
        off += s;
        e = lcm_long(e, s);
        for (int a = 0; a < s; ++a) base.push_back(make_q(-a, s));
    }
    t.e = static_cast<int>(e);
    t.base_point = ApartmentPoint(std::move(base));
    return t;
}

int TorusData::block_of(int i) const {
    for (int j = blocks() - 1; j >= 0; --j)
        if (i >= offset(j)) return j;
    return 0;
}

LoopMatrix TorusData::uniformizer_power(int j, long k) const {
    long ej = size(j);
    long q = k >= 0 ? k / ej : -((-k + ej - 1) / ej);
    long r = k - q * ej;
    LoopMatrix m(n());
    int o = offset(j);
    for (long a = 0; a < ej; ++a) {
        if (a + r < ej)
            m(o + static_cast<int>(a), o + static_cast<int>(a + r)) = Series::monomial(Cyc(1L), Q(q), 1);
        else
            m(o + static_cast<int>(a), o + static_cast<int>(a + r - ej)) = Series::monomial(Cyc(1L), Q(q + 1), 1);
    }
    return m;
}

LoopMatrix TorusData::block_identity(int j) const { return uniformizer_power(j, 0); }

bool SElement::is_zero() const {
    for (const auto& c : coeffs)
        if (!c.empty()) return false;
    return true;
}

LoopMatrix SElement::to_matrix(const TorusData& t) const {
    LoopMatrix m(t.n());
    for (int j = 0; j < t.blocks(); ++j) {
        long e = t.size(j);
        int o = t.offset(j);
        const auto& p = prec[static_cast<size_t>(j)];
        if (p) {
            for (long a = 0; a < e; ++a)
                for (long b = 0; b < e; ++b) {
                    long d = b - a;
                    long mm = *p + (((d - *p) % e) + e) % e;
                    m(o + static_cast<int>(a), o + static_cast<int>(b)) = Series::zero_to(make_q(mm - d, e));
                }
        }
        for (const auto& [k, c] : coeffs[static_cast<size_t>(j)]) {
            long q = k >= 0 ? k / e : -((-k + e - 1) / e);
            long r = k - q * e;
            for (long a = 0; a < e; ++a) {
                if (a + r < e)
                    m(o + static_cast<int>(a), o + static_cast<int>(a + r)).add_term(Q(q), c);
                else
                    m(o + static_cast<int>(a), o + static_cast<int>(a + r - e)).add_term(Q(q + 1), c);
            }
        }
    }
    return m;
}

SElement pi_s_element(const TorusData& t, const LoopMatrix& m) {
    SElement s;
    s.coeffs.resize(static_cast<size_t>(t.blocks()));
    s.prec.resize(static_cast<size_t>(t.blocks()));
    for (int j = 0; j < t.blocks(); ++j) {
        long e = t.size(j);
        int o = t.offset(j);
        Cyc inv_e(make_q(1, e));
        std::optional<long> bp;
        auto& out = s.coeffs[static_cast<size_t>(j)];
        for (long k = 0; k < e; ++k) {
            // tr(M_j varpi^{-k}), varpi^{-k} = z^{-1} varpi^{e-k}
            Series tr;
            for (long b = 0; b < e; ++b) {
                int col = o + static_cast<int>(b);
                if (b < k)
                    tr += m(o + static_cast<int>(b + e - k), col).shifted(Q(-1));
                else
                    tr += m(o + static_cast<int>(b - k), col);
            }
            if (auto p = tr.prec()) {
                long bound = k + ceil_long(*p) * e;
                if (!bp || bound < *bp) bp = bound;
            }
            for (const auto& [u, c] : tr.terms()) {
                Q q = make_q(u, tr.ram());
                if (!is_integer(q))
                    throw Error(ErrorKind::Unsupported, "corestriction of a ramified matrix is not supported");
                long idx = k + q.get_num().get_si() * e;
                Cyc v = c * inv_e;
                auto it = out.find(idx);
                if (it == out.end())
                    out.emplace(idx, v);
                else
                    it->second += v;
            }
        }
        for (auto it = out.begin(); it != out.end();) {
            if (it->second.is_zero() || (bp && it->first >= *bp))
                it = out.erase(it);
            else
                ++it;
        }
        s.prec[static_cast<size_t>(j)] = bp;
    }
    return s;
}

LoopMatrix pi_s(const TorusData& t, const LoopMatrix& m) { return pi_s_element(t, m).to_matrix(t); }

ConjugateTorus ConjugateTorus::standard(const TorusData& t) {
    return {t, LoopMatrix::identity(t.n()), LoopMatrix::identity(t.n())};
}

namespace {

bool integer_grades_diagonal(const LoopMatrix& b, const ApartmentPoint& x) {
    for (const auto& [g, comp] : mp_decompose(b, x)) {
        if (!is_integer(g)) continue;
        for (int i = 0; i < comp.n(); ++i)
            for (int j = 0; j < comp.n(); ++j)
                if (i != j && !comp(i, j).is_zero()) return false;
    }
    return true;
}

}  // namespace

bool is_graded_compatible(const ApartmentPoint& x, const TorusData& t) {
    return is_graded_compatible(x, ConjugateTorus::standard(t));
}

bool is_graded_compatible(const ApartmentPoint& x, const ConjugateTorus& ct) {
    const TorusData& t = ct.torus;
    if (x.n() != t.n()) throw Error(ErrorKind::Mismatch, "point and torus have different sizes");
    for (int j = 0; j < t.blocks(); ++j)
        for (long k = 0; k < t.size(j); ++k) {
            LoopMatrix b = ct.conj * t.uniformizer_power(j, k) * ct.conj_inv;
            if (!integer_grades_diagonal(b, x)) return false;
            LoopMatrix z = ct.conj_inv * grading_operator(b, x) * ct.conj;
            if (!pi_s(t, z).agrees_with(z)) return false;
        }
    return true;
}

std::optional<CompatWitness> compatible_points(const TorusData& t, const ApartmentPoint& y) {
    int n = t.n();
    if (y.n() != n) throw Error(ErrorKind::Mismatch, "point and torus have different sizes");
    if (n > 8) throw Error(ErrorKind::Unsupported, "compatible point search is limited to n <= 8");
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    do {
        std::vector<Q> d(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) d[static_cast<size_t>(perm[static_cast<size_t>(i)])] = y[i];
        for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] -= t.base_point[i];
        CompatWitness wit;
        wit.w.perm = perm;
        wit.w.transl.assign(static_cast<size_t>(n), 0);
        bool ok = true;
        for (int j = 0; j < t.blocks() && ok; ++j) {
            int o = t.offset(j);
            const Q& d0 = d[static_cast<size_t>(o)];
            Q sum = 0;
            for (int a = 0; a < t.size(j); ++a) {
                Q diff = d[static_cast<size_t>(o + a)] - d0;
                if (!is_integer(diff)) {
                    ok = false;
                    break;
                }
                sum += diff;
            }
            if (!ok) break;
            Q c = d0 + Q(floor_long(sum / t.size(j) + Q(1, 2)));
            wit.center.push_back(c);
            for (int a = 0; a < t.size(j); ++a)
                wit.w.transl[static_cast<size_t>(o + a)] = Q(c - d[static_cast<size_t>(o + a)]).get_num().get_si();
        }
        if (ok) return wit;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

Diagonalizer w_diagonalizer(const TorusData& t) {
    Diagonalizer d;
    int n = t.n();
    d.ram = t.e;
    d.g = LoopMatrix(n);
    d.g_inv = LoopMatrix(n);
    d.h = kmat_zero(static_cast<size_t>(n), static_cast<size_t>(n));
    d.h_inv = d.h;
    d.n0 = d.h;
    for (int j = 0; j < t.blocks(); ++j) {
        int e = t.size(j), o = t.offset(j);
        Cyc inv_e(make_q(1, e));
        for (int a = 0; a < e; ++a)
            for (int b = 0; b < e; ++b) {
                Cyc hv = Cyc::zeta(e, static_cast<long>(a) * b);
                Cyc hi = Cyc::zeta(e, -static_cast<long>(a) * b) * inv_e;
                size_t r = static_cast<size_t>(o + a), c = static_cast<size_t>(o + b);
                d.h[r][c] = hv;
                d.h_inv[r][c] = hi;
                d.g(o + a, o + b) = Series::monomial(hv, make_q(a, e), t.e);
                d.g_inv(o + a, o + b) = Series::monomial(hi, make_q(-b, e), t.e);
            }
        for (int b = 0; b < e; ++b) d.n0[static_cast<size_t>(o + (b + 1) % e)][static_cast<size_t>(o + b)] = Cyc(1L);
    }
    return d;
}

ConjugatorResult graded_conjugator(const GaugeElement& q0, const TorusData& t, const ApartmentPoint& x, const Q& prec) {
    if (!is_graded_compatible(x, t))
        throw Error(ErrorKind::NotCompatible, "point " + x.str() + " is not graded compatible with the torus");
    LoopMatrix tt = t.base_point.as_matrix();
    LoopMatrix w = truncate_grade(gauge(q0.inverse(), x.as_matrix()), x, prec);
    LoopMatrix diff = w - tt;
    for (const auto& [g, comp] : mp_decompose(diff, x)) {
        if (g > 0) break;
        if (g < 0 || !pi_s(t, comp).agrees_with(comp))
            throw Error(ErrorKind::NotCompatible, "conjugator has a grade " + to_string(g) + " part outside the torus");
    }
    GaugeElement k_total = GaugeElement::identity(t.n());
    for (const Q& l : critical_grades(x, Q(0), prec)) {
        if (l == 0) continue;
        LoopMatrix y = graded_component(w - tt, x, l);
        LoopMatrix nons = y - pi_s(t, y);
        if (nons.is_zero()) continue;
        GaugeElement k = GaugeElement::exponential(nons.scaled(Cyc(Q(-1 / l))), x, prec);
        k_total = k_total * k;
        w = truncate_grade(gauge(k.inverse(), w), x, prec);
    }
    GaugeElement conj = q0 * k_total;
    ConjugatorResult res{q0 * k_total.inverse() * q0.inverse(), {t, conj.g, conj.g_inv}};
    if (!is_graded_compatible(x, res.torus))
        throw Error(ErrorKind::NotCompatible, "conjugated torus failed the compatibility check");
    return res;
}

}  // namespace fconn
