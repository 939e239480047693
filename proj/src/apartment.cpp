#include "fconn/apartment.hpp"

#include <algorithm>
#include <sstream>

namespace fconn {

ApartmentPoint ApartmentPoint::shifted(const Q& c) const {
    ApartmentPoint r = *this;
    for (auto& v : r.coords) v += c;
    return r;
}

LoopMatrix ApartmentPoint::as_matrix() const {
    LoopMatrix m(n());
    for (int i = 0; i < n(); ++i) m(i, i) = Series::constant(Cyc((*this)[i]));
    return m;
}

std::string ApartmentPoint::str() const {
    std::string s = "(";
    for (int i = 0; i < n(); ++i) s += (i ? "," : "") + to_string((*this)[i]);
    return s + ")";
}

ApartmentPoint parse_point(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (ch != '(' && ch != ')' && ch != ' ') s.push_back(ch);
    std::vector<Q> c;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) c.push_back(parse_rational(tok));
    if (c.empty()) throw Error(ErrorKind::Parse, "empty point '" + raw + "'");
    return ApartmentPoint(std::move(c));
}

Q grade_of_elementary(int i, int j, const Q& m, const ApartmentPoint& x) { return m + x.root_value(i, j); }

std::optional<Q> grade_precision(const LoopMatrix& m, const ApartmentPoint& x) {
    std::optional<Q> p;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) {
            auto q = m(i, j).prec();
            if (!q) continue;
            Q g = *q + x.root_value(i, j);
            if (!p || g < *p) p = g;
        }
    return p;
}

namespace {

template <typename F>
void for_each_term(const LoopMatrix& m, const ApartmentPoint& x, F&& f) {
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) {
            const Series& s = m(i, j);
            for (const auto& [k, c] : s.terms()) {
                Q q = make_q(k, s.ram());
                f(i, j, q, q + x.root_value(i, j), c);
            }
        }
}

}  // namespace

GradedDecomposition mp_decompose(const LoopMatrix& m, const ApartmentPoint& x) {
    auto p = grade_precision(m, x);
    GradedDecomposition out;
    for_each_term(m, x, [&](int i, int j, const Q& q, const Q& g, const Cyc& c) {
        if (p && g >= *p) return;
        auto it = out.find(g);
        if (it == out.end()) it = out.emplace(g, LoopMatrix(m.n())).first;
        it->second(i, j).add_term(q, c);
    });
    return out;
}

LoopMatrix graded_component(const LoopMatrix& m, const ApartmentPoint& x, const Q& g) {
    auto p = grade_precision(m, x);
    if (p && g >= *p) throw PrecisionError(g, "grade " + to_string(g) + " component is not known");
    LoopMatrix out(m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) {
            Q q = g - x.root_value(i, j);
            Cyc c = m(i, j).coeff(q);
            if (!c.is_zero()) out(i, j) = Series::monomial(c, q, static_cast<int>(lcm_long(m(i, j).ram(), q.get_den().get_si())));
        }
    return out;
}

LoopMatrix graded_below(const LoopMatrix& m, const ApartmentPoint& x, const Q& g) {
    auto p = grade_precision(m, x);
    if (p && g > *p) throw PrecisionError(g, "grades below " + to_string(g) + " are not all known");
    LoopMatrix out(m.n());
    for_each_term(m, x, [&](int i, int j, const Q& q, const Q& gr, const Cyc& c) {
        if (gr < g) out(i, j).add_term(q, c);
    });
    return out;
}

LoopMatrix truncate_grade(const LoopMatrix& m, const ApartmentPoint& x, const Q& g) {
    LoopMatrix out(m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) out(i, j) = m(i, j).with_precision(g - x.root_value(i, j));
    return out;
}

Q mp_depth(const LoopMatrix& m, const ApartmentPoint& x) {
    auto p = grade_precision(m, x);
    std::optional<Q> best;
    for_each_term(m, x, [&](int, int, const Q&, const Q& g, const Cyc&) {
        if (!best || g < *best) best = g;
    });
    if (best && (!p || *best < *p)) return *best;
    if (!p) throw Error(ErrorKind::ZeroInput, "depth of the zero matrix is undefined");
    throw PrecisionError(*p, "matrix vanishes below its grade precision");
}

LoopMatrix grading_operator(const LoopMatrix& m, const ApartmentPoint& x) {
    LoopMatrix out = m.tau();
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) {
            Q a = x.root_value(i, j);
            if (a != 0) out(i, j) += m(i, j).scaled(Cyc(a));
        }
    return out;
}

std::set<Q> critical_numbers(const ApartmentPoint& x) {
    std::set<Q> out;
    for (int i = 0; i < x.n(); ++i)
        for (int j = 0; j < x.n(); ++j) out.insert(frac(x.root_value(i, j)));
    return out;
}

std::vector<Q> critical_grades(const ApartmentPoint& x, const Q& lo, const Q& hi) {
    std::vector<Q> out;
    for (const Q& c : critical_numbers(x))
        for (Q g = c + Q(ceil_long(lo - c)); g < hi; g += 1) out.push_back(g);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> h_x_roots(const ApartmentPoint& x) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < x.n(); ++i)
        for (int j = 0; j < x.n(); ++j)
            if (i != j && is_integer(x.root_value(i, j))) out.emplace_back(i, j);
    return out;
}

std::vector<GradedSlot> graded_slots(const ApartmentPoint& x, const Q& g, int ram) {
    std::vector<GradedSlot> out;
    for (int i = 0; i < x.n(); ++i)
        for (int j = 0; j < x.n(); ++j) {
            Q m = g - x.root_value(i, j);
            if (is_integer(m * ram)) out.push_back({i, j, m});
        }
    return out;
}

KVec slot_coords(const LoopMatrix& m, const std::vector<GradedSlot>& slots) {
    KVec c;
    c.reserve(slots.size());
    for (const auto& s : slots) c.push_back(m(s.i, s.j).coeff(s.m));
    return c;
}

LoopMatrix from_slot_coords(int n, const std::vector<GradedSlot>& slots, const KVec& c) {
    LoopMatrix out(n);
    for (size_t k = 0; k < slots.size(); ++k)
        if (!c[k].is_zero()) out(slots[k].i, slots[k].j).add_term(slots[k].m, c[k]);
    return out;
}

Cyc pairing(const LoopMatrix& a, const LoopMatrix& b) {
    Cyc acc;
    for (int i = 0; i < a.n(); ++i)
        for (int k = 0; k < a.n(); ++k) {
            if (a(i, k).exact() && a(i, k).is_zero()) continue;
            if (b(k, i).exact() && b(k, i).is_zero()) continue;
            acc += (a(i, k) * b(k, i)).coeff(Q(0));
        }
    return acc;
}

LoopMatrix theta_lift(const HxGenerator& h, const ApartmentPoint& x) {
    int n = x.n();
    if (h.kind == HxGenerator::Kind::Torus) {
        LoopMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = Series::constant(h.diag[static_cast<size_t>(i)]);
        return m;
    }
    if (h.i == h.j) throw Error(ErrorKind::NotInHx, "root generator needs i != j");
    Q a = x.root_value(h.i, h.j);
    if (!is_integer(a))
        throw Error(ErrorKind::NotInHx, "root (" + std::to_string(h.i + 1) + "," + std::to_string(h.j + 1) +
                                            ") takes the non-integral value " + to_string(a));
    LoopMatrix m = LoopMatrix::identity(n);
    m(h.i, h.j) = Series::monomial(h.c, -a, 1);
    return m;
}

AffineWeylElt AffineWeylElt::identity(int n) {
    AffineWeylElt w;
    w.perm.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w.perm[static_cast<size_t>(i)] = i;
    w.transl.assign(static_cast<size_t>(n), 0);
    return w;
}

AffineWeylElt operator*(const AffineWeylElt& a, const AffineWeylElt& b) {
    size_t n = a.perm.size();
    AffineWeylElt r;
    r.perm.resize(n);
    r.transl = a.transl;
    for (size_t i = 0; i < n; ++i) {
        r.perm[i] = a.perm[static_cast<size_t>(b.perm[i])];
        r.transl[static_cast<size_t>(a.perm[i])] += b.transl[i];
    }
    return r;
}

AffineWeylElt AffineWeylElt::inverse() const {
    size_t nn = perm.size();
    AffineWeylElt r;
    r.perm.resize(nn);
    r.transl.resize(nn);
    for (size_t i = 0; i < nn; ++i) r.perm[static_cast<size_t>(perm[i])] = static_cast<int>(i);
    // -w^{-1} mu: (w^{-1} mu)_i = mu_{w(i)}
    for (size_t i = 0; i < nn; ++i) r.transl[i] = -transl[static_cast<size_t>(perm[i])];
    return r;
}

LoopMatrix AffineWeylElt::matrix() const {
    LoopMatrix m(n());
    for (int i = 0; i < n(); ++i) {
        int wi = perm[static_cast<size_t>(i)];
        m(wi, i) = Series::monomial(Cyc(1L), Q(-transl[static_cast<size_t>(wi)]), 1);
    }
    return m;
}

LoopMatrix AffineWeylElt::matrix_inverse() const {
    LoopMatrix m(n());
    for (int i = 0; i < n(); ++i) {
        int wi = perm[static_cast<size_t>(i)];
        m(i, wi) = Series::monomial(Cyc(1L), Q(transl[static_cast<size_t>(wi)]), 1);
    }
    return m;
}

std::string AffineWeylElt::str() const {
    std::ostringstream os;
    os << "mu=(";
    for (int i = 0; i < n(); ++i) os << (i ? "," : "") << transl[static_cast<size_t>(i)];
    os << "), w=[";
    for (int i = 0; i < n(); ++i) os << (i ? "," : "") << perm[static_cast<size_t>(i)] + 1;
    os << "]";
    return os.str();
}

ApartmentPoint affine_act(const AffineWeylElt& w, const ApartmentPoint& x) {
    std::vector<Q> c(static_cast<size_t>(x.n()));
    for (int i = 0; i < x.n(); ++i) {
        size_t wi = static_cast<size_t>(w.perm[static_cast<size_t>(i)]);
        c[wi] = x[i] + Q(w.transl[wi]);
    }
    return ApartmentPoint(std::move(c));
}

}  // namespace fconn
