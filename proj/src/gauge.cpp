#include "fconn/gauge.hpp"

namespace fconn {

LoopMatrix graded_exp(const LoopMatrix& X, const ApartmentPoint& x, const Q& g) {
    int n = X.n();
    LoopMatrix result = LoopMatrix::identity(n);
    if (X.is_zero() && X.exact()) return truncate_grade(result, x, g);
    Q d;
    try {
        d = mp_depth(X, x);
    } catch (const PrecisionError&) {
        // X vanishes below its precision, which then bounds the result
        return truncate_grade(result, x, std::min(g, *grade_precision(X, x)));
    }
    if (d <= 0) throw Error(ErrorKind::Unsupported, "exponential needs a positive-depth argument");
    LoopMatrix xt = truncate_grade(X, x, g);
    LoopMatrix term = LoopMatrix::identity(n);
    for (long k = 1; d * k < g; ++k) {
        term = truncate_grade(term * xt, x, g).scaled(Cyc(Q(1) / k));
        result += term;
    }
    return truncate_grade(result, x, g);
}

GaugeElement GaugeElement::identity(int n) {
    return {LoopMatrix::identity(n), LoopMatrix::identity(n), {}};
}

GaugeElement GaugeElement::constant(const KMat& c) {
    auto inv = fconn::inverse(c);
    if (!inv) throw Error(ErrorKind::ZeroInput, "constant gauge matrix is singular");
    return {LoopMatrix::constant(c), LoopMatrix::constant(*inv), {"const"}};
}

GaugeElement GaugeElement::shear(const std::vector<Q>& mu) {
    int n = static_cast<int>(mu.size());
    GaugeElement s{LoopMatrix(n), LoopMatrix(n), {}};
    std::string label = "z^(";
    for (int i = 0; i < n; ++i) {
        const Q& m = mu[static_cast<size_t>(i)];
        s.g(i, i) = Series::monomial(Cyc(1L), m);
        s.g_inv(i, i) = Series::monomial(Cyc(1L), -m);
        label += (i ? "," : "") + to_string(m);
    }
    s.factors.push_back(label + ")");
    return s;
}

GaugeElement GaugeElement::exponential(const LoopMatrix& X, const ApartmentPoint& x, const Q& g) {
    return {graded_exp(X, x, g), graded_exp(-X, x, g), {"exp"}};
}

GaugeElement GaugeElement::from_pair(LoopMatrix g, LoopMatrix g_inv, std::string label) {
    return {std::move(g), std::move(g_inv), {std::move(label)}};
}

GaugeElement GaugeElement::inverse() const {
    GaugeElement r{g_inv, g, {}};
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) r.factors.push_back(*it + "^-1");
    return r;
}

GaugeElement operator*(const GaugeElement& a, const GaugeElement& b) {
    GaugeElement r{a.g * b.g, b.g_inv * a.g_inv, a.factors};
    r.factors.insert(r.factors.end(), b.factors.begin(), b.factors.end());
    return r;
}

LoopMatrix adjoint(const GaugeElement& g, const LoopMatrix& m) { return g.g * m * g.g_inv; }

LoopMatrix gauge(const GaugeElement& g, const Connection& m) {
    return g.g * m * g.g_inv - g.g.tau() * g.g_inv;
}

}  // namespace fconn
