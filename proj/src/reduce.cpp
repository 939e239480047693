#include "fconn/reduce.hpp"

namespace fconn {

LoopMatrix kernel_solve(const TorusData& t, const Stratum& st, const LoopMatrix& y, const Q& l) {
    int n = st.x.n();
    LoopMatrix target = y - pi_s(t, y);
    if (target.is_zero()) return LoopMatrix(n);
    auto src = graded_slots(st.x, l);
    auto dst = graded_slots(st.x, l - st.r);
    KVec rhs = slot_coords(target, dst);
    if (from_slot_coords(n, dst, rhs) != target)
        throw Error(ErrorKind::NoSolution, "right-hand side is not homogeneous of grade " + to_string(l - st.r));
    KMat a = kmat_zero(dst.size(), src.size());
    for (size_t s = 0; s < src.size(); ++s) {
        KVec unit(src.size());
        unit[s] = Cyc(1L);
        KVec img = slot_coords(commutator(from_slot_coords(n, src, unit), st.beta0), dst);
        for (size_t d = 0; d < dst.size(); ++d) a[d][s] = img[d];
    }
    auto sol = solve(a, rhs, src.size());
    if (!sol) throw Error(ErrorKind::NoSolution, "no preimage under ad of the leading term");
    LoopMatrix x = from_slot_coords(n, src, *sol);
    return x - pi_s(t, x);
}

namespace {

Q working_precision(const Connection& c, const ApartmentPoint& x, const std::optional<Q>& prec) {
    auto gp = grade_precision(c, x);
    Q p = gp ? (prec && *prec < *gp ? *prec : *gp) : (prec ? *prec : Q(2));
    if (p <= 0) throw PrecisionError(Q(1), "the connection must be known through grade 0");
    return p;
}

ReductionResult finish(const Connection& c, const TorusData& t, const ApartmentPoint& x, const Q& depth,
                       const GaugeElement& p, const LoopMatrix& m, const Q& prec) {
    FormalType a = FormalType::from_s_matrix(t, depth, m);
    LoopMatrix cert = truncate_grade(gauge(p, c), x, prec) - a.matrix();
    if (!truncate_grade(cert, x, prec).is_zero())
        throw Error(ErrorKind::Unsupported, "reduction certificate does not vanish");
    return {p, a, cert, prec, x};
}

ReductionResult reduce_depth_zero(const Connection& c, const TorusData& t, const ApartmentPoint& x,
                                  const Stratum& st, const Q& prec) {
    if (!t.is_split()) throw Error(ErrorKind::NotRegular, "depth-zero reduction needs the split torus");
    auto diag = diagonalize_depth_zero(st);
    if (is_resonant(diag.eigenvalues, x)) throw Error(ErrorKind::Resonant, "depth-zero stratum is resonant");
    if (!is_regular_stratum(st)) throw Error(ErrorKind::NotRegular, "depth-zero stratum is not regular");
    const auto& b = diag.eigenvalues;
    int n = x.n();
    GaugeElement p = diag.m;
    LoopMatrix m = truncate_grade(gauge(p, c), x, prec);
    for (const Q& l : critical_grades(x, Q(0), prec)) {
        if (l <= 0) continue;
        LoopMatrix y = graded_component(m, x, l);
        if (y.is_zero()) continue;
        LoopMatrix gen(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (y(i, j).is_zero()) continue;
                Q den = l + b[static_cast<size_t>(i)] - b[static_cast<size_t>(j)];
                if (den == 0) throw Error(ErrorKind::Resonant, "vanishing denominator at grade " + to_string(l));
                gen(i, j) = y(i, j).scaled(Cyc(Q(1 / den)));
            }
        GaugeElement e = GaugeElement::exponential(gen, x, prec);
        m = truncate_grade(gauge(e, m), x, prec);
        p = e * p;
    }
    return finish(c, t, x, Q(0), p, m, prec);
}

}  // namespace

ReductionResult reduce_to_formal_type(const Connection& c, const TorusData& t, const ApartmentPoint& x,
                                      std::optional<Q> prec) {
    if (c.n() != t.n() || x.n() != t.n()) throw Error(ErrorKind::Mismatch, "sizes of connection, torus and point differ");
    Stratum st = leading_stratum(c, x);
    Q p_max = working_precision(c, x, prec);
    if (st.r == 0) return reduce_depth_zero(c, t, x, st, p_max);

    for (int j = 0; j < t.blocks(); ++j)
        for (int a = 1; a < t.size(j); ++a) {
            int i0 = t.offset(j), i1 = i0 + a;
            if (x[i1] - t.base_point[i1] != x[i0] - t.base_point[i0])
                throw Error(ErrorKind::NotRegular, "point is not in the torus apartment shifted by its center");
        }
    if (pi_s(t, st.beta0) != st.beta0) throw Error(ErrorKind::NotRegular, "leading term does not lie in the torus");
    auto reg = is_regular_stratum(st);
    if (!reg) throw Error(ErrorKind::NotRegular, "leading stratum is not regular");
    if (!(reg->cls == t.cls)) throw Error(ErrorKind::NotRegular, "leading stratum has torus type " + reg->cls.str());

    Q budget = p_max + st.r;
    GaugeElement p = GaugeElement::identity(t.n());
    LoopMatrix m = truncate_grade(c, x, p_max);
    for (const Q& g : critical_grades(x, -st.r, p_max)) {
        if (g > 0) {
            LoopMatrix z = pi_s(t, graded_component(m, x, g));
            if (!z.is_zero()) {
                GaugeElement s = GaugeElement::exponential(z.scaled(Cyc(Q(1 / g))), x, budget);
                m = truncate_grade(gauge(s, m), x, p_max);
                p = s * p;
            }
        }
        LoopMatrix y = graded_component(m, x, g);
        if ((y - pi_s(t, y)).is_zero()) continue;
        if (g == -st.r) throw Error(ErrorKind::NotRegular, "leading term leaves the torus");
        LoopMatrix gen = kernel_solve(t, st, y, g + st.r);
        GaugeElement e = GaugeElement::exponential(-gen, x, budget);
        m = truncate_grade(gauge(e, m), x, p_max);
        p = e * p;
    }
    return finish(c, t, x, st.r, p, m, p_max);
}

}  // namespace fconn
