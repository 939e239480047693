#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fconn/loop_matrix.hpp"

namespace fconn {

struct ApartmentPoint {
    std::vector<Q> coords;

    ApartmentPoint() = default;
    explicit ApartmentPoint(std::vector<Q> c) : coords(std::move(c)) {}
    static ApartmentPoint origin(int n) { return ApartmentPoint(std::vector<Q>(static_cast<size_t>(n))); }

    int n() const { return static_cast<int>(coords.size()); }
    const Q& operator[](int i) const { return coords[static_cast<size_t>(i)]; }
    Q root_value(int i, int j) const { return (*this)[i] - (*this)[j]; }
    ApartmentPoint shifted(const Q& c) const;
    // Constant diagonal matrix diag(x~).
    LoopMatrix as_matrix() const;
    // "(0,-1/2)"
    std::string str() const;

    friend bool operator==(const ApartmentPoint& a, const ApartmentPoint& b) { return a.coords == b.coords; }
};

ApartmentPoint parse_point(const std::string& s);

Q grade_of_elementary(int i, int j, const Q& m, const ApartmentPoint& x);

// Grade -> homogeneous component. Only grades strictly below the grade
// precision of the input are listed, so every component is complete.
using GradedDecomposition = std::map<Q, LoopMatrix>;

// Least grade at which some entry stops being known; nullopt if exact.
std::optional<Q> grade_precision(const LoopMatrix& m, const ApartmentPoint& x);
GradedDecomposition mp_decompose(const LoopMatrix& m, const ApartmentPoint& x);
// Exact homogeneous component at grade g; throws PrecisionError when g is not
// below the grade precision.
LoopMatrix graded_component(const LoopMatrix& m, const ApartmentPoint& x, const Q& g);
// Everything of grade < g (exact), and everything of grade >= g.
LoopMatrix graded_below(const LoopMatrix& m, const ApartmentPoint& x, const Q& g);
// Truncate every entry so that only grades < g are kept.
LoopMatrix truncate_grade(const LoopMatrix& m, const ApartmentPoint& x, const Q& g);
Q mp_depth(const LoopMatrix& m, const ApartmentPoint& x);
// tau(M) + [x~, M]
LoopMatrix grading_operator(const LoopMatrix& m, const ApartmentPoint& x);

std::set<Q> critical_numbers(const ApartmentPoint& x);
// Grades g in [lo, hi) whose fractional part is critical, ascending.
std::vector<Q> critical_grades(const ApartmentPoint& x, const Q& lo, const Q& hi);
std::vector<std::pair<int, int>> h_x_roots(const ApartmentPoint& x);

// Monomial slots E_ij z^m spanning the grade-g part of gl_n(F).
struct GradedSlot {
    int i, j;
    Q m;
};
std::vector<GradedSlot> graded_slots(const ApartmentPoint& x, const Q& g, int ram = 1);
KVec slot_coords(const LoopMatrix& m, const std::vector<GradedSlot>& slots);
LoopMatrix from_slot_coords(int n, const std::vector<GradedSlot>& slots, const KVec& c);

// Res tr(A B) dz/z, i.e. the z^0 coefficient of the trace.
Cyc pairing(const LoopMatrix& a, const LoopMatrix& b);

struct HxGenerator {
    enum class Kind { Torus, Root };
    Kind kind = Kind::Torus;
    KVec diag;
    int i = 0, j = 0;
    Cyc c;

    static HxGenerator torus(KVec d) { return {Kind::Torus, std::move(d), 0, 0, Cyc()}; }
    static HxGenerator root(int i, int j, const Cyc& c) { return {Kind::Root, {}, i, j, c}; }
};

LoopMatrix theta_lift(const HxGenerator& h, const ApartmentPoint& x);

// (mu, w) acting by x -> w(x) + mu, with w(x)_{w(i)} = x_i.
struct AffineWeylElt {
    std::vector<int> perm;
    std::vector<long> transl;

    static AffineWeylElt identity(int n);
    int n() const { return static_cast<int>(perm.size()); }
    AffineWeylElt inverse() const;
    // z^{-mu} n_w, which carries the grading at x to the grading at w.x
    LoopMatrix matrix() const;
    LoopMatrix matrix_inverse() const;
    std::string str() const;

    friend AffineWeylElt operator*(const AffineWeylElt& a, const AffineWeylElt& b);
    friend bool operator==(const AffineWeylElt& a, const AffineWeylElt& b) {
        return a.perm == b.perm && a.transl == b.transl;
    }
};

ApartmentPoint affine_act(const AffineWeylElt& w, const ApartmentPoint& x);

}  // namespace fconn
