#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fconn/strata.hpp"

namespace fconn {

// A in s^v_{-r} / s^v_{0+}, stored through the trace pairing as the s-element
// sum c_{j,m} varpi_j^m over grades m/e_j in [-r, 0].
struct FormalType {
    TorusData torus;
    Q depth;
    std::map<std::pair<int, long>, Cyc> coeffs;  // (block, exponent m) -> c

    Cyc coeff(int block, long m) const;
    void set(int block, long m, const Cyc& c);
    // Grade-m/e_j coefficient by grade.
    Cyc at_grade(int block, const Q& g) const;
    LoopMatrix matrix() const;
    // Keep grades in [-depth, 0] of an s-valued matrix.
    static FormalType from_s_matrix(const TorusData& t, const Q& depth, const LoopMatrix& m);
    std::string str() const;

    friend bool operator==(const FormalType& a, const FormalType& b) {
        return a.torus.cls == b.torus.cls && a.depth == b.depth && a.coeffs == b.coeffs;
    }
};

struct Validation {
    bool valid = false;
    std::string reason;
    // depth 0: pairs i < j whose hyperplane a_i - a_j = x_i - x_j contains A
    std::vector<std::pair<int, int>> hyperplanes;
};
Validation validate(const FormalType& a, const std::optional<ApartmentPoint>& x = std::nullopt);
Connection realize(const FormalType& a);

struct WeylLetter {
    enum class Kind { Twist, Uniformizer, Swap };
    Kind kind;
    int a;       // block (0-based)
    int b;       // second block for swaps
    long power;  // twists and uniformizers
};

// Element of N(S) given as a word in twists d_j, uniformizers varpi_j and
// swaps of equal blocks, with its matrix cached.
struct RelWeylElt {
    std::vector<WeylLetter> word;
    LoopMatrix matrix;
    LoopMatrix matrix_inv;

    static RelWeylElt identity(const TorusData& t);
    static RelWeylElt twist(const TorusData& t, int j, long power = 1);
    static RelWeylElt uniformizer(const TorusData& t, int j, long power = 1);
    static RelWeylElt swap(const TorusData& t, int j, int k);

    // "w1^-1 d2 s1,3"; "identity" for the empty word
    std::string str(const TorusData& t) const;
    friend RelWeylElt operator*(const RelWeylElt& a, const RelWeylElt& b);
};

RelWeylElt parse_word(const TorusData& t, const std::string& s);

FormalType rho_act(const RelWeylElt& n, const FormalType& a);
std::optional<RelWeylElt> orbit_equivalent(const FormalType& a1, const FormalType& a2);

}  // namespace fconn
