#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fconn {

using Q = mpq_class;

enum class ErrorKind {
    Parse,
    InsufficientPrecision,
    ZeroSeries,
    ZeroInput,
    NotInHx,
    NotCompatible,
    NotRegular,
    Resonant,
    NotRegularClass,
    NotNormalizer,
    InvalidFormalType,
    NoSolution,
    Mismatch,
    Unsupported,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Raised when a result would depend on coefficients at or beyond a known
// truncation order. `needed` is the grade (or exponent) that must be known.
class PrecisionError : public Error {
public:
    PrecisionError(const Q& needed, const std::string& what);
    const Q& needed() const { return needed_; }

private:
    Q needed_;
};

// Canonical num/den (the two-argument mpq_class constructor does not reduce).
Q make_q(long num, long den);
Q parse_rational(const std::string& s);
std::string to_string(const Q& q);
long floor_long(const Q& q);
long ceil_long(const Q& q);
Q frac(const Q& q);
bool is_integer(const Q& q);
long lcm_long(long a, long b);
long gcd_long(long a, long b);
// Euler phi and the m-th cyclotomic polynomial (integer coefficients, low degree first).
int euler_phi(int m);
const std::vector<Q>& cyclotomic_polynomial(int m);

// Element of Q(zeta_m) in the power basis of Q[x]/Phi_m. Rationals are kept
// at order 1 so that mixed arithmetic stays cheap.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), c_(1) {}
    Cyclotomic(const Q& q) : order_(1), c_{q} {}
    Cyclotomic(long v) : order_(1), c_{Q(v)} {}
    Cyclotomic(int order, std::vector<Q> coeffs);

    static Cyclotomic zeta(int m, long power = 1);

    int order() const { return order_; }
    const std::vector<Q>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    const Q& rational() const;

    Cyclotomic lifted(int m) const;
    Cyclotomic inverse() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Rationals print as p/q; other values as (c0 + c1*zeta_m + ...).
    std::string str() const;

private:
    void normalize();

    int order_;
    std::vector<Q> c_;
};

using Cyc = Cyclotomic;

// Truncated series in u = z^(1/ram). Exponents are stored in units of 1/ram.
// An absent precision means the series is exact (a Laurent polynomial).
class PuiseuxSeries {
public:
    using Terms = std::map<long, Cyc>;

    explicit PuiseuxSeries(int ram = 1) : ram_(ram) {}

    static PuiseuxSeries constant(const Cyc& c, int ram = 1);
    // c * z^q; the ramification is the least one representing q unless given.
    static PuiseuxSeries monomial(const Cyc& c, const Q& q, int ram = 0);
    static PuiseuxSeries zero_to(const Q& prec, int ram = 1);

    int ram() const { return ram_; }
    bool exact() const { return !prec_.has_value(); }
    std::optional<Q> prec() const;
    std::optional<long> prec_units() const { return prec_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Least exponent with a nonzero coefficient; nullopt means bottom
    // (no nonzero term below the precision, possibly the zero series).
    std::optional<Q> valuation() const;
    Cyc coeff(const Q& q) const;
    bool known_below(const Q& q) const;

    PuiseuxSeries reembed(int e) const;
    PuiseuxSeries with_precision(const Q& n) const;
    PuiseuxSeries truncated_units(long n) const;
    PuiseuxSeries shifted(const Q& q) const;
    PuiseuxSeries tau() const;
    PuiseuxSeries galois(long k = 1) const;
    PuiseuxSeries scaled(const Cyc& c) const;
    PuiseuxSeries invert() const;
    PuiseuxSeries invert(const Q& n) const;

    void set_term(const Q& q, const Cyc& c);
    void add_term(const Q& q, const Cyc& c);

    PuiseuxSeries operator-() const;
    PuiseuxSeries& operator+=(const PuiseuxSeries& o);
    PuiseuxSeries& operator-=(const PuiseuxSeries& o);
    friend PuiseuxSeries operator+(PuiseuxSeries a, const PuiseuxSeries& b) { return a += b; }
    friend PuiseuxSeries operator-(PuiseuxSeries a, const PuiseuxSeries& b) { return a -= b; }
    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);

    // Coefficientwise equality on the common known range.
    bool agrees_with(const PuiseuxSeries& o) const;
    friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);

    std::string str() const;

private:
    int ram_;
    std::optional<long> prec_;
    Terms terms_;
};

using Series = PuiseuxSeries;

PuiseuxSeries tau(const PuiseuxSeries& s);
PuiseuxSeries invert(const PuiseuxSeries& s);
std::optional<Q> valuation(const PuiseuxSeries& s);

}  // namespace fconn
