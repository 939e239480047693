#include "fconn/scalars.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace fconn {

PrecisionError::PrecisionError(const Q& needed, const std::string& what)
    : Error(ErrorKind::InsufficientPrecision, what + " (needs terms through " + to_string(needed) + ")"),
      needed_(needed) {}

Q parse_rational(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (ch != ' ' && ch != '\t') s.push_back(ch);
    if (s.empty()) throw Error(ErrorKind::Parse, "empty rational");
    size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    size_t slash = s.find('/');
    auto digits = [&](size_t a, size_t b) {
        if (a >= b) return false;
        for (size_t k = a; k < b; ++k)
            if (s[k] < '0' || s[k] > '9') return false;
        return true;
    };
    bool ok = slash == std::string::npos ? digits(i, s.size())
                                         : digits(i, slash) && digits(slash + 1, s.size());
    if (!ok) throw Error(ErrorKind::Parse, "bad rational literal '" + raw + "'");
    Q q;
    if (s[0] == '+') s.erase(0, 1);
    if (q.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "bad rational literal '" + raw + "'");
    if (q.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + raw + "'");
    q.canonicalize();
    return q;
}

Q make_q(long num, long den) {
    Q q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

long floor_long(const Q& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f.get_si();
}

long ceil_long(const Q& q) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return c.get_si();
}

Q frac(const Q& q) { return q - Q(floor_long(q)); }

bool is_integer(const Q& q) { return q.get_den() == 1; }

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

int euler_phi(int m) {
    int r = m;
    int k = m;
    for (int p = 2; p * p <= k; ++p) {
        if (k % p == 0) {
            while (k % p == 0) k /= p;
            r -= r / p;
        }
    }
    if (k > 1) r -= r / k;
    return r;
}

namespace {

using Poly = std::vector<Q>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of polynomials, assuming divisibility is not required.
void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
    rem = a;
    trim(rem);
    quo.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Q(0));
    const Q& lead = b.back();
    while (!rem.empty() && rem.size() >= b.size()) {
        size_t shift = rem.size() - b.size();
        Q f = rem.back() / lead;
        quo[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
        trim(rem);
    }
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Q(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Q(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

struct Tables {
    std::map<int, Poly> phi;
    // powers[m][j] = x^j mod Phi_m for 0 <= j < 2m, each of length phi(m).
    std::map<int, std::vector<Poly>> powers;
    std::mutex mu;
};

Tables& tables() {
    static Tables t;
    return t;
}

const Poly& phi_locked(Tables& t, int m) {
    auto it = t.phi.find(m);
    if (it != t.phi.end()) return it->second;
    Poly num(m + 1, Q(0));
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d) continue;
        Poly q, r;
        divmod(num, phi_locked(t, d), q, r);
        num = q;
    }
    return t.phi.emplace(m, num).first->second;
}

const std::vector<Poly>& powers_locked(Tables& t, int m) {
    auto it = t.powers.find(m);
    if (it != t.powers.end()) return it->second;
    const Poly& ph = phi_locked(t, m);
    int d = static_cast<int>(ph.size()) - 1;
    std::vector<Poly> pw;
    Poly cur(d, Q(0));
    cur[0] = 1;
    for (int j = 0; j < 2 * m; ++j) {
        pw.push_back(cur);
        // multiply by x and reduce: x^d = -(ph[0] + ... + ph[d-1] x^{d-1}) since ph is monic
        Q top = cur[d - 1];
        for (int i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < d; ++i) cur[i] -= top * ph[i];
    }
    return t.powers.emplace(m, std::move(pw)).first->second;
}

const std::vector<Poly>& power_table(int m) {
    Tables& t = tables();
    std::lock_guard<std::mutex> lock(t.mu);
    return powers_locked(t, m);
}

}  // namespace

const std::vector<Q>& cyclotomic_polynomial(int m) {
    if (m < 1) throw Error(ErrorKind::Parse, "cyclotomic order must be positive");
    Tables& t = tables();
    std::lock_guard<std::mutex> lock(t.mu);
    return phi_locked(t, m);
}

Cyclotomic::Cyclotomic(int order, std::vector<Q> coeffs) : order_(order), c_(std::move(coeffs)) {
    if (order < 1) throw Error(ErrorKind::Parse, "cyclotomic order must be positive");
    size_t d = static_cast<size_t>(euler_phi(order_));
    if (c_.size() > d) {
        // reduce a longer polynomial modulo Phi_m
        const auto& pw = power_table(order_);
        std::vector<Q> r(d, Q(0));
        for (size_t j = 0; j < c_.size(); ++j) {
            if (c_[j] == 0) continue;
            const auto& p = pw[j % static_cast<size_t>(order_)];
            for (size_t i = 0; i < d; ++i) r[i] += c_[j] * p[i];
        }
        c_ = std::move(r);
    }
    c_.resize(d, Q(0));
    if (order_ == 2) order_ = 1;
    normalize();
}

Cyclotomic Cyclotomic::zeta(int m, long power) {
    if (m < 1) throw Error(ErrorKind::Parse, "cyclotomic order must be positive");
    long k = ((power % m) + m) % m;
    if (m == 1) return Cyclotomic(1L);
    if (m == 2) return Cyclotomic(k == 0 ? 1L : -1L);
    Cyclotomic z;
    z.order_ = m;
    z.c_ = power_table(m)[static_cast<size_t>(k)];
    z.normalize();
    return z;
}

void Cyclotomic::normalize() {
    if (order_ == 1) return;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return;
    order_ = 1;
    c_.resize(1);
}

bool Cyclotomic::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool Cyclotomic::is_one() const { return order_ == 1 && c_[0] == 1; }

bool Cyclotomic::is_rational() const { return order_ == 1; }

const Q& Cyclotomic::rational() const {
    if (order_ != 1) throw Error(ErrorKind::Unsupported, "value " + str() + " is not rational");
    return c_[0];
}

Cyclotomic Cyclotomic::lifted(int m) const {
    if (m == order_ || order_ == 1) {
        if (order_ == 1 && m > 2) {
            Cyclotomic r;
            r.order_ = m;
            r.c_.assign(static_cast<size_t>(euler_phi(m)), Q(0));
            r.c_[0] = c_[0];
            return r;
        }
        return *this;
    }
    if (m % order_ != 0) throw Error(ErrorKind::Unsupported, "cannot embed Q(zeta_" + std::to_string(order_) +
                                                                 ") into Q(zeta_" + std::to_string(m) + ")");
    const auto& pw = power_table(m);
    int step = m / order_;
    Cyclotomic r;
    r.order_ = m;
    r.c_.assign(static_cast<size_t>(euler_phi(m)), Q(0));
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        const auto& p = pw[k * static_cast<size_t>(step)];
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += c_[k] * p[i];
    }
    return r;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (order_ == 1 && o.order_ == 1) {
        c_[0] += o.c_[0];
        return *this;
    }
    int m = static_cast<int>(lcm_long(order_, o.order_));
    Cyclotomic a = lifted(m);
    Cyclotomic b = o.lifted(m);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    a.normalize();
    *this = std::move(a);
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (o.order_ == 1) {
        for (auto& q : c_) q *= o.c_[0];
        if (o.c_[0] == 0) *this = Cyclotomic();
        return *this;
    }
    if (order_ == 1) {
        Q s = c_[0];
        *this = o;
        for (auto& q : c_) q *= s;
        if (s == 0) *this = Cyclotomic();
        return *this;
    }
    int m = static_cast<int>(lcm_long(order_, o.order_));
    Cyclotomic a = lifted(m);
    Cyclotomic b = o.lifted(m);
    size_t d = a.c_.size();
    std::vector<Q> prod(2 * d - 1, Q(0));
    for (size_t i = 0; i < d; ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < d; ++j)
            if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    const auto& pw = power_table(m);
    std::vector<Q> r(prod.begin(), prod.begin() + static_cast<long>(d));
    for (size_t j = d; j < prod.size(); ++j) {
        if (prod[j] == 0) continue;
        const auto& p = pw[j];
        for (size_t i = 0; i < d; ++i) r[i] += prod[j] * p[i];
    }
    order_ = m;
    c_ = std::move(r);
    normalize();
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw Error(ErrorKind::ZeroInput, "division by zero in Q(zeta)");
    if (order_ == 1) return Cyclotomic(Q(1) / c_[0]);
    // extended Euclid: find s with s*a = 1 mod Phi_m
    Poly a = c_;
    trim(a);
    Poly b = cyclotomic_polynomial(order_);
    Poly s0{Q(1)}, s1{};
    Poly r0 = a, r1 = b;
    while (!r1.empty()) {
        Poly q, r;
        divmod(r0, r1, q, r);
        Poly s2 = sub(s0, mul(q, s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    // r0 is a nonzero constant
    Q inv = Q(1) / r0[0];
    for (auto& q : s0) q *= inv;
    return Cyclotomic(order_, s0);
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.c_ == b.c_;
    int m = static_cast<int>(lcm_long(a.order_, b.order_));
    return a.lifted(m).c_ == b.lifted(m).c_;
}

std::string Cyclotomic::str() const {
    if (order_ == 1) return to_string(c_[0]);
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Q mag = abs(c_[i]);
        bool neg = c_[i] < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        std::string z = "zeta_" + std::to_string(order_);
        if (i > 1) z += "^" + std::to_string(i);
        if (i == 0)
            os << to_string(mag);
        else if (mag == 1)
            os << z;
        else
            os << to_string(mag) << "*" << z;
    }
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

long units_of(const Q& q, int ram, const char* what) {
    Q v = q * ram;
    if (!is_integer(v))
        throw Error(ErrorKind::Unsupported, std::string(what) + " " + to_string(q) +
                                                " is not representable with ramification " + std::to_string(ram));
    return v.get_num().get_si();
}

std::optional<long> add_opt(std::optional<long> a, std::optional<long> b) {
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

std::optional<long> min_opt(std::optional<long> a, std::optional<long> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

}  // namespace

PuiseuxSeries PuiseuxSeries::constant(const Cyc& c, int ram) {
    PuiseuxSeries s(ram);
    if (!c.is_zero()) s.terms_.emplace(0, c);
    return s;
}

PuiseuxSeries PuiseuxSeries::monomial(const Cyc& c, const Q& q, int ram) {
    if (ram == 0) ram = static_cast<int>(q.get_den().get_si());
    PuiseuxSeries s(ram);
    if (!c.is_zero()) s.terms_.emplace(units_of(q, ram, "exponent"), c);
    return s;
}

PuiseuxSeries PuiseuxSeries::zero_to(const Q& prec, int ram) {
    PuiseuxSeries s(ram);
    s.prec_ = ceil_long(prec * ram);
    return s;
}

std::optional<Q> PuiseuxSeries::prec() const {
    if (!prec_) return std::nullopt;
    return make_q(*prec_, ram_);
}

std::optional<Q> PuiseuxSeries::valuation() const {
    if (terms_.empty()) return std::nullopt;
    return make_q(terms_.begin()->first, ram_);
}

Cyc PuiseuxSeries::coeff(const Q& q) const {
    if (prec_ && q * ram_ >= *prec_)
        throw PrecisionError(q, "coefficient of z^(" + to_string(q) + ") lies beyond the series precision");
    Q v = q * ram_;
    if (!is_integer(v)) return Cyc();
    auto it = terms_.find(v.get_num().get_si());
    return it == terms_.end() ? Cyc() : it->second;
}

bool PuiseuxSeries::known_below(const Q& q) const { return !prec_ || q * ram_ <= *prec_; }

PuiseuxSeries PuiseuxSeries::reembed(int e) const {
    if (e == ram_) return *this;
    if (e % ram_ != 0)
        throw Error(ErrorKind::Unsupported,
                    "ramification " + std::to_string(e) + " is not a multiple of " + std::to_string(ram_));
    long f = e / ram_;
    PuiseuxSeries r(e);
    if (prec_) r.prec_ = *prec_ * f;
    for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k * f, c);
    return r;
}

PuiseuxSeries PuiseuxSeries::truncated_units(long n) const {
    PuiseuxSeries r(ram_);
    r.prec_ = prec_ ? std::min(*prec_, n) : n;
    for (const auto& [k, c] : terms_) {
        if (k >= *r.prec_) break;
        r.terms_.emplace_hint(r.terms_.end(), k, c);
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::with_precision(const Q& n) const { return truncated_units(ceil_long(n * ram_)); }

PuiseuxSeries PuiseuxSeries::shifted(const Q& q) const {
    int e = static_cast<int>(lcm_long(ram_, q.get_den().get_si()));
    PuiseuxSeries base = reembed(e);
    long d = units_of(q, e, "shift");
    PuiseuxSeries r(e);
    if (base.prec_) r.prec_ = *base.prec_ + d;
    for (const auto& [k, c] : base.terms_) r.terms_.emplace_hint(r.terms_.end(), k + d, c);
    return r;
}

PuiseuxSeries PuiseuxSeries::tau() const {
    PuiseuxSeries r(ram_);
    r.prec_ = prec_;
    for (const auto& [k, c] : terms_) {
        if (k == 0) continue;
        r.terms_.emplace_hint(r.terms_.end(), k, c * Cyc(make_q(k, ram_)));
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::galois(long g) const {
    PuiseuxSeries r(ram_);
    r.prec_ = prec_;
    for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, c * Cyc::zeta(ram_, g * k));
    return r;
}

PuiseuxSeries PuiseuxSeries::scaled(const Cyc& s) const {
    PuiseuxSeries r(ram_);
    r.prec_ = prec_;
    if (s.is_zero()) {
        // 0 * (series with precision N) is exactly zero
        r.prec_.reset();
        return r;
    }
    for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, c * s);
    return r;
}

void PuiseuxSeries::set_term(const Q& q, const Cyc& c) {
    Q v = q * ram_;
    if (!is_integer(v)) {
        *this = reembed(static_cast<int>(lcm_long(ram_, v.get_den().get_si() * ram_)));
        v = q * ram_;
    }
    long k = v.get_num().get_si();
    if (prec_ && k >= *prec_) return;
    if (c.is_zero())
        terms_.erase(k);
    else
        terms_[k] = c;
}

void PuiseuxSeries::add_term(const Q& q, const Cyc& c) {
    Q v = q * ram_;
    if (!is_integer(v)) {
        *this = reembed(static_cast<int>(lcm_long(ram_, v.get_den().get_si() * ram_)));
        v = q * ram_;
    }
    long k = v.get_num().get_si();
    if (prec_ && k >= *prec_) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

PuiseuxSeries PuiseuxSeries::operator-() const {
    PuiseuxSeries r(ram_);
    r.prec_ = prec_;
    for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, -c);
    return r;
}

PuiseuxSeries& PuiseuxSeries::operator+=(const PuiseuxSeries& o) {
    if (o.ram_ != ram_) {
        int e = static_cast<int>(lcm_long(ram_, o.ram_));
        if (e != ram_) *this = reembed(e);
        return *this += o.reembed(e);
    }
    prec_ = min_opt(prec_, o.prec_);
    if (prec_) {
        while (!terms_.empty() && terms_.rbegin()->first >= *prec_) terms_.erase(std::prev(terms_.end()));
    }
    for (const auto& [k, c] : o.terms_) {
        if (prec_ && k >= *prec_) break;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

PuiseuxSeries& PuiseuxSeries::operator-=(const PuiseuxSeries& o) { return *this += -o; }

PuiseuxSeries operator*(const PuiseuxSeries& a0, const PuiseuxSeries& b0) {
    if (a0.ram_ != b0.ram_) {
        int e = static_cast<int>(lcm_long(a0.ram_, b0.ram_));
        return a0.reembed(e) * b0.reembed(e);
    }
    const PuiseuxSeries& a = a0;
    const PuiseuxSeries& b = b0;
    // valuation lower bounds: exact zero is +infinity, bottom is the precision
    auto vbound = [](const PuiseuxSeries& s) -> std::optional<long> {
        if (!s.terms_.empty()) return s.terms_.begin()->first;
        return s.prec_;
    };
    std::optional<long> p = min_opt(add_opt(a.prec_, vbound(b)), add_opt(b.prec_, vbound(a)));
    if (a.exact() && a.is_zero()) p.reset();
    if (b.exact() && b.is_zero()) p.reset();
    PuiseuxSeries r(a.ram_);
    r.prec_ = p;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    std::map<long, Cyc>& out = r.terms_;
    for (const auto& [ka, ca] : a.terms_) {
        if (p && ka + b.terms_.begin()->first >= *p) break;
        for (const auto& [kb, cb] : b.terms_) {
            long k = ka + kb;
            if (p && k >= *p) break;
            auto it = out.find(k);
            if (it == out.end())
                out.emplace(k, ca * cb);
            else
                it->second += ca * cb;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero())
            it = out.erase(it);
        else
            ++it;
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::invert() const {
    if (terms_.empty()) throw Error(ErrorKind::ZeroSeries, "cannot invert a series with no nonzero term below its precision");
    if (!prec_) {
        if (terms_.size() == 1) {
            PuiseuxSeries r(ram_);
            r.terms_.emplace(-terms_.begin()->first, terms_.begin()->second.inverse());
            return r;
        }
        throw PrecisionError(Q(0), "inverse of an exact non-monomial series needs a target precision");
    }
    long v = terms_.begin()->first;
    return invert(make_q(*prec_ - 2 * v, ram_));
}

PuiseuxSeries PuiseuxSeries::invert(const Q& n) const {
    if (terms_.empty()) throw Error(ErrorKind::ZeroSeries, "cannot invert a series with no nonzero term below its precision");
    long v = terms_.begin()->first;
    long target = ceil_long(n * ram_);
    long len = target + v;
    if (prec_) len = std::min(len, *prec_ - v);
    PuiseuxSeries r(ram_);
    r.prec_ = -v + std::max(len, 0L);
    if (len <= 0) return r;
    std::vector<Cyc> a(static_cast<size_t>(len));
    for (const auto& [k, c] : terms_) {
        long i = k - v;
        if (i >= len) break;
        a[static_cast<size_t>(i)] = c;
    }
    Cyc inv0 = a[0].inverse();
    std::vector<Cyc> bcoef(static_cast<size_t>(len));
    bcoef[0] = inv0;
    for (long j = 1; j < len; ++j) {
        Cyc acc;
        for (long i = 1; i <= j; ++i) {
            if (a[static_cast<size_t>(i)].is_zero()) continue;
            acc += a[static_cast<size_t>(i)] * bcoef[static_cast<size_t>(j - i)];
        }
        bcoef[static_cast<size_t>(j)] = -(acc * inv0);
    }
    for (long j = 0; j < len; ++j)
        if (!bcoef[static_cast<size_t>(j)].is_zero()) r.terms_.emplace(j - v, bcoef[static_cast<size_t>(j)]);
    return r;
}

bool PuiseuxSeries::agrees_with(const PuiseuxSeries& o) const {
    if (o.ram_ != ram_) {
        int e = static_cast<int>(lcm_long(ram_, o.ram_));
        return reembed(e).agrees_with(o.reembed(e));
    }
    std::optional<long> p = min_opt(prec_, o.prec_);
    auto ia = terms_.begin();
    auto ib = o.terms_.begin();
    while (true) {
        bool ea = ia == terms_.end() || (p && ia->first >= *p);
        bool eb = ib == o.terms_.end() || (p && ib->first >= *p);
        if (ea && eb) return true;
        if (ea || eb) return false;
        if (ia->first != ib->first || ia->second != ib->second) return false;
        ++ia;
        ++ib;
    }
}

bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    if (a.ram_ != b.ram_) {
        int e = static_cast<int>(lcm_long(a.ram_, b.ram_));
        return a.reembed(e) == b.reembed(e);
    }
    return a.prec_ == b.prec_ && a.terms_ == b.terms_;
}

namespace {

std::string exponent_str(const Q& q) {
    if (q == 1) return "z";
    return "z^(" + to_string(q) + ")";
}

}  // namespace

std::string PuiseuxSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Q q = make_q(k, ram_);
        std::string coef;
        bool neg = false;
        if (c.is_rational()) {
            neg = c.rational() < 0;
            Q mag = abs(c.rational());
            if (q == 0)
                coef = to_string(mag);
            else if (mag != 1)
                coef = to_string(mag) + "*";
        } else {
            coef = c.str() + (q == 0 ? "" : "*");
        }
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        os << coef;
        if (q != 0) os << exponent_str(q);
    }
    if (prec_) {
        if (!first) os << " + ";
        os << "O(" << exponent_str(make_q(*prec_, ram_)) << ")";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

PuiseuxSeries tau(const PuiseuxSeries& s) { return s.tau(); }
PuiseuxSeries invert(const PuiseuxSeries& s) { return s.invert(); }
std::optional<Q> valuation(const PuiseuxSeries& s) { return s.valuation(); }

}  // namespace fconn
