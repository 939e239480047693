#include "fconn/loop_matrix.hpp"

#include <sstream>

namespace fconn {

LoopMatrix LoopMatrix::identity(int n) {
    LoopMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = Series::constant(Cyc(1L));
    return m;
}

LoopMatrix LoopMatrix::constant(const KMat& c) {
    int n = static_cast<int>(c.size());
    LoopMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Series::constant(c[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    return m;
}

LoopMatrix LoopMatrix::elementary(int n, int i, int j, const Series& s) {
    LoopMatrix m(n);
    m(i, j) = s;
    return m;
}

LoopMatrix LoopMatrix::scalar(int n, const Series& s) {
    LoopMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = s;
    return m;
}

int LoopMatrix::ram() const {
    long e = 1;
    for (const auto& s : a_) e = lcm_long(e, s.ram());
    return static_cast<int>(e);
}

bool LoopMatrix::exact() const {
    for (const auto& s : a_)
        if (!s.exact()) return false;
    return true;
}

bool LoopMatrix::is_zero() const {
    for (const auto& s : a_)
        if (!s.is_zero()) return false;
    return true;
}

std::optional<Q> LoopMatrix::min_prec() const {
    std::optional<Q> p;
    for (const auto& s : a_) {
        auto q = s.prec();
        if (q && (!p || *q < *p)) p = q;
    }
    return p;
}

LoopMatrix LoopMatrix::operator-() const {
    LoopMatrix r(n_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
    return r;
}

LoopMatrix& LoopMatrix::operator+=(const LoopMatrix& o) {
    if (o.n_ != n_) throw Error(ErrorKind::Mismatch, "matrix size mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

LoopMatrix& LoopMatrix::operator-=(const LoopMatrix& o) {
    if (o.n_ != n_) throw Error(ErrorKind::Mismatch, "matrix size mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

LoopMatrix operator*(const LoopMatrix& a, const LoopMatrix& b) {
    if (a.n_ != b.n_) throw Error(ErrorKind::Mismatch, "matrix size mismatch");
    int n = a.n_;
    LoopMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Series acc;
            bool first = true;
            for (int k = 0; k < n; ++k) {
                const Series& x = a(i, k);
                const Series& y = b(k, j);
                if (x.exact() && x.is_zero()) continue;
                if (y.exact() && y.is_zero()) continue;
                if (first) {
                    acc = x * y;
                    first = false;
                } else {
                    acc += x * y;
                }
            }
            r(i, j) = std::move(acc);
        }
    return r;
}

LoopMatrix LoopMatrix::scaled(const Cyc& c) const {
    LoopMatrix r(n_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].scaled(c);
    return r;
}

LoopMatrix LoopMatrix::shifted(const Q& q) const {
    LoopMatrix r(n_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].shifted(q);
    return r;
}

LoopMatrix LoopMatrix::tau() const {
    LoopMatrix r(n_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].tau();
    return r;
}

LoopMatrix LoopMatrix::galois(long g) const {
    int e = ram();
    LoopMatrix r(n_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].reembed(e).galois(g);
    return r;
}

LoopMatrix LoopMatrix::reembed(int e) const {
    LoopMatrix r(n_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].reembed(e);
    return r;
}

LoopMatrix LoopMatrix::with_precision(const Q& p) const {
    LoopMatrix r(n_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].with_precision(p);
    return r;
}

Series LoopMatrix::trace() const {
    Series t;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

bool LoopMatrix::agrees_with(const LoopMatrix& o) const {
    if (o.n_ != n_) return false;
    for (size_t k = 0; k < a_.size(); ++k)
        if (!a_[k].agrees_with(o.a_[k])) return false;
    return true;
}

bool operator==(const LoopMatrix& a, const LoopMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

KMat LoopMatrix::constant_matrix() const {
    KMat c = kmat_zero(static_cast<size_t>(n_), static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const Series& s = (*this)(i, j);
            for (const auto& [k, v] : s.terms()) {
                if (k != 0) throw Error(ErrorKind::Unsupported, "matrix is not constant");
                c[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            }
        }
    return c;
}

std::string LoopMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

LoopMatrix commutator(const LoopMatrix& a, const LoopMatrix& b) { return a * b - b * a; }

LoopMatrix power(const LoopMatrix& a, int k) {
    LoopMatrix r = LoopMatrix::identity(a.n());
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
}

}  // namespace fconn
