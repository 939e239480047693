#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fconn/linalg.hpp"
#include "fconn/scalars.hpp"

namespace fconn {

// n x n matrix of truncated Puiseux series. Indices are 0-based here; the
// file formats and CLI use 1-based rows and columns.
class LoopMatrix {
public:
    LoopMatrix() = default;
    explicit LoopMatrix(int n) : n_(n), a_(static_cast<size_t>(n * n)) {}

    static LoopMatrix identity(int n);
    static LoopMatrix constant(const KMat& c);
    static LoopMatrix elementary(int n, int i, int j, const Series& s);
    static LoopMatrix scalar(int n, const Series& s);

    int n() const { return n_; }
    Series& operator()(int i, int j) { return a_[static_cast<size_t>(i * n_ + j)]; }
    const Series& operator()(int i, int j) const { return a_[static_cast<size_t>(i * n_ + j)]; }

    int ram() const;
    bool exact() const;
    bool is_zero() const;
    // Smallest entry precision; nullopt when every entry is exact.
    std::optional<Q> min_prec() const;

    LoopMatrix operator-() const;
    LoopMatrix& operator+=(const LoopMatrix& o);
    LoopMatrix& operator-=(const LoopMatrix& o);
    friend LoopMatrix operator+(LoopMatrix a, const LoopMatrix& b) { return a += b; }
    friend LoopMatrix operator-(LoopMatrix a, const LoopMatrix& b) { return a -= b; }
    friend LoopMatrix operator*(const LoopMatrix& a, const LoopMatrix& b);

    LoopMatrix scaled(const Cyc& c) const;
    LoopMatrix shifted(const Q& q) const;
    LoopMatrix tau() const;
    LoopMatrix galois(long k = 1) const;
    LoopMatrix reembed(int e) const;
    LoopMatrix with_precision(const Q& n) const;
    Series trace() const;

    // Entrywise equality on the common known range.
    bool agrees_with(const LoopMatrix& o) const;
    friend bool operator==(const LoopMatrix& a, const LoopMatrix& b);

    // Constant part as a matrix over k; throws if an entry has other terms.
    KMat constant_matrix() const;

    std::string str() const;

private:
    int n_ = 0;
    std::vector<Series> a_;
};

LoopMatrix commutator(const LoopMatrix& a, const LoopMatrix& b);
LoopMatrix power(const LoopMatrix& a, int k);

}  // namespace fconn
