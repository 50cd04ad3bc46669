#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "pnc/errors.hpp"

namespace pnc {

/// A polar n-complex number: n real coordinates on the bases 1, h_1, ..., h_{n-1},
/// where h_j h_k = h_{(j+k) mod n}.  Values are immutable after construction and
/// safe to share between threads.
class PolarNComplex {
public:
    /// Zero of dimension n (n >= 2).
    explicit PolarNComplex(std::size_t n) : x_(checked_dim(n), 0.0) {}

    explicit PolarNComplex(std::vector<double> coords) : x_(std::move(coords)) {
        checked_dim(x_.size());
        for (double v : x_)
            if (!std::isfinite(v)) throw Error(ErrorKind::InvalidValue, "non-finite coordinate");
    }

    PolarNComplex(std::initializer_list<double> coords)
        : PolarNComplex(std::vector<double>(coords)) {}

    /// The multiplicative unit 1 of dimension n.
    static PolarNComplex one(std::size_t n) {
        PolarNComplex u(n);
        u.x_[0] = 1.0;
        return u;
    }

    /// The basis element h_k (h_0 = 1).
    static PolarNComplex h(std::size_t n, std::size_t k) {
        checked_dim(n);
        if (k >= n) throw Error(ErrorKind::InvalidValue, "basis index out of range");
        PolarNComplex u(n);
        u.x_[k] = 1.0;
        return u;
    }

    std::size_t dim() const noexcept { return x_.size(); }
    double operator[](std::size_t i) const noexcept { return x_[i]; }
    std::span<const double> coords() const noexcept { return {x_.data(), x_.size()}; }

    bool operator==(const PolarNComplex& o) const noexcept { return x_ == o.x_; }

private:
    static std::size_t checked_dim(std::size_t n) {
        if (n < 2) throw Error(ErrorKind::InvalidValue, "dimension must be at least 2");
        return n;
    }

    std::vector<double> x_;
};

inline void require_same_dim(const PolarNComplex& a, const PolarNComplex& b) {
    if (a.dim() != b.dim())
        throw Error(ErrorKind::DimensionMismatch,
                    "n=" + std::to_string(a.dim()) + " vs n=" + std::to_string(b.dim()));
}

/// Dense row-major real matrix; square n x n when produced by to_matrix.
class RealMatrix {
public:
    RealMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, 0.0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return e_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) noexcept { return e_[i * cols_ + j]; }

    RealMatrix transposed() const {
        RealMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

private:
    std::size_t rows_, cols_;
    std::vector<double> e_;
};

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b);
std::vector<double> matvec(const RealMatrix& a, std::span<const double> x);

}  // namespace pnc
