#pragma once

#include "gsca/gaussian.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace gsca {

// Dense matrix over the Gaussian rationals. Everything here is exact; the
// sizes in this project stay small (4x4 gammas up to 4N x 4N projectors).
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussianRational::one();
        return m;
    }
    static Mat from_ints(std::initializer_list<std::initializer_list<long long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const GaussianRational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const GaussianRational& c) const;
    Mat transpose() const;

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_symmetric() const { return *this == transpose(); }
    bool is_antisymmetric() const { return transpose() == -*this; }
    GaussianRational trace() const;

    std::vector<GaussianRational> row(std::size_t i) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<GaussianRational> data_;
};

Mat kron(const Mat& a, const Mat& b);
Mat commutator(const Mat& a, const Mat& b);
Mat anticommutator(const Mat& a, const Mat& b);

// In-place reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref(Mat& m);

std::size_t rank(Mat m);

// Inverse of a square matrix; throws std::domain_error if singular.
Mat inverse(const Mat& m);

// Basis of the right nullspace {x : m x = 0}. The forward elimination is
// fraction-free (Bareiss) over Gaussian integers after clearing denominators,
// so no intermediate rounding or pivoting tolerance exists anywhere.
std::vector<std::vector<GaussianRational>> nullspace(const Mat& m);

} // namespace gsca
