#include "gsca/matrix.hpp"

namespace gsca {

Mat Mat::from_ints(std::initializer_list<std::initializer_list<long long>> rows) {
    Mat m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (long long v : r) m(i, j++) = GaussianRational(v);
        ++i;
    }
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const GaussianRational& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const GaussianRational& b = o(k, j);
                if (!b.is_zero()) r(i, j) += a * b;
            }
        }
    return r;
}

Mat Mat::operator-() const {
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
    return r;
}

Mat Mat::scaled(const GaussianRational& c) const {
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * c;
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool Mat::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

GaussianRational Mat::trace() const {
    GaussianRational t;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
}

std::vector<GaussianRational> Mat::row(std::size_t i) const {
    std::vector<GaussianRational> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }
Mat anticommutator(const Mat& a, const Mat& b) { return a * b + b * a; }

std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && m(pr, c).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pr, j));
        GaussianRational inv = GaussianRational::one() / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            GaussianRational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = GaussianRational::one();
    }
    auto piv = rref(aug);
    if (piv.size() != n || piv.back() != n - 1) throw std::domain_error("singular matrix");
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

namespace {

struct GaussInt {
    BigInt re, im;
    bool is_zero() const { return re == 0 && im == 0; }
    GaussInt operator*(const GaussInt& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
};

// Exact division in Z[i]; all divisions in Bareiss elimination are exact.
GaussInt div_exact(const GaussInt& a, const GaussInt& b) {
    BigInt n = b.re * b.re + b.im * b.im;
    GaussInt num{a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};
    return {num.re / n, num.im / n};
}

} // namespace

std::vector<std::vector<GaussianRational>> nullspace(const Mat& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    // clear denominators row by row -> Gaussian integer matrix
    std::vector<std::vector<GaussInt>> a(rows, std::vector<GaussInt>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        BigInt lcm = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            const auto& v = m(i, j);
            lcm = boost::multiprecision::lcm(lcm, denominator(v.re()));
            lcm = boost::multiprecision::lcm(lcm, denominator(v.im()));
        }
        for (std::size_t j = 0; j < cols; ++j) {
            const auto& v = m(i, j);
            a[i][j].re = numerator(v.re()) * (lcm / denominator(v.re()));
            a[i][j].im = numerator(v.im()) * (lcm / denominator(v.im()));
        }
    }
    // fraction-free (Bareiss) forward elimination
    std::vector<std::size_t> pivot_col;
    GaussInt prev{1, 0};
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(a[r], a[pr]);
        const GaussInt piv = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            GaussInt f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] = div_exact(piv * a[i][j] - f * a[r][j], prev);
        }
        prev = piv;
        pivot_col.push_back(c);
        ++r;
    }
    // back-substitute over Q(i) for each free column
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    auto to_g = [](const GaussInt& v) { return GaussianRational(Rational(v.re), Rational(v.im)); };
    std::vector<std::vector<GaussianRational>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<GaussianRational> x(cols);
        x[fc] = GaussianRational::one();
        for (std::size_t ri = pivot_col.size(); ri-- > 0;) {
            std::size_t pc = pivot_col[ri];
            GaussianRational s;
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (!x[j].is_zero() && !a[ri][j].is_zero()) s += to_g(a[ri][j]) * x[j];
            x[pc] = -s / to_g(a[ri][pc]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace gsca
