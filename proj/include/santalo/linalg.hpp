#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "santalo/errors.hpp"

namespace santalo {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(const Vec& a, double s) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

// a + s*b, the only compound expression that shows up everywhere.
inline Vec axpy(const Vec& a, double s, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + s * b[i];
    return r;
}

inline Vec unit_vector(int n, int axis) {
    Vec e(static_cast<std::size_t>(n), 0.0);
    e[static_cast<std::size_t>(axis)] = 1.0;
    return e;
}

// Dense square matrix, row-major. Dimensions stay tiny (n <= 8), so a plain
// partial-pivot LU covers every factorization need.
class Mat {
public:
    Mat() = default;
    explicit Mat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    static Mat identity(int n) {
        Mat m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    static Mat from_columns(const std::vector<Vec>& cols) {
        const int n = static_cast<int>(cols.size());
        Mat m(n);
        for (int j = 0; j < n; ++j) {
            if (static_cast<int>(cols[static_cast<std::size_t>(j)].size()) != n)
                throw DimensionMismatch("column length does not match matrix order");
            for (int i = 0; i < n; ++i) m.at(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        }
        return m;
    }

    int order() const { return n_; }

    double& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    Vec column(int j) const {
        Vec c(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) c[static_cast<std::size_t>(i)] = at(i, j);
        return c;
    }

    Vec matvec(const Vec& x) const {
        Vec y(static_cast<std::size_t>(n_), 0.0);
        for (int i = 0; i < n_; ++i) {
            double s = 0.0;
            for (int j = 0; j < n_; ++j) s += at(i, j) * x[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] = s;
        }
        return y;
    }

    Mat transpose() const {
        Mat t(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Mat scaled(double s) const {
        Mat m = *this;
        for (double& v : m.a_) v *= s;
        return m;
    }

private:
    int n_ = 0;
    std::vector<double> a_;

    friend class Lu;
};

// Cached LU factorization with partial pivoting.
class Lu {
public:
    explicit Lu(const Mat& m) : n_(m.order()), lu_(m), piv_(static_cast<std::size_t>(m.order())) {
        det_ = 1.0;
        for (int i = 0; i < n_; ++i) piv_[static_cast<std::size_t>(i)] = i;
        for (int k = 0; k < n_; ++k) {
            int p = k;
            double best = std::fabs(lu_.at(k, k));
            for (int i = k + 1; i < n_; ++i) {
                const double v = std::fabs(lu_.at(i, k));
                if (v > best) { best = v; p = i; }
            }
            if (p != k) {
                for (int j = 0; j < n_; ++j) std::swap(lu_.at(k, j), lu_.at(p, j));
                std::swap(piv_[static_cast<std::size_t>(k)], piv_[static_cast<std::size_t>(p)]);
                det_ = -det_;
            }
            const double pivot = lu_.at(k, k);
            det_ *= pivot;
            if (pivot == 0.0) { singular_ = true; return; }
            for (int i = k + 1; i < n_; ++i) {
                const double f = lu_.at(i, k) / pivot;
                lu_.at(i, k) = f;
                for (int j = k + 1; j < n_; ++j) lu_.at(i, j) -= f * lu_.at(k, j);
            }
        }
    }

    double det() const { return singular_ ? 0.0 : det_; }
    bool singular() const { return singular_; }

    Vec solve(const Vec& b) const {
        if (singular_) throw DegenerateBasis();
        Vec x(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) x[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(piv_[static_cast<std::size_t>(i)])];
        for (int i = 1; i < n_; ++i) {
            double s = x[static_cast<std::size_t>(i)];
            for (int j = 0; j < i; ++j) s -= lu_.at(i, j) * x[static_cast<std::size_t>(j)];
            x[static_cast<std::size_t>(i)] = s;
        }
        for (int i = n_ - 1; i >= 0; --i) {
            double s = x[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < n_; ++j) s -= lu_.at(i, j) * x[static_cast<std::size_t>(j)];
            x[static_cast<std::size_t>(i)] = s / lu_.at(i, i);
        }
        return x;
    }

    Mat inverse() const {
        Mat inv(n_);
        Vec e(static_cast<std::size_t>(n_), 0.0);
        for (int j = 0; j < n_; ++j) {
            e[static_cast<std::size_t>(j)] = 1.0;
            const Vec col = solve(e);
            for (int i = 0; i < n_; ++i) inv.at(i, j) = col[static_cast<std::size_t>(i)];
            e[static_cast<std::size_t>(j)] = 0.0;
        }
        return inv;
    }

private:
    int n_;
    Mat lu_;
    std::vector<int> piv_;
    double det_ = 0.0;
    bool singular_ = false;
};

inline double det(const Mat& m) { return Lu(m).det(); }

} // namespace santalo
