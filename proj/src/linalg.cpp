#include "confspheres/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace confspheres {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SingularPoint: return "SingularPoint";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
        case ErrorKind::OutOfDomain: return "OutOfDomain";
        case ErrorKind::NonPositiveValue: return "NonPositiveValue";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::LatticeMismatch: return "LatticeMismatch";
        case ErrorKind::FitFailure: return "FitFailure";
        case ErrorKind::MonotonicityNotFound: return "MonotonicityNotFound";
        case ErrorKind::ConfigError: return "ConfigError";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "UnknownError";
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> a) { return dot(a, a); }

double inf_norm(std::span<const double> a) {
    double m = 0.0;
    for (double x : a) m = std::max(m, std::abs(x));
    return m;
}

double dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

Vec sub(std::span<const double> a, std::span<const double> b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec add(std::span<const double> a, std::span<const double> b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec scaled(std::span<const double> a, double c) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

Mat Mat::identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Mat Mat::outer(std::span<const double> a, std::span<const double> b) {
    Mat m(static_cast<int>(a.size()));
    for (int i = 0; i < m.n_; ++i)
        for (int j = 0; j < m.n_; ++j) m(i, j) = a[i] * b[j];
    return m;
}

double Mat::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double Mat::frobenius() const {
    double s = 0.0;
    for (double x : data_) s += x * x;
    return std::sqrt(s);
}

double Mat::max_abs() const {
    double m = 0.0;
    for (double x : data_) m = std::max(m, std::abs(x));
    return m;
}

double Mat::max_asymmetry() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
    return m;
}

void Mat::symmetrize() {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            double v = 0.5 * ((*this)(i, j) + (*this)(j, i));
            (*this)(i, j) = v;
            (*this)(j, i) = v;
        }
}

Mat& Mat::operator+=(const Mat& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Mat& Mat::operator*=(double c) {
    for (double& x : data_) x *= c;
    return *this;
}

double max_abs_diff(const Mat& a, const Mat& b) {
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

namespace {

// Returns the permutation sign, or 0 if a pivot vanished.
int eliminate(Mat& m) {
    int n = m.dim();
    int sign = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
        if (m(pivot, col) == 0.0) return 0;
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
            sign = -sign;
        }
        for (int r = col + 1; r < n; ++r) {
            double f = m(r, col) / m(col, col);
            for (int c = col; c < n; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return sign;
}

}  // namespace

double det(Mat m) {
    int sign = eliminate(m);
    if (sign == 0) return 0.0;
    double d = sign;
    for (int i = 0; i < m.dim(); ++i) d *= m(i, i);
    return d;
}

Vec solve_linear(Mat a, Vec b) {
    int n = a.dim();
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (a(pivot, col) == 0.0) fail(ErrorKind::FitFailure, "singular linear system");
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
            std::swap(b[pivot], b[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            double f = a(r, col) / a(col, col);
            for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
            b[r] -= f * b[col];
        }
    }
    Vec x(n);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

}  // namespace confspheres
