#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "confspheres/error.hpp"

namespace confspheres {

using Vec = std::vector<double>;

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
inline double norm(std::span<const double> a) { return std::sqrt(norm2(a)); }
double inf_norm(std::span<const double> a);
double dist(std::span<const double> a, std::span<const double> b);
Vec sub(std::span<const double> a, std::span<const double> b);
Vec add(std::span<const double> a, std::span<const double> b);
Vec scaled(std::span<const double> a, double c);

// Dense square matrix, row-major. Sizes here are tiny (n <= 10 or so), so
// everything is plain loops.
class Mat {
  public:
    Mat() = default;
    explicit Mat(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}

    static Mat identity(int n);
    static Mat outer(std::span<const double> a, std::span<const double> b);

    int dim() const { return n_; }
    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    std::span<const double> raw() const { return data_; }

    double trace() const;
    double frobenius() const;
    double max_abs() const;
    double max_asymmetry() const;
    void symmetrize();

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat& operator*=(double c);
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(Mat a, double c) { return a *= c; }
    friend Mat operator*(double c, Mat a) { return a *= c; }

  private:
    int n_ = 0;
    std::vector<double> data_;
};

double max_abs_diff(const Mat& a, const Mat& b);

// Determinant by Gaussian elimination with partial pivoting.
double det(Mat m);

// Solves A x = b in place (A destroyed). Throws FitFailure on a singular pivot.
Vec solve_linear(Mat a, Vec b);

double binomial(int n, int k);

}  // namespace confspheres
