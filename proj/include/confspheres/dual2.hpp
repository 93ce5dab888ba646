#pragma once

#include <cmath>
#include <span>
#include <type_traits>
#include <vector>

#include "confspheres/linalg.hpp"

namespace confspheres {

// Forward-mode scalar carrying value, gradient and Hessian with respect to a
// fixed set of input variables. Propagation is exact (no truncation), so jets
// of arbitrarily composed closed-form expressions come out to roundoff.
class Dual2 {
  public:
    Dual2() = default;
    Dual2(int dim, double value) : v(value), g(dim, 0.0), h(dim) {}

    static Dual2 variable(int dim, double value, int index) {
        Dual2 d(dim, value);
        d.g[index] = 1.0;
        return d;
    }

    int dim() const { return static_cast<int>(g.size()); }

    double v = 0.0;
    Vec g;
    Mat h;
};

std::vector<Dual2> seed_point(std::span<const double> y);

// f applied through the chain rule: caller supplies f(v), f'(v), f''(v).
Dual2 chain(const Dual2& a, double f0, double f1, double f2);

Dual2 operator-(const Dual2& a);
Dual2 operator+(const Dual2& a, const Dual2& b);
Dual2 operator-(const Dual2& a, const Dual2& b);
Dual2 operator*(const Dual2& a, const Dual2& b);
Dual2 operator/(const Dual2& a, const Dual2& b);

Dual2 operator+(const Dual2& a, double c);
Dual2 operator+(double c, const Dual2& a);
Dual2 operator-(const Dual2& a, double c);
Dual2 operator-(double c, const Dual2& a);
Dual2 operator*(const Dual2& a, double c);
Dual2 operator*(double c, const Dual2& a);
Dual2 operator/(const Dual2& a, double c);
Dual2 operator/(double c, const Dual2& a);

Dual2 pow(const Dual2& a, double p);
Dual2 sqrt(const Dual2& a);

inline double scalar_value(double x) { return x; }
inline double scalar_value(const Dual2& x) { return x.v; }

// Generic helpers shared by code instantiated for S = double and S = Dual2.
template <class S>
S s_const(double c, std::span<const S> like) {
    if constexpr (std::is_same_v<S, double>) {
        (void)like;
        return c;
    } else {
        return Dual2(like[0].dim(), c);
    }
}

template <class S>
S s_dot(std::span<const S> a, std::span<const S> b) {
    S s = a[0] * b[0];
    for (std::size_t i = 1; i < a.size(); ++i) s = s + a[i] * b[i];
    return s;
}

template <class S>
S s_norm2(std::span<const S> a) {
    return s_dot(a, a);
}

// Overloads so unqualified calls in generic code resolve for plain doubles too.
inline double pow(double a, double p) { return std::pow(a, p); }
inline double sqrt(double a) { return std::sqrt(a); }

}  // namespace confspheres
