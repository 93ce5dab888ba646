#include "confspheres/dual2.hpp"

namespace confspheres {

std::vector<Dual2> seed_point(std::span<const double> y) {
    int n = static_cast<int>(y.size());
    std::vector<Dual2> s;
    s.reserve(n);
    for (int i = 0; i < n; ++i) s.push_back(Dual2::variable(n, y[i], i));
    return s;
}

Dual2 chain(const Dual2& a, double f0, double f1, double f2) {
    int n = a.dim();
    Dual2 r(n, f0);
    for (int i = 0; i < n; ++i) r.g[i] = f1 * a.g[i];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.h(i, j) = f1 * a.h(i, j) + f2 * a.g[i] * a.g[j];
    return r;
}

Dual2 operator-(const Dual2& a) { return chain(a, -a.v, -1.0, 0.0); }

Dual2 operator+(const Dual2& a, const Dual2& b) {
    int n = a.dim();
    Dual2 r(n, a.v + b.v);
    for (int i = 0; i < n; ++i) r.g[i] = a.g[i] + b.g[i];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.h(i, j) = a.h(i, j) + b.h(i, j);
    return r;
}

Dual2 operator-(const Dual2& a, const Dual2& b) {
    int n = a.dim();
    Dual2 r(n, a.v - b.v);
    for (int i = 0; i < n; ++i) r.g[i] = a.g[i] - b.g[i];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.h(i, j) = a.h(i, j) - b.h(i, j);
    return r;
}

Dual2 operator*(const Dual2& a, const Dual2& b) {
    int n = a.dim();
    Dual2 r(n, a.v * b.v);
    for (int i = 0; i < n; ++i) r.g[i] = a.g[i] * b.v + b.g[i] * a.v;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r.h(i, j) = a.h(i, j) * b.v + b.h(i, j) * a.v + a.g[i] * b.g[j] + b.g[i] * a.g[j];
    return r;
}

Dual2 operator/(const Dual2& a, const Dual2& b) { return a * pow(b, -1.0); }

Dual2 operator+(const Dual2& a, double c) { return chain(a, a.v + c, 1.0, 0.0); }
Dual2 operator+(double c, const Dual2& a) { return a + c; }
Dual2 operator-(const Dual2& a, double c) { return chain(a, a.v - c, 1.0, 0.0); }
Dual2 operator-(double c, const Dual2& a) { return chain(a, c - a.v, -1.0, 0.0); }
Dual2 operator*(const Dual2& a, double c) { return chain(a, a.v * c, c, 0.0); }
Dual2 operator*(double c, const Dual2& a) { return a * c; }
Dual2 operator/(const Dual2& a, double c) { return chain(a, a.v / c, 1.0 / c, 0.0); }
Dual2 operator/(double c, const Dual2& a) { return chain(a, c / a.v, -c / (a.v * a.v), 2.0 * c / (a.v * a.v * a.v)); }

Dual2 pow(const Dual2& a, double p) {
    double f0 = std::pow(a.v, p);
    double f1 = p * std::pow(a.v, p - 1.0);
    double f2 = p * (p - 1.0) * std::pow(a.v, p - 2.0);
    return chain(a, f0, f1, f2);
}

Dual2 sqrt(const Dual2& a) { return pow(a, 0.5); }

}  // namespace confspheres
