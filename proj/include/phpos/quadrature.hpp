#pragma once

// Shared quadrature building blocks: fixed Gauss-Legendre panels, adaptive
// Gauss-Kronrod, polynomial extrapolation to zero and Wynn's epsilon.

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "phpos/types.hpp"

namespace phpos::quad {

struct Rule {
    std::vector<double> x; // nodes on [-1, 1]
    std::vector<double> w;
};

// Gauss-Legendre rule of order n (Newton on P_n, computed once per n).
Rule make_gauss_legendre(int n);
const Rule& gl16();
const Rule& gl32();

// Sum of an n-point rule over `panels` equal panels of [a, b].
template <class F>
auto gl_panels(F&& f, double a, double b, int panels, const Rule& rule = gl16())
{
    using T = decltype(f(a));
    T sum{};
    bool first = true;
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h, half = 0.5 * h;
        for (std::size_t i = 0; i < rule.x.size(); ++i) {
            T v = f(mid + half * rule.x[i]) * (half * rule.w[i]);
            if (first) {
                sum = v;
                first = false;
            } else {
                sum += v;
            }
        }
    }
    return sum;
}

struct Result {
    double value = 0.0;
    double abs_err = 0.0;
    int evaluations = 0;
};

namespace detail {
inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.58608723546769113029414483825873,  0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double wgk[8] = {
    0.02293532201052922496373200805897,  0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.16900472663926790282658342659855,  0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.27970539148927666790146777142378,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, err;
    bool operator<(const Segment& o) const { return err < o.err; }
};

template <class F>
Segment gk15(F& f, double a, double b)
{
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = fc * wgk[7], resg = fc * wg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        const double s = f(c - dx) + f(c + dx);
        resk += wgk[j] * s;
        if (j % 2 == 1) resg += wg[j / 2] * s;
    }
    return {a, b, resk * h, std::abs((resk - resg) * h)};
}
} // namespace detail

// Globally adaptive 7-15 Gauss-Kronrod on [a, b], optionally pre-split.
template <class F>
Result gauss_kronrod(F f, double a, double b, double abs_tol, double rel_tol,
                     int initial_split = 1, int max_segments = 2000)
{
    std::priority_queue<detail::Segment> heap;
    const double h = (b - a) / initial_split;
    double total = 0.0, err = 0.0;
    for (int i = 0; i < initial_split; ++i) {
        auto s = detail::gk15(f, a + i * h, i + 1 == initial_split ? b : a + (i + 1) * h);
        total += s.value;
        err += s.err;
        heap.push(s);
    }
    int segments = initial_split;
    while (err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (segments >= max_segments)
            throw ConvergenceError("adaptive Gauss-Kronrod: segment budget exhausted");
        auto top = heap.top();
        heap.pop();
        const double m = 0.5 * (top.a + top.b);
        auto l = detail::gk15(f, top.a, m);
        auto r = detail::gk15(f, m, top.b);
        total += l.value + r.value - top.value;
        err += l.err + r.err - top.err;
        heap.push(l);
        heap.push(r);
        ++segments;
        if (err < 0) err = 0; // accumulated rounding
    }
    // recompute sums to drop the drift of incremental updates
    total = 0.0;
    err = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        err += heap.top().err;
        heap.pop();
    }
    return {total, err, segments * 15};
}

// Value at x = 0 of the interpolating polynomial through (xs[i], ys[i]).
template <class T>
T neville_at_zero(const std::vector<double>& xs, std::vector<T> ys)
{
    const std::size_t n = xs.size();
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t i = 0; i + m < n; ++i)
            ys[i] = (ys[i] * (-xs[i + m]) + ys[i + 1] * xs[i]) * (1.0 / (xs[i] - xs[i + m]));
    return ys[0];
}

// Wynn epsilon acceleration of a sequence of partial sums; returns the last
// even-column estimate.
double wynn_epsilon(const std::vector<double>& partial);

} // namespace phpos::quad
