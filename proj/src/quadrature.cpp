#include "phpos/quadrature.hpp"

namespace phpos::quad {

Rule make_gauss_legendre(int n)
{
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        r.w[i] = r.w[n - 1 - i] = w;
    }
    if (n % 2 == 1) r.x[n / 2] = 0.0;
    return r;
}

const Rule& gl16()
{
    static const Rule rule = make_gauss_legendre(16);
    return rule;
}

const Rule& gl32()
{
    static const Rule rule = make_gauss_legendre(32);
    return rule;
}

double wynn_epsilon(const std::vector<double>& s)
{
    const std::size_t n = s.size();
    if (n < 3) return n ? s.back() : 0.0;
    // e[k] holds column k of the epsilon table along the current diagonal
    std::vector<double> prev(s.begin(), s.end()), prev2(n + 1, 0.0), cur;
    double best = s.back();
    for (std::size_t col = 1; col < n; ++col) {
        cur.assign(n - col, 0.0);
        for (std::size_t i = 0; i + col < n; ++i) {
            const double d = prev[i + 1] - prev[i];
            const double base = col == 1 ? 0.0 : prev2[i + 1];
            if (d == 0.0) return prev[i + 1];
            cur[i] = base + 1.0 / d;
        }
        if (col % 2 == 0) best = cur.back();
        prev2 = prev;
        prev = cur;
    }
    return best;
}

} // namespace phpos::quad
