#pragma once

// Truncated Taylor series (jets) in one variable: c[n] is the coefficient of
// t^n. Used to differentiate closed forms exactly to a fixed order.

#include <cmath>
#include <vector>

namespace phpos {

class Jet {
public:
    explicit Jet(int order, double value = 0.0) : c_(order + 1, 0.0) { c_[0] = value; }

    static Jet variable(int order, double at)
    {
        Jet j(order, at);
        if (order > 0) j.c_[1] = 1.0;
        return j;
    }

    int order() const { return int(c_.size()) - 1; }
    double operator[](int n) const { return c_[n]; }
    double& operator[](int n) { return c_[n]; }
    double value() const { return c_[0]; }

    // d/dt, dropping one order
    Jet derivative() const
    {
        Jet d(order() > 0 ? order() - 1 : 0);
        for (int n = 1; n <= order(); ++n) d.c_[n - 1] = n * c_[n];
        return d;
    }

    Jet truncated(int order) const
    {
        Jet t(order);
        for (int n = 0; n <= order && n <= this->order(); ++n) t.c_[n] = c_[n];
        return t;
    }

    Jet& operator+=(const Jet& o)
    {
        for (int n = 0; n <= order(); ++n) c_[n] += o.c_[n];
        return *this;
    }
    Jet& operator-=(const Jet& o)
    {
        for (int n = 0; n <= order(); ++n) c_[n] -= o.c_[n];
        return *this;
    }
    Jet& operator*=(double a)
    {
        for (double& x : c_) x *= a;
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, double s) { return a *= s; }
    friend Jet operator*(double s, Jet a) { return a *= s; }
    friend Jet operator+(Jet a, double s)
    {
        a.c_[0] += s;
        return a;
    }
    friend Jet operator+(double s, Jet a) { return a + s; }
    friend Jet operator-(Jet a, double s) { return a + (-s); }
    friend Jet operator-(double s, const Jet& a) { return (-1.0) * a + s; }

    friend Jet operator*(const Jet& a, const Jet& b)
    {
        Jet r(a.order());
        for (int n = 0; n <= a.order(); ++n) {
            double acc = 0.0;
            for (int k = 0; k <= n; ++k) acc += a.c_[k] * b.c_[n - k];
            r.c_[n] = acc;
        }
        return r;
    }

    friend Jet operator/(const Jet& a, const Jet& b)
    {
        Jet r(a.order());
        for (int n = 0; n <= a.order(); ++n) {
            double acc = a.c_[n];
            for (int k = 1; k <= n; ++k) acc -= b.c_[k] * r.c_[n - k];
            r.c_[n] = acc / b.c_[0];
        }
        return r;
    }

    // a^p for a(0) > 0
    friend Jet pow(const Jet& a, double p)
    {
        Jet r(a.order());
        r.c_[0] = std::pow(a.c_[0], p);
        for (int n = 1; n <= a.order(); ++n) {
            double acc = 0.0;
            for (int k = 1; k <= n; ++k) acc += (p * k - (n - k)) * a.c_[k] * r.c_[n - k];
            r.c_[n] = acc / (n * a.c_[0]);
        }
        return r;
    }

    friend Jet sqrt(const Jet& a) { return pow(a, 0.5); }

private:
    std::vector<double> c_;
};

} // namespace phpos
