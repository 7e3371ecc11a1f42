#pragma once

#include <cmath>
#include <cstddef>

namespace zetasum {

// tanh-sinh (double-exponential) quadrature over (a, b). The node weights
// decay double-exponentially toward the endpoints, which tames integrable
// endpoint singularities such as log cos(z/2) at z = pi.
//
// f may return double or std::complex<double>.
template <class F>
auto integrate_tanh_sinh(F&& f, double a, double b, double abs_tol = 1e-12, int max_level = 12)
    -> decltype(f(a)) {
    using R = decltype(f(a));
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const double t_max = 6.1;  // beyond this the weights underflow

    auto node_term = [&](double t) -> R {
        const double u = 1.5707963267948966 * std::sinh(t);
        const double x = std::tanh(u);
        const double ch = std::cosh(u);
        const double w = 1.5707963267948966 * std::cosh(t) / (ch * ch);
        if (w < 1e-300) return R{};
        const double xa = mid + half * x;
        // keep strictly inside (a,b); the weight is already negligible here
        if (xa <= a || xa >= b) return R{};
        return f(xa) * (half * w);
    };

    double h = 1.0;
    R sum = node_term(0.0);
    for (int k = 1; k * h <= t_max; ++k) {
        sum += node_term(k * h) + node_term(-k * h);
    }
    R value = sum * h;

    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        R add{};
        for (int k = 1; k * h <= t_max; k += 2) {
            add += node_term(k * h) + node_term(-k * h);
        }
        sum += add;
        R next = sum * h;
        if (level >= 3 && std::abs(next - value) < abs_tol) {
            return next;
        }
        value = next;
    }
    return value;
}

} // namespace zetasum
