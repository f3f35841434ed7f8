#include "basketpricer/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

namespace basket {

namespace {

// 15-point Kronrod extension of 7-point Gauss, positive abscissae.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double lo, hi, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double gauss = 0.0, kronrod = 0.0;
    const double fc = f(center);
    kronrod = fc * kWgk[7];
    gauss = fc * kWg[3];
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double fsum = f(center - dx) + f(center + dx);
        kronrod += fsum * kWgk[i];
        if (i % 2 == 1) {
            gauss += fsum * kWg[i / 2];
        }
    }
    Segment s;
    s.lo = lo;
    s.hi = hi;
    s.value = kronrod * half;
    s.error = std::fabs((kronrod - gauss) * half);
    return s;
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double lo, double hi, double rel_tol,
                                    double abs_tol, int max_intervals) {
    QuadratureResult out;
    if (!(hi > lo)) {
        out.converged = true;
        return out;
    }
    std::priority_queue<Segment> queue;
    queue.push(gk15(f, lo, hi));
    double total = queue.top().value;
    double total_err = queue.top().error;
    out.intervals = 1;
    while (out.intervals < max_intervals) {
        if (total_err <= std::fmax(rel_tol * std::fabs(total), abs_tol)) {
            out.converged = true;
            break;
        }
        const Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        const Segment left = gk15(f, worst.lo, mid);
        const Segment right = gk15(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++out.intervals;
    }
    if (!out.converged) {
        out.converged =
            total_err <= std::fmax(rel_tol * std::fabs(total), abs_tol);
    }
    out.value = total;
    out.abs_error = total_err;
    return out;
}

}  // namespace basket
