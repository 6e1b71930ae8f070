#include "kzeta/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kzeta/bessel.hpp"  // ConvergenceError

namespace kzeta {

namespace {

const double XK[8] = {
    0.000000000000000000000000000000000,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329,
};
const double WK[8] = {
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970,
};
// Gauss-7 weights aligned with XK[0], XK[2], XK[4], XK[6]
const double WG[4] = {
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082,
};

struct Panel {
    double a, b;
    cplx val;
    double err;
};

Panel gk15(const std::function<cplx(double)>& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    cplx f0 = f(c);
    cplx k15 = WK[0] * f0;
    cplx g7 = WG[0] * f0;
    double kabs = WK[0] * std::abs(f0);
    for (int i = 1; i < 8; ++i) {
        cplx fp = f(c + h * XK[i]), fm = f(c - h * XK[i]);
        cplx fi = fp + fm;
        k15 += WK[i] * fi;
        kabs += WK[i] * (std::abs(fp) + std::abs(fm));
        if ((i & 1) == 0) g7 += WG[i / 2] * fi;
    }
    k15 *= h;
    g7 *= h;
    kabs *= h;
    // rescaled error estimate (the raw |K15-G7| badly overestimates once a
    // panel is resolved)
    double diff = std::abs(k15 - g7);
    double err = diff;
    if (kabs > 0 && diff < kabs)
        err = kabs * std::min(1.0, std::pow(200.0 * diff / kabs, 1.5)) / 200.0 * 200.0;
    if (kabs > 0) {
        double scaled = kabs * std::min(1.0, std::pow(200.0 * diff / kabs, 1.5));
        err = std::min(diff, scaled);
    }
    return {a, b, k15, err};
}

}  // namespace

cplx integrate_gk(const std::function<cplx(double)>& f, double a, double b,
                  double tol, int max_intervals) {
    if (a == b) return 0.0;
    std::vector<Panel> heap{gk15(f, a, b)};
    double err_total = heap[0].err;
    int used = 1;
    while (err_total > tol && used < max_intervals) {
        // split the worst panel
        size_t worst = 0;
        for (size_t i = 1; i < heap.size(); ++i)
            if (heap[i].err > heap[worst].err) worst = i;
        Panel p = heap[worst];
        if (p.b - p.a < 1e-15 * (std::abs(a) + std::abs(b) + 1.0)) break;
        Panel l = gk15(f, p.a, 0.5 * (p.a + p.b));
        Panel r = gk15(f, 0.5 * (p.a + p.b), p.b);
        err_total += l.err + r.err - p.err;
        heap[worst] = l;
        heap.push_back(r);
        ++used;
    }
    if (err_total > 100 * tol + 1e-12)
        throw ConvergenceError("integrate_gk: tolerance not reached");
    cplx total = 0.0;
    for (const Panel& p : heap) total += p.val;
    return total;
}

cplx trapezoid_periodic(const std::function<cplx(double)>& f, int n) {
    const double h = 2.0 * 3.14159265358979323846 / n;
    cplx acc = 0.0;
    for (int k = 0; k < n; ++k) acc += f(h * k);
    return acc * h;
}

cplx integrate_semi_infinite(const std::function<cplx(double)>& f, double a,
                             double tol, double first_panel, int max_panels) {
    cplx total = 0.0;
    double lo = a, h = first_panel;
    int quiet = 0;
    for (int k = 0; k < max_panels; ++k) {
        cplx piece = integrate_gk(f, lo, lo + h, tol * 0.25);
        total += piece;
        quiet = (std::abs(piece) < tol) ? quiet + 1 : 0;
        if (quiet >= 2) return total;
        lo += h;
        h *= 2.0;
    }
    throw ConvergenceError("integrate_semi_infinite: tail did not settle");
}

cplx integrate_vertical(const std::function<cplx(cplx)>& f, double sigma,
                        double t_max, double tol) {
    auto g = [&](double t) { return f(cplx(sigma, t)); };
    cplx val = integrate_gk(g, -t_max, t_max, tol);
    return cplx(0.0, 1.0) * val;
}

}  // namespace kzeta
