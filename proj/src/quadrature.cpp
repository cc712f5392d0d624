#include "bose2d/quadrature.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace bose2d {
namespace {

// Kronrod-15 nodes on [-1,1] (positive half) and weights; the odd-indexed
// nodes form the embedded Gauss-7 rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double gauss;
  double kronrod;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  Panel p{0.0, 0.0};
  const double fc = f(c);
  p.kronrod = kWgk[7] * fc;
  p.gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double fl = f(c - h * kXgk[i]);
    const double fr = f(c + h * kXgk[i]);
    p.kronrod += kWgk[i] * (fl + fr);
    if (i % 2 == 1) p.gauss += kWg[i / 2] * (fl + fr);
  }
  p.gauss *= h;
  p.kronrod *= h;
  return p;
}

void adapt(const std::function<double(double)>& f, double a, double b,
           double abs_tol, double rel_tol, int depth, int max_depth,
           QuadResult* out) {
  const Panel p = gk15(f, a, b);
  const double err = std::abs(p.kronrod - p.gauss);
  const double tol = std::max(abs_tol, rel_tol * std::abs(p.kronrod));
  if (err <= tol || depth >= max_depth) {
    out->value += p.kronrod;
    out->error += err;
    ++out->subdivisions;
    return;
  }
  const double c = 0.5 * (a + b);
  adapt(f, a, c, 0.5 * abs_tol, rel_tol, depth + 1, max_depth, out);
  adapt(f, c, b, 0.5 * abs_tol, rel_tol, depth + 1, max_depth, out);
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, double rel_tol, int max_depth) {
  QuadResult out;
  if (a == b) return out;
  adapt(f, a, b, abs_tol, rel_tol, 0, max_depth, &out);
  return out;
}

QuadResult integrate_to_inf(const std::function<double(double)>& f, double a,
                            double abs_tol, double rel_tol) {
  auto mapped = [&f, a](double u) {
    const double om = 1.0 - u;
    const double t = a + u / om;
    return f(t) / (om * om);
  };
  return integrate(mapped, 0.0, 1.0, abs_tol, rel_tol);
}

void gauss_laguerre(int n, double* nodes, double* weights) {
  for (int i = 0; i < n; ++i) {
    // standard initial guesses (Stroud & Secrest)
    double x;
    if (i == 0) {
      x = 3.0 / (1.0 + 2.4 * n);
    } else if (i == 1) {
      x = nodes[0] + 15.0 / (1.0 + 2.5 * n);
    } else {
      const double ai = i - 1;
      x = nodes[i - 1] +
          (nodes[i - 1] - nodes[i - 2]) * (1.0 + 2.55 * ai) / (1.9 * ai);
    }
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // evaluate L_n(x) and its derivative by recurrence
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0 - x) * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (p1 - p2) / x;
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    nodes[i] = x;
    // weight = x / ((n+1)^2 L_{n+1}(x)^2); use w = 1/(x pp^2) * ... standard:
    double p1 = 1.0, p2 = 0.0;
    for (int j = 1; j <= n; ++j) {
      const double p3 = p2;
      p2 = p1;
      p1 = ((2.0 * j - 1.0 - x) * p2 - (j - 1.0) * p3) / j;
    }
    (void)p1;
    weights[i] = -1.0 / (n * pp * p2);
  }
}

}  // namespace bose2d
