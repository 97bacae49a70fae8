#include "gsieve/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace gsieve {

namespace {

// Newton iteration on Legendre polynomials; nodes to full double precision.
GaussLegendre compute_gl(int n) {
    GaussLegendre gl;
    gl.nodes.resize(n);
    gl.weights.resize(n);
    int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double z1, pp;
        do {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            z1 = z;
            z = z1 - p1 / pp;
        } while (std::abs(z - z1) > 1e-15);
        gl.nodes[i] = -z;
        gl.nodes[n - 1 - i] = z;
        gl.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        gl.weights[n - 1 - i] = gl.weights[i];
    }
    return gl;
}

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
    static std::mutex mtx;
    static std::map<int, GaussLegendre> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gl(n)).first;
    return it->second;
}

std::vector<double> oscillation_panels(double a, double b, double max_width,
                                       const std::function<double(double)>& freq) {
    std::vector<double> bounds{a};
    double t = a;
    const double three_cycles = 3.0 * std::numbers::pi;  // 1.5 cycles in phase
    while (t < b) {
        double w = std::min(max_width, three_cycles / (1.0 + freq(t)));
        // Guard against frequency growth across the panel.
        double f_out = freq(std::min(b, t + w));
        w = std::min(w, three_cycles / (1.0 + f_out));
        t = std::min(b, t + w);
        bounds.push_back(t);
    }
    return bounds;
}

}  // namespace gsieve
