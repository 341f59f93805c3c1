#include "pseudogas/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "pseudogas/error.hpp"
#include "pseudogas/summation.hpp"

namespace pseudogas {
namespace {

// Kronrod abscissae on [0, 1]; odd indices are the embedded 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& o) const noexcept { return error < o.error; }
};

Segment gauss_kronrod_15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[static_cast<std::size_t>(i)];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kWgk[static_cast<std::size_t>(i)] * pair;
        if (i % 2 == 1) gauss += kWg[static_cast<std::size_t>(i / 2)] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::fabs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, double abs_tol, int max_subdivisions) {
    if (!(b > a)) return {0.0, 0.0, 0};
    std::vector<Segment> heap{gauss_kronrod_15(f, a, b)};
    double total = heap.front().value;
    double error = heap.front().error;

    int subdivisions = 0;
    while (error > std::max(abs_tol, rel_tol * std::fabs(total))) {
        if (subdivisions >= max_subdivisions) {
            throw QuadratureFailure("integrate_adaptive: tolerance not reached after " +
                                    std::to_string(max_subdivisions) + " subdivisions");
        }
        std::pop_heap(heap.begin(), heap.end());
        const Segment worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        heap.push_back(gauss_kronrod_15(f, worst.a, mid));
        std::push_heap(heap.begin(), heap.end());
        heap.push_back(gauss_kronrod_15(f, mid, worst.b));
        std::push_heap(heap.begin(), heap.end());
        ++subdivisions;

        // Re-add from scratch so rounding drift in running totals cannot
        // stall convergence.
        CompensatedSum value_sum;
        CompensatedSum error_sum;
        for (const Segment& s : heap) {
            value_sum += s.value;
            error_sum += s.error;
        }
        total = value_sum.value();
        error = error_sum.value();
    }
    return {total, error, subdivisions};
}

}  // namespace pseudogas
