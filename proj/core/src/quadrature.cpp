#include "cfusion/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>

namespace cfusion {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;
using Gauss = boost::math::quadrature::gauss<double, 15>;

struct Panel {
    Vec kronrod;
    double err;
};

Panel panel(const std::function<Vec(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const auto& xk = Kronrod::abscissa();
    const auto& wk = Kronrod::weights();
    const auto& wg = Gauss::weights();
    Vec f0 = f(c);
    Vec K = f0 * wk[0];
    Vec G = f0 * wg[0];
    for (std::size_t i = 1; i < xk.size(); ++i) {
        const Vec s = f(c + h * xk[i]) + f(c - h * xk[i]);
        K += s * wk[i];
        if (i % 2 == 0) G += s * wg[i / 2];
    }
    K *= h;
    G *= h;
    return {K, (K - G).cwiseAbs().maxCoeff()};
}

// Panel edges clustered geometrically around each centre.
std::vector<double> breakpoints(double lo, double hi, std::initializer_list<double> centres, double scale) {
    std::vector<double> b{lo, hi};
    for (double c : centres) {
        if (c > lo && c < hi) b.push_back(c);
        for (double off = 0.25 * scale; off < 4.0 * (hi - lo); off *= 2.0) {
            if (c - off > lo && c - off < hi) b.push_back(c - off);
            if (c + off > lo && c + off < hi) b.push_back(c + off);
        }
    }
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
}

}  // namespace

VectorIntegral integrate_vector(const std::function<Vec(double)>& f, std::span<const double> breaks,
                                double rel_tol, int max_panels) {
    if (breaks.size() < 2) throw std::invalid_argument("integrate_vector: need at least two breaks");
    struct Item {
        double a, b;
        Panel p;
    };
    const auto worse = [](const Item& x, const Item& y) { return x.p.err < y.p.err; };
    std::vector<Item> heap;
    Vec total;
    double err = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (!(breaks[i] < breaks[i + 1])) continue;
        Item it{breaks[i], breaks[i + 1], panel(f, breaks[i], breaks[i + 1])};
        total = total.size() == 0 ? it.p.kronrod : Vec(total + it.p.kronrod);
        err += it.p.err;
        heap.push_back(std::move(it));
    }
    if (heap.empty()) throw std::invalid_argument("integrate_vector: empty range");
    std::make_heap(heap.begin(), heap.end(), worse);
    const auto target = [&] { return std::max(rel_tol * total.cwiseAbs().maxCoeff(), 1e-300); };
    while (err > target() && static_cast<int>(heap.size()) < max_panels) {
        std::pop_heap(heap.begin(), heap.end(), worse);
        const Item w = heap.back();
        heap.pop_back();
        const double m = 0.5 * (w.a + w.b);
        if (!(m > w.a && m < w.b)) {
            heap.push_back(w);
            std::push_heap(heap.begin(), heap.end(), worse);
            break;
        }
        Item l{w.a, m, panel(f, w.a, m)}, r{m, w.b, panel(f, m, w.b)};
        total += l.p.kronrod + r.p.kronrod - w.p.kronrod;
        err += l.p.err + r.p.err - w.p.err;
        heap.push_back(std::move(l));
        std::push_heap(heap.begin(), heap.end(), worse);
        heap.push_back(std::move(r));
        std::push_heap(heap.begin(), heap.end(), worse);
    }
    // Recompute from panels to shed accumulated cancellation.
    VectorIntegral out;
    out.value = Vec::Zero(total.size());
    for (const auto& it : heap) {
        out.value += it.p.kronrod;
        out.error += it.p.err;
    }
    if (out.error > std::max(rel_tol * out.value.cwiseAbs().maxCoeff(), 1e-300))
        throw ToleranceNotMet("integrate_vector: panel budget exhausted");
    return out;
}

SumMoments quadrature_truth(const std::vector<UnivariatePtr>& comps, double s, int eliminated, double tol) {
    if (comps.size() != 3) throw std::invalid_argument("quadrature_truth: needs three components");
    if (eliminated < 0 || eliminated > 2) throw std::invalid_argument("quadrature_truth: bad eliminated index");
    const int e = eliminated;
    const int a = e == 0 ? 1 : 0;
    const int b = 3 - a - e;
    const auto& fa = *comps[static_cast<std::size_t>(a)];
    const auto& fb = *comps[static_cast<std::size_t>(b)];
    const auto& fe = *comps[static_cast<std::size_t>(e)];
    constexpr double q = 1e-8;
    const double alo = fa.quantile(q), ahi = fa.quantile(1 - q);
    const double blo = fb.quantile(q), bhi = fb.quantile(1 - q);
    const double elo = fe.quantile(q), ehi = fe.quantile(1 - q);
    const double ma = fa.quantile(0.5), mb = fb.quantile(0.5), me = fe.quantile(0.5);
    const auto iqr = [](const UnivariateDensity& f) { return f.quantile(0.75) - f.quantile(0.25); };
    const double scale = std::min({iqr(fa), iqr(fb), iqr(fe)});
    const double shift = fa.log_density1(ma) + fb.log_density1(mb) + fe.log_density1(me);

    // inner(xa) = [int g, int xb g, int xb^2 g] dxb with g = f_b(xb) f_e(s - xa - xb)
    const auto inner = [&](double xa) -> Vec {
        const double lo = std::max(blo, s - xa - ehi);
        const double hi = std::min(bhi, s - xa - elo);
        if (!(lo < hi)) return Vec::Zero(3);
        const auto g = [&](double xb) -> Vec {
            const double v = std::exp(fb.log_density1(xb) + fe.log_density1(s - xa - xb) - 0.5 * shift);
            Vec r(3);
            r << v, xb * v, xb * xb * v;
            return r;
        };
        const auto br = breakpoints(lo, hi, {mb, s - xa - me}, scale);
        return integrate_vector(g, br, 1e-11).value;
    };
    const auto outer = [&](double xa) -> Vec {
        const double w = std::exp(fa.log_density1(xa) - 0.5 * shift);
        Vec r(6);
        if (w == 0.0) return Vec::Zero(6);
        const Vec in = inner(xa);
        // Z, E[xa], E[xa^2], E[xb], E[xb^2], E[xa xb]
        r << w * in[0], w * xa * in[0], w * xa * xa * in[0], w * in[1], w * in[2], w * xa * in[1];
        return r;
    };
    const auto br = breakpoints(alo, ahi, {ma, s - mb - me}, scale);
    const VectorIntegral I = integrate_vector(outer, br, 1e-10);
    const double Z = I.value[0];
    if (!(Z > 0.0)) throw ToleranceNotMet("quadrature_truth: normalising constant vanished");
    const double Ea = I.value[1] / Z, Eaa = I.value[2] / Z;
    const double Eb = I.value[3] / Z, Ebb = I.value[4] / Z, Eab = I.value[5] / Z;
    const double Ee = s - Ea - Eb;
    const double Eee = s * s - 2.0 * s * (Ea + Eb) + Eaa + 2.0 * Eab + Ebb;

    SumMoments m;
    m.mean[static_cast<std::size_t>(a)] = Ea;
    m.mean[static_cast<std::size_t>(b)] = Eb;
    m.mean[static_cast<std::size_t>(e)] = Ee;
    m.variance[static_cast<std::size_t>(a)] = Eaa - Ea * Ea;
    m.variance[static_cast<std::size_t>(b)] = Ebb - Eb * Eb;
    m.variance[static_cast<std::size_t>(e)] = Eee - Ee * Ee;
    const double big = std::max({1.0, std::abs(Eaa), std::abs(Ebb), std::abs(Eee)});
    m.abs_error = 4.0 * big * I.error / Z;
    if (m.abs_error > tol) throw ToleranceNotMet("quadrature_truth: error estimate above tolerance");
    return m;
}

}  // namespace cfusion
