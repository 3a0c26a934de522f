#include "cfusion/fusion.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "cfusion/vmf.hpp"

namespace cfusion {

namespace {
template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;
}  // namespace

int FusionProblem::dimension() const {
    return components.empty() ? 0 : components.front()->dimension();
}

void FusionProblem::validate() const {
    if (components.empty()) throw std::invalid_argument("FusionProblem: need at least one component");
    const int d = dimension();
    for (const auto& c : components) {
        if (!c) throw std::invalid_argument("FusionProblem: null component");
        if (c->dimension() != d) throw std::invalid_argument("FusionProblem: component dimensions differ");
    }
    if (!(T > 0.0)) throw std::invalid_argument("FusionProblem: T must be positive");
    const auto n = static_cast<Eigen::Index>(components.size()) * d;
    std::visit(Overloaded{
                   [&](const LinearConstraint& c) {
                       c.validate();
                       if (c.A.cols() != n) throw std::invalid_argument("FusionProblem: A has wrong width");
                   },
                   [&](const SphereConstraint& c) {
                       c.validate();
                       if (c.center.size() != n) throw std::invalid_argument("FusionProblem: centre has wrong size");
                   },
                   [&](const GeneralConstraint& c) {
                       if (!c.h || !c.jacobian) throw std::invalid_argument("FusionProblem: h and jacobian required");
                   }},
               constraint);
}

BudgetExhausted::BudgetExhausted(std::size_t stage1, std::size_t stage2)
    : std::runtime_error("fusion: attempt budget exhausted after " + std::to_string(stage1) +
                         " proposals (" + std::to_string(stage2) + " reached the bridge stage)"),
      attempts_stage1(stage1),
      attempts_stage2(stage2) {}

struct FusionSampler::Workspace {
    std::unique_ptr<UniformManifoldStream> stream;
};

FusionSampler::FusionSampler(FusionProblem problem, FusionOptions options)
    : problem_(std::move(problem)), opts_(std::move(options)) {
    problem_.validate();
    d_ = problem_.dimension();
    if (const auto* lc = std::get_if<LinearConstraint>(&problem_.constraint)) {
        linear_ = std::make_shared<GaussianLinearSampler>(*lc);
    }
}

Vec FusionSampler::draw_components(Rng& rng) const {
    const auto m = static_cast<Eigen::Index>(problem_.components.size());
    Vec x(m * d_);
    for (Eigen::Index i = 0; i < m; ++i) x.segment(i * d_, d_) = problem_.components[i]->sample(rng);
    return x;
}

bool FusionSampler::thin_all(const Vec& x, const Vec& y, Rng& rng) const {
    for (std::size_t i = 0; i < problem_.components.size(); ++i) {
        const auto off = static_cast<Eigen::Index>(i) * d_;
        const Vec xi = x.segment(off, d_);
        const Vec yi = y.segment(off, d_);
        if (!accept_path(*problem_.components[i], xi, yi, problem_.T, opts_.thinning, rng).accepted) return false;
    }
    return true;
}

FusionSampler::Outcome FusionSampler::attempt(Workspace& ws, Rng& rng, Vec& y) const {
    const double T = problem_.T;
    const Vec x = draw_components(rng);
    bool pass = std::visit(
        Overloaded{
            [&](const LinearConstraint&) {
                if (std::log(rng.uniform()) >= linear_->log_acceptance_weight(x, T)) return false;
                y = linear_->sample(x, T, rng);
                return true;
            },
            [&](const SphereConstraint& c) {
                if (std::log(rng.uniform()) >= sphere_log_acceptance_weight(x, T, c)) return false;
                y = sample_vmf_endpoint(x, T, c, rng).y;
                return true;
            },
            [&](const GeneralConstraint& c) {
                // exp(-|y - x|^2 / 2T) = exp(-d^2 / 2T) exp(-(|y - x|^2 - d^2) / 2T) for d <= dist(x, H)
                double d2 = 0.0;
                if (c.distance_lower_bound) {
                    const double d = c.distance_lower_bound(x);
                    d2 = d * d;
                    if (std::log(rng.uniform()) >= -0.5 * d2 / T) return false;
                }
                if (c.uniform_sampler) {
                    y = c.uniform_sampler(rng);
                } else {
                    if (!ws.stream) {
                        const Vec seed = opts_.manifold_seed.size() == x.size() ? opts_.manifold_seed : x;
                        ws.stream = std::make_unique<UniformManifoldStream>(c, seed, opts_.chmc, opts_.burn_in,
                                                                            opts_.thin, rng);
                    }
                    y = ws.stream->next(rng);
                }
                const double excess = std::max(0.0, (y - x).squaredNorm() - d2);
                return std::log(rng.uniform()) < -0.5 * excess / T;
            }},
        problem_.constraint);
    if (!pass) return Outcome::stage1_rejected;
    return thin_all(x, y, rng) ? Outcome::accepted : Outcome::stage2_rejected;
}

FusionDraw FusionSampler::draw(Rng& rng) const {
    const auto t0 = std::chrono::steady_clock::now();
    Workspace ws;
    FusionDraw out;
    Vec y;
    while (out.attempts_stage1 < opts_.max_attempts) {
        ++out.attempts_stage1;
        const Outcome o = attempt(ws, rng, y);
        if (o == Outcome::stage1_rejected) continue;
        ++out.attempts_stage2;
        if (o == Outcome::accepted) {
            out.y = std::move(y);
            out.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return out;
        }
    }
    throw BudgetExhausted(out.attempts_stage1, out.attempts_stage2);
}

AttemptStats FusionSampler::probe(std::size_t attempts, Rng& rng) const {
    Workspace ws;
    AttemptStats s;
    Vec y;
    for (std::size_t i = 0; i < attempts; ++i) {
        ++s.attempts;
        const Outcome o = attempt(ws, rng, y);
        if (o != Outcome::stage1_rejected) ++s.stage1_passed;
        if (o == Outcome::accepted) ++s.accepted;
    }
    return s;
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!error) error = std::current_exception();
                    next.store(n);
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::vector<FusionDraw> FusionSampler::draw_batch(std::size_t n, std::uint64_t seed, unsigned threads) const {
    std::vector<FusionDraw> out(n);
    parallel_for(n, threads, [&](std::size_t i) {
        Rng rng = Rng::substream(seed, i);
        out[i] = draw(rng);
    });
    return out;
}

FusionDraw sample_case1(const FusionProblem& problem, Rng& rng, const FusionOptions& options) {
    if (std::holds_alternative<GeneralConstraint>(problem.constraint)) {
        throw std::invalid_argument("sample_case1: needs a linear or sphere constraint");
    }
    return FusionSampler(problem, options).draw(rng);
}

FusionDraw sample_case2(const FusionProblem& problem, Rng& rng, const FusionOptions& options) {
    if (!std::holds_alternative<GeneralConstraint>(problem.constraint)) {
        throw std::invalid_argument("sample_case2: needs a general constraint");
    }
    return FusionSampler(problem, options).draw(rng);
}

PilotResult pilot_T(FusionProblem problem, const FusionOptions& options, std::uint64_t seed, double T0,
                    int k_min, int k_max, std::size_t attempts) {
    PilotResult r;
    double best_score = -1.0;
    bool best_preferred = false;
    r.T = T0;
    for (int k = k_min; k <= k_max; ++k) {
        problem.T = std::ldexp(T0, k);
        FusionSampler s(problem, options);
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(k - k_min));
        const AttemptStats st = s.probe(attempts, rng);
        r.grid.push_back(problem.T);
        r.stats.push_back(st);
        const double score = static_cast<double>(st.accepted) / static_cast<double>(st.attempts);
        const bool preferred =
            st.accepted > 0 && static_cast<double>(st.stage1_passed) >= 0.1 * static_cast<double>(st.attempts);
        if ((preferred && !best_preferred) || (preferred == best_preferred && score > best_score)) {
            best_score = score;
            best_preferred = preferred;
            r.T = problem.T;
        }
    }
    return r;
}

}  // namespace cfusion
