#include "levyarea/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <thread>

#include "levyarea/errors.hpp"

namespace levyarea {

namespace {

// Accumulates int h(x - L_t) dt for one or more holding functions while L
// either stays put (flat pieces) or grows at unit-drift speed (descents).
class AreaAccumulator {
public:
    AreaAccumulator(const HoldingFunction& h, std::span<const HoldingFunction> aux, double x, double speed)
        : h_(h), aux_(aux), x_(x), speed_(speed), aux_totals_(aux.size(), 0.0) {}

    void flat(double local_time, double duration) {
        if (duration <= 0.0) return;
        const double gap = x_ - local_time;
        total_ += h_(gap) * duration;
        for (std::size_t i = 0; i < aux_.size(); ++i) aux_totals_[i] += aux_[i](gap) * duration;
    }

    void descend(double from, double to) {
        if (to <= from) return;
        const double lo = std::max(0.0, x_ - to);
        const double hi = std::max(lo, x_ - from);
        total_ += h_.integral_pow(1, lo, hi) / speed_;
        for (std::size_t i = 0; i < aux_.size(); ++i) aux_totals_[i] += aux_[i].integral_pow(1, lo, hi) / speed_;
    }

    double total() const { return total_; }
    std::vector<double> aux_totals() const { return aux_totals_; }

private:
    const HoldingFunction& h_;
    std::span<const HoldingFunction> aux_;
    double x_;
    double speed_;
    double total_ = 0.0;
    std::vector<double> aux_totals_;
};

void require_exact(const ProcessSpec& spec) {
    spec.validate();
    if (spec.sigma2 != 0.0) {
        throw UnsupportedProcess("exact excursion sampling needs sigma2 == 0; use grid_sample");
    }
}

} // namespace

double PathRecord::net_input(double t) const {
    double value = drift * t;
    for (std::size_t i = 0; i < jump_times.size() && jump_times[i] <= t; ++i) value += jump_sizes[i];
    return value;
}

double PathRecord::local_time(double t) const {
    // The running minimum is attained at t or just before a jump.
    double minimum = 0.0;
    double before = 0.0;
    for (std::size_t i = 0; i < jump_times.size() && jump_times[i] <= t; ++i) {
        const double left = before + drift * jump_times[i];
        minimum = std::min(minimum, left);
        before += jump_sizes[i];
    }
    minimum = std::min(minimum, before + drift * t);
    return -minimum;
}

PathRecord sample_excursion(const ProcessSpec& spec, const HoldingFunction& h, double x, Philox4x32& rng,
                            std::span<const HoldingFunction> aux, const ExcursionOptions& options) {
    require_exact(spec);
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("level must be finite and >= 0");

    const double speed = -spec.drift;
    const bool has_jumps = spec.jump_rate > 0.0;

    PathRecord path;
    path.drift = spec.drift;
    path.level = x;
    AreaAccumulator acc(h, aux, x, speed);

    double t = 0.0;
    double workload = 0.0;  // W_t = X_t + L_t
    double local = 0.0;     // L_t
    std::size_t events = 0;
    std::exponential_distribution<double> interarrival(has_jumps ? spec.jump_rate : 1.0);

    while (true) {
        const double gap = has_jumps ? interarrival(rng) : std::numeric_limits<double>::infinity();
        const double busy = workload / speed;
        if (gap <= busy) {
            acc.flat(local, gap);
            workload = std::max(0.0, workload - speed * gap);
            t += gap;
        } else {
            acc.flat(local, busy);
            const double idle_start = t + busy;
            const double idle = gap - busy;
            const double to_level = (x - local) / speed;
            if (idle >= to_level) {
                acc.descend(local, x);
                path.hitting_time = idle_start + to_level;
                path.horizon = t + gap;
                break;
            }
            acc.descend(local, local + speed * idle);
            local += speed * idle;
            workload = 0.0;
            t += gap;
        }
        const double jump = spec.jumps->sample(rng);
        workload += jump;
        if (options.record_jumps) {
            path.jump_times.push_back(t);
            path.jump_sizes.push_back(jump);
        }
        if (++events > options.max_events) {
            throw HorizonExceeded("excursion exceeded " + std::to_string(options.max_events) + " jumps");
        }
    }
    path.area = acc.total();
    path.aux_areas = acc.aux_totals();
    return path;
}

double stieltjes_area(const PathRecord& path, const HoldingFunction& h) {
    const double speed = -path.drift;
    const double x = path.level;

    // Walk X through its jump epochs. A jump taken at a new running minimum
    // -y opens an atom of T at level y; the atom closes when X next drops
    // below -y.
    double after = 0.0;  // X just after the previous jump
    double t_prev = 0.0;
    double minimum = 0.0;
    bool open = false;
    double open_level = 0.0;
    double open_start = 0.0;
    double atoms = 0.0;

    auto close_atom = [&]() {
        if (!open) return;
        const double end = t_prev + (after - minimum) / speed;
        atoms += h(x - open_level) * (end - open_start);
        open = false;
    };

    for (std::size_t i = 0; i < path.jump_times.size(); ++i) {
        const double tau = path.jump_times[i];
        const double left = after - speed * (tau - t_prev);
        if (left < minimum) {
            close_atom();
            minimum = left;
            open = true;
            open_level = -left;
            open_start = tau;
        }
        after = left + path.jump_sizes[i];
        t_prev = tau;
    }
    close_atom();
    return atoms + h.integral(x) / speed;
}

PathRecord grid_sample(const ProcessSpec& spec, const HoldingFunction& h, double x, double dt, Philox4x32& rng,
                       std::size_t max_steps) {
    spec.validate();
    if (!(dt > 0.0)) throw DomainError("dt must be > 0");
    if (!(x >= 0.0)) throw DomainError("level must be >= 0");

    const double vol = std::sqrt(spec.sigma2 * dt);
    const bool has_jumps = spec.jump_rate > 0.0;
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::poisson_distribution<long> arrivals(has_jumps ? spec.jump_rate * dt : 1.0);

    PathRecord path;
    path.drift = spec.drift;
    path.level = x;
    double X = 0.0;
    double local = 0.0;
    double area = 0.0;
    for (std::size_t step = 1;; ++step) {
        // left-point rule on [t_{k-1}, t_k)
        area += h(x - local) * dt;
        X += spec.drift * dt + (vol > 0.0 ? vol * gauss(rng) : 0.0);
        if (has_jumps) {
            for (long k = arrivals(rng); k > 0; --k) X += spec.jumps->sample(rng);
        }
        if (X < -x) {
            path.hitting_time = static_cast<double>(step) * dt;
            path.horizon = path.hitting_time;
            break;
        }
        local = std::max(local, -X);
        if (step >= max_steps) throw HorizonExceeded("grid sampler exceeded " + std::to_string(max_steps) + " steps");
    }
    path.area = area;
    return path;
}

unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("LEVYAREA_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& body) {
    const std::size_t count = std::min<std::size_t>(std::max(1u, workers), std::max<std::size_t>(n, 1));
    if (count <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(count);
    for (std::size_t w = 0; w < count; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (std::size_t i = w * n / count; i < (w + 1) * n / count; ++i) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

std::vector<ReplicationSample> sample_replications(const ProcessSpec& spec, const HoldingFunction& h, double x,
                                                   std::size_t n_reps, std::uint64_t seed,
                                                   std::span<const HoldingFunction> aux, unsigned workers) {
    require_exact(spec);
    std::vector<ReplicationSample> out(n_reps);
    ExcursionOptions options;
    options.record_jumps = false;
    parallel_for(n_reps, resolve_workers(workers), [&](std::size_t i) {
        Philox4x32 rng(seed, i);
        PathRecord path = sample_excursion(spec, h, x, rng, aux, options);
        out[i] = ReplicationSample{path.hitting_time, path.area, std::move(path.aux_areas)};
    });
    return out;
}

void write_samples_csv(std::ostream& out, std::span<const ReplicationSample> samples) {
    const std::size_t n_aux = samples.empty() ? 0 : samples.front().aux.size();
    out << "rep,T_x,area";
    for (std::size_t k = 0; k < n_aux; ++k) out << ",aux" << (k + 1);
    out << '\n';
    char buf[64];
    for (std::size_t i = 0; i < samples.size(); ++i) {
        out << i;
        std::snprintf(buf, sizeof buf, ",%.17g,%.17g", samples[i].hitting_time, samples[i].area);
        out << buf;
        for (double a : samples[i].aux) {
            std::snprintf(buf, sizeof buf, ",%.17g", a);
            out << buf;
        }
        out << '\n';
    }
}

EstimateResult summarize(std::span<const ReplicationSample> samples, const EstimateRequest& request) {
    const std::size_t n = samples.size();
    std::vector<double> areas(n), times(n), work(n);
    for (std::size_t i = 0; i < n; ++i) {
        areas[i] = samples[i].area;
        times[i] = samples[i].hitting_time;
    }
    auto stamp = [&](SimEstimate e) {
        e.seed = request.seed;
        return e;
    };
    EstimateResult r;
    r.mean_area = stamp(mean_estimate(areas));
    r.var_area = stamp(variance_estimate(areas));
    r.mean_T = stamp(mean_estimate(times));
    r.var_T = stamp(variance_estimate(times));
    try {
        r.corr_area_T = stamp(correlation_estimate(areas, times));
    } catch (const DegenerateFunction&) {
        r.corr_area_T = stamp(SimEstimate{NAN, NAN, n, 0});
    }
    for (double alpha : request.lst_alphas) {
        for (std::size_t i = 0; i < n; ++i) work[i] = std::exp(-alpha * areas[i]);
        r.lst.emplace_back(alpha, stamp(mean_estimate(work)));
    }
    for (const auto& [alpha, beta] : request.joint_weights) {
        for (std::size_t i = 0; i < n; ++i) work[i] = std::exp(-alpha * areas[i] - beta * times[i]);
        r.joint.emplace_back(std::make_pair(alpha, beta), stamp(mean_estimate(work)));
    }
    const std::size_t n_aux = n == 0 ? 0 : samples.front().aux.size();
    for (std::size_t k = 0; k < n_aux; ++k) {
        for (std::size_t i = 0; i < n; ++i) work[i] = samples[i].aux[k];
        r.aux_mean.push_back(stamp(mean_estimate(work)));
    }
    return r;
}

EstimateResult estimate(const ProcessSpec& spec, const HoldingFunction& h, double x, const EstimateRequest& request) {
    if (request.n_reps < 100) throw DomainError("estimate needs at least 100 replications");
    const auto samples = sample_replications(spec, h, x, request.n_reps, request.seed, request.aux, request.workers);
    return summarize(samples, request);
}

LongRunResult longrun_experiment(const ProcessSpec& spec, const HoldingFunction& h, double x, double horizon,
                                 std::uint64_t seed) {
    require_exact(spec);
    if (!(x > 0.0)) throw DomainError("level must be > 0");
    if (!(horizon > 0.0)) throw DomainError("horizon must be > 0");
    ExcursionOptions options;
    options.record_jumps = false;
    std::vector<double> areas, times;
    double clock = 0.0;
    for (std::uint64_t cycle = 0;; ++cycle) {
        Philox4x32 rng(seed, cycle);
        const PathRecord path = sample_excursion(spec, h, x, rng, {}, options);
        if (clock + path.hitting_time > horizon) break;
        clock += path.hitting_time;
        areas.push_back(path.area);
        times.push_back(path.hitting_time);
    }
    if (areas.size() < 30) {
        throw HorizonTooShort("only " + std::to_string(areas.size()) + " complete cycles before the horizon");
    }
    LongRunResult r;
    r.average = ratio_estimate(areas, times);
    r.average.seed = seed;
    r.cycles = areas.size();
    r.elapsed = clock;
    return r;
}

double regular_variation_index(const HoldingFunction& h) {
    return std::visit(
        [](const auto& k) -> double {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, HoldingFunction::Linear>) {
                return 1.0;
            } else if constexpr (std::is_same_v<T, HoldingFunction::Power>) {
                return k.gamma;
            } else {
                return 0.0;
            }
        },
        h.kind());
}

CltResult clt_experiment(const ProcessSpec& spec, const HoldingFunction& h, double x, double scale,
                         std::size_t n_reps, std::uint64_t seed, unsigned workers) {
    require_exact(spec);
    if (!(scale > 0.0)) throw DomainError("scale must be > 0");
    if (!h.nondecreasing()) throw DomainError("the limit theorem needs a nondecreasing holding function");
    const LaplaceExponent exponent(spec, 2);
    const double level = scale * x;
    const double norm = h(scale) * std::sqrt(scale);
    if (!(norm > 0.0)) throw DegenerateFunction("h(n) must be > 0");
    const double centre = h.integral(level) / exponent.slope_at_zero();

    const auto reps = sample_replications(spec, h, level, n_reps, seed, {}, workers);
    CltResult r;
    r.index = regular_variation_index(h);
    r.samples.reserve(reps.size());
    for (const auto& s : reps) r.samples.push_back((s.area - centre) / norm);
    r.sample_mean = mean_estimate(r.samples);
    r.sample_var = variance_estimate(r.samples);
    r.sample_mean.seed = r.sample_var.seed = seed;
    const double e = 2.0 * r.index + 1.0;
    r.limit_var = exponent.hitting_time_variance_rate() * std::pow(x, e) / e;
    r.ks_distance = ks_distance_normal(r.samples, std::sqrt(r.limit_var));
    return r;
}

} // namespace levyarea
