#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "levyarea/exponent.hpp"
#include "levyarea/holding.hpp"
#include "levyarea/process.hpp"
#include "levyarea/rng.hpp"
#include "levyarea/stats.hpp"

namespace levyarea {

/// One excursion of X from 0 down to -x, sampled exactly.
///
/// Between jumps X moves linearly with slope `drift` < 0, so every
/// quantity below is piecewise linear in t and all integrals are exact.
struct PathRecord {
    double drift = 0.0;
    double level = 0.0;
    std::vector<double> jump_times;
    std::vector<double> jump_sizes;
    /// T_x: first time X drops below -level.
    double hitting_time = 0.0;
    /// Epoch of the first jump after T_x (infinity without jumps);
    /// net_input and local_time are valid on [0, horizon].
    double horizon = 0.0;
    /// A_x by time integration of h(x - L_t).
    double area = 0.0;
    std::vector<double> aux_areas;

    double net_input(double t) const;
    /// L_t = -min(0, inf_{s <= t} X_s).
    double local_time(double t) const;
};

struct ExcursionOptions {
    bool record_jumps = true;
    std::size_t max_events = 50'000'000;
};

/// Sample one excursion of a finite-activity spec (sigma2 == 0).
/// Throws UnsupportedProcess for Brownian specs and HorizonExceeded past max_events.
PathRecord sample_excursion(const ProcessSpec& spec, const HoldingFunction& h, double x, Philox4x32& rng,
                            std::span<const HoldingFunction> aux = {}, const ExcursionOptions& options = {});

/// A_x recomputed in Stieltjes form, int_{(0,x]} h(x - y) T(dy), from the jump
/// record alone: continuous part plus one atom per ladder busy period.
double stieltjes_area(const PathRecord& path, const HoldingFunction& h);

/// Euler sampler for specs with a Brownian part. First-passage times carry
/// an O(sqrt(dt)) upward bias; use only for convergence trends.
PathRecord grid_sample(const ProcessSpec& spec, const HoldingFunction& h, double x, double dt, Philox4x32& rng,
                       std::size_t max_steps = 100'000'000);

/// Worker count: `requested` if nonzero, else LEVYAREA_THREADS if set and
/// nonzero, else the hardware concurrency.
unsigned resolve_workers(unsigned requested);

/// Runs body(i) for i in [0, n) on `workers` threads, static partition.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& body);

struct ReplicationSample {
    double hitting_time = 0.0;
    double area = 0.0;
    std::vector<double> aux;
};

/// Independent excursions; replication i draws from Philox4x32(seed, i).
std::vector<ReplicationSample> sample_replications(const ProcessSpec& spec, const HoldingFunction& h, double x,
                                                   std::size_t n_reps, std::uint64_t seed,
                                                   std::span<const HoldingFunction> aux = {}, unsigned workers = 0);

/// Writes `rep,T_x,area[,aux1,...]` with a header row, LF endings, 17 significant digits.
void write_samples_csv(std::ostream& out, std::span<const ReplicationSample> samples);

struct EstimateRequest {
    std::size_t n_reps = 10000;
    std::uint64_t seed = 1;
    std::vector<double> lst_alphas;
    /// (alpha, beta) pairs for E exp(-alpha A_x - beta T_x).
    std::vector<std::pair<double, double>> joint_weights;
    std::vector<HoldingFunction> aux;
    unsigned workers = 0;
};

struct EstimateResult {
    SimEstimate mean_area;
    SimEstimate var_area;
    SimEstimate mean_T;
    SimEstimate var_T;
    SimEstimate corr_area_T;
    std::vector<std::pair<double, SimEstimate>> lst;
    std::vector<std::pair<std::pair<double, double>, SimEstimate>> joint;
    std::vector<SimEstimate> aux_mean;
};

EstimateResult summarize(std::span<const ReplicationSample> samples, const EstimateRequest& request);

EstimateResult estimate(const ProcessSpec& spec, const HoldingFunction& h, double x, const EstimateRequest& request);

struct LongRunResult {
    SimEstimate average;
    std::size_t cycles = 0;
    double elapsed = 0.0;
};

/// Time average of h(W^x_t - W_t) over the complete regenerative cycles in
/// [0, horizon]; the final partial cycle is discarded. Cycle k uses stream k.
/// Throws HorizonTooShort if fewer than 30 cycles complete.
LongRunResult longrun_experiment(const ProcessSpec& spec, const HoldingFunction& h, double x, double horizon,
                                 std::uint64_t seed);

struct CltResult {
    std::vector<double> samples;
    SimEstimate sample_mean;
    SimEstimate sample_var;
    double limit_var = 0.0;
    double ks_distance = 0.0;
    double index = 0.0;
};

/// Regular-variation index of a catalog holding function (piecewise linear: 0).
double regular_variation_index(const HoldingFunction& h);

/// Samples of (A_{n x} - E A_{n x}) / (h(n) sqrt(n)) with n = scale, compared
/// with the centred normal of variance Var T_1 x^{2a+1} / (2a+1).
CltResult clt_experiment(const ProcessSpec& spec, const HoldingFunction& h, double x, double scale,
                         std::size_t n_reps, std::uint64_t seed, unsigned workers = 0);

} // namespace levyarea
