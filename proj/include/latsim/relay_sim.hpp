#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "latsim/decomposition.hpp"
#include "latsim/rng.hpp"

namespace latsim {

enum class Topology { one_way, two_way };

// What variance is handed to the lattice decoder at each stage.
//   paper:             N / (sqrt(P) h)            (scale passed verbatim)
//   with_interference: (N + interference) / (sqrt(P) h)^2
enum class DecoderNoiseMode { paper, with_interference };

struct ChannelConfig {
    Topology topology = Topology::one_way;

    // one-way geometry (d_sd fixed at 1 by the path-loss normalization)
    double d_sr = 0.9, d_rd = 0.1, d_sd = 1.0;
    double alpha1 = 1.0, alpha2 = 2.0;
    double n_r = 1.0, n_d = 1.0; // noise variances, linear

    // two-way geometry
    double d_s1r = 0.5, d_s2r = 0.5, d_s1s2 = 1.0;
    double alpha_s1r = 1.0, alpha_s2r = 5.0;
    double n_s1 = 1.0, n_s2 = 1.0;

    int blocks = 10;  // T, blocks per trial (source silent at T+1, relay at 1)
    int trials = 10;  // independent T-block transmissions per sweep point
    int max_iter = 50;
    std::uint64_t seed = 1;
    DecoderNoiseMode noise_mode = DecoderNoiseMode::paper;

    // relay power tie: P_R E{x_R^2} = relay_power_ratio * (source sum energy)
    double relay_power_ratio = 1.0;
    int threads = 0; // 0 = library default; caps workers, never changes results

    double h_sr() const { return std::pow(d_sr, -alpha1); }
    double h_rd() const { return std::pow(d_rd, -alpha2); }
    double h_sd() const { return 1.0; }
    double h_s1r() const { return std::pow(d_s1r, -alpha_s1r); }
    double h_s2r() const { return std::pow(d_s2r, -alpha_s2r); }
    double h_s1s2() const { return 1.0; }
};

struct SerRecord {
    double sum_power_db = 0.0;
    long long trials = 0;
    long long symbols = 0;
    long long symbol_errors = 0;
    double ser = 0.0;
    // diagnostic symbol-error counts per decoding stage:
    // one-way: relay info / destination resolution word / vestigial word
    // two-way: relay sum word / resolution info (both sides) / vestigial word (both sides)
    long long stage1_err = 0, stage2_err = 0, stage3_err = 0;
};

struct PowerEstimate {
    double ex_s2 = 0.0; // E{x_S^2} per dimension
    double ex_r2 = 0.0; // E{x_R^2} per dimension
};

struct TwoWayPowerEstimate {
    double ex_s1 = 0.0, ex_s2 = 0.0, ex_r = 0.0;
};

// Closed-form estimates for uniform L, hypercube shaping, |X| = x_fraction*n.
PowerEstimate power_estimates_oneway(long long L, int n, int k, double x_fraction = 0.5);

// Sampled estimates of the actually transmitted energies.
PowerEstimate power_estimates_oneway_mc(const LatticeBasis& basis, const ShapingSpec& spec,
                                        const OneWayPlan& plan, long long samples,
                                        std::uint64_t seed);
TwoWayPowerEstimate power_estimates_twoway_mc(const LatticeBasis& basis, const ShapingSpec& spec,
                                              const TwoWayPlan& plan, long long samples,
                                              std::uint64_t seed);

// Decode-and-forward inner bound, bits/dimension.
double df_bound_oneway(const ChannelConfig& cfg, double p_s, double p_r, const PowerEstimate& est);
// Minimum P_S E{x_S^2} + P_R E{x_R^2} so that the bound reaches `rate`, in dB.
double df_min_sum_power_db_oneway(const ChannelConfig& cfg, double rate, const PowerEstimate& est);

// Two-way bound (R1, R2) at the given powers.
std::pair<double, double> df_bound_twoway(const ChannelConfig& cfg, double p_s1, double p_s2,
                                          double p_r, const TwoWayPowerEstimate& est);
// Minimum total power (under the configured source/relay ties) with
// min(R1, R2) >= rate, in dB.
double df_min_sum_power_db_twoway(const ChannelConfig& cfg, double rate,
                                  const TwoWayPowerEstimate& est);

std::vector<double> awgn(std::span<const double> x, double sigma2, Rng& rng);

// Monte-Carlo sweep over sum transmit power (dB).  The parallel variants use
// OpenMP across trials; per-trial seeded streams make results independent of
// the worker count.  The *_serial functions are the reference implementation.
std::vector<SerRecord> simulate_oneway(const LatticeBasis& basis, const ShapingSpec& spec,
                                       const OneWayPlan& plan, const ChannelConfig& cfg,
                                       const PowerEstimate& est,
                                       std::span<const double> sum_power_db);
std::vector<SerRecord> simulate_oneway_serial(const LatticeBasis& basis, const ShapingSpec& spec,
                                              const OneWayPlan& plan, const ChannelConfig& cfg,
                                              const PowerEstimate& est,
                                              std::span<const double> sum_power_db);
std::vector<SerRecord> simulate_twoway(const LatticeBasis& basis, const ShapingSpec& spec,
                                       const TwoWayPlan& plan, const ChannelConfig& cfg,
                                       const TwoWayPowerEstimate& est,
                                       std::span<const double> sum_power_db);
std::vector<SerRecord> simulate_twoway_serial(const LatticeBasis& basis, const ShapingSpec& spec,
                                              const TwoWayPlan& plan, const ChannelConfig& cfg,
                                              const TwoWayPowerEstimate& est,
                                              std::span<const double> sum_power_db);

void write_ser_csv_header(std::ostream& os);
void write_ser_csv_row(std::ostream& os, const std::string& topology, int n, int k,
                       const std::string& l_label, const ShapingSpec& spec, std::uint64_t seed,
                       const SerRecord& rec);

} // namespace latsim
