#pragma once

#include <cstdint>
#include <string>

#include "latsim/lattice.hpp"

namespace latsim {

enum class ShapingMethod { hypercube, nested };

std::string to_string(ShapingMethod m);
ShapingMethod shaping_method_from_string(const std::string& s);

struct ShapingSpec {
    IntVec L;                                      // n positive even constellation sizes
    ShapingMethod method = ShapingMethod::hypercube;
    int M = 5;                                     // nested search width; 0 = exhaustive
    void validate(int n) const;
};

// uniform L, or a k/(n-k) split (systematic positions first)
ShapingSpec make_spec(int n, long long L, ShapingMethod method, int M = 5);
ShapingSpec make_spec_split(int n, int k, long long L_info, long long L_parity, ShapingMethod method,
                            int M = 5);

struct ShapedWord {
    LatticeWord xprime; // shaped codeword, scaled/translated form
    IntVec s;           // translation multiples
    IntVec bprime;      // b - s.L, encode(bprime) == xprime
};

// throws std::domain_error when b lies outside the method's constellation
void require_in_constellation(const IntVec& b, const ShapingSpec& spec);

ShapedWord hypercube_shape(const LatticeBasis& basis, const IntVec& b, const ShapingSpec& spec);
ShapedWord nested_shape(const LatticeBasis& basis, const IntVec& b, const ShapingSpec& spec);
ShapedWord shape(const LatticeBasis& basis, const IntVec& b, const ShapingSpec& spec);

// Recovers the original constellation point from a shaped codeword:
// centered residues for hypercube, plain residues for nested.
IntVec mod_recover(const LatticeBasis& basis, const LatticeWord& xprime, const ShapingSpec& spec);

double rate_hypercube(const ShapingSpec& spec, int k, int n);
double rate_nested(const ShapingSpec& spec, int n);

struct ShapingStats {
    double p_avg = 0.0;    // average energy per dimension of shaped codewords
    double g_norm = 0.0;   // normalized second moment P / vol^(2/n)
    double gain_db = 0.0;  // vs. an equal-volume cube
    double loss_db = 0.0;  // vs. an n-sphere (NaN for odd n)
    long long samples = 0;
    std::uint64_t seed = 0;
};

// Monte-Carlo over uniform b from the method's constellation.  Sampling is
// split into fixed chunks with per-sample seeded streams, so the result does
// not depend on the number of threads.
ShapingStats estimate_shaping_stats(const LatticeBasis& basis, const ShapingSpec& spec,
                                    long long samples, std::uint64_t seed, int threads = 0);

// 10*log10 of the shaping gain of an n-sphere over a cube (n even)
double sphere_gain_db(int n);

double vnr(const LatticeBasis& basis, double sigma2);

// mean ||e||^2 / n over sample error vectors
double second_moment_estimate(const std::vector<std::vector<double>>& errors);

void write_shaping_csv_header(std::ostream& os);
void write_shaping_csv_row(std::ostream& os, int n, int k, const std::string& l_label,
                           const ShapingSpec& spec, const ShapingStats& st);

} // namespace latsim
