#pragma once

#include <cstdint>

#include "latsim/shaping.hpp"

namespace latsim {

// Resolution index set for the one-way scheme; encoder and decoder share it
// as part of the code configuration.
struct OneWayPlan {
    std::vector<int> x_set;        // sorted indices carrying resolution data
    std::vector<std::uint8_t> in_x; // membership mask, length n
    double rho = 0.5;

    static OneWayPlan random_plan(int n, double rho, std::uint64_t seed);
};

// Doubly-nested constellation sizes for the two-way scheme.
struct TwoWayPlan {
    IntVec l_r;          // resolution constellation sizes, divide L elementwise
    long long m1 = 1, m2 = 1;

    static TwoWayPlan uniform(int n, long long l_r, long long m1 = 1, long long m2 = 1);
    void validate(const ShapingSpec& spec) const;
};

// centered residue in [-L/2, L/2)
long long smod(long long x, long long l);
// remap a centered residue to [0, L)
long long smod2mod(long long x, long long l);

// unique b in [0, l_r) with m*b = v (mod l_r); requires gcd(m, l_r) = 1
long long recover_delta(long long v, long long m, long long l_r);

std::pair<IntVec, IntVec> split_oneway(const IntVec& b, const OneWayPlan& plan);

struct Decomposition {
    IntVec bprime;    // shaped full-rate information
    IntVec br_prime;  // shaped resolution information
    IntVec bv_prime;  // vestigial information (not power constrained)
};

// One-way: b' = b - sL, b_r' = b_r - s_r L (same shaping applied to the
// resolution component), b_v' = b' - b_r'.  encode(b') = encode(b_r') (+)
// encode(b_v') exactly.
Decomposition pc_decompose_oneway(const LatticeBasis& basis, const IntVec& b,
                                  const ShapingSpec& spec, const OneWayPlan& plan);

std::pair<IntVec, IntVec> split_twoway(const IntVec& b, const TwoWayPlan& plan,
                                       const ShapingSpec& spec);

// Two-way: b_r' built from the centered (hypercube) or plain (nested) residues
// modulo L^(r) and shaped with the L^(r) sizes; b_v' = b' - b^(r) where b^(r)
// is the unshaped plain residue.  encode(b') = encode(b^(r)) (+) encode(b_v').
Decomposition pc_decompose_twoway(const LatticeBasis& basis, const IntVec& b,
                                  const ShapingSpec& spec, const TwoWayPlan& plan);

// shaping of a two-way resolution vector with the L^(r) sizes (relay path)
IntVec shape_resolution_twoway(const LatticeBasis& basis, const IntVec& b_r,
                               const ShapingSpec& spec, const TwoWayPlan& plan);

} // namespace latsim
