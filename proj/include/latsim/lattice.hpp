#pragma once

#include <span>
#include <vector>

#include "latsim/ldpc.hpp"

namespace latsim {

using IntVec = std::vector<long long>; // information vectors b

// Integer point of the translated/scaled lattice: all coordinates odd.
struct LatticeWord {
    IntVec x;
};

// Construction-A basis in systematic coordinate order.  The underlying code
// is carried both as its generator data (k, n, P) and as the column-permuted
// parity-check adjacency used by the iterative decoder.
//
//   G = [[I_k, P], [0, 2 I_{n-k}]],  vol = 2^(n-k)
//   codewords: X = 2 b G - (1,...,1)
class LatticeBasis {
  public:
    static LatticeBasis from_parity_check(const BinaryParityCheck& h);

    int n() const { return code_.n; }
    int k() const { return code_.k; }
    const SystematicCode& code() const { return code_; }
    const BinaryParityCheck& h_perm() const { return h_perm_; }

    // parity accumulator: t[i] = sum_j P_{j,i} b_j for i in [0, n-k)
    void parity_dot(std::span<const long long> b_sys, std::span<long long> t) const;

  private:
    SystematicCode code_;
    BinaryParityCheck h_perm_;
};

LatticeWord encode(const LatticeBasis& basis, const IntVec& b);

// lattice addition: x1 + x2 + (1,...,1)
LatticeWord lattice_add(const LatticeWord& a, const LatticeWord& b);

bool is_member(const LatticeBasis& basis, const IntVec& x);

struct DecodeResult {
    LatticeWord word;
    bool converged = false;
};

// Iterative decoding: per-coordinate LLR from the residual metric, SPA on the
// underlying code, then integer part recovery z = round((y - c)/4).
DecodeResult decode(const LatticeBasis& basis, std::span<const double> y, double sigma2,
                    int max_iter = 50);
DecodeResult decode(const LatticeBasis& basis, std::span<const double> y,
                    std::span<const double> sigma2_per_coord, int max_iter = 50);

LlrVector lattice_llr(std::span<const double> y, std::span<const double> sigma2_per_coord);

struct UnshapeResult {
    IntVec b;
    bool reliable = false; // true iff the input was an exact lattice word
};

// Inverse of encode: b = round((x + 1) (2G)^{-1}); exact on members.
UnshapeResult unshape_info(const LatticeBasis& basis, const IntVec& x);

} // namespace latsim
