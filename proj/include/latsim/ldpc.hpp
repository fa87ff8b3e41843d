#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace latsim {

// Sparse GF(2) parity-check matrix as a bipartite adjacency (checks x variables).
struct BinaryParityCheck {
    int n = 0; // variables (columns)
    int m = 0; // checks (rows)
    std::vector<std::vector<int>> rows; // per check: sorted variable indices
    std::vector<std::vector<int>> cols; // per variable: sorted check indices

    static BinaryParityCheck from_rows(int n, std::vector<std::vector<int>> row_lists);
    long long edge_count() const;
};

// Systematic generator data: G = [I_k | P] for the column-permuted code.
// col_perm[j] is the original H column sitting at permuted position j
// (information positions first, parity positions last).
struct SystematicCode {
    int k = 0;
    int n = 0;
    // pt[i][j] = P_{j+1, i+1} in row-vector convention: parity coordinate k+i
    // receives sum_j pt[i][j] * b_j.  Stored parity-major for contiguous dot
    // products during encoding.
    std::vector<std::vector<std::uint8_t>> pt; // (n-k) x k
    std::vector<int> col_perm;

    bool p(int j, int i) const { return pt[i][j] != 0; } // j in [0,k), i in [0,n-k)
};

struct LlrVector {
    std::vector<double> values; // log Pr{c=-1|y} - log Pr{c=+1|y}; positive favors bit 0
};

struct SpaResult {
    std::vector<std::uint8_t> bits;
    bool converged = false;
    int iterations_used = 0;
};

// Seeded PEG-style near-regular construction with m = n-k rows.
BinaryParityCheck build_regular_ldpc(int n, int k, int col_weight, std::uint64_t seed);

// Gaussian elimination to [I_k | P] with column permutation.  Dependent rows
// are dropped (k grows accordingly); throws only when k would be zero.
SystematicCode to_systematic(const BinaryParityCheck& h);

// H with columns reordered by perm (new column j = old column perm[j]).
BinaryParityCheck permute_columns(const BinaryParityCheck& h, const std::vector<int>& perm);

std::vector<std::uint8_t> syndrome(const BinaryParityCheck& h, std::span<const std::uint8_t> bits);

// Log-domain sum-product with the tanh rule, messages clipped to +-30,
// early exit on zero syndrome.
SpaResult spa_decode(const BinaryParityCheck& h, const LlrVector& llr, int max_iter = 50);

// "alist" text interchange format
void write_alist(const BinaryParityCheck& h, std::ostream& os);
void write_alist_file(const BinaryParityCheck& h, const std::string& path);
BinaryParityCheck read_alist(std::istream& is);
BinaryParityCheck read_alist_file(const std::string& path);

} // namespace latsim
