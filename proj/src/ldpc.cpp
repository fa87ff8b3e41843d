#include "latsim/ldpc.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "latsim/gf2.hpp"
#include "latsim/rng.hpp"

namespace latsim {

namespace {
constexpr double kMsgClip = 30.0;
} // namespace

BinaryParityCheck BinaryParityCheck::from_rows(int n, std::vector<std::vector<int>> row_lists) {
    BinaryParityCheck h;
    h.n = n;
    h.m = static_cast<int>(row_lists.size());
    h.rows = std::move(row_lists);
    h.cols.assign(n, {});
    for (int i = 0; i < h.m; ++i) {
        std::sort(h.rows[i].begin(), h.rows[i].end());
        for (size_t a = 1; a < h.rows[i].size(); ++a) {
            if (h.rows[i][a] == h.rows[i][a - 1])
                throw std::invalid_argument("parity check: repeated index within a row");
        }
        for (int v : h.rows[i]) {
            if (v < 0 || v >= n) throw std::invalid_argument("parity check: variable index out of range");
            h.cols[v].push_back(i);
        }
    }
    return h;
}

long long BinaryParityCheck::edge_count() const {
    long long e = 0;
    for (const auto& r : rows) e += static_cast<long long>(r.size());
    return e;
}

BinaryParityCheck build_regular_ldpc(int n, int k, int col_weight, std::uint64_t seed) {
    const int m = n - k;
    if (k <= 0 || k >= n) throw std::invalid_argument("build_regular_ldpc: need 0 < k < n");
    if (col_weight < 2) throw std::invalid_argument("build_regular_ldpc: column weight must be >= 2");
    if (col_weight > m) throw std::invalid_argument("build_regular_ldpc: column weight exceeds check count");

    Rng rng(seed, 0x9e67);
    std::vector<std::vector<int>> check_vars(m);
    std::vector<std::vector<int>> var_checks(n);
    std::vector<int> check_deg(m, 0);

    // scratch for BFS over the bipartite graph
    std::vector<int> check_dist(m), var_dist(n);

    auto pick = [&](const std::vector<int>& cands) {
        // lowest current degree, seeded random among ties
        int best_deg = check_deg[cands[0]];
        for (int c : cands) best_deg = std::min(best_deg, check_deg[c]);
        int count = 0;
        int chosen = -1;
        for (int c : cands) {
            if (check_deg[c] != best_deg) continue;
            ++count;
            if (rng.uniform_int(0, count) == 0) chosen = c;
        }
        return chosen;
    };

    std::vector<int> cands;
    cands.reserve(m);
    for (int v = 0; v < n; ++v) {
        for (int e = 0; e < col_weight; ++e) {
            if (e == 0) {
                cands.clear();
                for (int c = 0; c < m; ++c) cands.push_back(c);
            } else {
                // progressive edge growth: BFS from v, connect to a check as far
                // from v as possible (unreached first), lowest degree breaking ties
                std::fill(check_dist.begin(), check_dist.end(), -1);
                std::fill(var_dist.begin(), var_dist.end(), -1);
                var_dist[v] = 0;
                std::deque<int> q{v}; // variables frontier
                int max_check_dist = -1;
                while (!q.empty()) {
                    int u = q.front();
                    q.pop_front();
                    for (int c : var_checks[u]) {
                        if (check_dist[c] >= 0) continue;
                        check_dist[c] = var_dist[u] + 1;
                        max_check_dist = std::max(max_check_dist, check_dist[c]);
                        for (int w : check_vars[c]) {
                            if (var_dist[w] >= 0) continue;
                            var_dist[w] = check_dist[c] + 1;
                            q.push_back(w);
                        }
                    }
                }
                cands.clear();
                for (int c = 0; c < m; ++c)
                    if (check_dist[c] < 0) cands.push_back(c);
                if (cands.empty()) {
                    for (int c = 0; c < m; ++c)
                        if (check_dist[c] == max_check_dist) cands.push_back(c);
                }
            }
            int c = pick(cands);
            check_vars[c].push_back(v);
            var_checks[v].push_back(c);
            ++check_deg[c];
        }
    }
    return BinaryParityCheck::from_rows(n, std::move(check_vars));
}

SystematicCode to_systematic(const BinaryParityCheck& h) {
    Gf2Matrix a(h.m, h.n);
    for (int i = 0; i < h.m; ++i)
        for (int v : h.rows[i]) a.set(i, v, true);
    Gf2Rref rr = gf2_rref(std::move(a));
    const int rank = rr.rank;
    const int k = h.n - rank;
    if (k == 0) throw std::invalid_argument("to_systematic: degenerate code (no information positions)");

    std::vector<char> is_pivot(h.n, 0);
    for (int c : rr.pivot_cols) is_pivot[c] = 1;
    std::vector<int> free_cols;
    free_cols.reserve(k);
    for (int c = 0; c < h.n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    SystematicCode sc;
    sc.k = k;
    sc.n = h.n;
    sc.col_perm = free_cols;
    sc.col_perm.insert(sc.col_perm.end(), rr.pivot_cols.begin(), rr.pivot_cols.end());
    sc.pt.assign(rank, std::vector<std::uint8_t>(k, 0));
    // pivot row i fixes parity position i: x_{pivot_i} = sum_j rref[i, free_j] x_{free_j}
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < k; ++j)
            if (rr.mat.get(i, free_cols[j])) sc.pt[i][j] = 1;
    return sc;
}

BinaryParityCheck permute_columns(const BinaryParityCheck& h, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != h.n)
        throw std::invalid_argument("permute_columns: permutation size mismatch");
    std::vector<int> inv(h.n, -1);
    for (int j = 0; j < h.n; ++j) inv[perm[j]] = j;
    std::vector<std::vector<int>> rows(h.m);
    for (int i = 0; i < h.m; ++i) {
        rows[i].reserve(h.rows[i].size());
        for (int v : h.rows[i]) rows[i].push_back(inv[v]);
    }
    return BinaryParityCheck::from_rows(h.n, std::move(rows));
}

std::vector<std::uint8_t> syndrome(const BinaryParityCheck& h, std::span<const std::uint8_t> bits) {
    if (static_cast<int>(bits.size()) != h.n) throw std::invalid_argument("syndrome: length mismatch");
    std::vector<std::uint8_t> s(h.m, 0);
    for (int i = 0; i < h.m; ++i) {
        unsigned acc = 0;
        for (int v : h.rows[i]) acc ^= bits[v];
        s[i] = static_cast<std::uint8_t>(acc & 1u);
    }
    return s;
}

SpaResult spa_decode(const BinaryParityCheck& h, const LlrVector& llr, int max_iter) {
    if (static_cast<int>(llr.values.size()) != h.n)
        throw std::invalid_argument("spa_decode: LLR length mismatch");
    if (max_iter < 1) throw std::invalid_argument("spa_decode: max_iter must be >= 1");

    // flat edge storage in row order
    const long long ne = h.edge_count();
    std::vector<int> edge_var(ne);
    std::vector<long long> row_start(h.m + 1, 0);
    {
        long long e = 0;
        for (int i = 0; i < h.m; ++i) {
            row_start[i] = e;
            for (int v : h.rows[i]) edge_var[e++] = v;
        }
        row_start[h.m] = e;
    }
    std::vector<double> c2v(ne, 0.0);  // check -> variable messages
    std::vector<double> tanh_v(ne);    // tanh(v2c/2) per edge
    std::vector<double> post(h.n);
    std::vector<std::uint8_t> bits(h.n);

    auto clip = [](double x) { return x < -kMsgClip ? -kMsgClip : (x > kMsgClip ? kMsgClip : x); };

    SpaResult res;
    for (int v = 0; v < h.n; ++v) bits[v] = llr.values[v] < 0.0 ? 1 : 0;

    std::vector<double> pre(64), suf(64);
    for (int it = 1; it <= max_iter; ++it) {
        // check-node update with prefix/suffix products (no division)
        for (int i = 0; i < h.m; ++i) {
            const long long a = row_start[i], b = row_start[i + 1];
            const int deg = static_cast<int>(b - a);
            if (deg > static_cast<int>(pre.size())) {
                pre.resize(deg);
                suf.resize(deg);
            }
            for (int j = 0; j < deg; ++j) {
                const int v = edge_var[a + j];
                const double v2c = clip(it == 1 ? llr.values[v] : post[v] - c2v[a + j]);
                tanh_v[a + j] = std::tanh(0.5 * v2c);
            }
            double acc = 1.0;
            for (int j = 0; j < deg; ++j) {
                pre[j] = acc;
                acc *= tanh_v[a + j];
            }
            acc = 1.0;
            for (int j = deg - 1; j >= 0; --j) {
                suf[j] = acc;
                acc *= tanh_v[a + j];
            }
            for (int j = 0; j < deg; ++j) {
                double t = pre[j] * suf[j];
                if (t > 0.999999999999) t = 0.999999999999;
                if (t < -0.999999999999) t = -0.999999999999;
                c2v[a + j] = 2.0 * std::atanh(t);
            }
        }
        // variable-node update
        for (int v = 0; v < h.n; ++v) post[v] = llr.values[v];
        for (int i = 0; i < h.m; ++i)
            for (long long e = row_start[i]; e < row_start[i + 1]; ++e) post[edge_var[e]] += c2v[e];
        for (int v = 0; v < h.n; ++v) bits[v] = post[v] < 0.0 ? 1 : 0;

        res.iterations_used = it;
        bool ok = true;
        for (int i = 0; i < h.m && ok; ++i) {
            unsigned acc = 0;
            for (long long e = row_start[i]; e < row_start[i + 1]; ++e) acc ^= bits[edge_var[e]];
            ok = (acc & 1u) == 0;
        }
        if (ok) {
            res.converged = true;
            break;
        }
    }
    res.bits = std::move(bits);
    return res;
}

void write_alist(const BinaryParityCheck& h, std::ostream& os) {
    int max_col = 0, max_row = 0;
    for (const auto& c : h.cols) max_col = std::max(max_col, static_cast<int>(c.size()));
    for (const auto& r : h.rows) max_row = std::max(max_row, static_cast<int>(r.size()));
    os << h.n << ' ' << h.m << '\n';
    os << max_col << ' ' << max_row << '\n';
    for (int v = 0; v < h.n; ++v) os << h.cols[v].size() << (v + 1 < h.n ? ' ' : '\n');
    for (int i = 0; i < h.m; ++i) os << h.rows[i].size() << (i + 1 < h.m ? ' ' : '\n');
    for (int v = 0; v < h.n; ++v) {
        for (int j = 0; j < max_col; ++j) {
            long long val = j < static_cast<int>(h.cols[v].size()) ? h.cols[v][j] + 1 : 0;
            os << val << (j + 1 < max_col ? ' ' : '\n');
        }
    }
    for (int i = 0; i < h.m; ++i) {
        for (int j = 0; j < max_row; ++j) {
            long long val = j < static_cast<int>(h.rows[i].size()) ? h.rows[i][j] + 1 : 0;
            os << val << (j + 1 < max_row ? ' ' : '\n');
        }
    }
}

void write_alist_file(const BinaryParityCheck& h, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    write_alist(h, f);
    if (!f) throw std::runtime_error("write failed: " + path);
}

BinaryParityCheck read_alist(std::istream& is) {
    int n, m, max_col, max_row;
    if (!(is >> n >> m >> max_col >> max_row)) throw std::runtime_error("alist: bad header");
    if (n <= 0 || m <= 0) throw std::runtime_error("alist: nonpositive dimensions");
    std::vector<int> col_deg(n), row_deg(m);
    for (int v = 0; v < n; ++v)
        if (!(is >> col_deg[v])) throw std::runtime_error("alist: bad column degrees");
    for (int i = 0; i < m; ++i)
        if (!(is >> row_deg[i])) throw std::runtime_error("alist: bad row degrees");
    // column lists (1-based, zero padded) -- used for validation only
    std::vector<std::vector<int>> cols(n);
    for (int v = 0; v < n; ++v) {
        for (int j = 0; j < max_col; ++j) {
            long long idx;
            if (!(is >> idx)) throw std::runtime_error("alist: truncated column list");
            if (idx == 0) continue;
            if (idx < 1 || idx > m) throw std::runtime_error("alist: check index out of range");
            cols[v].push_back(static_cast<int>(idx - 1));
        }
        if (static_cast<int>(cols[v].size()) != col_deg[v])
            throw std::runtime_error("alist: column degree mismatch");
    }
    std::vector<std::vector<int>> rows(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < max_row; ++j) {
            long long idx;
            if (!(is >> idx)) throw std::runtime_error("alist: truncated row list");
            if (idx == 0) continue;
            if (idx < 1 || idx > n) throw std::runtime_error("alist: variable index out of range");
            rows[i].push_back(static_cast<int>(idx - 1));
        }
        if (static_cast<int>(rows[i].size()) != row_deg[i])
            throw std::runtime_error("alist: row degree mismatch");
    }
    BinaryParityCheck h = BinaryParityCheck::from_rows(n, std::move(rows));
    for (int v = 0; v < n; ++v) {
        std::sort(cols[v].begin(), cols[v].end());
        if (cols[v] != h.cols[v]) throw std::runtime_error("alist: row/column lists inconsistent");
    }
    return h;
}

BinaryParityCheck read_alist_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open for reading: " + path);
    return read_alist(f);
}

} // namespace latsim
