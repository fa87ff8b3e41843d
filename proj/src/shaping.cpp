#include "latsim/shaping.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "latsim/rng.hpp"

namespace latsim {

std::string to_string(ShapingMethod m) {
    return m == ShapingMethod::hypercube ? "hypercube" : "nested";
}

ShapingMethod shaping_method_from_string(const std::string& s) {
    if (s == "hypercube") return ShapingMethod::hypercube;
    if (s == "nested") return ShapingMethod::nested;
    throw std::invalid_argument("unknown shaping method: " + s);
}

void ShapingSpec::validate(int n) const {
    if (static_cast<int>(L.size()) != n) throw std::invalid_argument("shaping spec: L size mismatch");
    for (long long l : L)
        if (l < 2 || l % 2 != 0) throw std::invalid_argument("shaping spec: L entries must be even and >= 2");
    if (M < 0) throw std::invalid_argument("shaping spec: M must be >= 1 (or 0 for exhaustive)");
}

ShapingSpec make_spec(int n, long long L, ShapingMethod method, int M) {
    ShapingSpec s;
    s.L.assign(n, L);
    s.method = method;
    s.M = M;
    return s;
}

ShapingSpec make_spec_split(int n, int k, long long L_info, long long L_parity, ShapingMethod method,
                            int M) {
    ShapingSpec s;
    s.L.resize(n);
    for (int i = 0; i < n; ++i) s.L[i] = i < k ? L_info : L_parity;
    s.method = method;
    s.M = M;
    return s;
}

void require_in_constellation(const IntVec& b, const ShapingSpec& spec) {
    for (size_t i = 0; i < b.size(); ++i) {
        const long long l = spec.L[i];
        const bool ok = spec.method == ShapingMethod::hypercube
                            ? (b[i] >= -l / 2 && b[i] <= l / 2 - 1)
                            : (b[i] >= 0 && b[i] < l);
        if (!ok) throw std::domain_error("shape: b outside the constellation");
    }
}

ShapedWord hypercube_shape(const LatticeBasis& basis, const IntVec& b, const ShapingSpec& spec) {
    const int n = basis.n(), k = basis.k();
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("hypercube_shape: length mismatch");
    spec.validate(n);
    require_in_constellation(b, spec);

    ShapedWord w;
    w.s.assign(n, 0);
    w.bprime = b;
    std::vector<long long> t(n - k);
    basis.parity_dot(std::span<const long long>(b.data(), k), t);
    for (int i = 0; i < n - k; ++i) {
        // s_i = round((b_i + t_i/2) / L_i), exactly: floor((2 b_i + t_i + L_i) / (2 L_i))
        const long long l = spec.L[k + i];
        w.s[k + i] = floor_div(2 * b[k + i] + t[i] + l, 2 * l);
        w.bprime[k + i] = b[k + i] - w.s[k + i] * l;
    }
    w.xprime = encode(basis, w.bprime);
    return w;
}

namespace {

// one node per candidate per row; parents index the previous row's nodes
struct SearchNode {
    double score;
    long long s;
    int parent;
};

} // namespace

ShapedWord nested_shape(const LatticeBasis& basis, const IntVec& b, const ShapingSpec& spec) {
    const int n = basis.n(), k = basis.k();
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("nested_shape: length mismatch");
    spec.validate(n);
    require_in_constellation(b, spec);
    if (spec.M == 0 && n > 16)
        throw std::invalid_argument("nested_shape: exhaustive search only supported for n <= 16");

    const std::size_t M = spec.M == 0 ? static_cast<std::size_t>(-1) : static_cast<std::size_t>(spec.M);

    // Breadth-limited search over rows of G.  A candidate at row i is a prefix
    // (s_1..s_i) scored by the energy of the first i shaped coordinates.  Per
    // row, s ranges over the two integers bracketing the per-coordinate
    // minimizer widened by one on each side.  Ties keep the lexicographically
    // smaller prefix: candidates are generated in lex order and the sort is
    // stable.
    auto prune = [&](std::vector<SearchNode>& v) {
        std::stable_sort(v.begin(), v.end(),
                         [](const SearchNode& a, const SearchNode& c) { return a.score < c.score; });
        if (v.size() > M) v.resize(M);
    };

    // phase 1: systematic rows; parents chain through sys_levels
    std::vector<std::vector<SearchNode>> sys_levels(k);
    {
        std::vector<SearchNode> cur{{0.0, 0, -1}}, next;
        for (int i = 0; i < k; ++i) {
            next.clear();
            const long long l = spec.L[i];
            for (int ci = 0; ci < static_cast<int>(cur.size()); ++ci) {
                const long long s_lo = floor_div(b[i], l);
                for (long long s = s_lo - 1; s <= s_lo + 2; ++s) {
                    const long long xi = b[i] - s * l;
                    next.push_back(
                        {cur[ci].score + static_cast<double>(xi) * static_cast<double>(xi), s, ci});
                }
            }
            prune(next);
            sys_levels[i] = next;
            cur = next;
        }
    }

    // materialize surviving systematic prefixes; parity rows only read them
    std::vector<std::vector<long long>> sys_bp(sys_levels[k - 1].size(), std::vector<long long>(k));
    std::vector<double> sys_score(sys_bp.size());
    for (std::size_t a = 0; a < sys_bp.size(); ++a) {
        int node = static_cast<int>(a);
        sys_score[a] = sys_levels[k - 1][a].score;
        for (int row = k - 1; row >= 0; --row) {
            sys_bp[a][row] = b[row] - sys_levels[row][node].s * spec.L[row];
            node = sys_levels[row][node].parent;
        }
    }

    // phase 2: parity rows; candidate state = (sys index, parity s suffix)
    std::vector<std::vector<SearchNode>> par_levels(n - k);
    std::vector<int> sys_of, sys_of_next;
    std::vector<SearchNode> cur, next;
    for (std::size_t a = 0; a < sys_bp.size(); ++a) {
        cur.push_back({sys_score[a], 0, static_cast<int>(a)}); // parent = sys index at entry
        sys_of.push_back(static_cast<int>(a));
    }
    for (int i = k; i < n; ++i) {
        next.clear();
        const long long l = spec.L[i];
        const std::uint8_t* row = basis.code().pt[i - k].data();
        for (int ci = 0; ci < static_cast<int>(cur.size()); ++ci) {
            const std::vector<long long>& bp = sys_bp[sys_of[ci]];
            long long t = 0;
            for (int j = 0; j < k; ++j) t += row[j] ? bp[j] : 0;
            const long long s_lo = floor_div(2 * b[i] + t, 2 * l);
            for (long long s = s_lo - 1; s <= s_lo + 2; ++s) {
                const long long xi = 2 * (b[i] - s * l) + t;
                next.push_back({cur[ci].score + static_cast<double>(xi) * static_cast<double>(xi), s, ci});
            }
        }
        prune(next);
        // parents of level i index the survivors of level i-1 (the sys survivor
        // list when i == k), which is what the backtrack below walks
        par_levels[i - k] = next;
        sys_of_next.resize(next.size());
        for (std::size_t a = 0; a < next.size(); ++a) sys_of_next[a] = sys_of[next[a].parent];
        cur = next;
        sys_of = sys_of_next;
    }

    // pick the winner (prune sorted each level; index 0 is best)
    ShapedWord w;
    w.s.assign(n, 0);
    w.bprime.resize(n);
    int sys_idx;
    if (n == k) {
        sys_idx = 0; // best systematic survivor
    } else {
        int node = 0;
        for (int i = n - 1; i >= k; --i) {
            w.s[i] = par_levels[i - k][node].s;
            node = par_levels[i - k][node].parent;
        }
        sys_idx = node; // parent of the first parity row indexes sys survivors
    }
    const std::vector<long long>& bp_sys = sys_bp[sys_idx];
    for (int j = 0; j < k; ++j) {
        w.bprime[j] = bp_sys[j];
        w.s[j] = (b[j] - bp_sys[j]) / spec.L[j];
    }
    for (int i = k; i < n; ++i) w.bprime[i] = b[i] - w.s[i] * spec.L[i];
    w.xprime = encode(basis, w.bprime);
    return w;
}

ShapedWord shape(const LatticeBasis& basis, const IntVec& b, const ShapingSpec& spec) {
    return spec.method == ShapingMethod::hypercube ? hypercube_shape(basis, b, spec)
                                                   : nested_shape(basis, b, spec);
}

IntVec mod_recover(const LatticeBasis& basis, const LatticeWord& xprime, const ShapingSpec& spec) {
    const UnshapeResult u = unshape_info(basis, xprime.x);
    IntVec r(u.b.size());
    for (size_t i = 0; i < u.b.size(); ++i) {
        const long long l = spec.L[i];
        long long v = euclid_mod(u.b[i], l);
        if (spec.method == ShapingMethod::hypercube && v >= l / 2) v -= l;
        r[i] = v;
    }
    return r;
}

double rate_hypercube(const ShapingSpec& spec, int k, int n) {
    double r = 0.0;
    for (int i = 0; i < n; ++i) {
        const double l = static_cast<double>(spec.L[i]);
        r += i < k ? std::log2(l) : std::log2((4.0 * l + 2.0) / 4.0);
    }
    return r / n;
}

double rate_nested(const ShapingSpec& spec, int n) {
    double r = 0.0;
    for (int i = 0; i < n; ++i) r += std::log2(static_cast<double>(spec.L[i]));
    return r / n;
}

double sphere_gain_db(int n) {
    if (n % 2 != 0) return std::numeric_limits<double>::quiet_NaN();
    // G(sphere) = ((n/2)!)^(2/n) / (pi (n+2))
    const double g = std::exp(std::lgamma(n / 2.0 + 1.0) * 2.0 / n) / (M_PI * (n + 2));
    return 10.0 * std::log10(1.0 / (12.0 * g));
}

ShapingStats estimate_shaping_stats(const LatticeBasis& basis, const ShapingSpec& spec,
                                    long long samples, std::uint64_t seed, int threads) {
    const int n = basis.n(), k = basis.k();
    spec.validate(n);
    if (samples < 1) throw std::invalid_argument("estimate_shaping_stats: samples must be >= 1");

    const long long chunk = 256;
    const long long nchunks = (samples + chunk - 1) / chunk;
    std::vector<double> partial(nchunks, 0.0);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
    for (long long c = 0; c < nchunks; ++c) {
        double acc = 0.0;
        const long long lo = c * chunk, hi = std::min(samples, lo + chunk);
        IntVec b(n);
        for (long long s = lo; s < hi; ++s) {
            Rng rng(seed, 0x5a9e, static_cast<std::uint64_t>(s));
            for (int i = 0; i < n; ++i) {
                const long long l = spec.L[i];
                b[i] = spec.method == ShapingMethod::hypercube ? rng.uniform_int(-l / 2, l / 2)
                                                               : rng.uniform_int(0, l);
            }
            const ShapedWord w = shape(basis, b, spec);
            double e = 0.0;
            for (long long xi : w.xprime.x) e += static_cast<double>(xi) * static_cast<double>(xi);
            acc += e / n;
        }
        partial[c] = acc;
    }
    double total = 0.0;
    for (double p : partial) total += p; // fixed order merge

    ShapingStats st;
    st.samples = samples;
    st.seed = seed;
    st.p_avg = total / samples;
    // region volume consistent with the method's rate: vol = 2^(nR) vol(2 Lambda),
    // vol(2 Lambda)^(2/n) = 4 * 2^(2(n-k)/n)
    const double rate = spec.method == ShapingMethod::hypercube ? rate_hypercube(spec, k, n)
                                                                : rate_nested(spec, n);
    const double vol_2n = std::pow(2.0, 2.0 * rate) * 4.0 * std::pow(2.0, 2.0 * (n - k) / n);
    st.g_norm = st.p_avg / vol_2n;
    st.gain_db = 10.0 * std::log10(1.0 / (12.0 * st.g_norm));
    st.loss_db = n % 2 == 0 ? sphere_gain_db(n) - st.gain_db : std::numeric_limits<double>::quiet_NaN();
    return st;
}

double vnr(const LatticeBasis& basis, double sigma2) {
    if (sigma2 <= 0.0) throw std::invalid_argument("vnr: sigma2 must be positive");
    const double vol_2n = std::pow(2.0, 2.0 * (basis.n() - basis.k()) / basis.n());
    return vol_2n / (2.0 * M_PI * M_E * sigma2);
}

double second_moment_estimate(const std::vector<std::vector<double>>& errors) {
    if (errors.empty()) throw std::invalid_argument("second_moment_estimate: no samples");
    double acc = 0.0;
    for (const auto& e : errors) {
        double s = 0.0;
        for (double v : e) s += v * v;
        acc += s / e.size();
    }
    return acc / errors.size();
}

void write_shaping_csv_header(std::ostream& os) {
    os << "n,k,L,method,M,gain_db,loss_db,samples,seed\n";
}

void write_shaping_csv_row(std::ostream& os, int n, int k, const std::string& l_label,
                           const ShapingSpec& spec, const ShapingStats& st) {
    os << n << ',' << k << ',' << l_label << ',' << to_string(spec.method) << ',' << spec.M << ','
       << st.gain_db << ',' << st.loss_db << ',' << st.samples << ',' << st.seed << '\n';
}

} // namespace latsim
