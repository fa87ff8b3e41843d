#include "latsim/lattice.hpp"

#include <cmath>
#include <stdexcept>

#include "latsim/rng.hpp"

namespace latsim {

namespace {
constexpr double kLlrClip = 30.0;
}

LatticeBasis LatticeBasis::from_parity_check(const BinaryParityCheck& h) {
    LatticeBasis b;
    b.code_ = to_systematic(h);
    b.h_perm_ = permute_columns(h, b.code_.col_perm);
    return b;
}

void LatticeBasis::parity_dot(std::span<const long long> b_sys, std::span<long long> t) const {
    const int nk = code_.n - code_.k;
    for (int i = 0; i < nk; ++i) {
        const std::uint8_t* row = code_.pt[i].data();
        long long acc = 0;
        for (int j = 0; j < code_.k; ++j) acc += row[j] ? b_sys[j] : 0;
        t[i] = acc;
    }
}

LatticeWord encode(const LatticeBasis& basis, const IntVec& b) {
    const int n = basis.n(), k = basis.k();
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("encode: length mismatch");
    LatticeWord w;
    w.x.resize(n);
    for (int j = 0; j < k; ++j) w.x[j] = 2 * b[j] - 1;
    std::vector<long long> t(n - k);
    basis.parity_dot(std::span<const long long>(b.data(), k), t);
    for (int i = 0; i < n - k; ++i) w.x[k + i] = 2 * (2 * b[k + i] + t[i]) - 1;
    return w;
}

LatticeWord lattice_add(const LatticeWord& a, const LatticeWord& b) {
    if (a.x.size() != b.x.size()) throw std::invalid_argument("lattice_add: length mismatch");
    LatticeWord r;
    r.x.resize(a.x.size());
    for (size_t i = 0; i < a.x.size(); ++i) r.x[i] = a.x[i] + b.x[i] + 1;
    return r;
}

bool is_member(const LatticeBasis& basis, const IntVec& x) {
    if (static_cast<int>(x.size()) != basis.n()) return false;
    std::vector<std::uint8_t> bits(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (euclid_mod(x[i], 2) == 0) return false; // coordinates must be odd
        bits[i] = static_cast<std::uint8_t>(euclid_mod((x[i] + 1) / 2, 2));
    }
    for (std::uint8_t s : syndrome(basis.h_perm(), bits))
        if (s) return false;
    return true;
}

LlrVector lattice_llr(std::span<const double> y, std::span<const double> sigma2_per_coord) {
    LlrVector g;
    g.values.resize(y.size());
    for (size_t i = 0; i < y.size(); ++i) {
        const double a = (y[i] - 1.0) / 4.0;
        const double b = (y[i] + 1.0) / 4.0;
        const double ra = a - static_cast<double>(round_half_up(a));
        const double rb = b - static_cast<double>(round_half_up(b));
        const double d = ra * ra - rb * rb;
        const double s2 = sigma2_per_coord[i];
        double v;
        if (s2 < 1e-280) {
            v = d == 0.0 ? 0.0 : (d > 0.0 ? kLlrClip : -kLlrClip);
        } else {
            v = 2.0 * d / s2;
            if (v > kLlrClip) v = kLlrClip;
            if (v < -kLlrClip) v = -kLlrClip;
        }
        g.values[i] = v;
    }
    return g;
}

static DecodeResult decode_impl(const LatticeBasis& basis, std::span<const double> y,
                                std::span<const double> s2, int max_iter) {
    if (static_cast<int>(y.size()) != basis.n()) throw std::invalid_argument("decode: length mismatch");
    for (double v : s2)
        if (v <= 0.0) throw std::invalid_argument("decode: noise variance must be positive");

    LlrVector gamma = lattice_llr(y, s2);
    SpaResult spa = spa_decode(basis.h_perm(), gamma, max_iter);

    DecodeResult res;
    res.converged = spa.converged;
    res.word.x.resize(y.size());
    for (size_t i = 0; i < y.size(); ++i) {
        const long long c = 2LL * spa.bits[i] - 1; // +-1 form
        const long long z = round_half_up((y[i] - static_cast<double>(c)) / 4.0);
        res.word.x[i] = c + 4 * z;
    }
    return res;
}

DecodeResult decode(const LatticeBasis& basis, std::span<const double> y, double sigma2,
                    int max_iter) {
    std::vector<double> s2(y.size(), sigma2);
    return decode_impl(basis, y, s2, max_iter);
}

DecodeResult decode(const LatticeBasis& basis, std::span<const double> y,
                    std::span<const double> sigma2_per_coord, int max_iter) {
    if (sigma2_per_coord.size() != y.size())
        throw std::invalid_argument("decode: sigma2 length mismatch");
    return decode_impl(basis, y, sigma2_per_coord, max_iter);
}

UnshapeResult unshape_info(const LatticeBasis& basis, const IntVec& x) {
    const int n = basis.n(), k = basis.k();
    if (static_cast<int>(x.size()) != n) throw std::invalid_argument("unshape_info: length mismatch");
    UnshapeResult r;
    r.b.resize(n);
    bool exact = true;
    for (int j = 0; j < k; ++j) {
        const long long v = x[j] + 1;
        exact = exact && (euclid_mod(v, 2) == 0);
        r.b[j] = round_half_up_ratio(v, 2);
    }
    std::vector<long long> t(n - k);
    basis.parity_dot(std::span<const long long>(r.b.data(), k), t);
    for (int i = 0; i < n - k; ++i) {
        const long long num = (x[k + i] + 1) - 2 * t[i];
        exact = exact && (euclid_mod(num, 4) == 0);
        r.b[k + i] = round_half_up_ratio(num, 4);
    }
    r.reliable = exact;
    return r;
}

} // namespace latsim
