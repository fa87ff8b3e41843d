#include "latsim/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "latsim/rng.hpp"

namespace latsim {

OneWayPlan OneWayPlan::random_plan(int n, double rho, std::uint64_t seed) {
    if (rho < 0.0 || rho > 1.0) throw std::invalid_argument("plan: rho must be in [0,1]");
    const int size = static_cast<int>(std::ceil(rho * n));
    OneWayPlan p;
    p.rho = rho;
    // Fisher-Yates prefix draw without replacement
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(seed, 0x1d5e);
    for (int i = 0; i < size; ++i) {
        const int j = static_cast<int>(rng.uniform_int(i, n));
        std::swap(idx[i], idx[j]);
    }
    p.x_set.assign(idx.begin(), idx.begin() + size);
    std::sort(p.x_set.begin(), p.x_set.end());
    p.in_x.assign(n, 0);
    for (int i : p.x_set) p.in_x[i] = 1;
    return p;
}

TwoWayPlan TwoWayPlan::uniform(int n, long long l_r, long long m1, long long m2) {
    TwoWayPlan p;
    p.l_r.assign(n, l_r);
    p.m1 = m1;
    p.m2 = m2;
    return p;
}

void TwoWayPlan::validate(const ShapingSpec& spec) const {
    if (l_r.size() != spec.L.size()) throw std::invalid_argument("two-way plan: size mismatch");
    for (size_t i = 0; i < l_r.size(); ++i) {
        if (l_r[i] < 2 || l_r[i] % 2 != 0)
            throw std::invalid_argument("two-way plan: L^(r) entries must be even and >= 2");
        if (spec.L[i] % l_r[i] != 0)
            throw std::invalid_argument("two-way plan: L^(r) must divide L elementwise");
        if (std::gcd(l_r[i], m1) != 1 || std::gcd(l_r[i], m2) != 1)
            throw std::invalid_argument("two-way plan: m1, m2 must be coprime to L^(r)");
    }
}

long long smod(long long x, long long l) {
    const long long xb = euclid_mod(x, l);
    return xb < l / 2 ? xb : xb - l;
}

long long smod2mod(long long x, long long l) {
    if (x < -l / 2 || x >= l / 2) throw std::domain_error("smod2mod: input outside [-L/2, L/2)");
    return x < 0 ? x + l : x;
}

long long recover_delta(long long v, long long m, long long l_r) {
    if (l_r < 1) throw std::invalid_argument("recover_delta: L^(r) must be positive");
    if (std::gcd(euclid_mod(m, l_r), l_r) != 1 && l_r != 1)
        throw std::invalid_argument("recover_delta: gcd(m, L^(r)) != 1");
    const long long vm = euclid_mod(v, l_r);
    for (long long b = 0; b < l_r; ++b) {
        if (euclid_mod(m * b - vm, l_r) == 0) return b;
    }
    throw std::logic_error("recover_delta: no solution"); // unreachable when coprime
}

std::pair<IntVec, IntVec> split_oneway(const IntVec& b, const OneWayPlan& plan) {
    IntVec br(b.size(), 0), bv(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) {
        if (i < plan.in_x.size() && plan.in_x[i])
            br[i] = b[i];
        else
            bv[i] = b[i];
    }
    return {std::move(br), std::move(bv)};
}

Decomposition pc_decompose_oneway(const LatticeBasis& basis, const IntVec& b,
                                  const ShapingSpec& spec, const OneWayPlan& plan) {
    const ShapedWord full = shape(basis, b, spec);
    auto [br, bv] = split_oneway(b, plan);
    const ShapedWord res = shape(basis, br, spec);
    Decomposition d;
    d.bprime = full.bprime;
    d.br_prime = res.bprime;
    d.bv_prime.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) d.bv_prime[i] = d.bprime[i] - d.br_prime[i];
    return d;
}

std::pair<IntVec, IntVec> split_twoway(const IntVec& b, const TwoWayPlan& plan,
                                       const ShapingSpec& spec) {
    require_in_constellation(b, spec);
    IntVec br(b.size()), bv(b.size());
    for (size_t i = 0; i < b.size(); ++i) {
        br[i] = euclid_mod(b[i], plan.l_r[i]);
        bv[i] = b[i] - br[i];
    }
    return {std::move(br), std::move(bv)};
}

IntVec shape_resolution_twoway(const LatticeBasis& basis, const IntVec& b_r,
                               const ShapingSpec& spec, const TwoWayPlan& plan) {
    ShapingSpec rspec;
    rspec.L = plan.l_r;
    rspec.method = spec.method;
    rspec.M = spec.M;
    if (spec.method == ShapingMethod::hypercube) {
        // centered residues are already in the L^(r) hypercube constellation
        IntVec c(b_r.size());
        for (size_t i = 0; i < b_r.size(); ++i) c[i] = smod(b_r[i], plan.l_r[i]);
        return hypercube_shape(basis, c, rspec).bprime;
    }
    IntVec c(b_r.size());
    for (size_t i = 0; i < b_r.size(); ++i) c[i] = euclid_mod(b_r[i], plan.l_r[i]);
    return nested_shape(basis, c, rspec).bprime;
}

Decomposition pc_decompose_twoway(const LatticeBasis& basis, const IntVec& b,
                                  const ShapingSpec& spec, const TwoWayPlan& plan) {
    plan.validate(spec);
    const ShapedWord full = shape(basis, b, spec);
    Decomposition d;
    d.bprime = full.bprime;
    d.br_prime = shape_resolution_twoway(basis, b, spec, plan);
    d.bv_prime.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) {
        const long long br_plain = euclid_mod(b[i], plan.l_r[i]);
        d.bv_prime[i] = d.bprime[i] - br_plain;
    }
    return d;
}

} // namespace latsim
