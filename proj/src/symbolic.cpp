#include "kmslab/symbolic.hpp"

namespace kmslab {

Real chi(const BiSeq& x, const Potential& pot) {
    return x.bit(-1) == 0 ? Real(1) : -pot.theta_value();
}

Rational chi_rational(const BiSeq& x, const Rational& theta) {
    return x.bit(-1) == 0 ? Rational(1) : -theta;
}

Real birkhoff(const BiSeq& x, long long n, const Potential& pot) {
    if (n == 0) return Real(0);
    const Real one_plus_theta = Real(1) + pot.theta_value();
    if (n >= 1) return Real(n) - one_plus_theta * Real(x.ones_in(-n, 0));
    return Real(n) + one_plus_theta * Real(x.ones_in(0, -n));
}

Rational birkhoff_rational(const BiSeq& x, long long n, const Rational& theta) {
    if (n == 0) return Rational(0);
    const Rational one_plus_theta = Rational(1) + theta;
    if (n >= 1) return Rational(n) - one_plus_theta * Rational(x.ones_in(-n, 0));
    return Rational(n) + one_plus_theta * Rational(x.ones_in(0, -n));
}

namespace {

// Level carried by m steps of v1: sum of x_{-1},...,x_{-m} for m>=1, with
// the inverse steps subtracting x_0,...,x_{|m|-1}.
long long v1_carry(const BiSeq& x, long long m) {
    if (m >= 0) return x.ones_in(-m, 0);
    return -x.ones_in(0, -m);
}

}  // namespace

long long profile(const OmegaZPoint& pt, long long m) {
    if (m == 0) return pt.t;
    if (m > 0) return pt.t - pt.x.ones_in(0, m);
    return pt.t + pt.x.ones_in(m, 0);
}

bool in_hereditary_set(const OmegaZPoint& pt, GroupElement s) {
    auto [m, n] = to_v_coords(s);
    return n <= profile(pt, m);
}

OmegaZPoint act(const OmegaZPoint& pt, GroupElement s) {
    auto [m, n] = to_v_coords(s);
    return {pt.x.shifted(m), pt.t + v1_carry(pt.x, m) + n};
}

bool equivariance_check(const OmegaZPoint& pt, GroupElement s, long long window) {
    OmegaZPoint moved = act(pt, s);
    for (long long a = -window; a <= window; ++a)
        for (long long b = -window; b <= window; ++b) {
            GroupElement u{a, b};
            if (in_hereditary_set(moved, u) != in_hereditary_set(pt, u - s)) return false;
        }
    return true;
}

std::optional<GroupElement> stabilizer_of(const OmegaZPoint& pt) {
    auto p = pt.x.minimal_period();
    if (!p) return std::nullopt;
    long long ones = pt.x.ones_in(0, *p);
    return from_v_coords(*p, -ones);
}

std::vector<GroupElement> q_set(const OmegaZPoint& pt, long long window) {
    std::vector<GroupElement> out;
    for (long long a = -window; a <= window; ++a)
        for (long long b = -window; b <= window; ++b) {
            GroupElement s{a, b};
            if (act(pt, -s).t >= 0) out.push_back(s);
        }
    return out;
}

}  // namespace kmslab
