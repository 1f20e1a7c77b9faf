#pragma once

#include <optional>

#include "kmslab/biseq.hpp"
#include "kmslab/lattice.hpp"
#include "kmslab/numeric.hpp"

namespace kmslab {

/// Point of the product of the sequence space with the integers. Under the
/// parametrization A(x,t) = { m*v1 + n*v2 : n <= a_m } these are exactly
/// the nonempty proper hereditary subsets of Z^2.
struct OmegaZPoint {
    BiSeq x;
    long long t = 0;

    bool operator==(const OmegaZPoint& o) const { return t == o.t && x == o.x; }
};

/// Potential of the Bernoulli shift: 1 when bit(-1)=0, -theta when bit(-1)=1.
Real chi(const BiSeq& x, const Potential& pot);
Rational chi_rational(const BiSeq& x, const Rational& theta);

/// Birkhoff sums S_n of chi in closed form:
///   n>=1: n - (1+theta) * (# ones on [-n,-1])
///   n==0: 0
///   n<=-1: -|n| + (1+theta) * (# ones on [0,|n|-1])
Real birkhoff(const BiSeq& x, long long n, const Potential& pot);
Rational birkhoff_rational(const BiSeq& x, long long n, const Rational& theta);

/// Profile a_m of the point: a_0 = t, a_m - a_{m+1} = x_m.
long long profile(const OmegaZPoint& pt, long long m);

/// Membership of s in A(x,t): with (m,n) the v-coordinates of s, n <= a_m.
bool in_hereditary_set(const OmegaZPoint& pt, GroupElement s);

/// The Z^2-action: pt + v1 = (tau x, t + x_{-1}), pt + v2 = (x, t + 1),
/// extended to all of Z^2.
OmegaZPoint act(const OmegaZPoint& pt, GroupElement s);

/// Checks 1_{A+s}(u) == 1_A(u-s) for all u in the square window.
bool equivariance_check(const OmegaZPoint& pt, GroupElement s, long long window);

/// Generator p*v1 - K*v2 of the stabilizer when x has minimal period p with
/// K ones per period; nullopt for aperiodic x.
std::optional<GroupElement> stabilizer_of(const OmegaZPoint& pt);

/// Q_pt = {s : pt - s has level >= 0}, intersected with the square window
/// in e-coordinates.
std::vector<GroupElement> q_set(const OmegaZPoint& pt, long long window);

}  // namespace kmslab
