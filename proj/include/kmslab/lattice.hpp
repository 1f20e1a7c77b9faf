#pragma once

#include <functional>
#include <string>

#include "kmslab/numeric.hpp"

namespace kmslab {

/// Element of the lattice Z^2 in the standard basis e1=(1,0), e2=(0,1).
struct GroupElement {
    long long a = 0;  // coefficient of e1
    long long b = 0;  // coefficient of e2

    constexpr GroupElement() = default;
    constexpr GroupElement(long long a_, long long b_) : a(a_), b(b_) {}

    constexpr GroupElement operator+(GroupElement o) const { return {a + o.a, b + o.b}; }
    constexpr GroupElement operator-(GroupElement o) const { return {a - o.a, b - o.b}; }
    constexpr GroupElement operator-() const { return {-a, -b}; }
    constexpr GroupElement operator*(long long k) const { return {a * k, b * k}; }
    constexpr bool operator==(const GroupElement&) const = default;
    constexpr bool in_positive_cone() const { return a >= 0 && b >= 0; }  // N^2
    constexpr bool is_zero() const { return a == 0 && b == 0; }

    std::string str() const {
        return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
};

constexpr GroupElement kE1{1, 0};
constexpr GroupElement kE2{0, 1};
constexpr GroupElement kV1{1, 0};  // v1 = e1
constexpr GroupElement kV2{1, 1};  // v2 = e1 + e2

/// v-coordinates (m, n) with a*e1 + b*e2 = m*v1 + n*v2.
constexpr std::pair<long long, long long> to_v_coords(GroupElement s) {
    return {s.a - s.b, s.b};
}
constexpr GroupElement from_v_coords(long long m, long long n) {
    return {m + n, n};
}

/// Time-evolution data: the homomorphism c with c(e1)=1, c(e2)=theta, and
/// the inverse temperature beta. theta keeps its exact form when it has one.
struct Potential {
    Real beta;
    Scalar theta;
    int precision = Scalar::kMaxPrecisionBits;  // trusted significand bits

    Potential(Real beta_, Scalar theta_, int precision_ = Scalar::kMaxPrecisionBits)
        : beta(std::move(beta_)), theta(std::move(theta_)), precision(precision_) {
        if (precision <= 0 || precision > Scalar::kMaxPrecisionBits)
            throw std::invalid_argument(
                "precision must be in [1," +
                std::to_string(Scalar::kMaxPrecisionBits) + "] significand bits");
    }

    Real theta_value() const { return theta.value(); }
    Real c_of(GroupElement s) const { return Real(s.a) + Real(s.b) * theta.value(); }
};

inline Real c_value(GroupElement s, const Potential& pot) { return pot.c_of(s); }

/// Exact variant, defined when theta is rational.
inline Rational c_value_rational(GroupElement s, const Rational& theta) {
    return Rational(s.a) + Rational(s.b) * theta;
}

/// Nonnegative SL2(Z) matrix transporting the theta=1 homomorphism to
/// theta=p/q: columns sum to q and p, and c(phi(s)) = q * c_{p/q}(s).
struct TransportMatrix {
    Integer x, y, z, w;  // [[x, y], [z, w]]

    Integer det() const { return x * w - y * z; }
    GroupElement apply(GroupElement s) const {
        // phi(e1) = (x, z), phi(e2) = (y, w)
        Integer ra = x * s.a + y * s.b;
        Integer rb = z * s.a + w * s.b;
        return {ra.convert_to<long long>(), rb.convert_to<long long>()};
    }
};

/// Builds the transport matrix for theta = p/q, gcd(p,q)=1, p,q >= 1:
/// q=1 uses [[1,p-1],[0,1]]; q>=2 takes the least x in {1..q-1} with
/// x*p = 1 mod q, then y=(xp-1)/q, z=q-x, w=p-y.
TransportMatrix sl2_transport(const Integer& p, const Integer& q);

/// c(phi(s)) for the theta=1 homomorphism; equals q * c_{p/q}(s) exactly.
Rational transported_c(const TransportMatrix& m, GroupElement s);

}  // namespace kmslab

template <>
struct std::hash<kmslab::GroupElement> {
    std::size_t operator()(const kmslab::GroupElement& g) const noexcept {
        std::size_t h = std::hash<long long>{}(g.a);
        return h ^ (std::hash<long long>{}(g.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};
