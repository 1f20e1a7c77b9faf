#include "kmslab/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace kmslab {

TransportMatrix sl2_transport(const Integer& p, const Integer& q) {
    if (p <= 0 || q <= 0) throw std::invalid_argument("sl2_transport: p, q must be positive");
    if (gcd(p, q) != 1) throw std::invalid_argument("sl2_transport: p, q must be coprime");
    if (q == 1) return TransportMatrix{1, p - 1, 0, 1};
    Integer x = 0;
    for (Integer candidate = 1; candidate < q; ++candidate) {
        if ((candidate * p) % q == 1) {
            x = candidate;
            break;
        }
    }
    if (x == 0) throw std::logic_error("sl2_transport: no inverse found");  // unreachable, gcd=1
    Integer y = (x * p - 1) / q;
    TransportMatrix m{x, y, q - x, p - y};
    if (m.det() != 1) throw std::logic_error("sl2_transport: determinant is not 1");
    return m;
}

Rational transported_c(const TransportMatrix& m, GroupElement s) {
    GroupElement t = m.apply(s);
    // theta = 1 homomorphism
    return Rational(t.a) + Rational(t.b);
}

}  // namespace kmslab
