#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "kmslab/cylinder.hpp"
#include "kmslab/errors.hpp"
#include "kmslab/lattice.hpp"
#include "kmslab/symbolic.hpp"

namespace kmslab {

enum class ExistenceResult { kms_exists, no_kms, tracial_regime };

/// KMS states exist iff beta > 0 and theta >= 0; beta = 0 is flagged as the
/// tracial regime rather than folded into yes/no.
ExistenceResult existence_gate(const Potential& pot);

/// Atomic measure on the shift orbit of `base`, weights proportional to
/// exp(-beta * S_n(chi)). For periodic base the orbit is finite and the
/// weights are exact up to the working exponentials; for aperiodic base the
/// series is truncated with a certified geometric tail bound.
struct AtomicOrbitMeasure {
    BiSeq base = BiSeq::constant(0);
    Real beta;
    Real theta;
    bool periodic = false;
    long long n_min = 0, n_max = 0;   // atoms tau^n(base), n in [n_min, n_max]
    std::vector<Real> weights;        // normalized, index n - n_min
    Real norm;                        // truncated partition sum
    Real tail_bound;                  // certified bound on any cylinder mass error
    long long window_cap = 12;

    Real mass(const Cylinder& c) const;
};

/// Product measure on the two-sided sequence space with every coordinate
/// p-biased; the odometer-conformal measure, not the shift-conformal one.
struct DyadicProductMeasure {
    Rational p;  // in (0, 1/2); (1-p)/p = e^beta

    explicit DyadicProductMeasure(Rational p_) : p(std::move(p_)) {
        if (p <= 0 || p >= Rational(1, 2))
            throw std::invalid_argument("dyadic product: p must lie in (0, 1/2)");
    }
    Rational mass_exact(const Cylinder& c) const;
    Real mass(const Cylinder& c) const { return to_real(mass_exact(c)); }
    Real beta() const { return log(to_real((Rational(1) - p) / p)); }
};

/// Piecewise-constant probability density on the circle [0,1).
struct CircleDensityMeasure {
    std::vector<Real> breakpoints;  // 0 = b_0 < b_1 < ... < b_k < 1
    std::vector<Real> values;       // density on [b_i, b_{i+1})

    Real mass_interval(const Real& a, const Real& b) const;  // [a,b) mod 1
    Real total() const { return mass_interval(Real(0), Real(1)); }
};

/// beta * exp(-beta t) dt on the real line.
struct LineExponentialMeasure {
    Real beta;
    Real mass_interval(const Real& a, const Real& b) const {
        return exp(-beta * a) - exp(-beta * b);
    }
};

struct LiftedMeasure;

using ConformalMeasure = std::variant<AtomicOrbitMeasure, DyadicProductMeasure,
                                      CircleDensityMeasure, LineExponentialMeasure,
                                      LiftedMeasure>;

/// Lift to the product with the integers: slice n carries the factor
/// (1 - e^{-beta(1+theta)}) e^{-beta(1+theta) n}.
struct LiftedMeasure {
    std::shared_ptr<const ConformalMeasure> inner;
    Real beta;
    Real theta;

    Real slice_factor(long long n) const;
    Real mass(const Cylinder& c) const;
};

const char* variant_name(const ConformalMeasure& m);

/// Requires the gate; throws PeriodicObstruction when the base is periodic
/// with a nonzero period sum and DivergentSeries when the orbit series has
/// no finite mass.
AtomicOrbitMeasure orbit_measure(const BiSeq& x, const Potential& pot, const Real& tol);

/// Exact product mass for the dyadic variant, certified-truncated sums for
/// orbit variants, slice formula for lifts. Level-free cylinders of a lift
/// integrate over nonnegative levels only (the unit-mass side).
Real measure_of_cylinder(const ConformalMeasure& m, const Cylinder& c);

/// Lift of a measure on the sequence space; requires beta(1+theta) > 0.
ConformalMeasure lift(ConformalMeasure inner, const Potential& pot);

/// Mass of the translate C + s of a level cylinder under the lifted measure,
/// computed by pushing the cylinder through the action generator by
/// generator (each v1 step splits on a boundary bit).
Real lifted_translate_mass(const ConformalMeasure& lifted, const Cylinder& c, GroupElement s);

struct ConformalityReport {
    std::string variant;
    long long depth = 0;
    Real max_deviation;
    std::string worst_cylinder;
    Real certified_tail;
    bool pass = false;
    Real tol;
};

/// Verifies m(tau(C)) = e^{-beta} m(C & {bit(-1)=0}) + e^{beta theta} m(C & {bit(-1)=1})
/// over every full cylinder on the window [-depth, depth).
ConformalityReport check_conformal(const ConformalMeasure& m, const Potential& pot,
                                   long long depth, const Real& tol);

/// True iff the mass of {x : bit(-1) = 0} is at most tol; at theta = 0 every
/// shift-conformal measure concentrates on the all-ones point.
bool theta_zero_concentration(const ConformalMeasure& m, const Real& tol);

}  // namespace kmslab
