#include "kmslab/measures.hpp"

#include <algorithm>
#include <unordered_map>

namespace kmslab {

ExistenceResult existence_gate(const Potential& pot) {
    if (pot.beta == 0) return ExistenceResult::tracial_regime;
    if (pot.beta > 0 && pot.theta.sign() >= 0) return ExistenceResult::kms_exists;
    return ExistenceResult::no_kms;
}

// --- atomic orbit measures ---------------------------------------------------

namespace {

struct TailSide {
    bool convergent = false;
    Real rho;      // asymptotic growth rate of S_n on this side
    Real offset;   // S_n >= rho*n - offset for n >= start
    long long start = 1;
};

// Side n >= 1: S_n = n - (1+theta) * ones(x, [-n,-1]); governed by the left tail.
TailSide left_side(const BiSeq& x, const Real& theta) {
    TailSide side;
    const long long p = static_cast<long long>(x.left_word().size());
    const long long ones = std::count(x.left_word().begin(), x.left_word().end(), '1');
    side.rho = Real(1) - (Real(1) + theta) * Real(ones) / Real(p);
    side.start = std::max<long long>(1, -x.lo());
    side.convergent = side.rho > Real("1e-30");
    if (!side.convergent) return side;
    Real min_g = Real(0);
    for (long long n = side.start; n < side.start + p; ++n) {
        Real s = Real(n) - (Real(1) + theta) * Real(x.ones_in(-n, 0));
        min_g = std::min(min_g, s - side.rho * Real(n));
    }
    side.offset = -min_g;
    return side;
}

// Side n <= -1: S_{-n} = -n + (1+theta) * ones(x, [0,n-1]); right tail.
TailSide right_side(const BiSeq& x, const Real& theta) {
    TailSide side;
    const long long p = static_cast<long long>(x.right_word().size());
    const long long ones = std::count(x.right_word().begin(), x.right_word().end(), '1');
    side.rho = (Real(1) + theta) * Real(ones) / Real(p) - Real(1);
    side.start = std::max<long long>(1, x.hi());
    side.convergent = side.rho > Real("1e-30");
    if (!side.convergent) return side;
    Real min_g = Real(0);
    for (long long n = side.start; n < side.start + p; ++n) {
        Real s = Real(-n) + (Real(1) + theta) * Real(x.ones_in(0, n));
        min_g = std::min(min_g, s - side.rho * Real(n));
    }
    side.offset = -min_g;
    return side;
}

Real geometric_tail(const Real& beta, const TailSide& side, long long n) {
    // sum over k > n of e^{-beta (rho k - offset)}
    Real r = exp(-beta * side.rho);
    return exp(beta * side.offset) * pow(r, static_cast<unsigned>(n + 1)) / (Real(1) - r);
}

long long truncation_point(const Real& beta, const TailSide& side, const Real& budget) {
    long long n = side.start + 4;
    while (geometric_tail(beta, side, n) > budget) {
        n += std::max<long long>(4, n / 2);
        if (n > 100000)
            throw DivergentSeries("orbit series converges too slowly to certify");
    }
    return n;
}

}  // namespace

AtomicOrbitMeasure orbit_measure(const BiSeq& x, const Potential& pot, const Real& tol) {
    if (existence_gate(pot) != ExistenceResult::kms_exists)
        throw std::invalid_argument("orbit_measure: outside the existence region");
    if (tol <= 0) throw std::invalid_argument("orbit_measure: tol must be positive");

    AtomicOrbitMeasure m;
    m.base = x;
    m.beta = pot.beta;
    m.theta = pot.theta_value();

    auto period = x.minimal_period();
    if (period) {
        const long long p = *period;
        bool sum_zero;
        if (pot.theta.is_rational())
            sum_zero = birkhoff_rational(x, p, pot.theta.rational()) == 0;
        else
            sum_zero = abs(birkhoff(x, p, pot)) < Real("1e-30");
        if (!sum_zero)
            throw PeriodicObstruction(
                "orbit_measure: periodic point with nonzero period sum");
        m.periodic = true;
        m.n_min = 0;
        m.n_max = p - 1;
        Real z(0);
        std::vector<Real> raw;
        for (long long n = 0; n < p; ++n) {
            raw.push_back(exp(-m.beta * birkhoff(x, n, pot)));
            z += raw.back();
        }
        for (auto& w : raw) w /= z;
        m.weights = std::move(raw);
        m.norm = z;
        m.tail_bound = Real(0);
        return m;
    }

    TailSide left = left_side(x, m.theta);
    TailSide right = right_side(x, m.theta);
    if (!left.convergent || !right.convergent)
        throw DivergentSeries("orbit_measure: the orbit series diverges");

    const Real budget = tol / 4;
    const long long n_pos = truncation_point(m.beta, left, budget);
    const long long n_neg = truncation_point(m.beta, right, budget);
    m.n_min = -n_neg;
    m.n_max = n_pos;

    std::vector<Real> raw(static_cast<std::size_t>(m.n_max - m.n_min + 1));
    // S_{n+1} - S_n = chi(tau^n x) = 1 - (1+theta) * bit(-1-n)
    raw[static_cast<std::size_t>(-m.n_min)] = Real(1);
    Real s(0);
    for (long long n = 0; n < m.n_max; ++n) {
        s += Real(1) - (Real(1) + m.theta) * Real(x.bit(-1 - n));
        raw[static_cast<std::size_t>(n + 1 - m.n_min)] = exp(-m.beta * s);
    }
    s = Real(0);
    for (long long n = 0; n > m.n_min; --n) {
        s -= Real(1) - (Real(1) + m.theta) * Real(x.bit(-n));
        raw[static_cast<std::size_t>(n - 1 - m.n_min)] = exp(-m.beta * s);
    }
    Real z(0);
    for (const auto& w : raw) z += w;
    for (auto& w : raw) w /= z;
    m.weights = std::move(raw);
    m.norm = z;
    m.tail_bound =
        (geometric_tail(m.beta, left, n_pos) + geometric_tail(m.beta, right, n_neg)) / z;
    return m;
}

Real AtomicOrbitMeasure::mass(const Cylinder& c) const {
    if (c.contradictory) return Real(0);
    if (c.level)
        throw UnsupportedCylinder("orbit measure lives on the sequence space, not its lift");
    if (!periodic && c.window() > window_cap)
        throw UnsupportedCylinder("cylinder window exceeds the configured depth cap");
    Real total(0);
    for (long long n = n_min; n <= n_max; ++n) {
        bool in = true;
        for (auto [k, bit] : c.constraints)
            if (base.bit(k - n) != bit) {  // bit k of tau^n(base)
                in = false;
                break;
            }
        if (in) total += weights[static_cast<std::size_t>(n - n_min)];
    }
    return total;
}

// --- dyadic product ----------------------------------------------------------

Rational DyadicProductMeasure::mass_exact(const Cylinder& c) const {
    if (c.contradictory) return Rational(0);
    if (c.level) throw UnsupportedCylinder("product measure has no level coordinate");
    Rational out(1);
    for (auto [k, bit] : c.constraints) out *= bit ? p : Rational(1) - p;
    return out;
}

// --- circle / line -----------------------------------------------------------

Real CircleDensityMeasure::mass_interval(const Real& a, const Real& b) const {
    if (b <= a) return Real(0);
    if (b - a > 1) throw std::invalid_argument("interval longer than the circle");
    Real a0 = a - floor(a);
    Real b0 = a0 + (b - a);
    auto piece = [&](const Real& u, const Real& v) {  // 0 <= u <= v <= 1
        Real acc(0);
        for (std::size_t i = 0; i < breakpoints.size(); ++i) {
            Real seg_lo = breakpoints[i];
            Real seg_hi = i + 1 < breakpoints.size() ? breakpoints[i + 1] : Real(1);
            Real lo = std::max(u, seg_lo), hi = std::min(v, seg_hi);
            if (hi > lo) acc += values[i] * (hi - lo);
        }
        return acc;
    };
    if (b0 <= 1) return piece(a0, b0);
    return piece(a0, Real(1)) + piece(Real(0), b0 - 1);
}

// --- lift --------------------------------------------------------------------

Real LiftedMeasure::slice_factor(long long n) const {
    Real q = exp(-beta * (Real(1) + theta));
    Real qn = n >= 0 ? pow(q, static_cast<unsigned>(n))
                     : Real(1) / pow(q, static_cast<unsigned>(-n));
    return (Real(1) - q) * qn;
}

Real LiftedMeasure::mass(const Cylinder& c) const {
    if (c.contradictory) return Real(0);
    Cylinder base = c;
    base.level.reset();
    Real inner_mass = measure_of_cylinder(*inner, base);
    if (!c.level) return inner_mass;  // over nonnegative levels the factors sum to 1
    return slice_factor(*c.level) * inner_mass;
}

const char* variant_name(const ConformalMeasure& m) {
    struct Visitor {
        const char* operator()(const AtomicOrbitMeasure&) const { return "atomic-orbit"; }
        const char* operator()(const DyadicProductMeasure&) const { return "dyadic-product"; }
        const char* operator()(const CircleDensityMeasure&) const { return "density-on-circle"; }
        const char* operator()(const LineExponentialMeasure&) const {
            return "exponential-on-line";
        }
        const char* operator()(const LiftedMeasure&) const { return "lifted"; }
    };
    return std::visit(Visitor{}, m);
}

Real measure_of_cylinder(const ConformalMeasure& m, const Cylinder& c) {
    struct Visitor {
        const Cylinder& c;
        Real operator()(const AtomicOrbitMeasure& v) const { return v.mass(c); }
        Real operator()(const DyadicProductMeasure& v) const { return v.mass(c); }
        Real operator()(const LiftedMeasure& v) const { return v.mass(c); }
        Real operator()(const CircleDensityMeasure&) const {
            throw UnsupportedCylinder("circle measures evaluate on intervals");
        }
        Real operator()(const LineExponentialMeasure&) const {
            throw UnsupportedCylinder("line measures evaluate on intervals");
        }
    };
    return std::visit(Visitor{c}, m);
}

ConformalMeasure lift(ConformalMeasure inner, const Potential& pot) {
    Real rate = pot.beta * (Real(1) + pot.theta_value());
    if (rate <= 0) throw std::invalid_argument("lift: beta(1+theta) must be positive");
    LiftedMeasure out;
    out.inner = std::make_shared<const ConformalMeasure>(std::move(inner));
    out.beta = pot.beta;
    out.theta = pot.theta_value();
    return out;
}

Real lifted_translate_mass(const ConformalMeasure& lifted, const Cylinder& c, GroupElement s) {
    if (!std::holds_alternative<LiftedMeasure>(lifted))
        throw VariantMismatch("translate: expected a lifted measure");
    if (!c.level) throw UnsupportedCylinder("translate: cylinder must carry a level");
    auto [m_steps, n_steps] = to_v_coords(s);

    std::vector<Cylinder> pieces{c};
    auto step_v1 = [&](bool forward) {
        std::vector<Cylinder> next;
        for (const auto& piece : pieces)
            for (int b = 0; b <= 1; ++b) {
                Cylinder split = piece;
                split.require(forward ? -1 : 0, b);
                if (split.contradictory) continue;
                Cylinder moved = split.shifted(forward ? 1 : -1);
                moved.level = *split.level + (forward ? b : -b);
                next.push_back(std::move(moved));
            }
        pieces = std::move(next);
    };
    for (long long i = 0; i < (m_steps >= 0 ? m_steps : -m_steps); ++i) step_v1(m_steps >= 0);
    for (auto& piece : pieces) piece.level = *piece.level + n_steps;

    Real total(0);
    for (const auto& piece : pieces) total += measure_of_cylinder(lifted, piece);
    return total;
}

// --- conformality sweep ------------------------------------------------------

namespace {

std::string decode_cylinder(std::uint64_t v, long long depth) {
    Cylinder c;
    for (long long j = 0; j < 2 * depth; ++j)
        c.require(-depth + j, static_cast<int>((v >> j) & 1));
    return c.str();
}

ConformalityReport sweep_atomic(const AtomicOrbitMeasure& m, const Potential& pot,
                                long long depth, const Real& tol) {
    ConformalityReport rep;
    rep.variant = "atomic-orbit";
    rep.depth = depth;
    rep.tol = tol;
    rep.certified_tail = m.tail_bound;
    rep.max_deviation = Real(0);

    const Real e_minus_beta = exp(-pot.beta);
    const Real e_beta_theta = exp(pot.beta * pot.theta_value());

    // pattern of atom n on [-depth, depth) and on [-depth+1, depth+1)
    std::unordered_map<std::uint64_t, Real> on_window, on_shifted;
    for (long long n = m.n_min; n <= m.n_max; ++n) {
        std::uint64_t k1 = 0, k2 = 0;
        for (long long j = 0; j < 2 * depth; ++j) {
            if (m.base.bit(-depth + j - n)) k1 |= 1ULL << j;
            if (m.base.bit(-depth + 1 + j - n)) k2 |= 1ULL << j;
        }
        const Real& w = m.weights[static_cast<std::size_t>(n - m.n_min)];
        on_window[k1] += w;
        on_shifted[k2] += w;
    }

    auto get = [](const std::unordered_map<std::uint64_t, Real>& map, std::uint64_t k) {
        auto it = map.find(k);
        return it == map.end() ? Real(0) : it->second;
    };

    std::vector<std::uint64_t> keys;
    for (const auto& [k, w] : on_window) keys.push_back(k);
    for (const auto& [k, w] : on_shifted) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    for (std::uint64_t v : keys) {
        // every full cylinder absent from both maps has 0 = 0 exactly
        Real lhs = get(on_shifted, v);  // mass of tau(C)
        int bit_minus_one = static_cast<int>((v >> (depth - 1)) & 1);
        Real rhs = (bit_minus_one == 0 ? e_minus_beta : e_beta_theta) * get(on_window, v);
        Real dev = abs(lhs - rhs);
        if (dev > rep.max_deviation) {
            rep.max_deviation = dev;
            rep.worst_cylinder = decode_cylinder(v, depth);
        }
    }
    rep.pass = rep.max_deviation <= tol;
    return rep;
}

ConformalityReport sweep_dyadic(const DyadicProductMeasure& m, const Potential& pot,
                                long long depth, const Real& tol) {
    ConformalityReport rep;
    rep.variant = "dyadic-product";
    rep.depth = depth;
    rep.tol = tol;
    rep.certified_tail = Real(0);
    rep.max_deviation = Real(0);
    if (depth > 12) throw UnsupportedCylinder("sweep depth exceeds the enumeration cap");

    const Real e_minus_beta = exp(-pot.beta);
    const Real e_beta_theta = exp(pot.beta * pot.theta_value());
    const Real pr = to_real(m.p);

    for (std::uint64_t v = 0; v < (1ULL << (2 * depth)); ++v) {
        Real mass(1);
        for (long long j = 0; j < 2 * depth; ++j)
            mass *= ((v >> j) & 1) ? pr : Real(1) - pr;
        // the product measure is shift invariant, so the mass of tau(C) is m(C)
        int bit_minus_one = static_cast<int>((v >> (depth - 1)) & 1);
        Real rhs = (bit_minus_one == 0 ? e_minus_beta : e_beta_theta) * mass;
        Real dev = abs(mass - rhs);
        if (dev > rep.max_deviation) {
            rep.max_deviation = dev;
            rep.worst_cylinder = decode_cylinder(v, depth);
        }
    }
    rep.pass = rep.max_deviation <= tol;
    return rep;
}

}  // namespace

ConformalityReport check_conformal(const ConformalMeasure& m, const Potential& pot,
                                   long long depth, const Real& tol) {
    if (depth < 1 || depth > 31)
        throw std::invalid_argument("check_conformal: depth must be in [1,31]");
    if (const auto* atomic = std::get_if<AtomicOrbitMeasure>(&m))
        return sweep_atomic(*atomic, pot, depth, tol);
    if (const auto* dyadic = std::get_if<DyadicProductMeasure>(&m))
        return sweep_dyadic(*dyadic, pot, depth, tol);
    throw VariantMismatch("check_conformal expects a measure on the sequence space");
}

bool theta_zero_concentration(const ConformalMeasure& m, const Real& tol) {
    Cylinder c;
    c.require(-1, 0);
    return measure_of_cylinder(m, c) <= tol;
}

}  // namespace kmslab
