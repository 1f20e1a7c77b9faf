#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace kmslab {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Working real type: 128-bit significand. All tolerance comparisons in the
// library happen at this precision; see Scalar::kMaxPrecisionBits.
using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>>;

inline Real to_real(const Rational& r) { return r.convert_to<Real>(); }
inline double to_double(const Real& x) { return x.convert_to<double>(); }

Real pi_value();

Rational rat_pow(const Rational& base, long exponent);

/// Complex number over Real. std::complex is not guaranteed to work with
/// multiprecision backends, so we carry our own minimal type.
struct CReal {
    Real re{0};
    Real im{0};

    CReal() = default;
    CReal(Real r) : re(std::move(r)) {}
    CReal(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    CReal operator+(const CReal& o) const { return {re + o.re, im + o.im}; }
    CReal operator-(const CReal& o) const { return {re - o.re, im - o.im}; }
    CReal operator*(const CReal& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CReal operator*(const Real& s) const { return {re * s, im * s}; }
    CReal& operator+=(const CReal& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    bool operator==(const CReal& o) const { return re == o.re && im == o.im; }
    CReal conj() const { return {re, -im}; }
    Real abs() const { return sqrt(re * re + im * im); }
};

/// Exact-when-possible scalar: a rational, a quadratic surd (a + b*sqrt(d))
/// with rational a,b and a nonsquare positive integer d, or a plain
/// high-precision value. Rational inputs stay exact through arithmetic;
/// surds stay exact under +,-,*,/ with rationals and with surds over the
/// same d. Anything else degrades to the decimal form.
class Scalar {
public:
    enum class Form { rational, surd, decimal };

    static constexpr int kMaxPrecisionBits = 128;

    Scalar() : form_(Form::rational), a_(0) {}
    static Scalar from_rational(Rational r);
    static Scalar from_integer(long n) { return from_rational(Rational(n)); }
    // (a + b*sqrt(d)); normalizes square factors of d, collapses to rational
    // when b ends up zero or d a perfect square.
    static Scalar make_surd(Rational a, Rational b, Integer d);
    static Scalar from_real(Real v, bool known_irrational = false);

    Form form() const { return form_; }
    bool is_rational() const { return form_ == Form::rational; }
    // True only when irrationality is exact by representation (surd with
    // b != 0) or carried as a known fact (e.g. pi).
    bool provably_irrational() const;
    const Rational& rational() const;

    Real value() const;
    int sign() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;

    bool operator==(const Scalar& o) const;

    std::string str() const;

    // Exact parts, meaningful for form()==surd: value = a + b*sqrt(d).
    const Rational& surd_a() const { return a_; }
    const Rational& surd_b() const { return b_; }
    const Integer& surd_d() const { return d_; }

private:
    Form form_;
    Rational a_;      // rational value, or surd "a"
    Rational b_;      // surd "b"
    Integer d_ = 0;   // surd radicand
    Real dec_{0};     // decimal value
    bool known_irrational_ = false;
};

/// Decides whether {1, x, y} are linearly independent over the rationals.
/// The verdict is exact for rational/surd forms; for decimal forms it is a
/// heuristic and *exact is set to false.
bool rationally_independent_with_one(const Scalar& x, const Scalar& y, bool* exact);

struct ContinuedFraction {
    std::vector<Integer> head;    // a0, a1, ...
    std::vector<Integer> period;  // repeating tail; empty = finite fraction
};

/// Value of a continued fraction: exact rational when finite, exact
/// quadratic surd when eventually periodic.
Scalar cf_value(const ContinuedFraction& cf);

/// Best rational approximations p/q of x (continued-fraction convergents),
/// computed from the 128-bit value; stops when the expansion is exhausted
/// at working precision.
std::vector<std::pair<Integer, Integer>> convergents(const Real& x, int count);

bool bounded_partial_quotients(const std::vector<Integer>& coefficients,
                               const Integer& bound);

/// Parses "3/4", "-0.7", "1.3e-2", "sqrt(2)-1", "pi", "cf:1,(2)", and
/// +,-,*,/ expressions over those atoms. Throws std::invalid_argument on
/// malformed input.
Scalar parse_scalar(const std::string& text);

/// Deterministic 64-bit generator (splitmix64). Used everywhere a seed is
/// required so reports are reproducible across platforms.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
    // uniform in [lo, hi] inclusive
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool coin() { return (next() & 1) != 0; }
};

}  // namespace kmslab
