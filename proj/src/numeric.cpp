#include "kmslab/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace kmslab {

Real pi_value() {
    static const Real pi = Real(4) * atan(Real(1));
    return pi;
}

Rational rat_pow(const Rational& base, long exponent) {
    if (exponent == 0) return Rational(1);
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("rat_pow: zero to a negative power");
        return Rational(1) / rat_pow(base, -exponent);
    }
    Rational acc(1), b = base;
    long e = exponent;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

namespace {

// Extracts square factors: d = s^2 * d' with d' squarefree-ish (trial
// division; inputs here are small user-supplied radicands).
void reduce_radicand(Integer& d, Rational& b) {
    Integer s = 1;
    for (Integer f = 2; f * f <= d; ++f) {
        while (d % (f * f) == 0) {
            d /= f * f;
            s *= f;
        }
    }
    b *= Rational(s);
}

}  // namespace

Scalar Scalar::from_rational(Rational r) {
    Scalar s;
    s.form_ = Form::rational;
    s.a_ = std::move(r);
    return s;
}

Scalar Scalar::make_surd(Rational a, Rational b, Integer d) {
    if (d < 0) throw std::invalid_argument("surd radicand must be nonnegative");
    reduce_radicand(d, b);
    if (b == 0 || d <= 1) {
        // sqrt(0)=0, sqrt(1)=1: rational after all
        Rational v = a + (d == 1 ? b : Rational(0));
        return from_rational(v);
    }
    Scalar s;
    s.form_ = Form::surd;
    s.a_ = std::move(a);
    s.b_ = std::move(b);
    s.d_ = std::move(d);
    return s;
}

Scalar Scalar::from_real(Real v, bool known_irrational) {
    Scalar s;
    s.form_ = Form::decimal;
    s.dec_ = std::move(v);
    s.known_irrational_ = known_irrational;
    return s;
}

bool Scalar::provably_irrational() const {
    if (form_ == Form::surd) return true;
    if (form_ == Form::decimal) return known_irrational_;
    return false;
}

const Rational& Scalar::rational() const {
    if (form_ != Form::rational) throw std::logic_error("Scalar: not an exact rational");
    return a_;
}

Real Scalar::value() const {
    switch (form_) {
        case Form::rational: return to_real(a_);
        case Form::surd: return to_real(a_) + to_real(b_) * sqrt(Real(d_));
        case Form::decimal: return dec_;
    }
    return Real(0);
}

int Scalar::sign() const {
    if (form_ == Form::rational) return a_.sign();
    Real v = value();
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

Scalar Scalar::operator-() const {
    switch (form_) {
        case Form::rational: return from_rational(-a_);
        case Form::surd: return make_surd(-a_, -b_, d_);
        case Form::decimal: return from_real(-dec_, known_irrational_);
    }
    return {};
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (form_ == Form::rational && o.form_ == Form::rational)
        return from_rational(a_ + o.a_);
    if (form_ == Form::rational && o.form_ == Form::surd)
        return make_surd(a_ + o.a_, o.b_, o.d_);
    if (form_ == Form::surd && o.form_ == Form::rational)
        return make_surd(a_ + o.a_, b_, d_);
    if (form_ == Form::surd && o.form_ == Form::surd && d_ == o.d_)
        return make_surd(a_ + o.a_, b_ + o.b_, d_);
    return from_real(value() + o.value());
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (form_ == Form::rational && o.form_ == Form::rational)
        return from_rational(a_ * o.a_);
    if (form_ == Form::rational && o.form_ == Form::surd)
        return make_surd(a_ * o.a_, a_ * o.b_, o.d_);
    if (form_ == Form::surd && o.form_ == Form::rational)
        return make_surd(a_ * o.a_, b_ * o.a_, d_);
    if (form_ == Form::surd && o.form_ == Form::surd && d_ == o.d_)
        return make_surd(a_ * o.a_ + b_ * o.b_ * Rational(d_), a_ * o.b_ + b_ * o.a_, d_);
    return from_real(value() * o.value());
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.form_ == Form::rational) {
        if (o.a_ == 0) throw std::domain_error("Scalar: division by zero");
        return *this * from_rational(Rational(1) / o.a_);
    }
    if (o.form_ == Form::surd) {
        // 1/(a+b*sqrt(d)) = (a-b*sqrt(d)) / (a^2 - b^2 d)
        Rational n = o.a_ * o.a_ - o.b_ * o.b_ * Rational(o.d_);
        if (n == 0) throw std::domain_error("Scalar: division by zero");
        Scalar inv = make_surd(o.a_ / n, -o.b_ / n, o.d_);
        return *this * inv;
    }
    Real v = o.value();
    if (v == 0) throw std::domain_error("Scalar: division by zero");
    return from_real(value() / v);
}

bool Scalar::operator==(const Scalar& o) const {
    if (form_ == Form::rational && o.form_ == Form::rational) return a_ == o.a_;
    if (form_ == Form::surd && o.form_ == Form::surd)
        return a_ == o.a_ && b_ == o.b_ && d_ == o.d_;
    return value() == o.value();
}

std::string Scalar::str() const {
    std::ostringstream out;
    switch (form_) {
        case Form::rational: out << a_; break;
        case Form::surd:
            out << a_ << (b_ >= 0 ? "+" : "") << b_ << "*sqrt(" << d_ << ")";
            break;
        case Form::decimal: out << dec_.str(20); break;
    }
    return out.str();
}

bool rationally_independent_with_one(const Scalar& x, const Scalar& y, bool* exact) {
    if (exact) *exact = false;
    auto form = [](const Scalar& s) { return s.form(); };
    if (form(x) == Scalar::Form::rational || form(y) == Scalar::Form::rational) {
        if (exact) *exact = true;
        return false;  // 1 and a rational are already dependent
    }
    if (form(x) == Scalar::Form::surd && form(y) == Scalar::Form::surd) {
        if (exact) *exact = true;
        if (x.surd_d() != y.surd_d()) return true;   // distinct quadratic fields
        return false;  // same field: 1, x, y always rationally dependent
    }
    // Decimal forms: heuristic probe, x, y, and x/y near a small rational?
    const Real vx = x.value(), vy = y.value();
    auto near_rational = [](const Real& v) {
        for (long den = 1; den <= 64; ++den) {
            Real scaled = v * den;
            Real nearest = floor(scaled + Real(0.5));
            if (abs(scaled - nearest) < Real(1e-30)) return true;
        }
        return false;
    };
    if (near_rational(vx) || near_rational(vy) || (vy != 0 && near_rational(vx / vy)))
        return false;
    return true;
}

Scalar cf_value(const ContinuedFraction& cf) {
    if (cf.head.empty() && cf.period.empty())
        throw std::invalid_argument("empty continued fraction");
    for (std::size_t i = 0; i < cf.head.size(); ++i)
        if (i > 0 && cf.head[i] <= 0)
            throw std::invalid_argument("continued fraction coefficients must be positive");
    for (const auto& a : cf.period)
        if (a <= 0) throw std::invalid_argument("periodic coefficients must be positive");

    Scalar tail;
    if (cf.period.empty()) {
        if (cf.head.empty()) throw std::invalid_argument("empty continued fraction");
        // finite fraction evaluated back to front
        Rational v(cf.head.back());
        for (std::size_t i = cf.head.size() - 1; i-- > 0;)
            v = Rational(cf.head[i]) + Rational(1) / v;
        return Scalar::from_rational(v);
    }
    // t = [b1,...,bk; t]  =>  t = (A t + B)/(C t + D), solve C t^2 + (D-A) t - B = 0.
    Integer A = 1, B = 0, C = 0, D = 1;
    for (const auto& b : cf.period) {
        // multiply by [[b,1],[1,0]]
        Integer A2 = A * b + B, B2 = A, C2 = C * b + D, D2 = C;
        A = A2;
        B = B2;
        C = C2;
        D = D2;
    }
    if (C == 0) throw std::invalid_argument("degenerate periodic part");
    Integer disc = (D - A) * (D - A) + 4 * B * C;
    if (disc <= 0) throw std::invalid_argument("degenerate periodic part");
    // t = ((A-D) + sqrt(disc)) / (2C), taking the positive root
    tail = Scalar::make_surd(Rational(A - D) / Rational(2 * C),
                             Rational(1) / Rational(2 * C), disc);
    if (tail.sign() <= 0)
        tail = Scalar::make_surd(Rational(A - D) / Rational(2 * C),
                                 Rational(-1) / Rational(2 * C), disc);

    Scalar v = tail;
    for (std::size_t i = cf.head.size(); i-- > 0;)
        v = Scalar::from_rational(Rational(cf.head[i])) + Scalar::from_rational(Rational(1)) / v;
    return v;
}

std::vector<std::pair<Integer, Integer>> convergents(const Real& x, int count) {
    std::vector<std::pair<Integer, Integer>> out;
    Integer p0 = 1, q0 = 0;  // p_{-1}, q_{-1}
    Integer p1 = 0, q1 = 1;  // p_{-2}... standard recurrence seeds
    Real rem = x;
    for (int i = 0; i < count; ++i) {
        Real fl = floor(rem);
        Integer a = fl.convert_to<Integer>();
        Integer p = a * p0 + p1;
        Integer q = a * q0 + q1;
        out.emplace_back(p, q);
        p1 = p0;
        q1 = q0;
        p0 = p;
        q0 = q;
        Real frac = rem - fl;
        // stop once the remainder is below working precision
        if (frac < Real("1e-35")) break;
        rem = Real(1) / frac;
    }
    return out;
}

bool bounded_partial_quotients(const std::vector<Integer>& coefficients,
                               const Integer& bound) {
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (coefficients[i] <= 0 && i > 0)
            throw std::invalid_argument("partial quotients must be positive");
        if (coefficients[i] > bound) return false;
    }
    return true;
}

// --- expression parser -----------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error in \"" + s + "\": " + what);
    }

    Scalar parse_expr() {
        Scalar v = parse_term();
        for (;;) {
            if (eat('+'))
                v = v + parse_term();
            else if (eat('-'))
                v = v - parse_term();
            else
                return v;
        }
    }
    Scalar parse_term() {
        Scalar v = parse_factor();
        for (;;) {
            if (eat('*'))
                v = v * parse_factor();
            else if (eat('/'))
                v = v / parse_factor();
            else
                return v;
        }
    }
    Scalar parse_factor() {
        skip_ws();
        if (eat('-')) return -parse_factor();
        if (eat('+')) return parse_factor();
        if (eat('(')) {
            Scalar v = parse_expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        return parse_atom();
    }
    Scalar parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (s.compare(pos, 5, "sqrt(") == 0) {
            pos += 5;
            Integer d = parse_integer();
            if (!eat(')')) fail("missing ')' after sqrt");
            return Scalar::make_surd(Rational(0), Rational(1), d);
        }
        if (s.compare(pos, 2, "pi") == 0) {
            pos += 2;
            return Scalar::from_real(pi_value(), /*known_irrational=*/true);
        }
        if (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')
            return parse_number();
        fail("unexpected character");
    }
    Integer parse_integer() {
        skip_ws();
        bool neg = eat('-');
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        Integer v(s.substr(start, pos - start));
        return neg ? -v : v;
    }
    Scalar parse_number() {
        std::size_t start = pos;
        bool has_dot = false, has_exp = false;
        while (pos < s.size()) {
            char c = s[pos];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                ++pos;
            } else if (c == '.' && !has_dot && !has_exp) {
                has_dot = true;
                ++pos;
            } else if ((c == 'e' || c == 'E') && !has_exp && pos + 1 < s.size()) {
                has_exp = true;
                ++pos;
                if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
            } else {
                break;
            }
        }
        std::string tok = s.substr(start, pos - start);
        if (tok.empty()) fail("expected number");
        if (!has_dot && !has_exp) return Scalar::from_rational(Rational(Integer(tok)));
        // decimal literal: keep it exact as a rational when there is no exponent
        if (!has_exp) {
            auto dot = tok.find('.');
            std::string digits = tok.substr(0, dot) + tok.substr(dot + 1);
            std::size_t frac_len = tok.size() - dot - 1;
            Integer num(digits.empty() ? "0" : digits);
            Integer den = 1;
            for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
            return Scalar::from_rational(Rational(num, den));
        }
        return Scalar::from_real(Real(tok));
    }
};

ContinuedFraction parse_cf_body(const std::string& body) {
    ContinuedFraction cf;
    bool in_period = false;
    std::string tok;
    auto flush = [&](bool at_end) {
        if (tok.empty()) {
            if (at_end) return;
            throw std::invalid_argument("cf: empty coefficient");
        }
        Integer v(tok);
        (in_period ? cf.period : cf.head).push_back(v);
        tok.clear();
    };
    for (char c : body) {
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            tok += c;
        } else if (c == ',') {
            flush(false);
        } else if (c == '(') {
            if (!tok.empty()) flush(false);
            if (in_period) throw std::invalid_argument("cf: nested '('");
            in_period = true;
        } else if (c == ')') {
            flush(true);
            if (!in_period) throw std::invalid_argument("cf: stray ')'");
            in_period = false;
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            throw std::invalid_argument(std::string("cf: unexpected character '") + c + "'");
        }
    }
    flush(true);
    return cf;
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
    std::string t = text;
    // trim
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    if (t.empty()) throw std::invalid_argument("empty scalar");
    if (t.rfind("cf:", 0) == 0) return cf_value(parse_cf_body(t.substr(3)));
    Parser p(t);
    Scalar v = p.parse_expr();
    p.skip_ws();
    if (p.pos != t.size()) p.fail("trailing characters");
    return v;
}

}  // namespace kmslab
