#include "kmslab/biseq.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace kmslab {

namespace {

long long mod(long long k, long long p) {
    long long r = k % p;
    return r < 0 ? r + p : r;
}

// Smallest p such that w is (w[0..p))^{|w|/p}.
std::size_t primitive_period(const std::string& w) {
    for (std::size_t p = 1; p <= w.size(); ++p) {
        if (w.size() % p != 0) continue;
        bool ok = true;
        for (std::size_t i = p; i < w.size() && ok; ++i) ok = w[i] == w[i - p];
        if (ok) return p;
    }
    return w.size();
}

void check_word(const std::string& w, const char* what) {
    if (w.empty()) throw std::invalid_argument(std::string(what) + " word must be nonempty");
    for (char c : w)
        if (c != '0' && c != '1')
            throw std::invalid_argument(std::string(what) + " word must be binary");
}

long long ones_in_word(const std::string& w, std::size_t from, std::size_t to) {
    long long n = 0;
    for (std::size_t i = from; i < to; ++i) n += w[i] == '1';
    return n;
}

// Ones among n consecutive cyclic letters of w starting at phase o.
long long ones_cyclic(const std::string& w, long long o, long long n) {
    if (n <= 0) return 0;
    const long long p = static_cast<long long>(w.size());
    const long long total = ones_in_word(w, 0, w.size());
    long long full = n / p, rest = n % p, count = full * total;
    for (long long i = 0; i < rest; ++i) count += w[static_cast<std::size_t>(mod(o + i, p))] == '1';
    return count;
}

}  // namespace

BiSeq::BiSeq(std::string left, std::string core, long long lo, std::string right)
    : left_(std::move(left)), core_(std::move(core)), right_(std::move(right)), lo_(lo) {
    hi_ = lo_ + static_cast<long long>(core_.size());
    validate();
    canonicalize();
}

void BiSeq::validate() const {
    check_word(left_, "left");
    check_word(right_, "right");
    for (char c : core_)
        if (c != '0' && c != '1') throw std::invalid_argument("core must be binary");
    if (lo_ > 0 || hi_ < 0)
        throw std::invalid_argument("core window must contain position 0");
}

void BiSeq::canonicalize() {
    left_ = left_.substr(left_.size() - primitive_period(left_));  // keep the anchor at lo
    right_ = right_.substr(0, primitive_period(right_));

    // reduce left to its primitive rotation anchored at lo: primitive_period
    // gives length; the anchored word is the last p letters only if taken
    // cyclically, which substr above already respects since w = (prefix)^k.

    // absorb core into the right tail
    while (hi_ > 0 && !core_.empty() && core_.back() == right_.back()) {
        core_.pop_back();
        --hi_;
        std::rotate(right_.rbegin(), right_.rbegin() + 1, right_.rend());  // rotate right
    }
    // absorb core into the left tail
    while (lo_ < 0 && !core_.empty() && core_.front() == left_.front()) {
        core_.erase(core_.begin());
        ++lo_;
        std::rotate(left_.begin(), left_.begin() + 1, left_.end());  // rotate left
    }
}

int BiSeq::bit(long long k) const {
    if (k < lo_) return left_[static_cast<std::size_t>(mod(k - lo_, static_cast<long long>(left_.size())))] - '0';
    if (k >= hi_) return right_[static_cast<std::size_t>(mod(k - hi_, static_cast<long long>(right_.size())))] - '0';
    return core_[static_cast<std::size_t>(k - lo_)] - '0';
}

long long BiSeq::ones_in(long long a, long long b) const {
    if (b <= a) return 0;
    long long count = 0;
    // left-tail part: [a, min(b, lo))
    if (a < lo_) {
        long long end = std::min(b, lo_);
        count += ones_cyclic(left_, mod(a - lo_, static_cast<long long>(left_.size())), end - a);
    }
    // core part
    long long ca = std::max(a, lo_), cb = std::min(b, hi_);
    if (ca < cb)
        count += ones_in_word(core_, static_cast<std::size_t>(ca - lo_), static_cast<std::size_t>(cb - lo_));
    // right-tail part: [max(a, hi), b)
    if (b > hi_) {
        long long start = std::max(a, hi_);
        count += ones_cyclic(right_, mod(start - hi_, static_cast<long long>(right_.size())), b - start);
    }
    return count;
}

BiSeq BiSeq::shifted(long long k) const {
    std::string left = left_, core = core_, right = right_;
    long long lo = lo_ + k, hi = hi_ + k;
    // restore lo <= 0 <= hi by pulling letters out of the tails
    while (lo > 0) {
        core.insert(core.begin(), left.back());
        std::rotate(left.rbegin(), left.rbegin() + 1, left.rend());
        --lo;
    }
    while (hi < 0) {
        core.push_back(right.front());
        std::rotate(right.begin(), right.begin() + 1, right.end());
        ++hi;
    }
    return BiSeq(std::move(left), std::move(core), lo, std::move(right));
}

std::optional<long long> BiSeq::minimal_period() const {
    const long long p = static_cast<long long>(right_.size());
    if (static_cast<long long>(left_.size()) != p) return std::nullopt;
    for (long long k = lo_ - p; k < hi_ + p; ++k)
        if (bit(k) != bit(k + p)) return std::nullopt;
    return p;
}

bool BiSeq::operator==(const BiSeq& o) const {
    return lo_ == o.lo_ && hi_ == o.hi_ && core_ == o.core_ && left_ == o.left_ &&
           right_ == o.right_;
}

std::string BiSeq::str() const {
    std::string out = "(" + left_ + ")*";
    std::string lcore = core_.substr(0, static_cast<std::size_t>(-lo_));
    std::string rcore = core_.substr(static_cast<std::size_t>(-lo_));
    if (!lcore.empty()) out += " " + lcore;
    out += " . ";
    if (!rcore.empty()) out += rcore + " ";
    out += "(" + right_ + ")*";
    return out;
}

BiSeq BiSeq::parse(const std::string& text) {
    // tokens: "(bits)*", bare bits, "."
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_bits = [&] {
        std::string bits;
        while (i < text.size() && (text[i] == '0' || text[i] == '1')) bits += text[i++];
        return bits;
    };
    auto read_tail = [&](const char* what) {
        skip_ws();
        if (i >= text.size() || text[i] != '(')
            throw std::invalid_argument(std::string("expected (word)* for ") + what);
        ++i;
        std::string w = read_bits();
        if (i + 1 >= text.size() || text[i] != ')' || text[i + 1] != '*')
            throw std::invalid_argument(std::string("expected (word)* for ") + what);
        i += 2;
        check_word(w, what);
        return w;
    };

    std::string left = read_tail("left");
    skip_ws();
    std::string lcore = read_bits();
    skip_ws();
    if (i >= text.size() || text[i] != '.')
        throw std::invalid_argument("expected '.' marking position 0");
    ++i;
    skip_ws();
    std::string rcore = read_bits();
    std::string right = read_tail("right");
    skip_ws();
    if (i != text.size()) throw std::invalid_argument("trailing characters in sequence");

    return BiSeq(std::move(left), lcore + rcore, -static_cast<long long>(lcore.size()),
                 std::move(right));
}

BiSeq BiSeq::constant(int b) {
    std::string w(1, static_cast<char>('0' + (b ? 1 : 0)));
    return BiSeq(w, "", 0, w);
}

BiSeq BiSeq::step() { return BiSeq("0", "", 0, "1"); }

}  // namespace kmslab
