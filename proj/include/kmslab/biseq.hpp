#pragma once

#include <optional>
#include <string>

namespace kmslab {

/// Finitely described point of the two-sided binary sequence space: an
/// eventually periodic left tail, a finite core on the index window
/// [lo, hi) with lo <= 0 <= hi, and an eventually periodic right tail.
///
/// bit(k) reads the left word cyclically for k < lo (anchored so that the
/// word's last letter sits at lo-1), the core for lo <= k < hi, and the
/// right word cyclically for k >= hi (first letter at hi).
///
/// Instances are kept in canonical form: primitive tail words, core
/// absorbed into the tails as far as the lo <= 0 <= hi constraint allows.
/// Two sequences are equal as functions iff their canonical forms match.
class BiSeq {
public:
    BiSeq(std::string left, std::string core, long long lo, std::string right);

    /// Text syntax: "(wL)* bits . bits (wR)*" with '.' marking position 0,
    /// e.g. "(0)* . (1)*" for bit(k)=1 iff k>=0.
    static BiSeq parse(const std::string& text);
    static BiSeq constant(int b);
    static BiSeq step();  // 0 for k<0, 1 for k>=0

    int bit(long long k) const;
    /// Number of ones on the window [a, b); closed form over the tails.
    long long ones_in(long long a, long long b) const;

    /// tau^k: result.bit(j) == this->bit(j-k).
    BiSeq shifted(long long k) const;

    /// Minimal global period, or nullopt when the sequence is aperiodic.
    std::optional<long long> minimal_period() const;

    bool operator==(const BiSeq& o) const;

    std::string str() const;

    const std::string& left_word() const { return left_; }
    const std::string& right_word() const { return right_; }
    const std::string& core() const { return core_; }
    long long lo() const { return lo_; }
    long long hi() const { return hi_; }

private:
    std::string left_, core_, right_;
    long long lo_ = 0, hi_ = 0;

    void validate() const;
    void canonicalize();
};

inline BiSeq shift(const BiSeq& x, long long k) { return x.shifted(k); }

}  // namespace kmslab
