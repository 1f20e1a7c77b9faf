#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "kmslab/biseq.hpp"

namespace kmslab {

/// Measurable rectangle: finitely many pinned bits, plus an optional level
/// for cylinders in the product of the sequence space with the integers.
/// Conflicting constraints normalize to the empty cylinder.
struct Cylinder {
    std::map<long long, int> constraints;
    std::optional<long long> level;
    bool contradictory = false;

    Cylinder() = default;

    Cylinder& require(long long k, int bit) {
        auto [it, inserted] = constraints.emplace(k, bit);
        if (!inserted && it->second != bit) contradictory = true;
        return *this;
    }
    Cylinder& at_level(long long n) {
        level = n;
        return *this;
    }

    /// Image under tau^k; the shift is a homeomorphism, so the image of a
    /// cylinder is the cylinder with every key moved by +k.
    Cylinder shifted(long long k) const {
        Cylinder out;
        out.level = level;
        out.contradictory = contradictory;
        for (auto [idx, bit] : constraints) out.constraints.emplace(idx + k, bit);
        return out;
    }

    bool contains(const BiSeq& x) const {
        if (contradictory) return false;
        for (auto [idx, bit] : constraints)
            if (x.bit(idx) != bit) return false;
        return true;
    }

    long long window() const {
        long long w = 0;
        for (auto [idx, bit] : constraints) w = std::max(w, idx < 0 ? -idx : idx);
        return w;
    }

    std::string str() const {
        std::ostringstream out;
        out << "{";
        bool first = true;
        for (auto [idx, bit] : constraints) {
            if (!first) out << ",";
            out << idx << ":" << bit;
            first = false;
        }
        out << "}";
        if (level) out << "@" << *level;
        if (contradictory) out << " (empty)";
        return out.str();
    }
};

}  // namespace kmslab
