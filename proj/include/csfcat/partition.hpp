#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "csfcat/errors.hpp"

namespace csfcat {

/**
 * Integer partition: a weakly decreasing sequence of positive parts.
 * The empty partition (weight 0) is allowed; it acts as the neutral
 * element under part-merging products.
 */
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_) {
            if (p < 1) throw Error("partition parts must be positive");
        }
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    }

    static Partition single(int k) { return Partition({k}); }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }

    int weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    int min_part() const { return parts_.empty() ? 0 : parts_.back(); }

    // Copy with one extra part k, keeping the decreasing order.
    Partition with_part(int k) const {
        Partition r = *this;
        auto pos = std::lower_bound(r.parts_.begin(), r.parts_.end(), k,
                                    std::greater<int>());
        r.parts_.insert(pos, k);
        return r;
    }

    // Multiset union of parts (the key product of power-sum monomials).
    Partition merged(const Partition& other) const {
        std::vector<int> all;
        all.reserve(parts_.size() + other.parts_.size());
        std::merge(parts_.begin(), parts_.end(), other.parts_.begin(),
                   other.parts_.end(), std::back_inserter(all),
                   std::greater<int>());
        Partition r;
        r.parts_ = std::move(all);
        return r;
    }

    bool operator==(const Partition& other) const = default;

    // Term order used throughout serialization: compare the multisets
    // smallest part first. For same-weight keys this reproduces the
    // conventional display order of partition-indexed monomials.
    bool operator<(const Partition& other) const {
        return std::lexicographical_compare(parts_.rbegin(), parts_.rend(),
                                            other.parts_.rbegin(),
                                            other.parts_.rend());
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        s += ']';
        return s;
    }

private:
    std::vector<int> parts_; // weakly decreasing
};

} // namespace csfcat

template <>
struct std::hash<csfcat::Partition> {
    std::size_t operator()(const csfcat::Partition& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int part : p.parts()) {
            h ^= static_cast<std::size_t>(part);
            h *= 1099511628211ull;
        }
        return h;
    }
};
