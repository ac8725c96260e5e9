#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "csfcat/errors.hpp"

namespace csfcat {

/**
 * Integer composition: a nonempty ordered sequence of positive parts.
 * Together with the composition product these form a non-commutative
 * monoid whose identity is the one-part composition (1).
 */
class Composition {
public:
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw BadComposition("composition must be nonempty");
        for (int p : parts_) {
            if (p < 1) throw BadComposition("composition parts must be positive");
        }
    }

    static Composition identity() { return Composition({1}); }

    static Composition all_ones(int length) {
        return Composition(std::vector<int>(length, 1));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }

    int weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    bool is_identity() const { return parts_.size() == 1 && parts_[0] == 1; }

    bool is_all_ones() const {
        return std::all_of(parts_.begin(), parts_.end(),
                           [](int p) { return p == 1; });
    }

    bool operator==(const Composition&) const = default;

    bool operator<(const Composition& other) const {
        return parts_ < other.parts_;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

private:
    std::vector<int> parts_;
};

inline Composition concat(const Composition& a, const Composition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Composition(std::move(parts));
}

// Concatenation that merges the adjoining parts into their sum.
inline Composition near_concat(const Composition& a, const Composition& b) {
    std::vector<int> parts = a.parts();
    parts.back() += b.parts().front();
    parts.insert(parts.end(), b.parts().begin() + 1, b.parts().end());
    return Composition(std::move(parts));
}

inline Composition near_concat_power(const Composition& a, int k) {
    if (k < 1) throw BadExponent("near-concatenation power needs k >= 1");
    std::vector<int> parts = a.parts();
    for (int i = 1; i < k; ++i) {
        parts.back() += a.parts().front();
        parts.insert(parts.end(), a.parts().begin() + 1, a.parts().end());
    }
    return Composition(std::move(parts));
}

// Monoid product: the concatenation of near-concatenation powers of b,
// one per part of a.
inline Composition compose(const Composition& a, const Composition& b) {
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(a.weight()) * b.parts().size());
    for (int k : a.parts()) {
        Composition block = near_concat_power(b, k);
        if (!parts.empty()) {
            parts.insert(parts.end(), block.parts().begin(), block.parts().end());
        } else {
            parts = block.parts();
        }
    }
    return Composition(std::move(parts));
}

inline Composition reverse_composition(const Composition& a) {
    std::vector<int> parts(a.parts().rbegin(), a.parts().rend());
    return Composition(std::move(parts));
}

/**
 * All coarsenings, one per subset of internal boundaries merged; the
 * output order follows the merge bitmask, so it is deterministic and
 * starts with the composition itself (empty mask).
 */
inline std::vector<Composition> coarsenings(const Composition& a) {
    if (a.length() > 24) {
        throw BoundExceeded("coarsening enumeration capped at length 24, got " +
                            std::to_string(a.length()));
    }
    int boundaries = a.length() - 1;
    std::vector<Composition> result;
    result.reserve(std::size_t{1} << boundaries);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << boundaries); ++mask) {
        std::vector<int> parts{a.parts()[0]};
        for (int i = 0; i < boundaries; ++i) {
            if (mask & (std::uint32_t{1} << i)) {
                parts.back() += a.parts()[i + 1];
            } else {
                parts.push_back(a.parts()[i + 1]);
            }
        }
        result.emplace_back(std::move(parts));
    }
    return result;
}

// True when b can be obtained by merging consecutive parts of a:
// equivalently, b's partial sums all occur among a's.
inline bool refines(const Composition& a, const Composition& b) {
    if (a.weight() != b.weight()) return false;
    std::size_t i = 0;
    int run = 0;
    for (int target : b.parts()) {
        while (i < a.parts().size() && run < target) run += a.parts()[i++];
        if (run != target) return false;
        run = 0;
    }
    return i == a.parts().size();
}

/// All 2^(n-1) compositions of n in lexicographic order.
inline std::vector<Composition> compositions_of(int n, int bound = 24) {
    if (n < 1) throw BoundExceeded("compositions need n >= 1");
    if (n > bound) {
        throw BoundExceeded("composition enumeration capped at n = " +
                            std::to_string(bound) + ", got " +
                            std::to_string(n));
    }
    std::vector<Composition> result;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            result.push_back(Composition(parts));
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            parts.push_back(p);
            self(self, remaining - p);
            parts.pop_back();
        }
    };
    rec(rec, n);
    return result;
}

inline Composition parse_composition(const std::string& text) {
    std::vector<int> parts;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i == text.size()) break;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        std::string token = text.substr(i, j - i);
        try {
            std::size_t pos = 0;
            int value = std::stoi(token, &pos);
            if (pos != token.size()) throw std::invalid_argument(token);
            parts.push_back(value);
        } catch (const std::exception&) {
            throw ParseError("bad composition part \"" + token + "\" in \"" +
                             text + "\"");
        }
        i = j;
    }
    if (parts.empty()) {
        throw ParseError("empty composition literal \"" + text + "\"");
    }
    return Composition(std::move(parts));
}

} // namespace csfcat
