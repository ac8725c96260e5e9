#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "csfcat/errors.hpp"
#include "csfcat/partition.hpp"

namespace csfcat {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw CoefficientOverflow("coefficient addition overflow");
    }
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw CoefficientOverflow("coefficient multiplication overflow");
    }
    return r;
}

} // namespace detail

/**
 * Polynomial with exact 64-bit integer coefficients whose monomials are
 * indexed by integer partitions. Zero coefficients are never stored, so
 * map equality is polynomial equality. Iteration follows the partition
 * term order, which makes serialization deterministic.
 */
class SparsePolynomial {
public:
    using TermMap = std::map<Partition, std::int64_t>;
    using const_iterator = TermMap::const_iterator;

    SparsePolynomial() = default;

    static SparsePolynomial from_terms(
        std::initializer_list<std::pair<Partition, std::int64_t>> terms) {
        SparsePolynomial p;
        for (const auto& [key, c] : terms) p.add_term(key, c);
        return p;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }

    std::int64_t coeff(const Partition& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const Partition& key, std::int64_t c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second = detail::checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparsePolynomial negated() const {
        SparsePolynomial r;
        for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
        return r;
    }

    std::int64_t coefficient_sum() const {
        std::int64_t s = 0;
        for (const auto& [key, c] : terms_) s = detail::checked_add(s, c);
        return s;
    }

    bool operator==(const SparsePolynomial& other) const = default;

    // Canonical text form: `c*[a,b,...]` terms joined by ` + `, in the
    // partition term order. The empty polynomial prints as `0`.
    std::string serialize() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [key, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += std::to_string(c);
            s += '*';
            s += key.to_string();
        }
        return s;
    }

private:
    TermMap terms_;
};

inline SparsePolynomial poly_add(const SparsePolynomial& a,
                                 const SparsePolynomial& b) {
    SparsePolynomial r = a;
    for (const auto& [key, c] : b) r.add_term(key, c);
    return r;
}

inline bool poly_equal(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a == b;
}

inline std::string poly_serialize(const SparsePolynomial& p) {
    return p.serialize();
}

// Product under multiset union of partition keys: the monomial product
// when each part stands for one indexed factor.
inline SparsePolynomial poly_product(const SparsePolynomial& a,
                                     const SparsePolynomial& b) {
    SparsePolynomial r;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            r.add_term(ka.merged(kb), detail::checked_mul(ca, cb));
        }
    }
    return r;
}

} // namespace csfcat
