#pragma once

#include <cstdint>

#include "csfcat/composition.hpp"
#include "csfcat/errors.hpp"
#include "csfcat/partition.hpp"
#include "csfcat/sparse_polynomial.hpp"

namespace csfcat {

/**
 * L-polynomial of a composition: one monomial per coarsening, keyed by
 * the coarsening's multiset of parts. The total coefficient mass is
 * 2^(length-1); equal L-polynomials define the equivalence classes that
 * the factorization machinery describes.
 */
inline SparsePolynomial l_polynomial(const Composition& a, int max_length = 30) {
    if (a.length() > max_length) {
        throw BoundExceeded("l_polynomial capped at length " +
                            std::to_string(max_length) + ", got " +
                            std::to_string(a.length()));
    }
    int boundaries = a.length() - 1;
    SparsePolynomial result;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << boundaries); ++mask) {
        std::vector<int> parts{a.parts()[0]};
        for (int i = 0; i < boundaries; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                parts.back() += a.parts()[i + 1];
            } else {
                parts.push_back(a.parts()[i + 1]);
            }
        }
        result.add_term(Partition(std::move(parts)), 1);
    }
    return result;
}

} // namespace csfcat
