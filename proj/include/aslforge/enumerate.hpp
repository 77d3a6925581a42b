#pragma once

#include <cstdint>
#include <vector>

#include "aslforge/monomial.hpp"

namespace aslforge {

/// All monomials of total degree exactly `degree` in variables
/// 0..num_vars-1, in a fixed order (lexicographic on exponent vectors,
/// largest exponent of variable 0 first).
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree);

/// C(degree + num_vars - 1, num_vars - 1); throws UsageError on overflow.
std::uint64_t count_monomials_of_degree(std::size_t num_vars, unsigned degree);

}  // namespace aslforge
