#include "aslforge/enumerate.hpp"

#include <gmpxx.h>

#include "aslforge/errors.hpp"

namespace aslforge {

namespace {

void fill(std::size_t var, std::size_t num_vars, unsigned left, std::vector<Factor>& current,
          std::vector<Monomial>& out) {
  if (var + 1 == num_vars) {
    std::vector<Factor> f = current;
    if (left > 0) f.push_back({static_cast<VarIndex>(var), left});
    out.push_back(Monomial::from_factors(std::move(f)));
    return;
  }
  for (unsigned e = left + 1; e-- > 0;) {
    if (e > 0) current.push_back({static_cast<VarIndex>(var), e});
    fill(var + 1, num_vars, left - e, current, out);
    if (e > 0) current.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  out.reserve(count_monomials_of_degree(num_vars, degree));
  std::vector<Factor> current;
  fill(0, num_vars, degree, current, out);
  return out;
}

std::uint64_t count_monomials_of_degree(std::size_t num_vars, unsigned degree) {
  if (num_vars == 0) return degree == 0 ? 1 : 0;
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), degree + num_vars - 1, num_vars - 1);
  if (!c.fits_ulong_p()) throw UsageError("monomial count overflows 64 bits");
  return c.get_ui();
}

}  // namespace aslforge
