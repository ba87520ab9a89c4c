#include "ostro/polyexact.hpp"

#include <vector>

#include "ostro/error.hpp"

namespace ostro {

bool family_brute_check(const CubicCoeffs<Rational>& coeffs, const Rational& alpha,
                        const Rational& beta) {
  return reduction_residual_poly(coeffs.profile(), coeffs.forcing(), alpha, beta).is_zero();
}

std::set<int> balance_exponents(int n_max) {
  if (n_max < 1) throw Error(ErrorKind::InvalidArgument, "n_max must be at least 1");
  std::set<int> out;
  for (int n = 1; n <= n_max; ++n) {
    // V = z^n: alpha V'''' survives for n >= 4, V'V'' for n >= 2, beta V always.
    std::vector<int> exps;
    if (n >= 4) exps.push_back(n - 4);
    if (n >= 2) exps.push_back(2 * n - 3);
    exps.push_back(n);
    bool balanced = false;
    for (std::size_t i = 0; i < exps.size(); ++i)
      for (std::size_t j = i + 1; j < exps.size(); ++j) balanced |= exps[i] == exps[j];
    if (balanced) out.insert(n);
  }
  return out;
}

}  // namespace ostro
