#include "spw/gauss_sum.hpp"

#include <stdexcept>

namespace spw {

CycloNum gauss_sum(const FqMatrix& b, FqRaw a) {
  if (!b.is_symmetric()) throw std::invalid_argument("form is not symmetric");
  const Field& f = b.field();
  if (determinant(b) == 0) throw std::domain_error("degenerate form");
  const int n = b.rows();
  const FqRaw c = f.mul(a, f.neg(f.half()));
  std::vector<long long> counts(f.p(), 0);
  std::vector<FqRaw> y(n, 0);
  while (true) {
    FqRaw s = 0;
    for (int i = 0; i < n; ++i) {
      if (y[i] == 0) continue;
      FqRaw row = 0;
      for (int j = 0; j < n; ++j) row = f.add(row, f.mul(b(i, j), y[j]));
      s = f.add(s, f.mul(y[i], row));
    }
    ++counts[f.additive_exponent(c, s)];
    int i = n - 1;
    while (i >= 0 && ++y[i] == f.q()) y[i--] = 0;
    if (i < 0) break;
  }
  std::vector<Rational> coeffs(counts.begin(), counts.end());
  return CycloNum(f.p(), coeffs);
}

}  // namespace spw
