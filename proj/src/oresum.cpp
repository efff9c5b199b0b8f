#include "spw/oresum.hpp"

#include "spw/symplectic.hpp"

#include <stdexcept>

namespace spw {

Integer commutator_count_pairs(const FiniteMatrixGroup& g, int element) {
  if (g.order() > kPairsLimit) throw std::length_error("group too large for the all-pairs count");
  long long count = 0;
  const int n = static_cast<int>(g.order());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      count += g.multiply(g.multiply(x, y), g.multiply(g.inverse(x), g.inverse(y))) == element;
  return count;
}

Integer commutator_count(const FiniteMatrixGroup& g, int element) {
  if (g.order() > kCentralizerLimit) throw std::length_error("group too large for the centralizer count");
  // x y x^-1 y^-1 = g  <=>  y x^-1 y^-1 = x^-1 g
  Integer count = 0;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    const int xi = g.inverse(x);
    const int cls = g.class_of(xi);
    if (g.class_of(g.multiply(xi, element)) == cls) count += g.centralizer_order(cls);
  }
  return count;
}

CycloNum frobenius_count(const CharacterTable& t, int cls) {
  if (cls < 0 || cls >= static_cast<int>(t.group->classes().size())) throw std::out_of_range("class not found");
  CycloNum s = 0;
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i) s += t.irreducibles[i][cls] / Rational(t.degrees[i]);
  return s;
}

CycloNum frobenius_count(const CharacterTable& t, const FqMatrix& g) {
  const int idx = t.group->index_of(g);
  if (idx < 0) throw std::out_of_range("class not found");
  return frobenius_count(t, t.group->class_of(idx));
}

int log_bucket(long long dim, int q) {
  if (dim < 1 || q < 2) throw std::invalid_argument("log_bucket needs dim >= 1, q >= 2");
  // b with q^(2b-1) <= dim^2 < q^(2b+1)
  const Integer d2 = Integer(dim) * Integer(dim);
  int b = 0;
  Integer upper = q;  // q^(2b+1)
  while (!(d2 < upper)) {
    ++b;
    upper *= Integer(q * q);
  }
  return b;
}

bool OreReport::ok() const {
  if (!consistent) return false;
  for (const auto& r : per_class)
    if (!r.bound_ok) return false;
  return true;
}

OreReport uniformity_report(const CharacterTable& t, int q, int n, const std::string& group_id, bool brute) {
  const FiniteMatrixGroup& g = *t.group;
  const Field& f = Field::get(q);
  OreReport rep;
  rep.group_id = group_id;
  rep.order = g.order();
  rep.class_count = g.classes().size();
  const bool run_brute = brute && g.order() <= kCentralizerLimit;

  const Integer others(static_cast<long long>(rep.class_count) - 1);
  for (int c = 0; c < static_cast<int>(rep.class_count); ++c) {
    OreClassRow row;
    row.cls = c;
    row.rep = g.element(g.classes()[c].rep).str();
    row.size = g.classes()[c].size;
    row.frobenius = frobenius_count(t, c);
    row.deviation = row.frobenius - CycloNum(1);
    Rational dev = row.deviation.to_rational();
    row.deviation_float = dev.to_double();
    if (c != 0) {
      Rational bound = Rational(others) * Rational(g.centralizer_order(c) - Integer(1));
      row.bound_ok = dev * dev <= bound;
    }
    if (run_brute) {
      row.brute_count = commutator_count(g, g.classes()[c].rep);
      rep.consistent = rep.consistent && row.frobenius * Rational(static_cast<long long>(rep.order)) ==
                                             CycloNum(Rational(*row.brute_count));
    }
    rep.per_class.push_back(std::move(row));
  }

  FqMatrix e11(f, n, n);
  e11.set(0, 0, 1);
  rep.transvection_class = g.class_of(u_elem(e11));
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
    OreRatioRow r;
    r.irrep = static_cast<int>(i);
    r.dim = t.degrees[i];
    r.bucket = log_bucket(r.dim, q);
    r.ratio = t.irreducibles[i][rep.transvection_class] / Rational(r.dim);
    r.ratio_float = format_complex(r.ratio.to_complex<double>());
    rep.ratios.push_back(std::move(r));
  }
  return rep;
}

}  // namespace spw
