#include "spw/eta.hpp"

#include <stdexcept>
#include <unordered_map>

namespace spw {

OrthogonalData::OrthogonalData(OrthogonalGroup group) : o(std::move(group)) { table = dixon_table(o.group); }

std::unique_ptr<OrthogonalData> orthogonal_data(const Field& f, int k, FormType type) {
  return std::make_unique<OrthogonalData>(build_orthogonal(f, k, type));
}

CycloNum theta_value(const TensorModel& m, const OrthogonalData& o, int tau, const FqMatrix& g) {
  const ClassFunction& chi = o.table.irreducibles.at(tau);
  CycloNum s = 0;
  for (const auto& r : o.o.group.elements()) {
    CycloNum c = chi.at(r);
    if (c.is_zero()) continue;
    s += m.trace_with(g, m.o_action(r)) * c.conj();
  }
  return s / Rational(static_cast<long long>(o.o.group.order()));
}

Integer theta_dim(const TensorModel& m, const OrthogonalData& o, int tau) {
  const ClassFunction& chi = o.table.irreducibles.at(tau);
  CycloNum s = 0;
  for (const auto& r : o.o.group.elements()) s += m.o_action(r).trace() * chi.at(r).conj();
  s /= Rational(static_cast<long long>(o.o.group.order()));
  Rational d = s.to_rational();
  if (!d.is_integer() || d.sign() < 0) throw std::runtime_error("Theta dimension not a non-negative integer");
  return d.num();
}

ClassFunction theta_of_tau(const TensorModel& m, const OrthogonalData& o, int tau, const FiniteMatrixGroup& sp) {
  return class_function(sp, [&](const FqMatrix& g) { return theta_value(m, o, tau, g); });
}

EtaConstituent eta_of_tau(const ClassFunction& theta, const CharacterTable& sp_table, const std::vector<RankRow>& rows,
                          int k, FormType beta_type) {
  std::vector<const RankRow*> by_irrep(sp_table.irreducibles.size(), nullptr);
  for (const auto& r : rows) by_irrep.at(r.irrep) = &r;
  EtaConstituent out;
  int top = 0;
  for (std::size_t i = 0; i < sp_table.irreducibles.size(); ++i) {
    CycloNum ip = inner_product(theta, sp_table.irreducibles[i]);
    if (ip.is_zero()) continue;
    Rational mult = ip.to_rational();
    if (!mult.is_integer() || mult.sign() < 0) throw std::runtime_error("Theta is not a character");
    const RankRow& row = *by_irrep[i];
    if (row.rank.rank > k) throw std::runtime_error("Theta has a constituent above rank k");
    if (row.rank.rank < k) {
      ++out.lower_constituents;
      continue;
    }
    ++top;
    out.irrep = static_cast<int>(i);
    out.mult_in_theta = mult.num();
    auto it = row.mult.find(OrbitLabel{k, beta_type});
    out.beta_orbit_mult = it == row.mult.end() ? Integer(0) : it->second;
  }
  if (top != 1) throw std::runtime_error("Theta has " + std::to_string(top) + " constituents of rank k");
  return out;
}

namespace {

struct Eigenspace {
  FqMatrix beta_t;
  std::vector<uint64_t> members;
  std::unordered_map<uint64_t, int> position;
};

Eigenspace eigenspace_of(const TensorModel& m, const FqMatrix& t) {
  if (rank(t) != m.k()) throw std::invalid_argument("beta_T degenerate");
  Eigenspace e{beta_t(t, m.beta()), {}, {}};
  for (uint64_t i = 0; i < m.dim(); ++i)
    if (beta_t(m.map_at(i), m.beta()) == e.beta_t) {
      e.position[i] = static_cast<int>(e.members.size());
      e.members.push_back(i);
    }
  return e;
}

// trace of delta_T -> chi(det C)^k chi(det r)^n delta_{r T C^-1} on the eigenspace
int joint_trace(const TensorModel& m, const Eigenspace& e, const FqMatrix& r, const FqMatrix& c_inv, int sign) {
  int fixed = 0;
  for (uint64_t idx : e.members) {
    FqMatrix t = m.map_at(idx);
    if (r * t * c_inv == t) ++fixed;
  }
  return sign * fixed;
}

int o_sign(const TensorModel& m, const FqMatrix& r) {
  return m.n() % 2 == 1 && m.field().quadratic_character(determinant(r)) < 0 ? -1 : 1;
}

Integer tau_multiplicity(const std::vector<int>& chi_e, const OrthogonalData& o, int tau) {
  const ClassFunction& chi = o.table.irreducibles.at(tau);
  CycloNum s = 0;
  for (std::size_t i = 0; i < chi_e.size(); ++i)
    if (chi_e[i]) s += chi.at(o.o.group.element(static_cast<int>(i))).conj() * Rational(chi_e[i]);
  s /= Rational(static_cast<long long>(o.o.group.order()));
  Rational r = s.to_rational();
  if (!r.is_integer() || r.sign() < 0) throw std::runtime_error("eigenspace multiplicity not a non-negative integer");
  return r.num();
}

std::vector<int> o_character_on(const TensorModel& m, const OrthogonalData& o, const Eigenspace& e) {
  const FqMatrix id = FqMatrix::identity(m.field(), m.n());
  std::vector<int> chi;
  for (const auto& r : o.o.group.elements()) chi.push_back(joint_trace(m, e, r, id, o_sign(m, r)));
  return chi;
}

}  // namespace

MultiplicitySpaceReport multiplicity_space_check(const TensorModel& m, const OrthogonalData& o, const FqMatrix& t,
                                                 const FiniteMatrixGroup& gl) {
  const Field& f = m.field();
  Eigenspace e = eigenspace_of(m, t);
  MultiplicitySpaceReport rep{t, e.beta_t};
  rep.eigenspace_dim = e.members.size();
  rep.o_order = o.o.group.order();

  std::set<uint64_t> orbit;
  for (const auto& r : o.o.group.elements()) orbit.insert(m.index_of(r * t));
  rep.free_orbit = orbit.size() == rep.o_order && orbit.size() == e.members.size();
  for (uint64_t i : orbit) rep.free_orbit = rep.free_orbit && e.position.count(i);

  std::vector<int> chi_e = o_character_on(m, o, e);
  const int id_o = o.o.group.identity_index();
  rep.regular = true;
  for (std::size_t i = 0; i < chi_e.size(); ++i)
    rep.regular = rep.regular && chi_e[i] == (static_cast<int>(i) == id_o ? static_cast<int>(rep.o_order) : 0);

  std::vector<FqMatrix> stab;
  for (const auto& c : gl.elements())
    if (transpose(c) * e.beta_t * c == e.beta_t) stab.push_back(c);
  rep.stabilizer_order = stab.size();

  // chi_E(C, r) for every pair, then project onto each tau
  std::vector<std::vector<int>> joint(stab.size());
  for (std::size_t ci = 0; ci < stab.size(); ++ci) {
    const FqMatrix c_inv = inverse(stab[ci]);
    const int sc = m.k() % 2 == 1 && f.quadratic_character(determinant(stab[ci])) < 0 ? -1 : 1;
    for (const auto& r : o.o.group.elements()) joint[ci].push_back(joint_trace(m, e, r, c_inv, sc * o_sign(m, r)));
  }
  rep.ok = rep.free_orbit && rep.regular;
  for (std::size_t tau = 0; tau < o.table.irreducibles.size(); ++tau) {
    const long long dim_tau = o.table.degrees[tau];
    Integer mult = tau_multiplicity(chi_e, o, static_cast<int>(tau));
    CycloNum norm = 0;
    Integer dim = 0;
    for (std::size_t ci = 0; ci < stab.size(); ++ci) {
      CycloNum v = 0;
      for (std::size_t ri = 0; ri < joint[ci].size(); ++ri)
        if (joint[ci][ri])
          v += o.table.irreducibles[tau].at(o.o.group.element(static_cast<int>(ri))).conj() * Rational(joint[ci][ri]);
      v /= Rational(static_cast<long long>(rep.o_order));
      if (stab[ci] == FqMatrix::identity(f, m.n())) dim = v.to_rational().num();
      norm += v * v.conj();
    }
    norm /= Rational(static_cast<long long>(stab.size()));
    const bool irreducible = norm == CycloNum(1);
    rep.tau_mult.push_back(mult);
    rep.space_dim.push_back(dim);
    rep.space_irreducible.push_back(irreducible);
    rep.ok = rep.ok && mult == dim_tau && dim == dim_tau && irreducible;
  }
  return rep;
}

ClassCountIdentity class_count_identity(int k, int q) {
  const Field& f = Field::get(q);
  ClassCountIdentity c;
  c.k = k;
  c.q = q;
  OrthogonalGroup plus = build_orthogonal(f, k, FormType::plus), minus = build_orthogonal(f, k, FormType::minus);
  plus.group.compute_classes();
  minus.group.compute_classes();
  c.plus = plus.group.classes().size();
  c.minus = minus.group.classes().size();
  switch (k) {
    case 1: c.expected = 4; break;
    case 2: c.expected = static_cast<std::size_t>(q + 6); break;
    case 3: c.expected = static_cast<std::size_t>(4 * (q + 2)); break;
    default: throw std::invalid_argument("class count identity only for k <= 3");
  }
  c.ok = c.plus + c.minus == c.expected;
  return c;
}

ExhaustionReport exhaustion_check(int n, int k, int q, const std::vector<RankRow>* rows) {
  if (k >= n) throw std::invalid_argument("exhaustion needs k < n");
  const Field& f = Field::get(q);
  ExhaustionReport r;
  r.n = n;
  r.k = k;
  r.q = q;
  for (FormType t : {FormType::plus, FormType::minus}) {
    OrthogonalGroup o = build_orthogonal(f, k, t);
    o.group.compute_classes();
    r.rhs += o.group.classes().size();
  }
  if (rows) {
    std::size_t count = 0;
    for (const auto& row : *rows) count += row.rank.rank == k;
    r.lhs = count;
    r.holds = count == r.rhs;
  }
  return r;
}

DimEstimate dim_estimate(const Integer& dim_eta, long long dim_tau, int n, int k, int q, FormType type) {
  DimEstimate d;
  d.ratio = Rational(dim_eta, orbit_card(n, {k, type}, q) * Integer(dim_tau));
  Rational qq(q);
  Rational eps = (Rational(2) + Rational(2) / qq + Rational(4) / (qq * qq));
  Integer scale = 1;
  for (int i = 0; i < n - k + 1; ++i) scale *= q;
  d.bound = Rational(1) + eps / Rational(scale);
  d.pass = d.ratio >= Rational(1) && d.ratio <= d.bound;
  return d;
}

CompatibilityReport compatibility_report(const std::vector<RankRow>& rows, int n, int q) {
  CompatibilityReport r;
  r.n = n;
  r.q = q;
  // k < 2 sqrt(n) - 1  <=>  (k + 1)^2 < 4n
  for (int k = 1; (k + 1) * (k + 1) < 4 * n; ++k) {
    CompatibilityRow c;
    c.k = k;
    bool have_k = false, have_next = false;
    for (const auto& row : rows) {
      if (row.rank.rank == k) {
        c.max_dim = have_k ? std::max(c.max_dim, row.dim) : row.dim;
        have_k = true;
      }
      if (row.rank.rank == k + 1) {
        c.min_dim_next = have_next ? std::min(c.min_dim_next, row.dim) : row.dim;
        have_next = true;
      }
    }
    c.ok = have_k && have_next && c.max_dim < c.min_dim_next;
    r.rows.push_back(c);
  }
  if (r.rows.empty()) r.note = "no k in regime";
  return r;
}

std::vector<EtaRecord> eta_records(const TensorModel& m, const OrthogonalData& o, const FiniteMatrixGroup* sp,
                                   const CharacterTable* sp_table, const std::vector<RankRow>* rows) {
  const Field& f = m.field();
  const FormType type = classify(m.beta()).type;
  const bool with_table = sp && sp_table && rows;

  // first onto T: identity block in the leading k columns
  FqMatrix t(f, m.k(), m.n());
  for (int i = 0; i < m.k(); ++i) t.set(i, i, 1);
  std::vector<int> chi_e;
  if (!with_table && m.k() > 0) chi_e = o_character_on(m, o, eigenspace_of(m, t));

  std::vector<EtaRecord> out;
  for (std::size_t tau = 0; tau < o.table.irreducibles.size(); ++tau) {
    EtaRecord rec;
    rec.n = m.n();
    rec.k = m.k();
    rec.q = f.q();
    rec.beta_type = type;
    rec.tau = static_cast<int>(tau);
    rec.dim_tau = o.table.degrees[tau];
    rec.dim_theta = theta_dim(m, o, rec.tau);
    if (with_table) {
      rec.theta_char = theta_of_tau(m, o, rec.tau, *sp);
      EtaConstituent eta = eta_of_tau(*rec.theta_char, *sp_table, *rows, m.k(), type);
      rec.eta_irrep = eta.irrep;
      rec.dim_eta = Integer(sp_table->degrees[eta.irrep]);
      rec.n_mult_top = eta.beta_orbit_mult;
    } else {
      rec.n_mult_top = tau_multiplicity(chi_e, o, rec.tau);
      if (m.k() == 1) rec.dim_eta = rec.dim_theta;
    }
    if (rec.dim_eta) rec.estimate = dim_estimate(*rec.dim_eta, rec.dim_tau, rec.n, rec.k, rec.q, type);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace spw
