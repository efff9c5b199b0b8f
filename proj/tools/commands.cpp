#include "commands.hpp"

#include "spw/eta.hpp"
#include "spw/heisenberg.hpp"
#include "spw/oresum.hpp"
#include "spw/symforms.hpp"
#include "spw/symplectic.hpp"
#include "spw/weil.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <stdexcept>

namespace spw::cli {

namespace {

// Sp tables above this are out of reach for Dixon at desk scale
constexpr uint64_t kTableLimit = 60000;

std::string yn(bool b) { return b ? "true" : "false"; }
std::string flt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

struct Checks {
  Outcome& out;
  std::size_t idx;

  Checks(Outcome& o, const std::string& name) : out(o), idx(o.tables.size()) {
    out.tables.push_back(Table{name + "_checks", {"check", "status", "detail"}, {}});
  }
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    out.tables[idx].add({name, ok ? "pass" : "fail", detail});
    if (!ok) out.failures.push_back(name);
  }
  void warn(const std::string& name, bool ok, const std::string& detail = "") {
    out.tables[idx].add({name, ok ? "pass" : "warn", detail});
    if (!ok) out.warnings.push_back(name);
  }
  void note(const std::string& name, const std::string& detail) { out.tables[idx].add({name, "info", detail}); }
};

FormType parse_type(const std::string& s) {
  if (s == "plus") return FormType::plus;
  if (s == "minus") return FormType::minus;
  throw std::invalid_argument("beta type must be plus or minus");
}

FqMatrix identity_block(const Field& f, int k, int n) {
  FqMatrix t(f, k, n);
  for (int i = 0; i < k; ++i) t.set(i, i, 1);
  return t;
}

bool sp_enumerable(const RunConfig& cfg) { return sp_order(cfg.n, cfg.q) <= Integer(static_cast<long long>(cfg.enumeration_limit)); }

}  // namespace

int Outcome::exit_code() const {
  if (!failures.empty()) return kInvariantFailed;
  if (!warnings.empty()) return kConjectureMismatch;
  return kOk;
}

void Outcome::merge(Outcome o) {
  for (auto& t : o.tables) tables.push_back(std::move(t));
  for (auto& s : o.failures) failures.push_back(std::move(s));
  for (auto& s : o.warnings) warnings.push_back(std::move(s));
}

void validate(const std::string& subcommand, const RunConfig& cfg) {
  const Field& f = Field::get(cfg.q);  // throws for a bad q
  if (cfg.n < 1 || cfg.n > 6) throw std::invalid_argument("n must be in [1, 6]");
  if (cfg.central_char_a % f.p() == 0 || cfg.central_char_a < 0 || cfg.central_char_a >= f.q())
    throw std::invalid_argument("a must be a nonzero element of F_q, given as 1..q-1");
  if (cfg.thread_count < 1) throw std::invalid_argument("thread count must be positive");
  if (cfg.samples < 0) throw std::invalid_argument("samples must be non-negative");
  if (cfg.output_format != "csv" && cfg.output_format != "json") throw std::invalid_argument("format must be csv or json");
  parse_type(cfg.beta_type);
  if (subcommand == "eta" || subcommand == "all") {
    if (cfg.k < 1 || cfg.k > cfg.n) throw std::invalid_argument("eta needs 1 <= k <= n");
    if (cfg.k > 3) throw std::invalid_argument("eta needs k <= 3");
  }
}

Header report_header(const std::string& subcommand, const RunConfig& cfg) {
  const Field& f = Field::get(cfg.q);
  return {
      {"subcommand", subcommand},
      {"field", "F_" + std::to_string(cfg.q) + " = F_p[x]/(m), p^d/m low to high: " + f.spec_string()},
      {"basis", "lexicographic in F_q^n, first coordinate most significant; F_q element i is the polynomial with base-p digits of i"},
      {"psi", "psi_a(x) = zeta_p^Tr(a x); u(A) acts by psi_a(y^t A y / 2); N-characters psi_B(A) = psi_a(Tr(B A) / 2)"},
      {"seed", std::to_string(cfg.seed)},
      {"config", "q=" + std::to_string(cfg.q) + " n=" + std::to_string(cfg.n) + " k=" + std::to_string(cfg.k) +
                     " beta=" + cfg.beta_type + " a=" + std::to_string(cfg.central_char_a) +
                     " samples=" + std::to_string(cfg.samples) + " limit=" + std::to_string(cfg.enumeration_limit)},
      {"schema_version", std::to_string(kSchemaVersion)},
  };
}

Outcome run_forms(const RunConfig& cfg) {
  const Field& f = Field::get(cfg.q);
  Outcome out;
  Checks c(out, "forms");
  const Integer total = symmetric_count(cfg.n, cfg.q);
  const bool brute = total <= Integer(static_cast<long long>(kFormEnumerationLimit));
  std::map<OrbitLabel, uint64_t> census;
  if (brute) census = orbit_census(f, cfg.n);
  else c.note("brute census", "skipped: " + total.str() + " forms");

  Table t{"forms", {"rank", "type", "closed_form", "brute_count", "match"}, {}};
  Integer sum = 0;
  bool all_match = true;
  for (const auto& label : orbit_labels(cfg.n)) {
    const Integer closed = orbit_card(cfg.n, label, cfg.q);
    sum += closed;
    std::string b, m;
    if (brute) {
      auto it = census.find(label);
      const Integer count = it == census.end() ? Integer(0) : Integer(static_cast<unsigned long long>(it->second));
      b = count.str();
      m = yn(count == closed);
      all_match = all_match && count == closed;
    }
    t.add({std::to_string(label.rank), to_string(label.type), closed.str(), b, m});
  }
  out.tables.push_back(std::move(t));
  c.check("orbit sizes sum to q^(n(n+1)/2)", sum == total, sum.str() + " of " + total.str());
  if (brute) c.check("closed forms equal brute census", all_match);
  return out;
}

Outcome run_heisenberg(const RunConfig& cfg) {
  const Field& f = Field::get(cfg.q);
  Outcome out;
  Checks c(out, "heisenberg");
  const uint64_t order = heis_order(cfg.n, cfg.q);
  if (order > 1'000'000) {
    c.note("heisenberg", "skipped: |H| = " + std::to_string(order));
    return out;
  }
  HeisenbergCensus census = irrep_census(f, cfg.n);
  Table t{"heisenberg_census", {"n", "q", "order", "linear", "big", "big_dim", "sum_of_squares_ok", "big_irreducible", "big_distinct"}, {}};
  t.add({std::to_string(cfg.n), std::to_string(cfg.q), std::to_string(order), std::to_string(census.linear),
         std::to_string(census.big), std::to_string(census.big_dim), yn(census.sum_of_squares_ok),
         yn(census.big_irreducible), yn(census.big_distinct)});
  out.tables.push_back(std::move(t));
  c.check("sum of squares of irreducible dimensions = |H|", census.sum_of_squares_ok);
  c.check("big irreducibles have norm 1", census.big_irreducible);
  c.check("central characters are distinct", census.big_distinct);

  Table svn{"stone_von_neumann", {"a", "dim", "norm", "irreducible", "lagrangian_independent"}, {}};
  uint64_t qn = 1;
  for (int i = 0; i < cfg.n; ++i) qn *= cfg.q;
  bool all_ok = true;
  for (FqRaw a = 1; a < static_cast<FqRaw>(cfg.q); ++a) {
    HeisenbergRep ry(f, cfg.n, a, Lagrangian::Y), rx(f, cfg.n, a, Lagrangian::X);
    CycloNum norm = CycloNum::zero(f.p());
    bool same = true;
    for (uint64_t i = 0; i < order; ++i) {
      HeisElem h = heis_element(f, cfg.n, i);
      CycloNum chi = ry.character(h);
      same = same && chi == rx.character(h);
      norm += chi * chi.conj();
    }
    norm /= Rational(static_cast<long long>(order));
    const bool irr = norm == CycloNum(1);
    all_ok = all_ok && irr && same && ry.dim() == qn;
    svn.add({std::to_string(a), std::to_string(ry.dim()), norm.str(), yn(irr), yn(same)});
  }
  out.tables.push_back(std::move(svn));
  c.check("Schroedinger models irreducible of dim q^n, same character from X and Y", all_ok);
  return out;
}

Outcome run_weil(const RunConfig& cfg) {
  const Field& f = Field::get(cfg.q);
  Outcome out;
  Checks c(out, "weil");
  const FqRaw a = static_cast<FqRaw>(cfg.central_char_a);
  SchrodingerRep w(f, cfg.n, a);
  HeisenbergRep pi(f, cfg.n, a);
  std::mt19937_64 rng(cfg.seed);

  bool hom = true, ego = true;
  for (int s = 0; s < cfg.samples; ++s) {
    FqMatrix g = random_symplectic(f, cfg.n, rng), h = random_symplectic(f, cfg.n, rng);
    hom = hom && w.omega(g) * w.omega(h) == w.omega(g * h);
    HeisElem x = heis_element(f, cfg.n, rng() % heis_order(cfg.n, cfg.q));
    ego = ego && egorov_holds(w, pi, g, x);
  }
  c.check("omega(g) omega(h) = omega(gh) on sampled pairs", hom, std::to_string(cfg.samples) + " pairs");
  c.check("Egorov identity on sampled pairs", ego, std::to_string(cfg.samples) + " pairs");

  EvenOddSplit split = even_odd_split(w);
  Table eo{"weil_even_odd", {"n", "q", "dim_even", "dim_odd", "table_even", "table_odd", "table_match"}, {}};
  const bool match = split.dim_even == split.table_even && split.dim_odd == split.table_odd;
  eo.add({std::to_string(cfg.n), std::to_string(cfg.q), std::to_string(split.dim_even), std::to_string(split.dim_odd),
          std::to_string(split.table_even), std::to_string(split.table_odd), yn(match)});
  out.tables.push_back(std::move(eo));
  const int lo = std::min(split.dim_even, split.dim_odd), hi = std::max(split.dim_even, split.dim_odd);
  c.check("eigenspaces of omega(-I) have dims (q^n - 1)/2 and (q^n + 1)/2", hi == lo + 1 && lo + hi == w.dim());
  // n even and q = 3 mod 4 swap the listed labels; see README
  c.note("even/odd labels as listed", yn(match));

  if (sp_enumerable(cfg)) {
    FiniteMatrixGroup sp = symplectic_group(f, cfg.n, cfg.enumeration_limit);
    sp.compute_classes();
    Table tw{"weil_twists", {"a", "a2", "square_ratio", "characters_equal"}, {}};
    bool ok = true;
    for (FqRaw a2 = 1; a2 < static_cast<FqRaw>(cfg.q); ++a2) {
      const bool square = f.quadratic_character(f.div(a2, a)) > 0;
      const bool equal = twist_equivalence(sp, f, cfg.n, a, a2);
      ok = ok && square == equal;
      tw.add({std::to_string(a), std::to_string(a2), yn(square), yn(equal)});
    }
    out.tables.push_back(std::move(tw));
    c.check("omega_a2 equals omega_a iff a2/a is a square", ok);
  } else {
    c.note("twists", "skipped: Sp too large to enumerate");
  }
  return out;
}

Outcome run_rank_table(const RunConfig& cfg) {
  const Field& f = Field::get(cfg.q);
  Outcome out;
  Checks c(out, "rank_table");
  if (sp_order(cfg.n, cfg.q) > Integer(static_cast<long long>(kTableLimit))) {
    c.check("character table within desk scale", false, "|Sp| = " + sp_order(cfg.n, cfg.q).str());
    return out;
  }
  FiniteMatrixGroup sp = symplectic_group(f, cfg.n, cfg.enumeration_limit);
  CharacterTable t = dixon_table(sp);
  std::vector<RankRow> rows = rank_table(t, f, cfg.n, f.half());
  const std::vector<OrbitLabel> labels = orbit_labels(cfg.n);

  Table rt{"rank_table", {"irrep", "dim", "rank", "type"}, {}};
  for (const auto& l : labels) rt.columns.push_back("m_" + l.str());
  rt.columns.push_back("dim_form_ok");
  rt.columns.push_back("lowest_dim_ok");
  long long sum_sq = 0;
  int rank0 = 0;
  bool dim_form = true, lowest = true;
  for (const auto& r : rows) {
    std::vector<std::string> row{std::to_string(r.irrep), std::to_string(r.dim), std::to_string(r.rank.rank),
                                 to_string(r.rank.type)};
    for (const auto& l : labels) {
      auto it = r.mult.find(l);
      row.push_back(it == r.mult.end() ? "0" : it->second.str());
    }
    row.push_back(yn(r.dim_form_ok));
    row.push_back(yn(r.lowest_dim_ok));
    rt.add(std::move(row));
    sum_sq += r.dim * r.dim;
    rank0 += r.rank.rank == 0;
    dim_form = dim_form && r.dim_form_ok;
    lowest = lowest && r.lowest_dim_ok;
  }
  out.tables.push_back(std::move(rt));
  c.check("row orthogonality", t.row_orthogonal());
  c.check("column orthogonality", t.column_orthogonal());
  c.check("sum of squared degrees = |Sp|", sum_sq == static_cast<long long>(sp.order()), std::to_string(sum_sq));
  c.check("exactly one irreducible of rank 0", rank0 == 1);
  c.check("dimension formula from N-spectra", dim_form);
  c.check("lowest dimension bound", lowest);
  return out;
}

Outcome run_eta(const RunConfig& cfg) {
  const Field& f = Field::get(cfg.q);
  Outcome out;
  Checks c(out, "eta");
  const FormType type = parse_type(cfg.beta_type);
  auto o = orthogonal_data(f, cfg.k, type);
  TensorModel m(f, cfg.n, o->o.beta, static_cast<FqRaw>(cfg.central_char_a));
  if (cfg.k == cfg.n) c.warn("k = n is outside the stated range of the correspondence", false);

  const bool table_path = sp_order(cfg.n, cfg.q) <= Integer(static_cast<long long>(kTableLimit));
  std::unique_ptr<FiniteMatrixGroup> sp;
  std::unique_ptr<CharacterTable> sp_table;
  std::vector<RankRow> rows;
  if (table_path) {
    sp = std::make_unique<FiniteMatrixGroup>(symplectic_group(f, cfg.n, cfg.enumeration_limit));
    sp_table = std::make_unique<CharacterTable>(dixon_table(*sp));
    rows = rank_table(*sp_table, f, cfg.n, f.half());
  }
  c.note("verification path", table_path ? "character table" : "eigenspace and commutant");

  std::vector<EtaRecord> recs = table_path ? eta_records(m, *o, sp.get(), sp_table.get(), &rows) : eta_records(m, *o);
  Table et{"eta", {"n", "k", "q", "beta_type", "tau", "dim_tau", "dim_theta", "dim_eta", "eta_irrep", "mult_top", "ratio",
                   "bound", "pass"}, {}};
  bool mult_ok = true, est_ok = true;
  Integer weighted = 0;
  std::set<int> images;
  for (const auto& r : recs) {
    et.add({std::to_string(r.n), std::to_string(r.k), std::to_string(r.q), to_string(r.beta_type), std::to_string(r.tau),
            std::to_string(r.dim_tau), r.dim_theta.str(), r.dim_eta ? r.dim_eta->str() : "",
            r.eta_irrep ? std::to_string(*r.eta_irrep) : "", r.n_mult_top.str(),
            r.estimate ? r.estimate->ratio.str() : "", r.estimate ? r.estimate->bound.str() : "",
            r.estimate ? yn(r.estimate->pass) : ""});
    mult_ok = mult_ok && r.n_mult_top == Integer(r.dim_tau);
    if (r.estimate) est_ok = est_ok && r.estimate->pass;
    weighted += Integer(r.dim_tau) * r.dim_theta;
    if (r.eta_irrep) images.insert(*r.eta_irrep);
  }
  out.tables.push_back(std::move(et));
  c.check("sum of dim tau * dim Theta(tau) = q^(nk)", weighted == Integer(static_cast<unsigned long long>(m.dim())));
  c.check("beta-orbit multiplicity = dim tau", mult_ok);
  c.check("dimension ratios within [1, bound]", est_ok);
  if (table_path) c.check("eta is injective", images.size() == recs.size());

  if (gl_order(cfg.n, cfg.q) <= Integer(static_cast<long long>(cfg.enumeration_limit))) {
    FiniteMatrixGroup gl = general_linear_group(f, cfg.n, cfg.enumeration_limit);
    MultiplicitySpaceReport ms = multiplicity_space_check(m, *o, identity_block(f, cfg.k, cfg.n), gl);
    Table mt{"eta_multiplicity_space", {"tau", "dim_tau", "mult", "space_dim", "irreducible"}, {}};
    for (std::size_t i = 0; i < ms.tau_mult.size(); ++i)
      mt.add({std::to_string(i), std::to_string(o->table.degrees[i]), ms.tau_mult[i].str(), ms.space_dim[i].str(),
              yn(ms.space_irreducible[i])});
    out.tables.push_back(std::move(mt));
    c.check("eigenspace dim = |O_beta|", ms.eigenspace_dim == ms.o_order,
            std::to_string(ms.eigenspace_dim) + " vs " + std::to_string(ms.o_order));
    c.check("O_beta acts freely and regularly on the eigenspace", ms.free_orbit && ms.regular);
    c.check("multiplicity spaces irreducible of dim tau", ms.ok,
            "stabilizer order " + std::to_string(ms.stabilizer_order));
  } else {
    c.note("multiplicity space", "skipped: GL_n too large to enumerate");
  }

  ClassCountIdentity cc = class_count_identity(cfg.k, cfg.q);
  c.check("class counts of O_k+ and O_k- add up", cc.ok,
          std::to_string(cc.plus) + " + " + std::to_string(cc.minus) + " vs " + std::to_string(cc.expected));
  if (cfg.k < cfg.n) {
    ExhaustionReport ex = exhaustion_check(cfg.n, cfg.k, cfg.q, table_path ? &rows : nullptr);
    Table xt{"exhaustion", {"n", "k", "q", "lhs", "rhs", "holds"}, {}};
    xt.add({std::to_string(ex.n), std::to_string(ex.k), std::to_string(ex.q), ex.lhs ? std::to_string(*ex.lhs) : "",
            std::to_string(ex.rhs), ex.holds ? yn(*ex.holds) : ""});
    out.tables.push_back(std::move(xt));
    if (ex.holds) c.warn("exhaustion census", *ex.holds);
  }
  if (table_path) {
    CompatibilityReport cr = compatibility_report(rows, cfg.n, cfg.q);
    Table ct{"compatibility", {"k", "max_dim", "min_dim_next", "ok"}, {}};
    bool ok = true;
    for (const auto& r : cr.rows) {
      ct.add({std::to_string(r.k), std::to_string(r.max_dim), std::to_string(r.min_dim_next), yn(r.ok)});
      ok = ok && r.ok;
    }
    out.tables.push_back(std::move(ct));
    if (cr.rows.empty()) c.note("compatibility", cr.note);
    else c.check("rank k below rank k + 1 in the compatible range", ok);
  }
  return out;
}

Outcome run_ore(const RunConfig& cfg) {
  const Field& f = Field::get(cfg.q);
  Outcome out;
  Checks c(out, "ore");
  if (sp_order(cfg.n, cfg.q) > Integer(static_cast<long long>(kTableLimit))) {
    c.check("character table within desk scale", false, "|Sp| = " + sp_order(cfg.n, cfg.q).str());
    return out;
  }
  FiniteMatrixGroup sp = symplectic_group(f, cfg.n, cfg.enumeration_limit);
  CharacterTable t = dixon_table(sp);
  const std::string id = "Sp_" + std::to_string(2 * cfg.n) + "(F_" + std::to_string(cfg.q) + ")";
  OreReport r = uniformity_report(t, cfg.q, cfg.n, id);

  Table pc{"ore_per_class", {"class_rep", "size", "brute_count", "frobenius", "deviation", "deviation_float"}, {}};
  for (const auto& row : r.per_class)
    pc.add({row.rep, std::to_string(row.size), row.brute_count ? row.brute_count->str() : "", row.frobenius.str(),
            row.deviation.str(), flt(row.deviation_float)});
  out.tables.push_back(std::move(pc));
  Table rt{"ratios", {"irrep", "dim", "bucket", "ratio", "ratio_float"}, {}};
  for (const auto& row : r.ratios)
    rt.add({std::to_string(row.irrep), std::to_string(row.dim), std::to_string(row.bucket), row.ratio.str(),
            row.ratio_float});
  out.tables.push_back(std::move(rt));
  c.check("brute count = |G| * Frobenius sum", r.consistent);
  c.check("deviation at 1 = #classes - 1", r.per_class[0].deviation == CycloNum(static_cast<long long>(r.class_count) - 1));
  c.check("Cauchy-Schwarz bound on deviations", r.ok());

  // how the transvection deviation moves with q for Sp_2
  Table sw{"ore_sp2_sweep", {"q", "classes", "deviation_at_transvection", "deviation_float"}, {}};
  for (int q : {3, 5, 7, 9, 11, 13}) {
    FiniteMatrixGroup g = symplectic_group(Field::get(q), 1);
    CharacterTable tq = dixon_table(g);
    OreReport rq = uniformity_report(tq, q, 1, "Sp_2(F_" + std::to_string(q) + ")", false);
    const OreClassRow& row = rq.per_class[rq.transvection_class];
    sw.add({std::to_string(q), std::to_string(rq.class_count), row.deviation.str(), flt(row.deviation_float)});
  }
  out.tables.push_back(std::move(sw));
  return out;
}

Outcome run_all(const RunConfig& cfg) {
  Outcome out;
  out.merge(run_forms(cfg));
  out.merge(run_heisenberg(cfg));
  out.merge(run_weil(cfg));
  out.merge(run_rank_table(cfg));
  out.merge(run_eta(cfg));
  out.merge(run_ore(cfg));
  return out;
}

Outcome dispatch(const std::string& subcommand, const RunConfig& cfg) {
  if (subcommand == "forms") return run_forms(cfg);
  if (subcommand == "heisenberg") return run_heisenberg(cfg);
  if (subcommand == "weil") return run_weil(cfg);
  if (subcommand == "rank-table") return run_rank_table(cfg);
  if (subcommand == "eta") return run_eta(cfg);
  if (subcommand == "ore") return run_ore(cfg);
  if (subcommand == "all") return run_all(cfg);
  throw std::invalid_argument("unknown subcommand " + subcommand);
}

int run(const std::string& subcommand, const RunConfig& cfg) {
  try {
    validate(subcommand, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  Outcome out;
  try {
    out = dispatch(subcommand, cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    // a failed internal verification, e.g. a non-integral multiplicity
    std::cerr << "FAIL " << subcommand << ": " << e.what() << "\n";
    return kInvariantFailed;
  }

  const Header h = report_header(subcommand, cfg);
  const bool json = cfg.output_format == "json";
  if (cfg.output_path.empty()) {
    if (json) {
      std::cout << to_json(out.tables, h);
    } else {
      for (std::size_t i = 0; i < out.tables.size(); ++i) std::cout << (i ? "\n" : "") << to_csv(out.tables[i], h);
    }
  } else {
    std::filesystem::create_directories(cfg.output_path);
    for (const auto& t : out.tables) {
      std::filesystem::path p = std::filesystem::path(cfg.output_path) / (t.name + (json ? ".json" : ".csv"));
      std::ofstream os(p, std::ios::binary);
      os << (json ? to_json(t, h) : to_csv(t, h));
      if (!os) {
        std::cerr << "error: cannot write " << p << "\n";
        return kInvariantFailed;
      }
    }
  }
  for (const auto& s : out.failures) std::cerr << "FAIL " << s << "\n";
  for (const auto& s : out.warnings) std::cerr << "WARN " << s << "\n";
  return out.exit_code();
}

}  // namespace spw::cli
