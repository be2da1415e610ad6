#include "cli.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "cache.hpp"
#include "cubiccm/cubiccm.hpp"
#include "json.hpp"

namespace cubiccm::cli {

namespace {

using Json = nlohmann::ordered_json;

Json num(const Integer& z) {
  if (fits_int64(z)) return to_int64(z);
  return z.get_str();
}

Json num(const Rational& q) {
  if (is_integer(q)) return num(q.get_num());
  return q.get_str();
}

Json vec(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(num(x));
  return out;
}

Json mat(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec(m.row(i)));
  return out;
}

Json invariants_json(const LatticeInvariants& inv) {
  return {{"rank", inv.rank},
          {"signature", {inv.signature.positive, inv.signature.negative}},
          {"determinant", num(inv.determinant)},
          {"even", inv.even},
          {"disc_group", vec(inv.disc_group)}};
}

Json form_json(const BinaryEvenForm& f) {
  return {{"a", num(f.a)}, {"b", num(f.b)}, {"c", num(f.c)}, {"gram", mat(f.gram().matrix())}};
}

// A table: header plus rows of scalar cells, rendered as JSON records or CSV.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;

  Json records() const {
    Json out = Json::array();
    for (const auto& r : rows) {
      Json rec = Json::object();
      for (std::size_t i = 0; i < columns.size(); ++i) rec[columns[i]] = r[i];
      out.push_back(std::move(rec));
    }
    return out;
  }
};

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void write_csv(const Table& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_cell(r[i]);
    out << '\n';
  }
}

struct Outcome {
  Json results;
  Json notes = Json::array();
  std::optional<Table> table;  // set for tabular commands
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GramMatrix gram_from(const std::string& gram, const std::string& name, std::optional<std::size_t> n) {
  if (!gram.empty() && !name.empty()) throw UsageError("give either --gram or --name, not both");
  if (!gram.empty()) return GramMatrix(parse_matrix(gram));
  if (!name.empty()) return make_standard(name, n);
  throw UsageError("one of --gram or --name is required");
}

HeckeCharacter character_for(std::int64_t D) {
  return canonical_character(QuadField::from_discriminant(-D));
}

std::size_t worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

Integer eps_p2(const HeckeCharacter& chi, std::int64_t p) {
  return Integer(static_cast<long>(epsilon_sign(chi, p))) * p * p;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for CM lattices, binary forms and Hecke characters", "cubiccm"};
  app.require_subcommand(1);
  app.set_version_flag("--version", CUBICCM_VERSION);
  std::string format = "json";
  app.add_option("--format", format, "Output format (csv only for tables)")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  std::string command;
  Json inputs = Json::object();
  std::function<Outcome()> action;
  auto bind = [&](CLI::App* sub, std::string name, std::function<Outcome()> fn) {
    sub->callback([&, name = std::move(name), fn = std::move(fn)] {
      command = name;
      action = fn;
    });
  };

  // lattice
  auto* lattice = app.add_subcommand("lattice", "Gram matrices and lattice invariants");
  lattice->require_subcommand(1);
  std::string gram_arg, name_arg, vector_arg;
  std::optional<std::size_t> n_arg;
  bool distinguished = false;
  auto lattice_options = [&](CLI::App* sub) {
    sub->add_option("--gram", gram_arg, "Gram matrix, rows separated by ';'");
    sub->add_option("--name", name_arg, "Standard lattice name (U, A2, E8, L0, L, diag+, U(7), ...)");
    sub->add_option("--n", n_arg, "Rank for the diag+/diag- families");
  };
  auto* lat_std = lattice->add_subcommand("standard", "Gram matrix of a standard lattice");
  lat_std->add_option("--name", name_arg)->required();
  lat_std->add_option("--n", n_arg);
  bind(lat_std, "lattice standard", [&] {
    inputs = {{"name", name_arg}};
    if (n_arg) inputs["n"] = *n_arg;
    const GramMatrix g = make_standard(name_arg, n_arg);
    Outcome o;
    o.results = {{"gram", mat(g.matrix())}, {"rank", g.rank()}};
    return o;
  });
  auto* lat_inv = lattice->add_subcommand("invariants", "Rank, signature, determinant, parity, discriminant group");
  lattice_options(lat_inv);
  bind(lat_inv, "lattice invariants", [&] {
    inputs = Json::object();
    if (!gram_arg.empty()) inputs["gram"] = gram_arg;
    if (!name_arg.empty()) inputs["name"] = name_arg;
    if (n_arg) inputs["n"] = *n_arg;
    Outcome o;
    o.results = invariants_json(invariants(gram_from(gram_arg, name_arg, n_arg)));
    return o;
  });
  auto* lat_comp = lattice->add_subcommand("complement", "Orthogonal complement of a primitive vector");
  lattice_options(lat_comp);
  lat_comp->add_option("--vector", vector_arg, "Comma-separated coordinates");
  lat_comp->add_flag("--distinguished", distinguished, "Use the norm -3 vector v of L0");
  bind(lat_comp, "lattice complement", [&] {
    inputs = Json::object();
    if (!gram_arg.empty()) inputs["gram"] = gram_arg;
    if (!name_arg.empty()) inputs["name"] = name_arg;
    if (n_arg) inputs["n"] = *n_arg;
    Outcome o;
    IntVector v;
    GramMatrix g;
    if (distinguished) {
      if (!vector_arg.empty() || !gram_arg.empty() || (!name_arg.empty() && name_arg != "L0"))
        throw UsageError("--distinguished works on L0 only and takes no --vector");
      inputs["distinguished"] = true;
      g = make_standard("L0");
      v = l0_distinguished_vector();
      o.notes.push_back("v is the first vector (odd coordinates, lexicographic search) with even complement");
    } else {
      if (vector_arg.empty()) throw UsageError("--vector or --distinguished is required");
      inputs["vector"] = vector_arg;
      g = gram_from(gram_arg, name_arg, n_arg);
      v = parse_int_vector(vector_arg);
    }
    const GramMatrix comp = orthogonal_complement(g, v);
    o.results = {{"vector", vec(v)},
                 {"norm", num(g.norm(v))},
                 {"gram", mat(comp.matrix())},
                 {"invariants", invariants_json(invariants(comp))}};
    return o;
  });

  // embed
  auto* embed = app.add_subcommand("embed", "Primitive embeddings of trace forms");
  embed->require_subcommand(1);
  std::int64_t d_arg = 0;
  auto* embed_tf = embed->add_subcommand("trace-form", "Embed the trace form of Q(sqrt(-d)) into L");
  embed_tf->add_option("--d", d_arg, "Squarefree d >= 1")->required();
  bind(embed_tf, "embed trace-form", [&] {
    inputs = {{"d", d_arg}};
    const QuadField K = QuadField::from_d(d_arg);
    const EmbeddingWitness w = embed_trace_form(K);
    Json vectors = Json::array();
    for (const auto& v : w.vectors) vectors.push_back(vec(v));
    Outcome o;
    o.results = {{"D", K.D()},
                 {"trace_form", mat(trace_form_gram(K).matrix())},
                 {"ambient_rank", w.ambient.rank()},
                 {"block_offset", kLHyperbolicOffset},
                 {"vectors", vectors},
                 {"gram_check", mat(w.gram_check.matrix())},
                 {"primitive", w.primitive}};
    o.notes.push_back("trace form Tr(x conj y) in the basis (1, theta)");
    o.notes.push_back("x1 = e + a f, x2 = b f + e' + c f' in the first U+U block of L");
    return o;
  });

  // forms
  auto* forms = app.add_subcommand("forms", "Even binary forms");
  forms->require_subcommand(1);
  std::string det_arg, form_gram;
  int bound = 2;
  auto* forms_classes = forms->add_subcommand("classes", "Reduced forms of a given determinant");
  forms_classes->add_option("--det", det_arg, "Positive determinant 4ac - b^2")->required();
  bind(forms_classes, "forms classes", [&] {
    Integer det;
    if (det.set_str(det_arg, 10) != 0) throw UsageError("--det must be an integer");
    inputs = {{"det", num(det)}};
    const auto classes = class_list(det, worker_count());
    Outcome o;
    Table t{{"a", "b", "c"}, {}};
    Json list = Json::array();
    for (const auto& f : classes) {
      t.rows.push_back({num(f.a), num(f.b), num(f.c)});
      list.push_back(form_json(f));
    }
    o.results = {{"count", classes.size()}, {"classes", list}};
    o.table = std::move(t);
    return o;
  });
  auto* forms_endo = forms->add_subcommand("endo", "Endomorphism field and finite isometry of a definite form");
  forms_endo->add_option("--gram", form_gram, "Even 2x2 Gram matrix")->required();
  forms_endo->add_option("--bound", bound, "Entry bound for the isometry search")->capture_default_str();
  bind(forms_endo, "forms endo", [&] {
    inputs = {{"gram", form_gram}, {"bound", bound}};
    const GramMatrix g(parse_matrix(form_gram));
    const BinaryEvenForm f = BinaryEvenForm::from_gram(g);
    const NormalizedForm nf = normalize_definite(f);
    Outcome o;
    o.results = {{"negated", nf.negated},
                 {"reduced", form_json(reduce(nf.form))},
                 {"discriminant", endomorphism_field(f)}};
    const auto iso = finite_isometry(f, bound);
    if (iso) {
      const auto point = period_points(nf.form).first;
      const auto lambda = period_eigenvalue(*iso, point);
      const auto mp = lambda.min_poly();
      o.results["isometry"] = mat(*iso);
      o.results["order"] = *matrix_order(*iso);
      o.results["period_point"] = to_string(point.root);
      o.results["eigenvalue"] = to_string(lambda);
      o.results["min_poly"] = {num(mp[0]), num(mp[1]), num(mp[2])};
    } else {
      o.results["isometry"] = nullptr;
    }
    if (nf.negated) o.notes.push_back("negative definite input; computed on the negated form");
    return o;
  });

  // field
  auto* field = app.add_subcommand("field", "Imaginary quadratic fields");
  field->require_subcommand(1);
  std::int64_t D_arg = 0, p_arg = 0;
  auto* field_split = field->add_subcommand("split", "Splitting type of a prime");
  field_split->add_option("--D", D_arg, "D, with -D a fundamental discriminant")->required();
  field_split->add_option("--p", p_arg, "Rational prime")->required();
  bind(field_split, "field split", [&] {
    inputs = {{"D", D_arg}, {"p", p_arg}};
    const QuadField K = QuadField::from_discriminant(-D_arg);
    const Splitting s = splitting_type(p_arg, K);
    Json primes = Json::array();
    for (const auto& P : primes_above(p_arg, K))
      primes.push_back({{"content", num(P.content)}, {"a", num(P.a)}, {"b", num(P.b)}});
    Outcome o;
    o.results = {{"splitting", to_string(s)}, {"kronecker", kronecker(-D_arg, p_arg)}, {"primes", primes}};
    return o;
  });

  // hecke
  auto* hecke = app.add_subcommand("hecke", "Hecke characters and their q-expansions");
  hecke->require_subcommand(1);
  std::int64_t limit_arg = 0;
  bool no_cache = false;
  auto* hecke_qexp = hecke->add_subcommand("qexp", "Coefficients c_1..c_B of the CM form");
  hecke_qexp->add_option("--D", D_arg, "Class-number-one D")->required();
  hecke_qexp->add_option("--limit", limit_arg, "Number of coefficients B")->required();
  hecke_qexp->add_flag("--no-cache", no_cache, "Skip the on-disk cache");
  bind(hecke_qexp, "hecke qexp", [&] {
    inputs = {{"D", D_arg}, {"limit", limit_arg}};
    if (limit_arg < 1) throw DomainError("--limit must be >= 1");
    const HeckeCharacter chi = character_for(D_arg);
    const std::int64_t M = chi.conductor_norm();
    std::optional<std::vector<Integer>> coeffs;
    if (!no_cache) coeffs = load_qexp(D_arg, M, limit_arg);
    if (!coeffs) {
      coeffs = qexpansion(chi, limit_arg, worker_count()).coefficients;
      if (!no_cache) store_qexp(D_arg, M, limit_arg, *coeffs);
    }
    Outcome o;
    Table t{{"n", "c_n"}, {}};
    Json list = Json::array();
    for (std::size_t i = 0; i < coeffs->size(); ++i) {
      list.push_back(num((*coeffs)[i]));
      t.rows.push_back({static_cast<std::int64_t>(i + 1), num((*coeffs)[i])});
    }
    o.results = {{"M", M}, {"level", chi.level()}, {"conductor", to_string(chi.conductor())},
                 {"coefficients", list}};
    o.table = std::move(t);
    o.notes.push_back("c_n = sum of alpha^2 over ideals (alpha) of norm n, alpha = 1 mod the conductor");
    return o;
  });

  // frob
  auto* frob = app.add_subcommand("frob", "Frobenius traces and determinants");
  frob->require_subcommand(1);
  std::int64_t pmax_arg = 0;
  auto* frob_table = frob->add_subcommand("table", "Geometric Frobenius rows for p <= pmax");
  frob_table->add_option("--D", D_arg)->required();
  frob_table->add_option("--pmax", pmax_arg)->required();
  bind(frob_table, "frob table", [&] {
    inputs = {{"D", D_arg}, {"pmax", pmax_arg}};
    const HeckeCharacter chi = character_for(D_arg);
    Table t{{"p", "splitting", "bad", "trace", "det", "euler_1", "euler_p", "euler_p2"}, {}};
    for (std::int64_t p : primes_up_to(pmax_arg)) {
      const FrobeniusRow r = frob_row(p, chi);
      Json trace = r.trace ? num(*r.trace) : Json(nullptr);
      Json det = r.det ? num(*r.det) : Json(nullptr);
      std::array<Json, 3> euler{nullptr, nullptr, nullptr};
      if (!r.bad) {
        // Euler factor (1, -a_p, eps(p) p^2) with a_p = trace.
        euler = {Json(1), num(Integer(-*r.trace)), num(eps_p2(chi, p))};
      }
      t.rows.push_back({p, to_string(r.splitting), r.bad, trace, det, euler[0], euler[1], euler[2]});
    }
    Outcome o;
    o.results = {{"M", chi.conductor_norm()}, {"level", chi.level()}, {"rows", t.records()}};
    o.table = std::move(t);
    o.notes.push_back("geometric Frobenius; bad primes p | DM carry no values");
    return o;
  });
  auto* frob_shift = frob->add_subcommand("lshift", "f-normalized and rho-normalized rows");
  frob_shift->add_option("--D", D_arg)->required();
  frob_shift->add_option("--pmax", pmax_arg)->required();
  bind(frob_shift, "frob lshift", [&] {
    inputs = {{"D", D_arg}, {"pmax", pmax_arg}};
    const HeckeCharacter chi = character_for(D_arg);
    Table t{{"p", "splitting", "a_p", "eps_p2", "rho_trace", "rho_det", "consistent"}, {}};
    for (const auto& r : l_shift_table(chi, pmax_arg))
      t.rows.push_back({r.p, to_string(r.splitting), num(r.a_p), num(r.eps_p2), num(r.rho_trace),
                        num(r.rho_det), r.consistent});
    Outcome o;
    o.results = {{"M", chi.conductor_norm()}, {"rows", t.records()}};
    o.table = std::move(t);
    o.notes.push_back("rho row = (p a_p, eps(p) p^4), i.e. L(rho, s) = L(f, s - 1)");
    return o;
  });

  // levels
  auto* levels = app.add_subcommand("levels", "Orders of finite orthogonal groups");
  levels->require_subcommand(1);
  std::int64_t N_arg = 0, q_arg = 0;
  std::size_t rank_arg = 0;
  std::string fixed_arg, method_arg = "brute", type_arg;
  auto* levels_order = levels->add_subcommand("order", "|SO(gram mod N)|, optionally fixing a vector");
  levels_order->add_option("--gram", gram_arg)->required();
  levels_order->add_option("--N", N_arg)->required();
  levels_order->add_option("--fixed", fixed_arg, "Vector fixed by g");
  levels_order->add_option("--method", method_arg)->check(CLI::IsMember({"brute", "formula"}))->capture_default_str();
  bind(levels_order, "levels order", [&] {
    inputs = {{"gram", gram_arg}, {"N", N_arg}, {"method", method_arg}};
    std::optional<IntVector> fixed;
    if (!fixed_arg.empty()) {
      inputs["fixed"] = fixed_arg;
      fixed = parse_int_vector(fixed_arg);
    }
    const auto data = orthogonal_order(GramMatrix(parse_matrix(gram_arg)), N_arg, fixed,
                                       method_arg == "brute" ? OrderMethod::brute_force : OrderMethod::formula);
    Outcome o;
    o.results = {{"gram_mod_N", mat(data.gram.matrix())}, {"order", num(data.order)}};
    if (method_arg == "formula") o.results["type"] = to_string(classify_form(data.gram, N_arg));
    return o;
  });
  auto* levels_formula = levels->add_subcommand("formula", "|SO_n(F_q)| of a given type");
  levels_formula->add_option("--type", type_arg)->required()->check(CLI::IsMember({"split", "nonsplit", "odd"}));
  levels_formula->add_option("--n", rank_arg)->required();
  levels_formula->add_option("--q", q_arg)->required();
  bind(levels_formula, "levels formula", [&] {
    inputs = {{"type", type_arg}, {"n", rank_arg}, {"q", q_arg}};
    Outcome o;
    o.results = {{"order", num(formula_order(parse_orthogonal_type(type_arg), rank_arg, q_arg))}};
    return o;
  });

  // fixtures
  auto* fixtures = app.add_subcommand("fixtures", "Worked examples");
  fixtures->require_subcommand(1);
  std::string fixture_name;
  auto* fixtures_list = fixtures->add_subcommand("list", "Known fixture names");
  bind(fixtures_list, "fixtures list", [&] {
    Outcome o;
    o.results = {{"fixtures", fixture_names()}};
    return o;
  });
  auto* fixtures_run = fixtures->add_subcommand("run", "Evaluate a fixture and diff against expectations");
  fixtures_run->add_option("name", fixture_name)->required();
  bind(fixtures_run, "fixtures run", [&] {
    inputs = {{"name", fixture_name}};
    const FixtureReport r = run_fixture(fixture_name);
    Table t{{"label", "expected", "actual", "passed", "informational", "provenance", "source"}, {}};
    for (const auto& c : r.checks)
      t.rows.push_back({c.label, c.expected, c.actual, c.passed, c.informational, to_string(c.provenance), c.source});
    Json grams = Json::array();
    for (const auto& g : r.grams) grams.push_back(mat(g.matrix()));
    Outcome o;
    o.results = {{"name", r.name}, {"description", r.description}, {"passed", r.passed},
                 {"grams", grams}, {"checks", t.records()}};
    o.table = std::move(t);
    return o;
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << CUBICCM_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!action) {
    err << "error: missing subcommand\n";
    return kExitUsage;
  }

  try {
    Outcome o = action();
    if (format == "csv") {
      if (!o.table) throw UsageError("csv output is only available for tabular commands");
      write_csv(*o.table, out);
      return kExitOk;
    }
    Json envelope{{"command", command},
                  {"inputs", inputs},
                  {"results", std::move(o.results)},
                  {"notes", std::move(o.notes)},
                  {"version", CUBICCM_VERSION}};
    out << envelope.dump(2) << '\n';
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace cubiccm::cli
