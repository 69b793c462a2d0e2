// Command-line front end for the tradeoff library.
//
// Exit codes: 0 success, 2 input error, 3 theorem violation.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <tradeoff/io.hpp>
#include <tradeoff/tradeoff.hpp>

namespace {

using namespace tradeoff;
using io::json;

constexpr int kExitInput = 2;
constexpr int kExitViolation = 3;

struct RunConfig {
  std::string command;
  // input
  std::string table_path;
  std::string ray_path;
  std::string fixture;
  int n = 3;
  int grid_n = 41;
  // scans
  std::vector<std::string> alphas;
  std::string grid;
  std::string policy = "adversarial-max";
  std::string schedule = "geometric:1/2:1/2:30";
  int axis = 1;
  std::string upper = "9/10";
  std::size_t cells = 10;
  std::vector<std::size_t> refine;
  std::size_t triples = 500;
  std::size_t check_oracle = 0;
  std::string f_coeffs = "1,0,-2,0,1";
  std::string g_coeffs = "0,1";
  std::string window = "-2:2";
  std::string equal_h_tol = "1/1073741824";
  std::string h_schedule;
  // global
  std::string backend;
  double tol = kDefaultTolerance;
  std::uint64_t seed = 0;
  std::string format;
  unsigned threads = 1;
  int decimal = -1;
  std::string output;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

/// "start:end:count" (inclusive, evenly spaced) or "a,b,c".
std::vector<Rational> parse_alpha_list(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw input_error("grid must be start:end:count");
    const Rational lo = Rational::parse(parts[0]);
    const Rational hi = Rational::parse(parts[1]);
    const Rational count = Rational::parse(parts[2]);
    if (!count.is_integer() || count < Rational(1)) throw input_error("grid count must be a positive integer");
    const long k = count.mpq().get_num().get_si();
    std::vector<Rational> out;
    if (k == 1) return {lo};
    for (long i = 0; i < k; ++i) out.push_back(lo + (hi - lo) * Rational(i, k - 1));
    return out;
  }
  std::vector<Rational> out;
  for (const auto& p : split(text, ','))
    if (!p.empty()) out.push_back(Rational::parse(p));
  return out;
}

class Runner {
 public:
  explicit Runner(RunConfig cfg) : cfg_(std::move(cfg)), fmt_{cfg_.decimal} {}

  int run() {
    if (cfg_.command == "critpoints") return emit(critpoints());
    if (cfg_.command == "fixture") return emit(fixture_json());
    const std::string backend = resolve_backend();
    if (backend == "approx") return dispatch<Approx>();
    return dispatch<Rational>();
  }

 private:
  int emit(const std::string& text) {
    if (cfg_.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg_.output);
      if (!out) throw input_error("cannot write '" + cfg_.output + "'");
      out << text;
    }
    return 0;
  }
  int emit(const json& doc) { return emit(doc.dump(2) + "\n"); }

  std::string format_or(const std::string& fallback) const {
    const std::string f = cfg_.format.empty() ? fallback : cfg_.format;
    if (f != "json" && f != "csv") throw input_error("format must be json or csv");
    return f;
  }

  std::string resolve_backend() {
    if (!cfg_.backend.empty()) return cfg_.backend;
    if (!cfg_.table_path.empty()) {
      doc_ = io::read_json_file(cfg_.table_path);
      return io::table_backend(*doc_);
    }
    return "exact";
  }

  template <Scalar S>
  S to_scalar(const Rational& q) const {
    return scalar_traits<S>::from_rational(q, cfg_.tol);
  }

  template <Scalar S>
  std::vector<S> alphas_or(const std::vector<Rational>& fallback) const {
    std::vector<Rational> qs;
    for (const auto& a : cfg_.alphas)
      for (const auto& q : parse_alpha_list(a)) qs.push_back(q);
    if (!cfg_.grid.empty())
      for (const auto& q : parse_alpha_list(cfg_.grid)) qs.push_back(q);
    if (qs.empty()) qs = fallback;
    std::vector<S> out;
    for (const auto& q : qs) out.push_back(to_scalar<S>(q));
    return out;
  }

  ObjectiveTable<Rational> exact_fixture() const {
    if (cfg_.fixture == "remark12") return remark12_fixture(cfg_.n);
    if (cfg_.fixture == "remark12-2d") return remark12_fixture_2d(cfg_.n);
    if (cfg_.fixture == "remark12-ray") return ray_vertex_table(remark12_ray(cfg_.n));
    if (cfg_.fixture == "penalty") return penalty_table(cfg_.grid_n);
    throw input_error("unknown fixture '" + cfg_.fixture + "' (remark12, remark12-2d, remark12-ray, penalty)");
  }

  json fixture_json() const {
    if (cfg_.fixture.empty()) throw input_error("fixture needs --fixture NAME");
    if (cfg_.backend == "approx") return io::table_to_json(convert_table<Approx>(exact_fixture(), cfg_.tol), fmt_);
    return io::table_to_json(exact_fixture(), fmt_);
  }

  template <Scalar S>
  ObjectiveTable<S> load_table() {
    if (!cfg_.table_path.empty()) {
      if (!doc_) doc_ = io::read_json_file(cfg_.table_path);
      return io::table_from_json<S>(*doc_, cfg_.tol);
    }
    if (!cfg_.ray_path.empty()) return ray_vertex_table(load_ray<S>());
    if (cfg_.fixture.empty()) throw input_error("need --table, --ray or --fixture");
    return convert_table<S>(exact_fixture(), cfg_.tol);
  }

  template <Scalar S>
  PLRayDomain<S> load_ray() {
    return io::ray_from_json<S>(io::read_json_file(cfg_.ray_path), cfg_.tol);
  }

  template <Scalar S>
  ConcavePLFunction<S> envelope_for(const ObjectiveTable<S>& table) {
    if (!cfg_.ray_path.empty()) return build_ray_envelope(load_ray<S>());
    if (cfg_.fixture == "remark12-ray") return build_ray_envelope(convert_ray<S>(remark12_ray(cfg_.n)));
    return build_envelope(table);
  }

  template <Scalar S>
  PLRayDomain<S> convert_ray(const PLRayDomain<Rational>& r) const {
    PLRayDomain<S> out;
    for (const auto& x : r.breakpoints) out.breakpoints.push_back(to_scalar<S>(x));
    for (const auto& x : r.slopes) out.slopes.push_back(to_scalar<S>(x));
    out.c = to_scalar<S>(r.c);
    out.f0 = to_scalar<S>(r.f0);
    return out;
  }

  template <Scalar S>
  int dispatch() {
    const std::string& c = cfg_.command;
    if (c == "envelope") return emit(envelope<S>());
    if (c == "exceptional") return emit(exceptional<S>());
    if (c == "gstep") return emit(gstep<S>());
    if (c == "analyze") return emit(analyze<S>());
    if (c == "sequences") return emit(sequences<S>());
    if (c == "multiscan") return emit(multiscan<S>());
    if (c == "penalty-demo") return emit(penalty<S>());
    throw input_error("unknown command '" + c + "'");
  }

  template <Scalar S>
  std::string envelope() {
    const auto table = load_table<S>();
    const auto env = envelope_for(table);
    json doc = io::envelope_to_json(env, fmt_);
    if (cfg_.check_oracle > 0) {
      // dense grid over [0, 2 * last breakpoint] (or [0, 1]) plus every breakpoint
      S span = env.breakpoints().empty() ? S(1) : env.breakpoints().back() * S(2);
      if (env.domain_end()) span = *env.domain_end();
      std::vector<S> grid = env.breakpoints();
      for (std::size_t k = 0; k < cfg_.check_oracle; ++k)
        grid.push_back(span * S(static_cast<long>(k)) / S(static_cast<long>(cfg_.check_oracle)));
      std::size_t mismatches = 0;
      for (const S& a : grid)
        if (!(env.value(a) == direct_min(table, std::span<const S>(&a, 1)))) ++mismatches;
      doc["oracle_check"] = {{"points", grid.size()}, {"mismatches", mismatches}, {"pass", mismatches == 0}};
      if (mismatches) throw theorem_violation("envelope disagrees with the direct minimum");
    }
    // human-readable segment table on stderr
    std::ostringstream t;
    t << "segment  from        to          slope       active\n";
    for (std::size_t k = 0; k < env.segment_count(); ++k) {
      const std::string from = k == 0 ? "0" : io::scalar_text(env.breakpoints()[k - 1], fmt_);
      const std::string to = k < env.breakpoints().size() ? io::scalar_text(env.breakpoints()[k], fmt_)
                             : env.domain_end()          ? io::scalar_text(*env.domain_end(), fmt_)
                                                         : std::string("inf");
      std::string ids;
      for (std::size_t i : env.active()[k]) ids += (ids.empty() ? "" : ",") + table[i].id;
      t << k << "        " << from << std::string(12 - std::min<std::size_t>(11, from.size()), ' ') << to
        << std::string(12 - std::min<std::size_t>(11, to.size()), ' ') << io::scalar_text(env.slopes()[k], fmt_)
        << "  " << ids << "\n";
    }
    std::cerr << t.str();
    return doc.dump(2) + "\n";
  }

  template <Scalar S>
  std::string exceptional() {
    const auto table = load_table<S>();
    const auto env = envelope_for(table);
    const auto reports = exceptional_set(table, env);
    if (format_or("csv") == "csv") return io::exceptional_csv(reports, fmt_);
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(io::report_to_json(table, r, fmt_));
    return arr.dump(2) + "\n";
  }

  template <Scalar S>
  std::string gstep() {
    const auto table = load_table<S>();
    const auto step = g_step(envelope_for(table));
    if (format_or("json") == "json") return io::gstep_to_json(step, fmt_).dump(2) + "\n";
    std::string out = "from,to,g\n";
    const auto& b = step.breakpoints();
    for (std::size_t k = 0; k < step.values().size(); ++k)
      out += (k == 0 ? std::string("0") : io::scalar_text(b[k - 1], fmt_)) + "," +
             (k < b.size() ? io::scalar_text(b[k], fmt_) : std::string("inf")) + "," +
             io::scalar_text(step.values()[k], fmt_) + "\n";
    return out;
  }

  template <Scalar S>
  std::string analyze() {
    const auto table = load_table<S>();
    const auto env = envelope_for(table);
    auto alphas = alphas_or<S>({});
    if (alphas.empty()) throw input_error("analyze needs --alpha or --grid");
    std::sort(alphas.begin(), alphas.end(), scalar_traits<S>::order_less);
    std::vector<std::optional<InvarianceReport<S>>> reports(alphas.size());
    parallel_for(alphas.size(), cfg_.threads, [&](std::size_t i) { reports[i] = analyze_alpha(table, env, alphas[i]); });

    std::optional<std::vector<S>> hs;
    if (!cfg_.h_schedule.empty()) {
      hs.emplace();
      for (const auto& q : parse_alpha_list(cfg_.h_schedule)) hs->push_back(to_scalar<S>(q));
    }

    if (format_or("json") == "csv") {
      std::string out = "alpha,argmin,g_min,g_max,g_plus,g_minus,exceptional\n";
      for (const auto& r : reports) {
        std::string ids;
        for (std::size_t i : r->argmin) ids += (ids.empty() ? "" : ";") + table[i].id;
        out += io::scalar_text(r->alpha, fmt_) + "," + ids + "," + io::scalar_text(r->g_min, fmt_) + "," +
               io::scalar_text(r->g_max, fmt_) + "," + io::scalar_text(r->g_plus, fmt_) + "," +
               io::scalar_text(r->g_minus, fmt_) + "," + (r->exceptional ? "true" : "false") + "\n";
      }
      return out;
    }
    json arr = json::array();
    for (const auto& r : reports) {
      json doc = io::report_to_json(table, *r, fmt_);
      if (hs && S(0) < r->alpha) {
        const auto d = derivative_identities<S>(table, env, r->alpha, *hs);
        json probes = json::array();
        for (const auto& p : d.probes)
          probes.push_back({{"h", io::scalar_json(p.h, fmt_)},
                            {"left", p.left ? io::scalar_json(*p.left, fmt_) : json(nullptr)},
                            {"right", p.right ? io::scalar_json(*p.right, fmt_) : json(nullptr)},
                            {"left_checked", p.left_checked},
                            {"right_checked", p.right_checked}});
        doc["derivative"] = {{"exists", d.derivative_exists}, {"probes", std::move(probes)}};
      }
      arr.push_back(std::move(doc));
    }
    return (arr.size() == 1 ? arr[0] : arr).dump(2) + "\n";
  }

  template <Scalar S>
  std::vector<S> eps_schedule() const {
    std::vector<S> out;
    if (cfg_.schedule.rfind("geometric:", 0) == 0) {
      const auto parts = split(cfg_.schedule.substr(10), ':');
      if (parts.size() != 3) throw input_error("schedule must be geometric:first:ratio:count or a list");
      const Rational count = Rational::parse(parts[2]);
      if (!count.is_integer() || count < Rational(1)) throw input_error("schedule count must be a positive integer");
      return geometric_schedule(to_scalar<S>(Rational::parse(parts[0])), to_scalar<S>(Rational::parse(parts[1])),
                                static_cast<std::size_t>(count.mpq().get_num().get_si()));
    }
    for (const auto& q : parse_alpha_list(cfg_.schedule)) out.push_back(to_scalar<S>(q));
    return out;
  }

  template <Scalar S>
  std::string sequences() {
    const auto table = load_table<S>();
    const auto env = envelope_for(table);
    const auto alphas = alphas_or<S>({});
    if (alphas.empty()) throw input_error("sequences needs --alpha");
    const auto schedule = eps_schedule<S>();
    std::vector<SequencePolicy> policies;
    if (cfg_.policy == "all") {
      policies = {SequencePolicy::adversarial_max, SequencePolicy::adversarial_min, SequencePolicy::random,
                  SequencePolicy::alternating, SequencePolicy::constant};
    } else {
      policies = {parse_policy(cfg_.policy)};
    }
    json arr = json::array();
    for (const S& a : alphas) {
      const auto report = analyze_alpha(table, env, a);
      for (auto p : policies) {
        const auto seq = generate_eps_sequence<S>(table, env, a, schedule, p, cfg_.seed);
        const auto verdict = verify_sequence_bracket(seq, report);
        json doc = io::sequence_to_json(table, seq, verdict, fmt_);
        doc["exceptional"] = report.exceptional;
        doc["g_plus"] = io::scalar_json(report.g_plus, fmt_);
        doc["g_minus"] = io::scalar_json(report.g_minus, fmt_);
        arr.push_back(std::move(doc));
      }
    }
    return (arr.size() == 1 ? arr[0] : arr).dump(2) + "\n";
  }

  template <Scalar S>
  std::string multiscan() {
    const auto table = load_table<S>();
    const std::size_t m = table.regularizers();
    if (cfg_.axis < 1 || static_cast<std::size_t>(cfg_.axis) > m)
      throw input_error("--axis must be in 1..m");
    const std::size_t axis = static_cast<std::size_t>(cfg_.axis - 1);
    const S upper = to_scalar<S>(Rational::parse(cfg_.upper));
    const auto grid = AlphaGrid<S>::uniform(m, upper, cfg_.cells);
    const auto measure = exceptional_measure(table, grid, axis, cfg_.threads);
    if (format_or("json") == "csv") return io::slices_csv(measure, fmt_);

    std::vector<std::size_t> levels = cfg_.refine.empty() ? std::vector<std::size_t>{cfg_.cells} : cfg_.refine;
    const auto fractions = cell_fraction_refinement<S>(table, upper, axis, levels, cfg_.threads);
    json doc = io::multiscan_summary(measure, fractions, fmt_);
    json lv = json::array();
    for (auto c : levels) lv.push_back(c);
    doc["cells_per_axis"] = std::move(lv);
    const auto conc = concavity_check(table, grid, cfg_.seed, cfg_.triples);
    doc["concavity"] = {{"triples", conc.triples}, {"tight", conc.equalities}, {"pass", true}};
    const auto semi = semicontinuity_check(table, grid, axis);
    doc["semicontinuity"] = {{"lines", semi.lines},
                             {"breakpoints_checked", semi.breakpoints_checked},
                             {"bound", io::scalar_json(semi.bound, fmt_)},
                             {"pass", true}};
    return doc.dump(2) + "\n";
  }

  json critpoints() {
    const auto w = split(cfg_.window, ':');
    if (w.size() != 2) throw input_error("window must be lo:hi");
    PolynomialPair pair{Polynomial::parse(cfg_.f_coeffs), Polynomial::parse(cfg_.g_coeffs), Rational::parse(w[0]),
                        Rational::parse(w[1])};
    pair.validate();
    std::vector<Rational> alphas;
    for (const auto& a : cfg_.alphas)
      for (const auto& q : parse_alpha_list(a)) alphas.push_back(q);
    for (const auto& q : parse_alpha_list(cfg_.grid.empty() && alphas.empty() ? "0:1:11" : cfg_.grid)) alphas.push_back(q);
    const Rational tol = Rational::parse(cfg_.equal_h_tol);
    json doc;
    json reports = json::array(), flagged = json::array();
    for (const auto& r : invariance_scan(pair, alphas, tol)) {
      if (r.flagged()) flagged.push_back({{"alpha", io::scalar_text(r.alpha, fmt_)}, {"g_gap", io::scalar_text(r.max_gap(), fmt_)}});
      reports.push_back(io::critical_to_json(r, fmt_));
    }
    doc["flagged"] = std::move(flagged);
    doc["reports"] = std::move(reports);
    return doc;
  }

  template <Scalar S>
  std::string penalty() {
    const auto table = convert_table<S>(penalty_table(cfg_.grid_n), cfg_.tol);
    const auto env = build_envelope(table);
    auto alphas = alphas_or<S>(penalty_alphas());
    std::sort(alphas.begin(), alphas.end(), scalar_traits<S>::order_less);
    const auto scan = penalty_scan<S>(table, env, alphas);
    if (format_or("json") == "csv") {
      std::string out = "alpha,argmin,g,exceptional\n";
      for (const auto& row : scan.rows) {
        std::string ids;
        for (std::size_t i : row.report.argmin) ids += (ids.empty() ? "" : ";") + table[i].id;
        out += io::scalar_text(row.report.alpha, fmt_) + "," + ids + "," +
               (row.shared_g ? io::scalar_text(*row.shared_g, fmt_) : std::string("")) + "," +
               (row.report.exceptional ? "true" : "false") + "\n";
      }
      return out;
    }
    json rows = json::array();
    for (const auto& row : scan.rows) {
      json r = io::report_to_json(table, row.report, fmt_);
      json pts = json::array();
      for (std::size_t i : row.report.argmin) {
        json p = json::array();
        for (const auto& x : *table[i].u) p.push_back(io::scalar_json(x, fmt_));
        pts.push_back(std::move(p));
      }
      r["points"] = std::move(pts);
      r["shared_g"] = row.shared_g ? io::scalar_json(*row.shared_g, fmt_) : json(nullptr);
      rows.push_back(std::move(r));
    }
    json exc = json::array();
    for (const auto& r : exceptional_set(table, env)) exc.push_back(io::scalar_json(r.alpha, fmt_));
    json doc;
    doc["candidates"] = table.size();
    doc["exceptional_alphas"] = std::move(exc);
    doc["step_non_increasing"] = scan.step_non_increasing;
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
  }

  RunConfig cfg_;
  io::ScalarFormat fmt_;
  std::optional<json> doc_;
};

void add_input_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--table", cfg.table_path, "Table JSON file");
  sub->add_option("--ray", cfg.ray_path, "Piecewise-linear ray JSON file");
  sub->add_option("--fixture", cfg.fixture, "Built-in fixture: remark12, remark12-2d, remark12-ray, penalty");
  sub->add_option("--n", cfg.n, "Fixture size");
  sub->add_option("--grid-n", cfg.grid_n, "Points per axis for the penalty fixture");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Exact analysis of parametric regularized minimization F + alpha G"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--backend", cfg.backend, "Scalar backend")->check(CLI::IsMember({"exact", "approx"}));
  app.add_option("--tol", cfg.tol, "Comparison tolerance for the approx backend");
  app.add_option("--seed", cfg.seed, "Seed for random policies and triples");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", cfg.threads, "Worker threads for grid sweeps");
  app.add_option("--decimal", cfg.decimal, "Print exact values with k decimal digits");
  app.add_option("-o,--output", cfg.output, "Write output to a file instead of stdout");

  auto* env = app.add_subcommand("envelope", "Lower envelope of a single-parameter table");
  add_input_options(env, cfg);
  env->add_option("--check-oracle", cfg.check_oracle, "Compare against the direct minimum on K grid points");

  auto* exc = app.add_subcommand("exceptional", "Exceptional alpha values (CSV)");
  add_input_options(exc, cfg);

  auto* gs = app.add_subcommand("gstep", "Step function alpha -> G_alpha");
  add_input_options(gs, cfg);

  auto* an = app.add_subcommand("analyze", "Invariance report at given alpha");
  add_input_options(an, cfg);
  an->add_option("--alpha", cfg.alphas, "Alpha values (list a,b,c or start:end:count)");
  an->add_option("--grid", cfg.grid, "Alpha grid start:end:count");
  an->add_option("--steps", cfg.h_schedule, "Difference-quotient steps for the derivative identities");

  auto* sq = app.add_subcommand("sequences", "Eps-minimizing sequences and their G traces");
  add_input_options(sq, cfg);
  sq->add_option("--alpha", cfg.alphas, "Alpha values");
  sq->add_option("--policy", cfg.policy, "adversarial-max, adversarial-min, random, alternating, constant, all");
  sq->add_option("--schedule", cfg.schedule, "geometric:first:ratio:count or an explicit list");

  auto* ms = app.add_subcommand("multiscan", "Axis-parallel slices of a multi-parameter table");
  add_input_options(ms, cfg);
  ms->add_option("--axis", cfg.axis, "Axis j in 1..m");
  ms->add_option("--upper", cfg.upper, "Grid covers [0, upper]^m");
  ms->add_option("--cells", cfg.cells, "Cells per axis");
  ms->add_option("--refine", cfg.refine, "Cells-per-axis levels for the cell-fraction study")->delimiter(',');
  ms->add_option("--triples", cfg.triples, "Random triples for the concavity check");

  auto* cp = app.add_subcommand("critpoints", "Critical points of polynomial F + alpha G");
  cp->add_option("--F", cfg.f_coeffs, "F coefficients, low to high degree");
  cp->add_option("--G", cfg.g_coeffs, "G coefficients, low to high degree");
  cp->add_option("--window", cfg.window, "Window lo:hi");
  cp->add_option("--alpha", cfg.alphas, "Alpha values");
  cp->add_option("--grid", cfg.grid, "Alpha grid start:end:count");
  cp->add_option("--equal-h-tol", cfg.equal_h_tol, "Tolerance for grouping equal H values");

  auto* pd = app.add_subcommand("penalty-demo", "Penalty sweep on a grid problem");
  pd->add_option("--grid-n", cfg.grid_n, "Points per axis");
  pd->add_option("--alpha", cfg.alphas, "Alpha values");
  pd->add_option("--grid", cfg.grid, "Alpha grid start:end:count");

  auto* fx = app.add_subcommand("fixture", "Print a built-in fixture as a table file");
  add_input_options(fx, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return Runner(cfg).run();
  } catch (const theorem_violation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const tradeoff::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
