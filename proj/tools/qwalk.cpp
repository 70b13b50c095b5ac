// qwalk: command-line front end. Data goes to stdout (or --out), diagnostics
// to stderr. Exit status is 0 only when every check a subcommand performs passes.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwalk/bounds.hpp"
#include "qwalk/classical.hpp"
#include "qwalk/ctqw.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/figures.hpp"
#include "qwalk/group.hpp"
#include "qwalk/sampler.hpp"
#include "qwalk/spectral.hpp"

using json = nlohmann::ordered_json;
using namespace qwalk;

namespace {

struct Options {
  int n = 5;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string out;
  double epsilon = 1.0 / (2.0 * std::numbers::e);
  double T = 1000.0;
  long long T_prime = 20;
  long long trials = 10000;
  double t_max_real = 10.0;
  int from = 1;
  int to = 2;
  int steps = 200;
  bool matrix = false;
  bool full_matrix = false;
  int start = 1;
  std::string norm = "induced";
  int n_max = 201;
  int residue = 1;
  int su3_limit = 2001;
  long long t_max = 200;
  std::vector<double> T_list;
  std::vector<int> n_list;
  std::string invocation;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParameterError("cannot open " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

json dataset_json(const Dataset& d) {
  json rows = json::array();
  for (const auto& r : d.rows) {
    json row;
    for (std::size_t c = 0; c < d.columns.size(); ++c) {
      row[d.columns[c]] = std::isnan(r[c]) ? json(nullptr) : json(r[c]);
    }
    rows.push_back(row);
  }
  return rows;
}

void emit(const Options& o, Dataset d, const std::string& x = "",
          const std::vector<std::string>& ys = {}, bool log_y = false) {
  Output out(o.out);
  d.comment = o.invocation;
  if (o.format == "csv") {
    write_csv(out.stream(), d);
  } else if (o.format == "json") {
    out.stream() << dataset_json(d).dump(2) << '\n';
  } else if (o.format == "svg") {
    if (x.empty()) throw ParameterError("this subcommand has no SVG view");
    write_svg(out.stream(), d, x, ys, log_y);
  } else {
    throw ParameterError("unknown format " + o.format);
  }
}

void emit_json(const Options& o, const json& j) {
  Output out(o.out);
  out.stream() << j.dump(2) << '\n';
}

json mixing_json(const MixingReport& r) {
  json series = json::array();
  for (const auto& [t, d] : r.distance_series) series.push_back({t, d});
  return {{"threshold_time", r.threshold_time},
          {"distance_at_threshold", r.distance_at_threshold},
          {"prior_point", r.prior_point},
          {"distance_at_prior", std::isnan(r.distance_at_prior) ? json(nullptr)
                                                                : json(r.distance_at_prior)},
          {"norm", std::string(to_string(r.norm_kind))},
          {"epsilon", r.epsilon},
          {"horizon_verified", r.horizon_verified},
          {"horizon_end", r.horizon_end},
          {"series", series}};
}

int cmd_graph(const Options& o) {
  const CayleyGraph g = cayley_graph(o.n);
  const Eigen::MatrixXi sc = semi_cayley_adjacency(o.n);
  bool iso = true;
  for (const auto& x : all_elements(o.n)) {
    for (const auto& y : all_elements(o.n)) {
      const bool edge = g.has_edge(x.ordinal(), y.ordinal());
      iso = iso && (edge == (sc(phi(x).value(), phi(y).value()) == 1));
    }
  }
  if (o.format == "json") {
    json edges = json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({vertex_label(u), vertex_label(v)});
    emit_json(o, {{"n", o.n},
                  {"vertices", 2 * o.n},
                  {"edge_count", g.edges.size()},
                  {"connected", g.is_connected()},
                  {"phi_isomorphism", iso},
                  {"edges", edges}});
  } else if (o.matrix) {
    Dataset d;
    for (int j = 0; j < 2 * o.n; ++j) d.columns.push_back(std::to_string(vertex_label(j)));
    for (int i = 0; i < 2 * o.n; ++i) {
      std::vector<double> row;
      for (int j = 0; j < 2 * o.n; ++j) row.push_back(sc(i, j));
      d.rows.push_back(std::move(row));
    }
    emit(o, d);
  } else {
    Dataset d;
    d.columns = {"src", "dst"};
    for (const auto& [u, v] : g.edges) {
      d.rows.push_back({double(vertex_label(phi(all_elements(o.n)[u]).value())),
                        double(vertex_label(phi(all_elements(o.n)[v]).value()))});
    }
    emit(o, d);
  }
  if (!iso) std::cerr << "phi is not an isomorphism\n";
  return iso && g.is_connected() ? 0 : 1;
}

int cmd_spectrum(const Options& o) {
  const Spectrum s(o.n);
  Dataset d;
  d.columns = {"j", "m", "branch", "eigenvalue"};
  for (int j = 0; j < 2 * o.n; ++j) {
    const EigenIndex e = EigenIndex::from_flat(o.n, j);
    d.rows.push_back({double(j), double(e.m), e.branch == Branch::plus ? 1.0 : -1.0,
                      s.eigenvalue(e)});
  }
  emit(o, d);
  std::cerr << "lambda_2 = " << second_largest_eigenvalue(o.n) << '\n';
  return 0;
}

int cmd_walk(const Options& o) {
  if (o.steps < 1) throw ParameterError("--steps must be at least 1");
  WalkParams{o.n, o.t_max_real, 1.0}.validate();
  const VertexIndex from(o.n, vertex_from_label(o.n, o.from));
  const VertexIndex to(o.n, vertex_from_label(o.n, o.to));
  Dataset d;
  d.columns = {"t", "P_t"};
  for (int k = 0; k <= o.steps; ++k) {
    const double t = o.t_max_real * k / o.steps;
    d.rows.push_back({t, probability(o.n, from, to, t)});
  }
  emit(o, d, "t", {"P_t"});
  return 0;
}

int cmd_average(const Options& o) {
  WalkParams{o.n, 0.0, o.T}.validate();
  const AveragedWalkMatrix avg = averaged_matrix(o.n, o.T);
  Dataset d;
  if (o.full_matrix) {
    for (int j = 0; j < 2 * o.n; ++j) d.columns.push_back(std::to_string(vertex_label(j)));
    for (int i = 0; i < 2 * o.n; ++i) {
      std::vector<double> row;
      for (int j = 0; j < 2 * o.n; ++j) row.push_back(avg.entry(i, j));
      d.rows.push_back(std::move(row));
    }
  } else {
    d.columns = {"delta", "eps", "g_value"};
    for (int eps : {1, -1}) {
      for (int delta = 0; delta < o.n; ++delta) {
        d.rows.push_back({double(delta), double(eps), avg.g(delta, eps)});
      }
    }
  }
  emit(o, d);
  std::cerr << "distance to limit (" << o.norm << ") = "
            << distance_to_limit(avg, parse_norm_kind(o.norm)) << '\n';
  return 0;
}

int cmd_limit(const Options& o) {
  const LimitingDistribution pi = limiting_distribution(o.n);
  const bool sums = pi.rows_sum_to_one_exactly();
  const bool lower = pi.entries_bounded_below();
  emit_json(o, {{"n", o.n},
                {"denominator", pi.denominator},
                {"diagonal_numerator", pi.diagonal_numerator},
                {"offdiagonal_numerator", pi.offdiagonal_numerator},
                {"diagonal", pi.diagonal_value()},
                {"offdiagonal", pi.offdiagonal_value()},
                {"min_entry", pi.min_entry()},
                {"row_sum", 2.0 * pi.diagonal_value() + (2.0 * o.n - 2.0) * pi.offdiagonal_value()},
                {"rows_sum_to_one_exactly", sums},
                {"entries_at_least_inverse_4n2", lower}});
  return sums && lower ? 0 : 1;
}

int cmd_classical(const Options& o) {
  require_odd_order(o.n);
  const std::vector<ClassicalSeriesRow> series = classical_series(o.n, o.t_max);
  Dataset d;
  d.columns = {"t", "half_induced_norm_distance", "d_P"};
  bool reached = false;
  for (const auto& r : series) {
    d.rows.push_back({double(r.t), r.half_induced_distance, r.pairwise_column_distance});
    reached = reached || r.half_induced_distance <= o.epsilon;
  }
  emit(o, d, "t", {"half_induced_norm_distance", "d_P"});
  if (!reached) std::cerr << "epsilon not reached by t-max\n";
  return 0;
}

int cmd_classical_mix(const Options& o) {
  const MixingReport r = classical_mixing_time(o.n, o.epsilon, parse_norm_kind(o.norm));
  const ClassicalLowerBound lb = classical_lower_bound(o.n, o.epsilon);
  json j = mixing_json(r);
  j["n"] = o.n;
  j["lower_bound"] = lb.exact;
  j["lower_bound_relaxed"] = lb.relaxed;
  emit_json(o, j);
  return r.horizon_verified && r.threshold_time >= lb.exact ? 0 : 1;
}

int cmd_mix(const Options& o) {
  const NormKind kind = parse_norm_kind(o.norm);
  const double target = 1.0 / (2.0 * std::numbers::e);
  const MixingReport q = quantum_mixing_threshold(o.n, kind);
  const MixingReport c = classical_mixing_time(o.n, target, kind);
  const double lower = classical_lower_bound(o.n, target).exact;
  const double cap = theorem2_horizon(o.n);
  bool ok = c.threshold_time >= lower && c.horizon_verified;
  if (o.n >= 100) ok = ok && q.threshold_time <= cap;
  emit_json(o, {{"n", o.n},
                {"quantum", mixing_json(q)},
                {"classical", mixing_json(c)},
                {"classical_lower_bound", lower},
                {"theorem2_horizon", cap},
                {"speedup_ratio", c.threshold_time / q.threshold_time},
                {"pass", ok}});
  return ok ? 0 : 1;
}

int cmd_bounds(const Options& o) {
  const BoundsReport r = bounds_report(o.n);
  json flags = json::array();
  for (const auto& f : r.flags) {
    flags.push_back({{"name", f.name}, {"value", f.value}, {"bound", f.bound}, {"pass", f.pass()}});
  }
  const auto& d = r.decomposition;
  emit_json(o, {{"n", r.n},
                {"eigengap_inverse_sum", r.total_sum},
                {"decomposition",
                 {{"cross", d.cross},
                  {"within_c1", d.within_c1},
                  {"within_c2", d.within_c2},
                  {"total_8_4_4", d.total},
                  {"multiplicity_weighted_total", d.weighted_total},
                  {"relative_gap_8_4_4", r.decomposition_relative_gap}}},
                {"su", {{"su1", r.su.su1}, {"su2", r.su.su2}, {"su3", r.su.su3},
                        {"su3_unscaled", r.su.su3_unscaled()}, {"su4", r.su.su4},
                        {"cross_total", r.su.cross_total}}},
                {"within_branch", {{"c1", r.case5.c1}, {"c2", r.case5.c2},
                                   {"bound", r.case5.bound}}},
                {"f_n", std::isnan(r.f_n) ? json(nullptr) : json(r.f_n)},
                {"flags", flags},
                {"all_pass", r.all_pass()}});
  for (const auto& f : r.flags) {
    if (!f.pass()) std::cerr << "bound violated: " << f.name << '\n';
  }
  return r.all_pass() ? 0 : 1;
}

int cmd_conjecture(const Options& o) {
  const Dataset d = run_conjecture_figures(o.n_max, o.residue, o.su3_limit);
  emit(o, d, "n", {"f_n", "bound_100n2ln5", "bound_100n2ln"}, true);
  bool ok = true;
  for (double p : d.column("pass")) ok = ok && p == 1.0;
  if (!ok) std::cerr << "some rows fail\n";
  return ok ? 0 : 1;
}

int cmd_sample(const Options& o) {
  SamplerConfig cfg;
  cfg.n = o.n;
  cfg.start = vertex_from_label(o.n, o.start);
  cfg.T = o.T;
  cfg.T_prime = o.T_prime;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  const SampleHistogram h = empirical_check(cfg);
  const std::vector<double> p = h.probabilities();
  Dataset d;
  d.columns = {"vertex", "count", "empirical_prob"};
  for (std::size_t j = 0; j < p.size(); ++j) {
    d.rows.push_back({double(vertex_label(static_cast<int>(j))), double(h.counts[j]), p[j]});
  }
  const json summary = {{"tv_to_uniform", h.tv_to_uniform}, {"stderr_envelope", h.stderr_envelope}};
  if (o.format == "json") {
    emit_json(o, {{"histogram", dataset_json(d)}, {"summary", summary}});
  } else {
    Output out(o.out);
    d.comment = o.invocation;
    write_csv(out.stream(), d);
    out.stream() << summary.dump() << '\n';
  }
  return 0;
}

int cmd_figure_1b(const Options& o) {
  std::vector<long long> t_grid;
  for (long long t = 0; t <= o.t_max; ++t) t_grid.push_back(t);
  std::vector<double> T_grid = o.T_list;
  if (T_grid.empty()) {
    for (double T = 1.0; T <= 1e6 * (1 + 1e-12); T *= std::pow(10.0, 0.25)) T_grid.push_back(T);
  }
  emit(o, run_figure_1b(o.n, t_grid, T_grid), "t", {"classical_P(1,15)", "reference"});
  return 0;
}

int cmd_speedup(const Options& o) {
  const std::vector<int> ns = o.n_list.empty() ? std::vector<int>{21, 41, 81, 101} : o.n_list;
  const Dataset d = run_speedup_table(ns, o.epsilon);
  emit(o, d, "n", {"classical_tau", "quantum_T_star"}, true);
  bool ok = true;
  for (const auto& r : d.rows) {
    ok = ok && r[1] >= r[2] && r[5] > 0;
    if (r[0] >= 100) ok = ok && r[3] <= r[4];
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum and classical walks on dihedral Cayley graphs"};
  app.require_subcommand(1);
  Options o;
  for (int k = 0; k < argc; ++k) o.invocation += (k ? " " : "") + std::string(argv[k]);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "odd polygon order, n >= 3");
    sub->add_option("--seed", o.seed, "RNG seed");
    sub->add_option("--format", o.format, "csv, json or svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    sub->add_option("--out", o.out, "output file (default stdout)");
    sub->add_option("--epsilon", o.epsilon, "mixing threshold, 0 < epsilon < 1/2");
    sub->add_option("--T", o.T, "averaging horizon");
    sub->add_option("--T-prime", o.T_prime, "measured steps per sample");
    sub->add_option("--trials", o.trials, "Monte Carlo trials");
    sub->add_option("--norm", o.norm, "induced or entrywise");
    return sub;
  };

  struct Entry {
    CLI::App* app;
    int (*run)(const Options&);
  };
  std::vector<Entry> entries;
  auto add = [&](const char* name, const char* help, int (*run)(const Options&)) {
    CLI::App* sub = common(app.add_subcommand(name, help));
    entries.push_back({sub, run});
    return sub;
  };

  add("graph", "Cayley graph edges in semi-Cayley labels (1-based)", cmd_graph)
      ->add_flag("--matrix", o.matrix, "dense 0/1 adjacency instead of an edge list");
  add("spectrum", "the 2n eigenvalues of A/3", cmd_spectrum);
  auto* walk = add("walk", "P_t(from, to) on a time grid", cmd_walk);
  walk->add_option("--from", o.from, "1-based start vertex");
  walk->add_option("--to", o.to, "1-based target vertex");
  walk->add_option("--t-max", o.t_max_real, "last time");
  walk->add_option("--steps", o.steps, "grid intervals");
  add("average", "distinct values g(delta, eps) of the averaged matrix", cmd_average)
      ->add_flag("--full-matrix", o.full_matrix, "dense matrix instead");
  add("limit", "limiting distribution as exact rationals", cmd_limit);
  add("classical", "classical distance series", cmd_classical)
      ->add_option("--t-max", o.t_max, "last step");
  add("classical-mix", "classical threshold mixing time", cmd_classical_mix);
  add("mix", "quantum T* against classical tau_mix", cmd_mix);
  add("bounds", "eigengap sums against their analytic bounds", cmd_bounds);
  auto* conj = add("conjecture", "Su3 and f(n) sweep", cmd_conjecture);
  conj->add_option("--n-max", o.n_max, "largest n");
  conj->add_option("--residue", o.residue, "n mod 4")->check(CLI::IsMember({1, 3}));
  conj->add_option("--su3-limit", o.su3_limit, "compute Su3 up to this n");
  add("sample", "repeated-measurement sampler histogram", cmd_sample)
      ->add_option("--start", o.start, "1-based start vertex");
  auto* fig = add("figure-1b", "P(1,15) for the averaged quantum and the classical walk",
                  cmd_figure_1b);
  fig->add_option("--t-max", o.t_max, "classical steps 0..t-max");
  fig->add_option("--T-list", o.T_list, "averaging horizons (default 10^(k/4), k=0..24)");
  add("speedup", "classical/quantum threshold table", cmd_speedup)
      ->add_option("--n-list", o.n_list, "orders to tabulate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    for (const auto& e : entries) {
      if (e.app->parsed()) {
        if (e.app == fig && e.app->count("--n") == 0) o.n = 101;
        if (o.norm != "induced" && o.norm != "entrywise") throw ParameterError("unknown norm " + o.norm);
        require_odd_order(o.n);
        return e.run(o);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "qwalk: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
