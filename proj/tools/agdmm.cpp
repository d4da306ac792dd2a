#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "agdmm/asymptotic.hpp"
#include "agdmm/codec.hpp"
#include "agdmm/sim.hpp"

using namespace agdmm;
using nlohmann::ordered_json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(s, &used);
  } catch (const std::exception&) {
    fail(Errc::BadInput, "bad integer '" + s + "'");
  }
  require(used == s.size(), Errc::BadInput, "bad integer '" + s + "'");
  return value;
}

std::string fixed10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10f", v);
  return buf;
}

Field field_from_order(std::int64_t q) {
  require(q >= 2, Errc::BadInput, "field order must be at least 2");
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  std::int64_t k = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  require(rest == 1, Errc::BadInput, "field order must be a prime power");
  return Field(p, k);
}

// "hermitian:<q0>" or "rational:<q>"
Curve parse_curve(const std::string& spec) {
  const auto colon = spec.find(':');
  require(colon != std::string::npos, Errc::BadInput, "curve spec needs '<kind>:<parameter>'");
  const std::string kind = spec.substr(0, colon);
  const std::int64_t value = parse_int(spec.substr(colon + 1));
  if (kind == "hermitian") return Curve::hermitian(value);
  if (kind == "rational") return Curve::rational(field_from_order(value));
  fail(Errc::BadInput, "unknown curve kind '" + kind + "'");
}

ProblemKind parse_kind(const std::string& kind) {
  if (kind == "poly") return ProblemKind::Poly;
  if (kind == "matdot") return ProblemKind::Matdot;
  fail(Errc::BadInput, "kind must be 'poly' or 'matdot'");
}

CsvMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::IoError, "cannot open '" + path + "'");
  return read_matrix_csv(in);
}

void store_matrix(const std::string& path, const Field& gf, const Matrix& m) {
  std::ofstream out(path);
  require(out.good(), Errc::IoError, "cannot open '" + path + "' for writing");
  write_matrix_csv(out, gf, m);
  out.flush();
  require(out.good(), Errc::IoError, "write to '" + path + "' failed");
}

std::int64_t round_up(std::int64_t v, std::int64_t to) { return (v + to - 1) / to * to; }

Matrix zero_padded(const Matrix& a, std::int64_t rows, std::int64_t cols) {
  if (rows == a.rows() && cols == a.cols()) return a;
  Matrix out(rows, cols);
  for (std::int64_t r = 0; r < a.rows(); ++r)
    for (std::int64_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  return out;
}

Matrix cropped(const Matrix& a, std::int64_t rows, std::int64_t cols) {
  if (rows == a.rows() && cols == a.cols()) return a;
  Matrix out(rows, cols);
  for (std::int64_t r = 0; r < rows; ++r)
    for (std::int64_t c = 0; c < cols; ++c) out(r, c) = a(r, c);
  return out;
}

ordered_json semigroup_json(const NumericalSemigroup& s) {
  return ordered_json{{"generators", s.generators()}, {"conductor", s.conductor()}};
}

ordered_json solution_json(const SolutionPair& sol) {
  ordered_json j;
  j["kind"] = sol.kind == ProblemKind::Poly ? "poly" : "matdot";
  j["method"] = sol.method;
  j["m"] = sol.m;
  if (sol.kind == ProblemKind::Poly) j["n"] = sol.n;
  j["deg_a"] = sol.deg_a;
  j["deg_b"] = sol.deg_b;
  if (sol.d) j["d"] = *sol.d;
  j["threshold"] = sol.threshold;
  j["semigroup"] = semigroup_json(sol.semigroup);
  return j;
}

// "N=125,c=20;N=1000,c=90"
std::vector<SeriesPoint> parse_series(const std::string& text) {
  std::vector<SeriesPoint> out;
  if (text.empty()) return out;
  for (const auto& chunk : split(text, ';')) {
    if (chunk.empty()) continue;
    std::optional<std::int64_t> workers, conductor;
    for (const auto& item : split(chunk, ',')) {
      const auto eq = item.find('=');
      require(eq != std::string::npos, Errc::BadInput, "series point needs key=value pairs");
      const std::string key = item.substr(0, eq);
      const std::int64_t value = parse_int(item.substr(eq + 1));
      if (key == "N")
        workers = value;
      else if (key == "c")
        conductor = value;
      else
        fail(Errc::BadInput, "unknown series key '" + key + "'");
    }
    require(workers && conductor, Errc::BadInput, "series point needs N=..,c=..");
    out.push_back({*workers, *conductor});
  }
  return out;
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
  const char* env = std::getenv("AGDMM_SEED");
  if (env == nullptr) return flag_seed;
  std::size_t used = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(env, &used);
  } catch (const std::exception&) {
    fail(Errc::BadInput, "AGDMM_SEED must be an unsigned integer");
  }
  require(used == std::string(env).size(), Errc::BadInput,
          "AGDMM_SEED must be an unsigned integer");
  return value;
}

// nearest-rank percentile on an ascending vector
double percentile(const std::vector<double>& sorted, double p) {
  const auto rank =
      static_cast<std::size_t>(std::ceil(p * static_cast<double>(sorted.size())));
  return sorted[std::max<std::size_t>(rank, 1) - 1];
}

struct Output {
  bool pretty = false;
  void emit(const ordered_json& j) const { std::cout << j.dump(pretty ? 2 : -1) << "\n"; }
  void emit_line(const ordered_json& j) const { std::cout << j.dump() << "\n"; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algebraic geometry codes for straggler-tolerant matrix multiplication"};
  app.require_subcommand(1);
  app.fallthrough();

  Output out;
  app.add_flag("--pretty", out.pretty, "indent JSON output");

  std::vector<std::int64_t> gens;
  std::int64_t m = 0, n = -1, apery_n = 0, workers = 0, bound = -1, q = 0, asym_m = -1;
  std::int64_t trials = 100;
  std::uint64_t seed = 0;
  std::string kind_name, method, curve_spec, model_spec, mode, series_text;
  std::string a_path, b_path, out_path;
  std::vector<std::int64_t> drops;
  bool pad = false;

  auto* sg_cmd = app.add_subcommand("semigroup", "numerical semigroup reports");
  sg_cmd->require_subcommand(1);
  sg_cmd->fallthrough();

  auto* sg_info = sg_cmd->add_subcommand("info", "conductor, gaps and sparsity");
  sg_info->fallthrough();
  sg_info->add_option("--gens", gens, "generators")->delimiter(',')->required();
  sg_info->callback([&] {
    const auto s = NumericalSemigroup::from_generators(gens);
    const auto profile = s.delta_profile();
    out.emit(ordered_json{{"generators", s.generators()},
                          {"conductor", s.conductor()},
                          {"gaps", s.gaps()},
                          {"genus", s.genus()},
                          {"n", s.left_part_size()},
                          {"multiplicity", s.multiplicity()},
                          {"sparse", s.is_sparse()},
                          {"delta_argmax", profile.argmax},
                          {"delta_max", profile.max_value}});
  });

  auto* sg_apery = sg_cmd->add_subcommand("apery", "Apery set of a nonzero element");
  sg_apery->fallthrough();
  sg_apery->add_option("--gens", gens, "generators")->delimiter(',')->required();
  sg_apery->add_option("--n", apery_n, "element of the semigroup")->required();
  sg_apery->callback([&] {
    const auto s = NumericalSemigroup::from_generators(gens);
    out.emit(ordered_json{
        {"generators", s.generators()}, {"n", apery_n}, {"apery", s.apery(apery_n)}});
  });

  auto* sg_delta = sg_cmd->add_subcommand("delta", "threshold gain profile");
  sg_delta->fallthrough();
  sg_delta->add_option("--gens", gens, "generators")->delimiter(',')->required();
  sg_delta->callback([&] {
    const auto s = NumericalSemigroup::from_generators(gens);
    const auto profile = s.delta_profile();
    out.emit(ordered_json{{"generators", s.generators()},
                          {"conductor", s.conductor()},
                          {"domain", profile.domain},
                          {"values", profile.values},
                          {"delta_argmax", profile.argmax},
                          {"delta_max", profile.max_value},
                          {"sparse", s.is_sparse()}});
  });

  auto* con_cmd = app.add_subcommand("construct", "degree-set constructions");
  con_cmd->require_subcommand(1);
  con_cmd->fallthrough();

  auto* con_poly = con_cmd->add_subcommand("poly", "split both factors");
  con_poly->fallthrough();
  con_poly->add_option("--gens", gens, "generators")->delimiter(',')->required();
  con_poly->add_option("--method", method, "classical|trivial|apery|recursive|zero")->required();
  con_poly->add_option("--m", m, "row blocks of A")->required();
  con_poly->add_option("--n", n, "column blocks of B")->required();
  con_poly->callback([&] {
    const auto s = NumericalSemigroup::from_generators(gens);
    const auto sol = build_by_method(s, ProblemKind::Poly, method, m, n);
    auto j = solution_json(sol);
    const auto lb = poly_lower_bound(s, m, n);
    j["lower_bound"] = lb ? ordered_json(*lb) : ordered_json(nullptr);
    out.emit(j);
  });

  auto* con_md = con_cmd->add_subcommand("matdot", "split along the inner dimension");
  con_md->fallthrough();
  con_md->add_option("--gens", gens, "generators")->delimiter(',')->required();
  con_md->add_option("--method", method, "classical|trivial|optimal")->required();
  con_md->add_option("--m", m, "inner-dimension blocks")->required();
  con_md->callback([&] {
    const auto s = NumericalSemigroup::from_generators(gens);
    out.emit(solution_json(build_by_method(s, ProblemKind::Matdot, method, m, m)));
  });

  auto* con_table = con_cmd->add_subcommand("table", "threshold of each poly construction");
  con_table->fallthrough();
  con_table->add_option("--gens", gens, "generators")->delimiter(',')->required();
  con_table->add_option("--m", m, "row blocks of A")->required();
  con_table->add_option("--n", n, "column blocks of B")->required();
  con_table->callback([&] {
    const auto s = NumericalSemigroup::from_generators(gens);
    ordered_json rows = ordered_json::array();
    for (const char* name : {"trivial", "apery", "recursive"}) {
      const auto sol = build_by_method(s, ProblemKind::Poly, name, m, n);
      rows.push_back(ordered_json{{"method", name}, {"threshold", sol.threshold}});
    }
    out.emit(ordered_json{{"generators", s.generators()},
                          {"conductor", s.conductor()},
                          {"m", m},
                          {"n", n},
                          {"rows", rows}});
  });

  auto* search_cmd = app.add_subcommand("search", "exhaustive minimum-threshold search");
  search_cmd->fallthrough();
  search_cmd->add_option("--kind", kind_name, "poly|matdot")->required();
  search_cmd->add_option("--gens", gens, "generators")->delimiter(',')->required();
  search_cmd->add_option("--m", m, "blocks of A")->required();
  search_cmd->add_option("--n", n, "column blocks of B (poly only)");
  search_cmd->add_option("--bound", bound, "largest degree considered");
  search_cmd->callback([&] {
    const auto s = NumericalSemigroup::from_generators(gens);
    const auto kind = parse_kind(kind_name);
    if (kind == ProblemKind::Poly)
      require(n >= 1, Errc::BadInput, "poly search needs --n");
    const std::int64_t cols = kind == ProblemKind::Poly ? n : m;
    const std::int64_t limit = bound >= 0 ? bound : default_search_bound(s, m, cols);
    auto j = solution_json(brute_force_optimal(s, kind, m, cols, limit));
    j["bound"] = limit;
    out.emit(j);
  });

  auto* dmm_cmd = app.add_subcommand("dmm", "distributed multiplication runs");
  dmm_cmd->require_subcommand(1);
  dmm_cmd->fallthrough();

  auto* dmm_run = dmm_cmd->add_subcommand("run", "encode, multiply, drop, decode");
  dmm_run->fallthrough();
  dmm_run->add_option("--curve", curve_spec, "hermitian:<q0> or rational:<q>")->required();
  dmm_run->add_option("--kind", kind_name, "poly|matdot")->required();
  dmm_run->add_option("--method", method, "construction method")->required();
  dmm_run->add_option("--m", m, "blocks of A")->required();
  dmm_run->add_option("--n", n, "column blocks of B (poly only)");
  dmm_run->add_option("--workers", workers, "worker count")->required();
  dmm_run->add_option("--a", a_path, "left factor CSV")->required();
  dmm_run->add_option("--b", b_path, "right factor CSV")->required();
  dmm_run->add_option("--drop", drops, "worker indices to drop")->delimiter(',');
  dmm_run->add_flag("--pad", pad, "zero-pad to make the blocks divide");
  dmm_run->add_option("--out", out_path, "product CSV")->required();
  dmm_run->callback([&] {
    const Curve curve = parse_curve(curve_spec);
    const auto kind = parse_kind(kind_name);
    if (kind == ProblemKind::Poly) require(n >= 1, Errc::BadInput, "poly runs need --n");
    const auto scheme =
        scheme_build(kind, curve, curve.weierstrass(), method, m,
                     kind == ProblemKind::Poly ? std::optional<std::int64_t>(n) : std::nullopt,
                     workers);
    const Field& gf = curve.field();

    const auto a_csv = load_matrix(a_path);
    const auto b_csv = load_matrix(b_path);
    require(a_csv.field == gf && b_csv.field == gf, Errc::BadInput,
            "matrix field does not match the curve field");
    Matrix a = a_csv.matrix;
    Matrix b = b_csv.matrix;
    require(a.cols() == b.rows(), Errc::DimensionMismatch,
            "inner dimensions differ: " + std::to_string(a.cols()) + " vs " +
                std::to_string(b.rows()));
    const std::int64_t out_rows = a.rows(), out_cols = b.cols();
    if (pad) {
      if (kind == ProblemKind::Poly) {
        a = zero_padded(a, round_up(a.rows(), m), a.cols());
        b = zero_padded(b, b.rows(), round_up(b.cols(), n));
      } else {
        const std::int64_t inner = round_up(a.cols(), m);
        a = zero_padded(a, a.rows(), inner);
        b = zero_padded(b, inner, b.cols());
      }
    }

    std::set<std::int64_t> dropped;
    for (auto i : drops) {
      require(i >= 0 && i < workers, Errc::OutOfRange,
              "dropped worker " + std::to_string(i) + " does not exist");
      dropped.insert(i);
    }

    std::vector<WorkerResult> results;
    for (const auto& share : encode(scheme, a, b))
      if (dropped.count(share.place_index) == 0)
        results.push_back(worker_multiply(scheme, share));

    const auto outcome = decode(scheme, results);
    const Matrix product = cropped(outcome.product, out_rows, out_cols);
    store_matrix(out_path, gf, product);

    ordered_json j;
    j["kind"] = kind_name;
    j["method"] = method;
    j["curve"] = curve_spec;
    j["m"] = m;
    if (kind == ProblemKind::Poly) j["n"] = n;
    j["workers"] = workers;
    j["threshold"] = scheme.threshold();
    j["dropped"] = std::vector<std::int64_t>(dropped.begin(), dropped.end());
    j["responders_used"] = outcome.report.responders_used;
    j["worker_mults"] = outcome.report.worker_mults;
    j["decode_mults"] = outcome.report.decode_mults;
    j["decode_ok"] = outcome.report.ok;
    j["rows"] = product.rows();
    j["cols"] = product.cols();
    j["out"] = out_path;
    out.emit(j);
  });

  auto* dmm_ref = dmm_cmd->add_subcommand("reference", "schoolbook product for comparison");
  dmm_ref->fallthrough();
  dmm_ref->add_option("--a", a_path, "left factor CSV")->required();
  dmm_ref->add_option("--b", b_path, "right factor CSV")->required();
  dmm_ref->add_option("--out", out_path, "product CSV")->required();
  dmm_ref->callback([&] {
    const auto a_csv = load_matrix(a_path);
    const auto b_csv = load_matrix(b_path);
    require(a_csv.field == b_csv.field, Errc::BadInput, "factors live in different fields");
    std::uint64_t mults = 0;
    const Matrix product = multiply(a_csv.field, a_csv.matrix, b_csv.matrix, &mults);
    store_matrix(out_path, a_csv.field, product);
    out.emit(ordered_json{{"rows", product.rows()},
                          {"cols", product.cols()},
                          {"mults", mults},
                          {"out", out_path}});
  });

  auto* sim_cmd = app.add_subcommand("sim", "straggler simulation trials");
  sim_cmd->fallthrough();
  sim_cmd->add_option("--curve", curve_spec, "hermitian:<q0> or rational:<q>")->required();
  sim_cmd->add_option("--kind", kind_name, "poly|matdot")->required();
  sim_cmd->add_option("--method", method, "construction method")->required();
  sim_cmd->add_option("--m", m, "blocks of A")->required();
  sim_cmd->add_option("--n", n, "column blocks of B (poly only)");
  sim_cmd->add_option("--workers", workers, "worker count")->required();
  sim_cmd->add_option("--model", model_spec, "straggler model spec")->required();
  sim_cmd->add_option("--seed", seed, "RNG seed (AGDMM_SEED overrides)");
  sim_cmd->add_option("--trials", trials, "trial count");
  sim_cmd->callback([&] {
    const Curve curve = parse_curve(curve_spec);
    const auto kind = parse_kind(kind_name);
    if (kind == ProblemKind::Poly) require(n >= 1, Errc::BadInput, "poly runs need --n");
    const auto scheme =
        scheme_build(kind, curve, curve.weierstrass(), method, m,
                     kind == ProblemKind::Poly ? std::optional<std::int64_t>(n) : std::nullopt,
                     workers);
    const std::uint64_t run_seed = effective_seed(seed);
    const auto model = parse_model(model_spec, workers, run_seed);

    // deterministic inputs: one reserved stream, two blocks per split dimension
    auto input_rng = trial_stream(run_seed, ~std::uint64_t{0});
    const Field& gf = curve.field();
    const Matrix a = kind == ProblemKind::Poly ? random_matrix(gf, 2 * m, 4, input_rng)
                                               : random_matrix(gf, 4, 2 * m, input_rng);
    const Matrix b = kind == ProblemKind::Poly ? random_matrix(gf, 4, 2 * n, input_rng)
                                               : random_matrix(gf, 2 * m, 4, input_rng);

    const auto reports = simulate(scheme, a, b, model, trials);
    std::vector<double> finishes, baselines;
    for (std::size_t t = 0; t < reports.size(); ++t) {
      const auto& rep = reports[t];
      out.emit_line(ordered_json{{"trial", t},
                                 {"finish_time", rep.finish_time},
                                 {"responders_used", rep.responders_used},
                                 {"decode_ok", rep.decode_ok},
                                 {"worker_mults", rep.worker_mults},
                                 {"decode_mults", rep.decode_mults}});
      finishes.push_back(rep.finish_time);
      baselines.push_back(*std::max_element(rep.completion_times.begin(),
                                            rep.completion_times.end()));
    }

    const double mean_finish =
        std::accumulate(finishes.begin(), finishes.end(), 0.0) / static_cast<double>(trials);
    const double baseline_mean =
        std::accumulate(baselines.begin(), baselines.end(), 0.0) / static_cast<double>(trials);
    std::sort(finishes.begin(), finishes.end());
    out.emit_line(ordered_json{
        {"summary",
         ordered_json{{"workers", workers},
                      {"threshold", scheme.threshold()},
                      {"rho", static_cast<double>(scheme.threshold()) /
                                  static_cast<double>(workers)},
                      {"mean_finish", mean_finish},
                      {"p50", percentile(finishes, 0.50)},
                      {"p95", percentile(finishes, 0.95)},
                      {"baseline_mean", baseline_mean}}}});
  });

  auto* report_cmd = app.add_subcommand("report", "derived summaries");
  report_cmd->require_subcommand(1);
  report_cmd->fallthrough();

  auto* asym = report_cmd->add_subcommand("asymptotic", "limiting threshold excess");
  asym->fallthrough();
  asym->add_option("--q", q, "field size, a perfect square")->required();
  asym->add_option("--mode", mode, "poly|matdot")->required();
  asym->add_option("--m", asym_m, "block count (cancels out of the excess)");
  asym->add_option("--series", series_text, "N=..,c=..;N=..,c=.. sample points");
  asym->callback([&] {
    const auto report = asymptotic_report(q, mode, parse_series(series_text));
    ordered_json j;
    j["q"] = report.q;
    j["mode"] = report.mode;
    if (asym_m >= 0) j["m"] = asym_m;
    j["epsilon"] = report.epsilon;
    j["epsilon_str"] = fixed10(report.epsilon);
    j["matdot_limit"] = report.matdot_limit;
    j["matdot_limit_str"] = fixed10(report.matdot_limit);
    ordered_json series = ordered_json::array();
    const auto points = parse_series(series_text);
    for (std::size_t i = 0; i < points.size(); ++i)
      series.push_back(ordered_json{{"N", points[i].workers},
                                    {"c", points[i].conductor},
                                    {"excess", report.excess[i]},
                                    {"excess_str", fixed10(report.excess[i])}});
    j["series"] = series;
    out.emit(j);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << " [" << errc_name(e.code()) << "]\n";
    switch (e.code()) {
      case Errc::SearchSpaceTooLarge:
        return 3;
      case Errc::TooFewResponders:
        return 4;
      default:
        return 2;
    }
  }
  return 0;
}
