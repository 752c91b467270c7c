#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gog/classify.hpp"
#include "gog/counting.hpp"
#include "gog/graph_of_groups.hpp"
#include "gog/invariants.hpp"
#include "gog/normalize.hpp"

namespace gog::cli {

namespace {

constexpr std::size_t kDefaultTerms = 20;
constexpr std::size_t kMaxTerms = 200;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GraphOfGroups load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_gog(buf.str());
}

std::size_t checked_terms(std::size_t n) {
  if (n < 1 || n > kMaxTerms) {
    throw UsageError("term count must be in [1, " + std::to_string(kMaxTerms) + "]");
  }
  return n;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::FixedPointInvolution:
    case ErrorCode::BrokenInvolution:
    case ErrorCode::IncidenceMismatch:
    case ErrorCode::DanglingVertexRef:
    case ErrorCode::DuplicateId:
    case ErrorCode::UnknownEdge:
    case ErrorCode::NotConnected:
    case ErrorCode::Empty:
    case ErrorCode::EdgeOrderNotSymmetric:
    case ErrorCode::DivisibilityViolation:
    case ErrorCode::NonPositiveOrder:
    case ErrorCode::MissingOrder:
    case ErrorCode::SyntaxError:
    case ErrorCode::OrderOverflow:
    case ErrorCode::NonIntegralRank:
      return true;
    default:
      return false;
  }
}

int cmd_validate(const std::string& path, std::ostream& out) {
  auto gog = load(path);
  out << "ok vertices=" << gog.graph.vertex_count()
      << " edges=" << gog.graph.geometric_edge_count() << '\n';
  return kOk;
}

int cmd_normalize(const std::string& path, bool steps, std::ostream& out) {
  auto result = normalize(load(path));
  if (steps) {
    std::size_t i = 0;
    for (const auto& s : result.steps) {
      out << "# step " << ++i << ": contract " << s.contracted_edge << " into "
          << s.surviving_vertex << " (removed " << s.removed_vertex << ")\n";
    }
    out << "# steps=" << result.steps.size() << '\n';
  }
  out << serialize_gog(result.normalized.gog);
  return kOk;
}

int cmd_invariants(const std::string& path, std::ostream& out) {
  auto gog = load(path);
  const auto tv = type_vector(gog);
  const auto mu = free_rank(gog);
  out << "m=" << tv.m << '\n';
  out << "chi=" << format_rational(euler_char(gog)) << '\n';
  out << "mu=" << mu << '\n';
  for (const auto& [kappa, z] : tv.zeta) {
    out << "zeta_" << kappa << '=' << z << '\n';
  }
  const auto normalized = normalize(gog).normalized;
  const auto half_edges = normalized.gog.graph.half_edge_count();
  out << "edge_bound=" << (check_edge_bound(normalized) ? "ok" : "VIOLATED")
      << " half_edges=" << half_edges << " 2mu=" << 2 * mu << '\n';
  return check_edge_bound(normalized) ? kOk : kPropertyFailure;
}

int cmd_count(const std::string& path, std::size_t terms, bool with_g,
              std::ostream& out) {
  const auto series = count_series(load(path), checked_terms(terms));
  for (std::size_t lambda = 1; lambda <= series.f.size(); ++lambda) {
    out << lambda << ' ' << series.f_at(lambda);
    if (with_g) out << ' ' << format_rational(series.g[lambda]);
    out << '\n';
  }
  return kOk;
}

int cmd_classify(const std::string& path, std::ostream& out) {
  const auto normalized = normalize(load(path)).normalized;
  const auto report = classify(normalized);
  out << render(report) << '\n';
  out << "witness=";
  for (std::size_t i = 0; i < report.witness.size(); ++i) {
    out << (i ? "," : "") << report.witness[i];
  }
  out << '\n';
  return kOk;
}

int cmd_largeness(const std::string& path, std::size_t prefix, std::ostream& out) {
  if (prefix < 2) throw UsageError("prefix must be at least 2");
  const auto normalized = normalize(load(path)).normalized;
  const auto r = largeness_report(normalized, checked_terms(prefix));
  out << "chi_negative=" << yes_no(r.chi_negative) << '\n';
  out << "rank_ge_2=" << yes_no(r.rank_ge_2) << '\n';
  out << "structural_vii=" << yes_no(r.structural_vii) << '\n';
  out << "f_strictly_increasing_prefix=" << yes_no(r.f_strictly_increasing_prefix)
      << " (lambda<=" << r.prefix << ")\n";
  out << "infinitely_many_ends=implied-equivalent, not computed\n";
  out << "preorder_equivalent_to_F2=implied-equivalent, not computed\n";
  out << "fast_subgroup_growth=implied-equivalent, not computed\n";
  const bool consistent =
      r.chi_negative == r.rank_ge_2 && r.rank_ge_2 == r.structural_vii;
  return consistent ? kOk : kPropertyFailure;
}

int cmd_verify(const std::string& suite, unsigned long long seed,
               unsigned long long bound, std::ostream& out) {
  const auto results = run_suite(suite, seed, bound);
  if (results.empty()) throw UsageError("unknown suite '" + suite + "'");
  bool all = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << '\n';
    all = all && r.passed;
  }
  return all ? kOk : kPropertyFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graphs of finite groups: normalisation, invariants, counting"};
  app.name("gogtool");
  app.require_subcommand(1);

  std::string file;
  bool steps = false;
  bool with_g = false;
  std::size_t terms = kDefaultTerms;
  std::size_t prefix = kDefaultTerms;
  std::string suite;
  unsigned long long seed = 1;
  unsigned long long bound = 0;

  auto* validate_cmd = app.add_subcommand("validate", "Check a GOG file");
  validate_cmd->add_option("file", file, "GOG file")->required();

  auto* normalize_cmd = app.add_subcommand("normalize", "Contract trivial tree edges");
  normalize_cmd->add_option("file", file, "GOG file")->required();
  normalize_cmd->add_flag("--steps", steps, "Print the contraction log");

  auto* invariants_cmd = app.add_subcommand("invariants", "m, chi, type, free rank");
  invariants_cmd->add_option("file", file, "GOG file")->required();

  auto* count_cmd = app.add_subcommand("count", "Free-subgroup counts f_lambda");
  count_cmd->add_option("file", file, "GOG file")->required();
  count_cmd->add_option("--terms", terms, "Number of terms (max 200)");
  count_cmd->add_flag("--g", with_g, "Also print g_lambda");

  auto* classify_cmd = app.add_subcommand("classify", "Classify rank <= 2 data");
  classify_cmd->add_option("file", file, "GOG file")->required();

  auto* largeness_cmd = app.add_subcommand("largeness", "Largeness criteria");
  largeness_cmd->add_option("file", file, "GOG file")->required();
  largeness_cmd->add_option("--prefix", prefix, "Prefix length for f_lambda");

  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd->add_option("suite", suite, "convolution|ode|parity|growth|oracle")
      ->required();
  verify_cmd->add_option("--seed", seed, "Random seed");
  verify_cmd->add_option("--bound", bound, "Suite-specific size bound");

  std::vector<const char*> argv{"gogtool"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: Usage: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*validate_cmd) return cmd_validate(file, out);
    if (*normalize_cmd) return cmd_normalize(file, steps, out);
    if (*invariants_cmd) return cmd_invariants(file, out);
    if (*count_cmd) return cmd_count(file, terms, with_g, out);
    if (*classify_cmd) return cmd_classify(file, out);
    if (*largeness_cmd) return cmd_largeness(file, prefix, out);
    if (*verify_cmd) return cmd_verify(suite, seed, bound, out);
  } catch (const UsageError& e) {
    err << "error: Usage: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return is_input_error(e.code()) ? kValidationError : kPropertyFailure;
  }
  return kUsageError;
}

}  // namespace gog::cli
