#include "stirlab/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "stirlab/identities.hpp"
#include "stirlab/objects.hpp"

namespace stirlab::cli {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

/// Thrown for bad parameter combinations detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string format = "text";
  unsigned jobs = 0;
  bool no_timestamp = false;
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--jobs", opts.jobs, "Parallel fold width (0 = all cores)");
  cmd->add_flag("--no-timestamp", opts.no_timestamp, "Omit the timestamp field from JSON output");
  cmd->add_option("--out", opts.out_path, "Write output to a file instead of standard output");
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

json record(const std::string& kind, json params, json payload, const CommonOptions& opts) {
  json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = kind;
  j["params"] = std::move(params);
  j["payload"] = std::move(payload);
  if (!opts.no_timestamp) j["timestamp"] = utc_timestamp();
  return j;
}

BigInt max_objects() {
  if (const char* env = std::getenv("STIRLAB_MAX_OBJECTS")) {
    try {
      return BigInt(std::string(env));
    } catch (const std::exception&) {
      throw UsageError("STIRLAB_MAX_OBJECTS is not an integer");
    }
  }
  return BigInt(100000000);
}

void require_within_cap(const BigInt& objects, const std::string& what) {
  const BigInt cap = max_objects();
  if (objects > cap)
    throw UsageError(what + " would enumerate " + objects.str() + " objects, above STIRLAB_MAX_OBJECTS=" + cap.str());
}

// --- poly ------------------------------------------------------------------

struct PolyArgs {
  std::string family;
  std::optional<unsigned> n;
  std::optional<unsigned> n_max;
  std::optional<unsigned> k;
  std::vector<std::string> routes;
};

const std::map<std::string, std::vector<std::string>>& routes_by_family() {
  static const std::map<std::string, std::vector<std::string>> table{
      {"A", {"recurrence", "exc-cyc", "invseq", "ap", "ipk"}},
      {"B", {"recurrence", "ap", "lpk"}},
      {"C", {"def", "run"}},
      {"P", {"asc", "asc-words"}},
      {"stirling1", {"product", "cyc"}},
  };
  return table;
}

/// Computes one row; validates parameters and the enumeration cap first.
IntPolynomial compute_row(const std::string& family, const std::string& route, unsigned n, std::optional<unsigned> k,
                          unsigned jobs) {
  auto need_k = [&](unsigned min_k) {
    if (!k) throw UsageError("family " + family + " needs --k");
    if (*k < min_k) throw UsageError("route " + route + " needs --k >= " + std::to_string(min_k));
    return *k;
  };
  auto need_k_two = [&] {
    if (k && *k != 2) throw UsageError("route " + route + " is defined for k = 2 only");
  };
  if (family != "C" && n == 0) throw UsageError("--n must be >= 1");

  if (family == "A" || family == "B") {
    if (route == "ipk" || route == "lpk") {
      need_k_two();
      require_within_cap(k_stirling_count(n, 2), route);
      return route == "ipk" ? dist_A2_ipk(n, jobs) : dist_A2_lpk(n, jobs);
    }
    if (route == "recurrence") {
      const unsigned kk = need_k(1);
      return family == "A" ? dist_A_recurrence(n, kk) : dist_B_recurrence(n, kk);
    }
    if (route == "exc-cyc") {
      const unsigned kk = need_k(1);
      require_within_cap(permutation_count(n), route);
      return dist_A_exc_cyc(n, kk, jobs);
    }
    if (route == "invseq") {
      const unsigned kk = need_k(1);
      require_within_cap(inversion_sequence_count(n, kk), route);
      return dist_A_invseq(n, kk, jobs);
    }
    if (route == "ap") {
      const unsigned kk = need_k(2);
      require_within_cap(k_stirling_count(n, kk), route);
      return family == "A" ? dist_A_ap(n, kk, jobs) : dist_B_ap0(n, kk, jobs);
    }
  } else if (family == "C") {
    need_k_two();
    if (route == "def") return C_from_def(n);
    if (n == 0) throw UsageError("route run needs --n >= 1");
    require_within_cap(k_stirling_count(n, 2), route);
    return dist_C_run(n, jobs);
  } else if (family == "P") {
    need_k_two();
    require_within_cap(k_stirling_count(n, 2), route);
    return route == "asc" ? dist_P_asc(n, jobs) : dist_P_asc_words(n, jobs);
  } else if (family == "stirling1") {
    if (route == "product") return stirling_first_row(n);
    require_within_cap(permutation_count(n), route);
    return stirling_first_row_by_cycles(n, jobs);
  }
  throw UsageError("unknown route " + route + " for family " + family);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

int run_poly(const PolyArgs& args, const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  const auto& table = routes_by_family();
  const auto family_it = table.find(args.family);
  if (family_it == table.end()) throw UsageError("unknown family " + args.family);

  std::vector<std::string> routes;
  for (const auto& r : args.routes) {
    std::stringstream ss(r);
    for (std::string part; std::getline(ss, part, ',');)
      if (!part.empty()) routes.push_back(part);
  }
  if (routes.empty()) routes.push_back(family_it->second.front());
  for (const auto& r : routes)
    if (std::find(family_it->second.begin(), family_it->second.end(), r) == family_it->second.end())
      throw UsageError("route " + r + " is not available for family " + args.family + " (choose from " +
                       join(family_it->second, ", ") + ")");

  const bool triangle = args.n_max.has_value();
  if (!triangle && !args.n) throw UsageError("poly needs --n or --n-max");
  const unsigned n_lo = args.n.value_or(1);
  const unsigned n_hi = triangle ? *args.n_max : n_lo;
  if (n_lo > n_hi) throw UsageError("--n must not exceed --n-max");

  std::vector<std::pair<unsigned, IntPolynomial>> rows;
  bool disagree = false;
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    IntPolynomial first = compute_row(args.family, routes.front(), n, args.k, opts.jobs);
    for (std::size_t i = 1; i < routes.size(); ++i) {
      const IntPolynomial other = compute_row(args.family, routes[i], n, args.k, opts.jobs);
      if (other != first) {
        disagree = true;
        err << "mismatch at n=" << n << ": " << routes.front() << " gives " << to_string(first) << ", " << routes[i]
            << " gives " << to_string(other) << '\n';
      }
    }
    rows.emplace_back(n, std::move(first));
  }

  json params{{"family", args.family}, {"route", join(routes, ",")}};
  if (args.k) params["k"] = *args.k;
  if (opts.format == "json") {
    if (triangle) {
      params["n_min"] = n_lo;
      params["n_max"] = n_hi;
      json payload = json::array();
      for (const auto& [n, p] : rows) payload.push_back({{"n", n}, {"coeffs", to_decimal_strings(p)}});
      out << record("triangle", params, payload, opts).dump() << '\n';
    } else {
      params["n"] = n_lo;
      out << record("poly", params, to_decimal_strings(rows.front().second), opts).dump() << '\n';
    }
  } else if (opts.format == "csv") {
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.second.coeffs().size());
    out << 'n';
    for (std::size_t j = 0; j < width; ++j) out << ",j" << j;
    out << '\n';
    for (const auto& [n, p] : rows) {
      out << n;
      for (std::size_t j = 0; j < width; ++j) {
        out << ',';
        if (j < p.coeffs().size()) out << p.coeffs()[j];
      }
      out << '\n';
    }
  } else {
    for (const auto& [n, p] : rows) {
      if (triangle) out << "n=" << n << ": ";
      out << to_string(p) << '\n';
    }
  }
  return disagree ? kMismatch : kSuccess;
}

// --- enum ------------------------------------------------------------------

struct EnumArgs {
  std::string family;
  std::optional<unsigned> n;
  std::optional<unsigned> k;
};

/// Space-free digits when every possible letter is a single digit,
/// comma-separated otherwise. Decided per stream so output stays uniform.
std::string format_word(std::span<const Letter> w, bool compact) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

std::string csv_word(std::span<const Letter> w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
  return s;
}

template <class Stream>
void emit_stream(Stream& stream, const std::string& format, bool compact, const json& params,
                 const CommonOptions& opts, std::ostream& out) {
  while (auto obj = stream.next()) {
    if (format == "json") {
      json j{{"schema", kSchemaVersion}, {"kind", "enum"}, {"params", params}, {"payload", *obj}};
      out << j.dump() << '\n';
    } else if (format == "csv") {
      for (std::size_t i = 0; i < obj->size(); ++i) out << (i ? "," : "") << (*obj)[i];
      out << '\n';
    } else {
      out << format_word(*obj, compact) << '\n';
    }
  }
  (void)opts;
}

int run_enum(const EnumArgs& args, const CommonOptions& opts, std::ostream& out) {
  if (!args.n || *args.n == 0) throw UsageError("enum needs --n >= 1");
  const unsigned n = *args.n;
  json params{{"family", args.family}, {"n", n}};

  if (args.family == "perm") {
    if (args.k) throw UsageError("enum perm takes no --k");
    require_within_cap(permutation_count(n), "enum perm");
    PermutationStream s(n);
    emit_stream(s, opts.format, n <= 9, params, opts, out);
  } else if (args.family == "invseq" || args.family == "qnk") {
    if (!args.k || *args.k == 0) throw UsageError("enum " + args.family + " needs --k >= 1");
    const unsigned k = *args.k;
    params["k"] = k;
    if (args.family == "invseq") {
      require_within_cap(inversion_sequence_count(n, k), "enum invseq");
      InversionSequenceStream s(n, k);
      emit_stream(s, opts.format, static_cast<std::uint64_t>(n - 1) * k <= 9, params, opts, out);
    } else {
      require_within_cap(k_stirling_count(n, k), "enum qnk");
      KStirlingStream s(n, k);
      emit_stream(s, opts.format, n <= 9, params, opts, out);
    }
  } else if (args.family == "dual") {
    if (args.k && *args.k != 2) throw UsageError("enum dual is defined for k = 2 only");
    params["k"] = 2;
    require_within_cap(k_stirling_count(n, 2), "enum dual");
    DualSetStream s(n);
    while (auto pi = s.next()) {
      if (opts.format == "json") {
        json payload{{"sigma", s.preimage()}, {"pi", *pi}};
        out << json{{"schema", kSchemaVersion}, {"kind", "enum"}, {"params", params}, {"payload", payload}}.dump()
            << '\n';
      } else if (opts.format == "csv") {
        out << csv_word(s.preimage()) << ',' << csv_word(*pi) << '\n';
      } else {
        out << format_word(s.preimage(), n <= 9) << " -> " << format_word(*pi, 2 * n <= 9) << '\n';
      }
    }
  } else {
    throw UsageError("unknown enum family " + args.family);
  }
  return kSuccess;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::string profile = "quick";
  std::optional<unsigned> n_max;
  std::optional<unsigned> k;
  std::optional<unsigned> k_max;
  std::optional<unsigned> order;
};

struct VerifyPlan {
  std::vector<std::function<VerificationReport()>> checks;
  BigInt largest_enumeration = 0;
};

std::vector<RouteBound> bounds_for(const VerifyArgs& a, bool full, unsigned min_k) {
  const auto defaults = full ? full_bounds() : quick_bounds();
  auto default_n = [&](unsigned k) {
    for (const auto& b : defaults)
      if (b.k == k) return b.n_max;
    return defaults.back().n_max;
  };
  std::vector<RouteBound> out;
  if (a.k) {
    out.push_back({*a.k, a.n_max.value_or(default_n(*a.k))});
  } else if (a.k_max) {
    for (unsigned k = min_k; k <= *a.k_max; ++k) out.push_back({k, a.n_max.value_or(default_n(k))});
  } else {
    for (const auto& b : defaults)
      if (b.k >= min_k) out.push_back({b.k, a.n_max.value_or(b.n_max)});
  }
  return out;
}

VerifyPlan plan_verify(const VerifyArgs& a, unsigned jobs) {
  const bool full = a.profile == "full";
  VerifyPlan plan;
  auto note_size = [&plan](const BigInt& v) {
    if (v > plan.largest_enumeration) plan.largest_enumeration = v;
  };
  auto note_bounds = [&](const std::vector<RouteBound>& bounds, bool perms, bool invseq) {
    for (const auto& b : bounds) {
      note_size(k_stirling_count(b.n_max, b.k));
      if (perms) note_size(permutation_count(b.n_max));
      if (invseq) note_size(inversion_sequence_count(b.n_max, b.k));
    }
  };
  const bool all = a.suite == "all";
  auto want = [&](const char* name) { return all || a.suite == name; };
  const unsigned dual_n = a.n_max.value_or(full ? 8 : 7);

  if (all) {
    const auto bounds = bounds_for(a, full, 1);
    note_bounds(bounds, true, true);
    plan.checks.push_back([bounds, jobs] { return check_four_routes(bounds, jobs); });
  }
  if (want("thm1")) {
    if (a.k && *a.k < 2) throw UsageError("thm1 needs --k >= 2");
    const auto bounds = bounds_for(a, full, 2);
    note_bounds(bounds, false, false);
    plan.checks.push_back([bounds, jobs] { return check_theorem1(bounds, jobs); });
  }
  if (want("thm2")) {
    if (a.k && *a.k < 2) throw UsageError("thm2 needs --k >= 2");
    const auto bounds = bounds_for(a, full, 2);
    note_bounds(bounds, false, false);
    plan.checks.push_back([bounds, jobs] { return check_theorem2(bounds, jobs); });
  }
  if (want("thm3")) {
    note_size(k_stirling_count(dual_n, 2));
    plan.checks.push_back([dual_n, jobs] { return check_theorem3(dual_n, jobs); });
  }
  if (want("thm4")) {
    note_size(k_stirling_count(dual_n, 2));
    plan.checks.push_back([dual_n, jobs] { return check_theorem4(dual_n, jobs); });
  }
  if (want("egf-A")) {
    const unsigned order = a.order.value_or(full ? 12 : 10);
    std::vector<unsigned> ks;
    if (a.k)
      ks.push_back(*a.k);
    else
      for (unsigned k = 1; k <= a.k_max.value_or(4); ++k) ks.push_back(k);
    for (unsigned k : ks) {
      if (k == 0) throw UsageError("egf-A needs k >= 1");
      plan.checks.push_back([k, order] { return check_egf_A(k, order); });
    }
  }
  if (want("egf-C")) {
    const unsigned order = a.order.value_or(full ? 12 : 10);
    plan.checks.push_back([order] { return check_egf_C(order); });
  }
  if (want("axq")) {
    const unsigned n_max = a.n_max.value_or(full ? 8 : 7);
    const unsigned k_max = a.k_max.value_or(a.k.value_or(4));
    note_size(permutation_count(n_max));
    plan.checks.push_back([n_max, jobs] { return check_recurrence_axq(n_max, jobs); });
    plan.checks.push_back([n_max, k_max, jobs] { return check_bivariate_specialization(n_max, k_max, jobs); });
  }
  if (want("counts")) {
    const unsigned n_max = a.n_max.value_or(20);
    const unsigned k_max = a.k_max.value_or(a.k.value_or(5));
    plan.checks.push_back([n_max, k_max] { return check_total_count(n_max, k_max); });
    const unsigned s_max = std::min(n_max, full ? 9u : 8u);
    note_size(permutation_count(s_max));
    plan.checks.push_back([s_max, jobs] { return check_stirling_first(s_max, jobs); });
    VerifyArgs enum_args = a;
    if (a.suite == "counts") enum_args.n_max.reset();
    const auto bounds = bounds_for(enum_args, full, 1);
    note_bounds(bounds, true, true);
    plan.checks.push_back([bounds] { return check_enum_counts(bounds); });
  }
  if (want("id13-14")) {
    const unsigned n_max = a.n_max.value_or(full ? 7 : 6);
    const unsigned k_max = a.k_max.value_or(a.k.value_or(full ? 4 : 3));
    for (unsigned k = 2; k <= k_max; ++k) {
      note_size(k_stirling_count(n_max, k));
      note_size(inversion_sequence_count(n_max, k));
    }
    note_size(permutation_count(n_max));
    plan.checks.push_back([n_max, k_max, jobs] { return verify_identity_13_14(n_max, k_max, jobs); });
  }
  if (want("structure")) {
    const unsigned n_struct = a.n_max.value_or(full ? 7 : 6);
    note_size(k_stirling_count(n_struct, 2));
    plan.checks.push_back([n_struct] { return check_dual_set_structure(n_struct); });
    const auto bounds = bounds_for(a, full, 1);
    note_bounds(bounds, false, false);
    plan.checks.push_back([bounds] { return check_word_statistics(bounds); });
    const unsigned c_max = a.n_max.value_or(full ? 12 : 8);
    plan.checks.push_back([c_max] { return check_C_palindromic(c_max); });
    plan.checks.push_back([dual_n, jobs] { return check_second_order_eulerian(dual_n, jobs); });
  }
  if (plan.checks.empty()) throw UsageError("unknown suite " + a.suite);
  return plan;
}

json report_to_json(const VerificationReport& r) {
  json j{{"check", r.check}, {"ranges", r.ranges}, {"passed", r.passed}, {"cases", r.cases}, {"notes", r.notes}};
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    j["counterexample"] = {{"params", c.params}, {"lhs_label", c.lhs_label}, {"lhs", c.lhs},
                           {"rhs_label", c.rhs_label}, {"rhs", c.rhs}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

int run_verify(const VerifyArgs& args, const CommonOptions& opts, std::ostream& out) {
  if (opts.format == "csv") throw UsageError("verify supports --format text or json");
  const VerifyPlan plan = plan_verify(args, opts.jobs);
  require_within_cap(plan.largest_enumeration, "verify " + args.suite);

  std::vector<VerificationReport> reports;
  bool ok = true;
  for (const auto& check : plan.checks) {
    reports.push_back(check());
    ok = ok && reports.back().passed;
  }

  if (opts.format == "json") {
    json params{{"suite", args.suite}, {"profile", args.profile}};
    if (args.n_max) params["n_max"] = *args.n_max;
    if (args.k) params["k"] = *args.k;
    if (args.k_max) params["k_max"] = *args.k_max;
    if (args.order) params["order"] = *args.order;
    json payload{{"passed", ok}, {"reports", json::array()}};
    for (const auto& r : reports) payload["reports"].push_back(report_to_json(r));
    out << record("report", params, payload, opts).dump() << '\n';
  } else {
    write_report_text(reports, out);
  }
  return ok ? kSuccess : kMismatch;
}

}  // namespace

int write_report_text(const std::vector<VerificationReport>& reports, std::ostream& out) {
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << r.check << " [" << r.ranges << "] (" << r.cases << " cases)\n";
    for (const auto& note : r.notes) out << "    note: " << note << '\n';
    if (r.counterexample) {
      const auto& c = *r.counterexample;
      out << "    counterexample at " << c.params << ": " << c.lhs_label << " = " << c.lhs << ", " << c.rhs_label
          << " = " << c.rhs << '\n';
    }
  }
  out << (ok ? "all checks passed" : "verification FAILED") << '\n';
  return ok ? kSuccess : kMismatch;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact 1/k-Eulerian polynomials, Stirling permutations and their statistics", "stirlab"};
  app.require_subcommand(1);

  CommonOptions common;
  PolyArgs poly;
  EnumArgs en;
  VerifyArgs ver;
  std::optional<unsigned> n_opt, n_max_opt, k_opt, k_max_opt, order_opt;

  auto* poly_cmd = app.add_subcommand("poly", "Compute a polynomial, or a triangle with --n-max");
  poly_cmd->add_option("family", poly.family, "A | B | C | P | stirling1")->required();
  poly_cmd->add_option("--n", poly.n, "Order n (first row when --n-max is given)");
  poly_cmd->add_option("--n-max", poly.n_max, "Print rows n..n-max");
  poly_cmd->add_option("--k", poly.k, "Parameter k");
  poly_cmd->add_option("--route", poly.routes, "Route(s); several routes are cross-checked")->delimiter(',');
  add_common(poly_cmd, common);

  auto* enum_cmd = app.add_subcommand("enum", "Stream a combinatorial family, one object per line");
  enum_cmd->add_option("family", en.family, "perm | invseq | qnk | dual")
      ->required()
      ->check(CLI::IsMember({"perm", "invseq", "qnk", "dual"}));
  enum_cmd->add_option("--n", en.n, "Order n");
  enum_cmd->add_option("--k", en.k, "Parameter k");
  add_common(enum_cmd, common);

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("suite", ver.suite, "all | thm1 | thm2 | thm3 | thm4 | egf-A | egf-C | axq | counts | id13-14 | structure")
      ->required()
      ->check(CLI::IsMember(
          {"all", "thm1", "thm2", "thm3", "thm4", "egf-A", "egf-C", "axq", "counts", "id13-14", "structure"}));
  verify_cmd->add_option("--n-max", ver.n_max, "Largest n");
  verify_cmd->add_option("--k", ver.k, "Single k");
  verify_cmd->add_option("--k-max", ver.k_max, "Largest k");
  verify_cmd->add_option("--order", ver.order, "Series order for egf suites");
  verify_cmd->add_option("--profile", ver.profile, "Default bounds")->check(CLI::IsMember({"quick", "full"}));
  add_common(verify_cmd, common);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "stirlab: " << e.what() << '\n';
    return kUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!common.out_path.empty()) {
    file.open(common.out_path);
    if (!file) {
      err << "stirlab: cannot open " << common.out_path << '\n';
      return kUsage;
    }
    sink = &file;
  }

  try {
    if (*poly_cmd) return run_poly(poly, common, *sink, err);
    if (*enum_cmd) return run_enum(en, common, *sink);
    return run_verify(ver, common, *sink);
  } catch (const UsageError& e) {
    err << "stirlab: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "stirlab: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace stirlab::cli
