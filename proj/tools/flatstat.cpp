// flatstat: command-line front end for the flattened-permutation statistics
// library. Exit status: 0 success, 1 verification failure, 2 parse error,
// 3 unsupported combination.

#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "flatstat/analytic.hpp"
#include "flatstat/bijections.hpp"
#include "flatstat/ddescent.hpp"
#include "flatstat/distribution.hpp"
#include "flatstat/error.hpp"
#include "flatstat/format.hpp"
#include "flatstat/oracle.hpp"
#include "flatstat/verify.hpp"

namespace {

using namespace flatstat;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kParseError = 2;
constexpr int kUnsupported = 3;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::NotAPermutation:
    case ErrorCode::NonStandardOrder:
    case ErrorCode::InvalidPrefix:
    case ErrorCode::InvalidEncoding:
    case ErrorCode::UnknownName:
      return kParseError;
    case ErrorCode::Mismatch:
    case ErrorCode::OddPowerResidue:
    case ErrorCode::ResidueTooLarge:
    case ErrorCode::QuadratureFailure:
    case ErrorCode::NoConvergence:
    case ErrorCode::NotDivisible:
    case ErrorCode::NotInvertible:
      return kVerifyFailed;
    default:
      return kUnsupported;
  }
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

void emit(OutputFormat fmt, const json& command, const json& payload, const std::string& human) {
  if (fmt == OutputFormat::Json)
    std::cout << output_record(command, payload).dump() << '\n';
  else
    std::cout << human << (human.empty() || human.back() == '\n' ? "" : "\n");
}

struct Options {
  std::string input;
  std::string stat = "des";
  std::string method;
  std::string format = "human";
  std::string direction;
  std::string name;
  int n = 0;
  int d = 1;
  int order = 10;
  int j = 40;
  int n_max = 8;
  int d_max = 3;
  double x = 0.1;
  double q = 0.5;
  bool lenient = false;
  bool inject_fault = false;
};

int cmd_flatten(const Options& o) {
  const auto parsed = parse_permutation(o.input, o.lenient ? CycleParse::Lenient : CycleParse::Strict);
  const OutputFormat fmt = parse_format(o.format);
  const json command{{"name", "flatten"}, {"input", o.input}};
  if (const auto* p = std::get_if<Permutation>(&parsed)) {
    const CycleForm c = standard_cycle_form(*p);
    const Permutation w = flatten(c);
    emit(fmt, command, {{"cycles", c.to_string()}, {"word", w.to_string()}}, c.to_string() + " / " + w.to_string());
  } else {
    const CycleForm& c = std::get<CycleForm>(parsed);
    const Permutation w = flatten(c);
    emit(fmt, command, {{"cycles", c.to_string()}, {"word", w.to_string()}}, w.to_string());
  }
  return kOk;
}

int cmd_dist(const Options& o) {
  const Statistic st = parse_statistic(o.stat, o.d);
  const MethodTag method = o.method.empty() ? default_method(st) : parse_method(o.method);
  const OutputFormat fmt = parse_format(o.format);
  const QPolynomial g = dist(st, o.n, method);
  const json command{{"name", "dist"}, {"stat", st.name()}, {"n", o.n}, {"method", to_string(method)}};
  if (fmt == OutputFormat::Csv)
    std::cout << qpoly_to_csv(g);
  else
    emit(fmt, command, qpoly_to_json(g), g.to_string());
  return kOk;
}

int cmd_avg(const Options& o) {
  const Statistic st = parse_statistic(o.stat, o.d);
  const Rational avg = average(st, o.n);
  const json command{{"name", "avg"}, {"stat", st.name()}, {"n", o.n}};
  emit(parse_format(o.format), command, {{"average", rational_to_string(avg)}}, rational_to_string(avg));
  return kOk;
}

int cmd_ddescent(const Options& o) {
  const OutputFormat fmt = parse_format(o.format);
  const bool brute = o.method == "brute";
  if (!brute && !o.method.empty() && o.method != "recurrence")
    throw Error(ErrorCode::MethodUnsupported, "ddescent supports the recurrence and brute methods");
  const DistTriangle t = brute ? brute_ddescent_table(o.n, o.d) : triangle_by_recurrence(o.n, o.d);
  const json command{{"name", "ddescent"}, {"n", o.n}, {"d", o.d}, {"method", brute ? "brute" : "recurrence"}};
  if (fmt == OutputFormat::Csv) {
    std::cout << t.to_csv();
    return kOk;
  }
  std::ostringstream human;
  for (const auto& c : t.cells())
    human << "a(" << c.n << ',' << c.m << ',' << c.k << ") = " << c.count.str() << '\n';
  emit(fmt, command, triangle_to_json(t), human.str());
  return kOk;
}

int cmd_bijection(const Options& o) {
  const OutputFormat fmt = parse_format(o.format);
  const json command{{"name", "bijection"}, {"direction", o.direction}, {"input", o.input}};
  std::string out;
  if (o.direction == "g") {
    out = bij_g_cycles(parse_encoding(o.input)).to_string();
  } else if (o.direction == "h") {
    out = bij_h(parse_encoding(o.input)).to_string();
  } else if (o.direction == "g-inv" || o.direction == "h-inv" || o.direction == "transport") {
    const auto parsed = parse_permutation(o.input, CycleParse::Lenient);
    const Permutation p = std::holds_alternative<Permutation>(parsed) ? std::get<Permutation>(parsed)
                                                                       : std::get<CycleForm>(parsed).to_permutation();
    if (o.direction == "g-inv")
      out = bij_g_inv(p).to_string();
    else if (o.direction == "h-inv")
      out = bij_h_inv(p).to_string();
    else
      out = transport(p).to_string();
  } else {
    throw Error(ErrorCode::UnknownName, "unknown direction: " + o.direction);
  }
  emit(fmt, command, {{"result", out}}, out);
  return kOk;
}

int cmd_series_check(const Options& o) {
  const bool ok = series_identity_check(o.name, o.order);
  const json command{{"name", "series-check"}, {"identity", o.name}, {"order", o.order}};
  emit(parse_format(o.format), command, {{"holds", ok}}, ok ? "holds" : "FAILS");
  return ok ? kOk : kVerifyFailed;
}

int cmd_analytic(const Options& o) {
  const OutputFormat fmt = parse_format(o.format);
  json command{{"name", "analytic"}, {"function", o.name}, {"q", o.q}};
  if (o.name == "des" || o.name == "asc" || o.name == "valley") {
    command["n"] = o.n;
    const InfiniteSum s = infinite_sum_eval(o.name, o.n, o.q);
    emit(fmt, command, {{"value", s.value}, {"tail_bound", s.tail_bound}, {"terms", s.terms}},
         format_double(s.value) + " (tail <= " + format_double(s.tail_bound) + ", " + std::to_string(s.terms) +
             " terms)");
    return kOk;
  }
  if (o.name == "peak-diagnostic") {
    command["n"] = o.n;
    command["j"] = o.j;
    const PeakDiagnostic r = peak_series_diagnostic(o.n, o.q, o.j);
    json terms = json::array();
    for (const auto& t : r.terms) terms.push_back({{"j", t.j}, {"term", t.term}, {"partial_sum", t.partial_sum}});
    emit(fmt, command, {{"exact", r.exact}, {"terms", terms}}, r.to_string());
    return kOk;
  }
  command["x"] = o.x;
  const double value = analytic_eval(o.name, o.x, o.q);
  const double series = series_eval(o.name, o.x, o.q, 30);
  const double rel = std::abs(value - series) / std::max(std::abs(series), 1e-300);
  emit(fmt, command, {{"value", value}, {"series", series}, {"relative_difference", rel}},
       format_double(value) + " (series " + format_double(series) + ", relative difference " + format_double(rel) + ")");
  return kOk;
}

int cmd_verify(const Options& o) {
  VerifyOptions v;
  v.n_max = o.n_max;
  v.d_max = o.d_max;
  v.inject_fault = o.inject_fault;
  const VerifyReport report = run_verify(v);
  std::cout << report.table();
  if (report.passed()) return kOk;
  for (const auto& s : report.suites)
    if (!s.passed) {
      std::cerr << "first failure: " << s.suite << ": " << s.first_failure << '\n';
      break;
    }
  return kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributions of subword statistics over flattened permutations"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> stats{"des", "asc", "bigdes", "ddes", "123", "321", "peak", "valley"};
  const std::vector<std::string> formats{"human", "json", "csv"};

  auto* flatten_cmd = app.add_subcommand("flatten", "Standard cycle form and flattened word");
  flatten_cmd->add_option("input,--input", o.input, "Word \"7,5,1,6,2,4,3,8\" or cycles \"(1 7 3)(2 5)\"")->required();
  flatten_cmd->add_flag("--lenient", o.lenient, "Normalize cycles given in non-standard order");
  flatten_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* dist_cmd = app.add_subcommand("dist", "Distribution polynomial g_n(q)");
  dist_cmd->add_option("--stat", o.stat)->check(CLI::IsMember(stats));
  dist_cmd->add_option("--n", o.n)->required();
  dist_cmd->add_option("--d", o.d, "Threshold for ddes");
  dist_cmd->add_option("--method", o.method)->check(CLI::IsMember({"brute", "recurrence", "closed", "kernel", "series"}));
  dist_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* avg_cmd = app.add_subcommand("avg", "Closed-form average over S_n");
  avg_cmd->add_option("--stat", o.stat)->check(CLI::IsMember(stats));
  avg_cmd->add_option("--n", o.n)->required();
  avg_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* dd_cmd = app.add_subcommand("ddescent", "Triangle a(n,m,k) of d-descents and cycles");
  dd_cmd->add_option("--n", o.n)->required();
  dd_cmd->add_option("--d", o.d);
  dd_cmd->add_option("--method", o.method, "recurrence (rows 1..n) or brute (row n)");
  dd_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* bij_cmd = app.add_subcommand("bijection", "Insertion encodings and the maps g, h");
  bij_cmd->add_option("--direction", o.direction)
      ->required()
      ->check(CLI::IsMember({"g", "h", "g-inv", "h-inv", "transport"}));
  bij_cmd->add_option("--input", o.input)->required();
  bij_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* series_cmd = app.add_subcommand("series-check", "Generating-function identity to a given order");
  series_cmd->add_option("--name", o.name)->required()->check(CLI::IsMember({"des", "321", "peak", "valley"}));
  series_cmd->add_option("--order", o.order);
  series_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* analytic_cmd = app.add_subcommand("analytic", "Floating evaluation of the analytic forms");
  analytic_cmd->add_option("--name", o.name, "H, Gr, Br, Bd, des, asc, valley or peak-diagnostic")->required();
  analytic_cmd->add_option("--x", o.x);
  analytic_cmd->add_option("--q", o.q);
  analytic_cmd->add_option("--n", o.n);
  analytic_cmd->add_option("--j", o.j, "Largest j for peak-diagnostic");
  analytic_cmd->add_option("--format", o.format)->check(CLI::IsMember({"human", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check every module against the oracle");
  verify_cmd->add_option("--n-max", o.n_max);
  verify_cmd->add_option("--d-max", o.d_max);
  verify_cmd->add_flag("--inject-fault", o.inject_fault, "Corrupt one result to exercise the failure path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  try {
    if (*flatten_cmd) return cmd_flatten(o);
    if (*dist_cmd) return cmd_dist(o);
    if (*avg_cmd) return cmd_avg(o);
    if (*dd_cmd) return cmd_ddescent(o);
    if (*bij_cmd) return cmd_bijection(o);
    if (*series_cmd) return cmd_series_check(o);
    if (*analytic_cmd) return cmd_analytic(o);
    if (*verify_cmd) return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kParseError;
}
