#include "gtrig/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "gtrig/error.hpp"
#include "gtrig/gtfn.hpp"
#include "gtrig/identities.hpp"

namespace gtrig::cli {

namespace {

std::string seventeen(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const std::map<std::string, TableFunction> kFunctions = {
    {"sin", TableFunction::sin}, {"cos", TableFunction::cos}, {"arcsin", TableFunction::arcsin}};
const std::map<std::string, OutputFormat> kFormats = {{"csv", OutputFormat::csv}, {"json", OutputFormat::json}};

double evaluate(const ParamPair& pp, TableFunction fn, double x) {
  switch (fn) {
    case TableFunction::sin:
      return sin_pq(pp, x).value;
    case TableFunction::cos:
      return cos_pq(pp, x).value;
    case TableFunction::arcsin:
      return arcsin_pq(pp, x);
  }
  return 0.0;
}

void write_table(const std::vector<TableRow>& rows, OutputFormat format, std::ostream& os) {
  if (format == OutputFormat::json) {
    nlohmann::json array = nlohmann::json::array();
    for (const TableRow& r : rows) array.push_back({{"x", r.x}, {"value", r.value}});
    os << array.dump() << '\n';
    return;
  }
  os << "x,value\n";
  for (const TableRow& r : rows) os << shortest(r.x) << ',' << shortest(r.value) << '\n';
}

nlohmann::json report_json(const identities::IdentityReport& r) {
  nlohmann::json j = {{"id", r.id},
                      {"params", r.params},
                      {"samples", r.samples},
                      {"max_abs_err", r.max_abs_err},
                      {"argmax_x", r.argmax_x},
                      {"max_rel_err", r.max_rel_err},
                      {"tol", r.tol},
                      {"pass", r.pass},
                      {"elapsed_s", r.elapsed.count()},
                      {"diagnostic", r.diagnostic}};
  j["argmax_y"] = r.argmax_y ? nlohmann::json(*r.argmax_y) : nlohmann::json(nullptr);
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

void write_reports(const std::vector<identities::IdentityReport>& reports, OutputFormat format, std::ostream& os) {
  if (format == OutputFormat::json) {
    nlohmann::json array = nlohmann::json::array();
    for (const auto& r : reports) array.push_back(report_json(r));
    os << array.dump(2) << '\n';
    return;
  }
  os << "id,params,samples,max_abs_err,argmax_x,argmax_y,max_rel_err,tol,pass,elapsed_s,diagnostic\n";
  for (const auto& r : reports) {
    os << r.id << ',' << csv_field(r.params) << ',' << r.samples << ',' << shortest(r.max_abs_err) << ','
       << shortest(r.argmax_x) << ',' << (r.argmax_y ? shortest(*r.argmax_y) : "") << ','
       << shortest(r.max_rel_err) << ',' << shortest(r.tol) << ',' << (r.pass ? "pass" : "FAIL") << ','
       << shortest(r.elapsed.count()) << ',' << csv_field(r.diagnostic) << '\n';
  }
}

}  // namespace

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::vector<TableRow> evaluate_table(const TableRequest& req) {
  const ParamPair pp(req.p, req.q);
  if (!(std::isfinite(req.from) && std::isfinite(req.to) && std::isfinite(req.step))) {
    throw DomainError("--from, --to and --step must be finite");
  }
  if (!(req.from < req.to)) throw DomainError("--from must be less than --to");
  if (!(req.step > 0)) throw DomainError("--step must be positive");
  if (req.step > req.to - req.from) throw DomainError("--step must not exceed the range --to - --from");
  if (req.fn == TableFunction::arcsin && (req.from < 0 || req.to > 1)) {
    throw DomainError("arcsin tables require 0 <= --from < --to <= 1");
  }
  const double span = (req.to - req.from) / req.step;
  const auto count = static_cast<std::int64_t>(std::floor(span * (1 + 1e-12))) + 1;
  if (count > 10'000'000) throw DomainError("table would exceed 10000000 rows");
  std::vector<TableRow> rows;
  rows.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    const double x = std::min(req.from + static_cast<double>(i) * req.step, req.to);
    rows.push_back({x, evaluate(pp, req.fn, x)});
  }
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const Defaults defaults;
  CLI::App app{"Generalized trigonometric functions sin_{p,q}, cos_{p,q}, arcsin_{p,q} and pi_{p,q}", "gtrig"};
  app.require_subcommand(1);

  double p = 0.0;
  double q = 0.0;

  auto* pi_cmd = app.add_subcommand("pi", "Print pi_{p,q}");
  pi_cmd->add_option("--p", p, "Exponent p > 1")->required();
  pi_cmd->add_option("--q", q, "Exponent q > 1")->required();

  std::string fn_name;
  double x = 0.0;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate sin, cos or arcsin at one point");
  eval_cmd->add_option("--p", p, "Exponent p > 1")->required();
  eval_cmd->add_option("--q", q, "Exponent q > 1")->required();
  eval_cmd->add_option("--fn", fn_name, "sin, cos or arcsin")->required()->check(CLI::IsMember({"sin", "cos", "arcsin"}));
  eval_cmd->add_option("--x", x, "Argument")->required();

  TableRequest req;
  std::string table_format = defaults.format;
  std::string out_path;
  auto* table_cmd = app.add_subcommand("table", "Tabulate a function on a uniform grid");
  table_cmd->add_option("--p", req.p, "Exponent p > 1")->required();
  table_cmd->add_option("--q", req.q, "Exponent q > 1")->required();
  table_cmd->add_option("--fn", fn_name, "sin, cos or arcsin")->required()->check(CLI::IsMember({"sin", "cos", "arcsin"}));
  table_cmd->add_option("--from", req.from, "First grid point")->required();
  table_cmd->add_option("--to", req.to, "Last grid point")->required();
  table_cmd->add_option("--step", req.step, "Grid spacing")->required();
  table_cmd->add_option("--format", table_format, "csv or json")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_option("--out", out_path, "Output file (default: stdout)");

  std::string identity;
  bool all = false;
  bool list = false;
  identities::VerifyOptions vopts;
  vopts.samples = defaults.samples;
  vopts.tol = defaults.tol;
  vopts.seed = defaults.seed;
  std::string verify_format = defaults.format;
  std::optional<double> vp;
  std::optional<double> vq;
  auto* verify_cmd = app.add_subcommand("verify", "Verify catalog identities numerically");
  auto* id_opt = verify_cmd->add_option("--identity", identity, "Identity id");
  auto* all_opt = verify_cmd->add_flag("--all", all, "Verify every identity in the catalog");
  auto* list_opt = verify_cmd->add_flag("--list-identities", list, "Print the identity vocabulary");
  id_opt->excludes(all_opt)->excludes(list_opt);
  all_opt->excludes(list_opt);
  verify_cmd->add_option("--samples", vopts.samples, "Grid points (and as many random points)")
      ->capture_default_str()
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{100'000'000}));
  verify_cmd->add_option("--tol", vopts.tol, "Pass threshold on max |lhs - rhs|")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", vopts.seed, "Seed for the random sample points")->capture_default_str();
  verify_cmd->add_option("--format", verify_format, "csv or json")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
  verify_cmd->add_option("--perturb", vopts.rhs_offset, "Offset added to every right-hand side (engine self-test)");
  verify_cmd->add_option("--p", vp, "Restrict parameterized identities to this p");
  verify_cmd->add_option("--q", vq, "With --p, restrict pair-parameterized identities to (p, q)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (pi_cmd->parsed()) {
      out << seventeen(pi_pq(ParamPair(p, q))) << '\n';
      return kSuccess;
    }
    if (eval_cmd->parsed()) {
      out << seventeen(evaluate(ParamPair(p, q), kFunctions.at(fn_name), x)) << '\n';
      return kSuccess;
    }
    if (table_cmd->parsed()) {
      req.fn = kFunctions.at(fn_name);
      req.format = kFormats.at(table_format);
      const std::vector<TableRow> rows = evaluate_table(req);
      if (out_path.empty()) {
        write_table(rows, req.format, out);
        return kSuccess;
      }
      std::ofstream file(out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open '" << out_path << "' for writing\n";
        return kIoError;
      }
      write_table(rows, req.format, file);
      file.close();
      if (!file) {
        err << "error: failed writing '" << out_path << "'\n";
        return kIoError;
      }
      return kSuccess;
    }
    if (verify_cmd->parsed()) {
      if (list) {
        for (const auto& e : identities::catalog()) out << e.id << '\t' << e.summary << '\n';
        return kSuccess;
      }
      if (!all && identity.empty()) {
        err << "error: verify needs --identity ID, --all or --list-identities\n";
        return kUsageError;
      }
      if (vq && !vp) {
        err << "error: --q requires --p\n";
        return kUsageError;
      }
      identities::ParameterPanel panel;
      if (vp) {
        panel.exponents = {*vp};
        panel.pairs = {{*vp, vq.value_or(*vp)}};
        ParamPair(*vp, vq.value_or(*vp));
      }
      std::vector<identities::IdentityReport> reports;
      if (all) {
        reports = identities::verify_all(vopts, panel);
      } else {
        const auto& entry = identities::catalog_entry(identity);
        if (vp && !vq && entry.kind == identities::ParamKind::pair) {
          err << "error: " << identity << " is parameterized by (p, q); pass both --p and --q\n";
          return kUsageError;
        }
        reports.push_back(identities::verify(identity, vopts, panel));
      }
      write_reports(reports, kFormats.at(verify_format), out);
      const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
      return ok ? kSuccess : kVerificationFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace gtrig::cli
