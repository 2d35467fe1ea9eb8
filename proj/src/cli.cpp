#include "plateau/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "plateau/asymptotics.hpp"
#include "plateau/counting.hpp"
#include "plateau/gfseries.hpp"
#include "plateau/oracle.hpp"
#include "plateau/report.hpp"

namespace plateau {

namespace {

// Invalid combination of otherwise well-formed arguments.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<Family, std::vector<std::string>>& methods_by_family() {
  static const std::map<Family, std::vector<std::string>> m = {
      {Family::dcc, {"closed", "gf", "oracle"}},
      {Family::cc, {"gf", "oracle"}},
      {Family::dplateau, {"closed", "conv", "gf", "oracle"}},
      {Family::plateau, {"gf", "conv", "oracle"}},
  };
  return m;
}

Family require_family(const std::string& name) {
  auto f = parse_family(name);
  if (!f) throw UsageError("unknown family '" + name + "' (expected dcc, cc, dplateau or plateau)");
  return *f;
}

Count count_with(Family f, const std::string& method, std::int64_t k, std::int64_t size, int workers) {
  switch (f) {
    case Family::dcc:
      if (method == "closed") return count_dcc(k, size);
      if (method == "gf") return size < 0 ? Count(0) : gf_coeffs(gf_dcc_width(k), size)[size];
      return enum_dcc(k, size, workers);
    case Family::cc:
      if (method == "gf") return count_cc(k, size);
      return enum_cc(k, size, workers);
    case Family::dplateau:
      if (method == "closed") return s_closed(k, size);
      if (method == "conv") return s_conv(k, size);
      if (method == "gf") return size < 0 ? Count(0) : gf_coeffs(gf_S_k(k), size)[size];
      return enum_dplateau(k, size, workers);
    case Family::plateau:
      if (method == "gf") return r_gf(k, size);
      if (method == "conv") return r_conv(k, size);
      return enum_plateau(k, size, workers);
  }
  return 0;
}

void write_dump(Family f, std::int64_t k, std::int64_t size, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw UsageError("cannot open dump file '" + path + "'");
  switch (f) {
    case Family::dcc:
    case Family::cc:
      for_each_cc(k, size, [&](const ColumnConvexPoly& p) {
        if (f == Family::cc || is_directed(p)) os << format_object(p) << '\n';
      });
      break;
    case Family::dplateau:
    case Family::plateau:
      for_each_plateau(k, size, [&](const PlateauPolycube& p) {
        if (f == Family::plateau || is_directed(voxels(p))) os << format_object(p) << '\n';
      });
      break;
  }
}

struct CountArgs {
  std::string family;
  std::int64_t k = 0;
  std::int64_t size = 0;
  std::string method;
  std::string dump;
  bool json = false;
};

int cmd_count(const CountArgs& a, int workers, std::ostream& out) {
  const Family f = require_family(a.family);
  const auto& allowed = methods_by_family().at(f);
  const std::string method = a.method.empty() ? allowed.front() : a.method;
  if (std::find(allowed.begin(), allowed.end(), method) == allowed.end())
    throw UsageError("method '" + method + "' is not available for family " + a.family);
  if (!a.dump.empty()) {
    if (method != "oracle") throw UsageError("--dump requires --method oracle");
    write_dump(f, a.k, a.size, a.dump);
  }
  const Count value = count_with(f, method, a.k, a.size, workers);
  if (a.json) {
    nlohmann::ordered_json j{{"family", a.family}, {"k", a.k}, {"size", a.size},
                             {"method", method}, {"value", value.str()}};
    out << j.dump() << '\n';
  } else {
    out << value << '\n';
  }
  return kExitOk;
}

struct TableArgs {
  std::string family;
  std::int64_t k_max = 0;
  std::int64_t size_max = 0;
  std::string format = "csv";
};

int cmd_table(const TableArgs& a, int workers, std::ostream& out) {
  const Family f = require_family(a.family);
  if (a.k_max < 1 || a.size_max < 1) throw UsageError("--k-max and --size-max must be >= 1");
  const FamilyTable t = build_table(f, a.k_max, a.size_max, workers);
  const std::int64_t first = min_size(f, 1);
  const char* size_name = (f == Family::dcc || f == Family::cc) ? "n" : "m";

  if (a.format == "csv") {
    out << "size";
    for (std::int64_t k = 1; k <= t.k_max; ++k) out << ",k=" << k;
    out << '\n';
    for (std::int64_t s = first; s <= t.size_max; ++s) {
      out << s;
      for (std::int64_t k = 1; k <= t.k_max; ++k) out << ',' << t.at(k, s);
      out << '\n';
    }
  } else if (a.format == "md") {
    out << "| " << size_name << " \\ k |";
    for (std::int64_t k = 1; k <= t.k_max; ++k) out << ' ' << k << " |";
    out << "\n|---|";
    for (std::int64_t k = 1; k <= t.k_max; ++k) out << "---:|";
    out << '\n';
    for (std::int64_t s = first; s <= t.size_max; ++s) {
      out << "| " << s << " |";
      for (std::int64_t k = 1; k <= t.k_max; ++k) out << ' ' << t.at(k, s) << " |";
      out << '\n';
    }
  } else if (a.format == "json") {
    nlohmann::ordered_json j{{"family", a.family}, {"k_max", t.k_max}, {"size_max", t.size_max}};
    auto& rows = j["rows"] = nlohmann::ordered_json::array();
    for (std::int64_t s = first; s <= t.size_max; ++s) {
      nlohmann::ordered_json values = nlohmann::ordered_json::array();
      for (std::int64_t k = 1; k <= t.k_max; ++k) values.push_back(t.at(k, s).str());
      rows.push_back({{"size", s}, {"values", std::move(values)}});
    }
    out << j.dump(2) << '\n';
  } else {
    throw UsageError("unknown format '" + a.format + "' (expected csv, json or md)");
  }
  return kExitOk;
}

struct GfArgs {
  std::string which;
  std::optional<std::int64_t> k;
  std::int64_t terms = 0;
  std::string format = "lines";
};

int cmd_gf(const GfArgs& a, std::ostream& out) {
  if (a.terms < 0) throw UsageError("--terms must be >= 0");
  if (a.which != "S" && !a.k) throw UsageError("-k is required for --which " + a.which);
  RationalGF gf;
  if (a.which == "S")
    gf = gf_S();
  else if (a.which == "Sk")
    gf = gf_S_k(*a.k);
  else if (a.which == "Ck")
    gf = gf_C(*a.k);
  else if (a.which == "Rk")
    gf = gf_R(*a.k);
  else
    throw UsageError("unknown generating function '" + a.which + "' (expected Sk, S, Ck or Rk)");
  const auto coeffs = gf_coeffs(gf, a.terms);
  if (a.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& c : coeffs) j.push_back(c.str());
    out << j.dump() << '\n';
  } else if (a.format == "lines") {
    for (const auto& c : coeffs) out << c << '\n';
  } else {
    throw UsageError("unknown format '" + a.format + "' (expected lines or json)");
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, int workers, std::ostream& out) {
  auto report = run_suite(suite, workers);
  if (!report) throw UsageError("unknown suite '" + suite + "'");
  out << report->to_json().dump(2) << '\n';
  return report->ok() ? kExitOk : kExitVerifyFailed;
}

struct AsymptArgs {
  std::string family;
  int offset = 0;
  std::optional<std::int64_t> k_max;
};

int cmd_asympt(const AsymptArgs& a, int workers, std::ostream& out) {
  const Family f = require_family(a.family);
  if (f != Family::cc && f != Family::plateau) throw UsageError("asympt supports families cc and plateau");
  if (a.offset < 0) throw UsageError("--offset must be >= 0");
  const std::int64_t k_min = fit_min_k(f, a.offset);
  const std::int64_t k_max = a.k_max.value_or(k_min + a.offset + 5);
  const std::int64_t k_count = k_max - k_min + 1;
  if (k_count < a.offset + 2)
    throw UsageError("--k-max must be at least " + std::to_string(k_min + a.offset + 1) +
                     " to over-determine a degree-" + std::to_string(a.offset) + " fit");

  out << "family: " << a.family << '\n'
      << "offset: " << a.offset << '\n'
      << "quantity: " << (f == Family::cc ? "h_{k,k+" : "r_{k,2k+") << a.offset << "}\n"
      << "samples: k=" << k_min << ".." << k_max << '\n';
  RatPoly fit;
  try {
    fit = fit_family(f, a.offset, k_min, k_count, workers);
  } catch (const FitError& e) {
    out << "fit: FAILED (" << e.what() << ")\n";
    return kExitVerifyFailed;
  }
  const Rational lead = leading_coeff_expected(f, a.offset);
  bool ok = fit.degree() == a.offset && fit.leading() == lead;
  out << "fit: " << fit.to_string() << '\n'
      << "degree: " << fit.degree() << '\n'
      << "leading coefficient: " << to_string(fit.leading()) << '\n'
      << "expected leading coefficient: " << to_string(lead)
      << (fit.leading() == lead ? " (match)" : " (MISMATCH)") << '\n';

  const RatPoly* stated = nullptr;
  if (a.offset <= 2)
    stated = &printed_special(f, a.offset);
  else if (a.offset <= 6)
    stated = &printed_corollary(f, a.offset);
  if (stated) {
    const bool same = *stated == fit;
    ok = ok && same;
    out << "published: " << stated->to_string() << (same ? " (match)" : " (MISMATCH)") << '\n';
    for (std::int64_t p = std::max(stated->degree(), fit.degree()); p >= 0; --p)
      out << "  k^" << p << ": published " << to_string(stated->coeff(p)) << ", fitted "
          << to_string(fit.coeff(p)) << (stated->coeff(p) == fit.coeff(p) ? "" : "  MISMATCH") << '\n';
    if (f == Family::plateau && a.offset >= 3)
      out << "note: published subscript k+" << a.offset << " read as 2k+" << a.offset << '\n';
  } else {
    out << "note: no published polynomial for this offset; the fit is an extrapolation\n";
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of plateau polycubes and column-convex polyominoes"};
  app.name(args.empty() ? "plateau-enum" : args.front());
  app.require_subcommand(1);
  int workers = 1;
  app.add_option("--workers", workers, "Worker threads for tables and oracle runs")
      ->check(CLI::PositiveNumber);

  CountArgs count;
  auto* c = app.add_subcommand("count", "Count one family at width k and size n (or m)");
  c->add_option("--family", count.family, "dcc | cc | dplateau | plateau")->required();
  c->add_option("-k", count.k, "Width")->required();
  c->add_option("-n,-m,--size", count.size, "Area (polyominoes) or lateral area (polycubes)")->required();
  c->add_option("--method", count.method, "closed | conv | gf | oracle");
  c->add_option("--dump", count.dump, "Write the enumerated objects to a file (oracle only)");
  c->add_flag("--json", count.json, "Emit a JSON object");

  TableArgs table;
  auto* t = app.add_subcommand("table", "Print the table of counts for one family");
  t->add_option("--family", table.family)->required();
  t->add_option("--k-max", table.k_max)->required();
  t->add_option("--size-max", table.size_max)->required();
  t->add_option("--format", table.format, "csv | json | md");

  GfArgs gf;
  auto* g = app.add_subcommand("gf", "Expand a generating function");
  g->add_option("--which", gf.which, "Sk | S | Ck | Rk")->required();
  g->add_option("-k", gf.k);
  g->add_option("--terms", gf.terms, "Highest exponent to print")->required();
  g->add_option("--format", gf.format, "lines | json");

  std::string suite;
  auto* v = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  v->add_option("--suite", suite, "delannoy | vandermonde | lemma41 | tables | bijection | asymptotics | all")
      ->required();

  AsymptArgs asympt;
  auto* s = app.add_subcommand("asympt", "Fit the polynomial in k for a fixed offset");
  s->add_option("--family", asympt.family, "cc | plateau")->required();
  s->add_option("--offset", asympt.offset)->required();
  s->add_option("--k-max", asympt.k_max);

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (c->parsed()) return cmd_count(count, workers, out);
    if (t->parsed()) return cmd_table(table, workers, out);
    if (g->parsed()) return cmd_gf(gf, out);
    if (v->parsed()) return cmd_verify(suite, workers, out);
    if (s->parsed()) return cmd_asympt(asympt, workers, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace plateau
