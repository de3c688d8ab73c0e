#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <locale>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "levelone/bounds.hpp"
#include "levelone/hecke.hpp"
#include "levelone/modforms.hpp"
#include "levelone/plot.hpp"
#include "levelone/primes.hpp"
#include "levelone/scan.hpp"

namespace levelone::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string real_str(const Real& x) { return format_decimal(x, 20); }

std::string poly_str(const std::vector<mpz_class>& coeffs) {
  std::string s;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const mpz_class& c = coeffs[i];
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (i == 0 || mag != 1) s += mag.get_str() + (i > 0 ? "*" : "");
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

json strings(std::span<const mpz_class> v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(c.get_str());
  return a;
}

// Largest prime needed to have k + 1 primes: Rosser's bound p_n < n (ln n + ln ln n), n >= 6.
std::uint64_t limit_for_prime_count(std::size_t n) {
  if (n < 6) return 20;
  const double x = static_cast<double>(n);
  return static_cast<std::uint64_t>(x * (std::log(x) + std::log(std::log(x)))) + 10;
}

Real parse_real(const std::string& s, const char* flag) {
  std::istringstream in(s);
  in.imbue(std::locale::classic());
  double probe;
  if (!(in >> probe) || !in.eof() || !std::isfinite(probe))
    throw UsageError(std::string(flag) + ": not a number: " + s);
  return Real(s);
}

int run_vmbasis(int k, std::optional<std::size_t> prec, bool as_json, std::ostream& out) {
  if (k % 2 != 0) throw UsageError("--weight must be even");
  const int d = dim_cusp(k);
  const std::size_t p = prec.value_or(2 * static_cast<std::size_t>(d));
  if (p < 2 * static_cast<std::size_t>(d))
    throw UsageError("--prec must be at least 2*dim = " + std::to_string(2 * d));
  const MillerBasis b = miller_basis(k, p);
  if (as_json) {
    json j{{"weight", k}, {"dim", d}, {"prec", p}, {"forms", json::array()}};
    for (const auto& f : b.forms) j["forms"].push_back(strings(f.coeffs()));
    out << j.dump() << '\n';
    return kOk;
  }
  out << "k=" << k << " dim=" << d << " prec=" << p << '\n';
  for (int i = 0; i < d; ++i) {
    out << "f_" << i + 1 << ":";
    for (const auto& c : b.forms[i].coeffs()) out << ' ' << c.get_str();
    out << '\n';
  }
  return kOk;
}

int run_trace(int k, bool as_json, std::ostream& out) {
  const TraceResult t = trace_t2(k);
  if (as_json)
    out << json{{"k", k}, {"dim", t.dim}, {"trace", t.trace.get_str()}}.dump() << '\n';
  else
    out << "k=" << k << " dim=" << t.dim << " trace=" << t.trace.get_str() << '\n';
  return kOk;
}

int run_scan_cmd(const ScanOptions& opt, bool as_json, std::ostream& out) {
  const ScanReport r = run_scan(opt);
  double total = 0;
  const WeightTiming* slowest = nullptr;
  for (const auto& t : r.timings) {
    total += t.seconds;
    if (!slowest || t.seconds > slowest->seconds) slowest = &t;
  }
  bool any_multi = false;
  for (const auto& rec : r.records) any_multi = any_multi || rec.dim > 1;

  out << "scan k=" << r.k_min << ".." << r.k_max << ": " << r.records.size() << " records (" << r.resumed
      << " resumed, " << r.computed << " computed)" << (r.complete ? "" : ", INCOMPLETE") << '\n';
  if (slowest)
    out << "time: " << total << " s of compute, " << total / static_cast<double>(r.timings.size())
        << " s/weight mean, slowest k=" << slowest->k << " (" << slowest->seconds << " s), wall "
        << r.wall_seconds << " s\n";
  if (r.duplicates.empty()) {
    out << "no duplicate (dim, trace) pairs\n";
  } else {
    out << r.duplicates.size() << " duplicate (dim, trace) pairs:\n";
    for (const auto& [a, b] : r.duplicates) out << "  " << a << " " << b << '\n';
  }
  if (any_multi) out << "note: " << maeda_caveat() << '\n';
  if (as_json) {
    json dups = json::array();
    for (const auto& [a, b] : r.duplicates) dups.push_back({a, b});
    json timings = json::array();
    for (const auto& t : r.timings) timings.push_back({{"k", t.k}, {"seconds", t.seconds}});
    out << json{{"range", {r.k_min, r.k_max}},
                {"records_count", r.records.size()},
                {"resumed", r.resumed},
                {"computed", r.computed},
                {"complete", r.complete},
                {"duplicates", dups},
                {"elapsed", timings},
                {"wall_seconds", r.wall_seconds}}
               .dump()
        << '\n';
  }
  return r.duplicates.empty() ? kOk : kVerificationFailed;
}

int run_charpoly(int k, bool check, std::optional<int> budget, bool as_json, std::ostream& out) {
  const CharPoly p = charpoly_t2(k);
  json j{{"weight", k}, {"degree", p.degree()}, {"coeffs", strings(p.coeffs)}};
  if (!as_json) out << "k=" << k << " degree=" << p.degree() << " charpoly=" << poly_str(p.coeffs) << '\n';
  int code = kOk;
  if (check) {
    if (p.degree() == 0) {
      if (!as_json) out << "empty space: nothing to check\n";
      j["irreducibility"] = nullptr;
    } else {
      const int b = budget.value_or(default_prime_budget(p.degree()));
      const IrreducibilityVerdict v = check_irreducible(p, b);
      json jv{{"verdict", to_string(v.kind)}, {"primes_tried", v.primes_tried}, {"prime_budget", b}};
      if (!as_json) out << "verdict=" << to_string(v.kind);
      if (v.kind == IrreducibilityVerdict::Kind::Irreducible) {
        jv["witness_prime"] = v.witness_prime;
        if (!as_json) out << " witness_prime=" << v.witness_prime;
      } else if (v.kind == IrreducibilityVerdict::Kind::Reducible) {
        jv["factor_degrees"] = v.factor_degrees;
        if (!as_json) {
          out << " factor_degrees=";
          for (std::size_t i = 0; i < v.factor_degrees.size(); ++i) out << (i ? "," : "") << v.factor_degrees[i];
        }
        code = kVerificationFailed;
      } else {
        code = kVerificationFailed;
      }
      if (!as_json) out << " primes_tried=" << v.primes_tried << '\n';
      j["irreducibility"] = jv;
    }
  }
  if (as_json) out << j.dump() << '\n';
  return code;
}

int run_distinguish(int k1, int k2, std::size_t max_n, bool as_json, std::ostream& out) {
  if (k1 == k2) throw UsageError("--weight1 and --weight2 must differ");
  if (max_n == 0) throw UsageError("--max-n must be positive");
  for (int k : {k1, k2})
    if (dim_cusp(k) != 1)
      throw UsageError("weight " + std::to_string(k) + " has dim " + std::to_string(dim_cusp(k)) +
                       "; rational eigenforms exist only for k in {12, 16, 18, 20, 22, 26}");
  const auto a = eigenform_coeffs(k1, max_n);
  const auto b = eigenform_coeffs(k2, max_n);
  const DistinguishResult r = distinguish(a, b, max_n);
  if (as_json) {
    json j{{"weight1", k1}, {"weight2", k2}, {"max_n", max_n}};
    if (r.index) {
      j["n"] = *r.index;
      j["a_n_1"] = a[*r.index - 1].get_str();
      j["a_n_2"] = b[*r.index - 1].get_str();
    } else {
      j["n"] = nullptr;
    }
    out << j.dump() << '\n';
  } else if (r.index) {
    out << "n=" << *r.index << " a_n(f)=" << a[*r.index - 1].get_str() << " a_n(g)=" << b[*r.index - 1].get_str()
        << '\n';
  } else {
    out << "no difference up to n=" << max_n << " (scan bound, not a proof of equality)\n";
  }
  return r.index ? kOk : kVerificationFailed;
}

int run_bound(std::uint64_t level, bool as_json, std::ostream& out) {
  if (level == 0) throw UsageError("--level must be >= 1");
  const BoundReport r = bound_report(level);
  const Real log_n = log(Real(level));
  const PrimeTable table(std::max<std::uint64_t>(17, static_cast<std::uint64_t>(2 * log_n) + 2));
  const bool exceptional = is_exceptional_level(level, table);
  if (as_json) {
    json j{{"level", level},
           {"smallest_prime", r.smallest_prime},
           {"murty_bound", r.murty},
           {"main_bound", real_str(r.main)},
           {"main_bound_floor", static_cast<std::uint64_t>(floor(r.main))},
           {"theta_estimate_fails", exceptional},
           {"precision_bits", kRealBits}};
    if (r.asymptotic)
      j["asymptotic"] = {{"unconditional", real_str(r.asymptotic->unconditional)},
                         {"riemann", real_str(r.asymptotic->riemann)},
                         {"cramer", real_str(r.asymptotic->cramer)},
                         {"note", "shape only: O-constants unspecified, evaluated with constant 1"}};
    out << j.dump() << '\n';
    return kOk;
  }
  out << "N=" << level << '\n'
      << "smallest prime not dividing N: " << r.smallest_prime << '\n'
      << "p^2 bound: " << r.murty << '\n'
      << "4(log N + 1)^2: " << real_str(r.main) << '\n'
      << "theta(2 log N) > log N: " << (exceptional ? "fails" : "holds") << '\n';
  if (r.asymptotic)
    out << "asymptotic shapes (constant 1; O-constants unspecified):\n"
        << "  unconditional (log N + (log N)^0.525)^2: " << real_str(r.asymptotic->unconditional) << '\n'
        << "  RH (log N + (log N)^0.5 log log N)^2: " << real_str(r.asymptotic->riemann) << '\n'
        << "  Cramer (log N + (log log N)^2)^2: " << real_str(r.asymptotic->cramer) << '\n';
  return kOk;
}

int run_theta_check(std::uint64_t limit, bool as_json, std::ostream& out) {
  if (limit < 10) throw UsageError("--limit must be >= 10");
  const PrimeTable table(limit);
  const LemmaThetaReport lemma = verify_lemma_theta(table);
  const DusartReport dusart = verify_dusart(table);
  const bool ok = lemma.pass && dusart.pass;
  if (as_json) {
    out << json{{"limit", limit},
                {"precision_bits", kRealBits},
                {"lemma", {{"pass", lemma.pass},
                           {"segments_checked", lemma.segments_checked},
                           {"violations", lemma.violations.size()},
                           {"min_margin", real_str(lemma.min_margin)},
                           {"min_margin_prime", lemma.min_margin_prime}}},
                {"dusart", {{"pass", dusart.pass},
                            {"points_checked", dusart.points_checked},
                            {"violations", dusart.violations},
                            {"worst_slack", real_str(dusart.worst_slack)},
                            {"worst_prime", dusart.worst_prime},
                            {"worst_is_left_limit", dusart.worst_is_left_limit}}},
                {"pass", ok}}
               .dump()
        << '\n';
  } else {
    out << "theta(2x+2) > x for 2x+2 <= " << limit << ": " << (lemma.pass ? "pass" : "FAIL") << " ("
        << lemma.segments_checked << " segments, " << lemma.violations.size()
        << " violations, min margin " << real_str(lemma.min_margin) << " at p=" << lemma.min_margin_prime << ")\n";
    for (const auto& v : lemma.violations)
      out << "  violation: theta(" << v.prime << ") vs (" << v.next_prime << "-2)/2, margin " << real_str(v.margin)
          << '\n';
    out << "|theta(x) - x| < 3.965 x/log^2 x for 1 < x <= " << limit << ": " << (dusart.pass ? "pass" : "FAIL")
        << " (" << dusart.points_checked << " points, worst slack " << real_str(dusart.worst_slack) << " at x="
        << dusart.worst_prime << (dusart.worst_is_left_limit ? "-" : "") << ")\n";
  }
  return ok ? kOk : kVerificationFailed;
}

int run_exceptional(bool as_json, std::ostream& out) {
  const PrimeTable table(100);
  const auto levels = exceptional_levels(table);
  if (as_json) {
    json iv = json::array();
    for (const auto& i : failure_intervals(table)) iv.push_back({{"lo", i.lo.describe()}, {"hi", i.hi.describe()}});
    out << json{{"levels", levels}, {"failure_intervals", iv}}.dump() << '\n';
  } else {
    out << format_level_set(levels) << '\n';
  }
  return kOk;
}

int run_primorial_table(std::size_t count, bool as_json, std::ostream& out) {
  if (count == 0) throw UsageError("--count must be positive");
  const PrimeTable table(limit_for_prime_count(count + 1));
  json rows = json::array();
  if (!as_json) out << "k\tp_k\tg_k\tlog_N_k\n";
  for (std::size_t k = 1; k <= count; ++k) {
    const PrimorialRow r = primorial_row(k, table);
    if (as_json)
      rows.push_back({{"k", r.k}, {"p_k", r.prime}, {"g_k", r.gap}, {"log_primorial", real_str(r.log_primorial)}});
    else
      out << r.k << '\t' << r.prime << '\t' << r.gap << '\t' << real_str(r.log_primorial) << '\n';
  }
  if (as_json) out << json{{"rows", rows}, {"precision_bits", kRealBits}}.dump() << '\n';
  return kOk;
}

int run_theta_plot(const std::string& max_str, const std::string& path, bool as_json, std::ostream& out) {
  const Real x_max = parse_real(max_str, "--max");
  if (x_max < 0) throw UsageError("--max must be nonnegative");
  if (x_max > 5e7) throw UsageError("--max too large");
  const PrimeTable table(std::max<std::uint64_t>(2, static_cast<std::uint64_t>(ceil(2 * x_max)) + 1));
  const std::string csv = emit_theta_plot(x_max, table);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << csv)) throw std::runtime_error("cannot write " + path);
  const auto rows = static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) - 1;
  if (as_json)
    out << json{{"out", path}, {"rows", rows}}.dump() << '\n';
  else
    out << "wrote " << rows << " rows to " << path << '\n';
  return kOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  out.imbue(std::locale::classic());
  CLI::App app{"Level-one Hecke eigenform tools: Miller bases, T_2 traces, weight scans and theta bounds",
               "levelone"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  bool as_json = false;
  auto json_flag = [&as_json](CLI::App* sub) { sub->add_flag("--json", as_json, "Machine-readable output"); };

  int weight = 0, weight2 = 0;
  std::optional<std::size_t> prec;
  auto* vm = app.add_subcommand("vmbasis", "Victor Miller basis of S_k");
  vm->add_option("--weight", weight, "Weight k")->required();
  vm->add_option("--prec", prec, "Highest q-exponent (default 2*dim)");
  json_flag(vm);

  auto* tr = app.add_subcommand("trace", "dim S_k and the trace of T_2");
  tr->add_option("--weight", weight, "Weight k")->required();
  json_flag(tr);

  ScanOptions scan_opt;
  std::string scan_out;
  std::optional<int> serial_above;
  auto* sc = app.add_subcommand("scan", "(dim, trace) over a weight range, then duplicate detection");
  sc->add_option("--min", scan_opt.k_min, "Smallest weight")->required();
  sc->add_option("--max", scan_opt.k_max, "Largest weight")->required();
  sc->add_option("--jobs", scan_opt.workers, "Worker threads")->check(CLI::PositiveNumber);
  sc->add_option("--out", scan_out, "Record file")->required();
  sc->add_flag("--resume", scan_opt.resume, "Skip weights already in the record file");
  sc->add_option("--serial-above", serial_above, "Run weights above this one at a time after the pool");
  json_flag(sc);

  bool check_irr = false;
  std::optional<int> budget;
  auto* cp = app.add_subcommand("charpoly", "Characteristic polynomial of T_2 on S_k");
  cp->add_option("--weight", weight, "Weight k")->required();
  cp->add_flag("--check-irreducible", check_irr, "Certify irreducibility over Q");
  cp->add_option("--prime-budget", budget, "Primes to try (default 25*degree)")->check(CLI::PositiveNumber);
  json_flag(cp);

  std::size_t max_n = 4;
  auto* di = app.add_subcommand("distinguish", "First index where two level-one eigenforms differ");
  di->add_option("--weight1", weight, "First weight")->required();
  di->add_option("--weight2", weight2, "Second weight")->required();
  di->add_option("--max-n", max_n, "Scan bound");
  json_flag(di);

  std::uint64_t level = 1;
  auto* bd = app.add_subcommand("bound", "Coefficient bounds for level N");
  bd->add_option("--level", level, "Level N")->required();
  json_flag(bd);

  std::uint64_t limit = 1'000'000;
  auto* tc = app.add_subcommand("theta-check", "Verify theta(2x+2) > x and Dusart's inequality up to a limit");
  tc->add_option("--limit", limit, "Sieve limit");
  json_flag(tc);

  auto* ex = app.add_subcommand("exceptional-set", "Levels where theta(2 log N) > log N fails");
  json_flag(ex);

  std::size_t count = 0;
  auto* pt = app.add_subcommand("primorial-table", "k, p_k, prime gap, log of the k-th primorial");
  pt->add_option("--count", count, "Rows")->required();
  json_flag(pt);

  std::string plot_max, plot_out;
  auto* tp = app.add_subcommand("theta-plot", "CSV of theta(2x) and x");
  tp->add_option("--max", plot_max, "Largest x")->required();
  tp->add_option("--out", plot_out, "CSV path")->required();
  json_flag(tp);

  std::vector<const char*> cargv;
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    if (*vm) return run_vmbasis(weight, prec, as_json, out);
    if (*tr) return run_trace(weight, as_json, out);
    if (*sc) {
      scan_opt.output = scan_out;
      scan_opt.serial_above = serial_above;
      if (scan_opt.k_min > scan_opt.k_max) throw UsageError("--min must not exceed --max");
      if (scan_opt.k_min < 2) throw UsageError("--min must be >= 2");
      return run_scan_cmd(scan_opt, as_json, out);
    }
    if (*cp) return run_charpoly(weight, check_irr, budget, as_json, out);
    if (*di) return run_distinguish(weight, weight2, max_n, as_json, out);
    if (*bd) return run_bound(level, as_json, out);
    if (*tc) return run_theta_check(limit, as_json, out);
    if (*ex) return run_exceptional(as_json, out);
    if (*pt) return run_primorial_table(count, as_json, out);
    if (*tp) return run_theta_plot(plot_max, plot_out, as_json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const RecordFileError& e) {
    err << "error: corrupt record file: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace levelone::cli
