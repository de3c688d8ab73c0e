// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli.hpp"
#include "levelone/bounds.hpp"
#include "levelone/hecke.hpp"
#include "levelone/modforms.hpp"
#include "levelone/primes.hpp"
#include "levelone/scan.hpp"
#include "levelone/series.hpp"

using namespace levelone;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, double time_limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > time_limit_s) {
    o.pass = false;
    o.detail += " [over time limit " + std::to_string(time_limit_s) + " s]";
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %s %s (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
  std::fflush(stdout);
}

// tau(n) for n <= prec from q * prod (1 - q^n)^24.
std::vector<mpz_class> tau_by_product(std::size_t prec) {
  std::vector<mpz_class> s(prec + 1);
  s[0] = 1;
  for (std::size_t n = 1; n <= prec; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (std::size_t i = prec; i >= n; --i) s[i] -= s[i - n];
  std::vector<mpz_class> tau(prec + 1);
  for (std::size_t i = 1; i <= prec; ++i) tau[i] = s[i - 1];
  return tau;
}

mpz_class power(unsigned long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

const int kDimOne[] = {12, 16, 18, 20, 22, 26};

std::string cli_out(const std::vector<std::string>& args) {
  std::vector<std::string> argv{"levelone"};
  for (const auto& a : args) argv.push_back(a);
  std::ostringstream out, err;
  cli::dispatch(argv, out, err);
  return out.str();
}

Outcome trace_golden() {
  const auto tau = tau_by_product(4);
  const TraceResult t12 = trace_t2(12), t16 = trace_t2(16), t2 = trace_t2(2);
  const mpz_class a2_16 = tau[2] + 240 * tau[1];  // Delta * E4
  Outcome o;
  o.pass = t12.dim == 1 && t12.trace == tau[2] && t12.trace == -24 && t16.dim == 1 && t16.trace == a2_16 &&
           t16.trace == 216 && t2.dim == 0 && t2.trace == 0 &&
           cli_out({"trace", "--weight", "12"}) == "k=12 dim=1 trace=-24\n";
  o.detail = "(12," + std::to_string(t12.dim) + "," + t12.trace.get_str() + ") (16," + std::to_string(t16.dim) +
             "," + t16.trace.get_str() + ") (2," + std::to_string(t2.dim) + "," + t2.trace.get_str() + ")";
  return o;
}

Outcome scan_no_duplicates() {
  const fs::path dir = fs::temp_directory_path() / ("levelone_acceptance_" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  ScanOptions o1;
  o1.k_min = 2;
  o1.k_max = 1000;
  o1.workers = 1;
  o1.output = dir / "scan1.tsv";
  const ScanReport r1 = run_scan(o1);

  Outcome o;
  o.pass = r1.complete && r1.records.size() == 500 && r1.duplicates.empty() &&
           load_records(o1.output) == r1.records;
  char buf[256];
  std::snprintf(buf, sizeof buf, "500 even weights, %zu duplicates, 1 worker %.1f s", r1.duplicates.size(),
                r1.wall_seconds);
  o.detail = buf;

  ScanOptions o4 = o1;
  o4.workers = 4;
  o4.output = dir / "scan4.tsv";
  const ScanReport r4 = run_scan(o4);
  o.pass = o.pass && r4.records == r1.records && r4.duplicates.empty();
  std::snprintf(buf, sizeof buf, "; 4 workers %.1f s, identical records: %s", r4.wall_seconds,
                r4.records == r1.records ? "yes" : "no");
  o.detail += buf;
  fs::remove_all(dir);

  const unsigned cores = std::thread::hardware_concurrency();
  const double speedup = r1.wall_seconds / r4.wall_seconds;
  if (cores >= 4) {
    // near-linear: at least 3x on 4 workers
    std::snprintf(buf, sizeof buf, "; speedup %.2fx (need >= 3.0)", speedup);
    o.detail += buf;
    o.pass = o.pass && speedup >= 3.0;
  } else {
    std::snprintf(buf, sizeof buf, "; speedup %.2fx not assessed: %u hardware thread(s)", speedup, cores);
    o.detail += buf;
  }
  return o;
}

Outcome hecke_identities() {
  Outcome o;
  for (int k : kDimOne) {
    const auto a = eigenform_coeffs(k, 10);
    auto at = [&](int n) -> const mpz_class& { return a[n - 1]; };
    const bool ok = at(4) == at(2) * at(2) - power(2, k - 1) && at(9) == at(3) * at(3) - power(3, k - 1) &&
                    at(6) == at(2) * at(3) && at(10) == at(2) * at(5);
    if (!ok) {
      o.pass = false;
      o.detail += " k=" + std::to_string(k) + " fails";
    }
  }
  if (o.pass) o.detail = "a4, a9, a6, a10 relations hold for k in {12,16,18,20,22,26}";
  return o;
}

Outcome lemma_level_one() {
  Outcome o;
  std::size_t worst = 0;
  for (int k1 : kDimOne)
    for (int k2 : kDimOne) {
      if (k1 == k2) continue;
      const auto d = distinguish(eigenform_coeffs(k1, 4), eigenform_coeffs(k2, 4), 4);
      if (!d.index || *d.index > 4) {
        o.pass = false;
        o.detail += " (" + std::to_string(k1) + "," + std::to_string(k2) + ")";
      } else {
        worst = std::max(worst, *d.index);
      }
    }
  if (o.pass) o.detail = "30 ordered pairs, largest first differing index " + std::to_string(worst);
  return o;
}

Outcome exceptional_set() {
  std::vector<std::uint64_t> expected;
  for (auto [a, b] : {std::pair{1, 4}, {6, 12}, {30, 33}, {210, 244}})
    for (int n = a; n <= b; ++n) expected.push_back(n);
  const auto got = exceptional_levels(PrimeTable(100));
  return {got == expected, format_level_set(got)};
}

Outcome lemma_theta() {
  const PrimeTable table(1'000'000);
  const LemmaThetaReport lemma = verify_lemma_theta(table);
  Outcome o;
  o.pass = lemma.pass && lemma.violations.empty();
  o.detail = std::to_string(lemma.segments_checked) + " segments, " + std::to_string(lemma.violations.size()) +
             " violations";

  // Unshifted inequality over the whole table.
  const auto iv = failure_intervals(table, mpq_class(table.limit() / 2));
  const Real lo[] = {Real(0), log(Real(6)), log(Real(30)), log(Real(210))};
  const Real hi[] = {Real("1.5"), Real("2.5"), Real("3.5"), Real("5.5")};
  const Real tol("1e-20");
  bool match = iv.size() == 4;
  for (std::size_t i = 0; match && i < 4; ++i)
    match = abs(iv[i].lo.value - lo[i]) < tol && abs(iv[i].hi.value - hi[i]) < tol;
  o.pass = o.pass && match;
  o.detail += "; theta(2x) > x fails on";
  for (const auto& i : iv) o.detail += " [" + i.lo.describe() + ", " + i.hi.describe() + ")";
  return o;
}

Outcome dusart() {
  const DusartReport r = verify_dusart(PrimeTable(10'000'000));
  return {r.pass && r.violations == 0,
          std::to_string(r.points_checked) + " points, worst slack " + format_decimal(r.worst_slack, 12) +
              " at x=" + std::to_string(r.worst_prime) + (r.worst_is_left_limit ? "-" : "")};
}

Outcome primorial_law() {
  const PrimeTable table(105'000);  // p_10001 = 104743
  mpz_class n = 1;
  for (std::size_t k = 1; k <= 10'000; ++k) {
    n *= static_cast<unsigned long>(table.prime(k));
    if (smallest_nondivisor_prime(n, table) != table.prime(k + 1))
      return {false, "fails at k=" + std::to_string(k)};
  }
  return {true, "k = 1..10000, N_10000 has " + std::to_string(mpz_sizeinbase(n.get_mpz_t(), 10)) + " digits"};
}

Outcome dominance() {
  std::uint64_t tightest = 0;
  Real tightest_gap(1e9);
  for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
    const std::uint64_t m = murty_bound(n);
    const Real b = main_bound(n);
    if (Real(m) > floor(b)) return {false, "fails at N=" + std::to_string(n)};
    if (b - m < tightest_gap) {
      tightest_gap = b - m;
      tightest = n;
    }
  }
  return {true, "N = 1..10^6, tightest at N=" + std::to_string(tightest) + " (gap " +
                    format_decimal(tightest_gap, 6) + ")"};
}

Outcome maeda() {
  int irreducible = 0, reducible = 0, rerun = 0;
  std::string bad;
  for (int k = 12; k <= 300; k += 2) {
    if (dim_cusp(k) == 0) continue;
    const CharPoly p = charpoly_t2(k);
    auto v = check_irreducible(p, default_prime_budget(p.degree()));
    if (v.kind == IrreducibilityVerdict::Kind::Inconclusive) {
      ++rerun;
      v = check_irreducible(p, 4 * default_prime_budget(p.degree()));
    }
    if (v.kind == IrreducibilityVerdict::Kind::Irreducible) {
      ++irreducible;
    } else {
      if (v.kind == IrreducibilityVerdict::Kind::Reducible) ++reducible;
      bad += " " + std::to_string(k);
    }
  }
  Outcome o;
  o.pass = bad.empty() && reducible == 0;
  o.detail = std::to_string(irreducible) + " irreducible, " + std::to_string(reducible) + " reducible, " +
             std::to_string(rerun) + " rerun at 4x budget" + (bad.empty() ? "" : "; unresolved:" + bad);
  return o;
}

Outcome property_suites() {
  std::mt19937 rng(11);
  // series kernel vs double loop
  std::uniform_int_distribution<std::size_t> prec(0, 16);
  std::uniform_int_distribution<int> coeff(-9, 9);
  auto random_series = [&](std::size_t p) {
    std::vector<mpz_class> c(p + 1);
    for (auto& x : c) x = coeff(rng);
    return IntSeries(std::move(c));
  };
  for (int trial = 0; trial < 500; ++trial) {
    const IntSeries f = random_series(prec(rng)), g = random_series(prec(rng));
    const std::size_t p = std::min(f.prec(), g.prec());
    const IntSeries h = mul(f, g);
    for (std::size_t n = 0; n <= p; ++n) {
      mpz_class s = 0;
      for (std::size_t i = 0; i <= n; ++i) s += f[i] * g[n - i];
      if (h[n] != s) return {false, "series product mismatch"};
    }
  }
  // Miller basis shape
  std::uniform_int_distribution<int> half_weight(6, 250);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 2 * half_weight(rng);
    const MillerBasis b = miller_basis(k, 2 * static_cast<std::size_t>(dim_cusp(k)));
    for (int j = 0; j < b.dim; ++j)
      for (int i = 0; i <= b.dim; ++i)
        if (b.forms[j][i] != (i == j + 1 ? 1 : 0)) return {false, "echelon shape fails at k=" + std::to_string(k)};
  }
  // trace vs matrix vs charpoly
  for (int k = 2; k <= 300; k += 2) {
    const MillerBasis b = miller_basis(k, 2 * static_cast<std::size_t>(dim_cusp(k)));
    const TraceResult t = trace_t2(b);
    const T2Matrix m = t2_matrix(b);
    const auto c = charpoly(m);
    if (t.trace != m.trace() || (m.dim > 0 && c[m.dim - 1] != -t.trace) || c.back() != 1)
      return {false, "trace disagreement at k=" + std::to_string(k)};
  }
  return {true, "500 series products, 20 Miller bases, 150 weights of trace/matrix/charpoly"};
}

}  // namespace

int main() {
  std::printf("acceptance: levelone (Real precision %d bits)\n", kRealBits);
  criterion("C1", "trace golden values", 1, trace_golden);
  criterion("C2", "no duplicate (dim, trace) pairs for weights 2..1000", 600, scan_no_duplicates);
  criterion("C3", "Hecke identities on dimension-one eigenforms", 5, hecke_identities);
  criterion("C4", "distinct dimension-one weights separated by n <= 4", 5, lemma_level_one);
  criterion("C5", "exceptional level set", 1, exceptional_set);
  criterion("C6", "theta(2x+2) > x to 10^6; unshifted failure intervals", 30, lemma_theta);
  criterion("C7", "Dusart inequality at jumps and left limits to 10^7", 120, dusart);
  criterion("C8", "smallest prime not dividing N_k is p_{k+1}, k <= 10^4", 60, primorial_law);
  criterion("C9", "p^2 <= floor(4(log N + 1)^2) for N <= 10^6", 60, dominance);
  criterion("C10", "T_2 characteristic polynomials irreducible, 12 <= k <= 300", 600, maeda);
  criterion("C11", "property suites", 300, property_suites);
  std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "PASSED", failures);
  return failures ? 1 : 0;
}
