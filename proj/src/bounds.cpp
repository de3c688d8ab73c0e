#include "levelone/bounds.hpp"

#include <stdexcept>
#include <string>

namespace levelone {
namespace {

WideReal wide_theta_at_index(const PrimeTable& table, std::size_t k) {
  WideReal acc = 0;
  for (std::size_t i = 1; i <= k; ++i) acc += log(WideReal(table.prime(i)));
  return acc;
}

WideReal to_wide(const mpq_class& q) {
  return WideReal(q.get_num().get_str()) / WideReal(q.get_den().get_str());
}

mpq_class half(std::uint64_t n) {
  mpq_class q(static_cast<long>(n), 2);
  q.canonicalize();
  return q;
}

Real to_real(const mpq_class& q) { return Real(q.get_num().get_str()) / Real(q.get_den().get_str()); }

// Sign of theta(p_k) - q.  Near-ties are re-evaluated at WideReal precision.
int compare_theta(const PrimeTable& table, std::size_t k, const mpq_class& q) {
  const Real diff = table.theta_at_index(k) - to_real(q);
  if (abs(diff) >= near_zero()) return diff > 0 ? 1 : -1;
  const WideReal wide = wide_theta_at_index(table, k) - to_wide(q);
  if (wide == 0) return 0;
  return wide > 0 ? 1 : -1;
}

}  // namespace

const Real& dusart_constant() {
  static const Real c("3.965");
  return c;
}

const mpq_class& theta_threshold() {
  static const mpq_class t = [] {
    mpq_class q(8356, 1000);
    q.canonicalize();
    return q;
  }();
  return t;
}

std::uint64_t murty_bound(std::uint64_t level) {
  const std::uint64_t p = smallest_nondivisor_prime(level);
  return p * p;
}

Real main_bound_from_log(const Real& log_level) {
  const Real s = log_level + 1;
  return 4 * s * s;
}

Real main_bound(std::uint64_t level) {
  if (level == 0) throw std::invalid_argument("main_bound: level must be >= 1");
  return main_bound_from_log(log(Real(level)));
}

AsymptoticBounds asymptotic_bounds_from_log(const Real& log_level) {
  if (log_level <= 1) throw std::invalid_argument("asymptotic_bounds: need log N > 1");
  const Real& l = log_level;
  const Real ll = log(l);
  AsymptoticBounds b;
  const Real u = l + pow(l, Real("0.525"));
  const Real r = l + sqrt(l) * ll;
  const Real c = l + ll * ll;
  b.unconditional = u * u;
  b.riemann = r * r;
  b.cramer = c * c;
  return b;
}

AsymptoticBounds asymptotic_bounds(std::uint64_t level) {
  if (level <= 2) throw std::invalid_argument("asymptotic_bounds: level must be >= 3");
  return asymptotic_bounds_from_log(log(Real(level)));
}

BoundReport bound_report(std::uint64_t level) {
  BoundReport r;
  r.level = level;
  r.smallest_prime = smallest_nondivisor_prime(level);
  r.murty = r.smallest_prime * r.smallest_prime;
  r.main = main_bound(level);
  if (level >= 3) r.asymptotic = asymptotic_bounds(level);
  return r;
}

DusartReport verify_dusart(const PrimeTable& table) {
  if (table.limit() < 10) throw std::invalid_argument("verify_dusart: table limit must be >= 10");
  DusartReport rep;
  bool first = true;
  auto check = [&](std::size_t k, bool left_limit, const Real& log_x) {
    const std::uint64_t p = table.prime(k);
    const Real x(p);
    const Real& th = table.theta_at_index(left_limit ? k - 1 : k);
    const Real rhs = dusart_constant() * x / (log_x * log_x);
    Real slack = rhs - abs(th - x);
    if (abs(slack) < near_zero()) {
      const WideReal lw = log(WideReal(p));
      const WideReal tw = wide_theta_at_index(table, left_limit ? k - 1 : k);
      const WideReal sw = WideReal("3.965") * WideReal(p) / (lw * lw) - abs(tw - WideReal(p));
      slack = Real(sw);
      if (sw <= 0) slack = Real(0);
    }
    ++rep.points_checked;
    if (slack <= 0) {
      ++rep.violations;
      rep.pass = false;
    }
    if (first || slack < rep.worst_slack) {
      rep.worst_slack = slack;
      rep.worst_prime = p;
      rep.worst_is_left_limit = left_limit;
      first = false;
    }
  };
  for (std::size_t k = 1; k <= table.count(); ++k) {
    const Real log_x = table.log_prime(k);
    check(k, true, log_x);
    check(k, false, log_x);
  }
  return rep;
}

LemmaThetaReport verify_lemma_theta(const PrimeTable& table) {
  if (table.limit() < 5) throw std::invalid_argument("verify_lemma_theta: table limit must be >= 5");
  LemmaThetaReport rep;
  const std::size_t n = table.count();
  for (std::size_t k = 1; k <= n; ++k) {
    const bool last = k == n;
    const std::uint64_t p = table.prime(k);
    const std::uint64_t end = last ? table.limit() : table.prime(k + 1);
    if (last && end == p) break;  // the table ends exactly on a prime: no segment beyond it
    const mpq_class sup = half(end) - 1;
    // Open right end: need theta(p) >= sup.  Closed final segment: theta(p) > sup.
    const int sign = compare_theta(table, k, sup);
    const bool ok = last ? sign > 0 : sign >= 0;
    const Real margin = table.theta_at_index(k) - to_real(sup);
    ++rep.segments_checked;
    if (rep.segments_checked == 1 || margin < rep.min_margin) {
      rep.min_margin = margin;
      rep.min_margin_prime = p;
    }
    if (!ok) {
      rep.pass = false;
      rep.violations.push_back({p, end, margin});
    }
  }
  return rep;
}

Endpoint Endpoint::from_rational(const mpq_class& q) {
  Endpoint e;
  e.kind = Kind::Rational;
  e.rational = q;
  e.value = to_real(q);
  return e;
}

Endpoint Endpoint::from_log(const mpz_class& n) {
  Endpoint e;
  e.kind = Kind::LogOfInteger;
  e.log_of = n;
  e.value = log(Real(n.get_str()));
  return e;
}

std::string Endpoint::describe() const {
  if (kind == Kind::LogOfInteger) return "log " + log_of.get_str();
  return rational.get_str();
}

std::vector<FailureInterval> failure_intervals(const PrimeTable& table, const mpq_class& x_max) {
  if (x_max <= 0) return {};
  if (2 * x_max > mpq_class(table.limit()))
    throw std::out_of_range("failure_intervals: 2 * x_max beyond table limit " + std::to_string(table.limit()));

  std::vector<FailureInterval> out;
  auto add = [&](Endpoint lo, const mpq_class& hi) {
    if (!out.empty() && out.back().hi.kind == Endpoint::Kind::Rational && lo.kind == Endpoint::Kind::Rational &&
        out.back().hi.rational == lo.rational) {
      out.back().hi = Endpoint::from_rational(hi);
      return;
    }
    out.push_back({std::move(lo), Endpoint::from_rational(hi)});
  };

  // On [0, 1) theta(2x) = 0 <= x everywhere.
  add(Endpoint::from_rational(0), x_max < 1 ? x_max : mpq_class(1));

  // On [p_k / 2, p_{k+1} / 2) theta(2x) = theta(p_k) =: c; it fails for x >= c.
  for (std::size_t k = 1; k <= table.count(); ++k) {
    const mpq_class seg_lo = half(table.prime(k));
    if (seg_lo >= x_max) break;
    mpq_class seg_hi = k < table.count() ? half(table.prime(k + 1)) : x_max;
    if (seg_hi > x_max) seg_hi = x_max;
    if (compare_theta(table, k, seg_hi) >= 0) continue;  // c >= seg_hi: no failure here
    if (compare_theta(table, k, seg_lo) <= 0)
      add(Endpoint::from_rational(seg_lo), seg_hi);
    else
      add(Endpoint::from_log(primorial(k, table)), seg_hi);
  }
  return out;
}

std::vector<FailureInterval> failure_intervals(const PrimeTable& table) {
  return failure_intervals(table, theta_threshold());
}

namespace {

// Smallest N >= 1 with log N >= e.
std::uint64_t first_level_at_or_above(const Endpoint& e) {
  if (e.kind == Endpoint::Kind::LogOfInteger) return e.log_of.get_ui();
  if (e.rational <= 0) return 1;
  auto n = static_cast<std::uint64_t>(ceil(exp(e.value)));
  while (n > 1 && log(Real(n - 1)) >= e.value) --n;
  while (log(Real(n)) < e.value) ++n;
  return n;
}

// Largest N >= 0 with log N < e (0 if none).
std::uint64_t last_level_below(const Endpoint& e) {
  if (e.kind == Endpoint::Kind::LogOfInteger) return e.log_of.get_ui() - 1;
  if (e.rational <= 0) return 0;
  auto n = static_cast<std::uint64_t>(floor(exp(e.value)));
  while (n > 0 && log(Real(n)) >= e.value) --n;
  while (log(Real(n + 1)) < e.value) ++n;
  return n;
}

}  // namespace

std::vector<std::uint64_t> exceptional_levels(const PrimeTable& table) {
  if (table.limit() < 17) throw std::invalid_argument("exceptional_levels: table limit must be >= 17");
  std::vector<std::uint64_t> levels;
  for (const auto& iv : failure_intervals(table)) {
    const std::uint64_t lo = first_level_at_or_above(iv.lo);
    const std::uint64_t hi = last_level_below(iv.hi);
    for (std::uint64_t n = lo; n <= hi; ++n) levels.push_back(n);
  }
  return levels;
}

bool is_exceptional_level(std::uint64_t level, const PrimeTable& table) {
  if (level == 0) throw std::invalid_argument("is_exceptional_level: level must be >= 1");
  // theta(2 log N) <= log N  <=>  (product of primes <= 2 log N) <= N, decided exactly.
  const Real x = 2 * log(Real(level));
  if (x > table.limit()) throw std::out_of_range("is_exceptional_level: 2 log N beyond table limit");
  const std::size_t count = table.pi(static_cast<std::uint64_t>(floor(x)));
  return primorial(count, table) <= level;
}

std::string format_level_set(const std::vector<std::uint64_t>& levels) {
  std::string s = "{";
  std::size_t i = 0;
  auto emit = [&](std::uint64_t v) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(v);
  };
  while (i < levels.size()) {
    std::size_t j = i;
    while (j + 1 < levels.size() && levels[j + 1] == levels[j] + 1) ++j;
    emit(levels[i]);
    if (j - i >= 2) {
      s += ", ...";
      emit(levels[j]);
    } else if (j == i + 1) {
      emit(levels[j]);
    }
    i = j + 1;
  }
  return s + "}";
}

}  // namespace levelone
