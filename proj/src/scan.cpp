#include "levelone/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "levelone/hecke.hpp"
#include "levelone/modforms.hpp"

namespace levelone {

WeightRecord compute_record(int k) {
  const TraceResult t = trace_t2(k);
  return WeightRecord{k, t.dim, t.trace};
}

std::string format_record(const WeightRecord& r) {
  return std::to_string(r.k) + '\t' + std::to_string(r.dim) + '\t' + r.trace.get_str(10);
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_minus) {
  if (allow_minus && !s.empty() && s.front() == '-') {
    s.remove_prefix(1);
    if (s == "0") return false;
  }
  if (s.empty()) return false;
  if (s.size() > 1 && s.front() == '0') return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

int parse_small(std::string_view s, bool allow_minus, std::size_t line_no, const char* field) {
  if (!is_integer_literal(s, allow_minus) || s.size() > 9)
    throw RecordFileError(line_no, std::string("bad ") + field + " field '" + std::string(s) + "'");
  return std::stoi(std::string(s));
}

}  // namespace

WeightRecord parse_record(std::string_view line, std::size_t line_no) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  if (fields.size() != 3)
    throw RecordFileError(line_no, "expected 3 tab-separated fields, found " + std::to_string(fields.size()));

  WeightRecord r;
  r.k = parse_small(fields[0], true, line_no, "weight");
  r.dim = parse_small(fields[1], false, line_no, "dim");
  if (!is_integer_literal(fields[2], true))
    throw RecordFileError(line_no, "trace '" + std::string(fields[2]) + "' is not an integer literal");
  r.trace.set_str(std::string(fields[2]), 10);
  return r;
}

std::vector<WeightRecord> load_records(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open record file " + path.string());

  std::vector<WeightRecord> records;
  std::map<int, std::size_t> seen;  // weight -> line
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    WeightRecord r = parse_record(line, line_no);
    if (r.k % 2 != 0) throw RecordFileError(line_no, "odd weight " + std::to_string(r.k));
    if (r.dim != dim_cusp(r.k))
      throw RecordFileError(line_no, "dim " + std::to_string(r.dim) + " for weight " + std::to_string(r.k) +
                                         ", expected " + std::to_string(dim_cusp(r.k)));
    if (auto [it, fresh] = seen.emplace(r.k, line_no); !fresh)
      throw RecordFileError(line_no, "weight " + std::to_string(r.k) + " already recorded on line " +
                                         std::to_string(it->second));
    records.push_back(std::move(r));
  }
  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.k < b.k; });
  return records;
}

void save_records(const std::filesystem::path& path, std::span<const WeightRecord> records) {
  std::vector<const WeightRecord*> sorted;
  for (const auto& r : records) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->k < b->k; });
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write record file " + path.string());
  for (const auto* r : sorted) out << format_record(*r) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<std::pair<int, int>> detect_duplicates(std::span<const WeightRecord> records) {
  std::map<std::pair<int, mpz_class>, std::vector<int>> by_key;
  for (const auto& r : records)
    if (r.dim >= 1) by_key[{r.dim, r.trace}].push_back(r.k);

  std::vector<std::pair<int, int>> pairs;
  for (auto& [key, ks] : by_key) {
    std::sort(ks.begin(), ks.end());
    for (std::size_t i = 0; i < ks.size(); ++i)
      for (std::size_t j = i + 1; j < ks.size(); ++j)
        if (ks[i] != ks[j]) pairs.emplace_back(ks[i], ks[j]);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

ScanReport run_scan(const ScanOptions& opt) {
  if (opt.k_min > opt.k_max) throw std::invalid_argument("run_scan: k_min > k_max");
  if (opt.k_min < 2) throw std::invalid_argument("run_scan: k_min must be >= 2");
  if (opt.workers == 0) throw std::invalid_argument("run_scan: need at least one worker");

  const auto wall_start = std::chrono::steady_clock::now();
  ScanReport report;
  report.k_min = opt.k_min;
  report.k_max = opt.k_max;

  std::set<int> done;
  if (opt.resume && std::filesystem::exists(opt.output)) {
    for (auto& r : load_records(opt.output)) {
      done.insert(r.k);
      if (r.k >= opt.k_min && r.k <= opt.k_max) report.records.push_back(std::move(r));
    }
    report.resumed = report.records.size();

    std::vector<const WeightRecord*> nonempty;
    for (const auto& r : report.records)
      if (r.dim >= 1) nonempty.push_back(&r);
    for (std::size_t i = 0; i < std::min(opt.spot_checks, nonempty.size()); ++i) {
      const WeightRecord& r = *nonempty[i * nonempty.size() / std::max<std::size_t>(opt.spot_checks, 1)];
      if (!(compute_record(r.k) == r))
        throw std::runtime_error("resume spot check failed: stored trace for weight " + std::to_string(r.k) +
                                 " does not match a fresh computation");
    }
  }

  std::vector<int> todo;
  for (int k = opt.k_min + (opt.k_min % 2); k <= opt.k_max; k += 2)
    if (!done.contains(k)) todo.push_back(k);
  // Largest (slowest) weights first when there is a pool to balance.
  if (opt.workers > 1) std::reverse(todo.begin(), todo.end());

  std::vector<int> pooled, deferred;
  for (int k : todo) (opt.serial_above && k > *opt.serial_above ? deferred : pooled).push_back(k);

  std::ofstream out(opt.output, std::ios::binary | (opt.resume ? std::ios::app : std::ios::trunc));
  if (!out) throw std::runtime_error("cannot open output " + opt.output.string());

  std::mutex mu;  // guards out, report.records, report.timings, failure
  std::exception_ptr failure;
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> tickets{0};
  const std::size_t limit = opt.stop_after.value_or(todo.size());

  auto run_one = [&](int k) {
    const auto t0 = std::chrono::steady_clock::now();
    WeightRecord r = compute_record(k);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::lock_guard<std::mutex> lock(mu);
    out << format_record(r) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + opt.output.string());
    report.records.push_back(std::move(r));
    report.timings.push_back({k, secs});
  };
  auto claim = [&] { return tickets.fetch_add(1) < limit; };

  auto worker = [&] {
    while (true) {
      {
        std::lock_guard<std::mutex> lock(mu);
        if (failure) return;
      }
      const std::size_t i = next.fetch_add(1);
      if (i >= pooled.size() || !claim()) return;
      try {
        run_one(pooled[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (opt.workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < opt.workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  for (int k : deferred) {
    if (!claim()) break;
    run_one(k);
  }

  report.computed = report.timings.size();
  std::sort(report.records.begin(), report.records.end(), [](const auto& a, const auto& b) { return a.k < b.k; });
  std::sort(report.timings.begin(), report.timings.end(), [](const auto& a, const auto& b) { return a.k < b.k; });
  report.complete = report.computed == todo.size();
  report.duplicates = detect_duplicates(report.records);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
  return report;
}

const char* maeda_caveat() {
  return "Distinct (dim, trace) pairs separate the T_2 characteristic polynomials only where each is "
         "irreducible (Maeda's conjecture); outside the weights where irreducibility has been verified "
         "the no-duplicates conclusion is conditional on that conjecture.";
}

}  // namespace levelone
