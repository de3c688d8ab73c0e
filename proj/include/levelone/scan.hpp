#pragma once

// Weight-range driver: (dim S_k, trace T_2) for every even k in a range,
// computed by a worker pool, appended to a line-per-weight record file as
// each weight finishes, then checked for duplicate pairs.
//
// Record file: one line per weight, "k<TAB>dim<TAB>trace\n", trace in
// base 10 with an optional leading minus and no padding.  Only even
// weights are written.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace levelone {

struct WeightRecord {
  int k = 0;
  int dim = 0;
  mpz_class trace;

  friend bool operator==(const WeightRecord& a, const WeightRecord& b) {
    return a.k == b.k && a.dim == b.dim && a.trace == b.trace;
  }
};

class RecordFileError : public std::runtime_error {
 public:
  RecordFileError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

WeightRecord compute_record(int k);

std::string format_record(const WeightRecord& r);

/// Parses one line (without the newline).  Throws RecordFileError.
WeightRecord parse_record(std::string_view line, std::size_t line_no);

/// Records sorted by k.  Malformed lines, odd weights, a dim that disagrees
/// with dim_cusp, and repeated weights are RecordFileErrors.  A missing file
/// throws std::runtime_error.
std::vector<WeightRecord> load_records(const std::filesystem::path& path);

/// Writes the records sorted by k, replacing the file.
void save_records(const std::filesystem::path& path, std::span<const WeightRecord> records);

/// Unordered pairs {k, k'} (k < k') with equal dim >= 1 and equal trace,
/// sorted.
std::vector<std::pair<int, int>> detect_duplicates(std::span<const WeightRecord> records);

struct ScanOptions {
  int k_min = 2;
  int k_max = 2;
  unsigned workers = 1;
  std::filesystem::path output;
  bool resume = false;
  /// Weights above this are held back and run one at a time after the pool
  /// drains, bounding peak memory.
  std::optional<int> serial_above;
  /// Stop after this many newly computed weights (simulates an interrupted run).
  std::optional<std::size_t> stop_after;
  /// On resume, recompute the trace of this many loaded records.
  std::size_t spot_checks = 2;
};

struct WeightTiming {
  int k = 0;
  double seconds = 0;
};

struct ScanReport {
  int k_min = 0;
  int k_max = 0;
  std::vector<WeightRecord> records;  // in range, sorted by k
  std::size_t resumed = 0;            // taken from an existing file
  std::size_t computed = 0;
  bool complete = false;              // every even weight in range present
  std::vector<std::pair<int, int>> duplicates;
  std::vector<WeightTiming> timings;  // newly computed weights only
  double wall_seconds = 0;
};

/// Throws std::invalid_argument for k_min > k_max, k_min < 2 or zero
/// workers, std::runtime_error if the output cannot be written, and
/// RecordFileError for a corrupt file on resume.
ScanReport run_scan(const ScanOptions& options);

/// Caveat attached to any "no duplicates" claim once some space has dim > 1.
const char* maeda_caveat();

}  // namespace levelone
