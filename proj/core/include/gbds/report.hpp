#pragma once

// Structured verification reports. A report is an ordered list of facts
// (computed values) and checks (pass/fail with detail). Rendering is
// deterministic.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace gbds {

struct ReportEntry {
  enum class Kind { Fact, Check };
  Kind kind = Kind::Fact;
  std::string key;
  std::string value;  // fact value or check detail
  bool pass = true;   // checks only
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  void fact(std::string key, std::string value);
  void check(std::string name, bool pass, std::string detail = {});
  /// Appends every entry of `other`, prefixing keys with `prefix`.
  void absorb(const Report& other, const std::string& prefix = {});

  const std::string& title() const noexcept { return title_; }
  const std::vector<ReportEntry>& entries() const noexcept { return entries_; }
  bool ok() const noexcept;
  std::size_t failures() const noexcept;
  /// First failing check, or nullptr.
  const ReportEntry* first_failure() const noexcept;

  /// Human-readable rendering: title line, then one line per entry.
  std::string text() const;

 private:
  std::string title_;
  std::vector<ReportEntry> entries_;
};

/// Counts instances of one property and keeps the first few failures.
class Tally {
 public:
  explicit Tally(std::string name, std::size_t keep = 3)
      : name_(std::move(name)), keep_(keep) {}

  /// Records one instance; `detail` is only evaluated on failure.
  void add(bool ok, const std::function<std::string()>& detail);
  void add(bool ok) { add(ok, [] { return std::string{}; }); }
  void fail(std::string detail);

  std::size_t total() const noexcept { return total_; }
  std::size_t failed() const noexcept { return failed_; }
  bool ok() const noexcept { return failed_ == 0; }
  /// Writes a single check line into the report.
  void emit(Report& r) const;

 private:
  std::string name_;
  std::size_t keep_;
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> samples_;
};

}  // namespace gbds
