#include "gbds/report.hpp"

namespace gbds {

void Report::fact(std::string key, std::string value) {
  entries_.push_back({ReportEntry::Kind::Fact, std::move(key), std::move(value), true});
}

void Report::check(std::string name, bool pass, std::string detail) {
  entries_.push_back({ReportEntry::Kind::Check, std::move(name), std::move(detail), pass});
}

void Report::absorb(const Report& other, const std::string& prefix) {
  for (const auto& e : other.entries_) {
    ReportEntry copy = e;
    copy.key = prefix + copy.key;
    entries_.push_back(std::move(copy));
  }
}

bool Report::ok() const noexcept { return failures() == 0; }

std::size_t Report::failures() const noexcept {
  std::size_t n = 0;
  for (const auto& e : entries_) {
    if (e.kind == ReportEntry::Kind::Check && !e.pass) ++n;
  }
  return n;
}

const ReportEntry* Report::first_failure() const noexcept {
  for (const auto& e : entries_) {
    if (e.kind == ReportEntry::Kind::Check && !e.pass) return &e;
  }
  return nullptr;
}

std::string Report::text() const {
  std::string out;
  if (!title_.empty()) out += title_ + "\n";
  for (const auto& e : entries_) {
    if (e.kind == ReportEntry::Kind::Fact) {
      out += "  " + e.key + ": " + e.value + "\n";
    } else {
      out += std::string("  [") + (e.pass ? "PASS" : "FAIL") + "] " + e.key;
      if (!e.value.empty()) out += ": " + e.value;
      out += "\n";
    }
  }
  out += ok() ? "result: PASS\n" : "result: FAIL (" + std::to_string(failures()) + ")\n";
  return out;
}

void Tally::add(bool ok, const std::function<std::string()>& detail) {
  ++total_;
  if (ok) return;
  ++failed_;
  if (samples_.size() < keep_) samples_.push_back(detail());
}

void Tally::fail(std::string detail) {
  ++total_;
  ++failed_;
  if (samples_.size() < keep_) samples_.push_back(std::move(detail));
}

void Tally::emit(Report& r) const {
  std::string detail = std::to_string(total_) + " instances";
  if (failed_ != 0) {
    detail = std::to_string(failed_) + " of " + detail + " failed";
    for (const auto& s : samples_) detail += "; " + s;
  }
  r.check(name_, failed_ == 0, std::move(detail));
}

}  // namespace gbds
