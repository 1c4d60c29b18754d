#pragma once

// Finite words over a label alphabet. Labels are small integer ids; the
// owning System maps them to names.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>

namespace gbds {

using LabelId = std::uint16_t;

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<LabelId> letters);
  static Word single(LabelId l) { return Word{l}; }

  std::size_t size() const noexcept { return s_.size(); }
  bool empty() const noexcept { return s_.empty(); }
  LabelId operator[](std::size_t i) const { return static_cast<LabelId>(s_[i]); }
  LabelId front() const { return static_cast<LabelId>(s_.front()); }
  LabelId back() const { return static_cast<LabelId>(s_.back()); }

  /// Letters [pos, pos+len).
  Word sub(std::size_t pos, std::size_t len = std::u16string::npos) const;
  /// α_{1,n}.
  Word prefix(std::size_t n) const { return sub(0, n); }
  bool starts_with(const Word& p) const;

  void push_back(LabelId l) { s_.push_back(static_cast<char16_t>(l)); }
  void pop_back() { s_.pop_back(); }
  Word& operator+=(const Word& o) {
    s_ += o.s_;
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }

  const std::u16string& raw() const noexcept { return s_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::u16string s_;
};

/// Length first, then lexicographic by label id.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace gbds

template <>
struct std::hash<gbds::Word> {
  std::size_t operator()(const gbds::Word& w) const noexcept {
    return std::hash<std::u16string>{}(w.raw());
  }
};
