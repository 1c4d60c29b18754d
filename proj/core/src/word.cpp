#include "gbds/word.hpp"

namespace gbds {

Word::Word(std::initializer_list<LabelId> letters) {
  s_.reserve(letters.size());
  for (LabelId l : letters) s_.push_back(static_cast<char16_t>(l));
}

Word Word::sub(std::size_t pos, std::size_t len) const {
  Word w;
  if (pos < s_.size()) w.s_ = s_.substr(pos, len);
  return w;
}

bool Word::starts_with(const Word& p) const {
  return p.s_.size() <= s_.size() && s_.compare(0, p.s_.size(), p.s_) == 0;
}

}  // namespace gbds
