#include "gbds/free_group.hpp"

#include <algorithm>

#include "gbds/system.hpp"

namespace gbds {

namespace {

constexpr std::string_view kInv = "⁻¹";
constexpr std::string_view kInvAscii = "^-1";

void push_reduced(std::vector<Letter>& out, Letter x) {
  if (!out.empty() && out.back() == x.inv()) {
    out.pop_back();
  } else {
    out.push_back(x);
  }
}

}  // namespace

FreeGroupElem::FreeGroupElem(const std::vector<Letter>& letters) {
  for (Letter x : letters) push_reduced(letters_, x);
}

FreeGroupElem FreeGroupElem::of(const Word& alpha, const Word& beta) {
  std::vector<Letter> ls;
  for (std::size_t i = 0; i < alpha.size(); ++i) ls.push_back({alpha[i], false});
  for (std::size_t i = beta.size(); i > 0; --i) ls.push_back({beta[i - 1], true});
  return FreeGroupElem(ls);
}

FreeGroupElem FreeGroupElem::inverse() const {
  FreeGroupElem out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(it->inv());
  return out;
}

FreeGroupElem operator*(const FreeGroupElem& s, const FreeGroupElem& t) {
  FreeGroupElem out = s;
  for (Letter x : t.letters_) push_reduced(out.letters_, x);
  return out;
}

std::optional<std::pair<Word, Word>> FreeGroupElem::shape() const {
  Word alpha, beta;
  std::size_t i = 0;
  while (i < letters_.size() && !letters_[i].inverse) alpha.push_back(letters_[i++].label);
  std::size_t j = letters_.size();
  while (j > i && letters_[j - 1].inverse) beta.push_back(letters_[--j].label);
  if (i != j) return std::nullopt;
  return std::make_pair(alpha, beta);
}

int FreeGroupElem::degree() const {
  int d = 0;
  for (Letter x : letters_) d += x.inverse ? -1 : 1;
  return d;
}

std::string FreeGroupElem::format(const System& sys) const {
  if (letters_.empty()) return "ε";
  bool long_names = false;
  for (LabelId l = 0; l < sys.label_count(); ++l) long_names |= sys.label_name(l).size() > 1;
  const std::string sep = long_names ? "." : "";

  std::string out;
  auto append = [&](const std::string& piece) {
    if (!out.empty()) out += sep;
    out += piece;
  };
  if (auto sh = shape()) {
    const auto& [alpha, beta] = *sh;
    if (!alpha.empty()) append(sys.format_word(alpha));
    if (beta.size() == 1) {
      append(sys.label_name(beta[0]) + std::string(kInv));
    } else if (beta.size() > 1) {
      append("(" + sys.format_word(beta) + ")" + std::string(kInv));
    }
    return out;
  }
  for (Letter x : letters_) {
    append(sys.label_name(x.label) + (x.inverse ? std::string(kInv) : std::string()));
  }
  return out;
}

FreeGroupElem FreeGroupElem::parse(const System& sys, std::string_view text) {
  std::vector<Letter> ls;
  if (text.empty() || text == "ε" || text == "eps") return {};
  auto take_inverse = [&](std::size_t& pos) {
    if (text.substr(pos, kInv.size()) == kInv) {
      pos += kInv.size();
      return true;
    }
    if (text.substr(pos, kInvAscii.size()) == kInvAscii) {
      pos += kInvAscii.size();
      return true;
    }
    return false;
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == '.') {
      ++pos;
      continue;
    }
    if (text[pos] == '(') {
      std::size_t close = text.find(')', pos);
      if (close == std::string_view::npos) throw StructuralError("unbalanced '(' in group element");
      Word w = sys.parse_word(text.substr(pos + 1, close - pos - 1));
      pos = close + 1;
      if (!take_inverse(pos)) {
        for (std::size_t i = 0; i < w.size(); ++i) ls.push_back({w[i], false});
        continue;
      }
      for (std::size_t i = w.size(); i > 0; --i) ls.push_back({w[i - 1], true});
      continue;
    }
    std::size_t best = 0;
    LabelId best_id = 0;
    for (LabelId l = 0; l < sys.label_count(); ++l) {
      const std::string& n = sys.label_name(l);
      if (n.size() > best && text.substr(pos, n.size()) == n) {
        best = n.size();
        best_id = l;
      }
    }
    if (best == 0) {
      throw StructuralError("cannot read a label at '" + std::string(text.substr(pos)) + "'");
    }
    pos += best;
    ls.push_back({best_id, take_inverse(pos)});
  }
  return FreeGroupElem(ls);
}

std::vector<FreeGroupElem> FreeGroupElem::shaped(const System& sys, std::size_t maxlen) {
  std::vector<FreeGroupElem> out;
  auto words = sys.wstar(maxlen);
  for (std::size_t total = 0; total <= maxlen; ++total) {
    for (const Word& a : words) {
      for (const Word& b : words) {
        if (a.size() + b.size() != total) continue;
        if (!a.empty() && !b.empty() && a.back() == b.back()) continue;
        out.push_back(of(a, b));
      }
    }
  }
  return out;
}

std::vector<FreeGroupElem> FreeGroupElem::all(std::size_t labels, std::size_t maxlen) {
  std::vector<FreeGroupElem> out{FreeGroupElem{}};
  std::vector<FreeGroupElem> layer{FreeGroupElem{}};
  for (std::size_t len = 1; len <= maxlen; ++len) {
    std::vector<FreeGroupElem> next;
    for (const auto& g : layer) {
      for (LabelId l = 0; l < labels; ++l) {
        for (bool inv : {false, true}) {
          Letter x{l, inv};
          if (!g.letters_.empty() && g.letters_.back() == x.inv()) continue;
          FreeGroupElem h = g;
          h.letters_.push_back(x);
          next.push_back(std::move(h));
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace gbds
