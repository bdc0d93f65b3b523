#include "fpalg/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace fpalg {

bool Alphabet::valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return !std::isdigit(static_cast<unsigned char>(s[0]));
}

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("alphabet must be non-empty");
  if (letters_.size() > 255) throw std::invalid_argument("alphabet too large");
  std::set<std::string> seen;
  for (const auto& l : letters_) {
    if (!valid_name(l)) throw std::invalid_argument("invalid generator name '" + l + "'");
    if (!seen.insert(l).second)
      throw std::invalid_argument("duplicate generator name '" + l + "'");
  }
}

int Alphabet::rank_of(const std::string& name) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] == name) return static_cast<int>(i);
  return -1;
}

Word Word::prefix(int len) const {
  return Word(std::vector<std::uint8_t>(letters_.begin(), letters_.begin() + len));
}

Word Word::suffix_from(int start) const {
  return Word(std::vector<std::uint8_t>(letters_.begin() + start, letters_.end()));
}

Word Word::subword(int start, int len) const {
  return Word(std::vector<std::uint8_t>(letters_.begin() + start,
                                        letters_.begin() + start + len));
}

void Word::append(const Word& w) {
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
}

std::string Word::str(const Alphabet& a) const {
  if (letters_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    if (!out.empty()) out += "*";
    out += a.name(letters_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::strong_ordering cmp_deglex_ranks(const Word& u, const Word& v) {
  if (u.degree() != v.degree())
    return u.degree() < v.degree() ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  for (int i = 0; i < u.degree(); ++i) {
    if (u[i] != v[i])
      // smaller rank = higher precedence = bigger word
      return u[i] < v[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering cmp_deglex(const Word& u, const Word& v, const DegLexOrder& ord) {
  int g = ord.alphabet().size();
  for (auto r : u.letters())
    if (r >= g) throw std::invalid_argument("letter rank out of alphabet range");
  for (auto r : v.letters())
    if (r >= g) throw std::invalid_argument("letter rank out of alphabet range");
  return cmp_deglex_ranks(u, v);
}

Word word_concat(const Word& u, const Word& v) {
  Word w = u;
  w.append(v);
  return w;
}

int find_factor(const Word& w, const Word& factor) {
  if (factor.degree() > w.degree()) return -1;
  const auto& h = w.letters();
  const auto& n = factor.letters();
  if (n.empty()) return 0;
  auto it = std::search(h.begin(), h.end(), n.begin(), n.end());
  return it == h.end() ? -1 : static_cast<int>(it - h.begin());
}

}  // namespace fpalg
