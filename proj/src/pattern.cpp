#include "fpalg/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fpalg {

FactorPattern FactorPattern::literal(const Word& w) {
  FactorPattern p;
  p.atoms.push_back({w, false});
  return p;
}

bool FactorPattern::has_star() const {
  for (const auto& a : atoms)
    if (a.starred) return true;
  return false;
}

int FactorPattern::min_degree() const {
  int d = 0;
  for (const auto& a : atoms)
    if (!a.starred) d += a.word.degree();
  return d;
}

std::string FactorPattern::str(const Alphabet& alph) const {
  std::string out;
  for (const auto& a : atoms) {
    for (int i = 0; i < a.word.degree(); ++i) {
      if (!out.empty()) out += " ";
      if (a.starred && a.word.degree() > 1 && i == 0) out += "( ";
      out += alph.name(a.word[i]);
    }
    if (a.starred) out += a.word.degree() > 1 ? " )*" : "*";
  }
  return out;
}

namespace {

struct Token {
  enum Kind { Name, LParen, RParen, Star } kind;
  std::string text;
  int col;
};

std::vector<Token> tokenize(const std::string& line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      out.push_back({Token::LParen, "(", static_cast<int>(i) + 1});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::RParen, ")", static_cast<int>(i) + 1});
      ++i;
    } else if (c == '*') {
      out.push_back({Token::Star, "*", static_cast<int>(i) + 1});
      ++i;
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_'))
        ++i;
      out.push_back({Token::Name, line.substr(start, i - start),
                     static_cast<int>(start) + 1});
    } else {
      throw ParseError(line_no, static_cast<int>(i) + 1,
                       std::string("unexpected character '") + c + "' in pattern");
    }
  }
  return out;
}

FactorPattern parse_pattern_line(const std::string& line, int line_no,
                                 const Alphabet& alph) {
  auto toks = tokenize(line, line_no);
  FactorPattern pat;
  std::size_t i = 0;
  auto rank = [&](const Token& t) {
    int r = alph.rank_of(t.text);
    if (r < 0) throw ParseError(line_no, t.col, "unknown letter '" + t.text + "'");
    return r;
  };
  while (i < toks.size()) {
    if (toks[i].kind == Token::Name) {
      int r = rank(toks[i]);
      ++i;
      if (i < toks.size() && toks[i].kind == Token::Star) {
        pat.atoms.push_back({Word::single(r), true});
        ++i;
      } else if (!pat.atoms.empty() && !pat.atoms.back().starred) {
        pat.atoms.back().word.append_letter(r);
      } else {
        pat.atoms.push_back({Word::single(r), false});
      }
    } else if (toks[i].kind == Token::LParen) {
      int open_col = toks[i].col;
      ++i;
      Word w;
      while (i < toks.size() && toks[i].kind == Token::Name) {
        w.append_letter(rank(toks[i]));
        ++i;
      }
      if (i >= toks.size() || toks[i].kind != Token::RParen)
        throw ParseError(line_no, open_col, "unclosed '(' in pattern");
      if (w.is_one()) throw ParseError(line_no, open_col, "empty group in pattern");
      ++i;
      if (i >= toks.size() || toks[i].kind != Token::Star)
        throw ParseError(line_no, i < toks.size() ? toks[i].col : open_col,
                         "expected '*' after ')'");
      ++i;
      pat.atoms.push_back({w, true});
    } else {
      throw ParseError(line_no, toks[i].col, "unexpected '" + toks[i].text + "'");
    }
  }
  if (pat.atoms.empty()) throw ParseError(line_no, 1, "empty pattern");
  return pat;
}

}  // namespace

std::vector<FactorPattern> parse_patterns(const std::string& text, const Alphabet& a) {
  std::vector<FactorPattern> out;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    bool blank = std::all_of(raw.begin(), raw.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c));
    });
    if (blank) continue;
    out.push_back(parse_pattern_line(raw, no, a));
  }
  return out;
}

namespace {

void expand(const FactorPattern& p, std::size_t atom, const Word& prefix,
            int max_degree, std::vector<Word>& out) {
  if (prefix.degree() > max_degree) return;
  if (atom == p.atoms.size()) {
    out.push_back(prefix);
    return;
  }
  const auto& a = p.atoms[atom];
  if (!a.starred) {
    expand(p, atom + 1, word_concat(prefix, a.word), max_degree, out);
    return;
  }
  Word cur = prefix;
  while (cur.degree() <= max_degree) {
    expand(p, atom + 1, cur, max_degree, out);
    cur.append(a.word);
  }
}

}  // namespace

std::vector<Word> pattern_instances(const FactorPattern& p, int max_degree) {
  std::vector<Word> out;
  expand(p, 0, Word::one(), max_degree, out);
  std::sort(out.begin(), out.end(), deglex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Word> pattern_set_instances(const std::vector<FactorPattern>& ps,
                                        int max_degree) {
  std::vector<Word> out;
  for (const auto& p : ps) {
    auto inst = pattern_instances(p, max_degree);
    out.insert(out.end(), inst.begin(), inst.end());
  }
  std::sort(out.begin(), out.end(), deglex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fpalg
