#include "fpalg/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fpalg {

int Presentation::max_relation_degree() const {
  int d = 0;
  for (const auto& r : relations) d = std::max(d, r.degree());
  return d;
}

namespace {

struct Line {
  int number;
  std::string text;  // comment-stripped
};

std::vector<Line> logical_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    // keep original columns; blank detection below
    bool blank = std::all_of(raw.begin(), raw.end(),
                             [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank) out.push_back({no, raw});
  }
  return out;
}

class RelationParser {
 public:
  RelationParser(const std::string& s, int line, const Alphabet& alphabet,
                 const Field& field)
      : s_(s), line_(line), alphabet_(alphabet), field_(field) {}

  Polynomial parse() {
    std::vector<Polynomial::Term> terms;
    skip_ws();
    bool first = true;
    while (!eof()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      terms.push_back(parse_term(sign));
      skip_ws();
      first = false;
    }
    if (first) fail("empty relation");
    return Polynomial::from_terms(field_, std::move(terms));
  }

 private:
  Polynomial::Term parse_term(int sign) {
    mpz_class coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_integer();
      have_coeff = true;
      skip_ws();
    }
    Word w;
    bool expect_factor = !have_coeff;
    while (true) {
      if (have_coeff || !w.is_one()) {
        // factors after the first (or after a coefficient) need '*'
        if (eof() || peek() != '*') break;
        ++pos_;
        skip_ws();
        expect_factor = true;
      }
      if (eof() || !is_name_start(peek())) {
        if (expect_factor) fail("expected generator name");
        break;
      }
      std::string name = parse_name();
      int rank = alphabet_.rank_of(name);
      if (rank < 0) fail("unknown generator '" + name + "'", static_cast<int>(pos_ - name.size()));
      long exp = 1;
      skip_ws();
      if (!eof() && peek() == '^') {
        ++pos_;
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
          fail("expected integer exponent after '^'");
        exp = parse_integer().get_si();
        skip_ws();
      }
      for (long i = 0; i < exp; ++i) w.append_letter(rank);
      expect_factor = false;
      have_coeff = true;  // subsequent factors all need '*'
    }
    if (sign < 0) coeff = -coeff;
    return {w, Scalar::from_integer(field_, coeff)};
  }

  mpz_class parse_integer() {
    std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(s_.substr(start, pos_ - start));
  }

  static bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string parse_name() {
    std::size_t start = pos_;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  [[noreturn]] void fail(const std::string& msg, int col = -1) {
    throw ParseError(line_, col >= 0 ? col + 1 : static_cast<int>(pos_) + 1, msg);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_;
  const Alphabet& alphabet_;
  const Field& field_;
};

std::pair<std::string, std::string> split_header(const Line& ln) {
  auto colon = ln.text.find(':');
  if (colon == std::string::npos)
    throw ParseError(ln.number, 1, "expected 'key: value' header line");
  std::string key = ln.text.substr(0, colon);
  std::string value = ln.text.substr(colon + 1);
  auto trim = [](std::string& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  };
  trim(key);
  trim(value);
  return {key, value};
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  auto lines = logical_lines(text);
  std::size_t i = 0;
  auto need_line = [&](const char* what) -> const Line& {
    if (i >= lines.size())
      throw ParseError(lines.empty() ? 1 : lines.back().number, 1,
                       std::string("missing ") + what);
    return lines[i];
  };

  Presentation p;

  {
    const Line& ln = need_line("'generators:' line");
    auto [key, value] = split_header(ln);
    if (key != "generators") throw ParseError(ln.number, 1, "expected 'generators:' line");
    std::istringstream vs(value);
    std::vector<std::string> names;
    std::string n;
    while (vs >> n) names.push_back(n);
    try {
      p.alphabet = Alphabet(names);
    } catch (const std::invalid_argument& e) {
      throw ParseError(ln.number, 1, e.what());
    }
    ++i;
  }

  {
    const Line& ln = need_line("'field:' line");
    auto [key, value] = split_header(ln);
    if (key != "field") throw ParseError(ln.number, 1, "expected 'field:' line");
    if (value == "Q") {
      p.field = Field::rationals();
    } else if (value.rfind("GF(", 0) == 0 && value.back() == ')') {
      std::string num = value.substr(3, value.size() - 4);
      if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          }))
        throw ParseError(ln.number, 1, "malformed field '" + value + "'");
      unsigned long m = std::stoul(num);
      if (m > 0x7fffffffUL || !is_prime_u32(static_cast<std::uint32_t>(m)))
        throw ParseError(ln.number, 1, "modulus " + num + " is not prime");
      p.field = Field::gf(static_cast<std::uint32_t>(m));
    } else {
      throw ParseError(ln.number, 1, "field must be Q or GF(p)");
    }
    ++i;
  }

  {
    const Line& ln = need_line("'relations:' line");
    auto [key, value] = split_header(ln);
    if (key != "relations" || !value.empty())
      throw ParseError(ln.number, 1, "expected 'relations:' line");
    ++i;
  }

  for (; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    Polynomial r = RelationParser(ln.text, ln.number, p.alphabet, p.field).parse();
    if (r.is_zero()) throw ParseError(ln.number, 1, "relation is zero");
    if (!r.is_homogeneous()) throw ParseError(ln.number, 1, "relation is inhomogeneous");
    if (r.degree() < 2) throw ParseError(ln.number, 1, "relation degree must be at least 2");
    p.relations.push_back(std::move(r));
  }

  return p;
}

std::string print_presentation(const Presentation& p) {
  std::string out = "generators:";
  for (const auto& l : p.alphabet.letters()) out += " " + l;
  out += "\nfield: " + p.field.str() + "\nrelations:\n";
  for (const auto& r : p.relations) out += r.str(p.alphabet) + "\n";
  return out;
}

Presentation specialize_mod_p(const Presentation& p, std::uint32_t prime) {
  if (!p.field.is_rational())
    throw std::invalid_argument("can only specialize a rational presentation");
  Presentation q;
  q.alphabet = p.alphabet;
  q.field = Field::gf(prime);
  for (const auto& r : p.relations) {
    Polynomial s = specialize_mod_p(r, prime);
    if (!s.is_zero()) q.relations.push_back(std::move(s));
  }
  return q;
}

std::vector<Polynomial> canonical_relations(const Presentation& p) {
  std::vector<Polynomial> rels = p.relations;
  std::sort(rels.begin(), rels.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.cmp(b) < 0; });
  return rels;
}

std::string presentation_hash(const Presentation& p) {
  Presentation canon = p;
  canon.relations = canonical_relations(p);
  std::string text = print_presentation(canon);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace fpalg
