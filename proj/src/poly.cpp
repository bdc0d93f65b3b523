#include "fpalg/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpalg {

Polynomial Polynomial::from_terms(const Field& f, std::vector<Term> terms) {
  for (const auto& [w, c] : terms) {
    (void)w;
    if (c.field() != f) throw std::invalid_argument("coefficient field mismatch");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return deglex_greater(a.first, b.first);
  });
  Polynomial p(f);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& [w, c] : terms_)
    if (w.degree() != terms_.front().first.degree()) return false;
  return true;
}

const Polynomial::Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::invalid_argument("no leading term");
  return terms_.front();
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) throw std::invalid_argument("no leading term");
  return scaled(terms_.front().second.inverse());
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.field() != field_) throw std::invalid_argument("scalar field mismatch");
  Polynomial p(field_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& [w, a] : terms_) p.terms_.emplace_back(w, a * c);
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(field_);
  p.terms_.reserve(terms_.size());
  for (const auto& [w, a] : terms_) p.terms_.emplace_back(w, -a);
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (field_ != o.field_) throw std::invalid_argument("polynomial field mismatch");
  Polynomial p(field_);
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && deglex_greater(terms_[i].first, o.terms_[j].first))) {
      p.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() ||
               deglex_greater(o.terms_[j].first, terms_[i].first)) {
      p.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].second + o.terms_[j].second;
      if (!s.is_zero()) p.terms_.emplace_back(terms_[i].first, s);
      ++i;
      ++j;
    }
  }
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

bool Polynomial::operator==(const Polynomial& o) const {
  return field_ == o.field_ && terms_ == o.terms_;
}

int Polynomial::cmp(const Polynomial& o) const {
  if (degree() != o.degree()) return degree() < o.degree() ? -1 : 1;
  std::size_t n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = cmp_deglex_ranks(terms_[i].first, o.terms_[i].first);
    if (c != std::strong_ordering::equal)
      return c == std::strong_ordering::less ? -1 : 1;
    int sc = terms_[i].second.cmp(o.terms_[i].second);
    if (sc != 0) return sc;
  }
  if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size() ? -1 : 1;
  return 0;
}

std::string Polynomial::str(const Alphabet& a) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    std::string abs = neg ? cs.substr(1) : cs;
    if (first) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    if (w.is_one()) {
      out += abs;
    } else if (abs == "1") {
      out += w.str(a);
    } else {
      out += abs + "*" + w.str(a);
    }
    first = false;
  }
  return out;
}

Polynomial poly_shift(const Polynomial& f, const Word& u, const Word& v) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& [w, c] : f.terms()) {
    Word uv = u;
    uv.append(w);
    uv.append(v);
    terms.emplace_back(std::move(uv), c);
  }
  // order is preserved under two-sided multiplication; no re-sort needed
  Polynomial p = Polynomial::zero(f.field());
  p = Polynomial::from_terms(f.field(), std::move(terms));
  return p;
}

Polynomial poly_add_scaled(const Polynomial& f, const Scalar& c, const Word& u,
                           const Polynomial& g, const Word& v) {
  if (f.field() != g.field() || c.field() != f.field())
    throw std::invalid_argument("field mismatch");
  return f + poly_shift(g, u, v).scaled(c);
}

std::pair<Word, Scalar> leading_term(const Polynomial& f) { return f.leading_term(); }

Polynomial specialize_mod_p(const Polynomial& f, std::uint32_t p) {
  if (!f.field().is_rational())
    throw std::invalid_argument("specialization applies to rational polynomials");
  Field fp = Field::gf(p);
  std::vector<Polynomial::Term> terms;
  for (const auto& [w, c] : f.terms()) {
    if (!c.is_integer())
      throw std::invalid_argument("non-integer coefficient in specialization");
    terms.emplace_back(w, Scalar::from_integer(fp, c.integer_value()));
  }
  return Polynomial::from_terms(fp, std::move(terms));
}

}  // namespace fpalg
