#include "fpalg/automaton.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace fpalg {

namespace {

struct Nfa {
  int letters;
  std::vector<std::vector<std::vector<int>>> next;  // [state][letter] -> targets
  std::vector<char> accepting;

  int add_state() {
    next.emplace_back(letters);
    accepting.push_back(0);
    return static_cast<int>(next.size()) - 1;
  }
  void add_edge(int from, int letter, int to) { next[from][letter].push_back(to); }
};

Nfa build_contains_nfa(const std::vector<FactorPattern>& patterns, int letters) {
  Nfa nfa{letters, {}, {}};
  int start = nfa.add_state();
  for (int c = 0; c < letters; ++c) nfa.add_edge(start, c, start);

  for (const auto& pat : patterns) {
    int cur = start;
    for (const auto& atom : pat.atoms) {
      if (!atom.starred) {
        for (int i = 0; i < atom.word.degree(); ++i) {
          int nxt = nfa.add_state();
          nfa.add_edge(cur, atom.word[i], nxt);
          cur = nxt;
        }
      } else if (atom.word.degree() == 1) {
        nfa.add_edge(cur, atom.word[0], cur);
      } else {
        // cycle through fresh states back to cur
        int prev = cur;
        for (int i = 0; i + 1 < atom.word.degree(); ++i) {
          int nxt = nfa.add_state();
          nfa.add_edge(prev, atom.word[i], nxt);
          prev = nxt;
        }
        nfa.add_edge(prev, atom.word[atom.word.degree() - 1], cur);
      }
    }
    nfa.accepting[cur] = 1;
    for (int c = 0; c < letters; ++c) nfa.add_edge(cur, c, cur);
  }
  return nfa;
}

}  // namespace

Dfa compile_forbidden(const std::vector<FactorPattern>& patterns, const Alphabet& a) {
  if (a.size() == 0) throw std::invalid_argument("empty alphabet");
  int letters = a.size();
  for (const auto& p : patterns)
    for (const auto& atom : p.atoms)
      for (auto r : atom.word.letters())
        if (r >= letters) throw std::invalid_argument("pattern letter outside alphabet");

  // A pattern whose stars can all collapse has the empty word as an
  // instance; every word contains it, so nothing is accepted.
  for (const auto& p : patterns) {
    if (p.min_degree() == 0) {
      Dfa none;
      none.letters = letters;
      none.start = 0;
      none.dead = 0;
      none.next = {std::vector<int>(letters, 0)};
      none.accepting = {0};
      return none;
    }
  }

  Nfa nfa = build_contains_nfa(patterns, letters);

  Dfa dfa;
  dfa.letters = letters;

  // Subset construction. Any subset containing an NFA accepting state is
  // absorbing (accepting states carry full self-loops), so all such subsets
  // collapse into one dead state of the complement.
  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> subsets;
  auto intern = [&](std::vector<int> s) -> int {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(subsets.size());
    ids.emplace(s, id);
    subsets.push_back(std::move(s));
    dfa.next.emplace_back(letters, -1);
    dfa.accepting.push_back(1);
    return id;
  };

  int start_id = intern({0});
  dfa.start = start_id;

  for (std::size_t q = 0; q < subsets.size(); ++q) {
    if (static_cast<int>(q) == dfa.dead) continue;
    for (int c = 0; c < letters; ++c) {
      std::set<int> tgt;
      bool hit_accept = false;
      for (int s : subsets[q]) {
        for (int t : nfa.next[s][c]) {
          if (nfa.accepting[t]) hit_accept = true;
          tgt.insert(t);
        }
      }
      int id;
      if (hit_accept) {
        if (dfa.dead < 0) {
          dfa.dead = static_cast<int>(dfa.next.size());
          dfa.next.emplace_back(letters, dfa.dead);
          dfa.accepting.push_back(0);
          subsets.emplace_back();  // placeholder so indices stay aligned
        }
        id = dfa.dead;
      } else {
        id = intern(std::vector<int>(tgt.begin(), tgt.end()));
      }
      dfa.next[q][c] = id;
    }
  }

  return dfa;
}

Dfa compile_forbidden_words(const std::vector<Word>& words, const Alphabet& a) {
  std::vector<FactorPattern> pats;
  pats.reserve(words.size());
  for (const auto& w : words) pats.push_back(FactorPattern::literal(w));
  return compile_forbidden(pats, a);
}

CountTable count_by_degree(const Dfa& dfa, int N) {
  std::vector<mpz_class> cnt(dfa.states(), 0);
  cnt[dfa.start] = 1;
  std::vector<mpz_class> a;
  a.reserve(N + 1);
  auto total = [&]() {
    mpz_class t = 0;
    for (int s = 0; s < dfa.states(); ++s)
      if (dfa.accepting[s]) t += cnt[s];
    return t;
  };
  a.push_back(total());
  for (int n = 1; n <= N; ++n) {
    std::vector<mpz_class> nxt(dfa.states(), 0);
    for (int s = 0; s < dfa.states(); ++s) {
      if (cnt[s] == 0) continue;
      for (int c = 0; c < dfa.letters; ++c) nxt[dfa.next[s][c]] += cnt[s];
    }
    cnt = std::move(nxt);
    a.push_back(total());
  }
  return CountTable::from_counts(std::move(a), N);
}

namespace {

using QPoly = std::vector<mpq_class>;  // ascending coefficients

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  QPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void qp_sub_scaled(QPoly& a, const QPoly& b, const mpq_class& f) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= f * b[i];
}

/// Characteristic polynomial det(lambda*I - M) of an exact rational matrix:
/// similarity reduction to upper Hessenberg form, then the leading principal
/// minor recurrence. Coefficients ascending, monic of degree s.
QPoly charpoly(std::vector<std::vector<mpq_class>> h) {
  int s = static_cast<int>(h.size());
  for (int k = 0; k + 2 < s; ++k) {
    int piv = -1;
    for (int r = k + 1; r < s; ++r)
      if (h[r][k] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != k + 1) {
      std::swap(h[piv], h[k + 1]);
      for (int r = 0; r < s; ++r) std::swap(h[r][piv], h[r][k + 1]);
    }
    for (int i = k + 2; i < s; ++i) {
      if (h[i][k] == 0) continue;
      mpq_class f = h[i][k] / h[k + 1][k];
      for (int c = 0; c < s; ++c) h[i][c] -= f * h[k + 1][c];
      for (int r = 0; r < s; ++r) h[r][k + 1] += f * h[r][i];
    }
  }

  std::vector<QPoly> p(s + 1);
  p[0] = {1};
  for (int k = 1; k <= s; ++k) {
    QPoly t = qp_mul({-h[k - 1][k - 1], 1}, p[k - 1]);
    mpq_class prod = 1;
    for (int m = 1; m < k; ++m) {
      prod *= h[k - m][k - m - 1];
      if (prod == 0) break;
      qp_sub_scaled(t, p[k - m - 1], h[k - m - 1][k - 1] * prod);
    }
    p[k] = std::move(t);
  }
  return p[s];
}

}  // namespace

RationalSeries series_from_dfa(const Dfa& dfa) {
  // restrict the transfer matrix to live states
  std::vector<int> live_id(dfa.states(), -1);
  std::vector<int> live;
  for (int s = 0; s < dfa.states(); ++s)
    if (s != dfa.dead) {
      live_id[s] = static_cast<int>(live.size());
      live.push_back(s);
    }
  int s = static_cast<int>(live.size());

  if (live_id[dfa.start] < 0) {
    RationalSeries zero;
    zero.num = {0};
    zero.den = {1};
    return zero;
  }

  std::vector<std::vector<mpq_class>> m(s, std::vector<mpq_class>(s, 0));
  for (int i = 0; i < s; ++i)
    for (int c = 0; c < dfa.letters; ++c) {
      int t = dfa.next[live[i]][c];
      if (live_id[t] >= 0) m[i][live_id[t]] += 1;
    }

  QPoly cp = charpoly(m);
  std::vector<mpz_class> den(s + 1);
  for (int k = 0; k <= s; ++k) {
    const mpq_class& q = cp[s - k];
    if (q.get_den() != 1) throw std::logic_error("non-integer characteristic coefficient");
    den[k] = q.get_num();
  }
  if (den[0] != 1) throw std::logic_error("denominator constant term is not 1");

  int verify_to = 2 * dfa.states() + 5;
  CountTable counts = count_by_degree(dfa, verify_to);

  // num = den * series; all terms of degree >= s must vanish
  std::vector<mpz_class> num(verify_to + 1, 0);
  for (int n = 0; n <= verify_to; ++n) {
    mpz_class v = counts.a[n];
    for (int i = 1; i <= std::min<int>(n, s); ++i) v += den[i] * counts.a[n - i];
    num[n] = v;
    if (n >= s && v != 0)
      throw std::logic_error("transfer-matrix recurrence check failed");
  }
  num.resize(s);
  while (num.size() > 1 && num.back() == 0) num.pop_back();
  while (den.size() > 1 && den.back() == 0) den.pop_back();

  return RationalSeries(std::move(num), std::move(den));
}

}  // namespace fpalg
