#include "fpalg/groebner.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fpalg {

// ---------------------------------------------------------------------------
// FactorIndex

void FactorIndex::build(const std::vector<Word>& patterns, int alphabet_size) {
  pats_ = patterns;
  letters_ = alphabet_size;
  nodes_.clear();
  nodes_.push_back(Node{std::vector<int>(letters_, 0), 0, -1, -1});

  // trie; 0 is the root and never a child, so 0 marks an unset edge
  for (std::size_t p = 0; p < pats_.size(); ++p) {
    if (pats_[p].is_one())
      throw std::invalid_argument("empty word cannot be a rewrite pattern");
    int cur = 0;
    for (auto r : pats_[p].letters()) {
      if (nodes_[cur].next[r] == 0) {
        nodes_.push_back(Node{std::vector<int>(letters_, 0), 0, -1, -1});
        nodes_[cur].next[r] = static_cast<int>(nodes_.size()) - 1;
      }
      cur = nodes_[cur].next[r];
    }
    if (nodes_[cur].out < 0) nodes_[cur].out = static_cast<int>(p);
  }

  // BFS fail links; convert goto into total transition function
  std::vector<int> queue;
  for (int r = 0; r < letters_; ++r) {
    int v = nodes_[0].next[r];
    if (v != 0) {
      nodes_[v].fail = 0;
      queue.push_back(v);
    }
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    int f = nodes_[u].fail;
    nodes_[u].out_link = nodes_[f].out >= 0 ? f : nodes_[f].out_link;
    for (int r = 0; r < letters_; ++r) {
      int v = nodes_[u].next[r];
      if (v != 0) {
        nodes_[v].fail = nodes_[f].next[r];
        queue.push_back(v);
      } else {
        nodes_[u].next[r] = nodes_[f].next[r];
      }
    }
  }

  // ranks of the distinct pattern words under deglex
  std::vector<Word> distinct = pats_;
  std::sort(distinct.begin(), distinct.end(), deglex_less);
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  word_rank_.assign(pats_.size(), 0);
  for (std::size_t p = 0; p < pats_.size(); ++p) {
    word_rank_[p] = static_cast<int>(
        std::lower_bound(distinct.begin(), distinct.end(), pats_[p], deglex_less) -
        distinct.begin());
  }
}

bool FactorIndex::matches(const Word& w) const {
  if (pats_.empty()) return false;
  int cur = 0;
  for (auto r : w.letters()) {
    cur = nodes_[cur].next[r];
    if (nodes_[cur].out >= 0 || nodes_[cur].out_link >= 0) return true;
  }
  return false;
}

std::optional<FactorIndex::Occurrence> FactorIndex::best_occurrence(const Word& w) const {
  if (pats_.empty()) return std::nullopt;
  Occurrence best;
  int best_rank = -1;
  int cur = 0;
  for (int i = 0; i < w.degree(); ++i) {
    cur = nodes_[cur].next[w[i]];
    for (int n = cur; n >= 0; n = nodes_[n].out_link) {
      int p = nodes_[n].out;
      if (p < 0) continue;
      int len = pats_[p].degree();
      int start = i - len + 1;
      bool better;
      if (best_rank < 0) {
        better = true;
      } else if (word_rank_[p] != best_rank) {
        better = word_rank_[p] < best_rank;
      } else if (start != best.start) {
        better = start < best.start;
      } else {
        better = p < best.pattern;
      }
      if (better) {
        best_rank = word_rank_[p];
        best = {p, start, len};
      }
    }
  }
  if (best_rank < 0) return std::nullopt;
  return best;
}

// ---------------------------------------------------------------------------
// RewriteSet

int RewriteSet::add(Polynomial p) {
  if (p.is_zero() || !p.is_monic())
    throw std::invalid_argument("rewrite elements must be monic and non-zero");
  if (p.field() != field_) throw std::invalid_argument("field mismatch");
  elems_.push_back(std::move(p));
  dirty_ = true;
  return static_cast<int>(elems_.size()) - 1;
}

void RewriteSet::replace(int i, Polynomial p) {
  if (p.leading_word() != elems_.at(i).leading_word())
    throw std::invalid_argument("replace must preserve the leading word");
  elems_[i] = std::move(p);
  // leading words unchanged; the index stays valid
}

void RewriteSet::remove(int i) {
  elems_.erase(elems_.begin() + i);
  dirty_ = true;
}

const FactorIndex& RewriteSet::index() const {
  if (dirty_) {
    std::vector<Word> leads;
    leads.reserve(elems_.size());
    for (const auto& e : elems_) leads.push_back(e.leading_word());
    index_.build(leads, letters_);
    dirty_ = false;
  }
  return index_;
}

// ---------------------------------------------------------------------------
// Overlaps and reduction

namespace {

void append_overlaps_ordered(const RewriteSet& rs, int li, int ri,
                             std::vector<Overlap>& out) {
  const Word& l = rs.leading(li);
  const Word& r = rs.leading(ri);
  int maxc = std::min(l.degree(), r.degree()) - 1;
  for (int c = 1; c <= maxc; ++c) {
    bool match = true;
    for (int k = 0; k < c && match; ++k)
      match = l[l.degree() - c + k] == r[k];
    if (!match) continue;
    Word amb = l;
    amb.append(r.suffix_from(c));
    out.push_back({li, ri, l.degree() - c, std::move(amb)});
  }
}

void append_containments(const RewriteSet& rs, int outer, int inner,
                         std::vector<Overlap>& out) {
  const Word& l = rs.leading(outer);
  const Word& r = rs.leading(inner);
  if (r.degree() >= l.degree()) return;
  for (int pos = 0; pos + r.degree() <= l.degree(); ++pos) {
    bool match = true;
    for (int k = 0; k < r.degree() && match; ++k) match = l[pos + k] == r[k];
    if (match) out.push_back({outer, inner, pos, l});
  }
}

}  // namespace

std::vector<Overlap> find_overlaps(const RewriteSet& rs, int new_index) {
  std::vector<Overlap> out;
  for (int j = 0; j < rs.size(); ++j) {
    append_overlaps_ordered(rs, new_index, j, out);
    if (j != new_index) {
      append_overlaps_ordered(rs, j, new_index, out);
      append_containments(rs, new_index, j, out);
      append_containments(rs, j, new_index, out);
    }
  }
  return out;
}

Polynomial overlap_spolynomial(const Overlap& o, const RewriteSet& rs) {
  const Polynomial& fl = rs.element(o.left);
  const Polynomial& fr = rs.element(o.right);
  const Word& amb = o.ambiguity;
  int ll = fl.leading_word().degree();
  int lr = fr.leading_word().degree();
  Word tail_l = amb.suffix_from(ll);                      // after the left word
  Word pre_r = amb.prefix(o.offset_right);                // before the right word
  Word tail_r = amb.suffix_from(o.offset_right + lr);     // after the right word
  return poly_shift(fl, Word::one(), tail_l) - poly_shift(fr, pre_r, tail_r);
}

Polynomial normal_form(const Polynomial& f, const RewriteSet& rs) {
  if (rs.size() == 0 || f.is_zero()) return f;
  const FactorIndex& idx = rs.index();

  std::vector<Polynomial::Term> done;  // irreducible, descending
  std::vector<Polynomial::Term> work(f.terms().begin(), f.terms().end());
  std::size_t h = 0;  // head of the pending range
  while (h < work.size()) {
    const Word& w = work[h].first;
    auto occ = idx.best_occurrence(w);
    if (!occ) {
      done.push_back(work[h]);
      ++h;
      continue;
    }
    const Polynomial& g = rs.element(occ->pattern);
    Scalar c = work[h].second;
    Word u = w.prefix(occ->start);
    Word v = w.suffix_from(occ->start + occ->length);

    // replace c*w by -c * u * (g - lead(g)) * v, merged into the pending tail
    std::vector<Polynomial::Term> repl;
    repl.reserve(g.terms().size() - 1);
    for (std::size_t t = 1; t < g.terms().size(); ++t) {
      Word uwv = u;
      uwv.append(g.terms()[t].first);
      uwv.append(v);
      repl.emplace_back(std::move(uwv), -(c * g.terms()[t].second));
    }
    std::vector<Polynomial::Term> merged;
    merged.reserve(work.size() - h - 1 + repl.size());
    std::size_t i = h + 1, j = 0;
    while (i < work.size() || j < repl.size()) {
      if (j == repl.size() ||
          (i < work.size() && deglex_greater(work[i].first, repl[j].first))) {
        merged.push_back(std::move(work[i++]));
      } else if (i == work.size() ||
                 deglex_greater(repl[j].first, work[i].first)) {
        merged.push_back(std::move(repl[j++]));
      } else {
        Scalar s = work[i].second + repl[j].second;
        if (!s.is_zero()) merged.emplace_back(work[i].first, s);
        ++i;
        ++j;
      }
    }
    work = std::move(merged);
    h = 0;
  }

  return Polynomial::from_terms(f.field(), std::move(done));
}

// ---------------------------------------------------------------------------
// Inter-reduction

namespace {

RewriteSet without_element(const RewriteSet& rs, int skip) {
  RewriteSet out(rs.field(), rs.alphabet_size());
  for (int i = 0; i < rs.size(); ++i)
    if (i != skip) out.add(rs.element(i));
  return out;
}

void sort_canonical(std::vector<Polynomial>& elems) {
  std::sort(elems.begin(), elems.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.cmp(b) < 0; });
}

}  // namespace

RewriteSet interreduce(const RewriteSet& rs) {
  std::vector<Polynomial> elems;
  elems.reserve(rs.size());
  for (const auto& e : rs.elements()) {
    if (e.is_zero()) continue;
    elems.push_back(e.monic());
  }
  sort_canonical(elems);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      RewriteSet others(rs.field(), rs.alphabet_size());
      for (std::size_t j = 0; j < elems.size(); ++j)
        if (j != i) others.add(elems[j]);
      Polynomial nf = normal_form(elems[i], others);
      if (nf == elems[i]) continue;
      changed = true;
      if (nf.is_zero()) {
        elems.erase(elems.begin() + i);
      } else {
        elems[i] = nf.monic();
      }
      sort_canonical(elems);
      break;
    }
  }

  RewriteSet out(rs.field(), rs.alphabet_size());
  for (auto& e : elems) out.add(std::move(e));
  return out;
}

// ---------------------------------------------------------------------------
// Truncated completion

int TruncatedGB::max_element_degree() const {
  int d = 0;
  for (const auto& e : basis.elements()) d = std::max(d, e.degree());
  return d;
}

namespace {

struct AmbKey {
  int degree;
  Word ambiguity;
  int left, right, offset;

  bool operator<(const AmbKey& o) const {
    if (degree != o.degree) return degree < o.degree;
    auto c = cmp_deglex_ranks(ambiguity, o.ambiguity);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    if (left != o.left) return left < o.left;
    if (right != o.right) return right < o.right;
    return offset < o.offset;
  }
};

}  // namespace

TruncatedGB buchberger_truncated(const Presentation& p, int degree_bound) {
  for (const auto& r : p.relations) {
    if (r.is_zero() || !r.is_homogeneous() || r.degree() < 2)
      throw std::invalid_argument(
          "relations must be non-zero, homogeneous and of degree >= 2");
  }
  if (degree_bound < p.max_relation_degree())
    throw std::invalid_argument("degree bound below the largest relation degree");

  // input relations grouped by degree, in canonical order
  std::map<int, std::vector<Polynomial>> pending;
  for (const auto& r : canonical_relations(p)) pending[r.degree()].push_back(r.monic());

  TruncatedGB gb{RewriteSet(p.field, p.alphabet.size()), degree_bound, false, {}};
  RewriteSet& rs = gb.basis;

  std::map<AmbKey, Overlap> queue;
  auto enqueue_for = [&](int idx) {
    for (auto& o : find_overlaps(rs, idx)) {
      if (o.degree() > degree_bound) continue;
      AmbKey key{o.degree(), o.ambiguity, o.left, o.right, o.offset_right};
      queue.emplace(std::move(key), std::move(o));
    }
  };

  auto insert_element = [&](const Polynomial& cand) {
    Polynomial nf = normal_form(cand, rs);
    if (nf.is_zero()) return;
    int idx = rs.add(nf.monic());
    enqueue_for(idx);
  };

  for (int d = 2; d <= degree_bound; ++d) {
    if (auto it = pending.find(d); it != pending.end())
      for (const auto& r : it->second) insert_element(r);

    while (!queue.empty() && queue.begin()->first.degree == d) {
      Overlap o = queue.begin()->second;
      queue.erase(queue.begin());
      insert_element(overlap_spolynomial(o, rs));
    }

    // freeze degree d: reduce tails of degree-d elements against everything
    for (int i = 0; i < rs.size(); ++i) {
      if (rs.element(i).degree() != d) continue;
      const Polynomial& e = rs.element(i);
      Polynomial lead = Polynomial::from_terms(p.field, {e.terms().front()});
      Polynomial tail = e - lead;
      Polynomial red = normal_form(tail, rs);
      if (!(red == tail)) rs.replace(i, lead + red);
    }
  }

  // canonical element order
  {
    std::vector<Polynomial> elems = rs.elements();
    sort_canonical(elems);
    RewriteSet sorted(p.field, p.alphabet.size());
    for (auto& e : elems) sorted.add(std::move(e));
    gb.basis = std::move(sorted);
  }

  for (const auto& e : gb.basis.elements()) gb.leading_words.push_back(e.leading_word());
  int maxdeg = gb.max_element_degree();
  gb.complete = gb.basis.size() == 0 || 2 * maxdeg - 1 <= degree_bound;
  return gb;
}

bool ideal_member_up_to(const Polynomial& f, const TruncatedGB& gb) {
  if (!f.is_homogeneous())
    throw std::invalid_argument("membership test requires a homogeneous element");
  if (f.degree() > gb.degree_bound)
    throw std::invalid_argument("degree exceeds the truncation bound");
  return normal_form(f, gb.basis).is_zero();
}

}  // namespace fpalg
