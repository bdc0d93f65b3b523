#pragma once

#include <gmpxx.h>

#include <vector>

namespace fpalg {

/// Per-degree counts a[n] with running sums p[n] = a[0] + ... + a[n].
/// Entries beyond valid_to are not trustworthy (truncation artifacts).
struct CountTable {
  std::vector<mpz_class> a;
  std::vector<mpz_class> p;
  int valid_to = 0;

  static CountTable from_counts(std::vector<mpz_class> counts, int valid_to) {
    CountTable t;
    t.a = std::move(counts);
    t.p.reserve(t.a.size());
    mpz_class run = 0;
    for (const auto& v : t.a) {
      run += v;
      t.p.push_back(run);
    }
    t.valid_to = valid_to;
    return t;
  }
};

}  // namespace fpalg
