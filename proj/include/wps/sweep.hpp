#pragma once

#include "wps/abelian.hpp"
#include "wps/cech.hpp"
#include "wps/divisors.hpp"
#include "wps/fan.hpp"
#include "wps/int_types.hpp"
#include "wps/weights.hpp"

#include <atomic>
#include <cstddef>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace wps {

struct SweepOptions {
  int dim = 2;       // n; weight vectors have n+1 entries
  Int max_weight = 6;
  int jobs = 1;
};

struct SweepFailure {
  IntVec weights;
  std::string check;
};

struct SweepResult {
  SweepOptions options;
  long long checked = 0;
  bool all_brauer_trivial = true;
  std::vector<SweepFailure> failures;
};

// Weight vectors with dim+1 entries in [1, max_weight], one representative
// per permutation class (nondecreasing tuples).
inline std::vector<IntVec> enumerate_weight_vectors(int dim, const Int& max_weight) {
  require(dim >= 1, "sweep: dim must be at least 1");
  require(max_weight >= 1, "sweep: max_weight must be at least 1");
  const std::size_t m = static_cast<std::size_t>(dim) + 1;
  std::vector<IntVec> out;
  IntVec cur(m, Int(1));
  for (;;) {
    out.push_back(cur);
    std::size_t i = m;
    while (i > 0 && cur[i - 1] == max_weight) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < m; ++j) cur[j] = cur[i - 1];
  }
  return out;
}

namespace detail {

inline void sweep_one(const IntVec& weights, std::vector<SweepFailure>& failures) {
  WeightVector wv(weights);
  WeightVector reduced = divided_by(wv, wv.gcd());
  Fan fan = build_fan(reduced);
  SpectralPages pages{DoubleComplex(fan)};
  const int n = pages.n();

  if (!pages.e2(0, 1).group.is_trivial())
    failures.push_back({weights, "brauer_nontrivial"});
  for (int p = -1; p <= n - 2; ++p)
    if (!d2_map(pages, p).is_isomorphism)
      failures.push_back({weights, "d2_not_iso_p" + std::to_string(p)});
  for (int q = 0; q <= 1; ++q)
    for (int p = -1; p <= n; ++p)
      if (!row_homology(pages.complex(), q, p).is_trivial())
        failures.push_back({weights, "row_not_exact_q" + std::to_string(q) + "_p" + std::to_string(p)});

  ClassGroupData cl = class_group(fan);
  if (!(cl.group == FgAbelianGroup{1, {}}))
    failures.push_back({weights, "class_group_not_Z"});
  if (satisfies_N(wv)) {
    if (picard_index(fan).index_in_class_group != wv.lcm())
      failures.push_back({weights, "picard_index_not_lcm"});
  }
}

}  // namespace detail

// Sweep the predicate corpus: Brauer vanishing plus the structural checks on
// every enumerated weight vector. Workers process disjoint vectors; results
// are aggregated in enumeration order, so output does not depend on jobs.
inline SweepResult run_sweep(const SweepOptions& opts) {
  require(opts.dim >= 2, "sweep: dim must be at least 2");
  require(opts.jobs >= 1, "sweep: jobs must be at least 1");
  std::vector<IntVec> corpus = enumerate_weight_vectors(opts.dim, opts.max_weight);

  std::vector<std::vector<SweepFailure>> per_vector(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= corpus.size()) return;
      detail::sweep_one(corpus[i], per_vector[i]);
    }
  };
  if (opts.jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < opts.jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SweepResult res;
  res.options = opts;
  res.checked = static_cast<long long>(corpus.size());
  for (auto& fs : per_vector)
    for (auto& f : fs) {
      if (f.check == "brauer_nontrivial") res.all_brauer_trivial = false;
      res.failures.push_back(std::move(f));
    }
  return res;
}

}  // namespace wps
