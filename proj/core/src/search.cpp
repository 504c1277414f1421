#include "hcms/search.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <thread>
#include <tuple>

#include "hcms/error.hpp"
#include "hcms/sources.hpp"

namespace hcms {

namespace {

constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > saturated / a) return saturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return b > saturated - a ? saturated : a + b;
}

// Walk every RREF basis with the given pivot set: row k has a one at
// pivots[k], zeros at the other pivots and free bits at the non-pivot
// columns to its right.
template <class F>
void for_each_rref(std::size_t n, const std::vector<std::size_t>& pivots, F&& visit) {
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::pair<std::size_t, std::size_t>> free_slots;
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    for (std::size_t c = pivots[k] + 1; c < n; ++c) {
      if (!is_pivot[c]) free_slots.emplace_back(k, c);
    }
  }
  require(free_slots.size() < 64, Errc::budget_exceeded, "too many free entries to enumerate");
  const std::uint64_t count = std::uint64_t{1} << free_slots.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    BitMatrix b(pivots.size(), n);
    for (std::size_t k = 0; k < pivots.size(); ++k) b.set(k, pivots[k]);
    for (std::size_t f = 0; f < free_slots.size(); ++f) {
      if ((bits >> f) & 1U) b.set(free_slots[f].first, free_slots[f].second);
    }
    visit(b);
  }
}

template <class F>
void for_each_pivot_set(std::size_t n, std::size_t d, F&& visit) {
  std::vector<std::size_t> pivots(d);
  for (std::size_t k = 0; k < d; ++k) pivots[k] = k;
  while (true) {
    visit(pivots);
    std::size_t k = d;
    while (k > 0 && pivots[k - 1] == n - d + (k - 1)) --k;
    if (k == 0) return;
    ++pivots[k - 1];
    for (std::size_t j = k; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

}  // namespace

std::uint64_t gaussian_binomial(std::size_t n, std::size_t d) {
  if (d > n) return 0;
  // row-by-row recurrence [n, d] = [n-1, d-1] + 2^d [n-1, d]
  std::vector<std::uint64_t> prev(d + 1, 0), cur(d + 1, 0);
  prev[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    cur[0] = 1;
    for (std::size_t k = 1; k <= std::min(m, d); ++k) {
      const std::uint64_t shifted = k >= 64 ? (prev[k] ? saturated : 0)
                                            : sat_mul(prev[k], std::uint64_t{1} << k);
      cur[k] = sat_add(prev[k - 1], shifted);
    }
    for (std::size_t k = m + 1; k <= d; ++k) cur[k] = 0;
    std::swap(prev, cur);
  }
  return prev[d];
}

bool is_admissible_null_space(const Subspace& space) {
  if (space.dim() > 30) return false;
  for (const auto& v : space.elements()) {
    const auto w = v.weight();
    if (w == 1 || w == 2) return false;
  }
  return true;
}

std::vector<Subspace> admissible_subspaces(std::size_t n, std::size_t d, std::uint64_t budget) {
  require(d <= n, Errc::precondition_violation, "subspace dimension exceeds ambient dimension");
  const auto total = gaussian_binomial(n, d);
  require(total <= budget, Errc::budget_exceeded,
          "enumerating " + std::to_string(total) + " subspaces of dimension " + std::to_string(d) +
              " in GF(2)^" + std::to_string(n) + " exceeds the budget");
  std::vector<Subspace> out;
  if (d == 0) {
    out.push_back(Subspace::zero(n));
    return out;
  }
  for_each_pivot_set(n, d, [&](const std::vector<std::size_t>& pivots) {
    for_each_rref(n, pivots, [&](const BitMatrix& basis) {
      auto space = Subspace::row_space(basis);
      if (is_admissible_null_space(space)) out.push_back(std::move(space));
    });
  });
  return out;
}

SearchResult search_perfect_null_spaces(std::size_t n, std::size_t M, SearchOptions options) {
  require(n >= 1, Errc::precondition_violation, "block length must be positive");
  require(is_perfect_params(3, n, M), Errc::params_not_perfect,
          "2^n (3n + 1) != 2^M for n = " + std::to_string(n) + ", M = " + std::to_string(M));
  require(M <= 3 * n, Errc::precondition_violation, "M exceeds 3n");
  const std::size_t total_dim = 3 * n - M;

  SearchResult result;
  const std::size_t max_d = std::min(n, total_dim);
  std::vector<std::vector<Subspace>> by_dim(max_d + 1);
  std::uint64_t visited = 0;
  for (std::size_t d = 0; d <= max_d; ++d) {
    visited = sat_add(visited, gaussian_binomial(n, d));
    require(visited <= options.budget, Errc::budget_exceeded,
            "subspace enumeration exceeds the search budget");
    by_dim[d] = admissible_subspaces(n, d, options.budget);
    result.stats.admissible_by_dim.push_back(by_dim[d].size());
  }

  std::vector<DimensionAssignment> live;
  for (std::size_t d1 = 0; d1 <= max_d; ++d1) {
    for (std::size_t d2 = 0; d2 <= max_d && d1 + d2 <= total_dim; ++d2) {
      const std::size_t d3 = total_dim - d1 - d2;
      if (d3 > max_d) continue;
      DimensionAssignment a{{d1, d2, d3},
                            !by_dim[d1].empty() && !by_dim[d2].empty() && !by_dim[d3].empty()};
      result.stats.assignments.push_back(a);
      if (a.admissible) live.push_back(a);
    }
  }

  std::uint64_t triples = 0;
  for (const auto& a : live) {
    triples = sat_add(triples, sat_mul(sat_mul(by_dim[a.d[0]].size(), by_dim[a.d[1]].size()),
                                       by_dim[a.d[2]].size()));
  }
  require(triples <= options.budget, Errc::budget_exceeded,
          std::to_string(triples) + " candidate triples exceed the search budget");
  result.stats.triples_tested = triples;

  struct Hit {
    std::size_t assignment, i, j, k;
  };
  const unsigned jobs = std::max(1U, options.jobs);
  std::vector<std::vector<Hit>> hits(jobs);

  // worker w takes the first-terminal indices congruent to w modulo jobs
  auto work = [&](unsigned w) {
    for (std::size_t a = 0; a < live.size(); ++a) {
      const auto& l1 = by_dim[live[a].d[0]];
      const auto& l2 = by_dim[live[a].d[1]];
      const auto& l3 = by_dim[live[a].d[2]];
      for (std::size_t i = w; i < l1.size(); i += jobs) {
        for (std::size_t j = 0; j < l2.size(); ++j) {
          for (std::size_t k = 0; k < l3.size(); ++k) {
            const NullProfile p{{l1[i], l2[j], l3[k]}};
            if (is_compressible(code_from_profile(p))) hits[w].push_back({a, i, j, k});
          }
        }
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  std::vector<Hit> all;
  for (auto& h : hits) all.insert(all.end(), h.begin(), h.end());
  std::sort(all.begin(), all.end(), [](const Hit& x, const Hit& y) {
    return std::tie(x.assignment, x.i, x.j, x.k) < std::tie(y.assignment, y.i, y.j, y.k);
  });
  for (const auto& h : all) {
    result.profiles.push_back(NullProfile{{by_dim[live[h.assignment].d[0]][h.i],
                                           by_dim[live[h.assignment].d[1]][h.j],
                                           by_dim[live[h.assignment].d[2]][h.k]}});
  }
  result.stats.triples_passed = result.profiles.size();
  return result;
}

}  // namespace hcms
