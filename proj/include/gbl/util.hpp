#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace gbl {

using Index = long long;

// Raised when an enumeration would exceed the desk-scale budget.
struct FeasibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when greedy-set tie expansion exceeds its cap.
struct TieOverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline long long isqrt_floor(long long v) {
  if (v < 0) throw std::invalid_argument("isqrt_floor: negative");
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// Deterministic generator for sample libraries (seeded 0x5EED by convention).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kSampleSeed = 0x5EED;

inline int worker_count() {
  if (const char* env = std::getenv("GBL_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

// Chunked parallel loop with deterministic in-order merge. `eval(i)` must be
// independent of other iterations; `merge` is applied chunk by chunk in index
// order, so the result is identical to the sequential run.
template <class Result, class Eval, class Merge>
void parallel_chunks(std::size_t n, int threads, Result& acc, Eval eval, Merge merge) {
  if (n == 0) return;
  threads = std::max(1, std::min<int>(threads, static_cast<int>(n)));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) merge(acc, eval(i));
    return;
  }
  std::size_t chunk = (n + threads - 1) / threads;
  std::vector<std::vector<decltype(eval(std::size_t{0}))>> partial(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
      for (std::size_t i = lo; i < hi; ++i) partial[t].push_back(eval(i));
    });
  }
  for (auto& th : pool) th.join();
  for (auto& vec : partial)
    for (auto& r : vec) merge(acc, r);
}

// Subsets of `universe` with size 0..max_size, sizes ascending, lexicographic
// within each size. Visitor returns false to stop.
inline void for_each_subset(const std::vector<Index>& universe, int max_size,
                            const std::function<bool(const std::vector<Index>&)>& visit) {
  const int n = static_cast<int>(universe.size());
  max_size = std::min(max_size, n);
  std::vector<Index> current;
  if (!visit(current)) return;
  for (int k = 1; k <= max_size; ++k) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      current.clear();
      for (int i : pick) current.push_back(universe[i]);
      if (!visit(current)) return;
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

inline long double subset_count(long long n, int max_size) {
  long double total = 0, c = 1;
  for (int k = 0; k <= max_size; ++k) {
    total += c;
    if (total > 1e18L) return total;
    c = c * static_cast<long double>(n - k) / static_cast<long double>(k + 1);
    if (k >= n) break;
  }
  return total;
}

inline bool contains_index(const std::vector<Index>& sorted, Index v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

inline std::vector<Index> set_intersection(const std::vector<Index>& a,
                                           const std::vector<Index>& b) {
  std::vector<Index> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<Index> set_union(const std::vector<Index>& a, const std::vector<Index>& b) {
  std::vector<Index> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<Index> set_difference(const std::vector<Index>& a,
                                         const std::vector<Index>& b) {
  std::vector<Index> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool sets_disjoint(const std::vector<Index>& a, const std::vector<Index>& b) {
  return set_intersection(a, b).empty();
}

// "A < B": every element of A below every element of B; vacuous when either is empty.
inline bool set_below(const std::vector<Index>& a, const std::vector<Index>& b) {
  if (a.empty() || b.empty()) return true;
  return a.back() < b.front();
}

// 12-significant-digit rendering used by the CLI and CSV emitters.
std::string format_value(double v);

}  // namespace gbl
