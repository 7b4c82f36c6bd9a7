#include "knotforge/grid_homology.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "knotforge/error.hpp"
#include "knotforge/f2_matrix.hpp"

namespace knotforge {

void BigradedRanks::add(int m, int a, std::uint64_t rank) {
  if (rank == 0) return;
  ranks_[{m, a}] += rank;
}

std::uint64_t BigradedRanks::rank(int m, int a) const {
  const auto it = ranks_.find({m, a});
  return it == ranks_.end() ? 0 : it->second;
}

std::uint64_t BigradedRanks::total() const {
  std::uint64_t sum = 0;
  for (const auto& [k, r] : ranks_) sum += r;
  return sum;
}

std::uint64_t BigradedRanks::total_at_alexander(int a) const {
  std::uint64_t sum = 0;
  for (const auto& [k, r] : ranks_) sum += k.second == a ? r : 0;
  return sum;
}

namespace {

template <typename F>
int extreme(const std::map<BigradedRanks::Key, std::uint64_t>& m, F pick) {
  if (m.empty()) raise(ErrorCode::EmptyRanks, "rank table is empty");
  int best = pick(m.begin()->first);
  for (const auto& [k, r] : m) best = std::max(best, pick(k));
  return best;
}

}  // namespace

int BigradedRanks::max_alexander() const {
  return extreme(ranks_, [](const Key& k) { return k.second; });
}
int BigradedRanks::min_alexander() const {
  return -extreme(ranks_, [](const Key& k) { return -k.second; });
}
int BigradedRanks::max_maslov() const {
  return extreme(ranks_, [](const Key& k) { return k.first; });
}
int BigradedRanks::min_maslov() const {
  return -extreme(ranks_, [](const Key& k) { return -k.first; });
}

std::uint64_t factorial(std::size_t n) {
  if (n > 20) raise(ErrorCode::Overflow, "factorial of more than 20");
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

std::uint64_t estimate_memory_bytes(std::size_t n) {
  // Per state: two gradings (int16), bucket order and local index (uint32),
  // plus differential columns of about n entries held for two blocks.
  const std::uint64_t states = factorial(n);
  return states * (12 + 8 * n) + (std::uint64_t{16} << 20);
}

namespace {

using Perm = std::vector<int>;

class Ranker {
 public:
  explicit Ranker(std::size_t n) : n_(n), fact_(n + 1) {
    for (std::size_t k = 0; k <= n; ++k) fact_[k] = factorial(k);
  }

  std::uint32_t rank(const Perm& p) const {
    std::uint64_t r = 0;
    std::uint32_t used = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      const auto v = static_cast<std::uint32_t>(p[k]);
      const auto smaller_unused = v - static_cast<std::uint32_t>(std::popcount(used & ((1u << v) - 1)));
      r += smaller_unused * fact_[n_ - 1 - k];
      used |= 1u << v;
    }
    return static_cast<std::uint32_t>(r);
  }

  Perm unrank(std::uint64_t r) const {
    Perm p(n_);
    std::vector<int> pool(n_);
    for (std::size_t k = 0; k < n_; ++k) pool[k] = static_cast<int>(k);
    for (std::size_t k = 0; k < n_; ++k) {
      const auto f = fact_[n_ - 1 - k];
      const auto idx = static_cast<std::size_t>(r / f);
      r %= f;
      p[k] = pool[idx];
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return p;
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> fact_;
};

// Counting tables for the grading formulas. ne[k][row] counts markings with
// column >= k and row >= row (state point (k, row) lies south-west of them);
// sw[k][row] counts markings with column < k and row < row.
struct MarkingTables {
  std::vector<std::vector<int>> ne;
  std::vector<std::vector<int>> sw;
  long self = 0;

  MarkingTables(const std::vector<int>& cols) {
    const auto n = cols.size();
    ne.assign(n, std::vector<int>(n, 0));
    sw.assign(n, std::vector<int>(n, 0));
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t r = 0; r < n; ++r) {
          const auto c = static_cast<std::size_t>(cols[r]);
          if (c >= k && r >= row) ++ne[k][row];
          if (c < k && r < row) ++sw[k][row];
        }
      }
    }
    for (std::size_t r1 = 0; r1 < n; ++r1) {
      for (std::size_t r2 = 0; r2 < n; ++r2) self += (cols[r1] < cols[r2] && r1 < r2) ? 1 : 0;
    }
  }

  long cross(const Perm& s) const {
    long sum = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      const auto row = static_cast<std::size_t>(s[k]);
      sum += ne[k][row] + sw[k][row];
    }
    return sum;
  }
};

long state_self(const Perm& s) {
  long count = 0;
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) count += s[a] < s[b] ? 1 : 0;
  }
  return count;
}

template <typename Task>
void run_parallel(std::size_t tasks, unsigned threads, Task task) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks)));
  std::vector<std::exception_ptr> errors(tasks);
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (std::size_t t = next++; t < tasks; t = next++) {
      try {
        task(t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

BigradedRanks tilde_homology(const GridDiagram& grid, const HomologyLimits& limits, ComplexStats* stats) {
  const GridDiagram g = validate_grid(grid);
  const std::size_t n = g.size();
  const std::uint64_t states = factorial(n);
  if (states > limits.max_states) {
    raise(ErrorCode::TooLarge, "grid of size " + std::to_string(n) + " has " + std::to_string(states) +
                                   " states; max_states is " + std::to_string(limits.max_states));
  }
  const std::uint64_t need = estimate_memory_bytes(n);
  if (need > limits.max_memory_bytes) {
    raise(ErrorCode::TooLarge, "grid of size " + std::to_string(n) + " needs about " + std::to_string(need) +
                                   " bytes; budget is " + std::to_string(limits.max_memory_bytes));
  }
  const unsigned threads = limits.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : limits.threads;

  const Ranker ranker(n);
  const MarkingTables o_tab(g.o);
  const MarkingTables x_tab(g.x);

  // Gradings of every state, in lexicographic order.
  std::vector<std::int16_t> maslov(states);
  std::vector<std::int16_t> twice_alex(states);
  const std::uint64_t chunk = std::max<std::uint64_t>(1, states / (8 * threads) + 1);
  const std::size_t chunks = static_cast<std::size_t>((states + chunk - 1) / chunk);
  run_parallel(chunks, threads, [&](std::size_t c) {
    const std::uint64_t begin = c * chunk;
    const std::uint64_t end = std::min(states, begin + chunk);
    Perm p = ranker.unrank(begin);
    for (std::uint64_t r = begin; r < end; ++r) {
      const long self = state_self(p);
      const long mo = self - o_tab.cross(p) + o_tab.self + 1;
      const long mx = self - x_tab.cross(p) + x_tab.self + 1;
      const long ta = mo - mx - static_cast<long>(n - 1);
      if (ta % 2 != 0) raise(ErrorCode::Internal, "half-integral Alexander grading on a knot grid");
      maslov[r] = static_cast<std::int16_t>(mo);
      twice_alex[r] = static_cast<std::int16_t>(ta);
      std::next_permutation(p.begin(), p.end());
    }
  });

  // Buckets by (A, M); states keep lexicographic order inside a bucket.
  std::map<std::pair<int, int>, std::size_t> bucket_of;
  for (std::uint64_t r = 0; r < states; ++r) bucket_of.try_emplace({twice_alex[r] / 2, maslov[r]}, 0);
  std::vector<std::pair<int, int>> keys;
  for (auto& [k, id] : bucket_of) {
    id = keys.size();
    keys.push_back(k);
  }
  std::vector<std::uint64_t> offset(keys.size() + 1, 0);
  std::vector<std::uint32_t> local(states);
  for (std::uint64_t r = 0; r < states; ++r) {
    const auto id = bucket_of.at({twice_alex[r] / 2, maslov[r]});
    local[r] = static_cast<std::uint32_t>(offset[id + 1]++);
  }
  for (std::size_t b = 0; b < keys.size(); ++b) offset[b + 1] += offset[b];
  std::vector<std::uint32_t> order(states);
  {
    std::vector<std::uint64_t> fill(offset.begin(), offset.end() - 1);
    for (std::uint64_t r = 0; r < states; ++r) {
      const auto id = bucket_of.at({twice_alex[r] / 2, maslov[r]});
      order[fill[id]++] = static_cast<std::uint32_t>(r);
    }
  }

  // Row of the X / O marking in each column.
  std::vector<int> x_row(n), o_row(n);
  for (std::size_t r = 0; r < n; ++r) {
    x_row[static_cast<std::size_t>(g.x[r])] = static_cast<int>(r);
    o_row[static_cast<std::size_t>(g.o[r])] = static_cast<int>(r);
  }
  const int ni = static_cast<int>(n);
  auto rel = [ni](int row, int base) { return ((row - base) % ni + ni) % ni; };

  // Differential out of one state: targets of empty rectangles, mod 2.
  auto boundary = [&](std::uint32_t src, std::vector<std::uint32_t>& out) {
    out.clear();
    Perm x = ranker.unrank(src);
    for (int i = 0; i < ni; ++i) {
      const int base = x[static_cast<std::size_t>(i)];
      int ceiling = ni;
      for (int d = 1; d < ni && ceiling > 0; ++d) {
        const auto prev = static_cast<std::size_t>((i + d - 1) % ni);
        ceiling = std::min({ceiling, rel(x_row[prev], base), rel(o_row[prev], base)});
        const auto j = static_cast<std::size_t>((i + d) % ni);
        const int h = rel(x[j], base);
        if (h <= ceiling) {
          std::swap(x[static_cast<std::size_t>(i)], x[j]);
          out.push_back(ranker.rank(x));
          std::swap(x[static_cast<std::size_t>(i)], x[j]);
        }
        ceiling = std::min(ceiling, h);
      }
    }
    std::sort(out.begin(), out.end());
    std::size_t w = 0;
    for (std::size_t k = 0; k < out.size();) {
      if (k + 1 < out.size() && out[k] == out[k + 1]) {
        k += 2;
      } else {
        out[w++] = out[k++];
      }
    }
    out.resize(w);
  };

  // Group buckets by Alexander grading; each group is one task.
  std::vector<std::vector<std::size_t>> levels;
  for (std::size_t b = 0; b < keys.size(); ++b) {
    if (b == 0 || keys[b].first != keys[b - 1].first) levels.emplace_back();
    levels.back().push_back(b);
  }
  std::vector<std::uint64_t> block_rank(keys.size(), 0);
  std::vector<std::uint64_t> entries(levels.size(), 0);

  run_parallel(levels.size(), threads, [&](std::size_t level) {
    const auto& ids = levels[level];
    F2SparseMatrix prev;
    bool have_prev = false;
    std::vector<std::uint32_t> targets;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      const std::size_t id = ids[k];
      const auto [a, m] = keys[id];
      const bool has_lower = k > 0 && keys[ids[k - 1]].second == m - 1;
      const std::size_t lower_rows = has_lower ? offset[ids[k - 1] + 1] - offset[ids[k - 1]] : 0;
      std::vector<F2SparseMatrix::Column> cols;
      cols.reserve(offset[id + 1] - offset[id]);
      for (std::uint64_t s = offset[id]; s < offset[id + 1]; ++s) {
        boundary(order[s], targets);
        F2SparseMatrix::Column col;
        col.reserve(targets.size());
        for (const auto t : targets) {
          if (maslov[t] != m - 1 || twice_alex[t] / 2 != a) {
            raise(ErrorCode::Internal, "differential does not preserve A or lower M by one");
          }
          col.push_back(local[t]);
        }
        std::sort(col.begin(), col.end());
        entries[level] += col.size();
        cols.push_back(std::move(col));
      }
      F2SparseMatrix d(lower_rows, std::move(cols));
      block_rank[id] = f2_rank(d);
      if (limits.check_d_squared && have_prev && has_lower && f2_multiply(prev, d).nonzeros() != 0) {
        raise(ErrorCode::Internal, "d^2 != 0 at A = " + std::to_string(a) + ", M = " + std::to_string(m));
      }
      prev = std::move(d);
      have_prev = true;
    }
  });

  BigradedRanks out;
  for (std::size_t id = 0; id < keys.size(); ++id) {
    const auto [a, m] = keys[id];
    const std::uint64_t dim = offset[id + 1] - offset[id];
    std::uint64_t rank_in = 0;
    if (id + 1 < keys.size() && keys[id + 1] == std::make_pair(a, m + 1)) rank_in = block_rank[id + 1];
    out.add(m, a, dim - block_rank[id] - rank_in);
  }
  if (stats != nullptr) {
    stats->states = states;
    stats->blocks = keys.size();
    stats->differential_entries = 0;
    for (const auto e : entries) stats->differential_entries += e;
  }
  return out;
}

BigradedRanks hat_ranks(const BigradedRanks& tilde, std::size_t n) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "grid size must be positive");
  // Signed working copy keyed by (M, A).
  std::map<std::pair<int, int>, std::int64_t> cur;
  for (const auto& [k, r] : tilde.entries()) cur[k] = static_cast<std::int64_t>(r);
  for (std::size_t step = 1; step < n; ++step) {
    // Per diagonal M - A, from the top: h(M, A) = t(M, A) - h(M + 1, A + 1).
    std::map<int, std::vector<std::pair<int, std::int64_t>>> diagonals;
    for (const auto& [k, r] : cur) diagonals[k.first - k.second].emplace_back(k.second, r);
    std::map<std::pair<int, int>, std::int64_t> next;
    for (auto& [diag, items] : diagonals) {
      std::sort(items.begin(), items.end());
      const int top = items.back().first;
      const int bottom = items.front().first;
      std::map<int, std::int64_t> t(items.begin(), items.end());
      std::int64_t above = 0;
      for (int a = top; a >= bottom; --a) {
        const auto it = t.find(a);
        const std::int64_t h = (it == t.end() ? 0 : it->second) - above;
        if (h < 0) raise(ErrorCode::NotDivisible, "negative quotient coefficient");
        if (a == bottom && h != 0) raise(ErrorCode::NotDivisible, "nonzero remainder on diagonal " + std::to_string(diag));
        if (h != 0) next[{diag + a, a}] = h;
        above = h;
      }
    }
    cur = std::move(next);
  }
  BigradedRanks out;
  for (const auto& [k, r] : cur) out.add(k.first, k.second, static_cast<std::uint64_t>(r));
  return out;
}

GenusEuler genus_and_euler(const BigradedRanks& hat) {
  if (hat.empty()) raise(ErrorCode::EmptyRanks, "rank table is empty");
  std::vector<std::pair<int, LaurentPoly::Coeff>> terms;
  for (const auto& [k, r] : hat.entries()) {
    const auto c = static_cast<LaurentPoly::Coeff>(r);
    terms.emplace_back(k.second, (k.first % 2 == 0) ? c : -c);
  }
  LaurentPoly euler = LaurentPoly::from_terms(terms);
  if (euler.value_at_one() < 0) euler = -euler;
  return GenusEuler{hat.max_alexander(), euler};
}

}  // namespace knotforge
