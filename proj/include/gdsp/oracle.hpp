#pragma once

// Exhaustive search over linear storage codes for tiny instances.
//
// For each subpacketization F = 1..max_F the search walks per-vertex storage
// profiles (row counts) in nondecreasing total. A profile survives only if
// every vertex subset S holds at least F times the number of files demanded
// entirely inside S; that condition is necessary for any code. Surviving
// profiles are realized by a depth-first search over per-vertex subspaces in
// reduced row echelon form, which removes the GL(m_u, q) redundancy of each
// vertex's encoding matrix. The first vertex is further restricted to orbit
// representatives under the block-diagonal group that acts on each file's
// symbols independently; that group preserves every decoding condition.
//
// Connected components are searched separately and files not demanded in a
// component are dropped from it, both without loss of optimality.

#include "gdsp/covering_lp.hpp"
#include "gdsp/linear_code.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gdsp {

struct OracleConfig {
  int max_F = 2;
  int q = 5;
  std::optional<Rational> budget_cap;  // ignore totals above this
  double time_cap_seconds = 120.0;
  // Size guard: largest component's K * (files * max_F) * log2(q).
  double complexity_budget = 120.0;

  void validate() const {
    if (max_F < 1) throw Error("oracle max_F must be >= 1");
    if (!is_prime(q)) throw Error("oracle field order must be prime");
    if (q > 31) throw Error("oracle field order must be <= 31");
  }
};

// A demand: the listed vertices must jointly decode `file`.
struct Demand {
  std::vector<Vertex> vertices;
  Color file = 1;
};

struct OracleResult {
  Rational total;
  std::optional<LinearCode> witness;
  int symbols_per_file = 1;
  bool complete = true;  // search finished for every F <= max_F
  bool exact = false;    // total meets the cut-set lower bound
  Rational lower_bound;
  std::string note;
};

namespace detail::oracle {

constexpr int kMaxCols = 16;
using SmallRow = std::array<std::uint8_t, kMaxCols>;
using SmallSpace = std::vector<SmallRow>;

struct Field {
  int q;
  std::array<std::array<std::uint8_t, 32>, 32> mul{};
  std::array<std::uint8_t, 32> inv{};
  std::uint8_t primitive = 1;

  explicit Field(int order) : q(order) {
    PrimeField f(order);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) mul[a][b] = static_cast<std::uint8_t>((a * b) % q);
    for (int a = 1; a < q; ++a) inv[a] = static_cast<std::uint8_t>(f.inv(a));
    primitive = static_cast<std::uint8_t>(f.primitive_element());
  }
  std::uint8_t sub(int a, int b) const { return static_cast<std::uint8_t>((a - b + q) % q); }
};

// RREF in place over the first n columns, returns rank; rows beyond the rank
// are garbage.
inline int reduce(const Field& f, SmallRow* rows, int count, int n) {
  int rank = 0;
  for (int c = 0; c < n && rank < count; ++c) {
    int p = rank;
    while (p < count && rows[p][c] == 0) ++p;
    if (p == count) continue;
    std::swap(rows[rank], rows[p]);
    const std::uint8_t s = f.inv[rows[rank][c]];
    for (int k = c; k < n; ++k) rows[rank][k] = f.mul[s][rows[rank][k]];
    for (int r = 0; r < count; ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint8_t factor = rows[r][c];
      for (int k = c; k < n; ++k) rows[r][k] = f.sub(rows[r][k], f.mul[factor][rows[rank][k]]);
    }
    ++rank;
  }
  return rank;
}

// Calls fn(space) for every d-dimensional subspace of GF(q)^n in RREF, in a
// fixed order. Stops early when fn returns false; returns false in that case.
inline bool for_each_subspace(int n, int d, int q, const std::function<bool(const SmallSpace&)>& fn) {
  if (d == 0) return fn({});
  std::vector<int> pivots(d);
  std::iota(pivots.begin(), pivots.end(), 0);
  while (true) {
    std::vector<std::pair<int, int>> free_cells;
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    for (int r = 0; r < d; ++r)
      for (int c = pivots[r] + 1; c < n; ++c)
        if (!is_pivot[c]) free_cells.push_back({r, c});
    SmallSpace space(d, SmallRow{});
    for (int r = 0; r < d; ++r) space[r][pivots[r]] = 1;
    std::vector<int> digits(free_cells.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < free_cells.size(); ++i)
        space[free_cells[i].first][free_cells[i].second] = static_cast<std::uint8_t>(digits[i]);
      if (!fn(space)) return false;
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
      if (i == digits.size()) break;
    }
    int r = d - 1;
    while (r >= 0 && pivots[r] == n - d + r) --r;
    if (r < 0) break;
    ++pivots[r];
    for (int k = r + 1; k < d; ++k) pivots[k] = pivots[k - 1] + 1;
  }
  return true;
}

inline double subspace_count(int n, int d, int q) {
  double num = 1, den = 1;
  for (int i = 0; i < d; ++i) {
    num *= std::pow(q, n - i) - 1;
    den *= std::pow(q, i + 1) - 1;
  }
  return num / den;
}

inline std::string key_of(const SmallSpace& s, int n) {
  std::string k;
  k.reserve(s.size() * n);
  for (const auto& r : s)
    for (int c = 0; c < n; ++c) k.push_back(static_cast<char>(r[c]));
  return k;
}

// Orbit representatives of d-dimensional subspaces under GL(F)^files acting
// blockwise on coordinates. Returns nullopt when the subspace list would be
// too large to enumerate.
inline std::optional<std::vector<SmallSpace>> orbit_representatives(const Field& f, int n, int d, int block) {
  if (subspace_count(n, d, f.q) > 200000) return std::nullopt;
  std::vector<SmallSpace> all;
  std::unordered_map<std::string, int> index;
  for_each_subspace(n, d, f.q, [&](const SmallSpace& s) {
    index.emplace(key_of(s, n), static_cast<int>(all.size()));
    all.push_back(s);
    return true;
  });
  // Generators: scale one coordinate by a primitive element; add one
  // coordinate of a block into another coordinate of the same block.
  struct Gen {
    int target, source;  // source < 0: scaling of target
  };
  std::vector<Gen> gens;
  for (int b = 0; b < n / block; ++b)
    for (int i = 0; i < block; ++i) {
      gens.push_back({b * block + i, -1});
      for (int j = 0; j < block; ++j)
        if (i != j) gens.push_back({b * block + i, b * block + j});
    }
  std::vector<char> seen(all.size(), 0);
  std::vector<SmallSpace> reps;
  for (std::size_t start = 0; start < all.size(); ++start) {
    if (seen[start]) continue;
    reps.push_back(all[start]);
    seen[start] = 1;
    std::vector<int> stack{static_cast<int>(start)};
    while (!stack.empty()) {
      SmallSpace cur = all[stack.back()];
      stack.pop_back();
      for (const auto& g : gens) {
        SmallSpace img = cur;
        for (auto& r : img)
          r[g.target] = g.source < 0 ? f.mul[f.primitive][r[g.target]]
                                     : static_cast<std::uint8_t>((r[g.target] + r[g.source]) % f.q);
        reduce(f, img.data(), static_cast<int>(img.size()), n);
        auto it = index.find(key_of(img, n));
        if (it != index.end() && !seen[it->second]) {
          seen[it->second] = 1;
          stack.push_back(it->second);
        }
      }
    }
  }
  return reps;
}

using Clock = std::chrono::steady_clock;

struct TimeUp {};

// One connected component in local coordinates: vertices 0..k-1, files
// 0..files-1, each file occupying `F` consecutive columns.
struct Component {
  std::vector<Vertex> vertices;        // global ids, local index = position
  std::vector<Color> files;            // global ids, local index = position
  std::vector<std::vector<int>> demand_vertices;
  std::vector<int> demand_file;
};

struct ComponentSolution {
  int rows = 0;
  std::vector<SmallSpace> spaces;  // per local vertex
};

class ComponentSearch {
 public:
  ComponentSearch(const Component& comp, const Field& field, int F, Clock::time_point deadline)
      : comp_(comp), field_(field), F_(F), n_(static_cast<int>(comp.files.size()) * F), deadline_(deadline) {
    const int k = static_cast<int>(comp.vertices.size());
    build_order();
    // Subset constraints sum_{u in S} m_u >= F * |files demanded inside S|,
    // keeping only subsets not dominated by a smaller subset with the same
    // requirement.
    if (k <= 16) {
      std::vector<int> req(1u << k, 0);
      std::vector<std::uint32_t> demand_mask(comp.demand_file.size(), 0);
      for (std::size_t d = 0; d < comp.demand_file.size(); ++d)
        for (int v : comp.demand_vertices[d]) demand_mask[d] |= 1u << pos_[v];
      for (std::uint32_t s = 1; s < (1u << k); ++s) {
        std::uint32_t files = 0;
        for (std::size_t d = 0; d < demand_mask.size(); ++d)
          if ((demand_mask[d] & s) == demand_mask[d]) files |= 1u << comp.demand_file[d];
        req[s] = F_ * __builtin_popcount(files);
      }
      for (std::uint32_t s = 1; s < (1u << k); ++s) {
        if (req[s] == 0) continue;
        bool dominated = false;
        for (int b = 0; b < k && !dominated; ++b)
          if ((s >> b & 1u) && req[s & ~(1u << b)] >= req[s]) dominated = true;
        if (!dominated) constraints_.push_back({s, req[s]});
      }
    }
    lower_ = 0;
    for (const auto& c : constraints_) lower_ = std::max(lower_, c.second);
  }

  int lower_bound() const { return lower_; }

  // Minimum total rows at this F, trying totals t in [lower, cap). Returns
  // nullopt when nothing below cap exists.
  std::optional<ComponentSolution> solve(int cap) {
    const int k = static_cast<int>(comp_.vertices.size());
    const int ceiling = std::min(cap, k * n_ + 1);
    for (int t = lower_; t < ceiling; ++t) {
      std::vector<int> profile(k, 0);  // indexed by search position
      std::optional<ComponentSolution> found;
      enumerate_profiles(0, t, profile, [&](const std::vector<int>& prof) {
        auto spaces = realize(prof);
        if (!spaces) return true;
        ComponentSolution sol;
        sol.rows = t;
        sol.spaces.assign(k, {});
        for (int i = 0; i < k; ++i) sol.spaces[order_[i]] = (*spaces)[i];
        found = std::move(sol);
        return false;
      });
      if (found) return found;
    }
    return std::nullopt;
  }

 private:
  void check_time() {
    if ((++ticks_ & 0x3ff) == 0 && Clock::now() > deadline_) throw TimeUp{};
  }

  void build_order() {
    const int k = static_cast<int>(comp_.vertices.size());
    std::vector<int> degree(k, 0);
    for (const auto& dv : comp_.demand_vertices)
      for (int v : dv) ++degree[v];
    std::vector<bool> placed(k, false);
    for (int step = 0; step < k; ++step) {
      int best = -1, best_links = -1;
      for (int v = 0; v < k; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (const auto& dv : comp_.demand_vertices) {
          bool has_v = false, has_placed = false;
          for (int u : dv) {
            has_v |= u == v;
            has_placed |= placed[u];
          }
          if (has_v && has_placed) ++links;
        }
        int score = step == 0 ? degree[v] : links * 1000 + degree[v];
        if (score > best_links) {
          best = v;
          best_links = score;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
    pos_.assign(k, 0);
    for (int i = 0; i < k; ++i) pos_[order_[i]] = i;
    // Demands touching each search position, with member positions.
    touching_.assign(k, {});
    for (std::size_t d = 0; d < comp_.demand_file.size(); ++d)
      for (int v : comp_.demand_vertices[d]) touching_[pos_[v]].push_back(static_cast<int>(d));
  }

  // Profiles are indexed by search position; bit b of a constraint mask is
  // search position b.
  bool profile_ok_partial(const std::vector<int>& prof, int assigned, int remaining) const {
    const std::uint32_t assigned_mask = assigned >= 32 ? ~0u : ((1u << assigned) - 1);
    for (const auto& [mask, need] : constraints_) {
      int have = 0;
      int open = 0;
      for (int b = 0; b < 32 && (mask >> b); ++b)
        if (mask >> b & 1u) {
          if (assigned_mask >> b & 1u)
            have += prof[b];
          else
            ++open;
        }
      if (open == 0 && have < need) return false;
      if (have + std::min(remaining, open * n_) < need) return false;
    }
    return true;
  }

  template <class Fn>
  bool enumerate_profiles(int i, int remaining, std::vector<int>& prof, Fn&& fn) {
    const int k = static_cast<int>(prof.size());
    if (i == k) return remaining == 0 ? fn(prof) : true;
    if (remaining > (k - i) * n_) return true;
    for (int m = std::min(n_, remaining); m >= 0; --m) {
      prof[i] = m;
      if (!profile_ok_partial(prof, i + 1, remaining - m)) continue;
      if (!enumerate_profiles(i + 1, remaining - m, prof, fn)) return false;
    }
    prof[i] = 0;
    return true;
  }

  // Rank deficit of demand d given the spaces placed at positions < upto+1.
  // Returns {still needed, rows available at unplaced members}.
  std::pair<int, int> demand_status(int d, int upto, const std::vector<int>& prof) {
    const auto& members = comp_.demand_vertices[d];
    scratch_.clear();
    int open_rows = 0;
    for (int v : members) {
      int p = pos_[v];
      if (p <= upto)
        scratch_.insert(scratch_.end(), chosen_[p].begin(), chosen_[p].end());
      else
        open_rows += prof[p];
    }
    const int count = static_cast<int>(scratch_.size());
    if (count == 0) return {F_, open_rows};
    buffer_ = scratch_;
    const int full = reduce(field_, buffer_.data(), count, n_);
    buffer_ = scratch_;
    const int block = comp_.demand_file[d] * F_;
    for (auto& r : buffer_)
      for (int s = 0; s < F_; ++s) r[block + s] = 0;
    const int without = reduce(field_, buffer_.data(), count, n_);
    // rank(W + E_c) - rank(W) = F + rank(W with file c zeroed) - rank(W)
    return {F_ + without - full, open_rows};
  }

  std::optional<std::vector<SmallSpace>> realize(const std::vector<int>& prof) {
    const int k = static_cast<int>(prof.size());
    chosen_.assign(k, {});
    if (dfs(0, prof)) return chosen_;
    return std::nullopt;
  }

  bool consistent(int i, const std::vector<int>& prof) {
    for (int d : touching_[i]) {
      auto [need, open] = demand_status(d, i, prof);
      if (need > open) return false;
    }
    return true;
  }

  bool dfs(int i, const std::vector<int>& prof) {
    const int k = static_cast<int>(prof.size());
    if (i == k) return true;
    check_time();
    const int d = prof[i];
    if (i == 0 && d > 0) {
      auto& cache = reps_cache_[d];
      if (!cache.has_value()) cache = orbit_representatives(field_, n_, d, F_);
      if (cache->has_value()) {
        for (const auto& s : **cache) {
          chosen_[i] = s;
          if (consistent(i, prof) && dfs(i + 1, prof)) return true;
        }
        return false;
      }
    }
    bool ok = false;
    for_each_subspace(n_, d, field_.q, [&](const SmallSpace& s) {
      chosen_[i] = s;
      check_time();
      if (consistent(i, prof) && dfs(i + 1, prof)) {
        ok = true;
        return false;
      }
      return true;
    });
    return ok;
  }

  const Component& comp_;
  const Field& field_;
  int F_;
  int n_;
  Clock::time_point deadline_;
  std::vector<int> order_, pos_;
  std::vector<std::vector<int>> touching_;
  std::vector<std::pair<std::uint32_t, int>> constraints_;
  int lower_ = 0;
  std::vector<SmallSpace> chosen_;
  SmallSpace scratch_, buffer_;
  std::unordered_map<int, std::optional<std::optional<std::vector<SmallSpace>>>> reps_cache_;
  std::uint64_t ticks_ = 0;
};

inline std::vector<Component> split_components(int num_vertices, const std::vector<Demand>& demands) {
  std::vector<int> parent(num_vertices + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& d : demands)
    for (std::size_t i = 1; i < d.vertices.size(); ++i) parent[find(d.vertices[i])] = find(d.vertices[0]);
  std::vector<int> root_to_comp(num_vertices + 1, -1);
  std::vector<Component> comps;
  for (const auto& d : demands) {
    int r = find(d.vertices.front());
    if (root_to_comp[r] < 0) {
      root_to_comp[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
  }
  // Vertices in ascending order within each component.
  std::vector<int> local(num_vertices + 1, -1);
  for (Vertex v = 1; v <= num_vertices; ++v) {
    int c = root_to_comp[find(v)];
    if (c < 0) continue;
    local[v] = static_cast<int>(comps[c].vertices.size());
    comps[c].vertices.push_back(v);
  }
  for (const auto& d : demands) {
    auto& comp = comps[root_to_comp[find(d.vertices.front())]];
    auto it = std::find(comp.files.begin(), comp.files.end(), d.file);
    if (it == comp.files.end()) comp.files.push_back(d.file);
  }
  for (auto& comp : comps) std::sort(comp.files.begin(), comp.files.end());
  for (const auto& d : demands) {
    auto& comp = comps[root_to_comp[find(d.vertices.front())]];
    std::vector<int> members;
    for (Vertex v : d.vertices) members.push_back(local[v]);
    comp.demand_vertices.push_back(std::move(members));
    comp.demand_file.push_back(
        static_cast<int>(std::find(comp.files.begin(), comp.files.end(), d.file) - comp.files.begin()));
  }
  return comps;
}

// Every demanding vertex stores every file it is asked for: always valid.
inline LinearCode store_everything(int num_vertices, int num_files, const std::vector<Demand>& demands, int q) {
  FileSpec spec{num_files, 1, q};
  std::vector<std::set<Color>> wants(num_vertices + 1);
  for (const auto& d : demands)
    for (Vertex v : d.vertices) wants[v].insert(d.file);
  std::vector<Matrix> rows(num_vertices);
  for (Vertex v = 1; v <= num_vertices; ++v)
    for (Color c : wants[v]) rows[v - 1].push_back(unit_row(num_files, c - 1));
  return LinearCode(spec, std::move(rows));
}

}  // namespace detail::oracle

inline std::vector<Demand> demands_of(const ColoredGraph& g) {
  std::vector<Demand> out;
  for (const auto& e : g.edges()) out.push_back({{e.a, e.b}, e.color});
  return out;
}

inline std::vector<Demand> demands_of(const HyperGraph& h) {
  std::vector<Demand> out;
  for (const auto& s : h.hyperedges()) out.push_back({s, 1});
  return out;
}

inline double oracle_complexity(int num_vertices, const std::vector<Demand>& demands, const OracleConfig& cfg) {
  double worst = 0;
  for (const auto& c : detail::oracle::split_components(num_vertices, demands))
    worst = std::max(worst, static_cast<double>(c.vertices.size()) * static_cast<double>(c.files.size()) * cfg.max_F *
                                std::log2(static_cast<double>(cfg.q)));
  return worst;
}

// Minimum total storage over linear codes with F <= max_F. The lower bound
// used for the `exact` label is the color-blind cut-set bound.
inline OracleResult brute_force_optimum(int num_vertices, int num_files, const std::vector<Demand>& demands,
                                        const Rational& lower_bound, const OracleConfig& cfg) {
  using namespace detail::oracle;
  cfg.validate();
  OracleResult result;
  result.lower_bound = lower_bound;
  if (demands.empty()) {
    result.total = 0;
    result.witness = LinearCode::empty(FileSpec{num_files, 1, cfg.q}, num_vertices);
    result.exact = true;
    return result;
  }
  for (const auto& d : demands)
    if (d.file < 1 || d.file > num_files) throw Error("oracle: demand file out of range");

  const auto comps = split_components(num_vertices, demands);
  for (const auto& c : comps)
    if (static_cast<int>(c.files.size()) * cfg.max_F > kMaxCols || c.vertices.size() > 16)
      throw Error("oracle: component too large for the exhaustive search");

  auto fallback = store_everything(num_vertices, num_files, demands, cfg.q);
  std::optional<Rational> best;
  std::optional<LinearCode> best_code;
  int best_F = 1;

  const double complexity = oracle_complexity(num_vertices, demands, cfg);
  if (complexity > cfg.complexity_budget) {
    result.complete = false;
    result.note = "size guard exceeded (complexity " + to_decimal(Rational(static_cast<long long>(complexity))) +
                  " > " + to_decimal(Rational(static_cast<long long>(cfg.complexity_budget))) +
                  "); reporting the store-everything code as an upper bound";
    result.total = fallback.total_storage();
    result.witness = fallback;
    result.exact = result.total == lower_bound;
    return result;
  }

  Field field(cfg.q);
  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(cfg.time_cap_seconds));
  try {
    for (int F = 1; F <= cfg.max_F; ++F) {
      std::vector<ComponentSearch> searches;
      searches.reserve(comps.size());
      int lower_sum = 0;
      for (const auto& c : comps) {
        searches.emplace_back(c, field, F, deadline);
        lower_sum += searches.back().lower_bound();
      }
      // Exclusive bound on total rows: strictly below best * F and at most
      // budget_cap * F.
      long long cap_all = std::numeric_limits<int>::max() / 2;
      if (best) {
        Rational r = *best * F;
        BigInt c = numerator_of(r) / denominator_of(r);
        if (Rational(c) < r) c += 1;
        cap_all = std::min(cap_all, c.convert_to<long long>());
      }
      if (cfg.budget_cap) {
        Rational r = *cfg.budget_cap * F;
        BigInt c = numerator_of(r) / denominator_of(r);
        if (r < 0) c = -1;
        cap_all = std::min(cap_all, c.convert_to<long long>() + 1);
      }
      std::vector<ComponentSolution> sols;
      bool ok = true;
      int used = 0;
      for (std::size_t i = 0; i < comps.size() && ok; ++i) {
        const int others_lower = lower_sum - searches[i].lower_bound();
        const long long cap = cap_all - used - others_lower;
        auto sol = searches[i].solve(static_cast<int>(std::max(0LL, cap)));
        if (!sol) {
          ok = false;
          break;
        }
        used += sol->rows;
        lower_sum -= searches[i].lower_bound();
        sols.push_back(std::move(*sol));
      }
      if (!ok) continue;
      const Rational total = make_rational(used, F);
      FileSpec spec{num_files, F, cfg.q};
      std::vector<Matrix> rows(num_vertices);
      for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t lv = 0; lv < comps[i].vertices.size(); ++lv)
          for (const auto& r : sols[i].spaces[lv]) {
            Row out(spec.columns(), 0);
            for (std::size_t lf = 0; lf < comps[i].files.size(); ++lf)
              for (int s = 0; s < F; ++s) out[(comps[i].files[lf] - 1) * F + s] = r[lf * F + s];
            rows[comps[i].vertices[lv] - 1].push_back(std::move(out));
          }
      best = total;
      best_code = LinearCode(spec, std::move(rows));
      best_F = F;
    }
  } catch (const TimeUp&) {
    result.complete = false;
    result.note = "time cap reached; result is an upper bound only";
  }

  if (!best) {
    result.complete = false;
    result.total = fallback.total_storage();
    result.witness = fallback;
    if (result.note.empty()) result.note = "no code found within the budget cap; reporting the store-everything code";
  } else {
    result.total = *best;
    result.witness = best_code;
    result.symbols_per_file = best_F;
  }
  result.exact = result.total == lower_bound;
  return result;
}

inline OracleResult brute_force_optimum(const ColoredGraph& g, int num_files, const OracleConfig& cfg) {
  return brute_force_optimum(g.num_vertices(), num_files, demands_of(g), cutset_lower_bound(g), cfg);
}

inline OracleResult brute_force_optimum(const HyperGraph& h, const OracleConfig& cfg) {
  return brute_force_optimum(h.num_vertices(), 1, demands_of(h), solve_covering_lp(h).optimum, cfg);
}

enum class Verdict { matched, claimed_too_low, claimed_too_high, inconclusive };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::matched: return "matched";
    case Verdict::claimed_too_low: return "claimed-too-low";
    case Verdict::claimed_too_high: return "claimed-too-high";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

inline Verdict certify_match(int num_vertices, int num_files, const std::vector<Demand>& demands, const Rational& lower,
                             const Rational& claimed, const OracleConfig& cfg) {
  if (claimed < lower) return Verdict::claimed_too_low;
  if (oracle_complexity(num_vertices, demands, cfg) > cfg.complexity_budget) return Verdict::inconclusive;
  auto r = brute_force_optimum(num_vertices, num_files, demands, lower, cfg);
  if (r.total < claimed) return Verdict::claimed_too_high;
  if (!r.complete) return Verdict::inconclusive;
  if (r.total == claimed) return Verdict::matched;
  return Verdict::inconclusive;
}

inline Verdict certify_match(const ColoredGraph& g, int num_files, const Rational& claimed, const OracleConfig& cfg) {
  return certify_match(g.num_vertices(), num_files, demands_of(g), cutset_lower_bound(g), claimed, cfg);
}

inline Verdict certify_match(const HyperGraph& h, const Rational& claimed, const OracleConfig& cfg) {
  return certify_match(h.num_vertices(), 1, demands_of(h), solve_covering_lp(h).optimum, claimed, cfg);
}

}  // namespace gdsp
