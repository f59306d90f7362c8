// SPDX-License-Identifier: MIT
#include "cardsig/realize.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "cardsig/error.hpp"

namespace cardsig {

std::vector<std::string> PruneOptions::active_names() const {
  std::vector<std::string> v;
  if (residual_feasibility) v.push_back("residual");
  if (crossing_conflicts) v.push_back("conflict");
  if (forced_edges) v.push_back("forced");
  if (connectivity) v.push_back("connectivity");
  return v;
}

namespace {

// Candidate edges are all vertex pairs (i, j), i < j, over the x-sorted
// point order, processed in lexicographic order.  Processing west-to-east
// makes residual budgets checkable at fixed "closure" moments:
//   - before the first candidate with west endpoint u, every edge that
//     could reach u from the west is decided, so res[u][W] must be 0;
//   - after the last candidate with west endpoint u, everything incident
//     to u is decided, so the other three budgets of u must be 0 as well.
// Those closure checks alone make the search exact; every pruning below is
// a sound acceleration on top.
struct Engine {
  // ---- immutable once built ----
  int n = 0;
  long long M = 0;
  std::vector<Point> pts;   // x-sorted
  std::vector<int> ids;     // sweep index -> original id
  std::vector<int> ci, cj;  // candidate -> endpoint sweep indices
  // candidate -> 4 budget slots (vertex, direction), see slot_of.
  std::vector<std::array<std::pair<int, int>, 4>> slots;
  std::vector<char> is_forced;
  long long forced_total = 0;
  bool saturated = false;
  PruneOptions prune;
  std::uint64_t limit = 0;

  // Crossing lists, lazily filled unless eager (threads).
  std::vector<std::vector<int>> crossers;
  std::vector<char> crossers_ready;

  // ---- mutable search state (copyable for thread splitting) ----
  struct State {
    std::vector<std::array<int, 4>> res;    // needed per vertex per direction
    std::vector<std::array<int, 4>> avail;  // undecided live supply per slot
    std::vector<int> dead;                  // per candidate: # chosen crossers
    std::vector<int> chosen;                // stack of taken candidate indices
    long long forced_open = 0;              // forced candidates not yet taken
    // Union-find with explicit undo; open_ counts not-yet-closed vertices.
    std::vector<int> parent, comp_size, open_;
  };
  State st;

  // Per-frame undo journal.  stage records how far decide() got before
  // failing, so undo() reverses exactly what was applied.
  struct Undo {
    std::vector<int> killed;        // candidates whose dead went up by one
    std::vector<int> closed_roots;  // roots whose open_ was decremented
    int union_child = -1, union_parent = -1;
    int stage = 0;  // 0 nothing applied, 1 take applied, 2 skip applied
    int cand = -1;
  };

  long long cand_index(int i, int j) const {
    // offset(i) = sum_{t<i} (n-1-t)
    long long off = static_cast<long long>(i) * (n - 1) -
                    static_cast<long long>(i) * (i - 1) / 2;
    return off + (j - i - 1);
  }

  void build(const CardinalSignature& sig, const PruneOptions& popts,
             std::uint64_t lim) {
    prune = popts;
    limit = lim;
    n = static_cast<int>(sig.points.size());
    pts = sig.points;
    std::sort(pts.begin(), pts.end(),
              [](const Point& a, const Point& b) { return a.x < b.x; });
    ids.resize(n);
    for (int i = 0; i < n; ++i) ids[i] = pts[i].id;

    M = static_cast<long long>(n) * (n - 1) / 2;
    ci.resize(M);
    cj.resize(M);
    slots.resize(M);
    for (int i = 0, k = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++k) {
        ci[k] = i;
        cj[k] = j;
        bool j_north = pts[j].y > pts[i].y;
        slots[k] = {std::pair<int, int>{i, DIR_E},
                    {i, j_north ? DIR_N : DIR_S},
                    {j, DIR_W},
                    {j, j_north ? DIR_S : DIR_N}};
      }
    }

    st.res.assign(n, {0, 0, 0, 0});
    for (int i = 0; i < n; ++i) {
      const DegreeQuad& q = sig.degrees.at(ids[i]);
      st.res[i] = {q.n, q.s, q.e, q.w};
    }
    st.avail.assign(n, {0, 0, 0, 0});
    for (long long k = 0; k < M; ++k) {
      for (const auto& [v, d] : slots[k]) st.avail[v][d]++;
    }
    st.dead.assign(M, 0);
    st.chosen.clear();

    is_forced.assign(M, 0);
    st.forced_open = 0;
    saturated = is_saturated(sig);
    if (prune.forced_edges && n >= 3) {
      std::map<int, int> idx_of;
      for (int i = 0; i < n; ++i) idx_of[ids[i]] = i;
      for (const Edge& e : forced_hull_edges(sig)) {
        int a = idx_of.at(e.first), b = idx_of.at(e.second);
        if (a > b) std::swap(a, b);
        long long k = cand_index(a, b);
        if (!is_forced[k]) {
          is_forced[k] = 1;
          st.forced_open++;
        }
      }
      forced_total = st.forced_open;
    }

    st.parent.resize(n);
    st.comp_size.assign(n, 1);
    st.open_.assign(n, 1);
    for (int i = 0; i < n; ++i) st.parent[i] = i;

    crossers.assign(M, {});
    crossers_ready.assign(M, 0);
  }

  bool connectivity_on() const { return prune.connectivity && saturated && n >= 3; }

  const std::vector<int>& crossers_of(long long k) {
    if (!crossers_ready[k]) {
      const Point& a = pts[ci[k]];
      const Point& b = pts[cj[k]];
      std::vector<int>& out = crossers[k];
      for (long long t = 0; t < M; ++t) {
        if (t == k) continue;
        if (proper_cross(a, b, pts[ci[t]], pts[cj[t]])) out.push_back(static_cast<int>(t));
      }
      crossers_ready[k] = 1;
    }
    return crossers[k];
  }

  void precompute_all_crossers() {
    for (long long k = 0; k < M; ++k) crossers_of(k);
  }

  int find_root(int v) const {
    while (st.parent[v] != v) v = st.parent[v];
    return v;
  }

  // ---- transition: decide candidate k (take or skip).  Returns false and
  // leaves a partially-filled journal when the branch is infeasible; the
  // caller must always run undo(u) afterwards. ----
  bool decide(long long k, bool take, Undo& u) {
    u.cand = static_cast<int>(k);
    if (take) {
      if (prune.crossing_conflicts) {
        if (st.dead[k] > 0) return false;
      } else {
        // Mandatory exact legality: never admit a crossing pair.
        const Point& a = pts[ci[k]];
        const Point& b = pts[cj[k]];
        for (int c : st.chosen) {
          if (proper_cross(a, b, pts[ci[c]], pts[cj[c]])) return false;
        }
      }
      for (const auto& [v, d] : slots[k]) {
        if (st.res[v][d] < 1) return false;
      }
      for (const auto& [v, d] : slots[k]) {
        st.res[v][d]--;
        st.avail[v][d]--;
      }
      st.chosen.push_back(static_cast<int>(k));
      if (is_forced[k]) st.forced_open--;
      u.stage = 1;

      if (prune.crossing_conflicts) {
        for (int t : crossers_of(k)) {
          if (t <= k) continue;  // already decided
          st.dead[t]++;
          u.killed.push_back(t);
          if (st.dead[t] == 1) {
            for (const auto& [v, d] : slots[t]) st.avail[v][d]--;
            if (is_forced[t]) return false;  // a forced edge just died
            if (prune.residual_feasibility) {
              for (const auto& [v, d] : slots[t]) {
                if (st.avail[v][d] < st.res[v][d]) return false;
              }
            }
          }
        }
      }
      if (connectivity_on()) {
        int ra = find_root(ci[k]), rb = find_root(cj[k]);
        if (ra != rb) {
          if (st.comp_size[ra] < st.comp_size[rb]) std::swap(ra, rb);
          st.parent[rb] = ra;
          st.comp_size[ra] += st.comp_size[rb];
          st.open_[ra] += st.open_[rb];
          u.union_child = rb;
          u.union_parent = ra;
        }
      }
    } else {
      if (is_forced[k]) return false;  // forced edges have no skip branch
      // A dead candidate's supply was already discounted when it died.
      if (st.dead[k] == 0) {
        for (const auto& [v, d] : slots[k]) st.avail[v][d]--;
        u.stage = 2;
      } else {
        u.stage = 3;  // decided-out, but supply untouched
      }
    }

    if (prune.residual_feasibility) {
      for (const auto& [v, d] : slots[k]) {
        if (st.avail[v][d] < st.res[v][d]) return false;
      }
    }

    // Closure checks at group boundaries (always on: they carry exactness).
    if (cj[k] == n - 1) {
      int u_end = ci[k];
      if (st.res[u_end][DIR_N] || st.res[u_end][DIR_S] || st.res[u_end][DIR_E])
        return false;
      if (!close_vertex(u_end, u)) return false;
      if (u_end == n - 2) {  // the very last candidate also closes vertex n-1
        const auto& q = st.res[n - 1];
        if (q[DIR_N] || q[DIR_S] || q[DIR_E] || q[DIR_W]) return false;
        if (!close_vertex(n - 1, u)) return false;
      }
    }
    return true;
  }

  bool close_vertex(int v, Undo& u) {
    if (!connectivity_on()) return true;
    int r = find_root(v);
    st.open_[r]--;
    u.closed_roots.push_back(r);
    // A component with no open vertices can never grow again; if it does
    // not already span everything, the final graph would be disconnected,
    // which a saturated signature forbids.
    return !(st.open_[r] == 0 && st.comp_size[r] < n);
  }

  void undo(const Undo& u) {
    for (auto it = u.closed_roots.rbegin(); it != u.closed_roots.rend(); ++it)
      st.open_[*it]++;
    if (u.union_child >= 0) {
      st.open_[u.union_parent] -= st.open_[u.union_child];
      st.comp_size[u.union_parent] -= st.comp_size[u.union_child];
      st.parent[u.union_child] = u.union_child;
    }
    for (auto it = u.killed.rbegin(); it != u.killed.rend(); ++it) {
      if (st.dead[*it] == 1) {
        for (const auto& [v, d] : slots[*it]) st.avail[v][d]++;
      }
      st.dead[*it]--;
    }
    long long k = u.cand;
    if (u.stage == 1) {
      st.chosen.pop_back();
      if (is_forced[k]) st.forced_open++;
      for (const auto& [v, d] : slots[k]) {
        st.res[v][d]++;
        st.avail[v][d]++;
      }
    } else if (u.stage == 2) {
      for (const auto& [v, d] : slots[k]) st.avail[v][d]++;
    }
  }

  bool group_start_ok(long long k) const {
    // First candidate of group i: every west contribution to i is decided.
    if (k < M && cj[k] == ci[k] + 1) {
      if (st.res[ci[k]][DIR_W] != 0) return false;
    }
    return true;
  }

  // ---- sequential DFS ----
  std::uint64_t emitted = 0;
  bool stop = false;
  const std::function<void(const std::vector<Edge>&)>* sink = nullptr;

  void emit() {
    emitted++;
    if (sink) {
      std::vector<Edge> edges;
      edges.reserve(st.chosen.size());
      for (int k : st.chosen) edges.push_back(make_edge(ids[ci[k]], ids[cj[k]]));
      std::sort(edges.begin(), edges.end());
      (*sink)(edges);
    }
    if (limit && emitted >= limit) stop = true;
  }

  void dfs(long long k) {
    if (stop) return;
    if (k == M) {
      // All closure checks passed along the way, so every budget is zero.
      emit();
      return;
    }
    if (!group_start_ok(k)) return;
    for (bool take : {true, false}) {
      Undo u;
      if (decide(k, take, u)) dfs(k + 1);
      undo(u);
      if (stop) return;
    }
  }

  // ---- parallel counting: expand a frontier, then split across workers ----
  std::uint64_t count_parallel(int threads) {
    precompute_all_crossers();
    struct Node {
      State state;
      long long depth;
    };
    std::vector<Node> frontier{{st, 0}};
    const size_t want = static_cast<size_t>(threads) * 8;
    std::uint64_t done = 0;  // completed realizations found during expansion
    while (frontier.size() < want) {
      // Expand the shallowest states first to keep depths balanced.
      size_t pick = 0;
      for (size_t i = 1; i < frontier.size(); ++i)
        if (frontier[i].depth < frontier[pick].depth) pick = i;
      if (frontier[pick].depth == M) break;  // everything fully decided
      Node node = std::move(frontier[pick]);
      frontier.erase(frontier.begin() + static_cast<long>(pick));
      if (node.depth == M) {
        done++;
        continue;
      }
      st = node.state;
      if (!group_start_ok(node.depth)) continue;
      for (bool take : {true, false}) {
        Undo u;
        if (decide(node.depth, take, u)) {
          if (node.depth + 1 == M) {
            done++;
          } else {
            frontier.push_back({st, node.depth + 1});
          }
        }
        undo(u);
      }
      if (frontier.empty()) return done;
    }

    std::atomic<size_t> next{0};
    std::vector<std::uint64_t> sums(static_cast<size_t>(threads), 0);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        Engine local(*this);  // shared immutable tables are copied once per worker
        local.sink = nullptr;
        local.limit = 0;
        for (size_t i = next.fetch_add(1); i < frontier.size();
             i = next.fetch_add(1)) {
          local.st = frontier[i].state;
          local.emitted = 0;
          local.stop = false;
          local.dfs(frontier[i].depth);
          sums[static_cast<size_t>(t)] += local.emitted;
        }
      });
    }
    for (auto& th : pool) th.join();
    std::uint64_t total = done;
    for (std::uint64_t s : sums) total += s;
    return total;
  }
};

}  // namespace

CountResult count_realizations(const CardinalSignature& sig, const CountOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  validate_signature(sig);
  Engine eng;
  eng.build(sig, opts.prune, opts.limit);
  CountResult result;
  result.pruning = opts.prune.active_names();
  if (opts.threads > 1 && opts.limit == 0 && eng.M > 0) {
    result.count = eng.count_parallel(opts.threads);
  } else {
    eng.dfs(0);
    result.count = eng.emitted;
    result.hit_limit = eng.stop;
  }
  result.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return result;
}

std::uint64_t enumerate_realizations(
    const CardinalSignature& sig,
    const std::function<void(const std::vector<Edge>&)>& sink,
    const CountOptions& opts) {
  validate_signature(sig);
  Engine eng;
  eng.build(sig, opts.prune, opts.limit);
  eng.sink = &sink;  // emission stays sequential and deterministic
  eng.dfs(0);
  return eng.emitted;
}

// ---- shared fixed-size noncrossing enumeration --------------------------

namespace {

struct SubsetEngine {
  std::vector<Point> pts;  // x-sorted
  std::vector<int> ids;
  int n = 0;
  long long M = 0, target = 0;
  std::vector<std::pair<int, int>> cand;  // sweep-index pairs, lex sorted
  std::vector<char> forced;
  std::vector<std::vector<int>> crossers;
  std::vector<int> dead;
  std::vector<int> chosen;
  long long forced_open = 0;
  std::uint64_t emitted = 0;
  const std::function<void(const std::vector<Edge>&)>* sink = nullptr;

  void emit() {
    emitted++;
    if (sink) {
      std::vector<Edge> edges;
      edges.reserve(chosen.size());
      for (int k : chosen) {
        edges.push_back(make_edge(ids[cand[k].first], ids[cand[k].second]));
      }
      std::sort(edges.begin(), edges.end());
      (*sink)(edges);
    }
  }

  void dfs(long long k) {
    long long have = static_cast<long long>(chosen.size());
    if (have == target) {
      if (forced_open == 0) emit();
      return;
    }
    if (k == M || have + (M - k) < target) return;
    // take
    if (dead[k] == 0) {
      chosen.push_back(static_cast<int>(k));
      if (forced[k]) forced_open--;
      std::vector<int> killed;
      for (int t : crossers[k]) {
        if (t > k) {
          dead[t]++;
          killed.push_back(t);
        }
      }
      bool forced_died = false;
      for (int t : killed) {
        if (dead[t] == 1 && forced[t]) forced_died = true;
      }
      if (!forced_died) dfs(k + 1);
      for (int t : killed) dead[t]--;
      if (forced[k]) forced_open++;
      chosen.pop_back();
    }
    // skip
    if (!forced[k]) dfs(k + 1);
  }
};

}  // namespace

std::uint64_t enumerate_max_noncrossing(
    const std::vector<Point>& pts,
    const std::vector<Edge>& candidates,
    const std::set<Edge>& forced,
    long long target,
    const std::function<void(const std::vector<Edge>&)>& sink) {
  if (target < 0) return 0;
  SubsetEngine eng;
  eng.pts = pts;
  std::sort(eng.pts.begin(), eng.pts.end(),
            [](const Point& a, const Point& b) { return a.x < b.x; });
  eng.n = static_cast<int>(pts.size());
  eng.ids.resize(eng.n);
  std::map<int, int> idx_of;
  for (int i = 0; i < eng.n; ++i) {
    eng.ids[i] = eng.pts[i].id;
    idx_of[eng.pts[i].id] = i;
  }
  auto index_of = [&](int id) {
    auto it = idx_of.find(id);
    if (it == idx_of.end()) {
      throw Error(Err::ValidationFailure,
                  "edge references unknown vertex " + std::to_string(id));
    }
    return it->second;
  };
  std::set<std::pair<int, int>> uniq;
  for (const Edge& e : candidates) {
    if (e != make_edge(e.first, e.second)) {
      throw Error(Err::ValidationFailure, "candidate edge is not normalized");
    }
    int a = index_of(e.first), b = index_of(e.second);
    if (a > b) std::swap(a, b);
    uniq.insert({a, b});
  }
  eng.cand.assign(uniq.begin(), uniq.end());
  eng.M = static_cast<long long>(eng.cand.size());
  eng.target = target;
  eng.forced.assign(eng.M, 0);
  for (const Edge& e : forced) {
    int a = index_of(e.first), b = index_of(e.second);
    if (a > b) std::swap(a, b);
    auto it = uniq.find({a, b});
    if (it == uniq.end()) {
      throw Error(Err::ValidationFailure, "forced edge is not a candidate");
    }
    long long k = std::distance(uniq.begin(), it);
    eng.forced[k] = 1;
    eng.forced_open++;
  }
  eng.crossers.assign(eng.M, {});
  for (long long a = 0; a < eng.M; ++a) {
    for (long long b = a + 1; b < eng.M; ++b) {
      if (proper_cross(eng.pts[eng.cand[a].first], eng.pts[eng.cand[a].second],
                       eng.pts[eng.cand[b].first], eng.pts[eng.cand[b].second])) {
        eng.crossers[a].push_back(static_cast<int>(b));
        eng.crossers[b].push_back(static_cast<int>(a));
      }
    }
  }
  eng.dead.assign(eng.M, 0);
  eng.sink = &sink;
  eng.dfs(0);
  return eng.emitted;
}

std::uint64_t enumerate_triangulations(
    const std::vector<Point>& pts,
    const std::function<void(const std::vector<Edge>&)>& sink) {
  validate_general_position(pts);
  long long n = static_cast<long long>(pts.size());
  std::vector<int> hull = convex_hull(pts);  // throws below three points
  std::vector<Edge> candidates;
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      candidates.push_back(make_edge(pts[i].id, pts[j].id));
    }
  }
  std::set<Edge> forced;
  for (size_t i = 0; i < hull.size(); ++i) {
    forced.insert(make_edge(hull[i], hull[(i + 1) % hull.size()]));
  }
  long long c = static_cast<long long>(hull.size());
  return enumerate_max_noncrossing(pts, candidates, forced, 3 * n - c - 3, sink);
}

std::uint64_t count_triangulations(const std::vector<Point>& pts) {
  return enumerate_triangulations(pts, [](const std::vector<Edge>&) {});
}

}  // namespace cardsig
