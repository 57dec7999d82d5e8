#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "gallai/coloring.hpp"

namespace gallai {

/// One exhaustive-search question: does some k-coloring of K_N avoid the
/// monochromatic pattern (and, in gallai mode, rainbow triangles too)?
/// Classical Ramsey mode (gallai_constraint = false) requires k = 2.
struct SearchProblem {
    int k;
    StarUnionPattern pattern;
    bool gallai_constraint;
    int order;
};

enum class Verdict { avoider_found, exhausted };

struct SearchOutcome {
    Verdict verdict = Verdict::exhausted;
    std::optional<ColoredComplete> witness;
    std::uint64_t nodes_explored = 0;
    double wall_seconds = 0.0;
};

/// Budget exhaustion is an error, never a verdict.
class budget_exceeded : public std::runtime_error {
public:
    explicit budget_exceeded(std::uint64_t nodes)
        : std::runtime_error("search: node budget exceeded after " +
                             std::to_string(nodes) + " nodes"),
          nodes(nodes) {}
    std::uint64_t nodes;
};

struct SearchOptions {
    std::uint64_t node_budget = UINT64_MAX;
    int threads = 1;
    std::string checkpoint_path;  // empty = no checkpointing
};

namespace detail {

/// The DFS core. Vertices are added in order; each new vertex's edge colors to
/// the prior vertices are enumerated ascending, with colors capped at one more
/// than the largest color used so far (first-occurrence color canonicity).
/// A partial coloring is pruned the moment an edge closes a rainbow triangle
/// (gallai mode), when a completed K_J contains the pattern, or when the
/// completed K_J is not the lexicographically least member of its orbit under
/// vertex and color permutations. Since the edge order puts all of K_J before
/// any edge to vertex J, the restriction of a canonical coloring is canonical,
/// so extending only canonical prefixes covers every coloring up to
/// relabeling.
class SearchEngine {
public:
    SearchEngine(const SearchProblem& p, std::atomic<std::uint64_t>* global_nodes,
                 std::uint64_t budget)
        : N_(p.order),
          k_(p.k),
          n_(p.pattern.n),
          m_(p.pattern.m),
          gallai_(p.gallai_constraint),
          mat_(static_cast<std::size_t>(N_) * N_, 0),
          global_nodes_(global_nodes),
          budget_(budget) {
        for (int j = 1; j < N_; ++j)
            for (int i = 0; i < j; ++i) edges_.emplace_back(i, j);
    }

    /// Enumerate canonical prefixes on the first `depth` vertices.
    void enumerate_prefixes(int depth, std::vector<std::vector<Color>>* sink) {
        collect_depth_ = depth;
        sink_ = sink;
        found_ = false;
        aborted_ = false;
        local_nodes_ = 0;
        const int e0 = depth * (depth - 1) / 2;
        if (e0 == 0) {
            sink->push_back({});
            return;
        }
        dfs(0, 0);
    }

    /// Run one shard: complete the search below a fixed prefix.
    void run_shard(const std::vector<Color>& prefix) {
        collect_depth_ = -1;
        sink_ = nullptr;
        found_ = false;
        aborted_ = false;
        local_nodes_ = 0;
        int max_used = 0;
        for (std::size_t t = 0; t < prefix.size(); ++t) {
            const auto [i, j] = edges_[t];
            at(i, j) = at(j, i) = prefix[t];
            max_used = std::max(max_used, prefix[t]);
        }
        if (prefix.size() == edges_.size()) {
            // Degenerate split: the prefix already is a full avoider.
            found_ = true;
            witness_ = prefix;
            return;
        }
        dfs(static_cast<int>(prefix.size()), max_used);
    }

    bool found() const { return found_; }
    bool aborted() const { return aborted_; }
    const std::vector<Color>& witness() const { return witness_; }
    std::uint64_t local_nodes() const { return local_nodes_; }

private:
    Color& at(int i, int j) { return mat_[static_cast<std::size_t>(i) * N_ + j]; }
    Color cat(int i, int j) const { return mat_[static_cast<std::size_t>(i) * N_ + j]; }

    // Returns true when the search below this node should stop unwinding
    // (avoider found in full mode, or abort).
    bool dfs(int t, int max_used) {
        const auto [i, j] = edges_[t];
        const int top = std::min(k_, max_used + 1);
        for (Color c = 1; c <= top; ++c) {
            ++local_nodes_;
            if (global_nodes_->fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
                aborted_ = true;
                return true;
            }
            if (gallai_ && closes_rainbow(i, j, c)) continue;
            at(i, j) = at(j, i) = c;
            const int mu = std::max(max_used, c);
            if (i == j - 1) {
                // Vertex j complete: K_{j+1} fully colored.
                const int J = j + 1;
                if (contains_mono(J) || !is_canonical(J)) {
                    at(i, j) = at(j, i) = 0;
                    continue;
                }
                if (sink_ && J == collect_depth_) {
                    std::vector<Color> pre(t + 1);
                    for (int s = 0; s <= t; ++s) pre[s] = cat(edges_[s].first, edges_[s].second);
                    sink_->push_back(std::move(pre));
                    at(i, j) = at(j, i) = 0;
                    continue;
                }
                if (J == N_) {
                    found_ = true;
                    witness_.resize(edges_.size());
                    for (std::size_t s = 0; s < edges_.size(); ++s)
                        witness_[s] = cat(edges_[s].first, edges_[s].second);
                    at(i, j) = at(j, i) = 0;
                    return true;
                }
            }
            if (dfs(t + 1, mu)) {
                at(i, j) = at(j, i) = 0;
                return true;
            }
            at(i, j) = at(j, i) = 0;
        }
        return false;
    }

    bool closes_rainbow(int i, int j, Color c) const {
        for (int x = 0; x < i; ++x) {
            const Color a = cat(x, i), b = cat(x, j);
            if (a != b && a != c && b != c) return true;
        }
        return false;
    }

    /// Three-inequality star-union criterion restricted to the first J vertices.
    bool contains_mono(int J) {
        deg_.resize(N_);
        auto* deg = deg_.data();
        for (Color c = 1; c <= k_; ++c) {
            for (int v = 0; v < J; ++v) {
                int d = 0;
                for (int u = 0; u < J; ++u)
                    if (u != v && cat(v, u) == c) ++d;
                deg[v] = d;
            }
            for (int u = 0; u < J; ++u)
                for (int v = 0; v < J; ++v) {
                    if (u == v) continue;
                    const int uv = cat(u, v) == c ? 1 : 0;
                    if (deg[u] - uv < n_ || deg[v] - uv < m_) continue;
                    int joint = 0;
                    for (int w = 0; w < J; ++w) {
                        if (w == u || w == v) continue;
                        if (cat(u, w) == c || cat(v, w) == c) ++joint;
                    }
                    if (joint >= n_ + m_) return true;
                }
        }
        return false;
    }

    bool is_canonical(int J) {
        perm_.resize(J);
        std::iota(perm_.begin(), perm_.end(), 0);
        rel_.assign(k_ + 1, 0);
        while (std::next_permutation(perm_.begin(), perm_.end())) {
            std::fill(rel_.begin(), rel_.end(), 0);
            int next = 0;
            bool worse = false;
            for (int j = 1; j < J && !worse; ++j)
                for (int i = 0; i < j; ++i) {
                    const Color c = cat(perm_[i], perm_[j]);
                    if (rel_[c] == 0) rel_[c] = ++next;
                    const int rc = rel_[c];
                    const int sc = cat(i, j);
                    if (rc < sc) return false;
                    if (rc > sc) {
                        worse = true;
                        break;
                    }
                }
        }
        return true;
    }

    int N_, k_, n_, m_;
    bool gallai_;
    std::vector<Color> mat_;
    std::vector<std::pair<int, int>> edges_;
    std::atomic<std::uint64_t>* global_nodes_;
    std::uint64_t budget_;

    int collect_depth_ = -1;
    std::vector<std::vector<Color>>* sink_ = nullptr;
    bool found_ = false;
    bool aborted_ = false;
    std::vector<Color> witness_;
    std::uint64_t local_nodes_ = 0;
    std::vector<int> perm_;
    std::vector<int> rel_;
    std::vector<int> deg_;
};

inline std::uint64_t problem_hash(const SearchProblem& p) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(p.k));
    mix(static_cast<std::uint64_t>(p.pattern.n));
    mix(static_cast<std::uint64_t>(p.pattern.m));
    mix(p.gallai_constraint ? 1 : 0);
    mix(static_cast<std::uint64_t>(p.order));
    return h;
}

inline ColoredComplete decode_witness(const SearchProblem& p, const std::vector<Color>& seq) {
    ColoredComplete g(p.order, p.k, 1);
    std::size_t t = 0;
    for (int j = 1; j < p.order; ++j)
        for (int i = 0; i < j; ++i) g.set_color(i, j, seq[t++]);
    return g;
}

// ---- checkpoint byte format (little-endian) --------------------------------
//   magic   8 bytes  "GRSRCHK1"
//   u32     version (1)
//   u64     problem hash over (k, n, m, mode, N)
//   u32 k, u32 n, u32 m, u8 mode, u32 N, u32 split_depth
//   u8      status: 1 = done, 0 = in progress
//   done:        u8 verdict (0 avoider / 1 exhausted), u64 nodes,
//                u32 len, len x u8 witness color sequence (absent if len = 0)
//   in progress: u64 nodes so far, u8 has_best, [u32 len, len x u8 best],
//                u32 count, count x (u32 len, len x u8 pending shard prefix)

inline void put_u32(std::ostream& os, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    os.write(b, 4);
}
inline void put_u64(std::ostream& os, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    os.write(b, 8);
}
inline std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
}
inline std::uint64_t get_u64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}
inline void put_seq(std::ostream& os, const std::vector<Color>& s) {
    put_u32(os, static_cast<std::uint32_t>(s.size()));
    for (Color c : s) os.put(static_cast<char>(c));
}
inline std::vector<Color> get_seq(std::istream& is) {
    const std::uint32_t len = get_u32(is);
    std::vector<Color> s(len);
    for (std::uint32_t i = 0; i < len; ++i) s[i] = static_cast<unsigned char>(is.get());
    return s;
}

struct CheckpointState {
    bool done = false;
    Verdict verdict = Verdict::exhausted;
    std::uint64_t nodes = 0;
    std::optional<std::vector<Color>> best;
    std::vector<std::vector<Color>> pending;
    int split_depth = 0;
};

constexpr char kCheckpointMagic[9] = "GRSRCHK1";

inline void save_checkpoint(const std::string& path, const SearchProblem& p,
                            const CheckpointState& st) {
    std::ofstream os(path + ".tmp", std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("checkpoint: cannot write " + path);
    os.write(kCheckpointMagic, 8);
    put_u32(os, 1);
    put_u64(os, problem_hash(p));
    put_u32(os, static_cast<std::uint32_t>(p.k));
    put_u32(os, static_cast<std::uint32_t>(p.pattern.n));
    put_u32(os, static_cast<std::uint32_t>(p.pattern.m));
    os.put(p.gallai_constraint ? 1 : 0);
    put_u32(os, static_cast<std::uint32_t>(p.order));
    put_u32(os, static_cast<std::uint32_t>(st.split_depth));
    os.put(st.done ? 1 : 0);
    if (st.done) {
        os.put(st.verdict == Verdict::avoider_found ? 0 : 1);
        put_u64(os, st.nodes);
        put_seq(os, st.best ? *st.best : std::vector<Color>{});
    } else {
        put_u64(os, st.nodes);
        os.put(st.best ? 1 : 0);
        if (st.best) put_seq(os, *st.best);
        put_u32(os, static_cast<std::uint32_t>(st.pending.size()));
        for (const auto& pre : st.pending) put_seq(os, pre);
    }
    os.close();
    std::rename((path + ".tmp").c_str(), path.c_str());
}

inline CheckpointState load_checkpoint(const std::string& path, const SearchProblem& p) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("checkpoint: cannot read " + path);
    char magic[8];
    is.read(magic, 8);
    if (!is || std::string(magic, 8) != std::string(kCheckpointMagic, 8))
        throw std::invalid_argument("checkpoint: bad magic");
    if (get_u32(is) != 1) throw std::invalid_argument("checkpoint: unsupported version");
    const std::uint64_t hash = get_u64(is);
    if (hash != problem_hash(p))
        throw std::invalid_argument("checkpoint: problem hash mismatch, refusing to resume");
    get_u32(is);  // k
    get_u32(is);  // n
    get_u32(is);  // m
    is.get();     // mode
    get_u32(is);  // N
    CheckpointState st;
    st.split_depth = static_cast<int>(get_u32(is));
    st.done = is.get() == 1;
    if (st.done) {
        const int verdict = is.get();
        st.verdict = verdict == 0 ? Verdict::avoider_found : Verdict::exhausted;
        st.nodes = get_u64(is);
        auto seq = get_seq(is);
        if (!seq.empty()) st.best = std::move(seq);
    } else {
        st.nodes = get_u64(is);
        if (is.get() == 1) st.best = get_seq(is);
        const std::uint32_t count = get_u32(is);
        for (std::uint32_t i = 0; i < count; ++i) st.pending.push_back(get_seq(is));
    }
    if (!is) throw std::invalid_argument("checkpoint: truncated file");
    return st;
}

}  // namespace detail

/// Decides avoider existence for one (k, pattern, mode, N) instance by
/// exhaustive canonical search. Work is split at a fixed prefix depth into
/// independent shards; every shard runs to completion and the results merge
/// commutatively (exhausted iff all shards exhausted, witness = lex-least
/// found), so the verdict, witness and node count do not depend on the worker
/// count. Budget exhaustion raises budget_exceeded (after saving a resumable
/// checkpoint when a path is configured).
inline SearchOutcome decide(const SearchProblem& p, const SearchOptions& opts = {}) {
    if (p.order < 1) throw std::invalid_argument("decide: order must be >= 1");
    if (p.k < 1) throw std::invalid_argument("decide: k must be >= 1");
    if (!p.gallai_constraint && p.k != 2)
        throw std::invalid_argument("decide: classical Ramsey mode requires k = 2");
    if (opts.node_budget == 0) throw std::invalid_argument("decide: budget must be > 0");
    if (opts.threads < 1) throw std::invalid_argument("decide: threads must be >= 1");

    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    };

    SearchOutcome out;

    // Single monochromatic coloring cases.
    if (p.order == 1 || p.k == 1) {
        out.nodes_explored = 1;
        ColoredComplete mono(p.order, p.k, 1);
        if (p.order >= p.pattern.n + p.pattern.m + 2) {
            out.verdict = Verdict::exhausted;
        } else {
            out.verdict = Verdict::avoider_found;
            out.witness = mono;
        }
        out.wall_seconds = elapsed();
        return out;
    }

    std::atomic<std::uint64_t> global_nodes{0};
    detail::CheckpointState st;
    st.split_depth = std::max(1, std::min(4, p.order - 1));

    bool resumed = false;
    if (!opts.checkpoint_path.empty() && std::ifstream(opts.checkpoint_path).good()) {
        st = detail::load_checkpoint(opts.checkpoint_path, p);
        if (st.done) {
            out.verdict = st.verdict;
            out.nodes_explored = st.nodes;
            if (st.best) out.witness = detail::decode_witness(p, *st.best);
            out.wall_seconds = elapsed();
            return out;
        }
        resumed = true;
    }

    if (!resumed) {
        detail::SearchEngine enumerator(p, &global_nodes, opts.node_budget);
        enumerator.enumerate_prefixes(st.split_depth, &st.pending);
        if (enumerator.aborted()) throw budget_exceeded(global_nodes.load());
        st.nodes = enumerator.local_nodes();
    } else {
        // Budget accounting restarts at the checkpointed total.
        global_nodes.store(st.nodes);
    }

    std::mutex mu;
    std::vector<std::vector<Color>> pending = std::move(st.pending);
    st.pending.clear();
    std::atomic<std::size_t> next{0};
    std::atomic<bool> any_aborted{false};
    std::vector<std::vector<Color>> still_pending;

    auto worker = [&] {
        detail::SearchEngine engine(p, &global_nodes, opts.node_budget);
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= pending.size()) return;
            if (any_aborted.load()) {
                std::lock_guard<std::mutex> lk(mu);
                still_pending.push_back(pending[idx]);
                continue;
            }
            engine.run_shard(pending[idx]);
            std::lock_guard<std::mutex> lk(mu);
            if (engine.aborted()) {
                any_aborted.store(true);
                still_pending.push_back(pending[idx]);
                continue;
            }
            st.nodes += engine.local_nodes();
            if (engine.found() && (!st.best || engine.witness() < *st.best))
                st.best = engine.witness();
        }
    };

    const int nthreads = static_cast<int>(std::min<std::size_t>(
        static_cast<std::size_t>(opts.threads), std::max<std::size_t>(1, pending.size())));
    std::vector<std::thread> pool;
    for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    if (any_aborted.load()) {
        if (!opts.checkpoint_path.empty()) {
            st.pending = std::move(still_pending);
            detail::save_checkpoint(opts.checkpoint_path, p, st);
        }
        throw budget_exceeded(global_nodes.load());
    }

    st.done = true;
    st.verdict = st.best ? Verdict::avoider_found : Verdict::exhausted;
    if (!opts.checkpoint_path.empty()) detail::save_checkpoint(opts.checkpoint_path, p, st);

    out.verdict = st.verdict;
    out.nodes_explored = st.nodes;
    if (st.best) out.witness = detail::decode_witness(p, *st.best);
    out.wall_seconds = elapsed();
    return out;
}

/// Smallest N <= n_max with verdict exhausted (an avoider at N restricts to an
/// avoider at every smaller order, so ascending search with early exit is
/// sound); nullopt when avoiders persist through n_max.
inline std::optional<int> compute_threshold(int k, const StarUnionPattern& pattern,
                                            bool gallai_constraint, int n_max,
                                            const SearchOptions& opts = {}) {
    if (n_max < 2) throw std::invalid_argument("compute_threshold: n_max must be >= 2");
    SearchOptions per_n = opts;
    per_n.checkpoint_path.clear();
    for (int N = 1; N <= n_max; ++N) {
        const SearchOutcome r = decide({k, pattern, gallai_constraint, N}, per_n);
        if (r.verdict == Verdict::exhausted) return N;
    }
    return std::nullopt;
}

}  // namespace gallai
