#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gallai {

using Vertex = int;
using Color = int;  // 1-based, matching the usual color 1 / color 2 / color 3 narration

/// A k-edge-colored complete graph on N vertices. Colors are stored in a full
/// N x N matrix (diagonal unused) so per-color neighborhoods are cheap to
/// enumerate. Treat instances as immutable once built; all detectors below are
/// pure functions and safe to run concurrently on a shared graph.
class ColoredComplete {
public:
    ColoredComplete(int order, int num_colors, Color fill = 1)
        : n_(order), k_(num_colors) {
        if (order < 1)
            throw std::invalid_argument("ColoredComplete: order must be >= 1");
        if (num_colors < 1)
            throw std::invalid_argument("ColoredComplete: num_colors must be >= 1");
        if (fill < 1 || fill > num_colors)
            throw std::invalid_argument("ColoredComplete: fill color out of range");
        color_.assign(static_cast<std::size_t>(n_) * n_, fill);
    }

    int order() const { return n_; }
    int num_colors() const { return k_; }

    Color color(Vertex i, Vertex j) const {
        check_vertex(i);
        check_vertex(j);
        if (i == j)
            throw std::invalid_argument("ColoredComplete: no self-loops");
        return color_[static_cast<std::size_t>(i) * n_ + j];
    }

    void set_color(Vertex i, Vertex j, Color c) {
        check_vertex(i);
        check_vertex(j);
        if (i == j)
            throw std::invalid_argument("ColoredComplete: no self-loops");
        if (c < 1 || c > k_)
            throw std::invalid_argument("ColoredComplete: color out of range");
        color_[static_cast<std::size_t>(i) * n_ + j] = c;
        color_[static_cast<std::size_t>(j) * n_ + i] = c;
    }

    /// Unchecked read for hot loops; caller guarantees i != j in range.
    Color color_unchecked(Vertex i, Vertex j) const {
        return color_[static_cast<std::size_t>(i) * n_ + j];
    }

    /// N_c(v): vertices joined to v by an edge of color c, ascending.
    std::vector<Vertex> neighbors(Vertex v, Color c) const {
        check_vertex(v);
        check_color(c);
        std::vector<Vertex> out;
        for (Vertex u = 0; u < n_; ++u)
            if (u != v && color_unchecked(v, u) == c) out.push_back(u);
        return out;
    }

    bool operator==(const ColoredComplete& other) const = default;

private:
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("ColoredComplete: vertex out of range");
    }
    void check_color(Color c) const {
        if (c < 1 || c > k_)
            throw std::invalid_argument("ColoredComplete: color out of range");
    }

    int n_;
    int k_;
    std::vector<Color> color_;
};

/// The target K(1,n) u K(1,m): two vertex-disjoint stars, all n+m edges in one
/// color. Normalized so n >= m.
struct StarUnionPattern {
    int n;
    int m;

    StarUnionPattern(int a, int b) : n(std::max(a, b)), m(std::min(a, b)) {
        if (m < 1)
            throw std::invalid_argument("StarUnionPattern: star sizes must be >= 1");
    }
};

/// Certificate for a monochromatic star union: centers u, v with disjoint leaf
/// sets A (|A| = n at u) and B (|B| = m at v), every star edge colored `color`.
struct StarUnionEmbedding {
    Color color = 0;
    Vertex center_a = -1;
    Vertex center_b = -1;
    std::vector<Vertex> leaves_a;
    std::vector<Vertex> leaves_b;
};

inline int color_degree(const ColoredComplete& g, Vertex v, Color c) {
    if (v < 0 || v >= g.order())
        throw std::invalid_argument("color_degree: vertex out of range");
    if (c < 1 || c > g.num_colors())
        throw std::invalid_argument("color_degree: color out of range");
    int deg = 0;
    for (Vertex u = 0; u < g.order(); ++u)
        if (u != v && g.color_unchecked(v, u) == c) ++deg;
    return deg;
}

namespace detail {

/// Per-color neighborhood bitsets: row(c, v) is a words-long mask of N_c(v).
struct ColorMasks {
    int order;
    int words;
    std::vector<std::uint64_t> bits;  // [(c-1) * order + v] * words

    ColorMasks(const ColoredComplete& g)
        : order(g.order()), words((g.order() + 63) / 64) {
        bits.assign(static_cast<std::size_t>(g.num_colors()) * order * words, 0);
        for (Vertex u = 0; u < order; ++u)
            for (Vertex v = u + 1; v < order; ++v) {
                const Color c = g.color_unchecked(u, v);
                row(c, u)[v >> 6] |= 1ULL << (v & 63);
                row(c, v)[u >> 6] |= 1ULL << (u & 63);
            }
    }

    std::uint64_t* row(Color c, Vertex v) {
        return bits.data() + (static_cast<std::size_t>(c - 1) * order + v) * words;
    }
    const std::uint64_t* row(Color c, Vertex v) const {
        return bits.data() + (static_cast<std::size_t>(c - 1) * order + v) * words;
    }
};

inline int popcount_row(const std::uint64_t* row, int words) {
    int total = 0;
    for (int w = 0; w < words; ++w) total += __builtin_popcountll(row[w]);
    return total;
}

}  // namespace detail

/// Lexicographically first triple {x < y < z} whose three edges carry three
/// distinct colors, or nullopt if the coloring is a Gallai coloring.
///
/// For each pair (x, y) the eligible third vertices are those avoiding the
/// pair's color at both ends and disagreeing with each other, computed as one
/// bitmask pass per pair.
inline std::optional<std::array<Vertex, 3>> find_rainbow_triangle(const ColoredComplete& g) {
    const int n = g.order();
    const int k = g.num_colors();
    if (n < 3 || k < 3) return std::nullopt;
    const detail::ColorMasks masks(g);
    const int words = masks.words;
    std::vector<std::uint64_t> cand(words);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n - 1; ++y) {
            const Color cxy = g.color_unchecked(x, y);
            const std::uint64_t* bx = masks.row(cxy, x);
            const std::uint64_t* by = masks.row(cxy, y);
            for (int w = 0; w < words; ++w) cand[w] = ~(bx[w] | by[w]);
            for (Color c = 1; c <= k; ++c) {
                const std::uint64_t* rx = masks.row(c, x);
                const std::uint64_t* ry = masks.row(c, y);
                for (int w = 0; w < words; ++w) cand[w] &= ~(rx[w] & ry[w]);
            }
            // Restrict to z > y (any rainbow triangle is seen from its two
            // smallest vertices) and to real vertices.
            for (int w = 0; w < (y + 1) >> 6; ++w) cand[w] = 0;
            cand[(y + 1) >> 6] &= ~0ULL << ((y + 1) & 63);
            if (n & 63) cand[words - 1] &= (1ULL << (n & 63)) - 1;
            for (int w = 0; w < words; ++w)
                if (cand[w]) {
                    const Vertex z = 64 * w + __builtin_ctzll(cand[w]);
                    return std::array<Vertex, 3>{x, y, z};
                }
        }
    return std::nullopt;
}

/// Monochromatic K(1,n) u K(1,m) detector.
///
/// Existence criterion per color c and ordered center pair (u, v):
///   |N_c(u) \ {v}| >= n,  |N_c(v) \ {u}| >= m,  |(N_c(u) u N_c(v)) \ {u,v}| >= n+m.
/// Leaves are assigned private-neighbors-first, which always succeeds when the
/// three inequalities hold (and they are necessary, since A u B u {u} subset
/// N_c(u) u N_c(v) etc.). Scans colors, then u, then v ascending, so the
/// returned certificate is stable.
///
/// `restrict_to` limits the scan to a single color (0 = all colors).
inline std::optional<StarUnionEmbedding> find_mono_star_union(const ColoredComplete& g,
                                                              const StarUnionPattern& p,
                                                              Color restrict_to = 0) {
    const int N = g.order();
    const int k = g.num_colors();
    const Color c_lo = restrict_to == 0 ? 1 : restrict_to;
    const Color c_hi = restrict_to == 0 ? k : restrict_to;
    if (restrict_to != 0 && (restrict_to < 1 || restrict_to > k))
        throw std::invalid_argument("find_mono_star_union: color out of range");

    const detail::ColorMasks masks(g);
    const int words = masks.words;
    std::vector<int> deg(static_cast<std::size_t>(N), 0);
    for (Color c = c_lo; c <= c_hi; ++c) {
        for (Vertex v = 0; v < N; ++v) deg[v] = detail::popcount_row(masks.row(c, v), words);
        for (Vertex u = 0; u < N; ++u) {
            if (deg[u] < p.n) continue;
            const std::uint64_t* bu = masks.row(c, u);
            for (Vertex v = 0; v < N; ++v) {
                if (v == u) continue;
                const bool uv = g.color_unchecked(u, v) == c;
                const int du = deg[u] - (uv ? 1 : 0);  // |N_c(u) \ {v}|
                const int dv = deg[v] - (uv ? 1 : 0);  // |N_c(v) \ {u}|
                if (du < p.n || dv < p.m) continue;
                const std::uint64_t* bv = masks.row(c, v);
                int joint = 0;
                for (int w = 0; w < words; ++w)
                    joint += __builtin_popcountll(bu[w] | bv[w]);
                // u, v themselves appear in the union exactly when uv holds.
                joint -= uv ? 2 : 0;
                if (joint < p.n + p.m) continue;

                StarUnionEmbedding e;
                e.color = c;
                e.center_a = u;
                e.center_b = v;
                // A: private neighbors of u first, then shared, ascending.
                for (Vertex w = 0; w < N && static_cast<int>(e.leaves_a.size()) < p.n; ++w) {
                    if (w == u || w == v) continue;
                    if (g.color_unchecked(u, w) == c && g.color_unchecked(v, w) != c)
                        e.leaves_a.push_back(w);
                }
                for (Vertex w = 0; w < N && static_cast<int>(e.leaves_a.size()) < p.n; ++w) {
                    if (w == u || w == v) continue;
                    if (g.color_unchecked(u, w) == c && g.color_unchecked(v, w) == c)
                        e.leaves_a.push_back(w);
                }
                // B: anything left in N_c(v), ascending.
                for (Vertex w = 0; w < N && static_cast<int>(e.leaves_b.size()) < p.m; ++w) {
                    if (w == u || w == v) continue;
                    if (g.color_unchecked(v, w) != c) continue;
                    if (std::find(e.leaves_a.begin(), e.leaves_a.end(), w) == e.leaves_a.end())
                        e.leaves_b.push_back(w);
                }
                std::sort(e.leaves_a.begin(), e.leaves_a.end());
                std::sort(e.leaves_b.begin(), e.leaves_b.end());
                return e;
            }
        }
    }
    return std::nullopt;
}

/// Re-check an embedding edge-by-edge against the coloring.
inline bool check_embedding(const ColoredComplete& g, const StarUnionPattern& p,
                            const StarUnionEmbedding& e) {
    const int N = g.order();
    auto in_range = [&](Vertex v) { return v >= 0 && v < N; };
    if (!in_range(e.center_a) || !in_range(e.center_b) || e.center_a == e.center_b)
        return false;
    if (static_cast<int>(e.leaves_a.size()) != p.n) return false;
    if (static_cast<int>(e.leaves_b.size()) != p.m) return false;
    std::vector<Vertex> all = e.leaves_a;
    all.insert(all.end(), e.leaves_b.begin(), e.leaves_b.end());
    all.push_back(e.center_a);
    all.push_back(e.center_b);
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    for (Vertex a : e.leaves_a)
        if (!in_range(a) || g.color(e.center_a, a) != e.color) return false;
    for (Vertex b : e.leaves_b)
        if (!in_range(b) || g.color(e.center_b, b) != e.color) return false;
    return true;
}

/// Color maximizing deg_c(v) with its degree; ties go to the smallest color.
inline std::pair<Color, int> max_mono_star(const ColoredComplete& g, Vertex v) {
    if (g.order() < 2)
        throw std::invalid_argument("max_mono_star: order must be >= 2");
    if (v < 0 || v >= g.order())
        throw std::invalid_argument("max_mono_star: vertex out of range");
    Color best_c = 1;
    int best = -1;
    for (Color c = 1; c <= g.num_colors(); ++c) {
        const int d = color_degree(g, v, c);
        if (d > best) {
            best = d;
            best_c = c;
        }
    }
    return {best_c, best};
}

}  // namespace gallai
