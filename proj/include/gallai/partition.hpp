#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gallai/coloring.hpp"

namespace gallai {

/// A Gallai partition: >= 2 disjoint nonempty parts covering all vertices,
/// one color between each pair of parts, at most two colors overall between
/// parts. Parts are sorted internally and ordered by smallest vertex.
struct GallaiPartition {
    std::vector<std::vector<Vertex>> parts;
    std::vector<std::vector<Color>> between;  // t x t, diagonal 0
    std::vector<Color> palette;               // distinct between-part colors, ascending

    int num_parts() const { return static_cast<int>(parts.size()); }
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);  // keep the smaller index as root
        parent_[b] = a;
        return true;
    }

private:
    std::vector<int> parent_;
};

inline std::vector<std::vector<Vertex>> groups_of(UnionFind& uf, int n) {
    std::vector<std::vector<Vertex>> by_root(n);
    for (Vertex v = 0; v < n; ++v) by_root[uf.find(v)].push_back(v);
    std::vector<std::vector<Vertex>> parts;
    for (auto& grp : by_root)
        if (!grp.empty()) parts.push_back(std::move(grp));
    return parts;
}

}  // namespace detail

/// Checks all GallaiPartition invariants edge-by-edge. Malformed partitions
/// (overlapping parts or uncovered vertices) are input errors; a well-formed
/// partition that violates the color invariants just returns false.
inline bool verify_partition(const ColoredComplete& g, const GallaiPartition& p) {
    const int N = g.order();
    std::vector<int> owner(N, -1);
    for (int i = 0; i < p.num_parts(); ++i) {
        if (p.parts[i].empty())
            throw std::invalid_argument("verify_partition: empty part");
        for (Vertex v : p.parts[i]) {
            if (v < 0 || v >= N || owner[v] != -1)
                throw std::invalid_argument("verify_partition: parts overlap or leave gaps");
            owner[v] = i;
        }
    }
    for (Vertex v = 0; v < N; ++v)
        if (owner[v] == -1)
            throw std::invalid_argument("verify_partition: parts overlap or leave gaps");

    if (p.num_parts() < 2) return false;
    if (static_cast<int>(p.between.size()) != p.num_parts()) return false;

    std::set<Color> used;
    for (int i = 0; i < p.num_parts(); ++i) {
        if (static_cast<int>(p.between[i].size()) != p.num_parts()) return false;
        for (int j = i + 1; j < p.num_parts(); ++j) {
            const Color c = p.between[i][j];
            if (c != p.between[j][i]) return false;
            for (Vertex u : p.parts[i])
                for (Vertex v : p.parts[j])
                    if (g.color_unchecked(u, v) != c) return false;
            used.insert(c);
        }
    }
    if (used.size() > 2) return false;
    std::vector<Color> pal(used.begin(), used.end());
    return pal == p.palette;
}

/// Gallai-partition extraction.
///
/// For each candidate palette {a, b} (singletons first, then pairs, ascending):
/// seed parts as the connected components of the edges colored outside the
/// palette, then repeatedly merge any two parts whose between-edge set is not
/// monochromatic, to a fixpoint. A palette is accepted when >= 2 parts survive;
/// among accepted palettes the one with the fewest parts wins (first palette in
/// scan order on ties). On a rainbow-free coloring the seed components always
/// refine some Gallai partition for the right palette, so extraction cannot
/// collapse to a single part and the search always succeeds. The result need
/// not have the globally minimal number of parts.
inline std::optional<GallaiPartition> find_gallai_partition(const ColoredComplete& g) {
    const int N = g.order();
    const int k = g.num_colors();
    if (N < 2)
        throw std::invalid_argument("find_gallai_partition: order must be >= 2");

    std::optional<GallaiPartition> best;

    for (Color a = 1; a <= k; ++a) {
        for (Color b = a; b <= k; ++b) {
            detail::UnionFind uf(N);
            for (Vertex i = 0; i < N; ++i)
                for (Vertex j = i + 1; j < N; ++j) {
                    const Color c = g.color_unchecked(i, j);
                    if (c != a && c != b) uf.unite(i, j);
                }
            auto parts = detail::groups_of(uf, N);

            // Merge bichromatic pairs to a fixpoint.
            bool changed = true;
            while (changed && parts.size() >= 2) {
                changed = false;
                for (std::size_t i = 0; i < parts.size() && !changed; ++i) {
                    for (std::size_t j = i + 1; j < parts.size() && !changed; ++j) {
                        const Color first = g.color_unchecked(parts[i][0], parts[j][0]);
                        bool mono = true;
                        for (Vertex u : parts[i]) {
                            for (Vertex v : parts[j])
                                if (g.color_unchecked(u, v) != first) {
                                    mono = false;
                                    break;
                                }
                            if (!mono) break;
                        }
                        if (!mono) {
                            uf.unite(parts[i][0], parts[j][0]);
                            parts = detail::groups_of(uf, N);
                            changed = true;
                        }
                    }
                }
            }

            if (parts.size() < 2) continue;
            if (best && best->parts.size() <= parts.size()) continue;

            GallaiPartition p;
            p.parts = parts;
            const int t = p.num_parts();
            p.between.assign(t, std::vector<Color>(t, 0));
            std::set<Color> used;
            for (int i = 0; i < t; ++i)
                for (int j = i + 1; j < t; ++j) {
                    const Color c = g.color_unchecked(p.parts[i][0], p.parts[j][0]);
                    p.between[i][j] = p.between[j][i] = c;
                    used.insert(c);
                }
            p.palette.assign(used.begin(), used.end());
            best = std::move(p);
        }
    }
    return best;
}

/// Complete graph on the parts, colored by the between-part colors. Keeps the
/// original color indices, so at most 2 of them actually occur.
inline ColoredComplete reduced_graph(const ColoredComplete& g, const GallaiPartition& p) {
    if (!verify_partition(g, p))
        throw std::invalid_argument("reduced_graph: invalid Gallai partition");
    const int t = p.num_parts();
    ColoredComplete r(t, g.num_colors(), p.num_parts() >= 2 ? p.between[0][1] : 1);
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) r.set_color(i, j, p.between[i][j]);
    return r;
}

namespace detail {

inline void fill_gallai(ColoredComplete& g, const std::vector<Vertex>& verts,
                        std::mt19937_64& rng, int k, int depth) {
    const int s = static_cast<int>(verts.size());
    if (s <= 1) return;
    auto rand_color = [&] { return static_cast<Color>(rng() % k) + 1; };
    if (depth <= 0 || s == 2) {
        const Color c = rand_color();
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j) g.set_color(verts[i], verts[j], c);
        return;
    }
    // Two base colors (equal when k == 1), a random base K_t, recurse per part.
    Color a = rand_color();
    Color b = rand_color();
    const int t = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(s, 5) - 1));
    std::vector<std::vector<Vertex>> parts(t);
    for (int i = 0; i < t; ++i) parts[i].push_back(verts[i]);  // keep every part nonempty
    for (int i = t; i < s; ++i) parts[rng() % t].push_back(verts[i]);
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            const Color c = (rng() & 1) ? a : b;
            for (Vertex u : parts[i])
                for (Vertex v : parts[j]) g.set_color(u, v, c);
        }
    for (auto& part : parts) fill_gallai(g, part, rng, k, depth - 1);
}

}  // namespace detail

/// Random rainbow-triangle-free coloring, built by recursive substitution into
/// randomly 2-colored base graphs. Deterministic in the seed.
inline ColoredComplete random_gallai(std::uint64_t seed, int N, int k, int depth = 10) {
    ColoredComplete g(N, k);
    std::mt19937_64 rng(seed);
    std::vector<Vertex> all(N);
    std::iota(all.begin(), all.end(), 0);
    detail::fill_gallai(g, all, rng, k, depth);
    return g;
}

/// Report for the five-part stability check: given (n, r), did the coloring
/// satisfy the no-monochromatic-K(1,n)-between-parts hypothesis, and if so,
/// does the five-part conclusion hold.
struct StabilityReport {
    int n = 0;
    int r = 0;
    bool holds_hypothesis = false;
    int num_parts = 0;
    int min_part_size = 0;
    int min_between_degree_per_color = 0;
    bool conclusion_holds = false;   // meaningful when holds_hypothesis
    bool implication_ok = true;      // hypothesis => conclusion
    std::vector<std::string> warnings;
};

/// Extracts a Gallai partition and evaluates the stability statement for
/// parameters (n, r). Precondition violations (wrong order, r out of range)
/// are reported as warnings so that near-miss experiments stay possible.
inline StabilityReport check_star_stability(const ColoredComplete& g, int n, int r) {
    auto part = find_gallai_partition(g);
    if (!part)
        throw std::invalid_argument(
            "check_star_stability: no Gallai partition (rainbow triangle present?)");

    StabilityReport rep;
    rep.n = n;
    rep.r = r;
    if (n < 22) rep.warnings.push_back("n < 22");
    if (r < 4 || 4 * r > n + 4) rep.warnings.push_back("r outside [4, (n+4)/4]");
    if (2 * g.order() != 5 * n - r)
        rep.warnings.push_back("order != (5n - r)/2");

    const int N = g.order();
    const int t = part->num_parts();
    std::vector<int> owner(N);
    for (int i = 0; i < t; ++i)
        for (Vertex v : part->parts[i]) owner[v] = i;

    // Between-part degree of every vertex in each palette color.
    const auto& pal = part->palette;
    std::vector<std::vector<int>> bdeg(pal.size(), std::vector<int>(N, 0));
    for (Vertex u = 0; u < N; ++u)
        for (Vertex v = 0; v < N; ++v) {
            if (u == v || owner[u] == owner[v]) continue;
            const Color c = g.color_unchecked(u, v);
            for (std::size_t ci = 0; ci < pal.size(); ++ci)
                if (pal[ci] == c) ++bdeg[ci][u];
        }

    int max_bdeg = 0;
    for (const auto& row : bdeg)
        for (int d : row) max_bdeg = std::max(max_bdeg, d);
    rep.holds_hypothesis = max_bdeg < n;

    rep.num_parts = t;
    rep.min_part_size = N;
    for (const auto& p : part->parts)
        rep.min_part_size = std::min(rep.min_part_size, static_cast<int>(p.size()));

    // Per-vertex minimum over the two palette colors; a missing second palette
    // color counts as degree 0.
    int min_two_color = N;
    for (Vertex v = 0; v < N; ++v) {
        int worst = N;
        for (std::size_t ci = 0; ci < 2; ++ci) {
            const int d = ci < bdeg.size() ? bdeg[ci][v] : 0;
            worst = std::min(worst, d);
        }
        min_two_color = std::min(min_two_color, worst);
    }
    rep.min_between_degree_per_color = min_two_color;

    const int size_floor = (n - r + 3 + 1) / 2;  // ceil((n-r+3)/2)
    rep.conclusion_holds = t == 5 && rep.min_part_size >= size_floor &&
                           min_two_color >= n - r + 3;
    rep.implication_ok = !rep.holds_hypothesis || rep.conclusion_holds;
    return rep;
}

}  // namespace gallai
