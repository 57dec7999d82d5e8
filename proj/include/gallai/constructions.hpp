#pragma once

#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gallai/coloring.hpp"

namespace gallai {

enum class WitnessKind { pentagon, small_m, equal, general, apex_extension };

enum class VerifyStatus { unchecked, pass, fail };

inline const char* to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::pentagon: return "pentagon";
        case WitnessKind::small_m: return "small-m";
        case WitnessKind::equal: return "equal";
        case WitnessKind::general: return "general";
        case WitnessKind::apex_extension: return "apex-extension";
    }
    return "?";
}

/// A lower-bound witness: a coloring plus the provenance it was built from and
/// the gr/R value it certifies (order + 1). `verified == pass` means both
/// detectors came back empty and the order matches the claim.
struct Witness {
    ColoredComplete coloring;
    WitnessKind kind;
    int n = 0;
    int m = 0;
    int k = 0;
    std::array<int, 5> part_sizes{0, 0, 0, 0, 0};
    long claimed_bound = 0;
    VerifyStatus verified = VerifyStatus::unchecked;
    std::optional<std::array<Vertex, 3>> rainbow_certificate;
    std::optional<StarUnionEmbedding> star_certificate;
    bool order_ok = true;
};

namespace detail {

/// Blow-up of the 2-colored K_5 made of two complementary 5-cycles.
/// Tolerates empty parts so degenerate small parameters still build.
inline ColoredComplete blowup5(const std::array<int, 5>& sizes, Color inside, Color a,
                               Color b, int num_colors) {
    const int order = std::accumulate(sizes.begin(), sizes.end(), 0);
    if (order < 1)
        throw std::invalid_argument("blowup5: total order must be >= 1");
    ColoredComplete g(order, num_colors, inside);
    std::array<int, 5> start{};
    int acc = 0;
    for (int i = 0; i < 5; ++i) {
        start[i] = acc;
        acc += sizes[i];
    }
    auto part_of = [&](Vertex v) {
        for (int i = 4; i >= 0; --i)
            if (v >= start[i]) return i;
        return 0;
    };
    for (Vertex u = 0; u < order; ++u)
        for (Vertex v = u + 1; v < order; ++v) {
            const int pu = part_of(u), pv = part_of(v);
            if (pu == pv) continue;  // fill color already in place
            const int d = (pv - pu + 5) % 5;
            g.set_color(u, v, (d == 1 || d == 4) ? a : b);
        }
    return g;
}

}  // namespace detail

/// Pentagon blow-up: parts P_1..P_5 internally in `inside_color`, cycle-adjacent
/// parts (P_i, P_{i+1 mod 5}) joined in color a, diagonal pairs in color b.
inline ColoredComplete pentagon_blowup(const std::array<int, 5>& sizes, Color inside_color,
                                       Color a, Color b, int num_colors = 0) {
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("pentagon_blowup: part sizes must be >= 1");
    if (inside_color == a || inside_color == b || a == b)
        throw std::invalid_argument("pentagon_blowup: colors must be distinct");
    if (num_colors == 0) num_colors = std::max({inside_color, a, b});
    return detail::blowup5(sizes, inside_color, a, b, num_colors);
}

/// Adds one apex vertex per listed color, in order; each apex sees everything
/// before it (including earlier apexes) in its own color. Every new color must
/// be fresh: absent from the existing edges and pairwise distinct.
inline ColoredComplete extend_with_apex(const ColoredComplete& g,
                                        const std::vector<Color>& new_colors) {
    if (new_colors.empty()) return g;
    int max_c = g.num_colors();
    for (std::size_t i = 0; i < new_colors.size(); ++i) {
        const Color c = new_colors[i];
        if (c < 1) throw std::invalid_argument("extend_with_apex: color out of range");
        max_c = std::max(max_c, c);
        for (std::size_t j = i + 1; j < new_colors.size(); ++j)
            if (new_colors[j] == c)
                throw std::invalid_argument("extend_with_apex: repeated apex color");
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v)
                if (g.color_unchecked(u, v) == c)
                    throw std::invalid_argument("extend_with_apex: color already on edges");
    }
    const int old_n = g.order();
    const int new_n = old_n + static_cast<int>(new_colors.size());
    ColoredComplete out(new_n, max_c, 1);
    for (Vertex u = 0; u < old_n; ++u)
        for (Vertex v = u + 1; v < old_n; ++v) out.set_color(u, v, g.color_unchecked(u, v));
    for (std::size_t i = 0; i < new_colors.size(); ++i) {
        const Vertex apex = old_n + static_cast<int>(i);
        for (Vertex u = 0; u < apex; ++u) out.set_color(u, apex, new_colors[i]);
    }
    return out;
}

/// Runs both detectors plus the order check and stamps the verdict (with the
/// offending certificate, if any) onto the witness.
inline Witness verify_witness(Witness w) {
    w.rainbow_certificate = find_rainbow_triangle(w.coloring);
    w.star_certificate = find_mono_star_union(w.coloring, StarUnionPattern(w.n, w.m));
    w.order_ok = w.coloring.order() + 1 == w.claimed_bound;
    w.verified = (!w.rainbow_certificate && !w.star_certificate && w.order_ok)
                     ? VerifyStatus::pass
                     : VerifyStatus::fail;
    return w;
}

namespace detail {

inline std::vector<Color> apex_colors(int k) {
    std::vector<Color> cs;
    for (Color c = 4; c <= k; ++c) cs.push_back(c);
    return cs;
}

}  // namespace detail

/// Witness for the small-m regime: a pentagon blow-up of color-1 cliques of
/// size ~ n/2 (one K_{n/2} and four K_{(n-2)/2} when n is even, five
/// K_{(n-1)/2} when n is odd), between-colors 2 and 3, then one apex vertex
/// per color 4..k. Certifies the small-m bound at (n, m, k).
inline Witness build_small_m_lower(int n, int m, int k) {
    if (k < 3) throw std::invalid_argument("build_small_m_lower: k must be >= 3");
    if (n < 2) throw std::invalid_argument("build_small_m_lower: n must be >= 2");
    if (m < 1 || m > n) throw std::invalid_argument("build_small_m_lower: need 1 <= m <= n");
    std::array<int, 5> sizes{};
    if (n % 2 == 1)
        sizes = {(n - 1) / 2, (n - 1) / 2, (n - 1) / 2, (n - 1) / 2, (n - 1) / 2};
    else
        sizes = {n / 2, (n - 2) / 2, (n - 2) / 2, (n - 2) / 2, (n - 2) / 2};

    Witness w{detail::blowup5(sizes, 1, 2, 3, k), WitnessKind::small_m};
    w.n = n;
    w.m = m;
    w.k = k;
    w.part_sizes = sizes;
    w.coloring = extend_with_apex(w.coloring, detail::apex_colors(k));
    w.claimed_bound = (n % 2 == 1 ? (5L * n - 3) / 2 : (5L * n - 6) / 2) + k - 3;
    return verify_witness(std::move(w));
}

/// Witness for the equal-stars bound at odd n: a circulant decomposition of
/// K_{2n-1} into two (n-1)-regular graphs (distance classes 1..(n-1)/2 in
/// color 1, the rest in color 2), a color-1 K_n joined across in color 3, two
/// apexes v (color 1) and w (color 2), and new-color apexes up to k. Even n is
/// rejected: an (n-1)-regular graph on 2n-1 vertices would have an odd degree
/// sum.
inline Witness build_equal_lower(int n, int k) {
    if (k < 3) throw std::invalid_argument("build_equal_lower: k must be >= 3");
    if (n < 1) throw std::invalid_argument("build_equal_lower: n must be >= 1");
    if (n % 2 == 0)
        throw std::invalid_argument(
            "build_equal_lower: even n unsupported (parity obstruction: no "
            "(n-1)-regular decomposition of K_{2n-1} exists)");

    const int f1 = 2 * n - 1;
    const int order3 = 3 * n + 1;  // F_1 + K_n + {v, w}
    ColoredComplete g(order3, std::max(3, k), 1);
    // F_1: circulant on Z_{2n-1}.
    for (Vertex i = 0; i < f1; ++i)
        for (Vertex j = i + 1; j < f1; ++j) {
            const int d = std::min(j - i, f1 - (j - i));
            g.set_color(i, j, d <= (n - 1) / 2 ? 1 : 2);
        }
    // K_n in color 1, joined to F_1 in color 3.
    for (Vertex i = f1; i < f1 + n; ++i)
        for (Vertex j = i + 1; j < f1 + n; ++j) g.set_color(i, j, 1);
    for (Vertex i = 0; i < f1; ++i)
        for (Vertex j = f1; j < f1 + n; ++j) g.set_color(i, j, 3);
    // Apexes v (color 1) and w (color 2).
    const Vertex v = f1 + n, w_apex = f1 + n + 1;
    for (Vertex u = 0; u < v; ++u) g.set_color(u, v, 1);
    for (Vertex u = 0; u < w_apex; ++u) g.set_color(u, w_apex, 2);

    Witness w{extend_with_apex(g, detail::apex_colors(k)), WitnessKind::equal};
    w.n = n;
    w.m = n;
    w.k = k;
    w.claimed_bound = 3L * n + k - 1;
    return verify_witness(std::move(w));
}

/// Witness for the general lower bound: pentagon blow-up with four parts of
/// size ~ n/2 and one K_q (three K_{(n-2)/2}, one K_{n/2} and one K_q when n
/// is even), all internal edges color 1, between-colors 2 and 3, apexes 4..k.
/// The K_q sits at position 5 of the pentagon cycle.
///
/// Starts at q = m; that fails self-verification for a middle band of m
/// (roughly (n+3)/2 <= m <= n-2), where a vertex next to the K_m reaches
/// between-degree ~ n/2 + m and the pattern appears on a cycle edge. In that
/// band q is reduced to the largest verifiable value (feasibility is monotone
/// in q), so the claimed bound drops below 2n + m + k - 4 accordingly. The
/// returned witness is always self-verified.
inline Witness build_general_lower(int n, int m, int k) {
    if (k < 3) throw std::invalid_argument("build_general_lower: k must be >= 3");
    if (m < 1 || m > n) throw std::invalid_argument("build_general_lower: need 1 <= m <= n");
    for (int q = m; q >= 1; --q) {
        std::array<int, 5> sizes{};
        if (n % 2 == 1)
            sizes = {(n - 1) / 2, (n - 1) / 2, (n - 1) / 2, (n - 1) / 2, q};
        else
            sizes = {(n - 2) / 2, (n - 2) / 2, (n - 2) / 2, n / 2, q};

        Witness w{detail::blowup5(sizes, 1, 2, 3, k), WitnessKind::general};
        w.n = n;
        w.m = m;
        w.k = k;
        w.part_sizes = sizes;
        w.coloring = extend_with_apex(w.coloring, detail::apex_colors(k));
        w.claimed_bound = 2L * n + q + k - (n % 2 == 1 ? 4 : 5);
        w = verify_witness(std::move(w));
        if (w.verified == VerifyStatus::pass) return w;
    }
    throw std::logic_error("build_general_lower: no verifiable part size");
}

}  // namespace gallai
