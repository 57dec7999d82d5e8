#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gallai/coloring.hpp"

namespace gallai {

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text format:
///   gallai-coloring v1
///   order N colors k
///   <N-1 lines; line i holds the colors of edges (i, j) for j = i+1..N>
inline void emit_coloring(std::ostream& os, const ColoredComplete& g) {
    os << "gallai-coloring v1\n";
    os << "order " << g.order() << " colors " << g.num_colors() << "\n";
    for (Vertex i = 0; i + 1 < g.order(); ++i) {
        for (Vertex j = i + 1; j < g.order(); ++j) {
            if (j > i + 1) os << ' ';
            os << g.color_unchecked(i, j);
        }
        os << '\n';
    }
}

inline std::string emit_coloring(const ColoredComplete& g) {
    std::ostringstream os;
    emit_coloring(os, g);
    return os.str();
}

inline ColoredComplete parse_coloring(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "gallai-coloring v1")
        throw parse_error("coloring file: bad or missing header line");
    if (!std::getline(is, line)) throw parse_error("coloring file: missing size line");
    std::istringstream sz(line);
    std::string kw_order, kw_colors;
    int n = 0, k = 0;
    if (!(sz >> kw_order >> n >> kw_colors >> k) || kw_order != "order" ||
        kw_colors != "colors")
        throw parse_error("coloring file: malformed size line");
    std::string extra;
    if (sz >> extra) throw parse_error("coloring file: trailing tokens on size line");
    if (n < 1 || k < 1) throw parse_error("coloring file: order and colors must be >= 1");

    ColoredComplete g(n, k);
    for (Vertex i = 0; i + 1 < n; ++i) {
        if (!std::getline(is, line))
            throw parse_error("coloring file: truncated (expected " +
                              std::to_string(n - 1) + " edge lines)");
        std::istringstream row(line);
        for (Vertex j = i + 1; j < n; ++j) {
            int c = 0;
            if (!(row >> c))
                throw parse_error("coloring file: short edge line for vertex " +
                                  std::to_string(i));
            if (c < 1 || c > k)
                throw parse_error("coloring file: color out of range on edge (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
            g.set_color(i, j, c);
        }
        std::string tail;
        if (row >> tail)
            throw parse_error("coloring file: extra tokens on edge line for vertex " +
                              std::to_string(i));
    }
    while (std::getline(is, line))
        if (!line.empty()) throw parse_error("coloring file: trailing content");
    return g;
}

inline ColoredComplete parse_coloring(const std::string& text) {
    std::istringstream is(text);
    return parse_coloring(is);
}

}  // namespace gallai
