#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace gallai {

/// Uniform return shape for the closed-form results. Guards are advisory: a
/// violated guard never suppresses the computation, it is just reported, so
/// the formulas can be probed outside their proven parameter ranges.
struct FormulaResult {
    enum class Kind { exact, bounds };

    Kind kind = Kind::exact;
    long lower = 0;
    long upper = 0;
    std::vector<std::string> guard_violations;
    std::vector<std::string> notes;

    long value() const {
        if (kind != Kind::exact)
            throw std::logic_error("FormulaResult: bounds result has no single value");
        return lower;
    }
    bool guards_satisfied() const { return guard_violations.empty(); }
};

namespace detail {

inline void guard(FormulaResult& r, bool ok, const std::string& name) {
    if (!ok) r.guard_violations.push_back(name);
}

}  // namespace detail

/// R(K_{1,n} u K_{1,m}) = max{n + 2m, 2n + 1, n + m + 3}, for n >= m >= 1.
/// Inputs with m > n are swapped with a notice.
inline FormulaResult ramsey_union_stars(int n, int m) {
    FormulaResult r;
    if (m > n) {
        std::swap(n, m);
        r.notes.push_back("inputs swapped so that n >= m");
    }
    if (m < 1) throw std::invalid_argument("ramsey_union_stars: need m >= 1");
    r.lower = r.upper = std::max({static_cast<long>(n) + 2 * m, 2L * n + 1,
                                  static_cast<long>(n) + m + 3});
    return r;
}

/// gr_k(K_3 : K_{1,m}) = (5m - 6)/2 for even m, (5m - 3)/2 for odd m.
inline FormulaResult gr_single_star(int k, int m) {
    FormulaResult r;
    detail::guard(r, m >= 2, "m >= 2");
    detail::guard(r, k >= 2, "k >= 2");
    r.lower = r.upper = m % 2 == 0 ? (5L * m - 6) / 2 : (5L * m - 3) / 2;
    return r;
}

/// gr_k(K_3 : K_{1,n} u K_{1,m}) in the small-m regime:
/// (5n - 6)/2 + k - 3 for even n, (5n - 3)/2 + k - 3 for odd n.
inline FormulaResult gr_small_m(int k, int n, int m) {
    FormulaResult r;
    detail::guard(r, n >= 22, "n >= 22");
    detail::guard(r, m >= 5, "m >= 5");
    detail::guard(r, 6 * m <= n - 8, "m <= (n-8)/6");
    detail::guard(r, k >= 3, "k >= 3");
    r.lower = r.upper = (n % 2 == 0 ? (5L * n - 6) / 2 : (5L * n - 3) / 2) + k - 3;
    return r;
}

/// gr_k(K_3 : K_{1,n} u K_{1,n}) = 3n + k - 1.
inline FormulaResult gr_equal(int k, int n) {
    if (n < 1) throw std::invalid_argument("gr_equal: need n >= 1");
    FormulaResult r;
    detail::guard(r, k >= 3, "k >= 3");
    // The closed form needs n >= 3: at n = 1 the true value is larger (K_5
    // decomposes into two stars plus a triangle, none containing 2K_2, so the
    // 3-color threshold is 6, not 5).
    detail::guard(r, n >= 3, "n >= 3");
    r.lower = r.upper = 3L * n + k - 1;
    return r;
}

/// Bounds for general (n, m):
///   even n:  max{2n+m+k-5, (5n-6)/2 + k-3}  <=  gr  <=  3n+3m+k-3
///   odd n:   max{2n+m+k-4, (5n-3)/2 + k-3}  <=  gr  <=  3n+3m+k-2
inline FormulaResult gr_general_bounds(int k, int n, int m) {
    FormulaResult r;
    r.kind = FormulaResult::Kind::bounds;
    detail::guard(r, n >= 9, "n >= 9");
    detail::guard(r, n > m, "n > m");
    detail::guard(r, m >= 2, "m >= 2");
    detail::guard(r, 6 * m >= n - 2, "m >= (n-2)/6");
    detail::guard(r, k >= 3, "k >= 3");
    if (n % 2 == 0) {
        r.lower = std::max(2L * n + m + k - 5, (5L * n - 6) / 2 + k - 3);
        r.upper = 3L * n + 3 * m + k - 3;
    } else {
        r.lower = std::max(2L * n + m + k - 4, (5L * n - 3) / 2 + k - 3);
        r.upper = 3L * n + 3 * m + k - 2;
    }
    return r;
}

}  // namespace gallai
