#pragma once

// Exact piecewise-linear functions of one parameter on [0, inf).
// Breakpoints xs[0] = 0 < xs[1] < ... with values ys[i], slope `send`
// past the last breakpoint, linear interpolation between breakpoints.
//
// This exists for the lower-bound generators, which shape game values as
// functions of the homotopy parameter; it is not a general-purpose library.

#include <cstddef>
#include <vector>

#include "dglcp/rational.hpp"

namespace dglcp {

struct PWL {
    std::vector<rational> xs;
    std::vector<rational> ys;
    rational send;

    PWL() : send(0) {}
    PWL(std::vector<rational> x, std::vector<rational> y, rational s)
        : xs(std::move(x)), ys(std::move(y)), send(std::move(s)) {
        if (xs.empty() || xs.size() != ys.size() || xs.front() != 0)
            throw invariant_error("PWL: bad breakpoint list");
        for (std::size_t i = 1; i < xs.size(); ++i)
            if (xs[i] <= xs[i - 1])
                throw invariant_error("PWL: breakpoints not increasing");
    }

    static PWL constant(const rational& c) {
        return PWL({rational(0)}, {c}, rational(0));
    }

    rational operator()(const rational& t) const {
        if (t >= xs.back()) return ys.back() + send * (t - xs.back());
        std::size_t lo = 0, hi = xs.size() - 1;
        while (hi - lo > 1) {
            std::size_t mid = (lo + hi) / 2;
            if (xs[mid] <= t) lo = mid;
            else hi = mid;
        }
        return ys[lo] +
               (ys[lo + 1] - ys[lo]) * (t - xs[lo]) / (xs[lo + 1] - xs[lo]);
    }

    // Slope of the segment starting at breakpoint i.
    rational slope_at(std::size_t i) const {
        if (i + 1 == xs.size()) return send;
        return (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
    }

    PWL scale(const rational& a) const {
        PWL out = *this;
        for (rational& y : out.ys) y *= a;
        out.send *= a;
        return out;
    }

    // this + c + slope * t
    PWL add_linear(const rational& c, const rational& slope) const {
        PWL out = *this;
        for (std::size_t i = 0; i < xs.size(); ++i)
            out.ys[i] += c + slope * xs[i];
        out.send += slope;
        return out;
    }
};

namespace detail {
inline std::vector<rational> merge_grid(const PWL& f, const PWL& g) {
    std::vector<rational> xs;
    xs.reserve(f.xs.size() + g.xs.size());
    std::size_t a = 0, b = 0;
    while (a < f.xs.size() || b < g.xs.size()) {
        rational x;
        if (b == g.xs.size() || (a < f.xs.size() && f.xs[a] <= g.xs[b])) {
            x = f.xs[a];
            if (a < f.xs.size()) ++a;
        } else {
            x = g.xs[b];
            ++b;
        }
        while (a < f.xs.size() && f.xs[a] == x) ++a;
        while (b < g.xs.size() && g.xs[b] == x) ++b;
        xs.push_back(x);
    }
    return xs;
}
}  // namespace detail

inline PWL pwl_sub(const PWL& f, const PWL& g) {
    std::vector<rational> xs = detail::merge_grid(f, g);
    std::vector<rational> ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = f(xs[i]) - g(xs[i]);
    return PWL(std::move(xs), std::move(ys), f.send - g.send);
}

inline PWL pwl_max(const PWL& f, const PWL& g) {
    std::vector<rational> xs = detail::merge_grid(f, g);
    std::vector<rational> fy(xs.size()), gy(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        fy[i] = f(xs[i]);
        gy[i] = g(xs[i]);
    }
    std::vector<rational> nxs, nys;
    nxs.reserve(xs.size() + 4);
    nys.reserve(xs.size() + 4);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        rational df0 = fy[i] - gy[i];
        nxs.push_back(xs[i]);
        nys.push_back(df0 >= 0 ? fy[i] : gy[i]);
        if (i + 1 < xs.size()) {
            rational df1 = fy[i + 1] - gy[i + 1];
            if ((df0 > 0 && df1 < 0) || (df0 < 0 && df1 > 0)) {
                // interior crossing of the two graphs
                rational xc = xs[i] + (xs[i + 1] - xs[i]) * (-df0) / (df1 - df0);
                if (xs[i] < xc && xc < xs[i + 1]) {
                    nxs.push_back(xc);
                    nys.push_back(f(xc));
                }
            }
        }
    }
    rational dlast = fy.back() - gy.back();
    rational dse = f.send - g.send;
    if (dlast != 0 && dse != 0 && (dlast < 0) != (dse < 0)) {
        // crossing beyond the last breakpoint
        rational xc = xs.back() + (-dlast) / dse;
        if (xc > xs.back()) {
            nxs.push_back(xc);
            nys.push_back(f(xc));
        }
    }
    rational tail_send;
    if (dlast == 0) {
        tail_send = f.send >= g.send ? f.send : g.send;
    } else {
        rational probe = nxs.back() + 1;
        tail_send = f(probe) >= g(probe) ? f.send : g.send;
    }
    return PWL(std::move(nxs), std::move(nys), std::move(tail_send));
}

inline PWL pwl_min(const PWL& f, const PWL& g) {
    return pwl_max(f.scale(rational(-1)), g.scale(rational(-1))).scale(rational(-1));
}

}  // namespace dglcp
