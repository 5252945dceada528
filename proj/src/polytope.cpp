#include "rateregion/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <random>

namespace rateregion {

namespace {

constexpr double kPivotTol = 1e-9;

}  // namespace

LPResult lp_maximize(const std::vector<double>& c, const HPolytope& p) {
    const int n = p.dim;
    const int m = static_cast<int>(p.halfspaces.size());
    if ((int)c.size() != n) throw PolytopeError("lp_maximize: dimension mismatch");
    for (const auto& h : p.halfspaces) {
        if ((int)h.a.size() != n)
            throw PolytopeError("lp_maximize: constraint dimension mismatch");
        if (h.b < -kPivotTol)
            throw PolytopeError("lp_maximize: negative rhs, origin infeasible");
    }

    // tableau: m rows + objective row; columns = n structural + m slack + rhs
    const int cols = n + m + 1;
    std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols, 0.0));
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = p.halfspaces[i].a[j];
        t[i][n + i] = 1.0;
        t[i][cols - 1] = std::max(p.halfspaces[i].b, 0.0);
        basis[i] = n + i;
    }
    for (int j = 0; j < n; ++j) t[m][j] = c[j];  // reduced costs (maximize)

    for (;;) {
        // Bland: entering = smallest column with positive reduced cost
        int enter = -1;
        for (int j = 0; j < cols - 1; ++j)
            if (t[m][j] > kPivotTol) { enter = j; break; }
        if (enter < 0) break;

        int leave = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] > kPivotTol) {
                const double ratio = t[i][cols - 1] / t[i][enter];
                if (ratio < best - kPivotTol ||
                    (ratio < best + kPivotTol &&
                     (leave < 0 || basis[i] < basis[leave]))) {
                    best = ratio;
                    leave = i;
                }
            }
        }
        if (leave < 0) return {LPResult::Unbounded, 0.0, {}};

        const double piv = t[leave][enter];
        for (int j = 0; j < cols; ++j) t[leave][j] /= piv;
        for (int i = 0; i <= m; ++i) {
            if (i == leave) continue;
            const double f = t[i][enter];
            if (f == 0.0) continue;
            for (int j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    LPResult res;
    res.status = LPResult::Optimal;
    res.value = -t[m][cols - 1];
    res.x.assign(n, 0.0);
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) res.x[basis[i]] = t[i][cols - 1];
    return res;
}

double support_function(const HPolytope& p, const std::vector<double>& d) {
    const LPResult r = lp_maximize(d, p);
    if (r.status == LPResult::Unbounded)
        throw PolytopeError("support_function: unbounded direction");
    return r.value;
}

HPolytope remove_redundant(const HPolytope& p) {
    const int m = static_cast<int>(p.halfspaces.size());
    std::vector<bool> keep(m, true);
    for (int i = 0; i < m; ++i) {
        HPolytope rest;
        rest.dim = p.dim;
        for (int k = 0; k < m; ++k)
            if (keep[k] && k != i) rest.halfspaces.push_back(p.halfspaces[k]);
        LPResult r;
        try {
            r = lp_maximize(p.halfspaces[i].a, rest);
        } catch (const PolytopeError& e) {
            throw PolytopeError("remove_redundant: LP failed at constraint " +
                                std::to_string(i) + ": " + e.what());
        }
        if (r.status == LPResult::Optimal && r.value <= p.halfspaces[i].b + 1e-9)
            keep[i] = false;
    }
    HPolytope out;
    out.dim = p.dim;
    for (int i = 0; i < m; ++i)
        if (keep[i]) out.halfspaces.push_back(p.halfspaces[i]);
    return out;
}

std::vector<std::vector<double>> default_directions(int dim, int n_random,
                                                    std::uint64_t seed) {
    std::vector<std::vector<double>> dirs;
    if (dim < 1 || dim > 20) throw PolytopeError("default_directions: bad dimension");
    for (uint32_t mask = 1; mask < (1u << dim); ++mask) {
        std::vector<double> d(dim, 0.0);
        for (int j = 0; j < dim; ++j)
            if (mask >> j & 1) d[j] = 1.0;
        dirs.push_back(std::move(d));
    }
    std::mt19937_64 rng(seed);
    auto uni = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int r = 0; r < n_random; ++r) {
        std::vector<double> d(dim);
        double norm2 = 0.0;
        for (int j = 0; j < dim; ++j) {
            // Box-Muller
            double u1 = uni(), u2 = uni();
            while (u1 <= 0.0) u1 = uni();
            d[j] = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
            norm2 += d[j] * d[j];
        }
        if (norm2 == 0.0) { --r; continue; }
        const double inv = 1.0 / std::sqrt(norm2);
        for (double& v : d) v *= inv;
        dirs.push_back(std::move(d));
    }
    return dirs;
}

namespace {

std::optional<double> try_support(const HPolytope& p, const std::vector<double>& d) {
    const LPResult r = lp_maximize(d, p);
    if (r.status == LPResult::Unbounded) return std::nullopt;
    return r.value;
}

std::optional<double> try_union_support(const RegionEstimate& est,
                                        const std::vector<double>& d) {
    std::optional<double> best;
    for (const auto& p : est.members) {
        auto s = try_support(p, d);
        if (!s) return std::nullopt;
        if (!best || *s > *best) best = s;
    }
    return best;
}

template <class SuppP, class SuppQ>
RegionEqualResult region_equal_impl(SuppP&& sp, SuppQ&& sq,
                                    const std::vector<std::vector<double>>& dirs,
                                    double tol) {
    if (dirs.empty()) throw PolytopeError("region_equal: no directions");
    RegionEqualResult res;
    res.equal = true;
    for (const auto& d : dirs) {
        auto a = sp(d);
        auto b = sq(d);
        double dev;
        if (!a && !b)
            dev = 0.0;
        else if (!a || !b)
            dev = std::numeric_limits<double>::infinity();
        else
            dev = std::abs(*a - *b);
        if (dev > res.max_deviation) {
            res.max_deviation = dev;
            res.worst_direction = d;
        }
    }
    res.equal = res.max_deviation <= tol;
    return res;
}

}  // namespace

RegionEqualResult region_equal(const HPolytope& p, const HPolytope& q,
                               const std::vector<std::vector<double>>& dirs,
                               double tol) {
    if (p.dim != q.dim) throw PolytopeError("region_equal: dimension mismatch");
    return region_equal_impl([&](const auto& d) { return try_support(p, d); },
                             [&](const auto& d) { return try_support(q, d); }, dirs,
                             tol);
}

RegionEqualResult region_equal(const RegionEstimate& p, const RegionEstimate& q,
                               const std::vector<std::vector<double>>& dirs,
                               double tol) {
    return region_equal_impl([&](const auto& d) { return try_union_support(p, d); },
                             [&](const auto& d) { return try_union_support(q, d); },
                             dirs, tol);
}

double union_support(const RegionEstimate& est, const std::vector<double>& d) {
    if (est.members.empty()) throw PolytopeError("union_support: empty estimate");
    auto s = try_union_support(est, d);
    if (!s) throw PolytopeError("union_support: unbounded direction");
    return *s;
}

std::vector<SlicePoint> slice_2d(const RegionEstimate& est, int axis_a, int axis_b,
                                 int grid) {
    if (est.members.empty()) throw PolytopeError("slice_2d: empty estimate");
    const int dim = est.members.front().dim;
    if (axis_a == axis_b || axis_a < 0 || axis_b < 0 || axis_a >= dim || axis_b >= dim)
        throw PolytopeError("slice_2d: bad axes");
    if (grid < 1) throw PolytopeError("slice_2d: grid must be >= 1");

    // restrict every member to the plane (other rates = 0)
    std::vector<HPolytope> planes;
    for (const auto& p : est.members) {
        HPolytope q;
        q.dim = 2;
        for (const auto& h : p.halfspaces)
            q.halfspaces.push_back({{h.a[axis_a], h.a[axis_b]}, h.b});
        planes.push_back(std::move(q));
    }

    std::vector<SlicePoint> out;
    for (int g = 0; g < grid; ++g) {
        const double theta =
            grid == 1 ? 0.0 : (1.5707963267948966 * g) / (grid - 1);
        const std::vector<double> d{std::cos(theta), std::sin(theta)};
        double best = -1.0;
        std::vector<double> pt{0.0, 0.0};
        for (const auto& q : planes) {
            const LPResult r = lp_maximize(d, q);
            if (r.status == LPResult::Unbounded)
                throw PolytopeError("slice_2d: unbounded direction");
            if (r.value > best) {
                best = r.value;
                pt = r.x;
            }
        }
        out.push_back({theta, pt[0], pt[1]});
    }
    return out;
}

std::string slice_csv(const std::vector<SlicePoint>& pts) {
    std::string out = "theta,R_a,R_b\n";
    char buf[96];
    for (const auto& p : pts) {
        std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f\n", p.theta, p.ra, p.rb);
        out += buf;
    }
    return out;
}

}  // namespace rateregion
