#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "rateregion/polytope.hpp"

using namespace rateregion;

namespace {

HPolytope box2(double a = 1.0, double b = 1.0) {
    HPolytope p;
    p.dim = 2;
    p.halfspaces = {{{1, 0}, a}, {{0, 1}, b}};
    return p;
}

HPolytope pentagon() {
    HPolytope p;
    p.dim = 2;
    p.halfspaces = {{{1, 0}, 1.0}, {{0, 1}, 1.0}, {{1, 1}, 1.5}};
    return p;
}

// Exact vertex enumeration for dim <= 3: intersect every dim-subset of
// constraints (including the axis planes), keep feasible points.
std::vector<std::vector<double>> enumerate_vertices(const HPolytope& p) {
    const int d = p.dim;
    std::vector<std::pair<std::vector<double>, double>> rows;
    for (const auto& h : p.halfspaces) rows.push_back({h.a, h.b});
    for (int i = 0; i < d; ++i) {
        std::vector<double> e(d, 0.0);
        e[i] = -1.0;  // -x_i <= 0
        rows.push_back({e, 0.0});
    }
    const int n = static_cast<int>(rows.size());
    std::vector<std::vector<double>> verts;
    std::vector<int> pick(d);
    std::function<void(int, int)> rec = [&](int start, int k) {
        if (k == d) {
            // solve the d x d system by Gaussian elimination
            std::vector<std::vector<double>> m(d, std::vector<double>(d + 1));
            for (int r = 0; r < d; ++r) {
                for (int c = 0; c < d; ++c) m[r][c] = rows[pick[r]].first[c];
                m[r][d] = rows[pick[r]].second;
            }
            for (int c = 0; c < d; ++c) {
                int piv = -1;
                for (int r = c; r < d; ++r)
                    if (std::abs(m[r][c]) > 1e-9) { piv = r; break; }
                if (piv < 0) return;
                std::swap(m[c], m[piv]);
                for (int r = 0; r < d; ++r) {
                    if (r == c) continue;
                    const double f = m[r][c] / m[c][c];
                    for (int q = c; q <= d; ++q) m[r][q] -= f * m[c][q];
                }
            }
            std::vector<double> x(d);
            for (int c = 0; c < d; ++c) x[c] = m[c][d] / m[c][c];
            for (const auto& [a, b] : rows) {
                double dot = 0.0;
                for (int c = 0; c < d; ++c) dot += a[c] * x[c];
                if (dot > b + 1e-7) return;
            }
            verts.push_back(std::move(x));
            return;
        }
        for (int i = start; i <= n - (d - k); ++i) {
            pick[k] = i;
            rec(i + 1, k + 1);
        }
    };
    rec(0, 0);
    return verts;
}

double oracle_support(const HPolytope& p, const std::vector<double>& dir) {
    double best = 0.0;
    for (const auto& v : enumerate_vertices(p)) {
        double dot = 0.0;
        for (size_t i = 0; i < dir.size(); ++i) dot += dir[i] * v[i];
        best = std::max(best, dot);
    }
    return best;
}

HPolytope random_polytope(std::mt19937_64& rng, int dim, int n_con) {
    std::uniform_real_distribution<double> coef(0.0, 1.0), rhs(0.5, 2.0);
    HPolytope p;
    p.dim = dim;
    // guarantee boundedness with per-axis caps
    for (int i = 0; i < dim; ++i) {
        Halfspace h;
        h.a.assign(dim, 0.0);
        h.a[i] = 1.0;
        h.b = rhs(rng);
        p.halfspaces.push_back(h);
    }
    for (int c = 0; c < n_con; ++c) {
        Halfspace h;
        h.a.assign(dim, 0.0);
        for (int i = 0; i < dim; ++i) h.a[i] = coef(rng);
        h.b = rhs(rng);
        p.halfspaces.push_back(h);
    }
    return p;
}

}  // namespace

TEST_CASE("lp_maximize on simple programs") {
    const auto p = pentagon();
    auto r = lp_maximize({1, 1}, p);
    REQUIRE(r.status == LPResult::Optimal);
    CHECK(r.value == doctest::Approx(1.5).epsilon(1e-9));
    r = lp_maximize({1, 0}, p);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-9));
    r = lp_maximize({-1, -1}, p);
    CHECK(r.value == doctest::Approx(0.0).epsilon(1e-9));

    HPolytope open;  // x - y <= 1 leaves +y unbounded
    open.dim = 2;
    open.halfspaces = {{{1, -1}, 1.0}};
    CHECK(lp_maximize({0, 1}, open).status == LPResult::Unbounded);
}

TEST_CASE("support_function examples") {
    CHECK(support_function(box2(), {1, 1}) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(support_function(box2(), {0, 0}) == doctest::Approx(0.0));
    CHECK(support_function(pentagon(), {1, 1}) ==
          doctest::Approx(1.5).epsilon(1e-9));
    // negative direction entries pinned to 0 by the orthant
    CHECK(support_function(box2(), {-1, 1}) == doctest::Approx(1.0).epsilon(1e-9));
    HPolytope open;
    open.dim = 2;
    open.halfspaces = {{{1, 0}, 1.0}};
    CHECK_THROWS_AS(support_function(open, {0, 1}), PolytopeError);
}

TEST_CASE("support_function is sublinear") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const auto p = random_polytope(rng, 3, 4);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> d1(3), d2(3), ds(3);
        for (int i = 0; i < 3; ++i) {
            d1[i] = u(rng);
            d2[i] = u(rng);
            ds[i] = d1[i] + d2[i];
        }
        CHECK(support_function(p, ds) <=
              support_function(p, d1) + support_function(p, d2) + 1e-9);
    }
}

TEST_CASE("remove_redundant golden cases") {
    HPolytope square_plus = box2();
    square_plus.halfspaces.push_back({{1, 1}, 3.0});  // redundant
    const auto r = remove_redundant(square_plus);
    CHECK(r.halfspaces.size() == 2);

    const auto pent = remove_redundant(pentagon());
    CHECK(pent.halfspaces.size() == 3);  // already minimal

    HPolytope single;
    single.dim = 2;
    single.halfspaces = {{{1, 1}, 1.0}};
    CHECK(remove_redundant(single).halfspaces.size() == 1);
}

TEST_CASE("remove_redundant agrees with the vertex oracle") {
    std::mt19937_64 rng(17);
    const auto dirs2 = default_directions(2);
    const auto dirs3 = default_directions(3);
    for (int trial = 0; trial < 40; ++trial) {
        const int dim = (trial % 2) ? 3 : 2;
        const auto p = random_polytope(rng, dim, 3 + (int)(rng() % 3));
        const auto r = remove_redundant(p);
        CHECK(r.halfspaces.size() <= p.halfspaces.size());
        // same region per oracle support values
        for (const auto& d : (dim == 2 ? dirs2 : dirs3)) {
            CHECK(std::abs(oracle_support(p, d) - oracle_support(r, d)) <= 1e-7);
            CHECK(std::abs(support_function(r, d) - oracle_support(p, d)) <= 1e-7);
        }
        // idempotent
        const auto rr = remove_redundant(r);
        CHECK(rr.halfspaces.size() == r.halfspaces.size());
    }
}

TEST_CASE("region_equal basics") {
    const auto dirs = default_directions(2);
    HPolytope with_redundant = box2();
    with_redundant.halfspaces.push_back({{1, 1}, 2.0});
    auto res = region_equal(box2(), with_redundant, dirs, 1e-9);
    CHECK(res.equal);

    res = region_equal(box2(), box2(), dirs, 1e-9);
    CHECK(res.equal);
    CHECK(res.max_deviation == doctest::Approx(0.0));

    HPolytope tri;
    tri.dim = 2;
    tri.halfspaces = {{{1, 1}, 1.0}, {{1, 0}, 1.0}, {{0, 1}, 1.0}};
    res = region_equal(box2(), tri, dirs, 1e-9);
    CHECK(!res.equal);
    CHECK(res.max_deviation == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(res.worst_direction == std::vector<double>{1, 1});
}

TEST_CASE("region_equal is symmetric and reflexive") {
    std::mt19937_64 rng(23);
    const auto dirs = default_directions(3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto p = random_polytope(rng, 3, 3);
        const auto q = random_polytope(rng, 3, 3);
        CHECK(region_equal(p, p, dirs, 1e-12).equal);
        const auto pq = region_equal(p, q, dirs, 1e-9);
        const auto qp = region_equal(q, p, dirs, 1e-9);
        CHECK(pq.equal == qp.equal);
        CHECK(pq.max_deviation == doctest::Approx(qp.max_deviation).epsilon(1e-12));
    }
}

TEST_CASE("default_directions shape") {
    const auto dirs = default_directions(3);
    CHECK(dirs.size() == 7 + 64);  // 2^3-1 binary masks + 64 random units
    for (const auto& d : dirs) CHECK(d.size() == 3);
    // random tail has unit norm
    const auto& last = dirs.back();
    double n2 = 0.0;
    for (double v : last) n2 += v * v;
    CHECK(n2 == doctest::Approx(1.0).epsilon(1e-12));
    // deterministic
    CHECK(default_directions(3) == dirs);
}

TEST_CASE("union_support") {
    RegionEstimate est;
    est.members.push_back(box2(1.0, 0.2));
    CHECK(union_support(est, {1, 1}) == doctest::Approx(1.2).epsilon(1e-9));
    est.members.push_back(box2(0.2, 1.0));
    CHECK(union_support(est, {0, 1}) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(union_support(est, {1, 0}) == doctest::Approx(1.0).epsilon(1e-9));
    // monotone in members
    est.members.push_back(box2(2.0, 2.0));
    CHECK(union_support(est, {1, 1}) == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("slice_2d boundary points") {
    RegionEstimate est;
    est.members.push_back(box2());
    const auto pts = slice_2d(est, 0, 1, 5);
    REQUIRE(pts.size() == 5);
    CHECK(pts.front().theta == doctest::Approx(0.0));
    CHECK(pts.front().ra == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(pts.front().rb == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(pts.back().theta == doctest::Approx(std::acos(-1.0) / 2).epsilon(1e-12));
    CHECK(pts.back().rb == doctest::Approx(1.0).epsilon(1e-9));

    RegionEstimate pent;
    pent.members.push_back(pentagon());
    const auto mid = slice_2d(pent, 0, 1, 3)[1];  // theta = 45 degrees
    CHECK(mid.ra + mid.rb == doctest::Approx(1.5).epsilon(1e-9));

    const auto one = slice_2d(est, 0, 1, 1);
    CHECK(one.size() == 1);
}

TEST_CASE("slice_csv format") {
    RegionEstimate est;
    est.members.push_back(box2());
    const auto csv = slice_csv(slice_2d(est, 0, 1, 2));
    CHECK(csv.substr(0, 14) == "theta,R_a,R_b\n");
    CHECK(csv.find("\r") == std::string::npos);
    CHECK(csv.back() == '\n');
    // 6 decimal digits
    CHECK(csv.find("0.000000,1.000000,0.000000\n") != std::string::npos);
}
