#pragma once
// Numeric rate-region operations over half-space polytopes on the
// nonnegative orthant: a dense simplex LP, redundancy removal, support
// functions, support-function equality, unions over sampled
// distributions, and 2-D slices.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rateregion {

struct PolytopeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Halfspace {
    std::vector<double> a;
    double b = 0.0;  // a . x <= b, b >= 0 so the origin is inside
};

struct HPolytope {
    int dim = 0;
    std::vector<Halfspace> halfspaces;  // nonnegativity is implicit
};

struct LPResult {
    enum Status { Optimal, Unbounded } status = Optimal;
    double value = 0.0;
    std::vector<double> x;
};

// max c.x  s.t.  a_i.x <= b_i, x >= 0.  Bland's rule, dense tableau.
LPResult lp_maximize(const std::vector<double>& c, const HPolytope& p);

// Throws PolytopeError when the LP is unbounded in direction d.
double support_function(const HPolytope& p, const std::vector<double>& d);

// Minimal half-space list defining the same set; a constraint is redundant
// iff maximizing its lhs over the remaining ones stays <= rhs + 1e-9.
HPolytope remove_redundant(const HPolytope& p);

struct RegionEqualResult {
    bool equal = false;
    double max_deviation = 0.0;
    std::vector<double> worst_direction;
};

// All nonzero 0/1 vectors plus n_random seeded unit directions.
std::vector<std::vector<double>> default_directions(int dim, int n_random = 64,
                                                    std::uint64_t seed = 7);

RegionEqualResult region_equal(const HPolytope& p, const HPolytope& q,
                               const std::vector<std::vector<double>>& dirs,
                               double tol);

// One polytope per sampled distribution; the union's support function is
// the per-direction max (= support of the convex hull of the union).
struct RegionEstimate {
    std::vector<HPolytope> members;
};

double union_support(const RegionEstimate& est, const std::vector<double>& d);

RegionEqualResult region_equal(const RegionEstimate& p, const RegionEstimate& q,
                               const std::vector<std::vector<double>>& dirs,
                               double tol);

struct SlicePoint {
    double theta = 0.0;
    double ra = 0.0;
    double rb = 0.0;
};

// Boundary of the union in the (axis_a, axis_b) plane with all other
// rates 0, one point per grid angle in [0, pi/2].
std::vector<SlicePoint> slice_2d(const RegionEstimate& est, int axis_a, int axis_b,
                                 int grid);

// CSV with header "theta,R_a,R_b", 6 decimals, LF endings.
std::string slice_csv(const std::vector<SlicePoint>& pts);

}  // namespace rateregion
