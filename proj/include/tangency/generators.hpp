#ifndef TANGENCY_GENERATORS_HPP
#define TANGENCY_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tangency/bipartite.hpp"
#include "tangency/curves.hpp"

namespace tangency {

/// The line y = 0 and the graphs of |x - i| for i = 0..n-2, clipped to the
/// window (default [-1, n-1]). Throws std::invalid_argument for n < 2 or a
/// window not containing [0, n-2] in its interior.
CurveFamily gen_vee_fan(int n, std::optional<Window> window = std::nullopt);

/// 2^k bi-infinite x-monotone 1-intersecting chains with 2^(k-1)*k
/// tangencies: two shifted copies of the k-1 family, each bottom curve
/// rising to touch its partner's rightward extension.
CurveFamily gen_doubling(int k);

struct IncidenceInstance {
    int k = 0;
    std::vector<std::pair<long, long>> points;  ///< (a, b), sorted
    std::vector<std::pair<long, long>> lines;   ///< (slope, intercept), sorted
};

/// Points {0..k-1} x {0..4k^2-1} and lines y = m x + c with m < 2k, c < 2k^2.
IncidenceInstance gen_incidence_grid(int k);

/// Brute-force count of (point, line) pairs with the point on the line.
std::size_t incidence_count(const IncidenceInstance& g);

/// Number of points on each line, in line order.
std::vector<std::size_t> points_per_line(const IncidenceInstance& g);

/// Default disk radius for the grounded construction: 1/(4(2k+1)).
Rational default_grounded_eps(int k);

/// The grounded realization of the incidence grid: 4k^3 line-curves followed
/// by 4k^3 point-curves, all starting on one vertical line left of the grid.
/// Every point-curve touches exactly the line-curves of its incident lines.
/// Throws std::invalid_argument if eps fails the disk check
/// 4 eps^2 (1 + (2k-1)^2) < 1, and std::logic_error if the result does not
/// validate. The validation report is stored when `report` is given.
CurveFamily gen_grounded_family(int k, std::optional<Rational> eps = std::nullopt,
                                ValidationReport* report = nullptr);

/// Edge probability n^(-(2-c)/(3-c)).
long double bipartite_edge_probability(int n, const Rational& c);

/// n x n bipartite graph, each edge present independently with the
/// probability above. Throws std::invalid_argument for n < 2 or c outside (1,2).
BipartiteGraph gen_random_bipartite(int n, const Rational& c, std::uint64_t seed);

struct WiringOptions {
    int n = 4;
    bool precisely_one = false;  ///< every pair meets exactly once
    double touch_probability = 0.3;
    int max_events = -1;  ///< 1-intersecting mode only; negative means random
    std::uint64_t seed = 0;
};

/// Random wiring diagram: curves on integer levels, each event lets two
/// adjacent curves cross or touch once. The result is bi-infinite over its
/// window, x-monotone, 1-intersecting and free of triple points.
CurveFamily gen_random_wiring(const WiringOptions& opt);

/// Random non-vertical segments with integer endpoints in [0, span]^2,
/// redrawn until no two overlap. Segments are 1-intersecting by nature.
CurveFamily gen_random_segments(int n, int span, std::uint64_t seed);

/// Random x-monotone chains with 2..max_vertices vertices and integer
/// coordinates in [0, span]^2, redrawn until no pair is degenerate.
CurveFamily gen_random_polylines(int n, int max_vertices, int span, std::uint64_t seed);

/// Two families grounded at disjoint vertical lines: A starts at the left
/// line and is oriented rightward, B starts at the right one and is oriented
/// leftward. No curve reaches the other family's ground, and A together with
/// B is 1-intersecting.
struct TwoGrounded {
    CurveFamily a;
    CurveFamily b;
};
TwoGrounded gen_two_grounded(int n, double touch_probability, std::uint64_t seed);

}  // namespace tangency

#endif
