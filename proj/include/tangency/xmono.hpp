#ifndef TANGENCY_XMONO_HPP
#define TANGENCY_XMONO_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tangency/curves.hpp"

namespace tangency {

/// y-coordinate of an x-monotone chain at x; nullopt outside its x-range.
std::optional<Rational> y_at(const PolyChain& c, const Rational& x);

/// c1 lies below c2, or left of their leftmost common point every vertical
/// line meets c1 strictly first. Compared from the larger of the two start
/// abscissas. Throws std::invalid_argument when the chains share that start
/// abscissa's point or their x-ranges are disjoint.
bool starts_below(const PolyChain& c1, const PolyChain& c2);

/// Sorted, distinct x-coordinates of all vertices and of all pairwise common
/// points. Throws DegenerateContact on overlapping chains.
std::vector<Rational> event_xs(const CurveFamily& f);

struct EnvelopePiece {
    Rational lo;
    Rational hi;
    CurveId id;
};

/// Maximal pieces of the pointwise minimum, left to right. Gaps where no
/// chain is defined are skipped.
std::vector<EnvelopePiece> lower_envelope(const CurveFamily& f);

/// Unordered pairs (smaller id first) of disjoint chains that are consecutive
/// in the vertical order over some open interval between event abscissas.
std::set<std::pair<CurveId, CurveId>> vertical_visibility_pairs(const CurveFamily& f);

/// Generalized trapezoid. Missing x means unbounded in that direction; missing
/// bottom/top means the cell is open downward/upward.
struct Trapezoid {
    std::optional<Rational> left_x;
    std::optional<Rational> right_x;
    std::optional<CurveId> bottom;
    std::optional<CurveId> top;
    /// Wall extents at left_x / right_x; missing means unbounded.
    std::optional<Rational> left_y_lo, left_y_hi, right_y_lo, right_y_hi;
};

struct Partition {
    std::vector<Trapezoid> cells;
    std::vector<CurveId> defining;
    std::vector<Rational> wall_xs;  ///< abscissas where walls are erected
    std::vector<PolyChain> chains;  ///< defining chains, for evaluating floors and ceilings
};

/// Walls at every endpoint and pairwise common point, clipped at the first
/// chain above and below. Throws std::invalid_argument for non-x-monotone
/// chains and DegenerateContact for overlapping ones.
Partition trapezoidal_partition(const CurveFamily& defining);

/// Whether the point lies in the open interior of the cell.
bool in_cell_interior(const Partition& p, const Trapezoid& t, const Point& q);

struct CellStats {
    std::size_t cell = 0;
    std::vector<CurveId> long_ids;
    std::vector<CurveId> short_ids;
    std::size_t total() const { return long_ids.size() + short_ids.size(); }
};

/// Curves of f meeting each cell's open interior, split by whether an
/// endpoint lies inside.
std::vector<CellStats> cell_stats(const Partition& p, const CurveFamily& f);

struct CuttingOptions {
    unsigned r = 2;
    std::size_t c_max = 64;
    std::uint64_t seed = 0;
    unsigned tries = 100;
    unsigned a = 4;  ///< sample size is ceil(a * r)
};

struct CuttingResult {
    bool success = false;
    unsigned tries_used = 0;
    std::vector<CurveId> subset;
    Partition partition;
    std::size_t cells = 0;
    std::size_t max_cell_curves = 0;  ///< over cells, curves meeting the interior
};

/// Random-sample-and-verify search for a subset whose partition has at most
/// c_max * r^2 cells, each met by at most n / r curves. On failure the result
/// holds the best attempt seen.
CuttingResult cutting_search(const CurveFamily& f, const CuttingOptions& opt);

enum class RayMode { above, below };

/// Extends each chain to the window by a steep ray at each end: upward for
/// `above`, downward for `below`. The window is the family's own, or one unit
/// beyond the extreme abscissas. Throws std::invalid_argument for
/// non-x-monotone input or a mode list of the wrong length.
CurveFamily biinfinite_extend(const CurveFamily& f, const std::vector<RayMode>& modes);

}  // namespace tangency

#endif
