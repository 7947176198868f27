#ifndef TANGENCY_CURVES_HPP
#define TANGENCY_CURVES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tangency/geom.hpp"

namespace tangency {

using CurveId = int;

/// Oriented polygonal chain. Orientation is vertex order: the first vertex is
/// the start point, the last vertex the end point.
struct PolyChain {
    CurveId id = 0;
    std::vector<Point> vertices;

    std::size_t segment_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    Segment segment(std::size_t i) const { return {vertices[i], vertices[i + 1]}; }
    const Point& start() const { return vertices.front(); }
    const Point& end() const { return vertices.back(); }
};

/// Same vertices in reverse order.
PolyChain reversed(const PolyChain& c);

struct Box {
    Rational x_lo, x_hi, y_lo, y_hi;
    bool intersects(const Box& o) const {
        return !(x_hi < o.x_lo || o.x_hi < x_lo || y_hi < o.y_lo || o.y_hi < y_lo);
    }
};

Box bounding_box(const PolyChain& c);

/// Vertex x-coordinates strictly increase.
bool is_x_monotone(const PolyChain& c);

/// At least two vertices, no repeated consecutive vertex, and no
/// self-intersection (checked exactly).
bool is_simple(const PolyChain& c);

struct Window {
    Rational x_lo;
    Rational x_hi;
};

/// A set of chains together with the metadata that the constructions rely on.
struct CurveFamily {
    std::vector<PolyChain> chains;
    std::optional<Window> window;
    std::optional<Rational> ground;  ///< x-coordinate of a vertical ground line
    bool x_monotone = false;
    bool bi_infinite = false;

    /// Declared pairwise-intersection claims; checked when a family is loaded.
    bool claims_one_intersecting = false;
    bool claims_precisely_one = false;

    /// Provenance carried into saved files.
    std::optional<std::uint64_t> seed;
    std::string generator;

    std::size_t size() const { return chains.size(); }
    const PolyChain& by_id(CurveId id) const;
};

class DegenerateContact : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class PointKind { cross, touch };

struct CommonPoint {
    Point point;
    PointKind kind;
};

/// Every common point of two closed simple chains, each listed once and
/// sorted lexicographically. A point is a touch iff the arcs of c2 emanating
/// from it do not separate the arcs of c1 in the cyclic order around it; an
/// endpoint contact is always a touch. Throws DegenerateContact on a shared
/// sub-segment or collinear emanating arcs.
std::vector<CommonPoint> common_points(const PolyChain& c1, const PolyChain& c2);

/// Letters: side of c1 on which c2 lies locally, then side of c2 on which c1 lies.
enum class TangencyType { LL, LR, RR, RL };

std::string to_string(TangencyType t);
std::optional<TangencyType> parse_tangency_type(const std::string& s);

/// Side letters at a touch point. At an endpoint the chain's single arc is
/// extended straight through the point to define its sides. Throws
/// std::invalid_argument if p is not a touch point of the pair, or
/// DegenerateContact if a side is undefined there.
TangencyType tangency_type(const PolyChain& c1, const PolyChain& c2, const Point& p);

struct Disjoint {};
struct Crossing {
    Point point;
};
struct Tangency {
    Point point;
    std::optional<TangencyType> type;  ///< nullopt only when a side is undefined at an endpoint
    bool at_endpoint = false;
};
struct Multi {
    std::vector<CommonPoint> points;
};
struct Degenerate {
    std::string reason;
};

using ContactKind = std::variant<Disjoint, Crossing, Tangency, Multi, Degenerate>;

/// Full classification of one pair.
ContactKind classify_pair(const PolyChain& c1, const PolyChain& c2);

/// Sub-chain between two points of c, a preceding b along the orientation.
/// Throws std::invalid_argument if a == b, a point is off the chain, or b
/// precedes a.
PolyChain subchain(const PolyChain& c, const Point& a, const Point& b);

/// Sub-chain from a point to the end, c[p, +].
PolyChain suffix_from(const PolyChain& c, const Point& p);
/// Sub-chain from the start to a point, c[-, p].
PolyChain prefix_to(const PolyChain& c, const Point& p);

/// Position of a point on a chain as (segment index, squared distance from the
/// segment start); orders points along the orientation. Throws if off chain.
struct ChainPosition {
    std::size_t segment;
    Rational offset;
    friend bool operator<(const ChainPosition& a, const ChainPosition& b) {
        if (a.segment != b.segment) return a.segment < b.segment;
        return a.offset < b.offset;
    }
    friend bool operator==(const ChainPosition& a, const ChainPosition& b) {
        return a.segment == b.segment && a.offset == b.offset;
    }
};
ChainPosition locate(const PolyChain& c, const Point& p);

struct PairDefect {
    CurveId a;
    CurveId b;
    std::string reason;
};

struct TangencyEdge {
    CurveId u;
    CurveId v;
    Point point;
    std::optional<TangencyType> type;  ///< type of (u, v) in this order
};

struct ValidationReport {
    bool is_1_intersecting = false;
    bool is_precisely_1 = false;
    std::vector<Point> triple_points;
    std::vector<PairDefect> degenerate_pairs;
    std::vector<CurveId> non_simple;
    std::vector<std::pair<CurveId, CurveId>> multi_pairs;  ///< pairs with >= 2 common points
    std::vector<std::pair<CurveId, CurveId>> endpoint_contacts;
    std::vector<std::string> problems;  ///< window/ground/id problems
    bool all_x_monotone = false;
    bool grounded_ok = false;  ///< false when no ground line is set
    bool bi_infinite_ok = false;
    bool ids_unique = false;

    std::size_t pairs = 0;
    std::size_t tangencies = 0;
    std::size_t crossings = 0;
    std::size_t disjoint = 0;
    std::vector<TangencyEdge> tangency_edges;

    bool clean() const { return degenerate_pairs.empty() && non_simple.empty() && ids_unique; }
};

/// Full pairwise scan; problems are reported, not thrown.
ValidationReport validate_family(const CurveFamily& f);

struct TangencyGraph {
    std::vector<CurveId> vertices;
    std::vector<TangencyEdge> edges;

    std::size_t edge_count() const { return edges.size(); }
    bool is_forest() const;
    std::map<CurveId, std::size_t> degrees() const;
};

/// One edge per touching pair. Throws std::invalid_argument unless the family
/// validates as 1-intersecting without degeneracies.
TangencyGraph tangency_graph(const CurveFamily& f);

/// Same as tangency_graph but reuses the edges recorded by an existing report.
TangencyGraph tangency_graph(const CurveFamily& f, const ValidationReport& report);

}  // namespace tangency

#endif
