#ifndef TANGENCY_GEOM_HPP
#define TANGENCY_GEOM_HPP

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tangency {

/// Arbitrary-precision rational. GMP keeps it canonical: denominator > 0,
/// gcd(|num|, den) = 1, zero is 0/1.
using Rational = mpq_class;

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// p/q in canonical form. Throws std::invalid_argument on q = 0.
Rational ratio(long p, long q);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Point& a, const Point& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

std::string to_string(const Point& p);

struct Segment {
    Point p;
    Point q;
};

/// Thrown when two closed segments share a sub-segment of positive length.
class OverlapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sign of (q - p) x (r - p): +1 counterclockwise, 0 collinear, -1 clockwise.
int orient(const Point& p, const Point& q, const Point& r);

/// Sign of the 2D cross product u x v.
int cross_sign(const Point& u, const Point& v);

/// Sign of the dot product u . v.
int dot_sign(const Point& u, const Point& v);

Point operator-(const Point& a, const Point& b);
Point operator+(const Point& a, const Point& b);

/// True iff r lies on the closed segment s.
bool on_segment(const Segment& s, const Point& r);
bool on_segment(const Point& sp, const Point& sq, const Point& r);

/// The unique common point of two closed segments, or nullopt when they are
/// disjoint. Throws OverlapError when they share a sub-segment of positive length.
/// Precondition: both segments have distinct endpoints.
std::optional<Point> segment_intersect(const Segment& s1, const Segment& s2);
std::optional<Point> segment_intersect(const Point& p1, const Point& q1, const Point& p2, const Point& q2);

/// Strict angular order of nonzero direction vectors, counterclockwise from
/// the positive x-axis. Equal directions compare equal.
bool angle_less(const Point& u, const Point& v);

/// True iff direction x lies strictly inside the counterclockwise sweep that
/// starts at direction a and ends at direction b (a != b as directions).
bool strictly_ccw_between(const Point& a, const Point& b, const Point& x);

/// Same direction (positive multiples of each other).
bool same_direction(const Point& u, const Point& v);

}  // namespace tangency

#endif
