#include "tangency/geom.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace tangency {

namespace {

bool is_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

int sgn(const Rational& r) { return ::sgn(r); }

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Rational ratio(long p, long q) {
    if (q == 0) throw std::invalid_argument("zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::string to_string(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }

namespace {

using i128 = __int128;

// num/den with both below 2^15 in magnitude, so every sign test below stays
// within 128 bits
struct Small {
    long n;
    long d;
};

bool small(const Rational& r, Small& out) {
    if (mpz_sizeinbase(r.get_num_mpz_t(), 2) > 15 || mpz_sizeinbase(r.get_den_mpz_t(), 2) > 15) return false;
    out = {mpz_get_si(r.get_num_mpz_t()), mpz_get_si(r.get_den_mpz_t())};
    return true;
}

int sign128(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sign of a*b - c*d from double approximations, or 2 when the rounding error
// could flip it. Inputs carry relative error below 2^-52.
int filtered_sign(double a, double b, double c, double d, double mag) {
    const double det = a * b - c * d;
    if (!std::isfinite(det) || !std::isfinite(mag) || mag < 1e-200) return 2;
    if (std::fabs(det) <= 1e-12 * mag) return 2;
    return det > 0 ? 1 : -1;
}

}  // namespace

int cross_sign(const Point& u, const Point& v) {
    Small ux, uy, vx, vy;
    if (small(u.x, ux) && small(u.y, uy) && small(v.x, vx) && small(v.y, vy)) {
        return sign128(i128(ux.n) * vy.n * uy.d * vx.d - i128(uy.n) * vx.n * ux.d * vy.d);
    }
    const double dux = u.x.get_d(), duy = u.y.get_d(), dvx = v.x.get_d(), dvy = v.y.get_d();
    const int f = filtered_sign(dux, dvy, duy, dvx, std::fabs(dux * dvy) + std::fabs(duy * dvx));
    if (f != 2) return f;
    Rational lhs = u.x * v.y;
    Rational rhs = u.y * v.x;
    return cmp(lhs, rhs) > 0 ? 1 : (cmp(lhs, rhs) < 0 ? -1 : 0);
}

int dot_sign(const Point& u, const Point& v) {
    Small ux, uy, vx, vy;
    if (small(u.x, ux) && small(u.y, uy) && small(v.x, vx) && small(v.y, vy)) {
        return sign128(i128(ux.n) * vx.n * uy.d * vy.d + i128(uy.n) * vy.n * ux.d * vx.d);
    }
    Rational d = u.x * v.x + u.y * v.y;
    return sgn(d);
}

int orient(const Point& p, const Point& q, const Point& r) {
    Small px, py, qx, qy, rx, ry;
    if (small(p.x, px) && small(p.y, py) && small(q.x, qx) && small(q.y, qy) && small(r.x, rx) && small(r.y, ry)) {
        // (qx - px)(ry - py) - (qy - py)(rx - px) over positive denominators
        const i128 a = i128(qx.n) * px.d - i128(px.n) * qx.d, ad = i128(qx.d) * px.d;
        const i128 b = i128(ry.n) * py.d - i128(py.n) * ry.d, bd = i128(ry.d) * py.d;
        const i128 c = i128(qy.n) * py.d - i128(py.n) * qy.d, cd = i128(qy.d) * py.d;
        const i128 d = i128(rx.n) * px.d - i128(px.n) * rx.d, dd = i128(rx.d) * px.d;
        return sign128(a * b * cd * dd - c * d * ad * bd);
    }
    const double dpx = p.x.get_d(), dpy = p.y.get_d();
    const double dqx = q.x.get_d(), dqy = q.y.get_d();
    const double drx = r.x.get_d(), dry = r.y.get_d();
    const double mag = (std::fabs(dqx) + std::fabs(dpx)) * (std::fabs(dry) + std::fabs(dpy)) +
                       (std::fabs(dqy) + std::fabs(dpy)) * (std::fabs(drx) + std::fabs(dpx));
    const int f = filtered_sign(dqx - dpx, dry - dpy, dqy - dpy, drx - dpx, mag);
    if (f != 2) return f;
    return cross_sign(q - p, r - p);
}

bool on_segment(const Point& sp, const Point& sq, const Point& r) {
    if (orient(sp, sq, r) != 0) return false;
    return std::min(sp.x, sq.x) <= r.x && r.x <= std::max(sp.x, sq.x) &&
           std::min(sp.y, sq.y) <= r.y && r.y <= std::max(sp.y, sq.y);
}

std::optional<Point> segment_intersect(const Point& p1, const Point& q1, const Point& p2, const Point& q2) {
    // bounding-box rejection first: comparisons are cheaper than products
    if (std::max(p1.x, q1.x) < std::min(p2.x, q2.x) ||
        std::max(p2.x, q2.x) < std::min(p1.x, q1.x) ||
        std::max(p1.y, q1.y) < std::min(p2.y, q2.y) ||
        std::max(p2.y, q2.y) < std::min(p1.y, q1.y)) {
        return std::nullopt;
    }

    const int o1 = orient(p1, q1, p2);
    const int o2 = orient(p1, q1, q2);
    const int o3 = orient(p2, q2, p1);
    const int o4 = orient(p2, q2, q1);

    if (o1 == 0 && o2 == 0) {
        // collinear: project onto the dominant axis and intersect the intervals
        const bool use_x = p1.x != q1.x;
        auto key = [use_x](const Point& p) -> const Rational& { return use_x ? p.x : p.y; };
        const Point& a_lo = key(p1) < key(q1) ? p1 : q1;
        const Point& a_hi = key(p1) < key(q1) ? q1 : p1;
        const Point& b_lo = key(p2) < key(q2) ? p2 : q2;
        const Point& b_hi = key(p2) < key(q2) ? q2 : p2;
        const Point& lo = key(a_lo) < key(b_lo) ? b_lo : a_lo;
        const Point& hi = key(a_hi) < key(b_hi) ? a_hi : b_hi;
        const int c = cmp(key(lo), key(hi));
        if (c > 0) return std::nullopt;
        if (c == 0) return lo;
        throw OverlapError("segments overlap between " + to_string(lo) + " and " + to_string(hi));
    }

    if (o1 * o2 > 0 || o3 * o4 > 0) return std::nullopt;

    if (o1 == 0) return p2;
    if (o2 == 0) return q2;
    if (o3 == 0) return p1;
    if (o4 == 0) return q1;

    // proper crossing: solve p1 + t (q1 - p1) on the line of s2
    const Point d1 = q1 - p1;
    const Point d2 = q2 - p2;
    const Point w = p2 - p1;
    Rational denom = d1.x * d2.y - d1.y * d2.x;
    Rational t = (w.x * d2.y - w.y * d2.x) / denom;
    return Point{p1.x + t * d1.x, p1.y + t * d1.y};
}

bool on_segment(const Segment& s, const Point& r) { return on_segment(s.p, s.q, r); }

std::optional<Point> segment_intersect(const Segment& s1, const Segment& s2) {
    return segment_intersect(s1.p, s1.q, s2.p, s2.q);
}

namespace {

// 0 for directions in [0, pi), 1 for [pi, 2 pi)
int half_plane(const Point& u) {
    const int sy = sgn(u.y);
    if (sy > 0) return 0;
    if (sy < 0) return 1;
    return sgn(u.x) > 0 ? 0 : 1;
}

}  // namespace

bool angle_less(const Point& u, const Point& v) {
    const int hu = half_plane(u);
    const int hv = half_plane(v);
    if (hu != hv) return hu < hv;
    return cross_sign(u, v) > 0;
}

bool same_direction(const Point& u, const Point& v) { return cross_sign(u, v) == 0 && dot_sign(u, v) > 0; }

bool strictly_ccw_between(const Point& a, const Point& b, const Point& x) {
    // ccw angle from a: half 0 is [0, pi), half 1 is [pi, 2 pi)
    auto half = [&a](const Point& u) {
        const int c = cross_sign(a, u);
        return c > 0 || (c == 0 && dot_sign(a, u) > 0) ? 0 : 1;
    };
    if (same_direction(a, x)) return false;
    const int hx = half(x);
    const int hb = half(b);
    if (hx != hb) return hx < hb;
    return cross_sign(x, b) > 0;
}

}  // namespace tangency
