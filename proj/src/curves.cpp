#include "tangency/curves.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace tangency {

PolyChain reversed(const PolyChain& c) {
    PolyChain r{c.id, c.vertices};
    std::reverse(r.vertices.begin(), r.vertices.end());
    return r;
}

Box bounding_box(const PolyChain& c) {
    Box b{c.vertices.at(0).x, c.vertices[0].x, c.vertices[0].y, c.vertices[0].y};
    for (const Point& p : c.vertices) {
        if (p.x < b.x_lo) b.x_lo = p.x;
        if (b.x_hi < p.x) b.x_hi = p.x;
        if (p.y < b.y_lo) b.y_lo = p.y;
        if (b.y_hi < p.y) b.y_hi = p.y;
    }
    return b;
}

bool is_x_monotone(const PolyChain& c) {
    if (c.vertices.size() < 2) return false;
    for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
        if (!(c.vertices[i].x < c.vertices[i + 1].x)) return false;
    }
    return true;
}

bool is_simple(const PolyChain& c) {
    const auto& v = c.vertices;
    if (v.size() < 2) return false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] == v[i + 1]) return false;
    }
    if (is_x_monotone(c)) return true;
    const std::size_t m = c.segment_count();
    for (std::size_t i = 0; i + 1 < m; ++i) {
        // adjacent segments may only share their joint vertex
        if (orient(v[i], v[i + 1], v[i + 2]) == 0 && dot_sign(v[i] - v[i + 1], v[i + 2] - v[i + 1]) > 0) return false;
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 2; j < m; ++j) {
            try {
                if (segment_intersect(v[i], v[i + 1], v[j], v[j + 1])) return false;
            } catch (const OverlapError&) {
                return false;
            }
        }
    }
    return true;
}

const PolyChain& CurveFamily::by_id(CurveId id) const {
    for (const auto& c : chains) {
        if (c.id == id) return c;
    }
    throw std::out_of_range("no curve with id " + std::to_string(id));
}

namespace {

struct Arcs {
    std::optional<Point> back;  // direction towards the previous part of the chain
    std::optional<Point> fwd;   // direction towards the next part
    int count() const { return (back ? 1 : 0) + (fwd ? 1 : 0); }
};

Arcs arcs_at(const PolyChain& c, const Point& p) {
    const auto& v = c.vertices;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == p) {
            Arcs a;
            if (k > 0) a.back = v[k - 1] - p;
            if (k + 1 < v.size()) a.fwd = v[k + 1] - p;
            return a;
        }
    }
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
        if (on_segment(v[k], v[k + 1], p)) return Arcs{v[k] - p, v[k + 1] - p};
    }
    throw std::invalid_argument("point " + to_string(p) + " is not on curve " + std::to_string(c.id));
}

// Arcs at a point known to lie on segment k.
Arcs arcs_on_segment(const PolyChain& c, const Point& p, std::size_t k) {
    const auto& v = c.vertices;
    if (v[k] == p) return arcs_at(c, p);
    if (v[k + 1] == p) return arcs_at(c, p);
    return Arcs{v[k] - p, v[k + 1] - p};
}

std::vector<Point> directions(const Arcs& a) {
    std::vector<Point> d;
    if (a.back) d.push_back(*a.back);
    if (a.fwd) d.push_back(*a.fwd);
    return d;
}

PointKind classify_arcs(const PolyChain& c1, const PolyChain& c2, const Point& p, const Arcs& a1, const Arcs& a2) {
    const Point* d1[2] = {a1.back ? &*a1.back : nullptr, a1.fwd ? &*a1.fwd : nullptr};
    const Point* d2[2] = {a2.back ? &*a2.back : nullptr, a2.fwd ? &*a2.fwd : nullptr};
    for (const Point* u : d1) {
        for (const Point* w : d2) {
            if (u && w && same_direction(*u, *w)) {
                throw DegenerateContact("collinear arcs of curves " + std::to_string(c1.id) + " and " +
                                        std::to_string(c2.id) + " at " + to_string(p));
            }
        }
    }
    if (a1.count() < 2 || a2.count() < 2) return PointKind::touch;
    const bool in1 = strictly_ccw_between(*a1.fwd, *a1.back, *a2.fwd);
    const bool in2 = strictly_ccw_between(*a1.fwd, *a1.back, *a2.back);
    return in1 != in2 ? PointKind::cross : PointKind::touch;
}

struct Hit {
    Point point;
    std::size_t i;  // segment of c1
    std::size_t j;  // segment of c2
};

void add_hit(std::vector<Hit>& hits, const PolyChain& c1, std::size_t i, const PolyChain& c2, std::size_t j) {
    const auto& v = c1.vertices;
    const auto& w = c2.vertices;
    try {
        if (auto p = segment_intersect(v[i], v[i + 1], w[j], w[j + 1])) hits.push_back({std::move(*p), i, j});
    } catch (const OverlapError& e) {
        throw DegenerateContact("curves " + std::to_string(c1.id) + " and " + std::to_string(c2.id) +
                                " overlap: " + e.what());
    }
}

std::vector<Hit> raw_hits(const PolyChain& c1, const PolyChain& c2, bool both_monotone) {
    std::vector<Hit> hits;
    const std::size_t m1 = c1.segment_count();
    const std::size_t m2 = c2.segment_count();
    if (both_monotone) {
        // merge the two x-sorted segment lists; only x-overlapping pairs can meet
        std::size_t i = 0;
        std::size_t j = 0;
        const auto& v = c1.vertices;
        const auto& w = c2.vertices;
        while (i < m1 && j < m2) {
            if (!(v[i + 1].x < w[j].x) && !(w[j + 1].x < v[i].x)) add_hit(hits, c1, i, c2, j);
            const int c = cmp(v[i + 1].x, w[j + 1].x);
            if (c < 0) {
                ++i;
            } else if (c > 0) {
                ++j;
            } else {
                ++i;
                ++j;
            }
        }
    } else {
        for (std::size_t i = 0; i < m1; ++i) {
            for (std::size_t j = 0; j < m2; ++j) add_hit(hits, c1, i, c2, j);
        }
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.point < b.point; });
    hits.erase(std::unique(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.point == b.point; }),
               hits.end());
    return hits;
}

std::vector<CommonPoint> common_points_impl(const PolyChain& c1, const PolyChain& c2, bool both_monotone) {
    std::vector<CommonPoint> out;
    for (Hit& h : raw_hits(c1, c2, both_monotone)) {
        const PointKind k =
            classify_arcs(c1, c2, h.point, arcs_on_segment(c1, h.point, h.i), arcs_on_segment(c2, h.point, h.j));
        out.push_back({std::move(h.point), k});
    }
    return out;
}

// 'L' when every direction in dirs lies in the left region of the chain at
// the point, 'R' when all lie in the right region
char side_of(const Arcs& chain, const std::vector<Point>& dirs) {
    Point fwd = chain.fwd ? *chain.fwd : Point{-chain.back->x, -chain.back->y};
    Point back = chain.back ? *chain.back : Point{-chain.fwd->x, -chain.fwd->y};
    int left = 0;
    int right = 0;
    for (const Point& d : dirs) {
        if (same_direction(d, fwd) || same_direction(d, back)) {
            throw DegenerateContact("arc lies along the extension of an endpoint arc");
        }
        if (strictly_ccw_between(fwd, back, d)) {
            ++left;
        } else {
            ++right;
        }
    }
    if (left > 0 && right > 0) throw DegenerateContact("side undefined at endpoint contact");
    return left > 0 ? 'L' : 'R';
}

bool is_endpoint(const PolyChain& c, const Point& p) { return c.start() == p || c.end() == p; }

}  // namespace

std::vector<CommonPoint> common_points(const PolyChain& c1, const PolyChain& c2) {
    if (!bounding_box(c1).intersects(bounding_box(c2))) return {};
    return common_points_impl(c1, c2, is_x_monotone(c1) && is_x_monotone(c2));
}

std::string to_string(TangencyType t) {
    switch (t) {
        case TangencyType::LL: return "LL";
        case TangencyType::LR: return "LR";
        case TangencyType::RR: return "RR";
        case TangencyType::RL: return "RL";
    }
    return "?";
}

std::optional<TangencyType> parse_tangency_type(const std::string& s) {
    if (s == "LL") return TangencyType::LL;
    if (s == "LR") return TangencyType::LR;
    if (s == "RR") return TangencyType::RR;
    if (s == "RL") return TangencyType::RL;
    return std::nullopt;
}

namespace {

TangencyType type_at(const PolyChain& c1, const PolyChain& c2, const Point& p) {
    const Arcs a1 = arcs_at(c1, p);
    const Arcs a2 = arcs_at(c2, p);
    const char s1 = side_of(a1, directions(a2));
    const char s2 = side_of(a2, directions(a1));
    if (s1 == 'L') return s2 == 'L' ? TangencyType::LL : TangencyType::LR;
    return s2 == 'L' ? TangencyType::RL : TangencyType::RR;
}

}  // namespace

TangencyType tangency_type(const PolyChain& c1, const PolyChain& c2, const Point& p) {
    bool found = false;
    for (const auto& cp : common_points(c1, c2)) {
        if (cp.point == p && cp.kind == PointKind::touch) found = true;
    }
    if (!found) throw std::invalid_argument("not a touch point of the pair: " + to_string(p));
    return type_at(c1, c2, p);
}

namespace {

ContactKind classify_prepared(const PolyChain& c1, const PolyChain& c2, bool both_monotone) {
    std::vector<CommonPoint> pts;
    try {
        pts = common_points_impl(c1, c2, both_monotone);
    } catch (const DegenerateContact& e) {
        return Degenerate{e.what()};
    }
    if (pts.empty()) return Disjoint{};
    if (pts.size() > 1) return Multi{std::move(pts)};
    Point p = std::move(pts[0].point);
    if (pts[0].kind == PointKind::cross) return Crossing{std::move(p)};
    Tangency t;
    t.at_endpoint = is_endpoint(c1, p) || is_endpoint(c2, p);
    try {
        t.type = type_at(c1, c2, p);
    } catch (const DegenerateContact&) {
        t.type = std::nullopt;
    }
    t.point = std::move(p);
    return t;
}

}  // namespace

ContactKind classify_pair(const PolyChain& c1, const PolyChain& c2) {
    if (!bounding_box(c1).intersects(bounding_box(c2))) return Disjoint{};
    return classify_prepared(c1, c2, is_x_monotone(c1) && is_x_monotone(c2));
}

ChainPosition locate(const PolyChain& c, const Point& p) {
    const auto& v = c.vertices;
    const std::size_t m = c.segment_count();
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == p) {
            if (k < m) return {k, Rational(0)};
            const Point d = v[m] - v[m - 1];
            return {m - 1, d.x * d.x + d.y * d.y};
        }
    }
    for (std::size_t k = 0; k < m; ++k) {
        if (on_segment(c.segment(k), p)) {
            const Point d = p - v[k];
            return {k, d.x * d.x + d.y * d.y};
        }
    }
    throw std::invalid_argument("point " + to_string(p) + " is not on curve " + std::to_string(c.id));
}

PolyChain subchain(const PolyChain& c, const Point& a, const Point& b) {
    if (a == b) throw std::invalid_argument("empty subcurve: a == b");
    const ChainPosition pa = locate(c, a);
    const ChainPosition pb = locate(c, b);
    if (!(pa < pb)) throw std::invalid_argument("subcurve endpoints out of order");
    PolyChain out{c.id, {a}};
    for (std::size_t j = pa.segment + 1; j <= pb.segment; ++j) {
        if (!(c.vertices[j] == b)) out.vertices.push_back(c.vertices[j]);
    }
    out.vertices.push_back(b);
    return out;
}

PolyChain suffix_from(const PolyChain& c, const Point& p) { return subchain(c, p, c.end()); }
PolyChain prefix_to(const PolyChain& c, const Point& p) { return subchain(c, c.start(), p); }

ValidationReport validate_family(const CurveFamily& f) {
    ValidationReport r;
    const std::size_t n = f.chains.size();

    std::set<CurveId> ids;
    for (const auto& c : f.chains) ids.insert(c.id);
    r.ids_unique = ids.size() == n;
    if (!r.ids_unique) r.problems.push_back("duplicate curve ids");

    std::vector<bool> simple(n);
    std::vector<bool> mono(n);
    std::vector<Box> boxes;
    boxes.reserve(n);
    r.all_x_monotone = true;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = f.chains[i];
        simple[i] = is_simple(c);
        if (!simple[i]) r.non_simple.push_back(c.id);
        mono[i] = is_x_monotone(c);
        if (!mono[i]) r.all_x_monotone = false;
        if (c.vertices.empty()) {
            boxes.push_back({});
            continue;
        }
        boxes.push_back(bounding_box(c));
    }

    if (f.ground) {
        const Rational& g = *f.ground;
        r.grounded_ok = true;
        for (const auto& c : f.chains) {
            bool ok = !c.vertices.empty() && c.start().x == g;
            int side = 0;
            for (std::size_t k = 1; ok && k < c.vertices.size(); ++k) {
                const int s = cmp(c.vertices[k].x, g) > 0 ? 1 : (cmp(c.vertices[k].x, g) < 0 ? -1 : 0);
                if (s == 0 || (side != 0 && s != side)) ok = false;
                side = s;
            }
            if (!ok) {
                r.grounded_ok = false;
                r.problems.push_back("curve " + std::to_string(c.id) + " is not grounded");
            }
        }
    }

    if (f.window) {
        r.bi_infinite_ok = r.all_x_monotone;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& c = f.chains[i];
            if (!mono[i] || c.start().x != f.window->x_lo || c.end().x != f.window->x_hi) {
                r.bi_infinite_ok = false;
                if (f.bi_infinite) r.problems.push_back("curve " + std::to_string(c.id) + " does not span the window");
            }
        }
    }

    std::map<Point, std::set<CurveId>> incidence;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            ++r.pairs;
            const auto& a = f.chains[i];
            const auto& b = f.chains[j];
            if (!simple[i] || !simple[j]) continue;
            if (!boxes[i].intersects(boxes[j])) {
                ++r.disjoint;
                continue;
            }
            ContactKind k = classify_prepared(a, b, mono[i] && mono[j]);
            std::vector<Point> pts;
            if (std::holds_alternative<Disjoint>(k)) {
                ++r.disjoint;
            } else if (auto* c = std::get_if<Crossing>(&k)) {
                ++r.crossings;
                pts.push_back(c->point);
            } else if (auto* t = std::get_if<Tangency>(&k)) {
                ++r.tangencies;
                pts.push_back(t->point);
                r.tangency_edges.push_back({a.id, b.id, t->point, t->type});
            } else if (auto* m = std::get_if<Multi>(&k)) {
                r.multi_pairs.emplace_back(a.id, b.id);
                for (auto& cp : m->points) pts.push_back(cp.point);
            } else {
                r.degenerate_pairs.push_back({a.id, b.id, std::get<Degenerate>(k).reason});
            }
            bool endpoint = false;
            for (const Point& p : pts) {
                auto& s = incidence[p];
                s.insert(a.id);
                s.insert(b.id);
                endpoint = endpoint || is_endpoint(a, p) || is_endpoint(b, p);
            }
            if (endpoint) r.endpoint_contacts.emplace_back(a.id, b.id);
        }
    }
    for (const auto& [p, s] : incidence) {
        if (s.size() >= 3) r.triple_points.push_back(p);
    }

    r.is_1_intersecting = r.clean() && r.multi_pairs.empty();
    r.is_precisely_1 = r.is_1_intersecting && r.disjoint == 0;
    return r;
}

bool TangencyGraph::is_forest() const {
    std::map<CurveId, CurveId> parent;
    for (CurveId v : vertices) parent[v] = v;
    std::function<CurveId(CurveId)> find = [&](CurveId x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& e : edges) {
        const CurveId ru = find(e.u);
        const CurveId rv = find(e.v);
        if (ru == rv) return false;
        parent[ru] = rv;
    }
    return true;
}

std::map<CurveId, std::size_t> TangencyGraph::degrees() const {
    std::map<CurveId, std::size_t> d;
    for (CurveId v : vertices) d[v] = 0;
    for (const auto& e : edges) {
        ++d[e.u];
        ++d[e.v];
    }
    return d;
}

TangencyGraph tangency_graph(const CurveFamily& f, const ValidationReport& report) {
    if (!report.is_1_intersecting) {
        throw std::invalid_argument("tangency graph requires a 1-intersecting family without degeneracies");
    }
    TangencyGraph g;
    for (const auto& c : f.chains) g.vertices.push_back(c.id);
    g.edges = report.tangency_edges;
    return g;
}

TangencyGraph tangency_graph(const CurveFamily& f) { return tangency_graph(f, validate_family(f)); }

}  // namespace tangency
