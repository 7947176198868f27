#include "tangency/xmono.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace tangency {

std::optional<Rational> y_at(const PolyChain& c, const Rational& x) {
    const auto& v = c.vertices;
    if (x < v.front().x || v.back().x < x) return std::nullopt;
    auto it = std::lower_bound(v.begin(), v.end(), x, [](const Point& p, const Rational& t) { return p.x < t; });
    if (it->x == x) return it->y;
    const Point& b = *it;
    const Point& a = *(it - 1);
    return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

bool starts_below(const PolyChain& c1, const PolyChain& c2) {
    const Rational x0 = std::max(c1.start().x, c2.start().x);
    const Rational x1 = std::min(c1.end().x, c2.end().x);
    if (x1 < x0) throw std::invalid_argument("x-ranges are disjoint");
    const Rational y1 = *y_at(c1, x0);
    const Rational y2 = *y_at(c2, x0);
    const auto pts = common_points(c1, c2);
    if (!pts.empty() && pts.front().point.x == x0) {
        throw std::invalid_argument("curves " + std::to_string(c1.id) + " and " + std::to_string(c2.id) +
                                    " meet at their common left abscissa");
    }
    return y1 < y2;
}

namespace {

void require_monotone(const CurveFamily& f) {
    for (const auto& c : f.chains) {
        if (!is_x_monotone(c)) throw std::invalid_argument("curve " + std::to_string(c.id) + " is not x-monotone");
    }
}

// pairwise common points, indexed by chain position
struct PairTable {
    std::size_t n;
    std::vector<std::vector<Point>> pts;
    const std::vector<Point>& at(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        return pts[i * n + j];
    }
};

PairTable pair_table(const CurveFamily& f) {
    const std::size_t n = f.chains.size();
    PairTable t{n, std::vector<std::vector<Point>>(n * n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (auto& cp : common_points(f.chains[i], f.chains[j])) t.pts[i * n + j].push_back(std::move(cp.point));
        }
    }
    return t;
}

void sort_unique(std::vector<Rational>& xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

std::vector<Rational> events_from(const CurveFamily& f, const PairTable& t) {
    std::vector<Rational> xs;
    for (const auto& c : f.chains) {
        for (const auto& p : c.vertices) xs.push_back(p.x);
    }
    for (const auto& v : t.pts) {
        for (const auto& p : v) xs.push_back(p.x);
    }
    sort_unique(xs);
    return xs;
}

// chain indices defined at x, sorted by height there
std::vector<std::size_t> vertical_order(const CurveFamily& f, const Rational& x) {
    std::vector<std::pair<Rational, std::size_t>> col;
    for (std::size_t i = 0; i < f.chains.size(); ++i) {
        if (auto y = y_at(f.chains[i], x)) col.emplace_back(std::move(*y), i);
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::size_t> out;
    for (auto& e : col) out.push_back(e.second);
    return out;
}

}  // namespace

std::vector<Rational> event_xs(const CurveFamily& f) { return events_from(f, pair_table(f)); }

std::vector<EnvelopePiece> lower_envelope(const CurveFamily& f) {
    require_monotone(f);
    const auto xs = event_xs(f);
    std::vector<EnvelopePiece> out;
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
        const Rational mid = (xs[k] + xs[k + 1]) / 2;
        const auto order = vertical_order(f, mid);
        if (order.empty()) continue;
        const CurveId id = f.chains[order.front()].id;
        if (!out.empty() && out.back().id == id && out.back().hi == xs[k]) {
            out.back().hi = xs[k + 1];
        } else {
            out.push_back({xs[k], xs[k + 1], id});
        }
    }
    return out;
}

std::set<std::pair<CurveId, CurveId>> vertical_visibility_pairs(const CurveFamily& f) {
    require_monotone(f);
    const PairTable t = pair_table(f);
    const auto xs = events_from(f, t);
    std::set<std::pair<CurveId, CurveId>> out;
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
        const auto order = vertical_order(f, (xs[k] + xs[k + 1]) / 2);
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            if (!t.at(order[i], order[i + 1]).empty()) continue;
            const CurveId a = f.chains[order[i]].id;
            const CurveId b = f.chains[order[i + 1]].id;
            out.emplace(std::min(a, b), std::max(a, b));
        }
    }
    return out;
}

Partition trapezoidal_partition(const CurveFamily& defining) {
    require_monotone(defining);
    const PairTable table = pair_table(defining);
    const auto& chains = defining.chains;
    const std::size_t n = chains.size();

    Partition part;
    part.chains = chains;
    for (const auto& c : chains) part.defining.push_back(c.id);
    std::sort(part.defining.begin(), part.defining.end());

    std::vector<Rational>& X = part.wall_xs;
    for (const auto& c : chains) {
        X.push_back(c.start().x);
        X.push_back(c.end().x);
    }
    for (const auto& v : table.pts) {
        for (const auto& p : v) X.push_back(p.x);
    }
    sort_unique(X);
    const std::size_t K = X.size();

    // slab s lies between X[s-1] and X[s]; each holds gaps between consecutive chains
    struct Gap {
        std::size_t slab;
        int bottom;  // chain index, -1 when open
        int top;
    };
    std::vector<Gap> gaps;
    std::vector<std::map<std::pair<int, int>, std::size_t>> gap_index(K + 1);
    for (std::size_t s = 0; s <= K; ++s) {
        std::vector<std::size_t> order;
        if (s > 0 && s < K) order = vertical_order(defining, (X[s - 1] + X[s]) / 2);
        std::vector<int> bounds{-1};
        for (std::size_t i : order) bounds.push_back(static_cast<int>(i));
        bounds.push_back(-1);
        for (std::size_t g = 0; g + 1 < bounds.size(); ++g) {
            gap_index[s][{bounds[g], bounds[g + 1]}] = gaps.size();
            gaps.push_back({s, bounds[g], bounds[g + 1]});
        }
    }

    std::vector<std::size_t> parent(gaps.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    for (std::size_t k = 0; k < K; ++k) {
        const Rational& x = X[k];
        std::map<Rational, std::vector<std::size_t>> column;
        for (std::size_t i = 0; i < n; ++i) {
            if (auto y = y_at(chains[i], x)) column[*y].push_back(i);
        }
        struct Level {
            int chain;
            bool critical;
        };
        std::vector<Level> levels{{-1, false}};
        for (const auto& [y, ids] : column) {
            bool critical = ids.size() > 1;
            for (std::size_t i : ids) critical = critical || chains[i].start().x == x || chains[i].end().x == x;
            levels.push_back({static_cast<int>(ids.front()), critical});
        }
        levels.push_back({-1, false});
        // an open stretch of the line x = X[k] with no wall joins the gaps on both sides
        for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
            if (levels[i].critical || levels[i + 1].critical) continue;
            const std::pair<int, int> key{levels[i].chain, levels[i + 1].chain};
            auto left = gap_index[k].find(key);
            auto right = gap_index[k + 1].find(key);
            if (left == gap_index[k].end() || right == gap_index[k + 1].end()) {
                throw std::logic_error("partition sweep lost a gap");
            }
            parent[find(left->second)] = find(right->second);
        }
    }

    std::map<std::size_t, std::size_t> cell_of_root;
    std::vector<std::pair<std::size_t, std::size_t>> slab_range;
    for (std::size_t g = 0; g < gaps.size(); ++g) {
        const std::size_t r = find(g);
        auto [it, fresh] = cell_of_root.emplace(r, part.cells.size());
        if (fresh) {
            Trapezoid t;
            if (gaps[g].bottom >= 0) t.bottom = chains[gaps[g].bottom].id;
            if (gaps[g].top >= 0) t.top = chains[gaps[g].top].id;
            part.cells.push_back(t);
            slab_range.emplace_back(gaps[g].slab, gaps[g].slab);
        }
        auto& range = slab_range[it->second];
        range.first = std::min(range.first, gaps[g].slab);
        range.second = std::max(range.second, gaps[g].slab);
    }
    for (std::size_t c = 0; c < part.cells.size(); ++c) {
        Trapezoid& t = part.cells[c];
        const auto [s0, s1] = slab_range[c];
        auto eval = [&](const std::optional<CurveId>& id, const Rational& x) -> std::optional<Rational> {
            if (!id) return std::nullopt;
            for (const auto& ch : chains) {
                if (ch.id == *id) return y_at(ch, x);
            }
            return std::nullopt;
        };
        if (s0 > 0) {
            t.left_x = X[s0 - 1];
            t.left_y_lo = eval(t.bottom, *t.left_x);
            t.left_y_hi = eval(t.top, *t.left_x);
        }
        if (s1 < K) {
            t.right_x = X[s1];
            t.right_y_lo = eval(t.bottom, *t.right_x);
            t.right_y_hi = eval(t.top, *t.right_x);
        }
    }
    return part;
}

namespace {

const PolyChain* find_chain(const Partition& p, const std::optional<CurveId>& id) {
    if (!id) return nullptr;
    for (const auto& c : p.chains) {
        if (c.id == *id) return &c;
    }
    throw std::invalid_argument("cell boundary curve missing from partition");
}

// open parameter interval (lo, hi) within (0, 1) where a linear function with
// end values gs, gt is positive; lo >= hi means empty
std::pair<Rational, Rational> positive_part(const Rational& gs, const Rational& gt) {
    const int s = sgn(gs);
    const int t = sgn(gt);
    if (s > 0 && t > 0) return {Rational(0), Rational(1)};
    if (s <= 0 && t <= 0) return {Rational(1), Rational(0)};
    Rational root = gs / (gs - gt);
    if (s > 0) return {Rational(0), root};
    return {root, Rational(1)};
}

}  // namespace

bool in_cell_interior(const Partition& p, const Trapezoid& t, const Point& q) {
    if (t.left_x && !(*t.left_x < q.x)) return false;
    if (t.right_x && !(q.x < *t.right_x)) return false;
    if (const PolyChain* b = find_chain(p, t.bottom)) {
        auto y = y_at(*b, q.x);
        if (!y || !(*y < q.y)) return false;
    }
    if (const PolyChain* c = find_chain(p, t.top)) {
        auto y = y_at(*c, q.x);
        if (!y || !(q.y < *y)) return false;
    }
    return true;
}

std::vector<CellStats> cell_stats(const Partition& p, const CurveFamily& f) {
    require_monotone(f);
    std::vector<CellStats> out;
    for (std::size_t ci = 0; ci < p.cells.size(); ++ci) {
        const Trapezoid& t = p.cells[ci];
        const PolyChain* bottom = find_chain(p, t.bottom);
        const PolyChain* top = find_chain(p, t.top);
        CellStats st;
        st.cell = ci;
        for (const auto& c : f.chains) {
            Rational lo = c.start().x;
            Rational hi = c.end().x;
            if (t.left_x && lo < *t.left_x) lo = *t.left_x;
            if (t.right_x && *t.right_x < hi) hi = *t.right_x;
            if (!(lo < hi)) continue;

            std::vector<Rational> xs{lo, hi};
            for (const PolyChain* ch : {&c, bottom, top}) {
                if (!ch) continue;
                for (const auto& v : ch->vertices) {
                    if (lo < v.x && v.x < hi) xs.push_back(v.x);
                }
            }
            sort_unique(xs);

            bool meets = false;
            for (std::size_t k = 0; k + 1 < xs.size() && !meets; ++k) {
                const Rational& s = xs[k];
                const Rational& e = xs[k + 1];
                Rational ilo(0);
                Rational ihi(1);
                const Rational cs = *y_at(c, s);
                const Rational ce = *y_at(c, e);
                if (bottom) {
                    auto [a, b] = positive_part(cs - *y_at(*bottom, s), ce - *y_at(*bottom, e));
                    if (ilo < a) ilo = a;
                    if (b < ihi) ihi = b;
                }
                if (top) {
                    auto [a, b] = positive_part(*y_at(*top, s) - cs, *y_at(*top, e) - ce);
                    if (ilo < a) ilo = a;
                    if (b < ihi) ihi = b;
                }
                meets = ilo < ihi;
            }
            if (!meets) continue;
            if (in_cell_interior(p, t, c.start()) || in_cell_interior(p, t, c.end())) {
                st.short_ids.push_back(c.id);
            } else {
                st.long_ids.push_back(c.id);
            }
        }
        out.push_back(std::move(st));
    }
    return out;
}

CuttingResult cutting_search(const CurveFamily& f, const CuttingOptions& opt) {
    require_monotone(f);
    if (opt.r == 0) throw std::invalid_argument("r must be positive");
    const std::size_t n = f.chains.size();
    std::vector<CurveId> ids;
    for (const auto& c : f.chains) ids.push_back(c.id);
    std::sort(ids.begin(), ids.end());

    const std::size_t want = opt.r == 1 ? 0 : std::min<std::size_t>(n, static_cast<std::size_t>(opt.a) * opt.r);
    const std::size_t cell_cap = opt.c_max * opt.r * opt.r;

    CuttingResult best;
    bool have_best = false;
    const unsigned tries = want == n ? std::min(opt.tries, 1u) : opt.tries;
    for (unsigned attempt = 0; attempt < std::max(tries, 1u); ++attempt) {
        std::vector<CurveId> subset;
        if (want == n) {
            subset = ids;
        } else if (want > 0) {
            std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                              static_cast<std::uint32_t>(attempt)};
            std::mt19937_64 rng(seq);
            std::sample(ids.begin(), ids.end(), std::back_inserter(subset), want, rng);
        }
        CurveFamily sub;
        for (CurveId id : subset) sub.chains.push_back(f.by_id(id));
        CuttingResult res;
        res.tries_used = attempt + 1;
        res.subset = subset;
        res.partition = trapezoidal_partition(sub);
        res.cells = res.partition.cells.size();
        for (const auto& st : cell_stats(res.partition, f)) res.max_cell_curves = std::max(res.max_cell_curves, st.total());
        res.success = res.cells <= cell_cap && res.max_cell_curves * opt.r <= n;
        if (res.success) return res;
        if (!have_best || res.max_cell_curves < best.max_cell_curves ||
            (res.max_cell_curves == best.max_cell_curves && res.cells < best.cells)) {
            best = std::move(res);
            have_best = true;
        }
        best.tries_used = attempt + 1;
    }
    return best;
}

CurveFamily biinfinite_extend(const CurveFamily& f, const std::vector<RayMode>& modes) {
    require_monotone(f);
    if (modes.size() != f.chains.size()) throw std::invalid_argument("one ray mode per curve is required");
    CurveFamily out = f;
    if (f.chains.empty()) return out;

    Window w;
    if (f.window) {
        w = *f.window;
    } else {
        w.x_lo = f.chains[0].start().x;
        w.x_hi = f.chains[0].end().x;
        for (const auto& c : f.chains) {
            if (c.start().x < w.x_lo) w.x_lo = c.start().x;
            if (w.x_hi < c.end().x) w.x_hi = c.end().x;
        }
        w.x_lo -= 1;
        w.x_hi += 1;
    }
    for (const auto& c : f.chains) {
        if (c.start().x < w.x_lo || w.x_hi < c.end().x) throw std::invalid_argument("curve leaves the window");
    }

    Rational steep(1);
    for (const auto& c : f.chains) {
        for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
            Rational s = (c.vertices[i + 1].y - c.vertices[i].y) / (c.vertices[i + 1].x - c.vertices[i].x);
            if (s < 0) s = -s;
            if (steep <= s) steep = s;
        }
    }
    mpz_class whole = steep.get_num() / steep.get_den();
    Rational S(whole + 1);

    // parallel rays on a common line overlap unless they point away from each other
    struct Ray {
        Rational key;
        Rational x;
        int dir;
    };
    auto rays_clear = [&](const Rational& slope) {
        std::vector<Ray> neg;
        std::vector<Ray> pos;
        for (std::size_t i = 0; i < f.chains.size(); ++i) {
            const Point& a = f.chains[i].start();
            const Point& b = f.chains[i].end();
            if (modes[i] == RayMode::above) {
                if (a.x != w.x_lo) neg.push_back({a.y + slope * a.x, a.x, -1});
                if (b.x != w.x_hi) pos.push_back({b.y - slope * b.x, b.x, 1});
            } else {
                if (a.x != w.x_lo) pos.push_back({a.y - slope * a.x, a.x, -1});
                if (b.x != w.x_hi) neg.push_back({b.y + slope * b.x, b.x, 1});
            }
        }
        for (const auto* v : {&neg, &pos}) {
            for (std::size_t i = 0; i < v->size(); ++i) {
                for (std::size_t j = i + 1; j < v->size(); ++j) {
                    const Ray& r = (*v)[i];
                    const Ray& t = (*v)[j];
                    if (r.key != t.key) continue;
                    if (r.dir == t.dir) return false;
                    const Ray& left = r.dir < 0 ? r : t;
                    const Ray& right = r.dir < 0 ? t : r;
                    if (right.x < left.x) return false;
                }
            }
        }
        return true;
    };
    int bumps = 0;
    while (!rays_clear(S)) {
        if (++bumps > 4 * static_cast<int>(f.chains.size() * f.chains.size()) + 4) {
            throw std::invalid_argument("rays from coincident endpoints would overlap");
        }
        S += 1;
    }

    for (std::size_t i = 0; i < out.chains.size(); ++i) {
        auto& v = out.chains[i].vertices;
        const Rational dir = modes[i] == RayMode::above ? Rational(1) : Rational(-1);
        if (v.front().x != w.x_lo) {
            Point p{w.x_lo, v.front().y + dir * S * (v.front().x - w.x_lo)};
            v.insert(v.begin(), std::move(p));
        }
        if (v.back().x != w.x_hi) {
            Point p{w.x_hi, v.back().y + dir * S * (w.x_hi - v.back().x)};
            v.push_back(std::move(p));
        }
    }
    out.window = w;
    out.bi_infinite = true;
    out.x_monotone = true;
    out.claims_one_intersecting = false;
    out.claims_precisely_one = false;
    return out;
}

}  // namespace tangency
