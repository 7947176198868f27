#include "tangency/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "tangency/xmono.hpp"

namespace tangency {

namespace {

Rational pow2(long e) { return Rational(mpz_class(1) << static_cast<mp_bitcnt_t>(e)); }

Rational half_int(long twice) { return ratio(twice, 2); }

// Drops repeated vertices and interior vertices collinear with their neighbors.
std::vector<Point> simplify(const std::vector<Point>& in) {
    std::vector<Point> v;
    for (const Point& p : in) {
        if (v.empty() || !(v.back() == p)) v.push_back(p);
    }
    std::vector<Point> out;
    for (const Point& p : v) {
        while (out.size() >= 2 && orient(out[out.size() - 2], out.back(), p) == 0) out.pop_back();
        out.push_back(p);
    }
    return out;
}

PolyChain make_chain(CurveId id, std::vector<Point> v) {
    PolyChain c;
    c.id = id;
    c.vertices = std::move(v);
    return c;
}

}  // namespace

CurveFamily gen_vee_fan(int n, std::optional<Window> window) {
    if (n < 2) throw std::invalid_argument("vee fan needs n >= 2");
    const Window w = window ? *window : Window{Rational(-1), Rational(n - 1)};
    if (!(w.x_lo < 0) || !(w.x_hi > n - 2)) {
        throw std::invalid_argument("window must contain [0, n-2] in its interior");
    }
    CurveFamily f;
    f.chains.push_back(make_chain(0, {{w.x_lo, Rational(0)}, {w.x_hi, Rational(0)}}));
    for (int i = 0; i + 1 < n; ++i) {
        const Rational x(i);
        f.chains.push_back(make_chain(i + 1, {{w.x_lo, x - w.x_lo}, {x, Rational(0)}, {w.x_hi, w.x_hi - x}}));
    }
    f.window = w;
    f.x_monotone = true;
    f.bi_infinite = true;
    f.claims_one_intersecting = true;
    f.claims_precisely_one = true;
    f.generator = "vee-fan n=" + std::to_string(n);
    return f;
}

CurveFamily gen_doubling(int k) {
    if (k < 1) throw std::invalid_argument("doubling needs k >= 1");
    // every curve spans [0, X] and has horizontal first and last edges
    std::vector<std::vector<Point>> cur = {
        {{Rational(0), Rational(0)}, {Rational(4), Rational(0)}},
        {{Rational(0), Rational(1)}, {Rational(1), Rational(1)}, {Rational(2), Rational(0)},
         {Rational(3), Rational(1)}, {Rational(4), Rational(1)}},
    };
    Rational X(4);
    for (int level = 1; level < k; ++level) {
        Rational y_lo = cur[0][0].y;
        Rational y_hi = y_lo;
        std::vector<Rational> right;
        for (const auto& c : cur) {
            for (const auto& p : c) {
                if (p.y < y_lo) y_lo = p.y;
                if (y_hi < p.y) y_hi = p.y;
            }
            right.push_back(c.back().y);
        }
        std::vector<Rational> sorted = right;
        std::sort(sorted.begin(), sorted.end());
        Rational gap = sorted[1] - sorted[0];
        for (std::size_t i = 2; i < sorted.size(); ++i) {
            if (sorted[i] - sorted[i - 1] < gap) gap = sorted[i] - sorted[i - 1];
        }
        const Rational W = X + 1;
        const Rational H = y_hi - y_lo + 1;
        const Rational X1 = W + X + 1;
        const Rational X2 = X1 + H + 2;

        std::vector<std::vector<Point>> next;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            std::vector<Point> a = cur[i];
            const Rational r = right[i];
            a.back() = Point{X1, r};
            a.push_back({X1 + H, r + H});
            a.push_back({X1 + H + 1, r + H - gap / 2});
            a.push_back({X2, r + H - gap / 2});
            next.push_back(std::move(a));
        }
        for (const auto& c : cur) {
            std::vector<Point> b;
            for (const auto& p : c) b.push_back({p.x + W, p.y + H});
            b.front().x = 0;
            b.back().x = X2;
            next.push_back(std::move(b));
        }
        cur = std::move(next);
        X = X2;
    }
    CurveFamily f;
    for (std::size_t i = 0; i < cur.size(); ++i) f.chains.push_back(make_chain(static_cast<CurveId>(i), cur[i]));
    f.window = Window{Rational(0), X};
    f.x_monotone = true;
    f.bi_infinite = true;
    f.claims_one_intersecting = true;
    f.generator = "doubling k=" + std::to_string(k);
    return f;
}

IncidenceInstance gen_incidence_grid(int k) {
    if (k < 1) throw std::invalid_argument("incidence grid needs k >= 1");
    IncidenceInstance g;
    g.k = k;
    const long K = k;
    for (long a = 0; a < K; ++a) {
        for (long b = 0; b < 4 * K * K; ++b) g.points.emplace_back(a, b);
    }
    for (long m = 0; m < 2 * K; ++m) {
        for (long c = 0; c < 2 * K * K; ++c) g.lines.emplace_back(m, c);
    }
    return g;
}

std::size_t incidence_count(const IncidenceInstance& g) {
    std::size_t total = 0;
    for (std::size_t n : points_per_line(g)) total += n;
    return total;
}

std::vector<std::size_t> points_per_line(const IncidenceInstance& g) {
    std::vector<std::size_t> out;
    out.reserve(g.lines.size());
    for (const auto& [m, c] : g.lines) {
        std::size_t n = 0;
        for (const auto& [a, b] : g.points) {
            if (b == m * a + c) ++n;
        }
        out.push_back(n);
    }
    return out;
}

Rational default_grounded_eps(int k) { return ratio(1, 4 * (2L * k + 1)); }

CurveFamily gen_grounded_family(int k, std::optional<Rational> eps_opt, ValidationReport* report) {
    if (k < 1) throw std::invalid_argument("grounded family needs k >= 1");
    const Rational eps = eps_opt ? *eps_opt : default_grounded_eps(k);
    const long K = k;
    if (!(eps > 0) || !(4 * eps * eps * (1 + (2 * K - 1) * (2 * K - 1)) < 1)) {
        throw std::invalid_argument("eps " + to_string(eps) + " too large: disks around grid points reach other lines");
    }
    const IncidenceInstance grid = gen_incidence_grid(k);
    const Rational xg = ratio(-1, 2) + ratio(1, 8 * K * K);
    const Rational xend = Rational(K) - ratio(1, 2) + ratio(1, 8 * K * K);
    const Rational w = eps / pow2(K - 1) / (16 * K);
    const Rational delta = w / (64 * K * K);
    const Rational eta0 = delta / (512 * K * K * K * K);

    // lines through each grid point, in slope order
    std::map<std::pair<long, long>, std::vector<std::size_t>> through;
    for (std::size_t li = 0; li < grid.lines.size(); ++li) {
        const auto [m, c] = grid.lines[li];
        for (long a = 0; a < K; ++a) through[{a, m * a + c}].push_back(li);
    }
    // flat-window shift of line li at column a
    auto bump = [&](std::size_t li, long a) {
        const auto [m, c] = grid.lines[li];
        const auto& at = through.at({a, m * a + c});
        const Rational mu = ratio(grid.lines[at.front()].first + grid.lines[at.back()].first, 2);
        const Rational d = Rational(m) - mu;
        return Rational(-delta * d * d);
    };
    auto height = [&](std::size_t li, const Rational& x) {
        const auto [m, c] = grid.lines[li];
        Rational y = m * x + c + eta0 * (m * m + c * c);
        for (long a = 0; a < K; ++a) {
            Rational dx = x - a;
            if (dx < 0) dx = -dx;
            if (dx <= w) {
                y += bump(li, a);
            } else if (dx < 2 * w) {
                y += bump(li, a) * (2 * w - dx) / w;
            }
        }
        return y;
    };
    auto knots_before = [&](const Rational& limit) {
        std::vector<Rational> xs{xg};
        for (long a = 0; a < K; ++a) {
            for (const Rational& x : {Rational(a - 2 * w), Rational(a - w), Rational(a + w), Rational(a + 2 * w)}) {
                if (x < limit) xs.push_back(x);
            }
        }
        return xs;
    };

    CurveFamily f;
    const std::vector<Rational> all_knots = [&] {
        auto xs = knots_before(xend);
        xs.push_back(xend);
        return xs;
    }();
    for (std::size_t li = 0; li < grid.lines.size(); ++li) {
        std::vector<Point> v;
        for (const Rational& x : all_knots) v.push_back({x, height(li, x)});
        f.chains.push_back(make_chain(static_cast<CurveId>(li), std::move(v)));
    }

    const CurveId first_point = static_cast<CurveId>(grid.lines.size());
    long isolated = 0;
    for (std::size_t pi = 0; pi < grid.points.size(); ++pi) {
        const auto [a, b] = grid.points[pi];
        const CurveId id = first_point + static_cast<CurveId>(pi);
        auto it = through.find({a, b});
        if (it == through.end()) {
            const Rational y(2 * K * K + 1 + isolated++);
            f.chains.push_back(make_chain(id, {{xg, y}, {xg + ratio(1, 4), y}}));
            continue;
        }
        const auto& lines = it->second;
        const std::size_t d = lines.size();
        const std::size_t follow = lines.front();
        const Rational dp = eps / pow2(a);

        std::vector<Point> v;
        for (const Rational& x : knots_before(a - w)) v.push_back({x, height(follow, x) + dp});
        v.push_back({a - w, height(follow, a - w) + dp});

        std::vector<Rational> slope, icpt;
        for (std::size_t li : lines) {
            const auto [m, c] = grid.lines[li];
            slope.emplace_back(m);
            icpt.push_back(c + eta0 * (m * m + c * c) + bump(li, a));
        }
        std::vector<Rational> touch;
        if (d == 1) {
            touch.emplace_back(a);
        } else {
            std::vector<Rational> brk;
            for (std::size_t j = 0; j + 1 < d; ++j) brk.push_back((icpt[j] - icpt[j + 1]) / (slope[j + 1] - slope[j]));
            for (std::size_t j = 0; j < brk.size(); ++j) {
                const bool ordered = (j == 0 ? a - w / 2 < brk[j] : brk[j - 1] < brk[j]) &&
                                     (j + 1 < brk.size() || brk[j] < a + w / 2);
                if (!ordered) throw std::logic_error("upper envelope at a grid point misses a line");
            }
            touch.push_back(a - w / 2);
            for (std::size_t j = 0; j + 1 < brk.size(); ++j) touch.push_back((brk[j] + brk[j + 1]) / 2);
            touch.push_back(a + w / 2);
        }
        for (std::size_t j = 0; j < d; ++j) v.push_back({touch[j], slope[j] * touch[j] + icpt[j]});
        const Rational x_last = a + 3 * w / 4;
        v.push_back({x_last, slope[d - 1] * x_last + icpt[d - 1] + w / 64});
        f.chains.push_back(make_chain(id, std::move(v)));
    }

    f.ground = xg;
    f.x_monotone = true;
    f.claims_one_intersecting = true;
    f.generator = "grounded k=" + std::to_string(k) + " eps=" + to_string(eps);

    ValidationReport r = validate_family(f);
    const std::size_t expected = incidence_count(grid);
    if (!r.is_1_intersecting || !r.grounded_ok || !r.all_x_monotone || r.tangencies != expected) {
        throw std::logic_error("grounded construction failed validation for k=" + std::to_string(k) + ": " +
                               std::to_string(r.tangencies) + " tangencies, expected " + std::to_string(expected));
    }
    if (report) *report = std::move(r);
    return f;
}

long double bipartite_edge_probability(int n, const Rational& c) {
    const long double cl = static_cast<long double>(c.get_num().get_si()) / c.get_den().get_si();
    return std::pow(static_cast<long double>(n), -(2.0L - cl) / (3.0L - cl));
}

BipartiteGraph gen_random_bipartite(int n, const Rational& c, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random bipartite graph needs n >= 2");
    if (!(c > 1) || !(c < 2)) throw std::invalid_argument("c must lie in (1, 2)");
    const long double p = bipartite_edge_probability(n, c);
    // compare a uniform 64-bit draw against p * 2^64
    const long double scaled = std::ldexp(p, 64);
    const bool always = scaled >= std::ldexp(1.0L, 64);
    const std::uint64_t threshold = always ? 0 : static_cast<std::uint64_t>(scaled);
    std::mt19937_64 rng(seed);
    BipartiteGraph g(n, n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (rng() < threshold || always) g.add_edge(a, b);
        }
    }
    return g;
}

namespace {

// Tournament "u ends below v" implied by current levels and met pairs is
// transitive iff its score sequence is 0..n-1.
bool completable(const std::vector<int>& at, const std::vector<std::vector<char>>& met) {
    const std::size_t n = at.size();
    std::vector<std::size_t> score(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (met[at[i]][at[j]]) {
                ++score[j];
            } else {
                ++score[i];
            }
        }
    }
    std::sort(score.begin(), score.end());
    for (std::size_t i = 0; i < n; ++i) {
        if (score[i] != i) return false;
    }
    return true;
}

}  // namespace

CurveFamily gen_random_wiring(const WiringOptions& opt) {
    const int n = opt.n;
    if (n < 1) throw std::invalid_argument("wiring needs n >= 1");
    std::mt19937_64 rng(opt.seed);
    std::vector<int> at(n);
    std::iota(at.begin(), at.end(), 0);
    std::shuffle(at.begin(), at.end(), rng);
    std::vector<std::vector<char>> met(n, std::vector<char>(n, 0));
    std::vector<std::vector<Point>> v(n);
    for (int lvl = 0; lvl < n; ++lvl) v[at[lvl]].push_back({Rational(0), Rational(lvl)});

    const long all_pairs = static_cast<long>(n) * (n - 1) / 2;
    long budget = all_pairs;
    if (!opt.precisely_one) {
        budget = opt.max_events >= 0 ? std::min<long>(opt.max_events, all_pairs)
                                     : std::uniform_int_distribution<long>(0, all_pairs)(rng);
    }
    std::bernoulli_distribution coin(opt.touch_probability);
    std::bernoulli_distribution upward(0.5);
    long s = 1;
    for (long events = 0; events < budget; ++events, ++s) {
        std::vector<int> open;
        for (int p = 0; p + 1 < n; ++p) {
            if (!met[at[p]][at[p + 1]]) open.push_back(p);
        }
        if (open.empty()) {
            if (opt.precisely_one) throw std::logic_error("wiring got stuck before all pairs met");
            break;
        }
        const int p = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
        const int lo = at[p];
        const int hi = at[p + 1];
        met[lo][hi] = met[hi][lo] = 1;
        bool touch = coin(rng);
        if (touch && opt.precisely_one && !completable(at, met)) touch = false;
        const Rational x0(s), x1(s + 1), xm = half_int(2 * s + 1);
        const Rational y0(p), y1(p + 1);
        if (touch) {
            if (upward(rng)) {
                v[lo].insert(v[lo].end(), {{x0, y0}, {xm, y1}, {x1, y0}});
            } else {
                v[hi].insert(v[hi].end(), {{x0, y1}, {xm, y0}, {x1, y1}});
            }
        } else {
            v[lo].insert(v[lo].end(), {{x0, y0}, {x1, y1}});
            v[hi].insert(v[hi].end(), {{x0, y1}, {x1, y0}});
            std::swap(at[p], at[p + 1]);
        }
    }
    const Rational X(s + 1);
    CurveFamily f;
    for (int lvl = 0; lvl < n; ++lvl) v[at[lvl]].push_back({X, Rational(lvl)});
    for (int id = 0; id < n; ++id) f.chains.push_back(make_chain(id, simplify(v[id])));
    f.window = Window{Rational(0), X};
    f.x_monotone = true;
    f.bi_infinite = true;
    f.claims_one_intersecting = true;
    f.claims_precisely_one = opt.precisely_one;
    f.seed = opt.seed;
    f.generator = std::string("wiring n=") + std::to_string(n) + (opt.precisely_one ? " precisely-one" : "");
    return f;
}

CurveFamily gen_random_segments(int n, int span, std::uint64_t seed) {
    if (n < 0 || span < 1) throw std::invalid_argument("bad segment family parameters");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(0, span);
    CurveFamily f;
    for (int id = 0; id < n; ++id) {
        for (;;) {
            long x1 = coord(rng), x2 = coord(rng);
            if (x1 == x2) continue;
            const long y1 = coord(rng), y2 = coord(rng);
            if (x2 < x1) std::swap(x1, x2);
            PolyChain c = make_chain(id, {{Rational(x1), Rational(y1)}, {Rational(x2), Rational(y2)}});
            bool ok = true;
            for (const auto& o : f.chains) {
                if (std::holds_alternative<Degenerate>(classify_pair(c, o))) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                f.chains.push_back(std::move(c));
                break;
            }
        }
    }
    f.x_monotone = true;
    f.claims_one_intersecting = true;
    f.seed = seed;
    f.generator = "segments n=" + std::to_string(n);
    return f;
}

CurveFamily gen_random_polylines(int n, int max_vertices, int span, std::uint64_t seed) {
    if (n < 0 || max_vertices < 2 || span + 1 < max_vertices) {
        throw std::invalid_argument("bad polyline family parameters");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(0, span);
    std::uniform_int_distribution<int> count(2, max_vertices);
    std::vector<long> xs(span + 1);
    std::iota(xs.begin(), xs.end(), 0L);
    CurveFamily f;
    for (int id = 0; id < n; ++id) {
        for (;;) {
            std::vector<long> pick;
            std::sample(xs.begin(), xs.end(), std::back_inserter(pick), count(rng), rng);
            std::vector<Point> v;
            for (long x : pick) v.push_back({Rational(x), Rational(coord(rng))});
            PolyChain c = make_chain(id, simplify(v));
            bool ok = true;
            for (const auto& o : f.chains) {
                if (std::holds_alternative<Degenerate>(classify_pair(c, o))) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                f.chains.push_back(std::move(c));
                break;
            }
        }
    }
    f.x_monotone = true;
    f.seed = seed;
    f.generator = "polylines n=" + std::to_string(n);
    return f;
}

TwoGrounded gen_two_grounded(int n, double touch_probability, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("two-grounded instance needs n >= 2");
    WiringOptions wo;
    wo.n = n;
    wo.touch_probability = touch_probability;
    wo.seed = seed;
    const CurveFamily base = gen_random_wiring(wo);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const long X = base.window->x_hi.get_num().get_si();
    std::uniform_int_distribution<long> a_end((X + 1) / 2, X - 1);
    std::uniform_int_distribution<long> b_start(1, X / 2);
    std::bernoulli_distribution color(0.5);

    TwoGrounded out;
    for (const auto& c : base.chains) {
        const bool red = c.id == 0 || (c.id != 1 && color(rng));
        const Rational cut(red ? a_end(rng) : b_start(rng));
        const Point q{cut, *y_at(c, cut)};
        if (red) {
            out.a.chains.push_back(prefix_to(c, q));
        } else {
            out.b.chains.push_back(reversed(suffix_from(c, q)));
        }
    }
    out.a.ground = Rational(0);
    out.b.ground = Rational(X);
    for (CurveFamily* f : {&out.a, &out.b}) {
        f->x_monotone = f == &out.a;
        f->claims_one_intersecting = true;
        f->seed = seed;
        f->generator = "two-grounded n=" + std::to_string(n);
    }
    return out;
}

}  // namespace tangency
