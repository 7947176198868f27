// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "tangency/extremal.hpp"
#include "tangency/generators.hpp"
#include "tangency/xmono.hpp"

using namespace tangency;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// families seen anywhere in this run, for the ceiling checks
struct Seen {
    std::size_t n;
    std::size_t t;
    bool precisely_one_grounded;
};
std::vector<Seen> seen;

void record(const CurveFamily& f, const ValidationReport& r) {
    if (!r.is_1_intersecting) return;
    seen.push_back({f.size(), r.tangencies, r.is_precisely_1 && f.ground.has_value() && r.grounded_ok});
}

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome fan() {
    const auto t0 = Clock::now();
    int bad = 0;
    for (int n = 2; n <= 128; ++n) {
        const auto f = gen_vee_fan(n);
        const auto r = validate_family(f);
        record(f, r);
        if (!r.is_precisely_1 || r.tangencies != static_cast<std::size_t>(n - 1)) ++bad;
    }
    const double s = seconds_since(t0);
    std::ostringstream d;
    d << "n=2..128, " << bad << " mismatches, " << s << " s (limit 10 s)";
    return {bad == 0 && s < 10, d.str()};
}

Outcome doubling() {
    const auto t0 = Clock::now();
    int bad = 0;
    std::size_t last = 0;
    for (int k = 1; k <= 7; ++k) {
        const auto f = gen_doubling(k);
        const auto r = validate_family(f);
        record(f, r);
        last = r.tangencies;
        const std::size_t expect = (std::size_t{1} << (k - 1)) * static_cast<std::size_t>(k);
        if (!r.is_1_intersecting || !r.all_x_monotone || !r.bi_infinite_ok || r.tangencies != expect) ++bad;
    }
    const double s = seconds_since(t0);
    std::ostringstream d;
    d << "k=1..7, t(k=7)=" << last << " (expect 448), " << bad << " mismatches, " << s << " s (limit 30 s)";
    return {bad == 0 && s < 30, d.str()};
}

Outcome grid() {
    const auto t0 = Clock::now();
    int bad = 0;
    for (int k = 1; k <= 6; ++k) {
        const auto g = gen_incidence_grid(k);
        if (incidence_count(g) != static_cast<std::size_t>(4 * k * k * k * k)) ++bad;
        for (std::size_t c : points_per_line(g)) {
            if (c != static_cast<std::size_t>(k)) ++bad;
        }
    }
    const double s = seconds_since(t0);
    std::ostringstream d;
    d << "k=1..6, " << bad << " mismatches, " << s << " s (limit 10 s)";
    return {bad == 0 && s < 10, d.str()};
}

Outcome grounded() {
    const auto t0 = Clock::now();
    int bad = 0;
    std::ostringstream d;
    for (int k = 1; k <= 4; ++k) {
        ValidationReport r;
        CurveFamily f;
        try {
            f = gen_grounded_family(k, std::nullopt, &r);
        } catch (const std::exception& e) {
            ++bad;
            d << "k=" << k << " threw: " << e.what() << "; ";
            continue;
        }
        record(f, r);
        const std::size_t incid = incidence_count(gen_incidence_grid(k));
        const mpz_class t(static_cast<unsigned long>(r.tangencies));
        const mpz_class n(static_cast<unsigned long>(f.size()));
        const bool quarter = 64 * t * t * t == n * n * n * n;
        if (!r.grounded_ok || !r.all_x_monotone || !r.is_1_intersecting || r.tangencies != incid || !quarter) ++bad;
        d << "k=" << k << " n=" << f.size() << " t=" << r.tangencies << "; ";
    }
    const double s = seconds_since(t0);
    d << "t/n^(4/3)=1/4 checked as 64t^3=n^4, " << bad << " mismatches, " << s << " s (limit 120 s)";
    return {bad == 0 && s < 120, d.str()};
}

Outcome forest() {
    int bad = 0;
    std::size_t edges = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        WiringOptions o;
        o.n = 2 + static_cast<int>(seed % 19);
        o.precisely_one = true;
        o.touch_probability = 0.6;
        o.seed = seed;
        auto f = gen_random_wiring(o);
        auto r = validate_family(f);
        if (!r.is_precisely_1 || !r.bi_infinite_ok) {
            ++bad;
            continue;
        }
        edges += r.tangencies;
        if (!tangency_graph(f, r).is_forest()) ++bad;
        // the same curves grounded at the left edge of the window
        f.ground = f.window->x_lo;
        r = validate_family(f);
        record(f, r);
    }
    std::ostringstream d;
    d << "50 wirings, n=2..20, " << edges << " tangencies total, " << bad << " violations";
    return {bad == 0, d.str()};
}

Outcome marked() {
    int bad = 0;
    std::size_t cross_total = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        WiringOptions o;
        o.n = 4 + static_cast<int>(seed % 17);
        o.touch_probability = 0.6;
        o.seed = 1000 + seed;
        const auto f = gen_random_wiring(o);
        const auto r = validate_family(f);
        record(f, r);
        // L1: the curves starting on the lowest levels
        std::vector<std::pair<Rational, CurveId>> starts;
        for (const auto& c : f.chains) starts.emplace_back(c.start().y, c.id);
        std::sort(starts.begin(), starts.end());
        const std::size_t split = 1 + seed % (f.size() - 1);
        std::set<CurveId> low;
        for (std::size_t i = 0; i < split; ++i) low.insert(starts[i].second);
        bool hypothesis = r.is_1_intersecting && r.bi_infinite_ok;
        for (const auto& c1 : f.chains) {
            for (const auto& c2 : f.chains) {
                if (low.count(c1.id) && !low.count(c2.id) && !starts_below(c1, c2)) hypothesis = false;
            }
        }
        if (!hypothesis) {
            ++bad;
            continue;
        }
        std::size_t cross = 0;
        for (const auto& e : r.tangency_edges) cross += low.count(e.u) != low.count(e.v) ? 1 : 0;
        cross_total += cross;
        if (cross > f.size() - 1) ++bad;
    }
    std::ostringstream d;
    d << "50 split wirings, " << cross_total << " cross tangencies total, " << bad << " violations";
    return {bad == 0, d.str()};
}

Outcome order_lists() {
    int misses = 0;
    std::size_t listed = 0;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto inst = gen_two_grounded(12 + static_cast<int>(seed % 13), 0.7, seed);
        for (auto t : {TangencyType::LL, TangencyType::LR, TangencyType::RR, TangencyType::RL}) {
            std::vector<std::vector<int>> seqs;
            for (const auto& [id, l] : tangency_order_lists(inst.a, inst.b, t)) {
                listed += l.size();
                seqs.push_back(l);
            }
            if (intersection_reverse_check(seqs)) ++misses;
        }
    }
    // planted violations
    std::mt19937_64 rng(77);
    int planted_missed = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::vector<int>> lists(2 + trial % 4);
        for (auto& l : lists) {
            for (int s = 0; s < 12; ++s) {
                if (rng() % 3 == 0) l.push_back(s);
            }
            std::shuffle(l.begin(), l.end(), rng);
        }
        const std::size_t i = rng() % lists.size();
        std::size_t j = rng() % lists.size();
        if (j == i) j = (i + 1) % lists.size();
        std::vector<int> triple{100 + trial % 7, 200, 300};
        std::shuffle(triple.begin(), triple.end(), rng);
        for (std::size_t w : {i, j}) {
            auto& l = lists[w];
            std::vector<std::size_t> at;
            for (int k = 0; k < 3; ++k) at.push_back(rng() % (l.size() + 1));
            std::sort(at.begin(), at.end());
            for (int k = 2; k >= 0; --k) l.insert(l.begin() + static_cast<long>(at[k]), triple[k]);
        }
        if (!intersection_reverse_check(lists)) ++planted_missed;
    }
    std::ostringstream d;
    d << "25 instances x 4 types, " << listed << " listed tangencies, " << misses << " violations; 200 planted, "
      << planted_missed << " missed";
    return {misses == 0 && planted_missed == 0, d.str()};
}

Outcome cutting() {
    int bad = 0;
    std::size_t tries = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int n = 16 + static_cast<int>(seed) * 2;
        const auto f = gen_random_segments(n, 4 * n, seed);
        const auto r = validate_family(f);
        record(f, r);
        for (unsigned rr : {2u, 4u}) {
            CuttingOptions o;
            o.r = rr;
            o.c_max = 64;
            o.tries = 100;
            o.seed = seed;
            const auto res = cutting_search(f, o);
            tries += res.tries_used;
            if (!res.success || res.cells > 64u * rr * rr) {
                ++bad;
                continue;
            }
            for (const auto& cs : cell_stats(res.partition, f)) {
                if (cs.total() * rr > static_cast<std::size_t>(n)) ++bad;
            }
        }
    }
    std::ostringstream d;
    d << "20 segment families n=16..54, r in {2,4}, " << tries << " tries total, " << bad << " failures";
    return {bad == 0, d.str()};
}

int ceil_avg(const BipartiteGraph& g) {
    const Rational avg = avg_degree(g);
    const mpz_class c = (avg.get_num() + avg.get_den() - 1) / avg.get_den();
    return static_cast<int>(c.get_si());
}

Outcome pipeline() {
    const auto t0 = Clock::now();
    int bad = 0;
    Rational min_avg = -1;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = 100 + 4 * static_cast<int>(seed);
        const auto g = gen_random_bipartite(n, ratio(3, 2), seed);
        const Rational avg = avg_degree(g);
        if (min_avg < 0 || avg < min_avg) min_avg = avg;
        if (avg < 16 || g.vertex_count() > 1000) {
            ++bad;
            continue;
        }
        const int d = ceil_avg(g);
        const auto split = near_regularize(g, d);
        const auto pruned = prune_min_degree(split.graph, Rational(d) / 8).graph;
        if (2 * pruned.edge_count() < g.edge_count()) ++bad;
        if (pruned.vertex_count() > 2 * g.vertex_count()) ++bad;
        for (int a = 0; a < pruned.a_size(); ++a) {
            const auto k = static_cast<long>(pruned.neighbors_a(a).size());
            if (Rational(k) < Rational(d) / 8 || k > d) ++bad;
        }
        for (int b = 0; b < pruned.b_size(); ++b) {
            const auto k = static_cast<long>(pruned.neighbors_b(b).size());
            if (Rational(k) < Rational(d) / 8 || k > d) ++bad;
        }
    }
    const double s = seconds_since(t0);
    std::ostringstream d;
    d << "100 graphs, |V|=200..596, min avg degree " << min_avg.get_d() << ", " << bad << " violations, " << s
      << " s (limit 60 s)";
    return {bad == 0 && s < 60, d.str()};
}

Outcome k22() {
    int bad = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = 10 + static_cast<int>(seed % 31);
        const auto g = gen_random_bipartite(n, seed % 2 ? ratio(3, 2) : ratio(6, 5), seed);
        if (count_k22(g, K22Method::pairs) != count_k22(g, K22Method::edges)) ++bad;
    }
    BipartiteGraph k33(3, 3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) k33.add_edge(a, b);
    const auto p = count_k22(k33, K22Method::pairs);
    const auto e = count_k22(k33, K22Method::edges);
    std::ostringstream d;
    d << "100 graphs with sides 10..40, " << bad << " disagreements; K33 pairs=" << p << " edges=" << e;
    return {bad == 0 && p == 9 && e == 9, d.str()};
}

Outcome random_graph() {
    bool ok = true;
    std::ostringstream d;
    for (const Rational c : {ratio(3, 2), ratio(6, 5)}) {
        const int n = 64;
        const long double expect = bipartite_edge_probability(n, c) * n * n;
        std::uint64_t seed = 1;
        BipartiteGraph g;
        for (int attempt = 0; attempt < 10; ++attempt, ++seed) {
            g = gen_random_bipartite(n, c, seed);
            const long double m = static_cast<long double>(g.edge_count());
            if (m >= expect / 2 && m <= expect * 2) break;
            std::clog << "edge count " << g.edge_count() << " outside factor 2 of " << static_cast<double>(expect)
                      << " at seed " << seed << ", re-seeding\n";
        }
        const long double m = static_cast<long double>(g.edge_count());
        const bool edges_ok = m >= expect / 2 && m <= expect * 2;
        ScanOptions opt;
        opt.limit = 16;
        opt.samples = 100000;
        opt.seed = seed;
        const auto scan = bad_4tuple_scan(g, Rational(5000), c, opt);
        // the same scan without the density shortcut
        opt.certify = false;
        const auto t0 = Clock::now();
        const auto full = bad_4tuple_scan(g, Rational(5000), c, opt);
        ok = ok && edges_ok && scan.bad_pairs == 0 && full.bad_pairs == 0;
        d << "c=" << c.get_str() << " seed=" << seed << " m=" << g.edge_count() << " (p n^2=" << static_cast<double>(expect)
          << ") bad=" << scan.bad_pairs << " [certified " << scan.certified << ", exhaustive " << scan.exhaustive
          << ", sampled " << scan.sampled << "], without shortcut bad=" << full.bad_pairs << " [exhaustive "
          << full.exhaustive << ", sampled " << full.sampled << ", " << seconds_since(t0) << " s]; ";
    }
    return {ok, d.str()};
}

Outcome oracles() {
    int bad = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const int n = 2 + static_cast<int>(seed % 11);
        const auto f = seed % 2 ? gen_random_polylines(n, 4, 16, seed) : gen_random_segments(n, 16, seed);
        const auto r = validate_family(f);
        record(f, r);
        const auto env = lower_envelope(f);
        const auto vis = vertical_visibility_pairs(f);
        std::set<std::pair<CurveId, CurveId>> touching;
        for (std::size_t i = 0; i < f.size(); ++i) {
            for (std::size_t j = i + 1; j < f.size(); ++j) {
                if (!common_points(f.chains[i], f.chains[j]).empty()) {
                    touching.emplace(std::min(f.chains[i].id, f.chains[j].id), std::max(f.chains[i].id, f.chains[j].id));
                }
            }
        }
        std::set<std::pair<CurveId, CurveId>> brute_vis;
        const auto xs = event_xs(f);
        for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
            const Rational mid = (xs[k] + xs[k + 1]) / 2;
            std::vector<std::pair<Rational, CurveId>> column;
            for (const auto& c : f.chains) {
                if (auto y = y_at(c, mid)) column.emplace_back(*y, c.id);
            }
            std::sort(column.begin(), column.end());
            const EnvelopePiece* piece = nullptr;
            for (const auto& e : env) {
                if (e.lo < mid && mid < e.hi) piece = &e;
            }
            if (column.empty() != (piece == nullptr)) ++bad;
            if (!column.empty() && piece && column[0].second != piece->id) ++bad;
            for (std::size_t i = 0; i + 1 < column.size(); ++i) {
                const auto key = std::make_pair(std::min(column[i].second, column[i + 1].second),
                                                std::max(column[i].second, column[i + 1].second));
                if (!touching.count(key)) brute_vis.insert(key);
            }
        }
        if (brute_vis != vis) ++bad;
    }
    std::ostringstream d;
    d << "50 families n=2..12, " << bad << " disagreements";
    return {bad == 0, d.str()};
}

Outcome ceilings() {
    int bad = 0;
    std::size_t checked = 0, grounded = 0;
    for (const auto& s : seen) {
        if (s.n > 128) continue;
        ++checked;
        if (s.t > s.n * s.n) ++bad;
        if (s.precisely_one_grounded) {
            ++grounded;
            if (s.t * s.t > 25 * s.n * s.n * s.n) ++bad;  // t <= 5 n^(3/2)
        }
    }
    std::ostringstream d;
    d << checked << " validated families with n <= 128 (" << grounded << " precisely-1 grounded), " << bad
      << " violations";
    return {bad == 0 && checked > 0 && grounded > 0, d.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"fan construction", fan},
        {"doubling construction", doubling},
        {"incidence grid", grid},
        {"grounded construction", grounded},
        {"forest property", forest},
        {"marked-tangency bound", marked},
        {"order-list bridge", order_lists},
        {"cutting search", cutting},
        {"regularize/prune pipeline", pipeline},
        {"K22 counting", k22},
        {"random lower-bound graph", random_graph},
        {"envelope and visibility oracles", oracles},
        {"sanity ceilings", ceilings},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
                  << o.detail << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
