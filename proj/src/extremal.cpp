#include "tangency/extremal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <unordered_map>

#include "tangency/popcount.hpp"

namespace tangency {

namespace {

// rows of bitsets: row i marks the neighbors of vertex i on the other side
struct BitRows {
    std::size_t words = 0;
    std::vector<std::uint64_t> data;

    BitRows(std::size_t rows, std::size_t cols) : words((cols + 63) / 64), data(rows * words, 0) {}
    std::uint64_t* row(std::size_t i) { return data.data() + i * words; }
    const std::uint64_t* row(std::size_t i) const { return data.data() + i * words; }
    void set(std::size_t i, std::size_t j) { row(i)[j / 64] |= std::uint64_t{1} << (j % 64); }
};

BitRows side_rows(const BipartiteGraph& g, Side side) {
    const bool a = side == Side::A;
    BitRows r(a ? g.a_size() : g.b_size(), a ? g.b_size() : g.a_size());
    const int n = a ? g.a_size() : g.b_size();
    for (int i = 0; i < n; ++i) {
        for (int j : a ? g.neighbors_a(i) : g.neighbors_b(i)) r.set(i, j);
    }
    return r;
}

std::uint64_t choose2(std::uint64_t x) { return x * (x - (x > 0 ? 1 : 0)) / 2; }

std::vector<int> without(const std::vector<int>& v, int x) {
    std::vector<int> out;
    out.reserve(v.size());
    for (int y : v) {
        if (y != x) out.push_back(y);
    }
    return out;
}

// exact floor(f(s)) and its long double value for s = 0..n
struct BudgetTable {
    std::vector<std::uint64_t> floor;  // saturated
    std::vector<long double> value;

    BudgetTable(const SparsenessBudget& f, std::size_t n) {
        floor.reserve(n + 1);
        value.reserve(n + 1);
        for (std::size_t s = 0; s <= n; ++s) {
            const mpz_class x = f.floor_at(s);
            floor.push_back(x.fits_ulong_p() ? x.get_ui() : ~std::uint64_t{0});
            value.push_back(f.at(s));
        }
    }
    bool exceeds(std::size_t edges, std::size_t s) const { return edges > floor[s]; }
};

constexpr std::size_t kMaxLarge = 4096;

PairSlack scan_pair(const BipartiteGraph& g, int u, int v, const BudgetTable& table, const ScanOptions& opt) {
    PairSlack out;
    const std::vector<int> na = without(g.neighbors_b(v), u);  // side A
    const std::vector<int> nb = without(g.neighbors_a(u), v);  // side B
    if (na.empty() || nb.empty()) return out;

    const bool small_is_a = na.size() <= nb.size();
    const std::vector<int>& sm = small_is_a ? na : nb;
    const std::vector<int>& lg = small_is_a ? nb : na;
    std::unordered_map<int, int> lg_index;
    for (std::size_t i = 0; i < lg.size(); ++i) lg_index[lg[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(sm.size());
    for (std::size_t i = 0; i < sm.size(); ++i) {
        const auto& nbrs = small_is_a ? g.neighbors_a(sm[i]) : g.neighbors_b(sm[i]);
        for (int y : nbrs) {
            auto it = lg_index.find(y);
            if (it != lg_index.end()) adj[i].push_back(it->second);
        }
    }

    auto make_witness = [&](const std::vector<int>& s_pick, const std::vector<int>& l_pick) {
        SubsetPair w;
        for (int i : s_pick) (small_is_a ? w.a_side : w.b_side).push_back(sm[i]);
        for (int j : l_pick) (small_is_a ? w.b_side : w.a_side).push_back(lg[j]);
        std::sort(w.a_side.begin(), w.a_side.end());
        std::sort(w.b_side.begin(), w.b_side.end());
        return w;
    };

    const std::size_t s_n = sm.size();
    const std::size_t l_n = lg.size();
    if (s_n <= opt.limit && l_n <= kMaxLarge) {
        out.mode = ScanMode::exhaustive;
        // Gray-code walk over subsets of the small side; for a fixed subset the
        // best large-side choice of each size takes the highest degrees
        std::vector<int> deg(l_n, 0);
        std::vector<std::size_t> hist(s_n + 1, 0);
        hist[0] = l_n;
        long double best = 0;
        bool have = false;
        std::uint64_t best_mask = 0;
        std::size_t best_j = 0;
        std::uint64_t mask = 0;
        for (std::uint64_t step = 1; step < (std::uint64_t{1} << s_n); ++step) {
            const int bit = std::countr_zero(step);
            const bool adding = !(mask >> bit & 1);
            mask ^= std::uint64_t{1} << bit;
            for (int y : adj[bit]) {
                --hist[deg[y]];
                deg[y] += adding ? 1 : -1;
                ++hist[deg[y]];
            }
            const std::size_t i = static_cast<std::size_t>(std::popcount(mask));
            std::size_t j = 0;
            std::size_t edges = 0;
            for (std::size_t k = i; k >= 1; --k) {
                for (std::size_t c = 0; c < hist[k]; ++c) {
                    ++j;
                    edges += k;
                    const long double sl = static_cast<long double>(edges) - table.value[i + j];
                    if (table.exceeds(edges, i + j)) out.violated = true;
                    if (!have || sl > best) {
                        have = true;
                        best = sl;
                        best_mask = mask;
                        best_j = j;
                    }
                }
            }
            if (j == 0) {
                const long double sl = -table.value[i + 1];
                if (!have || sl > best) {
                    have = true;
                    best = sl;
                    best_mask = mask;
                    best_j = 1;
                }
            }
        }
        out.slack = best;
        std::vector<int> s_pick;
        std::vector<int> d(l_n, 0);
        for (std::size_t i = 0; i < s_n; ++i) {
            if (best_mask >> i & 1) {
                s_pick.push_back(static_cast<int>(i));
                for (int y : adj[i]) ++d[y];
            }
        }
        std::vector<int> order(l_n);
        for (std::size_t j = 0; j < l_n; ++j) order[j] = static_cast<int>(j);
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return d[x] > d[y]; });
        order.resize(best_j);
        out.witness = make_witness(s_pick, order);
        return out;
    }

    out.mode = ScanMode::sampled;
    BitRows rows(s_n, l_n);
    for (std::size_t i = 0; i < s_n; ++i) {
        for (int y : adj[i]) rows.set(i, y);
    }
    std::mt19937_64 rng(opt.seed ^ (static_cast<std::uint64_t>(u) << 32) ^ static_cast<std::uint64_t>(v));
    std::vector<std::uint64_t> lmask(rows.words);
    std::vector<int> s_pick, best_s, best_l;
    bool have = false;
    long double best = 0;
    for (std::size_t t = 0; t < opt.samples; ++t) {
        do {
            s_pick.clear();
            for (std::size_t i = 0; i < s_n; ++i) {
                if (rng() & 1) s_pick.push_back(static_cast<int>(i));
            }
        } while (s_pick.empty());
        std::size_t l_count = 0;
        do {
            l_count = 0;
            for (std::size_t w = 0; w < rows.words; ++w) {
                std::uint64_t x = rng();
                if (w + 1 == rows.words && l_n % 64 != 0) x &= (std::uint64_t{1} << (l_n % 64)) - 1;
                lmask[w] = x;
                l_count += static_cast<std::size_t>(std::popcount(x));
            }
        } while (l_count == 0);
        std::size_t edges = 0;
        for (int i : s_pick) edges += and_popcount(rows.row(i), lmask.data(), rows.words);
        const std::size_t s = s_pick.size() + l_count;
        const long double sl = static_cast<long double>(edges) - table.value[s];
        if (table.exceeds(edges, s)) out.violated = true;
        if (!have || sl > best) {
            have = true;
            best = sl;
            best_s = s_pick;
            best_l.clear();
            for (std::size_t j = 0; j < l_n; ++j) {
                if (lmask[j / 64] >> (j % 64) & 1) best_l.push_back(static_cast<int>(j));
            }
        }
    }
    out.slack = best;
    out.witness = make_witness(best_s, best_l);
    return out;
}

}  // namespace

Rational avg_degree(const BipartiteGraph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("average degree of an empty graph");
    return ratio(2 * static_cast<long>(g.edge_count()), g.vertex_count());
}

Mapped near_regularize(const BipartiteGraph& g, int d) {
    if (d < 1) throw std::invalid_argument("split degree must be positive");
    auto copies = [d](std::size_t deg) -> int {
        if (deg <= static_cast<std::size_t>(d)) return 1;
        return static_cast<int>((deg + d - 1) / d);
    };
    Mapped out;
    std::vector<int> base_a(g.a_size()), base_b(g.b_size());
    for (int a = 0; a < g.a_size(); ++a) {
        base_a[a] = static_cast<int>(out.origin_a.size());
        out.origin_a.insert(out.origin_a.end(), copies(g.neighbors_a(a).size()), a);
    }
    for (int b = 0; b < g.b_size(); ++b) {
        base_b[b] = static_cast<int>(out.origin_b.size());
        out.origin_b.insert(out.origin_b.end(), copies(g.neighbors_b(b).size()), b);
    }
    // copy of b holding edge (a, b): chunk of a's rank in N(b)
    std::vector<std::vector<int>> b_copy(g.a_size());
    for (int a = 0; a < g.a_size(); ++a) b_copy[a].resize(g.neighbors_a(a).size());
    for (int b = 0; b < g.b_size(); ++b) {
        const auto& nb = g.neighbors_b(b);
        for (std::size_t r = 0; r < nb.size(); ++r) {
            const int a = nb[r];
            const auto& na = g.neighbors_a(a);
            const auto pos = std::lower_bound(na.begin(), na.end(), b) - na.begin();
            b_copy[a][pos] = base_b[b] + static_cast<int>(r / d);
        }
    }
    out.graph = BipartiteGraph(static_cast<int>(out.origin_a.size()), static_cast<int>(out.origin_b.size()));
    for (int a = 0; a < g.a_size(); ++a) {
        const auto& na = g.neighbors_a(a);
        for (std::size_t r = 0; r < na.size(); ++r) {
            out.graph.add_edge(base_a[a] + static_cast<int>(r / d), b_copy[a][r]);
        }
    }
    return out;
}

Mapped prune_min_degree(const BipartiteGraph& g, const Rational& t, std::optional<std::uint64_t> order_seed) {
    if (t < 0) throw std::invalid_argument("negative degree threshold");
    const int na = g.a_size();
    const int n = g.vertex_count();
    // vertex ids: A first, then B shifted by na
    std::vector<long> deg(n);
    std::vector<char> alive(n, 1), queued(n, 0);
    for (int a = 0; a < na; ++a) deg[a] = static_cast<long>(g.neighbors_a(a).size());
    for (int b = 0; b < g.b_size(); ++b) deg[na + b] = static_cast<long>(g.neighbors_b(b).size());
    auto below = [&](int x) { return Rational(deg[x]) < t; };

    std::vector<int> pending;
    for (int x = 0; x < n; ++x) {
        if (below(x)) {
            pending.push_back(x);
            queued[x] = 1;
        }
    }
    std::mt19937_64 rng(order_seed.value_or(0));
    while (!pending.empty()) {
        std::size_t pick = pending.size() - 1;
        if (order_seed) pick = std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(rng);
        std::swap(pending[pick], pending.back());
        const int x = pending.back();
        pending.pop_back();
        alive[x] = 0;
        const auto& nbrs = x < na ? g.neighbors_a(x) : g.neighbors_b(x - na);
        for (int y0 : nbrs) {
            const int y = x < na ? na + y0 : y0;
            if (!alive[y]) continue;
            --deg[y];
            if (!queued[y] && below(y)) {
                queued[y] = 1;
                pending.push_back(y);
            }
        }
    }

    Mapped out;
    std::vector<int> new_a(na, -1), new_b(g.b_size(), -1);
    for (int a = 0; a < na; ++a) {
        if (alive[a]) {
            new_a[a] = static_cast<int>(out.origin_a.size());
            out.origin_a.push_back(a);
        }
    }
    for (int b = 0; b < g.b_size(); ++b) {
        if (alive[na + b]) {
            new_b[b] = static_cast<int>(out.origin_b.size());
            out.origin_b.push_back(b);
        }
    }
    out.graph = BipartiteGraph(static_cast<int>(out.origin_a.size()), static_cast<int>(out.origin_b.size()));
    for (const auto& [a, b] : g.edges()) {
        if (new_a[a] >= 0 && new_b[b] >= 0) out.graph.add_edge(new_a[a], new_b[b]);
    }
    return out;
}

std::uint64_t count_k21(const BipartiteGraph& g, Side side) {
    const BitRows rows = side_rows(g, side);
    const int n = side == Side::A ? g.a_size() : g.b_size();
    std::uint64_t by_pairs = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) by_pairs += and_popcount(rows.row(i), rows.row(j), rows.words);
    }
    std::uint64_t by_centers = 0;
    const int m = side == Side::A ? g.b_size() : g.a_size();
    for (int c = 0; c < m; ++c) {
        by_centers += choose2((side == Side::A ? g.neighbors_b(c) : g.neighbors_a(c)).size());
    }
    if (by_pairs != by_centers) {
        throw InternalInconsistency("K21 counts disagree: " + std::to_string(by_pairs) + " vs " +
                                    std::to_string(by_centers));
    }
    return by_pairs;
}

std::uint64_t count_k22(const BipartiteGraph& g, K22Method method) {
    const BitRows rows = side_rows(g, Side::A);
    if (method == K22Method::pairs) {
        std::uint64_t total = 0;
        for (int i = 0; i < g.a_size(); ++i) {
            for (int j = i + 1; j < g.a_size(); ++j) total += choose2(and_popcount(rows.row(i), rows.row(j), rows.words));
        }
        return total;
    }
    // each K22 is counted once from each of its four edges
    std::uint64_t total = 0;
    for (const auto& [a, b] : g.edges()) {
        for (int a2 : g.neighbors_b(b)) {
            if (a2 != a) total += and_popcount(rows.row(a), rows.row(a2), rows.words) - 1;
        }
    }
    if (total % 4 != 0) throw InternalInconsistency("edge-based K22 sum not divisible by 4");
    return total / 4;
}

mpz_class SparsenessBudget::floor_at(std::uint64_t s) const {
    if (q < 0 || e < 0) throw std::invalid_argument("budget needs q >= 0 and e >= 0");
    const mpz_class& p = e.get_num();
    const mpz_class& r = e.get_den();
    if (!p.fits_ulong_p() || !r.fits_ulong_p()) throw std::invalid_argument("budget exponent too large");
    const unsigned long pu = p.get_ui();
    const unsigned long ru = r.get_ui();
    mpz_class num, den, sp, x;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), ru);
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), ru);
    mpz_ui_pow_ui(sp.get_mpz_t(), static_cast<unsigned long>(s), pu);
    num *= sp;
    mpz_fdiv_q(x.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class root;
    mpz_root(root.get_mpz_t(), x.get_mpz_t(), ru);
    return root;
}

long double SparsenessBudget::at(std::uint64_t s) const {
    if (s == 0 && e > 0) return 0;
    return static_cast<long double>(q.get_d()) * std::pow(static_cast<long double>(s), static_cast<long double>(e.get_d()));
}

std::string to_string(ScanMode m) { return m == ScanMode::exhaustive ? "exhaustive" : "sampled"; }

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::no_violation_found: return "no_violation_found";
    }
    return "?";
}

PairSlack sub_bineighborhood_violation(const BipartiteGraph& g, int u, int v, const SparsenessBudget& f,
                                       const ScanOptions& opt) {
    if (u < 0 || u >= g.a_size() || v < 0 || v >= g.b_size()) throw std::invalid_argument("vertex out of range");
    const BudgetTable table(f, g.neighbors_a(u).size() + g.neighbors_b(v).size());
    return scan_pair(g, u, v, table, opt);
}

SparsityReport check_f_sparse(const BipartiteGraph& g, const SparsenessBudget& f, Scope scope, const ScanOptions& opt) {
    SparsityReport rep;
    rep.scope = scope;
    const BudgetTable table(f, static_cast<std::size_t>(g.vertex_count()));
    auto visit = [&](int a, int b) {
        PairSlack ps = scan_pair(g, a, b, table, opt);
        if (ps.mode == ScanMode::exhaustive) ++rep.exhaustive;
        else ++rep.sampled;
        if (ps.slack && (!rep.worst_slack || *ps.slack > *rep.worst_slack)) rep.worst_slack = ps.slack;
        if (ps.violated) rep.verdict = Verdict::violated;
        rep.pairs.emplace(std::make_pair(a, b), std::move(ps));
    };
    if (scope == Scope::adjacent) {
        for (const auto& [a, b] : g.edges()) visit(a, b);
    } else {
        for (int a = 0; a < g.a_size(); ++a) {
            for (int b = 0; b < g.b_size(); ++b) visit(a, b);
        }
    }
    if (rep.verdict != Verdict::violated && rep.sampled > 0) rep.verdict = Verdict::no_violation_found;
    return rep;
}

BadTupleScan bad_4tuple_scan(const BipartiteGraph& g, const Rational& q, const Rational& c, const ScanOptions& opt,
                             std::size_t max_pairs) {
    if (q <= 0 || c <= 1) throw std::invalid_argument("bad 4-tuple scan needs q > 0 and c > 1");
    const SparsenessBudget f{q, c};
    const BudgetTable table(f, static_cast<std::size_t>(g.vertex_count()));
    const BitRows rows = side_rows(g, Side::A);
    BadTupleScan out;
    for (int a = 0; a < g.a_size(); ++a) {
        for (int b = 0; b < g.b_size(); ++b) {
            if (max_pairs != 0 && out.examined >= max_pairs) return out;
            ++out.examined;
            const std::size_t da = g.neighbors_b(b).size() - (g.has_edge(a, b) ? 1 : 0);
            const std::size_t db = g.neighbors_a(a).size() - (g.has_edge(a, b) ? 1 : 0);
            if (da == 0 || db == 0) {
                ++out.certified;
                continue;
            }
            // edges available between the two restricted neighborhoods
            std::size_t avail = 0;
            for (int a2 : g.neighbors_b(b)) {
                if (a2 == a) continue;
                avail += and_popcount(rows.row(a), rows.row(a2), rows.words) - (g.has_edge(a2, b) && g.has_edge(a, b) ? 1 : 0);
            }
            bool certified = opt.certify;
            for (std::size_t s = 2; s <= da + db && certified; ++s) {
                const std::size_t lo = s > db ? s - db : 1;
                const std::size_t hi = std::min(da, s - 1);
                if (lo > hi) continue;
                std::size_t most = 0;
                for (std::size_t i : {lo, hi, std::clamp(s / 2, lo, hi), std::clamp((s + 1) / 2, lo, hi)}) {
                    most = std::max(most, i * (s - i));
                }
                most = std::min(most, avail);
                if (table.exceeds(most, s)) certified = false;
            }
            if (certified) {
                ++out.certified;
                continue;
            }
            const PairSlack ps = scan_pair(g, a, b, table, opt);
            if (ps.mode == ScanMode::exhaustive) ++out.exhaustive;
            else ++out.sampled;
            if (ps.violated) {
                ++out.bad_pairs;
                if (!out.first_bad) out.first_bad = std::make_pair(a, b);
            }
        }
    }
    return out;
}

BipartiteGraph h_plus(const BipartiteGraph& h) {
    if (h.edge_count() == 0) throw std::invalid_argument("H+ needs H with at least one edge");
    BipartiteGraph out(h.a_size() + 1, h.b_size() + 1);
    for (const auto& [a, b] : h.edges()) out.add_edge(a, b);
    const int ap = h.a_size();
    const int bp = h.b_size();
    out.add_edge(ap, bp);
    for (int b = 0; b < h.b_size(); ++b) out.add_edge(ap, b);
    for (int a = 0; a < h.a_size(); ++a) out.add_edge(a, bp);
    return out;
}

namespace {

bool embed(const BipartiteGraph& g, const BipartiteGraph& h, bool swap) {
    const int ga = swap ? g.b_size() : g.a_size();
    const int gb = swap ? g.a_size() : g.b_size();
    if (h.a_size() > ga || h.b_size() > gb) return false;
    auto g_edge = [&](int x, int y) { return swap ? g.has_edge(y, x) : g.has_edge(x, y); };
    auto g_deg_a = [&](int x) { return (swap ? g.neighbors_b(x) : g.neighbors_a(x)).size(); };
    auto g_deg_b = [&](int y) { return (swap ? g.neighbors_a(y) : g.neighbors_b(y)).size(); };

    // H vertices: (is_a, id), highest degree first
    std::vector<std::pair<bool, int>> order;
    for (int a = 0; a < h.a_size(); ++a) order.emplace_back(true, a);
    for (int b = 0; b < h.b_size(); ++b) order.emplace_back(false, b);
    auto hdeg = [&](const std::pair<bool, int>& v) {
        return v.first ? h.neighbors_a(v.second).size() : h.neighbors_b(v.second).size();
    };
    std::stable_sort(order.begin(), order.end(), [&](const auto& x, const auto& y) { return hdeg(x) > hdeg(y); });

    std::vector<int> img_a(h.a_size(), -1), img_b(h.b_size(), -1);
    std::vector<char> used_a(ga, 0), used_b(gb, 0);
    auto rec = [&](auto&& self, std::size_t k) -> bool {
        if (k == order.size()) return true;
        const auto [is_a, id] = order[k];
        const int lim = is_a ? ga : gb;
        for (int x = 0; x < lim; ++x) {
            if ((is_a ? used_a : used_b)[x]) continue;
            if ((is_a ? g_deg_a(x) : g_deg_b(x)) < hdeg(order[k])) continue;
            bool ok = true;
            if (is_a) {
                for (int b : h.neighbors_a(id)) {
                    if (img_b[b] >= 0 && !g_edge(x, img_b[b])) {
                        ok = false;
                        break;
                    }
                }
            } else {
                for (int a : h.neighbors_b(id)) {
                    if (img_a[a] >= 0 && !g_edge(img_a[a], x)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            (is_a ? img_a : img_b)[id] = x;
            (is_a ? used_a : used_b)[x] = 1;
            if (self(self, k + 1)) return true;
            (is_a ? img_a : img_b)[id] = -1;
            (is_a ? used_a : used_b)[x] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

bool contains_subgraph(const BipartiteGraph& g, const BipartiteGraph& h) {
    if (h.vertex_count() > 10) throw std::invalid_argument("pattern graph has more than 10 vertices");
    return embed(g, h, false) || embed(g, h, true);
}

std::optional<ReverseViolation> intersection_reverse_check(const std::vector<std::vector<int>>& lists) {
    std::vector<std::unordered_map<int, int>> pos(lists.size());
    for (std::size_t i = 0; i < lists.size(); ++i) {
        for (std::size_t k = 0; k < lists[i].size(); ++k) {
            if (!pos[i].emplace(lists[i][k], static_cast<int>(k)).second) {
                throw std::invalid_argument("list " + std::to_string(i) + " repeats symbol " +
                                            std::to_string(lists[i][k]));
            }
        }
    }
    for (std::size_t i = 0; i < lists.size(); ++i) {
        for (std::size_t j = i + 1; j < lists.size(); ++j) {
            // shared symbols in list i order, keyed by their position in list j;
            // a common subsequence is an increasing run of those positions
            std::vector<std::pair<int, int>> seq;
            for (int s : lists[i]) {
                auto it = pos[j].find(s);
                if (it != pos[j].end()) seq.emplace_back(it->second, s);
            }
            if (seq.size() < 3) continue;
            int best1 = -1;                  // smallest position so far
            int pair_lo = -1, pair_hi = -1;  // increasing pair with the smallest tail
            for (int k = 0; k < static_cast<int>(seq.size()); ++k) {
                const int p = seq[k].first;
                if (pair_hi >= 0 && p > seq[pair_hi].first) {
                    return ReverseViolation{i, j, {seq[pair_lo].second, seq[pair_hi].second, seq[k].second}};
                }
                if (best1 >= 0 && p > seq[best1].first && (pair_hi < 0 || p < seq[pair_hi].first)) {
                    pair_lo = best1;
                    pair_hi = k;
                }
                if (best1 < 0 || p < seq[best1].first) best1 = k;
            }
        }
    }
    return std::nullopt;
}

OrderLists tangency_order_lists(const CurveFamily& a, const CurveFamily& b, TangencyType t) {
    OrderLists out;
    std::vector<Box> boxes;
    boxes.reserve(a.chains.size());
    for (const auto& ca : a.chains) boxes.push_back(bounding_box(ca));
    for (const auto& cb : b.chains) {
        const Box bb = bounding_box(cb);
        std::vector<std::pair<ChainPosition, CurveId>> hits;
        for (std::size_t i = 0; i < a.chains.size(); ++i) {
            if (!boxes[i].intersects(bb)) continue;
            const ContactKind k = classify_pair(a.chains[i], cb);
            if (const auto* tg = std::get_if<Tangency>(&k)) {
                if (tg->type == t) hits.emplace_back(locate(cb, tg->point), a.chains[i].id);
            } else if (std::holds_alternative<Multi>(k) || std::holds_alternative<Degenerate>(k)) {
                throw std::invalid_argument("curves " + std::to_string(a.chains[i].id) + " and " +
                                            std::to_string(cb.id) + " are not 1-intersecting");
            }
        }
        std::sort(hits.begin(), hits.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        auto& list = out[cb.id];
        for (const auto& h : hits) list.push_back(h.second);
    }
    return out;
}

}  // namespace tangency
