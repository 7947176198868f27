#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "tangency/extremal.hpp"
#include "tangency/generators.hpp"
#include "tangency/io.hpp"
#include "tangency/xmono.hpp"

namespace tangency::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational rational_option(const std::string& name, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

std::string join(const std::vector<std::string>& args) {
    std::string s;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) s += ' ';
        s += args[i];
    }
    return s;
}

std::string fmt(long double x) {
    std::ostringstream o;
    o << std::setprecision(12) << x;
    return o.str();
}

// writes to a file, or to `out` when the path is empty
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& write) {
    if (path.empty()) {
        write(out);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    write(f);
    if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

struct Context {
    std::string invocation;
    std::ostream& out;
    std::ostream& err;
    int code = ok;
};

ordered_json report_json(const ValidationReport& r, const CurveFamily& f) {
    ordered_json j;
    j["curves"] = f.size();
    j["pairs"] = r.pairs;
    j["tangencies"] = r.tangencies;
    j["crossings"] = r.crossings;
    j["disjoint"] = r.disjoint;
    j["is_1_intersecting"] = r.is_1_intersecting;
    j["is_precisely_1"] = r.is_precisely_1;
    j["all_x_monotone"] = r.all_x_monotone;
    if (f.ground) j["grounded_ok"] = r.grounded_ok;
    if (f.bi_infinite) j["bi_infinite_ok"] = r.bi_infinite_ok;
    j["triple_points"] = r.triple_points.size();
    j["degenerate_pairs"] = r.degenerate_pairs.size();
    j["non_simple"] = r.non_simple.size();
    j["multi_pairs"] = r.multi_pairs.size();
    j["endpoint_contacts"] = r.endpoint_contacts.size();
    j["problems"] = r.problems;
    return j;
}

void add_generate(CLI::App& app, Context& ctx) {
    auto* gen = app.add_subcommand("generate", "Write a generated family or graph");
    gen->require_subcommand(1);

    struct Opts {
        int n = 0, k = 0, span = 20;
        std::string eps, c = "3/2", out;
        std::uint64_t seed = 0;
        bool precisely_one = false;
        double touch = 0.3;
    };
    auto o = std::make_shared<Opts>();
    auto family_out = [&ctx, o](const CurveFamily& f) {
        emit(o->out, ctx.out, [&](std::ostream& s) { write_family(s, f); });
    };

    auto* fan = gen->add_subcommand("vee-fan", "Line plus n-1 vees; n-1 tangencies");
    fan->add_option("--n", o->n, "curves")->required();
    fan->add_option("--out", o->out, "output file (default stdout)");
    fan->callback([=] { family_out(gen_vee_fan(o->n)); });

    auto* dbl = gen->add_subcommand("doubling", "2^k curves with 2^(k-1) k tangencies");
    dbl->add_option("--k", o->k, "levels")->required();
    dbl->add_option("--out", o->out);
    dbl->callback([=] { family_out(gen_doubling(o->k)); });

    auto* gr = gen->add_subcommand("grounded", "Grounded family realizing the incidence grid");
    gr->add_option("--k", o->k)->required();
    gr->add_option("--eps", o->eps, "disk radius (rational)");
    gr->add_option("--out", o->out);
    gr->callback([=] {
        std::optional<Rational> eps;
        if (!o->eps.empty()) eps = rational_option("eps", o->eps);
        family_out(gen_grounded_family(o->k, eps));
    });

    auto* grid = gen->add_subcommand("incidence-grid", "Points and lines of the incidence grid");
    grid->add_option("--k", o->k)->required();
    grid->add_option("--out", o->out);
    grid->callback([&ctx, o] {
        const auto g = gen_incidence_grid(o->k);
        emit(o->out, ctx.out, [&](std::ostream& s) {
            s << "# " << ctx.invocation << '\n';
            for (const auto& [a, b] : g.points) s << "point " << a << ' ' << b << '\n';
            for (const auto& [m, c] : g.lines) s << "line " << m << ' ' << c << '\n';
        });
        if (!o->out.empty()) {
            ordered_json j{{"invocation", ctx.invocation},
                           {"points", g.points.size()},
                           {"lines", g.lines.size()},
                           {"incidences", incidence_count(g)}};
            ctx.out << j.dump() << '\n';
        }
    });

    auto* rg = gen->add_subcommand("random-graph", "Random n x n bipartite graph, p = n^(-(2-c)/(3-c))");
    rg->add_option("--n", o->n)->required();
    rg->add_option("--c", o->c, "exponent in (1,2), rational");
    rg->add_option("--seed", o->seed);
    rg->add_option("--out", o->out);
    rg->callback([&ctx, o] {
        const auto g = gen_random_bipartite(o->n, rational_option("c", o->c), o->seed);
        emit(o->out, ctx.out, [&](std::ostream& s) {
            s << "# " << ctx.invocation << '\n';
            write_graph(s, g);
        });
    });

    auto* wr = gen->add_subcommand("wiring", "Random wiring-diagram family");
    wr->add_option("--n", o->n)->required();
    wr->add_option("--seed", o->seed);
    wr->add_option("--touch-p", o->touch, "probability that an event is a touch");
    wr->add_flag("--precisely-one", o->precisely_one);
    wr->add_option("--out", o->out);
    wr->callback([=] {
        WiringOptions w;
        w.n = o->n;
        w.seed = o->seed;
        w.touch_probability = o->touch;
        w.precisely_one = o->precisely_one;
        family_out(gen_random_wiring(w));
    });

    auto* sg = gen->add_subcommand("segments", "Random non-overlapping segments");
    sg->add_option("--n", o->n)->required();
    sg->add_option("--span", o->span);
    sg->add_option("--seed", o->seed);
    sg->add_option("--out", o->out);
    sg->callback([=] { family_out(gen_random_segments(o->n, o->span, o->seed)); });
}

void add_family_commands(CLI::App& app, Context& ctx) {
    auto in = std::make_shared<std::string>();

    auto* val = app.add_subcommand("validate", "Pairwise validation report (JSON)");
    val->add_option("--in", *in)->required();
    val->callback([&ctx, in] {
        const auto f = load_family(*in);
        const auto r = validate_family(f);
        ordered_json j{{"invocation", ctx.invocation}};
        j.update(report_json(r, f));
        j["clean"] = r.clean();
        ctx.out << j.dump(2) << '\n';
        if (!r.clean()) ctx.code = property_failed;
    });

    auto* cnt = app.add_subcommand("count", "Tangency count, then counts by type");
    cnt->add_option("--in", *in)->required();
    cnt->callback([&ctx, in] {
        const auto f = load_family(*in);
        const auto r = validate_family(f);
        if (!r.is_1_intersecting) {
            ctx.err << "family is not 1-intersecting; tangency count is per touching pair\n";
            ctx.code = property_failed;
        }
        std::map<std::string, std::size_t> by;
        for (auto t : {TangencyType::LL, TangencyType::LR, TangencyType::RR, TangencyType::RL}) by[to_string(t)] = 0;
        for (const auto& e : r.tangency_edges) ++by[e.type ? to_string(*e.type) : "undefined"];
        ctx.out << r.tangencies << '\n';
        for (const auto& [k, v] : by) ctx.out << k << ' ' << v << '\n';
    });

    auto* env = app.add_subcommand("envelope", "Lower envelope pieces (CSV)");
    env->add_option("--in", *in)->required();
    env->callback([&ctx, in] {
        const auto f = load_family(*in);
        ctx.out << "# " << ctx.invocation << "\nlo,hi,curve\n";
        for (const auto& p : lower_envelope(f)) ctx.out << to_string(p.lo) << ',' << to_string(p.hi) << ',' << p.id << '\n';
    });

    auto* vis = app.add_subcommand("visibility", "Vertically visible disjoint pairs (CSV)");
    vis->add_option("--in", *in)->required();
    vis->callback([&ctx, in] {
        const auto f = load_family(*in);
        ctx.out << "# " << ctx.invocation << "\nu,v\n";
        for (const auto& [u, v] : vertical_visibility_pairs(f)) ctx.out << u << ',' << v << '\n';
    });

    struct PartOpts {
        bool cutting = false;
        unsigned r = 2, tries = 100;
        std::size_t cmax = 64;
        std::uint64_t seed = 0;
    };
    auto po = std::make_shared<PartOpts>();
    auto* part = app.add_subcommand("partition", "Trapezoidal partition, or a cutting search");
    part->add_option("--in", *in)->required();
    part->add_flag("--cutting", po->cutting, "search for a cutting instead of partitioning by all curves");
    part->add_option("--r", po->r);
    part->add_option("--cmax", po->cmax);
    part->add_option("--tries", po->tries);
    part->add_option("--seed", po->seed);
    part->callback([&ctx, in, po] {
        const auto f = load_family(*in);
        ordered_json j{{"invocation", ctx.invocation}, {"curves", f.size()}};
        if (!po->cutting) {
            const auto p = trapezoidal_partition(f);
            j["cells"] = p.cells.size();
            j["walls"] = p.wall_xs.size();
        } else {
            CuttingOptions c;
            c.r = po->r;
            c.c_max = po->cmax;
            c.tries = po->tries;
            c.seed = po->seed;
            const auto res = cutting_search(f, c);
            j["r"] = c.r;
            j["cmax"] = c.c_max;
            j["seed"] = c.seed;
            j["success"] = res.success;
            j["tries_used"] = res.tries_used;
            j["subset"] = res.subset;
            j["cells"] = res.cells;
            j["max_cell_curves"] = res.max_cell_curves;
            j["cell_bound"] = fmt(static_cast<long double>(f.size()) / c.r);
            if (!res.success) ctx.code = property_failed;
        }
        ctx.out << j.dump(2) << '\n';
    });
}

void add_graph(CLI::App& app, Context& ctx) {
    auto* graph = app.add_subcommand("graph", "Bipartite graph tools");
    graph->require_subcommand(1);
    struct Opts {
        std::string in, out, t = "0", method = "both", f_q = "1", f_e = "1", scope = "all", q = "5000", c = "3/2";
        int d = 0;
        std::size_t limit = 16, samples = 100000, max_pairs = 0;
        std::uint64_t seed = 0;
    };
    auto o = std::make_shared<Opts>();
    auto graph_out = [&ctx, o](const BipartiteGraph& g, ordered_json summary) {
        if (o->out.empty()) {
            ctx.out << "# " << ctx.invocation << '\n';
            write_graph(ctx.out, g);
            return;
        }
        save_graph(g, o->out);
        ordered_json j{{"invocation", ctx.invocation}};
        j.update(summary);
        j["vertices"] = g.vertex_count();
        j["edges"] = g.edge_count();
        ctx.out << j.dump() << '\n';
    };

    auto* reg = graph->add_subcommand("regularize", "Split vertices of degree > d (default ceil of the average)");
    reg->add_option("--in", o->in)->required();
    reg->add_option("--d", o->d);
    reg->add_option("--out", o->out);
    reg->callback([o, graph_out] {
        const auto g = load_graph(o->in);
        int d = o->d;
        if (d <= 0) {
            const Rational avg = avg_degree(g);
            const mpz_class c = (avg.get_num() + avg.get_den() - 1) / avg.get_den();
            d = std::max(1, static_cast<int>(c.get_si()));
        }
        graph_out(near_regularize(g, d).graph, ordered_json{{"d", d}});
    });

    auto* pr = graph->add_subcommand("prune", "Remove vertices of degree < t until none remain");
    pr->add_option("--in", o->in)->required();
    pr->add_option("--t", o->t, "threshold (rational)");
    pr->add_option("--out", o->out);
    pr->callback([o, graph_out] {
        const auto g = load_graph(o->in);
        const Rational t = rational_option("t", o->t);
        graph_out(prune_min_degree(g, t).graph, ordered_json{{"t", to_string(t)}});
    });

    auto* k22 = graph->add_subcommand("k22", "Count K_{2,2} subgraphs");
    k22->add_option("--in", o->in)->required();
    k22->add_option("--method", o->method)->check(CLI::IsMember({"pairs", "edges", "both"}));
    k22->callback([&ctx, o] {
        const auto g = load_graph(o->in);
        if (o->method == "both") {
            const auto p = count_k22(g, K22Method::pairs);
            const auto e = count_k22(g, K22Method::edges);
            if (p != e) {
                ctx.err << "methods disagree: pairs " << p << ", edges " << e << '\n';
                ctx.code = property_failed;
            }
            ctx.out << p << '\n';
        } else {
            ctx.out << count_k22(g, o->method == "pairs" ? K22Method::pairs : K22Method::edges) << '\n';
        }
    });

    auto* sp = graph->add_subcommand("sparse-check", "Check f-sparse sub-bineighborhoods, f(x) = q x^e");
    sp->add_option("--in", o->in)->required();
    sp->add_option("--f-q", o->f_q);
    sp->add_option("--f-e", o->f_e);
    sp->add_option("--scope", o->scope)->check(CLI::IsMember({"all", "adjacent"}));
    sp->add_option("--limit", o->limit);
    sp->add_option("--samples", o->samples);
    sp->add_option("--seed", o->seed);
    sp->callback([&ctx, o] {
        const auto g = load_graph(o->in);
        const SparsenessBudget f{rational_option("f-q", o->f_q), rational_option("f-e", o->f_e)};
        if (f.q < 0 || f.e < 0) throw UsageError("budget needs q >= 0 and e >= 0");
        const auto rep = check_f_sparse(g, f, o->scope == "all" ? Scope::all_pairs : Scope::adjacent,
                                        ScanOptions{o->limit, o->samples, o->seed});
        ordered_json j{{"invocation", ctx.invocation},
                       {"seed", o->seed},
                       {"verdict", to_string(rep.verdict)},
                       {"pairs", rep.pairs.size()},
                       {"exhaustive", rep.exhaustive},
                       {"sampled", rep.sampled}};
        j["worst_slack"] = rep.worst_slack ? ordered_json(fmt(*rep.worst_slack)) : ordered_json(nullptr);
        ctx.out << j.dump(2) << '\n';
        if (rep.verdict == Verdict::violated) ctx.code = property_failed;
    });

    auto* bad = graph->add_subcommand("bad4", "Scan for bad 4-tuples with budget q (|A'|+|B'|)^c");
    bad->add_option("--in", o->in)->required();
    bad->add_option("--q", o->q);
    bad->add_option("--c", o->c);
    bad->add_option("--limit", o->limit);
    bad->add_option("--samples", o->samples);
    bad->add_option("--seed", o->seed);
    bad->add_option("--max-pairs", o->max_pairs);
    bad->callback([&ctx, o] {
        const auto g = load_graph(o->in);
        const Rational q = rational_option("q", o->q);
        const Rational c = rational_option("c", o->c);
        if (q <= 0 || c <= 1) throw UsageError("bad4 needs q > 0 and c > 1");
        const auto r = bad_4tuple_scan(g, q, c, ScanOptions{o->limit, o->samples, o->seed}, o->max_pairs);
        ordered_json j{{"invocation", ctx.invocation}, {"seed", o->seed},           {"examined", r.examined},
                       {"certified", r.certified},     {"exhaustive", r.exhaustive}, {"sampled", r.sampled},
                       {"bad_pairs", r.bad_pairs},     {"exact", r.exact()}};
        if (r.first_bad) j["first_bad"] = {r.first_bad->first, r.first_bad->second};
        ctx.out << j.dump(2) << '\n';
        if (r.bad_pairs > 0) ctx.code = property_failed;
    });

    auto* hp = graph->add_subcommand("hplus", "Add adjacent a', b' joined to the other side");
    hp->add_option("--in", o->in)->required();
    hp->add_option("--out", o->out);
    hp->callback([o, graph_out] { graph_out(h_plus(load_graph(o->in)), ordered_json::object()); });

    auto* rc = graph->add_subcommand("reverse-check", "No two lists share three symbols in the same order");
    rc->add_option("--in", o->in, "one list of integers per line")->required();
    rc->callback([&ctx, o] {
        std::ifstream f(o->in);
        if (!f) throw std::runtime_error("cannot open '" + o->in + "'");
        const auto v = intersection_reverse_check(read_lists(f));
        if (!v) {
            ctx.out << "ok\n";
            return;
        }
        const auto [x, y, z] = v->triple;
        ctx.out << "violation lists " << v->i << ' ' << v->j << " triple " << x << ' ' << y << ' ' << z << '\n';
        ctx.code = property_failed;
    });
}

void add_scaling(CLI::App& app, Context& ctx) {
    struct Opts {
        std::string family = "grounded";
        int from = 1, to = 3;
        std::uint64_t seed = 0;
    };
    auto o = std::make_shared<Opts>();
    auto* sc = app.add_subcommand("scaling-report", "Tangency counts over a parameter sweep (CSV)");
    sc->add_option("--family", o->family)->check(CLI::IsMember({"grounded", "doubling", "vee-fan", "wiring"}));
    sc->add_option("--from", o->from, "first parameter (k, or n for vee-fan and wiring)");
    sc->add_option("--to", o->to);
    sc->add_option("--seed", o->seed, "wiring seed");
    sc->callback([&ctx, o] {
        if (o->from > o->to) throw UsageError("--from exceeds --to");
        ctx.out << "# " << ctx.invocation << "\nparam,n,t,t_over_n43,t_over_n32\n";
        for (int p = o->from; p <= o->to; ++p) {
            CurveFamily f;
            ValidationReport r;
            if (o->family == "grounded") {
                f = gen_grounded_family(p, std::nullopt, &r);
            } else {
                if (o->family == "doubling") {
                    f = gen_doubling(p);
                } else if (o->family == "vee-fan") {
                    f = gen_vee_fan(p);
                } else {
                    WiringOptions w;
                    w.n = p;
                    w.seed = o->seed;
                    f = gen_random_wiring(w);
                }
                r = validate_family(f);
            }
            const long double n = static_cast<long double>(f.size());
            const long double t = static_cast<long double>(r.tangencies);
            ctx.out << p << ',' << f.size() << ',' << r.tangencies << ',' << fmt(t / std::pow(n, 4.0L / 3))
                    << ',' << fmt(t / std::pow(n, 1.5L)) << '\n';
        }
    });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Context ctx{join(args), out, err};
    CLI::App app{"Exact tangency laboratory for 1-intersecting curves", args.empty() ? "tangency" : args[0]};
    app.require_subcommand(1);
    add_generate(app, ctx);
    add_family_commands(app, ctx);
    add_graph(app, ctx);
    add_scaling(app, ctx);

    // CLI11 consumes a reversed argument list without the program name
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        err << app.help();
        return usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return usage;
    } catch (const FlagMismatch& e) {
        err << "error: " << e.what() << '\n';
        return property_failed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << '\n';
        return property_failed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return ctx.code;
}

}  // namespace tangency::cli
