#include "toric/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "toric/discrepancy.hpp"
#include "toric/errors.hpp"
#include "toric/json_io.hpp"

namespace toric {

namespace {

struct Options {
    std::string input_path; // empty or "-" means stdin
    std::string format = "json";
    bool pretty = false;
    long long max_work = 0; // 0 = default / env

    std::string method = "completion";
    long long degree_bound = -1;
    bool squarefree_only = false;

    bool dual_check = false;

    long long bouquet_bound = 0; // 0 = formula default

    std::string binomial;

    std::string margin_json;
    std::string start_json;
    bool do_enumerate = false;
    long long walk_steps = -1;
    unsigned long long seed = 0;
    bool check_connected = false;
};

long long effective_max_work(const Options& opt) {
    if (opt.max_work > 0)
        return opt.max_work;
    if (const char* env = std::getenv("TORIC_HYPER_MAX_WORK")) {
        try {
            long long v = std::stoll(env);
            if (v > 0)
                return v;
        } catch (...) {
            throw ParseError("TORIC_HYPER_MAX_WORK is not an integer");
        }
    }
    return 1'000'000;
}

std::string slurp(const Options& opt, const std::string& fallback) {
    if (opt.input_path.empty() || opt.input_path == "-")
        return fallback;
    std::ifstream f(opt.input_path, std::ios::binary);
    if (!f)
        throw ParseError("cannot open input file " + opt.input_path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

HostPtr load_host(const Options& opt, const std::string& stdin_bytes) {
    std::string bytes = slurp(opt, stdin_bytes);
    if (opt.format == "text")
        return make_host(parse_text_hypergraph(bytes));
    return make_host(parse_simple_hypergraph(bytes));
}

std::string dump(const Options& opt, const Json& j) {
    return (opt.pretty ? j.dump(2) : j.dump()) + "\n";
}

GraverConfig graver_config(const Options& opt) {
    GraverConfig cfg;
    cfg.max_work = effective_max_work(opt);
    if (opt.method == "oracle")
        cfg.method = GraverMethod::bounded_oracle;
    else if (opt.method != "completion")
        throw ParseError("unknown method \"" + opt.method + "\"");
    if (opt.degree_bound >= 0)
        cfg.degree_bound = opt.degree_bound;
    return cfg;
}

int cmd_graver(const Options& opt, const std::string& stdin_bytes, std::ostream& out) {
    HostPtr host = load_host(opt, stdin_bytes);
    GraverBasis g = graver_basis(host, graver_config(opt));
    std::vector<WalkVector> elems =
        opt.squarefree_only ? squarefree_subset(g.elements) : g.elements;
    Json j;
    j["method"] = g.method == GraverMethod::completion ? "completion" : "bounded-oracle";
    if (g.bound)
        j["degree_bound"] = *g.bound;
    j["count"] = elems.size();
    Json list = Json::array();
    for (const auto& u : elems) {
        Json je = walk_vector_to_json(u, false);
        je["binomial"] = binomial_to_string(to_binomial(u));
        list.push_back(std::move(je));
    }
    j["elements"] = std::move(list);
    out << dump(opt, j);
    return 0;
}

int cmd_primitive(const Options& opt, const std::string& stdin_bytes, std::ostream& out) {
    WalkVector u = parse_walk_vector(slurp(opt, stdin_bytes));
    out << (is_primitive(u, effective_max_work(opt)) ? "true" : "false") << "\n";
    return 0;
}

int cmd_balance(const Options& opt, const std::string& stdin_bytes, std::ostream& out) {
    Bicoloring c = parse_bicoloring(slurp(opt, stdin_bytes));
    out << (is_balanced(c) ? "true" : "false") << "\n";
    return 0;
}

int cmd_decompose(const Options& opt, const std::string& stdin_bytes, std::ostream& out) {
    Bicoloring c = parse_bicoloring(slurp(opt, stdin_bytes));
    auto walks = decompose(c);
    Json j;
    j["count"] = walks.size();
    Json list = Json::array();
    for (const auto& w : walks) {
        Json steps = Json::array();
        for (const auto& st : w.steps)
            steps.push_back(Json::array(
                {st.edge, st.color == EdgeColor::blue ? "B" : "R"}));
        list.push_back(std::move(steps));
    }
    j["walks"] = std::move(list);
    out << dump(opt, j);
    return 0;
}

int cmd_bouquet(const Options& opt, const std::string& stdin_bytes, std::ostream& out) {
    HostPtr host = load_host(opt, stdin_bytes);
    Json j;
    if (auto pair = recognize_matching_pair(*host)) {
        j["classification"] = "matching-pair";
        j["matchings"] = Json::array({pair->first, pair->second});
        Multihypergraph mh{*host, std::vector<long long>(host->edge_count(), 1)};
        j["primitive"] = matching_pair_primitive(*host, mh);
    } else if (auto d = recognize_bouquet(host)) {
        switch (d->kind) {
        case BouquetKind::single_sunflower: j["classification"] = "sunflower"; break;
        case BouquetKind::partitioned_core: j["classification"] = "partitioned-core"; break;
        case BouquetKind::relaxed_core: j["classification"] = "relaxed-core"; break;
        }
        Json comps = Json::array();
        for (const auto& c : d->components) {
            Json jc;
            jc["vertices"] = c.vertices;
            jc["petals"] = c.petal_edges;
            jc["matching"] = c.matching_edges;
            jc["petal_count"] = c.petal_count;
            comps.push_back(std::move(jc));
        }
        j["components"] = std::move(comps);
        long long bound =
            opt.bouquet_bound > 0 ? opt.bouquet_bound : default_multiplicity_bound(*d);
        j["multiplicity_bound"] = bound;
        if (auto cert = bouquet_monomial(*d, bound))
            j["certificate"] = certificate_to_json(*cert);
        else
            j["certificate"] = nullptr;
    } else {
        j["classification"] = "none";
    }
    out << dump(opt, j);
    return 0;
}

int cmd_disc(const Options& opt, const std::string& stdin_bytes, std::ostream& out) {
    HostPtr host = load_host(opt, stdin_bytes);
    DiscrepancyConfig cfg;
    // search nodes are much cheaper than completion insertions
    cfg.max_work = effective_max_work(opt) * 50;
    Json j;
    if (opt.dual_check) {
        auto witness = is_monomial_via_dual(host, cfg);
        // Independent route: direct search for a balanced all-edge coloring.
        bool direct = false;
        const Hypergraph& h = *host;
        for (unsigned long long mask = 0;
             mask < (1ull << std::max(0, h.edge_count() - 1)) && !direct; ++mask) {
            std::vector<long long> bal(h.n, 0);
            for (int e = 0; e < h.edge_count(); ++e) {
                int s = (e > 0 && (mask >> (e - 1)) & 1ull) ? -1 : +1;
                for (int v : h.edges[e])
                    bal[v] += s;
            }
            direct = std::all_of(bal.begin(), bal.end(),
                                 [](long long x) { return x == 0; });
        }
        j["monomial"] = witness.has_value();
        j["direct_search"] = direct;
        j["agree"] = witness.has_value() == direct;
        if (witness)
            j["bicoloring"] = bicoloring_to_json(*witness, false);
        out << dump(opt, j);
        return 0;
    }
    DiscrepancyResult r = discrepancy(*host, cfg);
    j["value"] = r.value;
    j["witness"] = r.witness.chi;
    out << dump(opt, j);
    return 0;
}

int cmd_dual(const Options& opt, const std::string& stdin_bytes, std::ostream& out) {
    HostPtr host = load_host(opt, stdin_bytes);
    Hypergraph d = dual(*host);
    // Twin source vertices yield repeated dual edges; emit those as a
    // multihypergraph so the output parses back.
    bool dup = false;
    for (size_t i = 1; i < d.edges.size() && !dup; ++i)
        for (size_t k = 0; k < i && !dup; ++k)
            dup = d.edges[i] == d.edges[k];
    if (!dup) {
        out << dump(opt, hypergraph_to_json(d));
    } else {
        std::map<std::vector<int>, long long> count;
        for (const auto& e : d.edges)
            count[e]++;
        Multihypergraph mh;
        mh.base.n = d.n;
        for (auto& [e, c] : count) {
            mh.base.edges.push_back(e);
            mh.multiplicity.push_back(c);
        }
        out << dump(opt, multihypergraph_to_json(mh));
    }
    return 0;
}

int cmd_fiber(const Options& opt, const std::string& stdin_bytes, std::ostream& out) {
    HostPtr host = load_host(opt, stdin_bytes);
    long long work = effective_max_work(opt);

    auto parse_vec = [&](const std::string& text, const char* what) {
        Json j = Json::parse(text, nullptr, false);
        if (j.is_discarded() || !j.is_array())
            throw ParseError(std::string(what) + " must be a JSON integer array");
        return j.get<std::vector<Coeff>>();
    };

    if (opt.walk_steps >= 0) {
        if (opt.start_json.empty())
            throw ParseError("--walk needs --start");
        FiberPoint start{host, parse_vec(opt.start_json, "--start")};
        if (static_cast<int>(start.counts.size()) != host->edge_count())
            throw ParseError("--start length does not match edge count");
        GraverConfig mcfg;
        mcfg.max_work = work;
        auto moves = markov_moves(host, mcfg);
        auto trace = random_walk(start, moves, opt.walk_steps, opt.seed);
        for (const auto& p : trace)
            out << fiber_point_to_json(p).dump() << "\n";
        return 0;
    }

    std::vector<Coeff> b;
    if (!opt.margin_json.empty())
        b = parse_vec(opt.margin_json, "--margin");
    else if (!opt.start_json.empty())
        b = margin(FiberPoint{host, parse_vec(opt.start_json, "--start")});
    else
        throw ParseError("fiber needs --margin or --start");
    if (static_cast<int>(b.size()) != host->n)
        throw ParseError("margin length does not match vertex count");

    Fiber f = enumerate_fiber(host, b, work);
    if (opt.check_connected) {
        GraverConfig mcfg;
        mcfg.max_work = work;
        auto moves = markov_moves(host, mcfg);
        Json j;
        j["points"] = f.points.size();
        j["moves"] = moves.size();
        j["connected"] = fiber_connected(f, moves);
        out << dump(opt, j);
        return 0;
    }
    Json j;
    j["margin"] = f.margin;
    j["count"] = f.points.size();
    Json pts = Json::array();
    for (const auto& p : f.points)
        pts.push_back(p.counts);
    j["points"] = std::move(pts);
    out << dump(opt, j);
    return 0;
}

int cmd_ideal_member(const Options& opt, const std::string& stdin_bytes, std::ostream& out) {
    HostPtr host = load_host(opt, stdin_bytes);
    if (opt.binomial.empty())
        throw ParseError("ideal-member needs --binomial");
    Binomial b = parse_binomial(host, opt.binomial);
    out << (in_ideal(b) ? "true" : "false") << "\n";
    return 0;
}

} // namespace

RunResult run(const std::vector<std::string>& args, const std::string& input) {
    RunResult res;
    std::ostringstream out, err;

    CLI::App app{"toric algebra of uniform hypergraphs"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool takes_input = true) {
        if (takes_input)
            sub->add_option("input", opt.input_path, "input file (default: stdin)");
        sub->add_option("--format", opt.format, "input format: json|text")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_flag("--pretty", opt.pretty, "indented JSON output");
        sub->add_flag("--json", "canonical JSON output (default)");
        sub->add_option("--max-work", opt.max_work,
                        "work cap (default 10^6, env TORIC_HYPER_MAX_WORK)");
    };

    auto* graver = app.add_subcommand("graver", "Graver basis of the input hypergraph");
    add_common(graver);
    graver->add_option("--method", opt.method, "completion|oracle");
    graver->add_option("--degree-bound", opt.degree_bound, "degree bound for the oracle");
    graver->add_flag("--squarefree-only", opt.squarefree_only,
                     "only elements with coefficients in {-1,0,1}");

    auto* primitive = app.add_subcommand("primitive", "primitivity of a walk vector");
    add_common(primitive);

    auto* balance = app.add_subcommand("balance", "balancing condition for a bicoloring");
    add_common(balance);

    auto* decomp = app.add_subcommand("decompose", "split a balanced coloring into walks");
    add_common(decomp);

    auto* bouquet = app.add_subcommand("bouquet", "sparse bouquet recognition");
    add_common(bouquet);
    bouquet->add_option("--bound", opt.bouquet_bound,
                        "multiplicity search bound (default: petal-count formula)");

    auto* disc = app.add_subcommand("disc", "exact combinatorial discrepancy");
    add_common(disc);
    disc->add_flag("--dual-check", opt.dual_check,
                   "monomial test via the dual, cross-validated");

    auto* dualcmd = app.add_subcommand("dual", "dual hypergraph");
    add_common(dualcmd);

    auto* fiber = app.add_subcommand("fiber", "fiber enumeration and random walks");
    add_common(fiber);
    fiber->add_option("--margin", opt.margin_json, "margin vector as JSON array");
    fiber->add_option("--start", opt.start_json, "start point as JSON array");
    fiber->add_flag("--enumerate", opt.do_enumerate, "list the whole fiber");
    fiber->add_option("--walk", opt.walk_steps, "random walk step count");
    fiber->add_option("--seed", opt.seed, "random walk seed");
    fiber->add_flag("--check-connected", opt.check_connected,
                    "connectivity under the Graver moves");

    auto* member = app.add_subcommand("ideal-member", "toric ideal membership of a binomial");
    add_common(member);
    member->add_option("--binomial", opt.binomial,
                       "binomial as t_{e<i>}*... - t_{e<j>}*...");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp& e) {
        res.exit_code = 0;
        res.out = app.help();
        return res;
    } catch (const CLI::ParseError& e) {
        res.exit_code = 2;
        res.err = std::string(e.what()) + "\n";
        return res;
    }

    try {
        if (graver->parsed())
            res.exit_code = cmd_graver(opt, input, out);
        else if (primitive->parsed())
            res.exit_code = cmd_primitive(opt, input, out);
        else if (balance->parsed())
            res.exit_code = cmd_balance(opt, input, out);
        else if (decomp->parsed())
            res.exit_code = cmd_decompose(opt, input, out);
        else if (bouquet->parsed())
            res.exit_code = cmd_bouquet(opt, input, out);
        else if (disc->parsed())
            res.exit_code = cmd_disc(opt, input, out);
        else if (dualcmd->parsed())
            res.exit_code = cmd_dual(opt, input, out);
        else if (fiber->parsed())
            res.exit_code = cmd_fiber(opt, input, out);
        else if (member->parsed())
            res.exit_code = cmd_ideal_member(opt, input, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        res.exit_code = 2;
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << "\n";
        res.exit_code = 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        res.exit_code = 1;
    }

    res.out = out.str();
    res.err = err.str();
    return res;
}

} // namespace toric
