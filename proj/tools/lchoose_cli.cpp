// lchoose: command-line front end.
//
// Exit codes: 0 positive answer, 1 negative answer (with certificate),
// 2 usage or parse error, 3 budget exceeded.

#include "lchoose/bundle.hpp"
#include "lchoose/construct.hpp"
#include "lchoose/montecarlo.hpp"
#include "lchoose/text.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace lchoose;

namespace {

constexpr std::uint64_t default_seed = 20240601;

enum Exit { positive = 0, negative = 1, usage = 2, budget = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& body, const std::string& path)
{
    if (path.empty())
        std::cout << body;
    else
        text::write_file(path, body);
}

std::string refinement_text(const OrderWitness& w)
{
    std::ostringstream out;
    for (std::size_t b = 0; b < w.refinement_map.size(); ++b) {
        out << (b ? ";" : "") << w.lambda_pp[b] << ':';
        auto block = w.refinement_map[b];
        std::sort(block.begin(), block.end());
        for (std::size_t i = 0; i < block.size(); ++i)
            out << (i ? "+" : "") << block[i];
    }
    return out.str();
}

std::string colouring_text(const Colouring& c)
{
    std::ostringstream out;
    for (std::size_t v = 0; v < c.colour_of.size(); ++v)
        out << "colour " << v + 1 << ' ' << c.colour_of[v] << '\n';
    return out.str();
}

// order ---------------------------------------------------------------

struct OrderArgs {
    std::string lambda, lambda_p;
};

int cmd_order(const OrderArgs& a)
{
    auto lambda = parse_partition(a.lambda);
    auto lambda_p = parse_partition(a.lambda_p);
    auto w = order_witness(lambda, lambda_p);
    if (!w) {
        std::cout << "false\n";
        return negative;
    }
    std::cout << "true\n";
    std::cout << "witness=" << w->lambda_pp_partition().to_csv() << '\n';
    std::cout << "refinement=" << refinement_text(*w) << '\n';
    return positive;
}

// check ---------------------------------------------------------------

struct CheckArgs {
    std::string graph, assignment;
    std::uint64_t max_nodes = unlimited;
};

int cmd_check(const CheckArgs& a)
{
    auto g = read_graph_file(a.graph);
    auto L = parse_assignment(text::read_file(a.assignment));
    if (auto violation = find_assignment_violation(g, L))
        throw UsageError("invalid assignment: " + violation->describe());
    auto c = l_colour(g, L, a.max_nodes);
    if (!c) {
        std::cout << "not-colourable\n";
        return negative;
    }
    std::cout << "colourable\n" << colouring_text(*c);
    return positive;
}

// choosable -----------------------------------------------------------

struct ChoosableArgs {
    std::string graph, lambda, cert;
    ChoosabilityOptions options;
};

int cmd_choosable(const ChoosableArgs& a)
{
    auto g = read_graph_file(a.graph);
    auto lambda = parse_partition(a.lambda);
    auto cert = is_lambda_choosable(g, lambda, a.options);
    if (auto yes = std::get_if<Choosable>(&cert)) {
        std::cout << "choosable\nassignments_checked=" << yes->assignments_checked << '\n';
        if (!a.cert.empty())
            text::write_file(a.cert, "# certificate: choosable\nassignments_checked=" +
                                         std::to_string(yes->assignments_checked) + '\n');
        return positive;
    }
    if (auto c = std::get_if<Colourable>(&cert)) {
        std::cout << "choosable\n";
        if (!a.cert.empty())
            text::write_file(a.cert, "# certificate: colouring\n" + colouring_text(c->colouring));
        return positive;
    }
    const auto& no = std::get<NotChoosable>(cert);
    std::cout << "not-choosable\nrank=" << no.rank << '\n';
    auto body = "# certificate: not " + lambda.to_csv() + "-choosable, rank " + std::to_string(no.rank) + '\n' +
                serialize_assignment(no.witness);
    emit(body, a.cert);
    return negative;
}

// gadget --------------------------------------------------------------

struct GadgetArgs {
    int part = 0;
    std::size_t g = 3;
    std::string out, file;
};

int cmd_gadget_make(const GadgetArgs& a)
{
    auto j = make_gadget(a.part, a.g);
    if (a.out.empty())
        std::cout << "# " << gadget_header(a.part, a.g) << '\n' << serialize_graph(j.graph);
    else
        write_graph_file(a.out, j.graph, gadget_header(a.part, a.g));
    return positive;
}

int cmd_gadget_verify(const GadgetArgs& a)
{
    auto j = read_graph_file(a.file);
    auto report = verify_gadget(j, a.part, a.g);
    std::cout << "order=" << j.order() << '\n';
    std::cout << "degeneracy=" << report.degeneracy << '\n';
    std::cout << "girth=" << report.girth.to_string() << '\n';
    std::cout << "degeneracy_ok=" << (report.degeneracy_ok ? "true" : "false") << '\n';
    std::cout << "girth_ok=" << (report.girth_ok ? "true" : "false") << '\n';
    std::cout << "not_colourable_ok=" << (report.not_colourable_ok ? "true" : "false") << '\n';
    for (const auto& v : report.violations(a.part, a.g))
        std::cout << "violation=" << v << '\n';
    return report.ok() ? positive : negative;
}

// construct -----------------------------------------------------------

struct ConstructArgs {
    std::string lambda;
    std::vector<std::string> targets;
    std::size_t g = 0;
    double eps = 0;
    std::size_t n = 0;
    std::uint64_t seed = default_seed;
    std::string out;
    std::vector<std::string> gadgets;
    std::size_t colour_check_cap = 0;
};

int cmd_construct(const ConstructArgs& a)
{
    PipelineRequest req;
    req.lambda = parse_partition(a.lambda);
    for (const auto& t : a.targets)
        req.targets.push_back(parse_partition(t));
    req.g = a.g;
    req.epsilon = a.eps;
    req.n = a.n;
    req.seed = a.seed;
    req.verify.colour_check_cap = a.colour_check_cap;
    for (const auto& spec : a.gadgets) {
        auto colon = spec.find(':');
        if (colon == std::string::npos)
            throw UsageError("--gadget expects PART:FILE, got '" + spec + "'");
        auto part = static_cast<int>(text::parse_uint(spec.substr(0, colon), 0, "gadget part"));
        req.supplied_gadgets[part] = read_graph_file(spec.substr(colon + 1));
    }

    auto result = run_pipeline(req);
    write_bundle(a.out, result);

    bool ok = true;
    for (const auto& r : result.reports)
        ok = ok && r.structural_ok();
    std::cout << "bundle=" << a.out << '\n';
    std::cout << "vertices=" << result.graph.graph.order() << '\n';
    std::cout << "edges=" << result.graph.graph.size() << '\n';
    std::cout << "structural_ok=" << (ok ? "true" : "false") << '\n';
    return ok ? positive : negative;
}

// verify --------------------------------------------------------------

struct VerifyArgs {
    std::string dir;
    std::size_t colour_check_cap = 0;
};

int cmd_verify(const VerifyArgs& a)
{
    auto bundle = read_bundle(a.dir);
    VerifyOptions options;
    options.colour_check_cap = a.colour_check_cap;
    bool ok = bundle.rebuild_matches;
    std::cout << "rebuild_matches=" << (bundle.rebuild_matches ? "true" : "false") << '\n';
    for (std::size_t i = 0; i < bundle.assignments.size(); ++i) {
        auto report = verify_construction(bundle.graph, bundle.assignments[i], options);
        std::cout << "[target " << bundle.graph.params.targets[i].to_csv() << "]\n" << report.to_text();
        ok = ok && report.structural_ok();
    }
    std::cout << "[feasibility]\n" << feasibility_report(bundle.graph.params).to_text();
    return ok ? positive : negative;
}

// mc ------------------------------------------------------------------

struct McArgs {
    std::size_t k = 3, g = 5, n = 0, r = 3, trials = 10, samples = 200, probes = 1000;
    double eps = 0.04;
    std::uint64_t t = 4;
    std::uint64_t seed = default_seed;
    std::string out;
};

int cmd_mc_cycles(const McArgs& a)
{
    auto model = BaseModel::make(a.k, a.n, a.g, a.eps);
    auto s = montecarlo_short_cycles(model, a.trials, a.seed);
    std::ostringstream out;
    out << "# k=" << a.k << " g=" << a.g << " eps=" << text::format_double(a.eps) << " n=" << a.n
        << " m=" << model.m << " seed=" << a.seed << '\n';
    out << "trial short_cycles\n";
    for (std::size_t i = 0; i < s.per_trial.size(); ++i)
        out << i << ' ' << s.per_trial[i] << '\n';
    out << "# mean=" << s.mean << " max=" << s.max << " bound_sum=" << s.bound_sum << " bound_tail=" << s.bound_tail
        << " mean_within_bound=" << (s.mean <= s.bound_sum ? "true" : "false") << '\n';
    emit(out.str(), a.out);
    return positive;
}

int cmd_mc_expansion(const McArgs& a)
{
    auto model = BaseModel::make(a.k, a.n, a.g, a.eps);
    auto s = montecarlo_expansion(model, a.t, a.trials, a.samples, a.seed);
    std::ostringstream out;
    out << "# k=" << a.k << " g=" << a.g << " eps=" << text::format_double(a.eps) << " n=" << a.n << " t=" << a.t
        << " m=" << model.m << " seed=" << a.seed << '\n';
    out << "graph sample edges\n";
    for (std::size_t i = 0; i < s.counts.size(); ++i)
        out << i / a.samples << ' ' << i % a.samples << ' ' << s.counts[i] << '\n';
    out << "# subset_size=" << s.subset_size << " mean=" << s.mean << " stddev=" << s.stddev
        << " std_error=" << s.std_error << " graph_std_error=" << s.graph_std_error
        << " expectation=" << s.expectation << " z=" << s.z() << " min=" << s.min
        << " half_floor=" << s.half_floor << " floor=" << s.floor << '\n';
    emit(out.str(), a.out);
    return positive;
}

int cmd_mc_badpairs(const McArgs& a)
{
    auto model = BaseModel::make(a.k, a.n, a.g, a.eps);
    auto s = montecarlo_bad_pairs(model, a.r, a.t, a.trials, a.probes, a.seed);
    std::ostringstream out;
    out << "# k=" << a.k << " g=" << a.g << " eps=" << text::format_double(a.eps) << " n=" << a.n << " r=" << a.r
        << " t=" << a.t << " seed=" << a.seed << '\n';
    out << "trial probes bad edgeless\n";
    for (std::size_t i = 0; i < s.per_trial.size(); ++i)
        out << i << ' ' << s.per_trial[i].probes << ' ' << s.per_trial[i].bad << ' ' << s.per_trial[i].edgeless
            << '\n';
    out << "# bad_fraction=" << s.bad_fraction << " edgeless_fraction=" << s.edgeless_fraction << '\n';
    emit(out.str(), a.out);
    return positive;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"lambda-choosability toolkit"};
    app.require_subcommand(1);
    std::function<int()> action;

    OrderArgs order;
    auto* c_order = app.add_subcommand("order", "decide lambda <= lambda' and print a witness");
    c_order->add_option("lambda", order.lambda)->required();
    c_order->add_option("lambda_p", order.lambda_p)->required();
    c_order->callback([&] { action = [&] { return cmd_order(order); }; });

    CheckArgs check;
    auto* c_check = app.add_subcommand("check", "L-colour a graph for a given assignment");
    c_check->add_option("graph", check.graph)->required();
    c_check->add_option("assignment", check.assignment)->required();
    c_check->add_option("--max-nodes", check.max_nodes);
    c_check->callback([&] { action = [&] { return cmd_check(check); }; });

    ChoosableArgs ch;
    auto* c_ch = app.add_subcommand("choosable", "decide lambda-choosability exactly");
    c_ch->add_option("graph", ch.graph)->required();
    c_ch->add_option("lambda", ch.lambda)->required();
    c_ch->add_option("--shards", ch.options.shards)->check(CLI::PositiveNumber);
    c_ch->add_option("--max-assignments", ch.options.max_assignments);
    c_ch->add_option("--max-nodes", ch.options.max_nodes);
    c_ch->add_option("--cert", ch.cert, "certificate file (default: stdout)");
    c_ch->callback([&] { action = [&] { return cmd_choosable(ch); }; });

    GadgetArgs gad;
    auto* c_gad = app.add_subcommand("gadget", "build or check a gadget graph");
    c_gad->require_subcommand(1);
    auto* c_make = c_gad->add_subcommand("make", "built-in gadget for a part size");
    c_make->add_option("--part", gad.part)->required();
    c_make->add_option("--g", gad.g)->required();
    c_make->add_option("--out", gad.out);
    c_make->callback([&] { action = [&] { return cmd_gadget_make(gad); }; });
    auto* c_gver = c_gad->add_subcommand("verify", "check degeneracy, girth and colourability");
    c_gver->add_option("file", gad.file)->required();
    c_gver->add_option("--part", gad.part)->required();
    c_gver->add_option("--g", gad.g)->required();
    c_gver->callback([&] { action = [&] { return cmd_gadget_verify(gad); }; });

    ConstructArgs con;
    auto* c_con = app.add_subcommand("construct", "build a lambda-choosable, not target-choosable graph");
    c_con->add_option("--lambda", con.lambda)->required();
    c_con->add_option("--target", con.targets)->required();
    c_con->add_option("--g", con.g)->required();
    c_con->add_option("--eps", con.eps)->required();
    c_con->add_option("--n", con.n)->required();
    c_con->add_option("--seed", con.seed)->capture_default_str();
    c_con->add_option("--out", con.out)->required();
    c_con->add_option("--gadget", con.gadgets, "PART:FILE");
    c_con->add_option("--colour-check-cap", con.colour_check_cap);
    c_con->callback([&] { action = [&] { return cmd_construct(con); }; });

    VerifyArgs ver;
    auto* c_ver = app.add_subcommand("verify", "re-check a construction bundle");
    c_ver->add_option("dir", ver.dir)->required();
    c_ver->add_option("--colour-check-cap", ver.colour_check_cap);
    c_ver->callback([&] { action = [&] { return cmd_verify(ver); }; });

    McArgs mc;
    auto* c_mc = app.add_subcommand("mc", "Monte Carlo statistics for the random ingredients");
    c_mc->require_subcommand(1);
    auto common = [&](CLI::App* sub) {
        sub->add_option("--k", mc.k)->capture_default_str();
        sub->add_option("--g", mc.g)->capture_default_str();
        sub->add_option("--eps", mc.eps)->capture_default_str();
        sub->add_option("--n", mc.n)->required();
        sub->add_option("--trials", mc.trials)->capture_default_str();
        sub->add_option("--seed", mc.seed)->capture_default_str();
        sub->add_option("--out", mc.out);
    };
    auto* c_cyc = c_mc->add_subcommand("cycles", "short cycles before surgery");
    common(c_cyc);
    c_cyc->callback([&] { action = [&] { return cmd_mc_cycles(mc); }; });
    auto* c_exp = c_mc->add_subcommand("expansion", "edges between random floor(n/t)-sets");
    common(c_exp);
    c_exp->add_option("--t", mc.t)->capture_default_str();
    c_exp->add_option("--samples", mc.samples)->capture_default_str();
    c_exp->callback([&] { action = [&] { return cmd_mc_expansion(mc); }; });
    auto* c_bad = c_mc->add_subcommand("badpairs", "bad pairs of a random split labelling");
    common(c_bad);
    c_bad->add_option("--r", mc.r)->capture_default_str();
    c_bad->add_option("--t", mc.t)->capture_default_str();
    c_bad->add_option("--probes", mc.probes)->capture_default_str();
    c_bad->callback([&] { action = [&] { return cmd_mc_badpairs(mc); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? positive : usage;
    }

    try {
        return action();
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return budget;
    } catch (const ParamError& e) {
        std::cerr << "invalid parameters: " << e.what() << '\n';
        return usage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
}
