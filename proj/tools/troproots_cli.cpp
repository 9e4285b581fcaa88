#include "troproots/cone_complex.hpp"
#include "troproots/enumeration.hpp"
#include "troproots/flow_poset.hpp"
#include "troproots/json_io.hpp"
#include "troproots/roots.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace troproots;

// Group grammar: "Z", "Z/m", "Z^k", joined with "x".
CoefficientGroup parse_group(const std::string& text)
{
    int free_rank = 0;
    std::vector<long long> torsion;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, 'x')) {
        token.erase(0, token.find_first_not_of(" \t"));
        token.erase(token.find_last_not_of(" \t") + 1);
        if (token == "Z")
            free_rank += 1;
        else if (token.rfind("Z^", 0) == 0)
            free_rank += std::stoi(token.substr(2));
        else if (token.rfind("Z/", 0) == 0)
            torsion.push_back(std::stoll(token.substr(2)));
        else
            throw CLI::ValidationError("--group", "expected Z, Z/m or Z^k terms joined by x");
    }
    return CoefficientGroup(free_rank, std::move(torsion));
}

std::vector<long long> parse_ints(const std::string& text)
{
    std::vector<long long> out;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ','))
        out.push_back(std::stoll(token));
    return out;
}

// n times the first canonical generator of the group.
GroupElement embed_int(const CoefficientGroup& group, long long n)
{
    std::vector<long long> free(group.free_rank(), 0);
    std::vector<long long> torsion(group.torsion_moduli().size(), 0);
    if (group.free_rank() > 0)
        free[0] = n;
    else if (!torsion.empty())
        torsion[0] = n;
    return GroupElement(group, std::move(free), std::move(torsion));
}

RamificationSequence parse_ramification(const CoefficientGroup& group, const std::string& text,
                                        int legs)
{
    std::vector<long long> ints = text.empty() ? std::vector<long long>(legs + 1, 0)
                                               : parse_ints(text);
    if (static_cast<int>(ints.size()) != legs + 1)
        throw CLI::ValidationError("--ramification", "expected one entry per leg plus b");
    RamificationSequence R;
    for (int i = 0; i < legs; ++i)
        R.entries.push_back(embed_int(group, ints[i]));
    R.ell = embed_int(group, ints[legs]);
    return R;
}

void write_output(const std::string& path, const std::string& content)
{
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

std::string render(const json& j, const std::string& format)
{
    if (format == "dot")
        return json_to_dot(j);
    return j.dump(2) + "\n";
}

std::uint64_t effective_seed(std::uint64_t seed)
{
    if (const char* env = std::getenv("TROPROOTS_SEED"))
        return std::stoull(env);
    return seed;
}

json run_roots_suite(int genus, int legs, long long r, const std::string& ram,
                     std::uint64_t seed)
{
    json reports = json::array();
    bool pass = true;
    std::mt19937_64 rng(seed);
    for (const Graph& g : enumerate_stable_graphs(genus, legs)) {
        if (g.betti() > 3 || g.num_edges() == 0)
            continue;
        std::vector<Rational> lengths;
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            lengths.emplace_back(1 + static_cast<long long>(rng() % 3), 1);
        TropicalCurve X = make_curve(g, lengths);
        RamificationSequence R = parse_ramification(integers(), ram, legs);
        if (R.degree(genus).free_part()[0] % r != 0)
            continue;
        RootInstance inst =
            make_root_instance(X, ramification_divisor_on_curve(R, X), static_cast<int>(r));
        RootReport report = verify_root_bijection(inst, rng());
        pass = pass && report.pass;
        reports.push_back({{"graph", to_json(g)},
                           {"pass", report.pass},
                           {"failures", report.failures}});
    }
    return {{"suite", "roots"}, {"pass", pass}, {"instances", reports}};
}

json run_poset_suite(int genus, int legs, const std::string& group_text,
                     const std::string& ram)
{
    CoefficientGroup group = parse_group(group_text);
    FlowPoset poset = build_flow_poset(genus, legs, group, parse_ramification(group, ram, legs));
    bool pass = poset.dimension() == 3 * genus - 3 + legs || poset.elements.empty();
    json issues = json::array();
    for (const PosetCover& c : poset.covers)
        if (poset.rank(c.upper) != poset.rank(c.lower) + 1) {
            pass = false;
            issues.push_back({{"cover", {c.upper, c.lower}}, {"problem", "rank gap"}});
        }
    for (size_t gi = 0; gi < poset.graphs.elements.size(); ++gi) {
        bool seen = false;
        for (const auto& el : poset.elements)
            seen = seen || el.graph_index == static_cast<int>(gi);
        if (!seen) {
            pass = false;
            issues.push_back({{"graph", static_cast<int>(gi)}, {"problem", "empty fiber"}});
        }
    }
    return {{"suite", "poset"},
            {"pass", pass},
            {"elements", poset.elements.size()},
            {"issues", issues}};
}

json run_complex_suite(int genus, int legs, long long r, const std::string& ram,
                       std::uint64_t seed)
{
    RamificationSequence R = parse_ramification(integers(), ram, legs);
    ConeComplex cc = build_root_complex(genus, legs, r, R);
    std::mt19937_64 rng(seed);
    bool pass = true;
    json issues = json::array();
    for (size_t i = 0; i < cc.poset.elements.size(); ++i) {
        int dim = cc.cone_dimension(static_cast<int>(i));
        if (dim != cc.poset.rank(static_cast<int>(i))) {
            pass = false;
            issues.push_back({{"element", i}, {"problem", "dimension mismatch"}});
        }
        if (dim == 0)
            continue;
        std::vector<Rational> coords;
        for (int e = 0; e < dim; ++e)
            coords.emplace_back(1 + static_cast<long long>(rng() % 5), 1);
        ComplexPoint p = make_point(cc, static_cast<int>(i), coords);
        ClassifiedPair pair = point_to_pair(cc, p);
        if (classify_pair(cc, pair.curve, pair.root) != p) {
            pass = false;
            issues.push_back({{"element", i}, {"problem", "point round trip failed"}});
        }
    }
    return {{"suite", "complex"},
            {"pass", pass},
            {"cones", cc.poset.elements.size()},
            {"issues", issues}};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"tropical root moduli toolkit"};
    app.require_subcommand(1);

    int genus = 1, legs = 0;
    long long r = 2;
    std::string group_text = "Z/2";
    std::string ram_text;
    std::string format = "json";
    std::string input_path, output_path, curve_path;
    std::uint64_t seed = 0;
    bool verify_flag = false;
    std::string suite = "roots";

    auto* eg = app.add_subcommand("enumerate-graphs", "stable graphs of genus g with n legs");
    eg->add_option("--genus", genus)->required();
    eg->add_option("--legs", legs);
    eg->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    eg->add_option("--output", output_path);

    auto* fp = app.add_subcommand("flow-poset", "the universal poset of flows F_g(A, R)");
    fp->add_option("--genus", genus)->required();
    fp->add_option("--legs", legs);
    fp->add_option("--group", group_text);
    fp->add_option("--ramification", ram_text);
    fp->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    fp->add_option("--output", output_path);

    auto* rt = app.add_subcommand("roots", "r-th roots of the ramification divisor on a curve");
    rt->add_option("--curve", curve_path)->required();
    rt->add_option("--r", r)->required();
    rt->add_option("--ramification", ram_text);
    rt->add_flag("--verify", verify_flag);
    rt->add_option("--seed", seed);
    rt->add_option("--output", output_path);

    auto* cx = app.add_subcommand("complex", "the cone complex of tropical roots");
    cx->add_option("--genus", genus)->required();
    cx->add_option("--legs", legs);
    cx->add_option("--r", r)->required();
    cx->add_option("--ramification", ram_text);
    cx->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    cx->add_option("--output", output_path);

    auto* vf = app.add_subcommand("verify", "run a verification suite");
    vf->add_option("--suite", suite)->check(CLI::IsMember({"roots", "poset", "complex"}));
    vf->add_option("--genus", genus)->required();
    vf->add_option("--legs", legs);
    vf->add_option("--r", r);
    vf->add_option("--group", group_text);
    vf->add_option("--ramification", ram_text);
    vf->add_option("--seed", seed);
    vf->add_option("--output", output_path);

    auto* ex = app.add_subcommand("export", "convert an emitted JSON document to DOT");
    ex->add_option("--input", input_path)->required();
    ex->add_option("--output", output_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (eg->parsed()) {
            json out = json::array();
            for (const Graph& g : enumerate_stable_graphs(genus, legs))
                out.push_back(to_json(g));
            if (format == "dot") {
                std::string dots;
                for (const auto& g : out)
                    dots += json_to_dot(g);
                write_output(output_path, dots);
            } else {
                write_output(output_path, out.dump(2) + "\n");
            }
        } else if (fp->parsed()) {
            CoefficientGroup group = parse_group(group_text);
            FlowPoset poset =
                build_flow_poset(genus, legs, group, parse_ramification(group, ram_text, legs));
            write_output(output_path, render(to_json(poset), format));
        } else if (rt->parsed()) {
            std::ifstream in(curve_path);
            if (!in)
                throw std::runtime_error("cannot open curve file: " + curve_path);
            TropicalCurve X = curve_from_json(json::parse(in));
            RamificationSequence R =
                parse_ramification(integers(), ram_text, X.model.num_legs());
            RootInstance inst = make_root_instance(
                X, ramification_divisor_on_curve(R, X), static_cast<int>(r));
            json out = json::array();
            for (const RootClass& rc : enumerate_roots(inst, verify_flag))
                out.push_back(to_json(X, rc.representative));
            json doc = {{"r", r}, {"classes", out}};
            if (verify_flag) {
                RootReport report = verify_root_bijection(inst, effective_seed(seed));
                doc["verification"] = {{"pass", report.pass}, {"failures", report.failures}};
                if (!report.pass) {
                    std::cerr << doc.dump(2) << "\n";
                    return 1;
                }
            }
            write_output(output_path, doc.dump(2) + "\n");
        } else if (cx->parsed()) {
            RamificationSequence R = parse_ramification(integers(), ram_text, legs);
            ConeComplex cc = build_root_complex(genus, legs, r, R);
            write_output(output_path, render(to_json(cc), format));
        } else if (vf->parsed()) {
            json report;
            if (suite == "roots")
                report = run_roots_suite(genus, legs, r, ram_text, effective_seed(seed));
            else if (suite == "poset")
                report = run_poset_suite(genus, legs, group_text, ram_text);
            else
                report = run_complex_suite(genus, legs, r, ram_text, effective_seed(seed));
            write_output(output_path, report.dump(2) + "\n");
            if (!report["pass"].get<bool>())
                return 1;
        } else if (ex->parsed()) {
            std::ifstream in(input_path);
            if (!in)
                throw std::runtime_error("cannot open input file: " + input_path);
            write_output(output_path, json_to_dot(json::parse(in)));
        }
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
