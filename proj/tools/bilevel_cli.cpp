#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bilevel/bis_solvers.hpp"
#include "bilevel/brute.hpp"
#include "bilevel/follower.hpp"
#include "bilevel/generators.hpp"
#include "bilevel/interval_dp.hpp"
#include "bilevel/io.hpp"
#include "bilevel/reductions.hpp"

using namespace bilevel;

namespace {

int exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::Infeasible: return 1;
        case ErrorCode::CapExceeded: return 3;
        default: return 2;
    }
}

IdSet parse_ids(const std::string& text) {
    IdSet out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            fail(ErrorCode::BadParameter, "bad id '" + item + "' in list");
        }
    }
    return make_id_set(std::move(out));
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> out;
    for (Id v : parse_ids(text)) {
        if (v < 0) fail(ErrorCode::BadParameter, "sizes must be non-negative");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

void emit(const Json& j, const std::string& output) {
    if (!output.empty()) write_json_file(output, j);
    std::cout << j.dump(2) << '\n';
}

bool is_interval_file(const Json& j) { return j.is_object() && j.contains("type") && j["type"] == "intervals"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvers for bilevel independent set and interval selection"};
    app.require_subcommand(1);

    std::string input, output, variant_text = "cs-ds-o", setting_text = "o", leader_text, method = "auto";
    unsigned threads = 1;
    Weight claimed = 0;
    bool use_brute = false;

    auto* solve_cmd = app.add_subcommand("solve", "solve a graph instance exactly");
    solve_cmd->add_option("--variant", variant_text, "{cs|cb}-{ds|db}-{o|p}")->required();
    solve_cmd->add_option("--input", input)->required();
    solve_cmd->add_option("--output", output);
    solve_cmd->add_option("--threads", threads)->check(CLI::PositiveNumber);
    solve_cmd->add_option("--method", method, "auto | enum | brute")->check(CLI::IsMember({"auto", "enum", "brute"}));

    auto* intervals_cmd = app.add_subcommand("solve-intervals", "interval selection DP under (c_s, d_s)");
    intervals_cmd->add_option("--setting", setting_text, "o | p")->required();
    intervals_cmd->add_option("--input", input)->required();
    intervals_cmd->add_option("--output", output);

    auto* follower_cmd = app.add_subcommand("follower", "follower reaction to a leader set");
    follower_cmd->add_option("--variant", variant_text)->required();
    follower_cmd->add_option("--input", input)->required();
    follower_cmd->add_option("--leader", leader_text, "comma-separated ids");
    follower_cmd->add_flag("--brute", use_brute, "use exhaustive search");

    auto* brute_cmd = app.add_subcommand("brute", "exhaustive solve of a graph instance");
    brute_cmd->add_option("--variant", variant_text)->required();
    brute_cmd->add_option("--input", input)->required();
    brute_cmd->add_option("--output", output);

    auto* brute_iv_cmd = app.add_subcommand("brute-intervals", "exhaustive solve of an interval instance");
    brute_iv_cmd->add_option("--setting", setting_text)->required();
    brute_iv_cmd->add_option("--input", input)->required();
    brute_iv_cmd->add_option("--output", output);

    std::string reduction;
    int k = 1;
    auto* reduce_cmd = app.add_subcommand("reduce", "build a hardness-reduction instance");
    reduce_cmd->add_option("reduction", reduction, "b2cnf | vc | planar-vc | vc-bipartite | is")
        ->required()
        ->check(CLI::IsMember({"b2cnf", "vc", "planar-vc", "vc-bipartite", "is"}));
    reduce_cmd->add_option("--k", k);
    reduce_cmd->add_option("--input", input)->required();
    reduce_cmd->add_option("--output", output)->required();

    auto* verify_cmd = app.add_subcommand("verify", "check a leader certificate against a value");
    verify_cmd->add_option("--variant", variant_text)->required();
    verify_cmd->add_option("--input", input)->required();
    verify_cmd->add_option("--leader", leader_text);
    verify_cmd->add_option("--claimed", claimed)->required();

    std::string kind;
    std::size_t n = 10;
    double edge_prob = 0.3, leader_fraction = 0.5;
    Weight max_weight = 9;
    Coord coord_max = 20;
    bool bipartite = false;
    std::uint64_t seed = 1;
    auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
    gen_cmd->add_option("kind", kind, "graph | intervals")->required()->check(CLI::IsMember({"graph", "intervals"}));
    gen_cmd->add_option("--n", n);
    gen_cmd->add_option("--edge-prob", edge_prob);
    gen_cmd->add_option("--leader-fraction", leader_fraction);
    gen_cmd->add_option("--max-weight", max_weight);
    gen_cmd->add_option("--coord-max", coord_max);
    gen_cmd->add_flag("--bipartite", bipartite);
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_option("--output", output);

    std::string sizes_text = "50,100,200";
    auto* bench_cmd = app.add_subcommand("bench", "time the interval DP");
    bench_cmd->add_option("--sizes", sizes_text, "ascending comma-separated sizes");
    bench_cmd->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve_cmd->parsed()) {
            const auto variant = Variant::parse(variant_text);
            const auto g = graph_from_json(read_json_file(input));
            BilevelOutcome out;
            if (method == "brute") out = brute_force(g, variant);
            else if (method == "enum") out = solve_enum_leader(g, variant, {threads});
            else out = solve(g, variant, {threads});
            emit(to_json(out), output);
        } else if (intervals_cmd->parsed()) {
            const auto inst = intervals_from_json(read_json_file(input));
            emit(to_json(solve_bisel(inst, parse_setting(setting_text))), output);
        } else if (follower_cmd->parsed()) {
            const auto variant = Variant::parse(variant_text);
            const auto leader = parse_ids(leader_text);
            const auto j = read_json_file(input);
            BilevelOutcome out;
            if (is_interval_file(j)) {
                const auto inst = intervals_from_json(j);
                const auto f = use_brute ? brute_follower(inst, leader, variant) : react(inst, leader, variant);
                out = make_outcome(inst, variant, leader, f);
            } else {
                const auto g = graph_from_json(j);
                const auto f = use_brute ? brute_follower(g, leader, variant) : react(g, leader, variant);
                out = make_outcome(g, variant, leader, f);
            }
            emit(to_json(out), "");
        } else if (brute_cmd->parsed()) {
            const auto variant = Variant::parse(variant_text);
            const auto j = read_json_file(input);
            if (is_interval_file(j)) emit(to_json(brute_force(intervals_from_json(j), variant)), output);
            else emit(to_json(brute_force(graph_from_json(j), variant)), output);
        } else if (brute_iv_cmd->parsed()) {
            const auto inst = intervals_from_json(read_json_file(input));
            emit(to_json(brute_bisel(inst, parse_setting(setting_text))), output);
        } else if (reduce_cmd->parsed()) {
            const auto j = read_json_file(input);
            ReductionOutput r;
            if (reduction == "b2cnf") r = b2cnf_to_bis(b2cnf_from_json(j));
            else if (reduction == "vc") r = vc_to_bis(plain_graph_from_json(j), k);
            else if (reduction == "planar-vc") r = planar_vc_to_bipartite_bis(plain_graph_from_json(j), k);
            else if (reduction == "vc-bipartite") r = vc_to_bipartite_bis(plain_graph_from_json(j), k);
            else r = is_to_bis(plain_graph_from_json(j), k);
            write_json_file(output, to_json(r.graph));
            std::cout << metadata_json(r, reduction).dump(2) << '\n';
        } else if (verify_cmd->parsed()) {
            const auto variant = Variant::parse(variant_text);
            const auto g = graph_from_json(read_json_file(input));
            const bool ok = verify_certificate(g, variant, parse_ids(leader_text), claimed);
            std::cout << Json{{"valid", ok}}.dump() << '\n';
        } else if (gen_cmd->parsed()) {
            const Json j = kind == "graph"
                               ? to_json(gen_random_graph(n, edge_prob, leader_fraction, max_weight, bipartite, seed))
                               : to_json(gen_random_intervals(n, coord_max, leader_fraction, max_weight, seed));
            emit(j, output);
        } else if (bench_cmd->parsed()) {
            std::cout << "n,milliseconds\n";
            for (const auto& row : bench_dp(parse_sizes(sizes_text), seed)) {
                std::cout << row.n << ',' << row.milliseconds << '\n';
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
