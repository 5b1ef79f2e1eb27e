#include "bilevel/io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace bilevel {

namespace {

void allow_only(const Json& j, std::initializer_list<std::string_view> keys, std::string_view what) {
    if (!j.is_object()) fail(ErrorCode::InvalidInput, std::string(what) + " must be an object");
    for (const auto& [key, value] : j.items()) {
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            fail(ErrorCode::InvalidInput, "unknown field '" + key + "' in " + std::string(what));
        }
    }
}

const Json& field(const Json& j, const char* key, std::string_view what) {
    const auto it = j.find(key);
    if (it == j.end()) fail(ErrorCode::InvalidInput, "missing field '" + std::string(key) + "' in " + std::string(what));
    return *it;
}

std::int64_t integer(const Json& j, const char* key, std::string_view what) {
    const auto& v = field(j, key, what);
    if (!v.is_number_integer()) fail(ErrorCode::InvalidInput, "field '" + std::string(key) + "' must be an integer");
    return v.get<std::int64_t>();
}

const Json& array(const Json& j, const char* key, std::string_view what) {
    const auto& v = field(j, key, what);
    if (!v.is_array()) fail(ErrorCode::InvalidInput, "field '" + std::string(key) + "' must be an array");
    return v;
}

void expect_type(const Json& j, std::string_view type) {
    const auto& t = field(j, "type", "instance");
    if (!t.is_string() || t.get<std::string>() != type) {
        fail(ErrorCode::InvalidInput, "expected \"type\": \"" + std::string(type) + "\"");
    }
}

Owner owner_from(const Json& j) {
    const auto& v = field(j, "owner", "item");
    if (v == "leader") return Owner::Leader;
    if (v == "follower") return Owner::Follower;
    fail(ErrorCode::InvalidInput, "owner must be \"leader\" or \"follower\"");
}

std::vector<Edge> edges_from(const Json& j, std::string_view what) {
    std::vector<Edge> edges;
    for (const auto& e : array(j, "edges", what)) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            fail(ErrorCode::InvalidInput, "edges must be pairs of integer ids");
        }
        edges.emplace_back(e[0].get<Id>(), e[1].get<Id>());
    }
    return edges;
}

IdSet id_list(const Json& j, const char* key) {
    IdSet out;
    for (const auto& v : array(j, key, "outcome")) {
        if (!v.is_number_integer()) fail(ErrorCode::InvalidInput, std::string(key) + " must hold integer ids");
        out.push_back(v.get<Id>());
    }
    return make_id_set(std::move(out));
}

Json edges_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const auto& [u, v] : edges) out.push_back({u, v});
    return out;
}

}  // namespace

Json to_json(const BisGraph& g) {
    Json vertices = Json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& v = g.vertices()[i];
        vertices.push_back({{"id", i}, {"owner", to_string(v.owner)}, {"wl", v.wl}, {"wf", v.wf}});
    }
    return {{"type", "graph"}, {"vertices", vertices}, {"edges", edges_json(g.edges())}};
}

Json to_json(const IntervalInstance& inst) {
    Json intervals = Json::array();
    for (const auto& x : inst.intervals()) {
        intervals.push_back({{"id", x.id}, {"start", x.start}, {"end", x.end}, {"owner", to_string(x.owner)},
                             {"wl", x.wl}, {"wf", x.wf}});
    }
    return {{"type", "intervals"}, {"intervals", intervals}};
}

Json to_json(const BilevelOutcome& o) {
    return {{"leader_value", o.leader_value},
            {"follower_value", o.follower_value},
            {"leader_set", o.leader_set},
            {"follower_set", o.follower_set}};
}

Json to_json(const B2cnfFormula& f) {
    Json clauses = Json::array();
    for (const auto& clause : f.clauses) {
        Json lits = Json::array();
        for (const auto& lit : clause) {
            lits.push_back({{"side", lit.side == Side::X ? "X" : "Y"}, {"var", lit.var}, {"neg", lit.neg}});
        }
        clauses.push_back(lits);
    }
    return {{"type", "b2cnf"}, {"n1", f.n1}, {"n2", f.n2}, {"clauses", clauses}};
}

Json to_json(const PlainGraph& g) {
    return {{"type", "plain_graph"}, {"n", g.size()}, {"edges", edges_json(g.edges())}};
}

Json metadata_json(const ReductionOutput& r, std::string_view reduction) {
    Json targets = Json::array();
    for (const auto& t : r.targets) targets.push_back({{"variant", t.variant.to_string()}, {"threshold", t.threshold}});
    Json constants = Json::object();
    for (const auto& [k, v] : r.constants) constants[k] = v;
    return {{"reduction", reduction},
            {"vertices", r.graph.size()},
            {"edges", r.graph.edges().size()},
            {"targets", targets},
            {"constants", constants},
            {"labels", r.labels}};
}

BisGraph graph_from_json(const Json& j) {
    allow_only(j, {"type", "vertices", "edges"}, "graph");
    expect_type(j, "graph");
    const auto& vs = array(j, "vertices", "graph");
    std::vector<Vertex> vertices(vs.size());
    std::vector<bool> seen(vs.size(), false);
    for (const auto& v : vs) {
        allow_only(v, {"id", "owner", "wl", "wf"}, "vertex");
        const Id id = integer(v, "id", "vertex");
        if (id < 0 || static_cast<std::size_t>(id) >= vs.size() || seen[static_cast<std::size_t>(id)]) {
            fail(ErrorCode::InvalidInput, "vertex ids must be dense from 0 and unique; bad id " + std::to_string(id));
        }
        seen[static_cast<std::size_t>(id)] = true;
        vertices[static_cast<std::size_t>(id)] = {owner_from(v), integer(v, "wl", "vertex"), integer(v, "wf", "vertex")};
    }
    return BisGraph(std::move(vertices), edges_from(j, "graph"));
}

IntervalInstance intervals_from_json(const Json& j) {
    allow_only(j, {"type", "intervals"}, "interval instance");
    expect_type(j, "intervals");
    std::vector<Interval> xs;
    for (const auto& x : array(j, "intervals", "interval instance")) {
        allow_only(x, {"id", "start", "end", "owner", "wl", "wf"}, "interval");
        xs.push_back({integer(x, "id", "interval"), integer(x, "start", "interval"), integer(x, "end", "interval"),
                      owner_from(x), integer(x, "wl", "interval"), integer(x, "wf", "interval")});
    }
    return IntervalInstance(std::move(xs));
}

BilevelOutcome outcome_from_json(const Json& j) {
    allow_only(j, {"leader_value", "follower_value", "leader_set", "follower_set"}, "outcome");
    BilevelOutcome o;
    o.leader_value = integer(j, "leader_value", "outcome");
    o.follower_value = integer(j, "follower_value", "outcome");
    o.leader_set = id_list(j, "leader_set");
    o.follower_set = id_list(j, "follower_set");
    return o;
}

B2cnfFormula b2cnf_from_json(const Json& j) {
    allow_only(j, {"type", "n1", "n2", "clauses"}, "b2cnf formula");
    expect_type(j, "b2cnf");
    B2cnfFormula f;
    f.n1 = static_cast<int>(integer(j, "n1", "b2cnf formula"));
    f.n2 = static_cast<int>(integer(j, "n2", "b2cnf formula"));
    for (const auto& c : array(j, "clauses", "b2cnf formula")) {
        if (!c.is_array()) fail(ErrorCode::MalformedClause, "clauses must be arrays of literals");
        Clause clause;
        for (const auto& lit : c) {
            allow_only(lit, {"side", "var", "neg"}, "literal");
            Literal l;
            const auto& side = field(lit, "side", "literal");
            if (side == "X") l.side = Side::X;
            else if (side == "Y") l.side = Side::Y;
            else fail(ErrorCode::InvalidInput, "literal side must be \"X\" or \"Y\"");
            l.var = static_cast<int>(integer(lit, "var", "literal"));
            const auto& neg = field(lit, "neg", "literal");
            if (!neg.is_boolean()) fail(ErrorCode::InvalidInput, "literal neg must be a boolean");
            l.neg = neg.get<bool>();
            clause.push_back(l);
        }
        f.clauses.push_back(std::move(clause));
    }
    validate(f);
    return f;
}

PlainGraph plain_graph_from_json(const Json& j) {
    if (j.is_object() && j.value("type", "") == "graph") {
        const auto g = graph_from_json(j);
        return PlainGraph(g.size(), g.edges());
    }
    allow_only(j, {"type", "n", "edges"}, "plain graph");
    expect_type(j, "plain_graph");
    const auto n = integer(j, "n", "plain graph");
    if (n < 0) fail(ErrorCode::InvalidInput, "n must be non-negative");
    return PlainGraph(static_cast<std::size_t>(n), edges_from(j, "plain graph"));
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InvalidInput, "cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json(buffer.str());
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::InvalidInput, "cannot write " + path.string());
    out << j.dump(2) << '\n';
}

}  // namespace bilevel
