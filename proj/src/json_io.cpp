#include "wiretap/json_io.hpp"

#include <fstream>

#include "wiretap/error.hpp"

namespace wiretap {

namespace {

template <class F>
auto guarded(const char* what, F&& f)
{
    try {
        return f();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
    }
}

json edge_id_list(const WiretapNetwork& net, const EdgeSet& set)
{
    return net.edge_ids(set);
}

}  // namespace

WiretapNetwork network_from_json(const json& j)
{
    return guarded("network", [&] {
        WiretapNetwork net;
        net.nodes = j.at("nodes").get<std::vector<NodeId>>();
        for (const auto& e : j.at("edges"))
            net.edges.push_back({e.at("id").get<std::string>(), e.at("tail").get<std::string>(),
                                 e.at("head").get<std::string>()});
        net.source = j.at("source").get<std::string>();
        net.users = j.at("users").get<std::vector<NodeId>>();
        if (j.contains("wiretap_sets")) {
            for (const auto& w : j.at("wiretap_sets")) {
                EdgeSet set;
                for (const auto& id : w.get<std::vector<EdgeId>>()) {
                    try {
                        set.push_back(net.edge_index(id));
                    } catch (const Error&) {
                        throw Error(ErrorCode::UnknownEdgeInWiretapSet, "edge '" + id + "'");
                    }
                }
                net.wiretap_sets.push_back(canonical(std::move(set)));
            }
        }
        return net;
    });
}

json to_json(const WiretapNetwork& net)
{
    json edges = json::array();
    for (const auto& e : net.edges) edges.push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
    json sets = json::array();
    for (const auto& w : net.wiretap_sets) sets.push_back(edge_id_list(net, w));
    return {{"nodes", net.nodes}, {"edges", edges}, {"source", net.source}, {"users", net.users},
            {"wiretap_sets", sets}};
}

json to_json(const FieldMatrix& m)
{
    json rows = json::array();
    for (const auto& r : m.row_list()) rows.push_back(r);
    return {{"q", m.modulus()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

FieldMatrix field_matrix_from_json(const json& j)
{
    return guarded("field matrix", [&] {
        auto q = j.at("q").get<std::uint64_t>();
        auto rows = j.at("rows").get<std::size_t>();
        auto cols = j.at("cols").get<std::size_t>();
        auto entries = j.at("entries").get<std::vector<FieldVector>>();
        if (entries.size() != rows) throw Error(ErrorCode::ParseError, "row count does not match entries");
        for (const auto& r : entries)
            for (auto v : r)
                if (v >= q) throw Error(ErrorCode::ParseError, "entry outside GF(q)");
        return FieldMatrix(q, entries, cols);
    });
}

json to_json(const CodeSpec& code)
{
    json b = json::array();
    for (const auto& m : code.B) b.push_back(to_json(m));
    json y = json::array();
    for (const auto& v : code.y_star) y.push_back(to_string(v));
    return {{"q", code.q}, {"g", code.g}, {"w", code.w}, {"edge_order", code.edge_order},
            {"tight_set", code.tight_set}, {"B", b}, {"y_star", y}};
}

CodeSpec code_from_json(const json& j)
{
    return guarded("code", [&] {
        CodeSpec code;
        code.q = j.at("q").get<std::uint64_t>();
        code.g = j.at("g").get<std::size_t>();
        code.w = j.at("w").get<std::vector<std::size_t>>();
        code.edge_order = j.at("edge_order").get<std::vector<EdgeId>>();
        code.tight_set = j.at("tight_set").get<std::vector<EdgeId>>();
        for (const auto& m : j.at("B")) code.B.push_back(field_matrix_from_json(m));
        if (j.contains("y_star"))
            for (const auto& v : j.at("y_star")) code.y_star.push_back(parse_rational(v.get<std::string>()));
        if (code.w.size() != code.h() || code.B.size() != code.h())
            throw Error(ErrorCode::ParseError, "w and B must have one entry per edge");
        for (std::size_t i = 0; i < code.h(); ++i)
            if (code.B[i].rows() != code.w[i] || code.B[i].cols() != code.g || code.B[i].modulus() != code.q)
                throw Error(ErrorCode::ParseError, "B for edge '" + code.edge_order[i] + "' has the wrong shape");
        return code;
    });
}

json codewords_to_json(const CodeSpec& code, const std::vector<FieldVector>& codewords)
{
    return {{"q", code.q}, {"edges", code.edge_order}, {"codewords", codewords}};
}

std::vector<FieldVector> codewords_from_json(const CodeSpec& code, const json& j)
{
    return guarded("codewords", [&] {
        auto edges = j.at("edges").get<std::vector<EdgeId>>();
        if (edges != code.edge_order) throw Error(ErrorCode::ParseError, "codeword edges differ from the code's edge order");
        return j.at("codewords").get<std::vector<FieldVector>>();
    });
}

json to_json(const WiretapNetwork& net, const MessageBoundReport& report)
{
    json rows = json::array();
    for (const auto& r : report.per_wiretap)
        rows.push_back({{"wiretap_set", edge_id_list(net, net.wiretap_sets[r.wiretap])},
                        {"residual_mincut", r.residual},
                        {"user", net.users[r.user]}});
    json out = {{"message_bound_logq", report.bound_logq}, {"per_wiretap", rows}};
    out["witness_wiretap"] = report.witness_wiretap ? edge_id_list(net, net.wiretap_sets[*report.witness_wiretap])
                                                    : json(nullptr);
    out["statement"] = "H(M) <= " + std::to_string(report.bound_logq) + " log q";
    return out;
}

std::string tau_string(const ExtRational& tau)
{
    return tau.is_infinite() ? std::string("unbounded") : to_string(tau.value());
}

std::string method_string(Method m)
{
    return m == Method::Brute ? "brute" : "algo1";
}

json to_json(const WiretapNetwork& net, const KeyBoundReport& report)
{
    json solution = json::array();
    for (const auto& v : report.witness_solution) solution.push_back(to_string(v));
    json columns = json::array();
    for (const auto& w : report.wiretap_columns) columns.push_back(edge_id_list(net, w));
    json out = {{"tau", tau_string(report.tau)},
                {"l_C", to_string(report.l_C)},
                {"l_P", to_string(report.l_P)},
                {"witness_cut", edge_id_list(net, report.witness_blocking_set)},
                {"witness_solution", solution},
                {"witness_solution_kind", report.solution_kind == SolutionKind::Covering ? "covering" : "packing"},
                {"wiretap_columns", columns},
                {"method", method_string(report.method)}};
    out["statement"] = report.tau.is_infinite() ? std::string("H(M) = 0")
                                                : "H(K) >= " + to_string(report.tau.value()) + " H(M)";
    return out;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, "'" + path + "': " + e.what());
    }
}

}  // namespace wiretap
