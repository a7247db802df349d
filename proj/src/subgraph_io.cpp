#include "ctn/subgraph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ctn {

Json subgraph_to_json(const TranspositionGraph& g, const SubgraphMask& mask)
{
    Json edges = Json::array();
    mask.for_each_edge([&](EdgeId e) {
        const auto ends = g.edge_ends(e);
        edges.push_back(Json::array({g.vertex(ends.even).one_line(), g.vertex(ends.odd).one_line()}));
    });
    Json doc;
    doc["n"] = g.n();
    doc["edges"] = std::move(edges);
    return doc;
}

int subgraph_json_degree(const Json& doc)
{
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw std::invalid_argument("subgraph document needs an integer field \"n\"");
    return doc["n"].get<int>();
}

SubgraphMask subgraph_from_json(const TranspositionGraph& g, const Json& doc)
{
    if (subgraph_json_degree(doc) != g.n())
        throw std::invalid_argument("subgraph has n=" + std::to_string(subgraph_json_degree(doc))
                                    + " but the graph is CT_" + std::to_string(g.n()));
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw std::invalid_argument("subgraph document needs an array field \"edges\"");

    SubgraphMask mask(g);
    for (const auto& pair : doc["edges"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
            throw std::invalid_argument("each edge must be a pair of one-line permutation strings");
        const auto u = Permutation::parse(pair[0].get<std::string>(), g.n());
        const auto z = Permutation::parse(pair[1].get<std::string>(), g.n());
        const auto e = g.find_edge(g.id(u), g.id(z));
        if (!e)
            throw std::invalid_argument("pair [" + u.one_line() + ", " + z.one_line() + "] is not an edge of CT_"
                                        + std::to_string(g.n()));
        mask.insert(*e);
    }
    return mask;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
        throw std::invalid_argument(path + ": " + err.what());
    }
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string degree_csv(const TranspositionGraph& g, const SubgraphMask& mask)
{
    std::ostringstream os;
    os << "rank,permutation,degree\n";
    const auto deg = degree_sequence(g, mask);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        os << v << ',' << g.vertex(v).one_line() << ',' << deg[v] << '\n';
    return os.str();
}

Json vertices_to_json(const TranspositionGraph& g, const std::vector<VertexId>& vertices)
{
    Json out = Json::array();
    for (auto v : vertices)
        out.push_back(g.vertex(v).one_line());
    return out;
}

} // namespace ctn
