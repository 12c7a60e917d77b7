#include "rainbow/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rainbow {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

std::string write_text(const EdgeColoredGraph& g) {
    std::ostringstream out;
    out << "ecg " << g.vertex_count() << "\n";
    for (const auto& e : g.edges()) out << "e " << e.u << " " << e.v << " " << e.color << "\n";
    return out.str();
}

std::string write_text(const Digraph& d) {
    std::ostringstream out;
    out << "dig " << d.vertex_count() << "\n";
    for (auto [u, v] : d.arcs()) out << "a " << u << " " << v << "\n";
    return out.str();
}

std::string write_text(const TriPartition& p) {
    std::ostringstream out;
    out << "tri " << p.size() << "\n";
    for (int v = 0; v < p.size(); ++v) out << "p " << v << " " << p.part_of(v) << "\n";
    return out.str();
}

AnyGraph read_graph_text(std::istream& in) {
    std::string line;
    std::string kind;
    int n = -1;
    std::vector<std::tuple<VertexId, VertexId, ColorId>> edges;
    std::vector<std::pair<VertexId, VertexId>> arcs;
    while (std::getline(in, line)) {
        std::istringstream ls(strip_comment(line));
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "ecg" || tag == "dig") {
            if (n >= 0) throw input_error("duplicate header line");
            kind = tag;
            if (!(ls >> n) || n < 0) throw input_error("bad vertex count in header");
        } else if (tag == "e") {
            if (kind != "ecg") throw input_error("edge line outside an ecg file");
            VertexId u, v;
            ColorId c;
            if (!(ls >> u >> v >> c)) throw input_error("malformed edge line: " + line);
            edges.emplace_back(u, v, c);
        } else if (tag == "a") {
            if (kind != "dig") throw input_error("arc line outside a dig file");
            VertexId u, v;
            if (!(ls >> u >> v)) throw input_error("malformed arc line: " + line);
            arcs.emplace_back(u, v);
        } else {
            throw input_error("unknown line tag: " + tag);
        }
    }
    if (n < 0) throw input_error("missing header line (expected `ecg n` or `dig n`)");
    if (kind == "ecg") return EdgeColoredGraph(n, std::move(edges));
    return Digraph(n, std::move(arcs));
}

AnyGraph read_graph_text(const std::string& text) {
    std::istringstream in(text);
    return read_graph_text(in);
}

TriPartition read_partition_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::uint8_t> part;
    while (std::getline(in, line)) {
        std::istringstream ls(strip_comment(line));
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "tri") {
            if (!(ls >> n) || n < 0) throw input_error("bad vertex count in tri header");
            part.assign(n, 0);
        } else if (tag == "p") {
            int v, k;
            if (n < 0) throw input_error("partition line before header");
            if (!(ls >> v >> k) || v < 0 || v >= n || k < 0 || k > 2)
                throw input_error("malformed partition line: " + line);
            part[v] = static_cast<std::uint8_t>(k);
        } else {
            throw input_error("unknown line tag in partition file: " + tag);
        }
    }
    if (n < 0) throw input_error("missing `tri n` header");
    return TriPartition(std::move(part));
}

namespace {

nlohmann::json palette_json(const Palette& palette) {
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [id, name] : palette) p[std::to_string(id)] = name;
    return p;
}

Palette palette_from_json(const nlohmann::json& j) {
    Palette p;
    if (!j.is_object()) return p;
    for (auto it = j.begin(); it != j.end(); ++it) p.emplace(std::stoi(it.key()), it.value());
    return p;
}

}  // namespace

std::string write_json(const EdgeColoredGraph& g) {
    nlohmann::json j;
    j["kind"] = "ecg";
    j["n"] = g.vertex_count();
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges()) j["edges"].push_back({e.u, e.v, e.color});
    j["palette"] = palette_json(g.palette());
    return j.dump(2);
}

std::string write_json(const Digraph& d) {
    nlohmann::json j;
    j["kind"] = "dig";
    j["n"] = d.vertex_count();
    j["arcs"] = nlohmann::json::array();
    for (auto [u, v] : d.arcs()) j["arcs"].push_back({u, v});
    return j.dump(2);
}

std::string write_json(const TriPartition& p) {
    nlohmann::json j;
    j["kind"] = "tri";
    j["n"] = p.size();
    j["part"] = nlohmann::json::array();
    for (int v = 0; v < p.size(); ++v) j["part"].push_back(p.part_of(v));
    return j.dump(2);
}

AnyGraph read_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad JSON: ") + e.what());
    }
    std::string kind = j.value("kind", "");
    int n = j.value("n", -1);
    if (n < 0) throw input_error("JSON graph missing n");
    if (kind == "ecg") {
        std::vector<std::tuple<VertexId, VertexId, ColorId>> edges;
        for (const auto& e : j.value("edges", nlohmann::json::array()))
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>());
        return EdgeColoredGraph(n, std::move(edges),
                                palette_from_json(j.value("palette", nlohmann::json::object())));
    }
    if (kind == "dig") {
        std::vector<std::pair<VertexId, VertexId>> arcs;
        for (const auto& a : j.value("arcs", nlohmann::json::array()))
            arcs.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
        return Digraph(n, std::move(arcs));
    }
    throw input_error("JSON graph kind must be ecg or dig, got: " + kind);
}

TriPartition read_partition_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad JSON: ") + e.what());
    }
    if (j.value("kind", "") != "tri") throw input_error("JSON partition kind must be tri");
    std::vector<std::uint8_t> part;
    for (const auto& p : j.at("part")) part.push_back(p.get<std::uint8_t>());
    return TriPartition(std::move(part));
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

}  // namespace

AnyGraph load_graph(const std::string& path) {
    std::string text = read_file(path);
    return looks_like_json(text) ? read_graph_json(text) : read_graph_text(text);
}

TriPartition load_partition(const std::string& path) {
    std::string text = read_file(path);
    return looks_like_json(text) ? read_partition_json(text) : read_partition_text(text);
}

void save_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file: " + path);
    out << content;
}

}  // namespace rainbow
