#include "dlk/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dlk {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::runtime_error(where + ": " + what);
}

json host_to_json(const Graph& g) {
    const auto& vs = g.vertices();
    Graph complete = Graph::complete_on(vs);
    if (g == complete) {
        bool dense = true;
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (vs[i] != (Vertex)i) dense = false;
        if (dense) return {{"kind", "complete"}, {"v", (int)vs.size()}};
        return {{"kind", "complete"}, {"vertices", vs}};
    }
    // multipartite iff the complement splits into independent parts
    if (!vs.empty()) {
        std::vector<Edge> co;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (!g.has_edge(vs[i], vs[j])) co.push_back({vs[i], vs[j]});
        Graph complement(vs, co);
        std::vector<std::vector<Vertex>> parts = complement.edge_components();
        std::vector<Vertex> in_parts;
        for (const auto& p : parts) in_parts.insert(in_parts.end(), p.begin(), p.end());
        for (Vertex x : vs) // isolated in the complement: singleton part
            if (std::find(in_parts.begin(), in_parts.end(), x) == in_parts.end())
                parts.push_back({x});
        std::sort(parts.begin(), parts.end());
        if (parts.size() >= 2 && g == Graph::multipartite(parts)) {
            json jp = json::array();
            for (const auto& p : parts) jp.push_back(p);
            return {{"kind", "multipartite"}, {"parts", jp}};
        }
    }
    json je = json::array();
    for (const auto& e : g.edges()) je.push_back(json::array({e.first, e.second}));
    return {{"kind", "edges"}, {"vertices", vs}, {"edges", je}};
}

json pattern_to_json(PatternKind p) {
    switch (p.family) {
        case PatternFamily::Path: return {{"kind", "path"}, {"k", p.k}};
        case PatternFamily::Star: return {{"kind", "star"}, {"k", p.k}};
        case PatternFamily::Cycle: return {{"kind", "cycle"}, {"k", p.k}};
        case PatternFamily::Kite: return {{"kind", "kite"}};
    }
    fail("pattern", "unknown family");
}

json design_to_json(const Design& d) {
    json jb = json::array();
    for (const Block& b : d.blocks) jb.push_back(b.verts);
    return {{"host", host_to_json(d.host)},
            {"pattern", pattern_to_json(d.pattern)},
            {"blocks", jb}};
}

std::vector<Vertex> label_list(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of labels");
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& x = j[i];
        if (!x.is_number_integer() || x.get<long long>() < 0)
            fail(where + "[" + std::to_string(i) + "]",
                 "labels must be non-negative integers");
        out.push_back(x.get<int>());
    }
    return out;
}

Graph host_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        fail(where, "host must be an object with a \"kind\" string");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "complete") {
        if (j.contains("v")) {
            if (!j["v"].is_number_integer() || j["v"].get<long long>() < 0)
                fail(where + ".v", "order must be a non-negative integer");
            return Graph::complete(j["v"].get<int>());
        }
        if (j.contains("vertices"))
            return Graph::complete_on(label_list(j["vertices"], where + ".vertices"));
        fail(where, "complete host needs \"v\" or \"vertices\"");
    }
    if (kind == "multipartite") {
        if (!j.contains("parts") || !j["parts"].is_array())
            fail(where, "multipartite host needs a \"parts\" array");
        std::vector<std::vector<Vertex>> parts;
        for (std::size_t i = 0; i < j["parts"].size(); ++i)
            parts.push_back(
                label_list(j["parts"][i], where + ".parts[" + std::to_string(i) + "]"));
        return Graph::multipartite(parts);
    }
    if (kind == "edges") {
        if (!j.contains("vertices") || !j.contains("edges"))
            fail(where, "edge-list host needs \"vertices\" and \"edges\"");
        std::vector<Vertex> vs = label_list(j["vertices"], where + ".vertices");
        std::vector<Edge> es;
        for (std::size_t i = 0; i < j["edges"].size(); ++i) {
            auto pair =
                label_list(j["edges"][i], where + ".edges[" + std::to_string(i) + "]");
            if (pair.size() != 2)
                fail(where + ".edges[" + std::to_string(i) + "]",
                     "an edge is a pair of labels");
            es.push_back(make_edge(pair[0], pair[1]));
        }
        return Graph(std::move(vs), std::move(es));
    }
    fail(where + ".kind", "unknown host kind \"" + kind + "\"");
}

PatternKind pattern_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        fail(where, "pattern must be an object with a \"kind\" string");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "kite") return PatternKind::kite();
    if (!j.contains("k") || !j["k"].is_number_integer())
        fail(where, "pattern \"" + kind + "\" needs an integer \"k\"");
    int k = j["k"].get<int>();
    try {
        if (kind == "path") return PatternKind::path(k);
        if (kind == "star") return PatternKind::star(k);
        if (kind == "cycle") return PatternKind::cycle(k);
    } catch (const std::exception& e) {
        fail(where + ".k", e.what());
    }
    fail(where + ".kind", "unknown pattern kind \"" + kind + "\"");
}

Design design_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) fail(where, "expected a design object");
    for (const char* key : {"host", "pattern", "blocks"})
        if (!j.contains(key)) fail(where, std::string("missing \"") + key + "\"");
    Design d{host_from_json(j["host"], where + ".host"),
             pattern_from_json(j["pattern"], where + ".pattern"),
             {}};
    if (!j["blocks"].is_array()) fail(where + ".blocks", "expected an array");
    for (std::size_t i = 0; i < j["blocks"].size(); ++i) {
        std::string bw = where + ".blocks[" + std::to_string(i) + "]";
        std::vector<Vertex> vs = label_list(j["blocks"][i], bw);
        try {
            d.blocks.emplace_back(d.pattern, std::move(vs));
        } catch (const std::exception& e) {
            fail(bw, e.what());
        }
    }
    return d;
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail("document", e.what());
    }
}

} // namespace

std::string encode_design(const Design& d) {
    json j = design_to_json(d);
    json out = {{"v", 1}};
    out.update(j);
    return out.dump(2) + "\n";
}

std::string encode_certificate(const DownLinkCertificate& c) {
    json out = {{"v", 1},
                {"source", design_to_json(c.source)},
                {"target", design_to_json(c.target)},
                {"map", c.mapping}};
    return out.dump(2) + "\n";
}

std::string encode_fixture(const Fixture& f) {
    if (std::holds_alternative<Design>(f)) return encode_design(std::get<Design>(f));
    return encode_certificate(std::get<DownLinkCertificate>(f));
}

Design decode_design(const std::string& text) {
    return design_from_json(parse(text), "$");
}

DownLinkCertificate decode_certificate(const std::string& text) {
    json j = parse(text);
    if (!j.is_object()) fail("$", "expected a certificate object");
    for (const char* key : {"source", "target", "map"})
        if (!j.contains(key)) fail("$", std::string("missing \"") + key + "\"");
    DownLinkCertificate c{design_from_json(j["source"], "$.source"),
                          design_from_json(j["target"], "$.target"),
                          {}};
    if (!j["map"].is_array()) fail("$.map", "expected an array of target indices");
    for (std::size_t i = 0; i < j["map"].size(); ++i) {
        if (!j["map"][i].is_number_integer())
            fail("$.map[" + std::to_string(i) + "]", "expected an integer");
        c.mapping.push_back(j["map"][i].get<int>());
    }
    return c;
}

Fixture decode_document(const std::string& text) {
    json j = parse(text);
    if (j.is_object() && j.contains("map")) return decode_certificate(text);
    return decode_design(text);
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << content;
        if (!out.good()) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed: " + tmp + " -> " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace dlk
