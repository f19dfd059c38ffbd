#include "spb/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "spb/errors.hpp"

namespace spb::io {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("input is not valid JSON");
    return j;
}

std::vector<std::string> string_list(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array())
        throw ParseError(std::string(field) + " must be an array");
    std::vector<std::string> out;
    for (const auto& x : j[field]) {
        if (!x.is_string())
            throw ParseError(std::string(field) + " must contain strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> edge_list(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array())
        throw ParseError(std::string(field) + " must be an array");
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& x : j[field]) {
        if (!x.is_array() || x.size() != 2 || !x[0].is_string() || !x[1].is_string())
            throw ParseError(std::string(field) + " entries must be [vertex, vertex] pairs");
        out.emplace_back(x[0].get<std::string>(), x[1].get<std::string>());
    }
    return out;
}

ojson edges_json(const std::vector<std::pair<std::string, std::string>>& edges) {
    ojson out = ojson::array();
    for (const auto& [u, v] : edges) out.push_back({u, v});
    return out;
}

ojson instance_obj(const StreamedInstance& i) {
    ojson j;
    j["omega"] = i.omega();
    j["vertices"] = i.vertices();
    j["backbone_edges"] = edges_json(i.backbone_edges());
    j["stream"] = edges_json(i.stream());
    if (!i.canonical_positions()) {
        std::vector<int> pos;
        for (int k = 1; k <= i.stream_size(); ++k) pos.push_back(i.position(k));
        j["positions"] = pos;
    }
    return j;
}

StreamedInstance instance_from(const json& j) {
    if (!j.is_object()) throw ParseError("instance must be a JSON object");
    if (!j.contains("omega") || !j["omega"].is_number_integer())
        throw ParseError("omega must be an integer");
    std::vector<int> positions;
    if (j.contains("positions")) {
        if (!j["positions"].is_array())
            throw ParseError("positions must be an array of integers");
        for (const auto& x : j["positions"]) {
            if (!x.is_number_integer())
                throw ParseError("positions must be an array of integers");
            positions.push_back(x.get<int>());
        }
    }
    return StreamedInstance(string_list(j, "vertices"), edge_list(j, "backbone_edges"),
                            edge_list(j, "stream"), j["omega"].get<int>(),
                            std::move(positions));
}

ojson certificate_obj(const DrawingCertificate& c) {
    ojson rot = ojson::object();
    for (const auto& [v, order] : c.rotation.to_labels()) rot[v] = order;
    ojson asg = ojson::object();
    for (const auto& [j, f] : c.stream_face) asg["stream:" + std::to_string(j)] = f;
    for (const auto& [v, f] : c.vertex_face) asg["vertex:" + v] = f;
    ojson out;
    out["rotation"] = rot;
    out["assignment"] = asg;
    return out;
}

DrawingCertificate certificate_from(const json& j, const StreamedInstance& i) {
    if (!j.is_object() || !j.contains("rotation") || !j.contains("assignment") ||
        !j["rotation"].is_object() || !j["assignment"].is_object())
        throw ParseError("certificate must be an object with rotation and assignment");

    std::map<std::string, std::vector<std::string>> order;
    for (const auto& [v, arr] : j["rotation"].items()) {
        if (!arr.is_array()) throw ParseError("rotation entries must be arrays of vertices");
        std::vector<std::string>& nb = order[v];
        for (const auto& x : arr) {
            if (!x.is_string())
                throw ParseError("rotation entries must be arrays of vertices");
            nb.push_back(x.get<std::string>());
        }
    }

    DrawingCertificate c;
    BlockCutTree bct = blocks(i.backbone_graph());
    if (bct.nontrivial_component_count >= 1) {
        c.rotation = RotationSystem::from_label_map(i.beta_graph(), order);
    } else if (!order.empty()) {
        throw MalformedCertificate("rotation given for a backbone without edges");
    }

    for (const auto& [key, val] : j["assignment"].items()) {
        if (!val.is_number_integer())
            throw ParseError("assignment values must be face ids");
        int f = val.get<int>();
        if (key.rfind("stream:", 0) == 0) {
            int idx = 0;
            try {
                idx = std::stoi(key.substr(7));
            } catch (const std::exception&) {
                throw MalformedCertificate("bad stream index in assignment key " + key);
            }
            c.stream_face[idx] = f;
        } else if (key.rfind("vertex:", 0) == 0) {
            c.vertex_face[key.substr(7)] = f;
        } else {
            throw MalformedCertificate("assignment key " + key +
                                       " is neither stream:<index> nor vertex:<label>");
        }
    }
    return c;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

StreamedInstance parse_instance(const std::string& text) {
    return instance_from(parse_text(text));
}

std::string instance_json(const StreamedInstance& i) { return instance_obj(i).dump(2) + "\n"; }

SefeInstance parse_family(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object()) throw ParseError("family must be a JSON object");
    SefeInstance s;
    s.vertices = string_list(j, "vertices");
    s.common_edges = edge_list(j, "common_edges");
    if (!j.contains("graphs") || !j["graphs"].is_array())
        throw ParseError("graphs must be an array");
    for (const auto& g : j["graphs"]) {
        SefeGraph sg;
        sg.exclusive_edges = edge_list(g, "exclusive_edges");
        s.graphs.push_back(std::move(sg));
    }
    return s;
}

std::string family_json(const SefeInstance& s) {
    ojson j;
    j["vertices"] = s.vertices;
    j["common_edges"] = edges_json(s.common_edges);
    ojson graphs = ojson::array();
    for (const auto& g : s.graphs) {
        ojson go;
        go["exclusive_edges"] = edges_json(g.exclusive_edges);
        graphs.push_back(go);
    }
    j["graphs"] = graphs;
    return j.dump(2) + "\n";
}

DrawingCertificate parse_certificate(const std::string& text, const StreamedInstance& i) {
    return certificate_from(parse_text(text), i);
}

std::string certificate_json(const DrawingCertificate& c) {
    return certificate_obj(c).dump(2) + "\n";
}

bool is_composite_witness(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    return j.is_object() && j.contains("pieces");
}

std::string witness_json(const std::vector<PieceWitness>& pieces) {
    ojson arr = ojson::array();
    for (const auto& p : pieces) {
        ojson po;
        po["instance"] = instance_obj(p.instance);
        po["certificate"] = certificate_obj(p.certificate);
        arr.push_back(po);
    }
    ojson j;
    j["pieces"] = arr;
    return j.dump(2) + "\n";
}

std::vector<PieceWitness> parse_composite_witness(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object() || !j.contains("pieces") || !j["pieces"].is_array())
        throw ParseError("composite witness must have a pieces array");
    std::vector<PieceWitness> out;
    for (const auto& p : j["pieces"]) {
        if (!p.is_object() || !p.contains("instance") || !p.contains("certificate"))
            throw ParseError("each piece needs an instance and a certificate");
        StreamedInstance inst = instance_from(p["instance"]);
        DrawingCertificate cert = certificate_from(p["certificate"], inst);
        out.push_back({std::move(inst), std::move(cert)});
    }
    return out;
}

std::string instance_dot(const StreamedInstance& i) {
    std::ostringstream out;
    out << "graph spb {\n";
    for (const auto& v : i.vertices()) out << "  " << quoted(v) << ";\n";
    for (const auto& [u, v] : i.backbone_edges())
        out << "  " << quoted(u) << " -- " << quoted(v) << ";\n";
    for (int j = 1; j <= i.stream_size(); ++j) {
        const auto& [u, v] = i.stream()[j - 1];
        out << "  " << quoted(u) << " -- " << quoted(v) << " [style=dashed, label=\"Ψ="
            << i.position(j) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ParseError("cannot write file: " + tmp);
        out << content;
        out.flush();
        if (!out) throw ParseError("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw ParseError("cannot move " + tmp + " into place");
    }
}

}  // namespace spb::io
