/*
Copyright 2026 The gvmhom Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "gvm/emit.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace gvm {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string edge_attributes(const HomArrow& a) {
    if (!a.order) {
        return "[label=\"<=" + a.bound.to_string() + "\"]";
    }
    std::string attrs = "[label=\"" + std::to_string(*a.order) + "\"";
    if (*a.order == 2) {
        attrs += ", style=bold";
    }
    return attrs + "]";
}

std::string render_dot(std::string_view name, std::vector<std::string> nodes, std::vector<std::string> edges) {
    std::sort(nodes.begin(), nodes.end());
    std::sort(edges.begin(), edges.end());
    std::string out = "digraph " + std::string(name) + " {\n";
    for (const auto& line : nodes) {
        out += "  " + line + ";\n";
    }
    for (const auto& line : edges) {
        out += "  " + line + ";\n";
    }
    return out + "}\n";
}

std::string dot_for(const HomGraph& graph, std::string_view name, const std::vector<bool>* family) {
    std::vector<std::string> nodes;
    std::vector<std::string> edges;
    for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
        auto line = quoted(graph.vertices[i].to_string());
        if (family != nullptr && !(*family)[i]) {
            line += " [shape=box]";
        }
        nodes.push_back(std::move(line));
    }
    for (const auto& a : graph.arrows) {
        edges.push_back(quoted(graph.vertices[a.from].to_string()) + " -> " + quoted(graph.vertices[a.to].to_string()) +
                        " " + edge_attributes(a));
    }
    return render_dot(name, std::move(nodes), std::move(edges));
}

ordered_json half_int_json(HalfInt h) {
    if (h.is_integer()) {
        return h.as_integer();
    }
    return h.as_double();
}

ordered_json graph_header(const HomGraph& graph, const ParabolicContext& ctx) {
    ordered_json j;
    j["k"] = ctx.k();
    j["n"] = ctx.n();
    j["rank"] = ctx.rank();
    j["singular"] = graph.singular;
    auto& weights = j["weights"] = ordered_json::array();
    for (const auto& v : graph.vertices) {
        weights.push_back(v.to_string());
    }
    auto& edges = j["edges"] = ordered_json::array();
    for (const auto& a : graph.arrows) {
        ordered_json e;
        e["from"] = a.from;
        e["to"] = a.to;
        e["order"] = a.order ? ordered_json(*a.order) : ordered_json(nullptr);
        e["bound"] = half_int_json(a.bound);
        edges.push_back(std::move(e));
    }
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string emit_dot(const OrbitReport& report) { return dot_for(report.graph, "orbit", &report.in_dirac_family); }

std::string emit_dot(const HomGraph& graph, std::string_view name) { return dot_for(graph, name, nullptr); }

std::string emit_dot(const HasseGraph& graph, const ParabolicContext& ctx) {
    const auto rho = delta(ctx);
    std::vector<std::string> nodes;
    std::vector<std::string> edges;
    for (const auto& w : graph.vertices) {
        nodes.push_back(quoted(w.to_string()) + " [label=" + quoted(w.to_string() + "\\n" + apply(w, rho).to_string()) + "]");
    }
    for (const auto& a : graph.arrows) {
        edges.push_back(quoted(graph.vertices[a.from].to_string()) + " -> " + quoted(graph.vertices[a.to].to_string()) +
                        " [label=" + quoted(a.gamma.to_string()) + "]");
    }
    return render_dot("hasse", std::move(nodes), std::move(edges));
}

std::string emit_json(const OrbitReport& report) {
    auto j = graph_header(report.graph, report.ctx);
    auto& relation = j["full_relation"] = ordered_json::array();
    for (const auto& [a, b] : report.full_relation) {
        relation.push_back({a, b});
    }
    j["matches_sk"] = report.matches_sk;
    auto& violations = j["complex_violations"] = ordered_json::array();
    for (const auto& t : report.complex_violations) {
        violations.push_back({t[0], t[1], t[2]});
    }
    j["half_rank_case"] = report.graph.half_rank_case;
    j["dirac_family"] = report.in_dirac_family;
    return dump(j);
}

std::string emit_json(const HomGraph& graph, const ParabolicContext& ctx) { return dump(graph_header(graph, ctx)); }

std::string emit_json(const HasseGraph& graph, const ParabolicContext& ctx) {
    const auto rho = delta(ctx);
    ordered_json j;
    j["k"] = ctx.k();
    j["n"] = ctx.n();
    j["rank"] = ctx.rank();
    auto& vertices = j["vertices"] = ordered_json::array();
    for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
        ordered_json v;
        v["element"] = graph.vertices[i].to_string();
        v["length"] = graph.lengths[i];
        v["delta_image"] = apply(graph.vertices[i], rho).to_string();
        vertices.push_back(std::move(v));
    }
    auto& arrows = j["arrows"] = ordered_json::array();
    for (const auto& a : graph.arrows) {
        ordered_json e;
        e["from"] = a.from;
        e["to"] = a.to;
        e["root"] = a.gamma.to_string();
        arrows.push_back(std::move(e));
    }
    return dump(j);
}

std::string emit_json(const VerifyReport& report) {
    ordered_json j;
    j["passed"] = report.all_passed();
    auto& rows = j["checks"] = ordered_json::array();
    for (const auto& r : report.rows) {
        ordered_json e;
        e["status"] = to_string(r.status);
        e["name"] = r.name;
        e["detail"] = r.detail;
        rows.push_back(std::move(e));
    }
    return dump(j);
}

std::string emit_text(const HomGraph& graph) {
    std::ostringstream out;
    for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
        out << "  [" << i << "] " << graph.vertices[i].to_string() << " E=" << grading_eval(graph.vertices[i]).to_string()
            << '\n';
    }
    for (const auto& a : graph.arrows) {
        out << "  " << graph.vertices[a.from].to_string() << " -> " << graph.vertices[a.to].to_string() << "  order "
            << (a.order ? std::to_string(*a.order) : "<=" + a.bound.to_string()) << '\n';
    }
    return out.str();
}

std::string emit_text(const OrbitReport& report) {
    std::ostringstream out;
    out << "k=" << report.ctx.k() << " n=" << report.ctx.n() << " rank=" << report.ctx.rank() << '\n';
    out << "lambda   " << report.lambda.to_string() << '\n';
    out << "dominant " << report.dominant.to_string() << (report.graph.singular ? " (singular)" : "") << '\n';
    out << report.graph.vertices.size() << " p-dominant weights, " << report.graph.arrows.size() << " arrows, "
        << report.full_relation.size() << " nonzero standard maps\n";
    out << emit_text(report.graph);
    out << "matches S_k: " << (report.matches_sk ? "yes" : "no") << '\n';
    out << "nonzero standard maps along length-2 paths: " << report.complex_violations.size() << '\n';
    if (report.graph.half_rank_case) {
        out << "note: k = (n-1)/2, the orbit carries a second weight family\n";
    }
    return out.str();
}

std::string emit_text(const HasseGraph& graph, const ParabolicContext& ctx) {
    const auto rho = delta(ctx);
    std::ostringstream out;
    out << graph.vertices.size() << " elements of W^p, " << graph.arrows.size() << " arrows\n";
    for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
        out << "  [" << i << "] l=" << graph.lengths[i] << ' ' << graph.vertices[i].to_string() << "  w.delta="
            << apply(graph.vertices[i], rho).to_string() << '\n';
    }
    for (const auto& a : graph.arrows) {
        out << "  " << a.from << " -> " << a.to << "  " << a.gamma.to_string() << '\n';
    }
    return out.str();
}

HomGraph parse_graph_json(std::string_view text) {
    HomGraph g;
    try {
        const auto j = nlohmann::json::parse(text);
        g.singular = j.at("singular").get<bool>();
        g.half_rank_case = j.value("half_rank_case", false);
        for (const auto& w : j.at("weights")) {
            g.vertices.push_back(parse_weight(w.get<std::string>()));
        }
        for (const auto& e : j.at("edges")) {
            HomArrow a{e.at("from").get<std::size_t>(), e.at("to").get<std::size_t>(), std::nullopt, HalfInt()};
            if (!e.at("order").is_null()) {
                a.order = e.at("order").get<int>();
            }
            const auto& bound = e.at("bound");
            a.bound = bound.is_number_integer() ? HalfInt(bound.get<int>())
                                                : HalfInt::from_twice(static_cast<std::int64_t>(2 * bound.get<double>()));
            if (a.from >= g.vertices.size() || a.to >= g.vertices.size()) {
                throw Error(ErrorCode::Parse, "edge index out of range");
            }
            g.arrows.push_back(a);
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("malformed graph json: ") + e.what());
    }
    return g;
}

}  // namespace gvm
