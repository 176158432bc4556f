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

#pragma once

#include <string>
#include <string_view>

#include "gvm/dirac.hpp"
#include "gvm/verify.hpp"
#include "gvm/weyl.hpp"

namespace gvm {

/// Graphviz rendering; node and edge lines are sorted so output is byte-stable.
/// Edges carry label="<order>" (or "<=bound" when the order is undetermined)
/// and style=bold exactly when the order is 2.
std::string emit_dot(const OrbitReport& report);
std::string emit_dot(const HomGraph& graph, std::string_view name = "orbit");
std::string emit_dot(const HasseGraph& graph, const ParabolicContext& ctx);

/// {k, n, rank, singular, weights, edges, full_relation, matches_sk,
///  complex_violations, half_rank_case, dirac_family}
std::string emit_json(const OrbitReport& report);
/// {k, n, rank, singular, weights, edges}
std::string emit_json(const HomGraph& graph, const ParabolicContext& ctx);
std::string emit_json(const HasseGraph& graph, const ParabolicContext& ctx);
std::string emit_json(const VerifyReport& report);

std::string emit_text(const OrbitReport& report);
std::string emit_text(const HomGraph& graph);
std::string emit_text(const HasseGraph& graph, const ParabolicContext& ctx);

/// Reads the graph part (weights, edges, flags) of an emit_json document.
/// Throws Error(Parse) on malformed input.
HomGraph parse_graph_json(std::string_view text);

}  // namespace gvm
