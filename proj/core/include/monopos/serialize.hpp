// Copyright 2026 The monopos Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <nlohmann/json.hpp>

#include "monopos/checker.hpp"
#include "monopos/invariants.hpp"
#include "monopos/lex_formula.hpp"
#include "monopos/position_sets.hpp"
#include "monopos/products.hpp"

namespace monopos {

// JSON forms used by the CLI. Vertex sets are ascending arrays of indices.
void to_json(nlohmann::json& j, const VertexSet& s);
void to_json(nlohmann::json& j, const Invariants& inv);
void to_json(nlohmann::json& j, const ComponentProfile& p);
void to_json(nlohmann::json& j, const SolveResult& r);
void to_json(nlohmann::json& j, const CheckInstance& c);
void to_json(nlohmann::json& j, const CheckReport& r);

// [{"g":..,"h":..,"index":..}, ...]
nlohmann::json product_set_json(const ProductGraph& p, const VertexSet& s);
// SolveResult whose witness lives in a product.
nlohmann::json product_result_json(const ProductGraph& p, const SolveResult& r);
nlohmann::json mp_class_json(const MpClass& c);
nlohmann::json lex_result_json(const ProductGraph& p, const LexResult& r);

}  // namespace monopos
