/*
 * Copyright 2026 The cycloweight authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cycloweight/report.hpp"

namespace cycloweight {

nlohmann::json to_json(const ValueClass& c) {
    return {{"kind", to_string(c.kind)}, {"epsilon", c.eps}, {"i", c.i}, {"j", c.j}};
}

nlohmann::json to_json(const ValueClass& c, const CycInt& value, const i128& count) {
    nlohmann::json e = to_json(c);
    e["value"] = value.str();
    e["count"] = to_decimal(count);
    return e;
}

nlohmann::json to_json(const ValueDistribution& d, const Classifier& cls) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [c, k] : d.counts) arr.push_back(to_json(c, cls.value_of(c), k));
    return arr;
}

nlohmann::json to_json(const WeightDistribution& wd) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [w, f] : wd)
        arr.push_back({{"weight", w}, {"frequency", to_decimal(f)}});
    return arr;
}

nlohmann::json params_json(const CodeParams& p) {
    return {{"p", p.p}, {"m", p.m}, {"k", p.k}, {"q", p.q()}};
}

std::string distribution_csv(const ValueDistribution& d) {
    std::string out = "kind,epsilon,i,j,count\n";
    for (const auto& [c, k] : d.counts) {
        out += to_string(c.kind);
        out += ',' + std::to_string(c.eps) + ',' + std::to_string(c.i) + ',' +
               std::to_string(c.j) + ',' + to_decimal(k) + '\n';
    }
    return out;
}

std::string weights_csv(const WeightDistribution& wd) {
    std::string out = "weight,frequency\n";
    for (const auto& [w, f] : wd) out += std::to_string(w) + ',' + to_decimal(f) + '\n';
    return out;
}

}  // namespace cycloweight
