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

#pragma once

#include <string>

#include <json.hpp>

#include "cycloweight/closedform.hpp"
#include "cycloweight/expsum.hpp"

namespace cycloweight {

// Frequencies exceed 2^53, so JSON carries them as decimal strings; consumers
// that parse numbers as doubles would silently lose digits otherwise.

nlohmann::json to_json(const ValueClass& c);
nlohmann::json to_json(const ValueClass& c, const CycInt& value, const i128& count);
nlohmann::json to_json(const ValueDistribution& d, const Classifier& cls);
nlohmann::json to_json(const WeightDistribution& wd);
nlohmann::json params_json(const CodeParams& p);

/// RFC-4180-style CSV with LF line endings (values here never need quoting).
std::string distribution_csv(const ValueDistribution& d);
std::string weights_csv(const WeightDistribution& wd);

}  // namespace cycloweight
