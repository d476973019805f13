// Copyright 2026 The pipround Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON instance files:
//
//   {"n": int, "m": int, "c": [...], "b": [...],
//    "A": {"dense": [[...], ...]} | {"sparse": [[i, j, v], ...]},
//    "meta": {...}}
//
// Indices are 0-based; repeated sparse (i, j) pairs are rejected.

#ifndef PIPROUND_INSTANCE_IO_H_
#define PIPROUND_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include "pipround/instance.h"

namespace pipround {

enum class MatrixLayout { kDense, kSparse };

// Throws Error(kParseError) on malformed JSON or schema violations and
// Error(kInvalidInstance) on dimension or duplicate-entry problems.
PipInstance ParseInstanceJson(std::string_view text);
PipInstance ReadInstanceFile(const std::string& path);

// `meta_json`, when non-empty, must be a JSON object and is embedded as-is.
std::string InstanceToJson(const PipInstance& instance, MatrixLayout layout,
                           std::string_view meta_json = {});
void WriteInstanceFile(const std::string& path, const PipInstance& instance,
                       MatrixLayout layout, std::string_view meta_json = {});

}  // namespace pipround

#endif  // PIPROUND_INSTANCE_IO_H_
