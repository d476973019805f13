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

#include "pipround/instance_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pipround/error.h"

namespace pipround {

namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& message) {
  throw Error(ErrorCode::kParseError, "instance JSON: " + message);
}

std::vector<double> RealArray(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    Fail(std::string("missing array \"") + key + "\"");
  }
  std::vector<double> out;
  for (const json& v : doc[key]) {
    if (!v.is_number()) Fail(std::string("non-numeric entry in \"") + key + "\"");
    out.push_back(v.get<double>());
  }
  return out;
}

int Count(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() ||
      doc[key].get<long long>() < 0) {
    Fail(std::string("\"") + key + "\" must be a nonnegative integer");
  }
  return doc[key].get<int>();
}

}  // namespace

PipInstance ParseInstanceJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    Fail(e.what());
  }
  if (!doc.is_object()) Fail("top level must be an object");
  const int n = Count(doc, "n");
  const int m = Count(doc, "m");
  std::vector<double> c = RealArray(doc, "c");
  std::vector<double> b = RealArray(doc, "b");
  if (static_cast<int>(c.size()) != n) Fail("len(c) != n");
  if (static_cast<int>(b.size()) != m) Fail("len(b) != m");
  if (!doc.contains("A") || !doc["A"].is_object()) Fail("missing object \"A\"");
  const json& a = doc["A"];
  if (a.contains("dense") == a.contains("sparse")) {
    Fail("\"A\" must have exactly one of \"dense\" or \"sparse\"");
  }
  if (a.contains("dense")) {
    const json& rows = a["dense"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != m) {
      Fail("\"dense\" must be an array of m rows");
    }
    std::vector<std::vector<double>> dense;
    dense.reserve(m);
    for (const json& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != n) {
        Fail("every dense row must have n entries");
      }
      std::vector<double> r;
      r.reserve(n);
      for (const json& v : row) {
        if (!v.is_number()) Fail("non-numeric dense entry");
        r.push_back(v.get<double>());
      }
      dense.push_back(std::move(r));
    }
    return PipInstance::FromDense(std::move(c), dense, std::move(b));
  }
  const json& entries = a["sparse"];
  if (!entries.is_array()) Fail("\"sparse\" must be an array of [i, j, v]");
  std::vector<Triplet> triplets;
  triplets.reserve(entries.size());
  for (const json& t : entries) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
        !t[1].is_number_integer() || !t[2].is_number()) {
      Fail("sparse entries must be [int, int, real]");
    }
    triplets.push_back(
        {t[0].get<int>(), t[1].get<int>(), t[2].get<double>()});
  }
  return PipInstance::FromTriplets(n, m, std::move(c), triplets, std::move(b));
}

PipInstance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstanceJson(buffer.str());
}

std::string InstanceToJson(const PipInstance& inst, MatrixLayout layout,
                           std::string_view meta_json) {
  json doc;
  doc["n"] = inst.num_cols();
  doc["m"] = inst.num_rows();
  doc["c"] = inst.objective();
  doc["b"] = inst.capacity();
  if (layout == MatrixLayout::kDense) {
    doc["A"]["dense"] = inst.ToDense();
  } else {
    json entries = json::array();
    for (const Triplet& t : inst.ToTriplets()) {
      entries.push_back(json::array({t.row, t.col, t.value}));
    }
    doc["A"]["sparse"] = std::move(entries);
  }
  if (!meta_json.empty()) {
    json meta = json::parse(meta_json);
    if (!meta.is_object()) {
      throw Error(ErrorCode::kInvalidArgument, "meta must be a JSON object");
    }
    doc["meta"] = std::move(meta);
  }
  return doc.dump() + "\n";
}

void WriteInstanceFile(const std::string& path, const PipInstance& inst,
                       MatrixLayout layout, std::string_view meta_json) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << InstanceToJson(inst, layout, meta_json);
}

}  // namespace pipround
