// Copyright 2026 The seqsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "seqsum/io.hpp"

#include <cstdio>
#include <fstream>

namespace seqsum {

Space parse_space(const std::string& text) {
  if (text.rfind("lp:", 0) != 0) throw Error("cannot parse space spec '" + text + "'");
  auto second = text.find(':', 3);
  if (second == std::string::npos) throw Error("cannot parse space spec '" + text + "'");
  Exponent p = Exponent::parse(text.substr(3, second - 3));
  int dim = std::atoi(text.substr(second + 1).c_str());
  if (dim < 1) throw Error("space dimension must be >= 1 in '" + text + "'");
  return Space(dim, p);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json seq_to_json(const FiniteSeq& s) {
  nlohmann::json j;
  j["space"] = s.space.str();
  nlohmann::json items = nlohmann::json::array();
  for (const Vector& x : s.items) items.push_back(x.coords);
  j["items"] = items;
  return j;
}

FiniteSeq seq_from_json(const nlohmann::json& j, const std::optional<Space>& expected) {
  std::optional<Space> declared;
  if (j.contains("space")) declared = parse_space(j.at("space").get<std::string>());
  if (declared && expected && *declared != *expected)
    throw Error("sequence file space " + declared->str() + " does not match " +
                expected->str());
  if (!declared && !expected) throw Error("sequence has no space");
  Space sp = declared ? *declared : *expected;

  FiniteSeq s(sp);
  for (const auto& item : j.at("items")) {
    std::vector<double> coords = item.get<std::vector<double>>();
    s.push(Vector(sp, std::move(coords)));
  }
  return s;
}

FiniteSeq load_seq_file(const std::string& path, const std::optional<Space>& expected) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open sequence file '" + path + "'");
  nlohmann::json j;
  in >> j;
  return seq_from_json(j, expected);
}

MultilinearOp op_from_json(const nlohmann::json& j) {
  int arity = j.at("arity").get<int>();
  std::vector<Space> domains;
  for (const auto& d : j.at("domains")) domains.push_back(parse_space(d.get<std::string>()));
  if (static_cast<int>(domains.size()) != arity) throw Error("operator arity mismatch");
  Space codomain = parse_space(j.at("codomain").get<std::string>());
  std::vector<int> shape = j.at("shape").get<std::vector<int>>();
  if (static_cast<int>(shape.size()) != arity + 1) throw Error("operator shape arity mismatch");
  for (int i = 0; i < arity; ++i)
    if (shape[static_cast<std::size_t>(i)] != domains[static_cast<std::size_t>(i)].dim)
      throw Error("operator shape does not match domains");
  if (shape.back() != codomain.dim) throw Error("operator shape does not match codomain");
  std::vector<double> coeffs = j.at("coeffs").get<std::vector<double>>();
  return MultilinearOp::dense(std::move(domains), codomain, std::move(coeffs));
}

MultilinearOp load_op_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open operator file '" + path + "'");
  nlohmann::json j;
  in >> j;
  return op_from_json(j);
}

nlohmann::json op_to_json(const MultilinearOp& op) {
  nlohmann::json j;
  j["arity"] = op.arity();
  nlohmann::json domains = nlohmann::json::array();
  std::vector<int> shape;
  for (const Space& d : op.domains()) {
    domains.push_back(d.str());
    shape.push_back(d.dim);
  }
  shape.push_back(op.codomain().dim);
  j["domains"] = domains;
  j["codomain"] = op.codomain().str();
  j["shape"] = shape;
  j["coeffs"] = op.dense_coeffs();
  return j;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) text_ += ',';
    text_ += header[i];
  }
  text_ += '\n';
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  if (fields.size() != width_) throw Error("csv row width mismatch");
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) text_ += ',';
    text_ += fields[i];
  }
  text_ += '\n';
}

void CsvWriter::row_numeric(int k, const std::vector<double>& values) {
  std::vector<std::string> fields;
  fields.reserve(values.size() + 1);
  fields.push_back(std::to_string(k));
  for (double v : values) fields.push_back(format_double(v));
  row(fields);
}

void CsvWriter::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text_;
}

}  // namespace seqsum
