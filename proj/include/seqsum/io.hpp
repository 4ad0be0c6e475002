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

#ifndef SEQSUM_IO_HPP
#define SEQSUM_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "seqsum/multilinear.hpp"
#include "seqsum/seqclasses.hpp"

namespace seqsum {

/// Space literal `lp:<p>:<d>` with p a decimal, fraction or "inf".
Space parse_space(const std::string& text);

/// Fixed "%.17g" rendering; every CSV/report number goes through this so
/// outputs are byte-stable.
std::string format_double(double v);

nlohmann::json seq_to_json(const FiniteSeq& s);
FiniteSeq seq_from_json(const nlohmann::json& j,
                        const std::optional<Space>& expected = std::nullopt);

/// Sequence file: {"space": "lp:2:3", "items": [[...], ...]}. The space field
/// may be omitted when `expected` is given; when both exist they must agree.
FiniteSeq load_seq_file(const std::string& path,
                        const std::optional<Space>& expected = std::nullopt);

/// Operator file: {"arity": n, "domains": [...], "codomain": "...",
/// "shape": [d_1, ..., d_n, d_F], "coeffs": flat row-major array}.
MultilinearOp op_from_json(const nlohmann::json& j);
MultilinearOp load_op_file(const std::string& path);
nlohmann::json op_to_json(const MultilinearOp& op);

/// Deterministic CSV emitter.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void row(const std::vector<std::string>& fields);
  void row_numeric(int k, const std::vector<double>& values);
  const std::string& text() const { return text_; }
  void save(const std::string& path) const;

 private:
  std::size_t width_;
  std::string text_;
};

}  // namespace seqsum

#endif  // SEQSUM_IO_HPP
