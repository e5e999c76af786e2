// Copyright 2026 The pascal11 Authors
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

#include "pascal/row.h"

namespace pascal {

std::string_view RowMethodName(RowMethod method) {
  switch (method) {
    case RowMethod::kPowerPartition:
      return "power";
    case RowMethod::kMultiplicative:
      return "mult";
    case RowMethod::kRecurrence:
      return "rec";
  }
  return "unknown";
}

std::optional<RowMethod> ParseRowMethod(std::string_view name) {
  if (name == "power") return RowMethod::kPowerPartition;
  if (name == "mult") return RowMethod::kMultiplicative;
  if (name == "rec") return RowMethod::kRecurrence;
  return std::nullopt;
}

std::string FormatRowPlain(const Row& row) {
  std::string out;
  for (std::size_t k = 0; k < row.coefficients.size(); ++k) {
    if (k) out += ' ';
    out += row.coefficients[k].ToDecimal();
  }
  return out;
}

}  // namespace pascal
