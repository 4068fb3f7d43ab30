// Copyright 2026 The tracemaps authors
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

#include <string>
#include <utility>
#include <vector>

#include "tracemaps/classify.hpp"
#include "tracemaps/fricke.hpp"
#include "tracemaps/sigma.hpp"

namespace tracemaps {

// Full classification of one trace map.  Every structural claim in the
// report is re-verified symbolically and the outcome recorded in `checks`;
// a report with a failed check is a bug, not a result.
struct Report {
  std::string input_kind;  // "matrix" or "substitution"
  std::string input_text;
  TraceMap map = TraceMap::identity();
  OrderClass order;
  Permutation3 pi;
  SigmaSubgroup ksigma;
  GroupDescriptor sym_g;
  GroupDescriptor rev_g;
  GroupDescriptor sym_a;
  GroupDescriptor rev_a;
  ReversibilityCertificate certificate;
  std::vector<std::pair<std::string, bool>> checks;

  bool all_checks_pass() const;
};

// Orchestrates construct -> classify -> certify -> verify.  Throws
// ParseError on malformed input and DomainError on non-unimodular input.
Report report_for_matrix(const std::string& text);
Report report_for_substitution(const std::string& text);
Report report_for(const TraceMap& f, std::string input_kind,
                  std::string input_text);

// Deterministic serialization: fixed key set and ordering.
std::string render_report_json(const Report& r);
std::string render_report_text(const Report& r);

}  // namespace tracemaps
