// Copyright 2026 The mubkit Authors
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

#ifndef MUBKIT_SERIALIZE_H
#define MUBKIT_SERIALIZE_H

#include <string>

#include "json.hpp"
#include "mubkit/locking.h"
#include "mubkit/mubs.h"
#include "mubkit/squares.h"
#include "mubkit/uncertainty.h"

namespace mubkit {

using Json = nlohmann::ordered_json;

/// Rounds to 15 significant digits so emitted JSON is stable across runs.
double round15(double x);

Json to_json(const LatinSquare &sq);
LatinSquare latin_square_from_json(const Json &j);

/// {"dim", "family", "metadata", "bases": [basis][vector][amplitude] = [re, im]}.
Json to_json(const MubSet &set);
/// Throws std::invalid_argument on malformed input.
MubSet mubset_from_json(const Json &j);

Json to_json(const StateVector &psi);
Json to_json(const CertificateReport &r);
Json to_json(const PermutationReport &r);
Json to_json(const MinimizationResult &r);
Json to_json(const TightnessCertificate &c);
Json to_json(const AccessibleInfoResult &r);
Json to_json(const GapReport &g);
Json to_json(const Prior &p);
Json to_json(const Ensemble &e);

/// {"weights": [[p_{1,1}, ..., p_{1,d}], ...]}.
Prior prior_from_json(const Json &j);

MubSet read_mubset_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

}  // namespace mubkit

#endif
