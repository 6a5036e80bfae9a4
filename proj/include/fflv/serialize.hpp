// Copyright (c) fflv-lusztig contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Canonical JSON for polytopes, point sets, crystal graphs and reports.
// Keys are emitted in sorted order and collections in sorted order, so equal
// objects serialize to identical bytes.
#pragma once

#include <json.hpp>

#include "fflv/crystal.hpp"
#include "fflv/polytope.hpp"
#include "fflv/verify.hpp"

namespace fflv {

void to_json(nlohmann::json& j, const HPolytope& p);
void from_json(const nlohmann::json& j, HPolytope& p);

void to_json(nlohmann::json& j, const PointSet& s);
void from_json(const nlohmann::json& j, PointSet& s);

void to_json(nlohmann::json& j, const CrystalGraph& g);
void from_json(const nlohmann::json& j, CrystalGraph& g);

void to_json(nlohmann::json& j, const VerificationReport& r);

}  // namespace fflv
