/*
 Copyright 2026 The splitcourant Authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#pragma once

// Two-path verification of the commuting diagrams relating deformation and
// twisting on the Courant side and on the L-infinity side, the Nijenhuis
// equivalence, and named structures on Lie algebroids decided through their
// Courant-side criteria.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splitcourant/courant.hpp"
#include "splitcourant/linf.hpp"

namespace splitcourant {

struct CheckOptions {
  TupleOptions tuples;
  int max_order = kDefaultMaxOrder;
};

enum class FaceId { DeformSquare, TwistSquare, CourantTwistDeform, LinfTwistDeform, Cube };

std::string_view face_name(FaceId face);
std::optional<FaceId> parse_face(std::string_view name);

struct FaceResult {
  std::string name;
  bool pass = false;
  // Both paths as elements of F^3; paths ending on the L-infinity side are
  // pulled back through the inverse of M.
  Superfunction lhs;
  Superfunction rhs;
  Superfunction defect;  // lhs - rhs
};

struct FaceReport {
  FaceId face;
  bool pass = false;
  std::vector<FaceResult> faces;
};

// The faces that use N read only the N-component of j.
FaceReport verify_face(FaceId face, const CourantStructure& cs, const SkewEndo& j,
                       const Superfunction& pi, const CheckOptions& options = {});

struct NijenhuisMorphismReport {
  bool is_nijenhuis = false;  // torsion == 0
  Superfunction torsion;
  NijenhuisFormReport form;   // Upsilon(J) against M(Theta) with square -lambda E
  bool agree = false;
};

// Throws PreconditionError unless J^2 = lambda id.
NijenhuisMorphismReport nijenhuis_morphism_check(const CourantStructure& cs, const SkewEndo& j,
                                                 const Rational& lambda,
                                                 const CheckOptions& options = {});

enum class StructureKind { Poisson, PoissonNijenhuis, OmegaN, POmega, ExactPqnBackground, MaurerCartan };

std::string_view structure_name(StructureKind kind);
std::optional<StructureKind> parse_structure(std::string_view name);

struct StructureData {
  std::optional<Superfunction> mu;
  std::optional<Superfunction> pi;
  std::optional<Superfunction> nn;
  std::optional<Superfunction> omega;
  std::optional<Superfunction> phi;
  std::optional<Superfunction> theta;  // MAURER_CARTAN only
};

struct PreconditionResult {
  std::string name;
  bool ok = false;
  Superfunction defect;
};

struct StructureReport {
  StructureKind kind;
  std::vector<PreconditionResult> preconditions;
  bool preconditions_ok = true;
  bool holds = false;
  Superfunction defect;
  std::optional<Rational> lambda;
  std::optional<NijenhuisMorphismReport> nijenhuis;
  std::vector<PreconditionResult> cross_checks;  // independent consistency checks
  bool consistent = true;
};

// Throws PreconditionError if required data is missing.
StructureReport check_structure(StructureKind kind, const StructureData& data,
                                const std::optional<Rational>& lambda,
                                const CheckOptions& options = {});

}  // namespace splitcourant
