#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symdec/bounds.hpp"
#include "symdec/construct.hpp"
#include "symdec/dual.hpp"
#include "symdec/family.hpp"
#include "symdec/hermitian.hpp"
#include "symdec/welch.hpp"

namespace symdec {

// Matrix format: {"d": <int>, "entries": [[[re,im], ...], ...]} row-major.
nlohmann::json matrix_to_json(const HermitianMatrix& m);
HermitianMatrix matrix_from_json(const nlohmann::json& j);

// Family format: {"T": <matrix or null>, "members": [<matrix>, ...]}.
struct FamilyFile {
    std::optional<HermitianMatrix> T;
    std::vector<HermitianMatrix> members;
};
nlohmann::json family_to_json(const std::vector<HermitianMatrix>& members,
                              const HermitianMatrix* T = nullptr);
FamilyFile family_from_json(const nlohmann::json& j);

nlohmann::json basis_to_json(const ConstructionBasis& basis);
nlohmann::json window_to_json(const PsdWindow& win);
nlohmann::json fit_to_json(const SymmetricFamily& fam);
nlohmann::json decomposition_report_to_json(const DecompositionReport& rep);
nlohmann::json bounds_to_json(const BoundsReport& rep);
nlohmann::json welch_to_json(const WelchReport& rep);
nlohmann::json dual_parameters_to_json(const DualParameters& p);

// Weights format: {"v": [..]}.
WeightVector weights_from_json(const nlohmann::json& j);

/// Shortest decimal string that parses back to exactly the same double.
std::string dtos(double x);

}  // namespace symdec
