#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

#include "frobalg/amplify.hpp"

namespace frobalg {

/// "rational" or {"prime": p}.  Throws ParseError.
nlohmann::json field_to_json(FieldSpec field);
FieldSpec field_from_json(const nlohmann::json& j);

/// {"field", "dim", "basis", "unit", "structure": [[i, j, k, c], ...]}, 0-based,
/// zeros omitted.  A non-null provenance is stored under "provenance".
nlohmann::json algebra_to_json(const FinDimAlgebra& a, const nlohmann::json& provenance = nullptr);
/// Throws ParseError or DimensionMismatch.
FinDimAlgebra algebra_from_json(const nlohmann::json& j);

/// [[alpha, beta, c], ...].
nlohmann::json tensor_to_json(const Tensor2& t);
Tensor2 tensor_from_json(const nlohmann::json& j, FieldSpec field, std::size_t dim);

nlohmann::json functional_to_json(const Functional& f);
Functional functional_from_json(const nlohmann::json& j, FieldSpec field);

/// {"epsilon": [...], "y": tensor}.
nlohmann::json pair_to_json(const FrobeniusPair& pair);

/// {"classes": [{"i": 1, "pairs": [[s, s'], ...]}, ...]} with 1-based classes.
nlohmann::json spec_to_json(const SpreadSpec& spec);
/// Classes not listed get an empty S(i).  Throws ParseError or IndexOutOfRange.
SpreadSpec spec_from_json(const nlohmann::json& j, std::size_t n);

/// Throws ParseError.
nlohmann::json read_json_file(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline.  Throws Error on I/O failure.
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace frobalg
