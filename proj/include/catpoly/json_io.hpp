#pragma once

#include "json.hpp"

#include "catpoly/polynomial.hpp"
#include "catpoly/tree.hpp"
#include "catpoly/verify.hpp"

// JSON forms mirror the canonical text forms: terms in descending
// lexicographic order of lambda, compositions and partitions as plain
// integer arrays. Emitting and re-parsing a value reproduces the exact
// bytes, so JSON output is safe to diff.
namespace catpoly {

nlohmann::ordered_json to_json(const Composition& c);
nlohmann::ordered_json to_json(const Partition& p);
nlohmann::ordered_json to_json(const PartitionPolynomial& p);
nlohmann::ordered_json to_json(const GraphUPolynomial& p);
nlohmann::ordered_json to_json(const Tree& t);
nlohmann::ordered_json to_json(const WitnessData& w);
nlohmann::ordered_json to_json(const VerificationReport& r);

Composition composition_from_json(const nlohmann::json& j);
PartitionPolynomial partition_polynomial_from_json(const nlohmann::json& j);
GraphUPolynomial graph_polynomial_from_json(const nlohmann::json& j);
Tree tree_from_json(const nlohmann::json& j);

// Compact single-line dump used by the CLI.
std::string json_text(const nlohmann::ordered_json& j);

}  // namespace catpoly
