#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "golod/complex.hpp"
#include "golod/golod.hpp"

namespace golod {

using Json = nlohmann::ordered_json;

// 64-bit FNV-1a of the raw input bytes, hex encoded.
std::string fnv1a_digest(const std::string& content);

Json witness_to_json(const GolodWitness& w, const SimplicialComplex& K);
Json golod_report_to_json(const GolodReport& rep, const SimplicialComplex& K);

// Re-checks a serialized witness against the complex: the certificate must
// hold on its own (induced cycle, breakable non-neighborly subcomplex with
// matching cokernel and missed cycle, or re-evaluating nonzero product).
// Returns an explanation through `why` on failure.
bool verify_witness(const SimplicialComplex& K, const Json& witness, std::string* why);

}  // namespace golod
