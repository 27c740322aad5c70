/**
 * @file json_io.hpp
 * @brief Canonical JSON serialization of matrices, reports and pairing
 *        tables (schema "qtet/1").
 */
#pragma once

#include <json.hpp>

#include "qtet/eval_module.hpp"

namespace qtet {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const SqMatrix& m);
// Validates dimensions and that every entry is in canonical form
// (its parse must re-serialize identically).
SqMatrix matrix_from_json(const Json& j);

Json report_to_json(const std::string& suite, const VerifyReport& rep);
Json pairing_to_json(const PairingTable& p);

}  // namespace qtet
