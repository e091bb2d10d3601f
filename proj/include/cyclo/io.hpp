#pragma once

#include "cyclo/classify.hpp"
#include "cyclo/clifford.hpp"
#include "cyclo/combinatorics.hpp"
#include "cyclo/parameters.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace cyclo::io {

using nlohmann::json;

/// {e, p, delta, charges[], derived:{f, eprime, pprime, r, L}}
json to_json(const ParameterSpec& spec);

/// [[2,1],[],[1]]
json to_json(const Multipartition& lambda);

/// Inverse of to_json(Multipartition); throws std::invalid_argument on malformed input.
Multipartition multipartition_from_json(const json& value);

/// {spec, n, labels:[{lambda, o_lambda, i, a_value}], checks:{lambda0, lambda1, orbits, total}}
json classify_json(int n, const ParameterSpec& spec, const std::vector<SimpleLabel>& labels,
                   const CountReport& report);

/// Header "lambda o_lambda i a_value", one row per label, tab separated, trailing newline.
std::string classify_tsv(const std::vector<SimpleLabel>& labels);

/// Header "representative o_lambda eigen_index dimension a_value".
std::string semisimple_tsv(const std::vector<SemisimpleLabel>& labels);
json semisimple_json(int n, const ParameterSpec& spec, const std::vector<SemisimpleLabel>& labels);

/// Array of multipartitions, each an array of part lists.
json listing_json(const std::vector<Multipartition>& items);

/// Exact counts go to JSON as numbers when they fit in 64 bits, as decimal strings otherwise.
json count_to_json(const Count& value);

}  // namespace cyclo::io
