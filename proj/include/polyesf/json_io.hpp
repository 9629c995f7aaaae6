#pragma once

#include <json.hpp>

#include "polyesf/esf.hpp"
#include "polyesf/moments.hpp"

namespace polyesf {

using Json = nlohmann::ordered_json;

/// {"q": int, "parts": [{"a": [int,...], "mult": int}, ...]}, parts in
/// canonical order.
Json partition_to_json(const ColoredPartition& A);
ColoredPartition partition_from_json(const Json& j);

Json integer_partition_to_json(const IntegerPartition& lambda);

/// [{"partition": {...}, "mass": "p/q"}, ...]
Json distribution_to_json(const ExactDistribution& d);

/// {"alpha": ["1/2", ...], "S": [["1","0"], ...], "n": [int,...]};
/// S is row-major, k rows by q columns.
MomentProblem moment_problem_from_json(const Json& j);
Json moment_problem_to_json(const MomentProblem& p);

}  // namespace polyesf
