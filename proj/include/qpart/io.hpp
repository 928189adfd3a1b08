#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qpart/bounds.hpp"
#include "qpart/growth.hpp"
#include "qpart/interval.hpp"
#include "qpart/measures.hpp"
#include "qpart/partition.hpp"
#include "qpart/permutation.hpp"
#include "qpart/rational.hpp"
#include "qpart/sampling.hpp"

namespace qpart::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);  ///< "a/b"
Json to_json(const Interval& iv);  ///< {"lo": "a/b", "hi": "c/d"}
Json to_json(const Partition& p);  ///< [4,3,3,1]
Json to_json(const Permutation& p);  ///< [3,1,2]

/// Parses a JSON array of decreasing positive integers.
Partition partition_from_json(const Json& j);
/// Accepts "[4,3,3,1]", "4,3,3,1" or "4 3 3 1".
Partition parse_partition(const std::string& text);
Permutation parse_permutation(const std::string& text);

/// {"n":..., "q":"p/q", "measure":"P"|"Q", "entries":[{"partition":[...], "prob":"a/b"}, ...]}
Json pmf_to_json(const Pmf& pmf);
Pmf pmf_from_json(const Json& j);
/// Header "partition,prob,prob_decimal"; partition in bracket notation, quoted.
std::string pmf_to_csv(const Pmf& pmf);

/// Header "n,r_or_k,q,lower,exact,upper,slack_low,slack_high" followed by the
/// same six quantities as 12-significant-digit decimals.
std::string bounds_to_csv(const std::vector<BoundReport>& rows);
Json bounds_to_json(const std::vector<BoundReport>& rows);

Json z_table_to_json(const ZTable& table);
std::string z_table_to_csv(const ZTable& table);

/// Sequence of partitions along the path.
Json syt_to_json(const TableauPath& path);

/// Metadata record followed by one {"partition": [...]} line per draw.
std::string batch_to_ndjson(const SampleBatch& batch);
Json frequency_report_to_json(const std::vector<FrequencyRow>& rows);

/// {perm, maj, maj_inv, shape, lis, lds}; shape is conjugate(rsk_shape(perm)).
Json mcmc_record(const Permutation& perm);

}  // namespace qpart::io
