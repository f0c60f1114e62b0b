#pragma once

#include "news/dedup.hpp"

namespace news::dedup {

// Serial O(n^2) reference implementation of the duplicate partition. Every
// pair is scored directly, no bucketing, no parallelism. Kept as the
// ground-truth oracle for the bucketed implementation and as the baseline
// side of the benchmark.
DedupOutcome dedup_merge_serial(const std::vector<DedupItem>& items,
                                double threshold);

} // namespace news::dedup
