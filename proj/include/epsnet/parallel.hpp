#pragma once

#include <cstddef>
#include <functional>

namespace epsnet {

// Worker count from EPSNET_THREADS, defaulting to the hardware concurrency.
unsigned worker_count();

// Runs fn(shard) for every shard in [0, shards). Shards are claimed
// dynamically; callers store results per shard so merging is order-stable.
void parallel_for(std::size_t shards, const std::function<void(std::size_t)>& fn, unsigned workers = 0);

}  // namespace epsnet
