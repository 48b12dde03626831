#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace deltak {

/// Worker count: DELTAK_JOBS if set, else the hardware concurrency.
int default_jobs();

/// Runs body(worker, begin, end) over contiguous chunks of [0, count) on
/// `jobs` threads and waits. Exceptions from workers are rethrown (the
/// first one by worker index).
void parallel_chunks(std::uint64_t count, int jobs,
                     const std::function<void(int worker, std::uint64_t begin, std::uint64_t end)>& body);

}  // namespace deltak
