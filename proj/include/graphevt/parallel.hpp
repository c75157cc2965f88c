#pragma once

#include <cstddef>
#include <functional>

namespace graphevt {

/// Number of worker threads to use. `requested` = 0 means one per hardware
/// thread. The GRAPHEVT_WORKERS environment variable, when set to a
/// positive integer, caps the result.
unsigned resolve_workers(unsigned requested);

/// Runs body(i) for i in [0, count) on up to `workers` threads (0 = auto).
/// Each index runs exactly once; callers write results into per-index slots
/// so output order never depends on scheduling. The first exception thrown
/// by any body is rethrown after all threads join.
void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& body);

} // namespace graphevt
