#pragma once

namespace braidforge {

// Worker count for level-parallel loops: BRAIDFORGE_THREADS, clamped to the
// hardware concurrency, defaulting to 1 when unset or malformed.
int parallel_workers();

}  // namespace braidforge
