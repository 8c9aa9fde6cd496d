#pragma once

#include <functional>

namespace quatkrylov {

/// Worker count from QUATKRYLOV_THREADS, default 1. Values below 1 are treated as 1.
int thread_count();

/// Runs fn(0..3), one call per quaternion component, on up to thread_count() threads.
void for_each_part(const std::function<void(int)>& fn);

}  // namespace quatkrylov
