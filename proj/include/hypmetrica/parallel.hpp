#pragma once

#include <cstddef>
#include <functional>

namespace hm {

// worker count: hardware concurrency capped by HYPMETRICA_THREADS
unsigned thread_count();

// runs body(i) for i in [0,n); exceptions from workers are rethrown on the caller
void parallel_for(size_t n, const std::function<void(size_t)>& body);

}  // namespace hm
