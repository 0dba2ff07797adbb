#pragma once

#include <cstddef>
#include <functional>

namespace conga {

// Runs body(0) .. body(count-1) on up to n_workers threads. The body must
// be safe to call concurrently for distinct indices; iteration order is
// unspecified. The first exception thrown by any body is rethrown here.
void parallel_for(std::size_t count, int n_workers,
                  const std::function<void(std::size_t)>& body);

}  // namespace conga
