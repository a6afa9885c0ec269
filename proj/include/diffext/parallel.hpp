#pragma once

#include <cstddef>
#include <functional>

namespace diffext::par {

// Runtime switch: when disabled (or when built without OpenMP) every sweep
// runs on the calling thread. Results must not depend on the setting; the
// test suite compares both paths.
bool enabled();
void set_enabled(bool on);
int worker_count();

// Apply body to every index in [0, count). Bodies write only to their own
// index slot; ordering across indices is unspecified.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace diffext::par
