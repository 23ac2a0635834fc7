#pragma once

#include <functional>

namespace sft {

/// Worker count for row/blade-parallel loops; 0 restores the hardware
/// default. Results are independent of the setting: every loop index owns
/// disjoint output and runs its summations in a fixed order.
void set_num_threads(int n);
int num_threads();

void parallel_for(int begin, int end, const std::function<void(int)>& body);

}  // namespace sft
