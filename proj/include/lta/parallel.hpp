// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace lta {

// thread budget for the parallel kernels; 1 forces serial execution
void set_max_threads(int n);
int get_max_threads();
bool openmp_enabled();

}  // namespace lta
