// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0

#include "lta/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lta {

void set_max_threads(int n) {
  if (n < 1) n = 1;
#ifdef _OPENMP
  omp_set_num_threads(n);
#else
  (void)n;
#endif
}

int get_max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace lta
