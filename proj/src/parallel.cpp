#include "cwsurgery/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <string>

namespace cwsurgery {

int worker_count() {
  int workers = omp_get_max_threads();
  if (const char* cap = std::getenv("CW_SURGERY_THREADS")) {
    try {
      const int requested = std::stoi(cap);
      if (requested > 0) workers = std::min(workers, requested);
    } catch (const std::exception&) {
      // Unparseable values leave the OpenMP default in place.
    }
  }
  return std::max(workers, 1);
}

}  // namespace cwsurgery
