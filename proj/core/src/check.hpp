#pragma once

#include <stdexcept>
#include <string>

// Invariant check that survives NDEBUG: these guard mathematical
// postconditions the rest of the pipeline relies on, so they must fire in
// release builds too.
#define LSKETCH_CHECK(cond, msg)                                  \
  do {                                                            \
    if (!(cond)) throw std::logic_error(std::string("invariant violated: ") + (msg)); \
  } while (0)
