#pragma once

// Umbrella header for the whole library.

#include "bench.hpp"    // IWYU pragma: export
#include "circuit.hpp"  // IWYU pragma: export
#include "gf2.hpp"      // IWYU pragma: export
#include "synth.hpp"    // IWYU pragma: export
