#pragma once

// Umbrella header for the whole library.  Individual headers can be included
// on their own; serialize.hpp is kept out because it pulls in a JSON
// dependency that pure computation does not need.

#include "convsum/convolution.hpp"
#include "convsum/divisors.hpp"
#include "convsum/eisenstein.hpp"
#include "convsum/errors.hpp"
#include "convsum/eta.hpp"
#include "convsum/identities.hpp"
#include "convsum/qseries.hpp"
#include "convsum/rational.hpp"
