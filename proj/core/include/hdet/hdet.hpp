#pragma once

#include "hdet/errors.hpp"
#include "hdet/invariants.hpp"
#include "hdet/models.hpp"
#include "hdet/poly.hpp"
#include "hdet/random.hpp"
#include "hdet/spectra.hpp"
#include "hdet/states.hpp"
#include "hdet/thermal.hpp"
#include "hdet/types.hpp"
