#pragma once

// Umbrella header for the dualphase toolkit.

#include "dualphase/ammonia.hpp"
#include "dualphase/constants.hpp"
#include "dualphase/em_sources.hpp"
#include "dualphase/errors.hpp"
#include "dualphase/hydrogen.hpp"
#include "dualphase/io.hpp"
#include "dualphase/lorentz.hpp"
#include "dualphase/path.hpp"
#include "dualphase/phases.hpp"
#include "dualphase/selfcheck.hpp"
#include "dualphase/vec3.hpp"
