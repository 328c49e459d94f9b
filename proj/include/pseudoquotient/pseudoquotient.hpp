// Umbrella header.

#ifndef PSEUDOQUOTIENT_PSEUDOQUOTIENT_HPP_
#define PSEUDOQUOTIENT_PSEUDOQUOTIENT_HPP_

#include "affine_lattice.hpp"
#include "core.hpp"
#include "dyadic_steps.hpp"
#include "exact.hpp"
#include "grammar.hpp"
#include "power_affine.hpp"
#include "presets.hpp"
#include "tower.hpp"
#include "verifier.hpp"

#endif  // PSEUDOQUOTIENT_PSEUDOQUOTIENT_HPP_
