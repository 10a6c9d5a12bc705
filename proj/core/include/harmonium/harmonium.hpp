#pragma once

// Umbrella header for the whole library.

#include "harmonium/annealing.hpp"
#include "harmonium/bounds.hpp"
#include "harmonium/experiment.hpp"
#include "harmonium/firefly.hpp"
#include "harmonium/genetic.hpp"
#include "harmonium/harmony_search.hpp"
#include "harmonium/music.hpp"
#include "harmonium/objective.hpp"
#include "harmonium/objectives.hpp"
#include "harmonium/rng.hpp"
#include "harmonium/run.hpp"
#include "harmonium/selftest.hpp"
#include "harmonium/swarm.hpp"
#include "harmonium/text.hpp"
#include "harmonium/trace.hpp"
