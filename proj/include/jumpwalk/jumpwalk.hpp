#pragma once

// Reflected random walk with an arbitrary finite jump law at the origin:
// exact, asymptotic and stochastic routes to the expected position, plus
// the spectral picture behind the asymptotics.

#include "jumpwalk/asymptotics.hpp"
#include "jumpwalk/dp_engine.hpp"
#include "jumpwalk/error.hpp"
#include "jumpwalk/jump_model.hpp"
#include "jumpwalk/montecarlo.hpp"
#include "jumpwalk/polynomial.hpp"
#include "jumpwalk/rational.hpp"
#include "jumpwalk/run_config.hpp"
#include "jumpwalk/series.hpp"
#include "jumpwalk/series_engine.hpp"
#include "jumpwalk/spectral.hpp"
