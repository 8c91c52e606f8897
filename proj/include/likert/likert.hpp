#pragma once

// Umbrella header for the likert reliability toolkit.

#include "likert/error.hpp"
#include "likert/response_matrix.hpp"
#include "likert/classical.hpp"
#include "likert/distributions.hpp"
#include "likert/info_measures.hpp"
#include "likert/icr.hpp"
#include "likert/simulation.hpp"
