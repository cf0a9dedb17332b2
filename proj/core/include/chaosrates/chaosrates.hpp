#pragma once

// Umbrella header.
#include "chaosrates/coherent_model.hpp"
#include "chaosrates/finite_dim.hpp"
#include "chaosrates/incoherent_model.hpp"
#include "chaosrates/model_io.hpp"
#include "chaosrates/polynomial.hpp"
#include "chaosrates/polynomial_pricer.hpp"
#include "chaosrates/simulation_oracle.hpp"
#include "chaosrates/special_functions.hpp"
#include "chaosrates/structure_function.hpp"
