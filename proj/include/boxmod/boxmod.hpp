#pragma once

// Umbrella header.

#include "boxmod/betti_table.hpp"
#include "boxmod/box_module.hpp"
#include "boxmod/checks.hpp"
#include "boxmod/classify.hpp"
#include "boxmod/exponent_vector.hpp"
#include "boxmod/ext.hpp"
#include "boxmod/functors.hpp"
#include "boxmod/io.hpp"
#include "boxmod/koszul.hpp"
#include "boxmod/matrix.hpp"
#include "boxmod/module_invariants.hpp"
#include "boxmod/monomial_ideal.hpp"
#include "boxmod/monomial_matrix.hpp"
#include "boxmod/random_instances.hpp"
#include "boxmod/resolution.hpp"
#include "boxmod/scalar.hpp"
#include "boxmod/subspace.hpp"
