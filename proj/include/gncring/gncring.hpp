#pragma once

/**
 * @file gncring.hpp
 * @brief Umbrella header for the finite-ring library.
 */

#include "gncring/cayley_json.hpp"
#include "gncring/classifiers.hpp"
#include "gncring/constructions.hpp"
#include "gncring/errors.hpp"
#include "gncring/expr.hpp"
#include "gncring/finite_ring.hpp"
#include "gncring/group.hpp"
#include "gncring/harness.hpp"
#include "gncring/index_set.hpp"
#include "gncring/report.hpp"
#include "gncring/validate.hpp"
