#ifndef MCSDAL_MCSDAL_HPP_
#define MCSDAL_MCSDAL_HPP_

#include "mcsdal/graph.hpp"
#include "mcsdal/environment.hpp"
#include "mcsdal/policy.hpp"
#include "mcsdal/solver.hpp"
#include "mcsdal/oracle.hpp"
#include "mcsdal/verify.hpp"
#include "mcsdal/bench.hpp"

#endif  // MCSDAL_MCSDAL_HPP_
