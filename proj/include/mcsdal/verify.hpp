#ifndef MCSDAL_VERIFY_HPP_
#define MCSDAL_VERIFY_HPP_

#include "mcsdal/oracle.hpp"
#include "mcsdal/solver.hpp"

namespace mcsdal {

/// Solver and brute-force oracle report the same optimum size.
inline bool oracle_agrees(const Graph& gp, const Graph& gt, const SolverConfig& cfg = {}) {
  return solve(gp, gt, cfg).size == brute_force_mcs(gp, gt).size;
}

}  // namespace mcsdal

#endif  // MCSDAL_VERIFY_HPP_
