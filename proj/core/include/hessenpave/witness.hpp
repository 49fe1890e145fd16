#pragma once

#include <vector>

#include "hessenpave/adjoint.hpp"
#include "hessenpave/hessenberg.hpp"
#include "hessenpave/weyl_group.hpp"

namespace hessenpave {

/// A point u B of the cell with Ad(u)(N) ∈ Ad w(H), built stage by stage.
///
/// Types A, B, C: stage i solves for X_i ∈ n_i ∩ n_w. Type D: stage i pairs
/// part 0 of row i with parts 1 and 2 of row i+1 (row 0 is empty). Stages
/// are solved from the last to the first; u is the product of the stage
/// exponentials in stage order.
struct WitnessResult {
  std::vector<NilpotentElement> stage_solutions;
  std::vector<int> stage_kernel_dims;
  /// Ad(u)(N), recomputed with matrices.
  NilpotentElement conjugated;
  bool verified = false;
};

/// Throws ValidationError if N is not regular or the cell is empty, and
/// ConsistencyError if a stage has no solution or the final check fails.
WitnessResult find_witness(const ChevalleyRealization& real, const WeylElement& w, const HessenbergSpace& space,
                           const NilpotentElement& n);

}  // namespace hessenpave
