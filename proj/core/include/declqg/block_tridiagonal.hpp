#pragma once

#include <vector>

#include "declqg/linalg.hpp"

namespace declqg {

/// Block-tridiagonal linear system with identity diagonal blocks,
///
///   [ I    H[0]              ] [eta_0    ]   [c[0]  ]
///   [ G[0] I     H[1]        ] [eta_1    ] = [c[1]  ]
///   [       ...   ...        ] [  ...    ]   [ ...  ]
///   [         G[T-2]   I     ] [eta_{T-1}]   [c[T-1]]
///
/// where each block is 2q x 2q and the unknown eta_t stacks
/// (vec(Phat21_t), vec(Sigmahat21_{t+1})).
struct BoundarySystem {
  int q = 0;               // size of one vectorized 21-block
  std::vector<Matrix> G;   // T-1 sub-diagonal blocks; G[i] sits in row i+1
  std::vector<Matrix> H;   // T-1 super-diagonal blocks; H[i] sits in row i
  std::vector<Vector> c;   // T right-hand-side blocks

  int horizon() const { return static_cast<int>(c.size()); }
  int block_size() const { return 2 * q; }
};

/// Solves the system by block-tridiagonal LU (forward elimination, then
/// back substitution); O(T q^3) work. Throws PivotFailure with the block
/// index if a diagonal pivot block is numerically singular.
std::vector<Vector> solve_block_tridiagonal(const BoundarySystem& system);

/// Relative residual ||M eta - c|| / (1 + ||c||) over the whole system.
double block_tridiagonal_residual(const BoundarySystem& system,
                                  const std::vector<Vector>& eta);

}  // namespace declqg
