#pragma once

#include "liestruct.hpp"

namespace dk {

enum class ModuleKind { FiniteIrreducible, TruncatedVerma };

/// Highest-weight g-module with exact action matrices. Truncated kind: the
/// quotient of the Verma module by its Shapovalov radical, cut off at root
/// height `depth`; lowering from the boundary is unreliable and flagged.
struct WeightModule {
  LieAlgebra g;
  Vec lambda;  // simple-root coordinates
  ModuleKind kind = ModuleKind::TruncatedVerma;
  int depth = 0;

  std::vector<Vec> weights;  // ambient weight of each basis vector
  std::vector<int> depthOf;  // root height of lambda - weight
  std::vector<Matrix> action;  // one matrix per g basis element
  std::vector<std::vector<char>> leaky;  // leaky[gIdx][basisIdx]

  int dim() const { return static_cast<int>(weights.size()); }
  /// Action of a g element; throws DepthLeak when the result would depend on
  /// truncated vectors.
  Vec act(const Vec& x, const Vec& v) const;
  /// Full matrix of a g element; throws DepthLeak if any column is unreliable.
  Matrix actionMatrix(const Vec& x) const;
  bool anyLeak(const Vec& x, const Vec& v) const;
};

/// Weyl dimension formula value; throws NotDominantIntegral.
Int weylDimension(const RootSystem& rs, const Vec& lambda);

WeightModule buildIrrep(const LieAlgebra& g, const Vec& lambda, const Int& dimCap = Int(5000));
WeightModule buildTruncatedVerma(const LieAlgebra& g, const Vec& lambda, int depth);

/// Dimension of the irreducible r-module with the given dominant highest
/// weight (values on hrBasis).
Int weylDimensionSub(const LiePair& pair, const Vec& mu);

struct RModuleDecomposition {
  std::vector<std::pair<Vec, int>> constituents;  // (highest weight on h_r, multiplicity)
  std::vector<Vec> highestVectors;                // in the ambient space coordinates
};

/// Decomposes a space with commuting exact h_r and n_r actions into
/// irreducible r-constituents. `candidateWeights` must cover every h_r-weight
/// occurring in the space (callers derive it from the ambient weight set);
/// throws NotSemisimpleAction when eigenspaces or dimensions fail to add up.
RModuleDecomposition decomposeUnderR(const LiePair& pair, int dim, const std::vector<Matrix>& hrAct,
                                     const std::vector<Matrix>& nrAct,
                                     const std::vector<Vec>& candidateWeights);

}  // namespace dk
