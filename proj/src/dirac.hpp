#pragma once

#include <memory>

#include "clifford.hpp"
#include "repmod.hpp"

namespace dk {

/// The assembled operator on V (x) L. Tensor coordinates are
/// t = moduleIndex * dimL + idealIndex. Vector-level application works on
/// truncated modules and throws DepthLeak at the boundary; full matrices are
/// available once no column leaks.
class DiracComplex {
 public:
  DiracComplex(const LiePair& pair, const WeightModule& module);
  DiracComplex(const DiracComplex&) = delete;
  DiracComplex& operator=(const DiracComplex&) = delete;

  const LiePair& pair() const { return pair_; }
  const WeightModule& module() const { return module_; }
  const CliffordAlgebra& cliff() const { return *ca_; }
  const SpinIdeal& ideal() const { return ideal_; }
  const CubicTerm& cubic() const { return cubic_; }
  int dimL() const { return ideal_.dimL(); }
  int dim() const { return module_.dim() * ideal_.dimL(); }

  Vec applyDprime(const Vec& x) const;
  Vec applyDcubic(const Vec& x) const;
  Vec applyD(const Vec& x) const;
  /// zeta(y) = y (x) 1 + 1 (x) nuStar(y) for y in r.
  Vec applyZeta(const Vec& y, const Vec& x) const;

  Matrix matrixDprime() const;
  Matrix matrixDcubic() const;
  Matrix matrixD() const;
  Matrix matrixZeta(const Vec& y) const;
  Matrix matrixZetaCasR() const;
  /// xi(Cas_g (x) 1).
  Matrix matrixCasG() const;

  /// Diagonal h_r-weight of tensor basis vector t, as values on hrBasis.
  Vec diagonalWeight(int t) const;

 private:
  Matrix moduleActionTensor(const Vec& gElem) const;  // act on V, identity on L

  LiePair pair_;
  WeightModule module_;
  std::unique_ptr<CliffordAlgebra> ca_;
  SpinIdeal ideal_;
  CubicTerm cubic_;
  std::vector<Matrix> cliffDual_;  // left action of d_i on L
  Matrix cliffV_, cliffV0_, cliffV1_;
  std::vector<Vec> rDual_;  // dual basis of r under B
};

/// Casimir action matrix on a module: sum of dual-basis action products.
Matrix casimirMatrix(const WeightModule& module);
/// Harish-Chandra scalar of Cas_g on a highest weight module.
Rat casimirScalar(const RootSystem& rs, const Vec& lambda);

struct SquareIdentityReport {
  Rat scalar;     // the constant in D^2 = CasG - zeta(CasR) + scalar
  Rat predicted;  // (rho, rho) - (rho_r, rho_r)
  bool match = false;
};
SquareIdentityReport verifySquareIdentity(const DiracComplex& cx);

struct CocycleReport {
  bool primePart = false;   // xi(square-prime) acts by y_lambda
  bool zeroPart = false;    // 1 (x) v0 acts by y_{rho0}
  bool onePart = false;     // v1 a u = y_{rho1} a u in L
  bool total = false;       // xi(square) acts by y_{lambda+rho}
  bool forcedZero = false;  // (lambda+rho)|h_p = 0
  bool vanishes = false;    // xi(square)(v_lambda (x) a u) = 0
};
/// `aMask`: exterior monomial over the h_p block of the p-basis.
CocycleReport cocycleCheck(const DiracComplex& cx, uint64_t aMask);

struct DiracCohomology {
  std::vector<Vec> kernel;
  std::vector<Vec> kernelCapImage;
  std::vector<Vec> representatives;  // complement of kernelCapImage inside the kernel
  int dim = 0;
  bool kerEqualsKerSquare = false;
  RModuleDecomposition rStructure;
};
DiracCohomology diracCohomology(const DiracComplex& cx);

struct MultipletReport {
  std::vector<std::pair<Vec, int>> cohomologySide;  // (h_r highest weight, multiplicity)
  std::vector<std::pair<Vec, int>> cosetSide;       // via the transversal dot action
  size_t eulerNumber = 0;
  bool match = false;
  bool multiplicityFree = false;
  bool kerEqualsKerSquare = false;
};
MultipletReport multipletCheck(const LiePair& pair, const Vec& lambda, const Int& dimCap = Int(5000));

struct NonvanishingReport {
  bool lambdaAdmissible = false;  // (lambda+rho)|h_p = 0
  bool kernelPart = false;        // v_lambda (x) C(h_p)u inside Ker xi(square)
  bool stable = false;            // xi(square) maps checked M basis vectors into M
  int checkedDepth = 0;           // depth up to which stability was verified
  int skippedLeaks = 0;           // boundary vectors left inconclusive
  Int dimE = 0;                   // 2^{dim h_p}
};
NonvanishingReport nonvanishingCheck(const LiePair& pair, const Vec& lambda, int depth);

struct HarishChandraSample {
  Vec nu;  // ambient weight with zero h_p restriction, simple-root coordinates
  Rat ambientScalar, subScalar;
  bool match = false;
};
struct HarishChandraReport {
  std::vector<HarishChandraSample> samples;
  Rat shift;  // eta_r(Cas_g) = Cas_r + shift
  bool allMatch = false;
};
HarishChandraReport harishChandraDiagram(const LiePair& pair, int minSamples);

/// xi(Cas_g (x) 1) = zeta(Cas_r) + shift on cohomology representatives.
bool hcOperatorIdentity(const DiracComplex& cx, const DiracCohomology& coh);

}  // namespace dk
