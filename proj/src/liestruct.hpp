#pragma once

#include "rootdata.hpp"

namespace dk {

/// Semisimple Lie algebra in a Chevalley-type basis. Elements are coefficient
/// vectors over the basis {h_1..h_n, e_root[0], e_root[1], ...} where h_i is
/// the i-th simple coroot and the root vectors follow the RootSystem order.
/// Root vectors are scaled so that B(e_phi, e_{-phi}) = 1, where B is the
/// invariant form restricting to the long-root-2 normalized form on h*.
struct LieAlgebra {
  RootSystem rs;
  Matrix structConsts;  // structConsts(i, j) = coefficient in [e_i, e_j] = N e_{i+j}

  int rank() const { return rs.rank(); }
  int numRoots() const { return static_cast<int>(rs.roots.size()); }
  int dim() const { return rank() + numRoots(); }
  int eIndex(int rootIdx) const { return rank() + rootIdx; }

  Vec basisH(int i) const;
  Vec basisE(int rootIdx) const;

  Vec bracket(const Vec& x, const Vec& y) const;
  Rat form(const Vec& x, const Vec& y) const;  // the invariant form B
  Matrix formMatrix() const;

  /// t_nu in coroot coordinates (length rank): (x, t_nu) = nu(x) for x in h.
  Vec cartanElementFor(const Vec& weight) const;
  /// nu(x) for x in h given by coroot coordinates.
  Rat evalWeight(const Vec& weight, const Vec& hCoords) const;
  /// Embeds coroot coordinates into a full g-coefficient vector.
  Vec embedH(const Vec& hCoords) const;
  /// First `rank` coefficients.
  Vec hPart(const Vec& x) const;

  Matrix adjointMatrix(const Vec& x) const;
};

LieAlgebra buildLieAlgebra(const RootSystem& rs);

enum class SubalgebraKind { Full, Zero, Levi, Subsystem, Explicit };

struct SubalgebraSpec {
  SubalgebraKind kind = SubalgebraKind::Full;
  std::vector<int> leviSimple;       // Levi: indices of simple roots kept
  std::vector<Vec> subsystemSimple;  // Subsystem: simple roots in ambient simple-root coords
  std::vector<Vec> basis;            // Explicit: spanning vectors in g coefficients
};

/// Reductive pair g = r (+) p with the block-ordered dual bases of p.
/// Functionals on h_r are stored as value vectors over hrBasis.
struct LiePair {
  LieAlgebra g;
  SubalgebraSpec spec;

  std::vector<Vec> rBasis;   // g coefficients
  std::vector<Vec> hrBasis;  // inside h
  std::vector<Vec> hpBasis;
  Matrix hrGram, hrGramInv;  // B restricted to h_r (empty when h_r = 0)
  Matrix hpGram, hpGramInv;

  // p basis blocks, in order:
  //   [0, dimHp)                          h_p block, duals via hpGramInv
  //   [dimHp, dimHp + z)                  e_phi, phi in delta0Plus
  //   [dimHp + z, dimHp + 2z)             e_{-phi}, aligned
  //   [dimHp + 2z, dimHp + 2z + q)        basis of p^+ grouped by mu in gammaPlus
  //   [dimHp + 2z + q, dimP)              dual basis of p^-, aligned with p^+
  std::vector<Vec> pBasis;  // b_i
  std::vector<Vec> pDual;   // d_i with B(b_i, d_j) = delta_ij
  int dimHp = 0;
  std::vector<int> delta0Plus;  // positive-root indices with zero restriction to h_r
  int dimPplus = 0;
  std::vector<Vec> gammaOfB;  // h_r-weight of each b_i (values on hrBasis)
  std::vector<Vec> gammaPlus; // weight of each p^+ basis element, in block order

  Vec fR;    // generic element of h_r, coroot coordinates
  Vec fReg;  // regular dominant element of h, coroot coordinates

  // r as a root system on h_r (weights of r with nonzero restriction)
  std::vector<Vec> rRootsPlus;     // positive r-roots as h_r-functionals
  std::vector<Vec> nrBasis;        // basis of n_r = n cap r, g coefficients
  std::vector<int> subRootIdx;     // ambient root indices of r (root-type subalgebras only)
  bool rootType = false;           // true when r is spanned by h_r and ambient root vectors
  bool equalRank = false;

  Vec rho0, rho1, rho2;  // ambient weights, simple-root coordinates
  Vec rhoP, rhoR;        // h_r-functionals
  Vec rhoRAmbient;       // root-type pairs: half sum of positive r-roots in ambient coords

  int dimP() const { return static_cast<int>(pBasis.size()); }
  int dimHr() const { return static_cast<int>(hrBasis.size()); }

  /// Index ranges of the m_p = n0 + p^+ and m_p^- = n0_- + p^- blocks of pBasis.
  std::vector<int> mPlusIndices() const;
  std::vector<int> mMinusIndices() const;

  /// Coordinates of w (a g element lying in p) over pBasis, via B-pairing
  /// with the dual basis.
  Vec pCoordinates(const Vec& w) const;

  /// Values of an ambient weight on hrBasis.
  Vec restrictToHr(const Vec& weight) const;
  /// Inner product on h_r* induced by B.
  Rat hrInner(const Vec& a, const Vec& b) const;
  /// mu(x) for an h_r-functional mu and x given in hrBasis coordinates.
  Rat evalHrFunctional(const Vec& mu, const Vec& hrCoords) const;
};

LiePair buildPair(const LieAlgebra& g, const SubalgebraSpec& spec);

struct CartanVector {
  Vec zNu, xNu, yNu;  // coroot coordinates; zNu = xNu + yNu, xNu in h_r, yNu in h_p
};

CartanVector cartanVector(const LiePair& pair, const Vec& nu);

}  // namespace dk
