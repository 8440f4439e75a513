#pragma once

#include <cstdint>
#include <map>

#include "liestruct.hpp"

namespace dk {

/// Element of the Clifford algebra over p, stored on the exterior-monomial
/// basis. A monomial is a bitmask over the ordered p-basis; set bits are
/// wedged in increasing index order.
struct CliffordElement {
  std::map<uint64_t, Rat> terms;

  static CliffordElement one() { return monomial(0, Rat(1)); }
  static CliffordElement monomial(uint64_t mask, const Rat& c);

  void add(uint64_t mask, const Rat& c);
  bool isZero() const { return terms.empty(); }
  CliffordElement operator+(const CliffordElement& o) const;
  CliffordElement operator-(const CliffordElement& o) const;
  CliffordElement scaled(const Rat& c) const;
  bool operator==(const CliffordElement& o) const { return terms == o.terms; }
  int maxDegree() const;
};

/// Clifford/exterior arithmetic bound to the p-basis of one pair, with
/// zw + wz = 2B(z,w).
class CliffordAlgebra {
 public:
  explicit CliffordAlgebra(const LiePair& pair);

  const LiePair& pair() const { return *pair_; }
  int dim() const { return dim_; }
  const Matrix& gram() const { return gram_; }

  /// Degree-1 element from a g-vector lying in p.
  CliffordElement fromPVector(const Vec& gElement) const;

  CliffordElement wedge(const CliffordElement& a, const CliffordElement& b) const;
  CliffordElement product(const CliffordElement& a, const CliffordElement& b) const;
  /// Interior product against the functional B(v_i, .).
  CliffordElement contractBasis(int i, uint64_t mask) const;
  Rat gramPairing(const CliffordElement& a, const CliffordElement& b) const;

 private:
  CliffordElement vectorTimes(int i, const CliffordElement& x) const;
  CliffordElement monomialTimes(uint64_t mask, const CliffordElement& x) const;

  const LiePair* pair_;
  int dim_;
  Matrix gram_;
};

struct CubicTerm {
  CliffordElement v, v0, v1;  // v = v0 + v1; v0 has all factors in p^0
};

/// Degree-3 element with ([x,x'],x'') = -2 (v, x^x'^x'') on p.
CubicTerm cubicTerm(const CliffordAlgebra& ca);

/// Degree-2 element implementing ad x on p by Clifford commutator; x must
/// lie in r.
CliffordElement nuStar(const CliffordAlgebra& ca, const Vec& x);

/// Half sum of phi(y) e_phi ^ e_{-phi} over the positive zero-restriction
/// roots; y must lie in h_p.
CliffordElement sigmaStar(const CliffordAlgebra& ca, const Vec& y);

/// Left ideal C(p)u with u the wedge of the m_p block. Basis monomials are
/// labeled by subsets of the h_p and m_p^- blocks.
struct SpinIdeal {
  uint64_t uMask = 0;
  std::vector<uint64_t> labels;          // bitmasks over h_p and m_p^- indices
  std::map<uint64_t, int> labelIndex;
  std::vector<CliffordElement> phi;      // phi[t] = monomial(labels[t]) * u
  std::vector<Rat> leadingSign;          // coefficient of labels[t] | uMask in phi[t]
  std::vector<Vec> weights;              // h_r-weight of each basis vector

  int dimL() const { return static_cast<int>(labels.size()); }
};

SpinIdeal buildSpinIdeal(const CliffordAlgebra& ca);

/// Coordinates over the ideal basis of an element of L given in exterior
/// coordinates; throws if the element is not in L.
Vec reduceInIdeal(const CliffordAlgebra& ca, const SpinIdeal& ideal, CliffordElement w);

/// Matrix of left Clifford multiplication by `a` on the ideal basis.
Matrix leftActionMatrix(const CliffordAlgebra& ca, const SpinIdeal& ideal, const CliffordElement& a);

}  // namespace dk
