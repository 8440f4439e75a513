#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ratlin.hpp"
#include "rational.hpp"

namespace dk {

/// Finite-type Cartan matrix, possibly a direct sum of several simple blocks
/// (labels like "A2", "F4", "A1xA1").
struct CartanMatrix {
  std::string label;
  std::vector<std::vector<int>> entries;
  int rank() const { return static_cast<int>(entries.size()); }
  /// Throws NotFiniteType unless the matrix is a valid finite-type Cartan
  /// matrix (diagonal 2, nonpositive off-diagonal entries with symmetric
  /// vanishing, positive-definite symmetrization).
  void validate() const;
};

CartanMatrix cartanMatrixFromLabel(const std::string& label);

/// Roots live in simple-root coordinates; weights are arbitrary rational
/// vectors in the same coordinates. The inner form is normalized so long
/// roots have squared length 2.
struct RootSystem {
  CartanMatrix cm;
  std::vector<Vec> roots;      // positives first (height-then-lex), then negatives aligned
  int numPositive = 0;         // roots[i + numPositive] == -roots[i] for i < numPositive
  Vec rho;                     // half sum of positive roots
  Matrix innerForm;            // G(i,j) = (alpha_i, alpha_j)

  int rank() const { return cm.rank(); }
  bool isPositiveIndex(int idx) const { return idx < numPositive; }
  int negationOf(int idx) const { return idx < numPositive ? idx + numPositive : idx - numPositive; }

  Rat inner(const Vec& a, const Vec& b) const;
  Rat rootLengthSq(int idx) const { return inner(roots[idx], roots[idx]); }
  /// <lam, beta^vee> = 2 (lam, beta) / (beta, beta)
  Rat pairCoroot(const Vec& lam, const Vec& beta) const;
  int heightOf(const Vec& root) const;
  int indexOfRoot(const Vec& v) const;  // -1 if not a root

  Vec simpleFromFundamental(const Vec& fw) const;
  Vec fundamentalFromSimple(const Vec& sr) const;

  bool isDominantIntegral(const Vec& lam) const;
  /// Applies the simple reflection s_i to a weight in simple-root coordinates.
  Vec simpleReflection(int i, const Vec& w) const;
  /// Antidominant representative of the Weyl orbit of a weight.
  Vec antidominant(Vec w) const;
};

RootSystem buildRootSystem(const CartanMatrix& cm);

struct WeylElement {
  std::vector<int> perm;  // image index of each root
  std::vector<int> word;  // reduced word in simple reflections
  int length() const { return static_cast<int>(word.size()); }
};

struct WeylGroup {
  RootSystem rs;
  std::vector<WeylElement> elements;  // sorted by (length, word lex); [0] = identity

  size_t order() const { return elements.size(); }
  int compose(int a, int b) const;  // index of elements[a]*elements[b]
  int inverseOf(int a) const;
  Vec applyToWeight(int a, const Vec& w) const;
  int findByPerm(const std::vector<int>& perm) const;
};

WeylGroup buildWeylGroup(const RootSystem& rs, size_t orderCap = 2000000);

struct CosetSystem {
  std::vector<int> subRoots;       // indices into rs.roots, negation-closed
  std::vector<int> subPositive;    // subRoots that are positive
  std::vector<int> transversal;    // element indices, minimal-length representatives
  size_t eulerNumber = 0;
};

/// Minimal-length right-coset representatives of the reflection subgroup
/// generated by `subRootIdx`: tau with tau^{-1}(positive subsystem roots)
/// all positive.
CosetSystem cosetTransversal(const WeylGroup& w, const std::vector<int>& subRootIdx);

/// tau(lambda + rho) - rhoSub, all weights in simple-root coordinates.
Vec dotAction(const WeylGroup& w, int tau, const Vec& lambda, const Vec& rhoSub);

}  // namespace dk
