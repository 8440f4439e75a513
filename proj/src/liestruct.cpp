#include "liestruct.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dk {

namespace {

// Structure constants N(a,b) for the standard Chevalley basis, with the sign
// of each extraspecial pair fixed positive. Indices refer to rs.roots.
class ChevalleyTable {
 public:
  explicit ChevalleyTable(const RootSystem& rs)
      : rs_(rs), npp_(rs.numPositive, rs.numPositive) {
    for (int c = 0; c < rs_.numPositive; ++c) {
      if (rs_.heightOf(rs_.roots[c]) == 1) continue;
      // extraspecial pair: least phi1 with c - phi1 a positive root
      int phi1 = -1, psi1 = -1;
      for (int a = 0; a < rs_.numPositive; ++a) {
        int b = rs_.indexOfRoot(subVec(rs_.roots[c], rs_.roots[a]));
        if (b >= 0 && rs_.isPositiveIndex(b)) {
          phi1 = a;
          psi1 = b;
          break;
        }
      }
      if (phi1 < 0) throw Error("InternalInconsistency", "non-simple root with no decomposition");
      npp_.at(phi1, psi1) = stringDown(psi1, phi1) + 1;
      npp_.at(psi1, phi1) = -npp_.at(phi1, psi1);
      Rat nPhi1c = n(rs_.negationOf(phi1), c);
      for (int a = phi1 + 1; a < rs_.numPositive; ++a) {
        int b = rs_.indexOfRoot(subVec(rs_.roots[c], rs_.roots[a]));
        if (b < 0 || !rs_.isPositiveIndex(b) || b <= a) continue;
        Rat val = term(rs_.negationOf(phi1), a, b) - term(rs_.negationOf(phi1), b, a);
        npp_.at(a, b) = val / nPhi1c;
        npp_.at(b, a) = -npp_.at(a, b);
      }
    }
  }

  /// N(a,b) with [e_a, e_b] = N(a,b) e_{a+b}; zero when the sum is not a root.
  Rat n(int a, int b) const {
    int c = rs_.indexOfRoot(addVec(rs_.roots[a], rs_.roots[b]));
    if (c < 0) return Rat(0);
    bool pa = rs_.isPositiveIndex(a), pb = rs_.isPositiveIndex(b);
    if (pa && pb) return npp_.at(a, b);
    if (!pa && !pb) return -npp_.at(rs_.negationOf(a), rs_.negationOf(b));
    if (!pa) return -n(b, a);
    // a positive, b negative; use the rotation identity for a + b + (-c) = 0
    if (rs_.isPositiveIndex(c))
      return -rs_.rootLengthSq(c) / rs_.rootLengthSq(a) * npp_.at(rs_.negationOf(b), c);
    return -rs_.rootLengthSq(c) / rs_.rootLengthSq(b) * npp_.at(a, rs_.negationOf(c));
  }

 private:
  int stringDown(int root, int step) const {
    int p = 0;
    Vec cur = rs_.roots[root];
    while (true) {
      cur = subVec(cur, rs_.roots[step]);
      if (rs_.indexOfRoot(cur) < 0) break;
      ++p;
    }
    return p;
  }

  Rat term(int x, int first, int second) const {
    // N(x, first) * N(x+first, second) when x+first is a root, else 0
    int mid = rs_.indexOfRoot(addVec(rs_.roots[x], rs_.roots[first]));
    if (mid < 0) return Rat(0);
    return n(x, first) * n(mid, second);
  }

  const RootSystem& rs_;
  Matrix npp_;
};

}  // namespace

LieAlgebra buildLieAlgebra(const RootSystem& rs) {
  LieAlgebra g;
  g.rs = rs;
  int m = g.numRoots();
  ChevalleyTable tbl(rs);
  // rescale: e~_phi = e_phi for positive phi, ((phi,phi)/2) e_phi for negative
  auto s = [&](int k) { return rs.isPositiveIndex(k) ? Rat(1) : rs.rootLengthSq(k) / 2; };
  g.structConsts = Matrix(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int c = rs.indexOfRoot(addVec(rs.roots[a], rs.roots[b]));
      if (c < 0) continue;
      g.structConsts.at(a, b) = s(a) * s(b) / s(c) * tbl.n(a, b);
    }
  return g;
}

Vec LieAlgebra::basisH(int i) const {
  Vec v(dim(), Rat(0));
  v[i] = 1;
  return v;
}

Vec LieAlgebra::basisE(int rootIdx) const {
  Vec v(dim(), Rat(0));
  v[eIndex(rootIdx)] = 1;
  return v;
}

Rat LieAlgebra::evalWeight(const Vec& weight, const Vec& hCoords) const {
  Rat r(0);
  for (int i = 0; i < rank(); ++i) {
    if (hCoords[i] == 0) continue;
    Vec alphaI(rank(), Rat(0));
    alphaI[i] = 1;
    r += hCoords[i] * rs.pairCoroot(weight, alphaI);
  }
  return r;
}

Vec LieAlgebra::cartanElementFor(const Vec& weight) const {
  Vec t(rank());
  for (int i = 0; i < rank(); ++i) t[i] = weight[i] * rs.innerForm.at(i, i) / 2;
  return t;
}

Vec LieAlgebra::embedH(const Vec& hCoords) const {
  Vec v(dim(), Rat(0));
  for (int i = 0; i < rank(); ++i) v[i] = hCoords[i];
  return v;
}

Vec LieAlgebra::hPart(const Vec& x) const { return Vec(x.begin(), x.begin() + rank()); }

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec r(dim(), Rat(0));
  int n = rank(), m = numRoots();
  // [h, e] terms
  for (int k = 0; k < m; ++k) {
    Rat c(0);
    if (y[eIndex(k)] != 0) c += evalWeight(rs.roots[k], hPart(x)) * y[eIndex(k)];
    if (x[eIndex(k)] != 0) c -= evalWeight(rs.roots[k], hPart(y)) * x[eIndex(k)];
    r[eIndex(k)] += c;
  }
  // [e_a, e_b] terms
  for (int a = 0; a < m; ++a) {
    if (x[eIndex(a)] == 0) continue;
    for (int b = 0; b < m; ++b) {
      if (y[eIndex(b)] == 0) continue;
      Rat coef = x[eIndex(a)] * y[eIndex(b)];
      if (b == rs.negationOf(a)) {
        // [e~_phi, e~_{-phi}] = t_phi
        Vec t = cartanElementFor(rs.roots[a]);
        for (int i = 0; i < n; ++i) r[i] += coef * t[i];
      } else if (structConsts.at(a, b) != 0) {
        int c = rs.indexOfRoot(addVec(rs.roots[a], rs.roots[b]));
        r[eIndex(c)] += coef * structConsts.at(a, b);
      }
    }
  }
  return r;
}

Matrix LieAlgebra::formMatrix() const {
  Matrix b(dim(), dim());
  int n = rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      b.at(i, j) = 4 * rs.innerForm.at(i, j) / (rs.innerForm.at(i, i) * rs.innerForm.at(j, j));
  for (int k = 0; k < numRoots(); ++k) b.at(eIndex(k), eIndex(rs.negationOf(k))) = 1;
  return b;
}

Rat LieAlgebra::form(const Vec& x, const Vec& y) const {
  Rat r(0);
  int n = rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (x[i] != 0 && y[j] != 0)
        r += x[i] * y[j] * 4 * rs.innerForm.at(i, j) / (rs.innerForm.at(i, i) * rs.innerForm.at(j, j));
  for (int k = 0; k < numRoots(); ++k) r += x[eIndex(k)] * y[eIndex(rs.negationOf(k))];
  return r;
}

Matrix LieAlgebra::adjointMatrix(const Vec& x) const {
  Matrix m(dim(), dim());
  for (int j = 0; j < dim(); ++j) {
    Vec ej(dim(), Rat(0));
    ej[j] = 1;
    Vec col = bracket(x, ej);
    for (int i = 0; i < dim(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

namespace {

std::set<int> closeRootIndexSet(const RootSystem& rs, std::set<int> idx) {
  for (int i : idx)
    if (!idx.count(rs.negationOf(i))) idx.insert(rs.negationOf(i));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(idx.begin(), idx.end());
    for (int a : cur)
      for (int b : cur) {
        Rat c = rs.pairCoroot(rs.roots[b], rs.roots[a]);
        int k = rs.indexOfRoot(subVec(rs.roots[b], scaleVec(c, rs.roots[a])));
        if (k < 0) throw Error("InternalInconsistency", "reflection left the root set");
        if (idx.insert(k).second) grew = true;
      }
  }
  return idx;
}

}  // namespace

std::vector<int> LiePair::mPlusIndices() const {
  std::vector<int> out;
  int z = static_cast<int>(delta0Plus.size());
  for (int t = 0; t < z; ++t) out.push_back(dimHp + t);
  for (int t = 0; t < dimPplus; ++t) out.push_back(dimHp + 2 * z + t);
  return out;
}

std::vector<int> LiePair::mMinusIndices() const {
  std::vector<int> out;
  int z = static_cast<int>(delta0Plus.size());
  for (int t = 0; t < z; ++t) out.push_back(dimHp + z + t);
  for (int t = 0; t < dimPplus; ++t) out.push_back(dimHp + 2 * z + dimPplus + t);
  return out;
}

Vec LiePair::pCoordinates(const Vec& w) const {
  Vec c(pBasis.size());
  for (size_t i = 0; i < pBasis.size(); ++i) c[i] = g.form(w, pDual[i]);
  return c;
}

Vec LiePair::restrictToHr(const Vec& weight) const {
  Vec v(hrBasis.size());
  for (size_t j = 0; j < hrBasis.size(); ++j) v[j] = g.evalWeight(weight, g.hPart(hrBasis[j]));
  return v;
}

Rat LiePair::hrInner(const Vec& a, const Vec& b) const {
  Rat r(0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      if (a[i] != 0 && b[j] != 0) r += a[i] * hrGramInv.at(i, j) * b[j];
  return r;
}

Rat LiePair::evalHrFunctional(const Vec& mu, const Vec& hrCoords) const {
  Rat r(0);
  for (size_t j = 0; j < mu.size(); ++j) r += mu[j] * hrCoords[j];
  return r;
}

LiePair buildPair(const LieAlgebra& g, const SubalgebraSpec& specIn) {
  SubalgebraSpec spec = specIn;
  for (auto& v : spec.basis) v = canonVec(v);
  for (auto& v : spec.subsystemSimple) v = canonVec(v);
  LiePair P;
  P.g = g;
  P.spec = spec;
  const RootSystem& rs = g.rs;
  int n = g.rank(), dim = g.dim();

  // 1. span of r
  switch (spec.kind) {
    case SubalgebraKind::Full: {
      P.rootType = true;
      for (int k = 0; k < g.numRoots(); ++k) P.subRootIdx.push_back(k);
      break;
    }
    case SubalgebraKind::Zero:
      break;
    case SubalgebraKind::Levi: {
      P.rootType = true;
      std::set<int> keep(spec.leviSimple.begin(), spec.leviSimple.end());
      for (int i : keep)
        if (i < 0 || i >= n) throw Error("NotSubalgebra", "simple root index out of range");
      for (int k = 0; k < g.numRoots(); ++k) {
        bool inside = true;
        for (int i = 0; i < n; ++i)
          if (rs.roots[k][i] != 0 && !keep.count(i)) inside = false;
        if (inside) P.subRootIdx.push_back(k);
      }
      break;
    }
    case SubalgebraKind::Subsystem: {
      P.rootType = true;
      std::set<int> idx;
      for (const auto& v : spec.subsystemSimple) {
        int k = rs.indexOfRoot(v);
        if (k < 0) throw Error("NotSubalgebra", "subsystem generator is not a root");
        idx.insert(k);
      }
      idx = closeRootIndexSet(rs, idx);
      P.subRootIdx.assign(idx.begin(), idx.end());
      break;
    }
    case SubalgebraKind::Explicit:
      P.rBasis = spec.basis;
      break;
  }
  if (P.rootType || spec.kind == SubalgebraKind::Zero) {
    if (P.rootType)
      for (int i = 0; i < n; ++i) P.rBasis.push_back(g.basisH(i));
    for (int k : P.subRootIdx) P.rBasis.push_back(g.basisE(k));
    // structural closure of the root subset
    std::set<int> idx(P.subRootIdx.begin(), P.subRootIdx.end());
    for (int a : idx)
      for (int b : idx) {
        int c = rs.indexOfRoot(addVec(rs.roots[a], rs.roots[b]));
        if (c >= 0 && !idx.count(c)) throw Error("NotSubalgebra", "root subset not additively closed");
      }
  }
  size_t numR = P.rBasis.size();
  if (Matrix::fromColumns(P.rBasis, dim).rank() != numR)
    throw Error("NotSubalgebra", "spanning vectors are dependent");
  if (spec.kind == SubalgebraKind::Explicit) {
    for (size_t i = 0; i < numR; ++i)
      for (size_t j = i + 1; j < numR; ++j)
        if (!inSpan(P.rBasis, g.bracket(P.rBasis[i], P.rBasis[j])))
          throw Error("NotSubalgebra", "basis is not bracket-closed");
  }

  // 2. nondegeneracy of B on r
  Matrix gramR(numR, numR);
  for (size_t i = 0; i < numR; ++i)
    for (size_t j = 0; j < numR; ++j) gramR.at(i, j) = g.form(P.rBasis[i], P.rBasis[j]);
  if (gramR.rank() != numR) throw Error("DegenerateForm", "B restricted to r is singular");

  // 3. p = orthocomplement of r
  Matrix bMat = g.formMatrix();
  Matrix ortho(numR, dim);
  for (size_t i = 0; i < numR; ++i) {
    Vec row = bMat.apply(P.rBasis[i]);
    for (int j = 0; j < dim; ++j) ortho.at(i, j) = row[j];
  }
  std::vector<Vec> pRaw = ortho.nullspace();
  if (pRaw.size() + numR != static_cast<size_t>(dim) ||
      !intersectSpans(P.rBasis, pRaw, dim).empty())
    throw Error("DegenerateForm", "g does not split as r + p");

  // 4. h_r = r cap h, must be a Cartan subalgebra of r
  std::vector<Vec> hAll;
  for (int i = 0; i < n; ++i) hAll.push_back(g.basisH(i));
  P.hrBasis = numR ? intersectSpans(P.rBasis, hAll, dim) : std::vector<Vec>{};
  size_t dimHr = P.hrBasis.size();
  if (numR) {
    Matrix cent(dimHr * dim, numR);
    for (size_t j = 0; j < dimHr; ++j)
      for (size_t i = 0; i < numR; ++i) {
        Vec br = g.bracket(P.hrBasis[j], P.rBasis[i]);
        for (int t = 0; t < dim; ++t) cent.at(j * dim + t, i) = br[t];
      }
    if (cent.nullspace().size() != dimHr)
      throw Error("CartanNotAligned", "r cap h is not a Cartan subalgebra of r");
  }
  if (dimHr) {
    P.hrGram = Matrix(dimHr, dimHr);
    for (size_t i = 0; i < dimHr; ++i)
      for (size_t j = 0; j < dimHr; ++j) P.hrGram.at(i, j) = g.form(P.hrBasis[i], P.hrBasis[j]);
    if (P.hrGram.rank() != dimHr) throw Error("DegenerateForm", "B singular on r cap h");
    P.hrGramInv = P.hrGram.inverse();
  }

  // 5. h_p = orthocomplement of h_r inside h
  Matrix horth(dimHr, n);
  for (size_t i = 0; i < dimHr; ++i) {
    Vec row = bMat.apply(P.hrBasis[i]);
    for (int j = 0; j < n; ++j) horth.at(i, j) = row[j];
  }
  for (const Vec& hc : horth.nullspace()) P.hpBasis.push_back(g.embedH(hc));
  P.dimHp = static_cast<int>(P.hpBasis.size());
  if (dimHr + P.hpBasis.size() != static_cast<size_t>(n))
    throw Error("InternalInconsistency", "h does not split as h_r + h_p");
  if (P.dimHp) {
    P.hpGram = Matrix(P.dimHp, P.dimHp);
    for (int i = 0; i < P.dimHp; ++i)
      for (int j = 0; j < P.dimHp; ++j) P.hpGram.at(i, j) = g.form(P.hpBasis[i], P.hpBasis[j]);
    if (P.hpGram.rank() != static_cast<size_t>(P.dimHp))
      throw Error("DegenerateForm", "B singular on h_p");
    P.hpGramInv = P.hpGram.inverse();
  }

  // 6. generic f_r in h_r: nonzero on every root with nonzero restriction to
  // h_r, nonnegative on the chosen positive system
  auto restriction = [&](int k) { return P.restrictToHr(rs.roots[k]); };
  auto admissible = [&](const Vec& cand) {
    for (int k = 0; k < g.numRoots(); ++k) {
      Rat val = g.evalWeight(rs.roots[k], cand);
      if (isZeroVec(restriction(k)) != (val == 0)) return false;
      if (rs.isPositiveIndex(k) && val < 0) return false;
    }
    return true;
  };
  auto projectHr = [&](const Vec& hCoords) {
    if (!dimHr) return Vec(n, Rat(0));
    Vec rhs(dimHr);
    Vec full = g.embedH(hCoords);
    for (size_t j = 0; j < dimHr; ++j) rhs[j] = g.form(full, P.hrBasis[j]);
    Vec c = *P.hrGram.solve(rhs);
    Vec x(n, Rat(0));
    for (size_t j = 0; j < dimHr; ++j) x = addVec(x, scaleVec(c[j], g.hPart(P.hrBasis[j])));
    return x;
  };
  P.fR = projectHr(g.cartanElementFor(scaleVec(Rat(2), rs.rho)));
  if (!admissible(P.fR)) {
    bool found = false;
    for (int denom = 10; denom <= 10240 && !found; denom *= 2)
      for (int i = 0; i < n && !found; ++i) {
        Vec fw(n, Rat(0));
        fw[i] = 1;
        Vec cand = addVec(P.fR, scaleVec(Rat(1, denom),
                                         projectHr(g.cartanElementFor(rs.simpleFromFundamental(fw)))));
        if (admissible(cand)) {
          P.fR = cand;
          found = true;
        }
      }
    if (!found)
      throw Error("CartanNotAligned", "no element of r cap h is compatible with the positive system");
  }
  // regular dominant f close to f_r
  P.fReg = addVec(P.fR, scaleVec(Rat(1, 16), g.cartanElementFor(rs.rho)));
  for (int k = 0; k < rs.numPositive; ++k)
    if (g.evalWeight(rs.roots[k], P.fReg) <= 0)
      throw Error("InternalInconsistency", "perturbed chamber element not dominant regular");

  // 7. zero-restriction roots and the weight grouping of the rest
  std::vector<int> delta0;
  std::map<Vec, std::vector<int>> byMu;  // nonzero restrictions
  for (int k = 0; k < g.numRoots(); ++k) {
    Vec mu = restriction(k);
    if (isZeroVec(mu))
      delta0.push_back(k);
    else
      byMu[mu].push_back(k);
  }
  for (int k : delta0) {
    if (rs.isPositiveIndex(k)) P.delta0Plus.push_back(k);
    for (size_t i = 0; i < numR; ++i)
      if (g.form(g.basisE(k), P.rBasis[i]) != 0)
        throw Error("InternalInconsistency", "zero-restriction root vector not orthogonal to r");
  }

  // 8. weight spaces of p and the dual-pair blocks of p'
  struct MuBlock {
    Vec mu;
    Rat frValue;
    std::vector<Vec> plus, minus;
  };
  std::vector<MuBlock> blocks;
  for (const auto& [mu, idxs] : byMu) {
    Rat val = g.evalWeight(rs.roots[idxs[0]], P.fR);
    if (val <= 0) continue;
    MuBlock blk;
    blk.mu = mu;
    blk.frValue = val;
    std::vector<Vec> gMu, gMinusMu;
    for (int k : idxs) gMu.push_back(g.basisE(k));
    Vec negMu = negVec(mu);
    auto it = byMu.find(negMu);
    if (it == byMu.end()) throw Error("InternalInconsistency", "weight set not negation-symmetric");
    for (int k : it->second) gMinusMu.push_back(g.basisE(k));
    std::vector<Vec> pMu = intersectSpans(pRaw, gMu, dim);
    std::vector<Vec> pNeg = intersectSpans(pRaw, gMinusMu, dim);
    if (pMu.size() != pNeg.size())
      throw Error("InternalInconsistency", "p weight spaces not paired in dimension");
    if (pMu.empty()) continue;
    Matrix gramMu(pMu.size(), pMu.size());
    for (size_t i = 0; i < pMu.size(); ++i)
      for (size_t j = 0; j < pNeg.size(); ++j) gramMu.at(i, j) = g.form(pMu[i], pNeg[j]);
    if (gramMu.rank() != pMu.size())
      throw Error("DegenerateForm", "p weight space pairs singularly with its opposite");
    Matrix inv = gramMu.inverse();
    blk.plus = pMu;
    blk.minus.assign(pMu.size(), Vec(dim, Rat(0)));
    for (size_t j = 0; j < pMu.size(); ++j)
      for (size_t k = 0; k < pNeg.size(); ++k)
        blk.minus[j] = addVec(blk.minus[j], scaleVec(inv.at(k, j), pNeg[k]));
    blocks.push_back(std::move(blk));
  }
  std::sort(blocks.begin(), blocks.end(), [](const MuBlock& a, const MuBlock& b) {
    if (a.frValue != b.frValue) return a.frValue < b.frValue;
    return a.mu < b.mu;
  });

  // 9. assemble ordered dual-pair basis of p
  size_t z = P.delta0Plus.size();
  Vec zeroHr(dimHr, Rat(0));
  for (int j = 0; j < P.dimHp; ++j) {
    P.pBasis.push_back(P.hpBasis[j]);
    Vec d(dim, Rat(0));
    for (int k = 0; k < P.dimHp; ++k) d = addVec(d, scaleVec(P.hpGramInv.at(k, j), P.hpBasis[k]));
    P.pDual.push_back(d);
    P.gammaOfB.push_back(zeroHr);
  }
  for (int k : P.delta0Plus) {
    P.pBasis.push_back(g.basisE(k));
    P.pDual.push_back(g.basisE(rs.negationOf(k)));
    P.gammaOfB.push_back(zeroHr);
  }
  for (int k : P.delta0Plus) {
    P.pBasis.push_back(g.basisE(rs.negationOf(k)));
    P.pDual.push_back(g.basisE(k));
    P.gammaOfB.push_back(zeroHr);
  }
  for (const auto& blk : blocks)
    for (size_t j = 0; j < blk.plus.size(); ++j) {
      P.pBasis.push_back(blk.plus[j]);
      P.pDual.push_back(blk.minus[j]);
      P.gammaOfB.push_back(blk.mu);
      P.gammaPlus.push_back(blk.mu);
      ++P.dimPplus;
    }
  for (const auto& blk : blocks)
    for (size_t j = 0; j < blk.plus.size(); ++j) {
      P.pBasis.push_back(blk.minus[j]);
      P.pDual.push_back(blk.plus[j]);
      P.gammaOfB.push_back(negVec(blk.mu));
    }
  if (P.pBasis.size() != pRaw.size())
    throw Error("InternalInconsistency", "p block decomposition misses dimensions");
  for (size_t i = 0; i < P.pBasis.size(); ++i)
    for (size_t j = 0; j < P.pBasis.size(); ++j)
      if (g.form(P.pBasis[i], P.pDual[j]) != Rat(i == j ? 1 : 0))
        throw Error("InternalInconsistency", "p bases are not dual");

  // 10. roots of r relative to h_r
  for (const auto& [mu, idxs] : byMu) {
    std::vector<Vec> gMu;
    for (int k : idxs) gMu.push_back(g.basisE(k));
    std::vector<Vec> rMu = numR ? intersectSpans(P.rBasis, gMu, dim) : std::vector<Vec>{};
    if (rMu.size() > 1) throw Error("CartanNotAligned", "r has a multidimensional root space");
    if (rMu.size() == 1 && g.evalWeight(rs.roots[idxs[0]], P.fR) > 0) P.rRootsPlus.push_back(mu);
  }
  std::sort(P.rRootsPlus.begin(), P.rRootsPlus.end());

  // 11. n_r = r cap n
  std::vector<Vec> nAll;
  for (int k = 0; k < rs.numPositive; ++k) nAll.push_back(g.basisE(k));
  P.nrBasis = numR ? intersectSpans(P.rBasis, nAll, dim) : std::vector<Vec>{};
  if (P.nrBasis.size() != P.rRootsPlus.size())
    throw Error("InternalInconsistency", "n_r dimension does not match the positive roots of r");

  // 12. rho pieces; each computed two ways where the source gives two routes
  P.rho0.assign(n, Rat(0));
  P.rho1.assign(n, Rat(0));
  P.rho2.assign(n, Rat(0));
  std::set<Vec> gammaPlusSet(P.gammaPlus.begin(), P.gammaPlus.end());
  for (int k = 0; k < rs.numPositive; ++k) {
    Vec mu = restriction(k);
    if (isZeroVec(mu))
      P.rho0 = addVec(P.rho0, rs.roots[k]);
    else if (gammaPlusSet.count(mu))
      P.rho1 = addVec(P.rho1, rs.roots[k]);
    else
      P.rho2 = addVec(P.rho2, rs.roots[k]);
  }
  P.rho0 = scaleVec(Rat(1, 2), P.rho0);
  P.rho1 = scaleVec(Rat(1, 2), P.rho1);
  P.rho2 = scaleVec(Rat(1, 2), P.rho2);
  if (addVec(addVec(P.rho0, P.rho1), P.rho2) != rs.rho)
    throw Error("InternalInconsistency", "positive roots not partitioned by restriction type");

  // rho_p: half sum of p^+ weights, against the trace of the action on p^+
  P.rhoP.assign(dimHr, Rat(0));
  int pPlusStart = P.dimHp + 2 * static_cast<int>(z);
  for (int t = 0; t < P.dimPplus; ++t)
    P.rhoP = addVec(P.rhoP, P.gammaOfB[pPlusStart + t]);
  P.rhoP = scaleVec(Rat(1, 2), P.rhoP);
  for (size_t j = 0; j < dimHr; ++j) {
    Rat tr(0);
    for (int t = 0; t < P.dimPplus; ++t) {
      Vec br = g.bracket(P.hrBasis[j], P.pBasis[pPlusStart + t]);
      tr += P.pCoordinates(br)[pPlusStart + t];
    }
    if (tr / 2 != P.rhoP[j])
      throw Error("InternalInconsistency", "trace route for the p^+ half-sum disagrees");
  }

  // rho_r: half sum of positive r-roots, against the trace of ad on n_r
  P.rhoR.assign(dimHr, Rat(0));
  for (const Vec& mu : P.rRootsPlus) P.rhoR = addVec(P.rhoR, mu);
  P.rhoR = scaleVec(Rat(1, 2), P.rhoR);
  for (size_t j = 0; j < dimHr; ++j) {
    Rat tr(0);
    for (size_t i = 0; i < P.nrBasis.size(); ++i) {
      Vec br = g.bracket(P.hrBasis[j], P.nrBasis[i]);
      auto c = coordinatesIn(P.nrBasis, br);
      if (!c) throw Error("InternalInconsistency", "n_r not stable under r cap h");
      tr += (*c)[i];
    }
    if (tr / 2 != P.rhoR[j])
      throw Error("InternalInconsistency", "trace route for the r half-sum disagrees");
  }
  if (addVec(P.rhoP, P.rhoR) != P.restrictToHr(rs.rho))
    throw Error("InternalInconsistency", "half-sum pieces do not add up on r cap h");

  P.rhoRAmbient.assign(n, Rat(0));
  if (P.rootType) {
    for (int k : P.subRootIdx)
      if (rs.isPositiveIndex(k)) P.rhoRAmbient = addVec(P.rhoRAmbient, rs.roots[k]);
    P.rhoRAmbient = scaleVec(Rat(1, 2), P.rhoRAmbient);
  }
  P.equalRank = (dimHr == static_cast<size_t>(n));
  return P;
}

CartanVector cartanVector(const LiePair& pair, const Vec& nu) {
  CartanVector cv;
  const LieAlgebra& g = pair.g;
  cv.zNu = g.cartanElementFor(nu);
  size_t dimHr = pair.hrBasis.size();
  cv.xNu.assign(g.rank(), Rat(0));
  if (dimHr) {
    Vec rhs(dimHr);
    for (size_t j = 0; j < dimHr; ++j) rhs[j] = g.evalWeight(nu, g.hPart(pair.hrBasis[j]));
    Vec c = *pair.hrGram.solve(rhs);
    for (size_t j = 0; j < dimHr; ++j)
      cv.xNu = addVec(cv.xNu, scaleVec(c[j], g.hPart(pair.hrBasis[j])));
  }
  cv.yNu = subVec(cv.zNu, cv.xNu);
  return cv;
}

}  // namespace dk
