#include "clifford.hpp"

#include <bit>

namespace dk {

namespace {

inline uint64_t bit(int i) { return uint64_t(1) << i; }

// parity of #{(i, j) : i in a, j in b, i > j}; the sign of sorting the
// concatenation a|b into increasing order when both are already sorted
int signBetween(uint64_t a, uint64_t b) {
  int inv = 0;
  uint64_t rest = a;
  while (rest) {
    int i = std::countr_zero(rest);
    rest &= rest - 1;
    inv += std::popcount(b & (bit(i) - 1));
  }
  return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace

CliffordElement CliffordElement::monomial(uint64_t mask, const Rat& c) {
  CliffordElement e;
  e.add(mask, c);
  return e;
}

void CliffordElement::add(uint64_t mask, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(mask);
  if (it == terms.end()) {
    terms.emplace(mask, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
  CliffordElement r = *this;
  for (const auto& [m, c] : o.terms) r.add(m, c);
  return r;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
  CliffordElement r = *this;
  for (const auto& [m, c] : o.terms) r.add(m, -c);
  return r;
}

CliffordElement CliffordElement::scaled(const Rat& c) const {
  CliffordElement r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms) r.terms.emplace(m, c * k);
  return r;
}

int CliffordElement::maxDegree() const {
  int d = 0;
  for (const auto& [m, c] : terms) d = std::max(d, std::popcount(m));
  return d;
}

CliffordAlgebra::CliffordAlgebra(const LiePair& pair) : pair_(&pair), dim_(pair.dimP()) {
  if (dim_ > 62) throw Error("DimensionCap", "p is too large for bitmask monomials");
  gram_ = Matrix(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) gram_.at(i, j) = pair.g.form(pair.pBasis[i], pair.pBasis[j]);
}

CliffordElement CliffordAlgebra::fromPVector(const Vec& gElement) const {
  Vec c = pair_->pCoordinates(gElement);
  CliffordElement r;
  for (int i = 0; i < dim_; ++i) r.add(bit(i), c[i]);
  return r;
}

CliffordElement CliffordAlgebra::wedge(const CliffordElement& a, const CliffordElement& b) const {
  CliffordElement r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      if (ma & mb) continue;
      r.add(ma | mb, ca * cb * signBetween(ma, mb));
    }
  return r;
}

CliffordElement CliffordAlgebra::contractBasis(int i, uint64_t mask) const {
  CliffordElement r;
  int sign = 1;
  uint64_t rest = mask;
  while (rest) {
    int j = std::countr_zero(rest);
    rest &= rest - 1;
    const Rat& g = gram_.at(i, j);
    if (g != 0) r.add(mask & ~bit(j), sign * g);
    sign = -sign;
  }
  return r;
}

CliffordElement CliffordAlgebra::vectorTimes(int i, const CliffordElement& x) const {
  // v x = v ^ x + iota_{B(v, .)} x
  CliffordElement r;
  for (const auto& [m, c] : x.terms) {
    if (!(m & bit(i))) r.add(m | bit(i), c * signBetween(bit(i), m));
    CliffordElement io = contractBasis(i, m);
    for (const auto& [mi, ci] : io.terms) r.add(mi, c * ci);
  }
  return r;
}

CliffordElement CliffordAlgebra::monomialTimes(uint64_t mask, const CliffordElement& x) const {
  if (mask == 0) return x;
  int i = std::countr_zero(mask);
  uint64_t rest = mask & ~bit(i);
  // (v ^ w) x = v (w x) - (iota_v w) x
  CliffordElement r = vectorTimes(i, monomialTimes(rest, x));
  CliffordElement io = contractBasis(i, rest);
  if (!io.isZero()) r = r - product(io, x);
  return r;
}

CliffordElement CliffordAlgebra::product(const CliffordElement& a, const CliffordElement& b) const {
  CliffordElement r;
  for (const auto& [ma, ca] : a.terms) {
    CliffordElement t = monomialTimes(ma, b);
    for (const auto& [m, c] : t.terms) r.add(m, ca * c);
  }
  return r;
}

Rat CliffordAlgebra::gramPairing(const CliffordElement& a, const CliffordElement& b) const {
  Rat total(0);
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      if (std::popcount(ma) != std::popcount(mb)) continue;
      std::vector<int> ia, ib;
      for (uint64_t m = ma; m;) {
        ia.push_back(std::countr_zero(m));
        m &= m - 1;
      }
      for (uint64_t m = mb; m;) {
        ib.push_back(std::countr_zero(m));
        m &= m - 1;
      }
      Matrix sub(ia.size(), ib.size());
      for (size_t s = 0; s < ia.size(); ++s)
        for (size_t t = 0; t < ib.size(); ++t) sub.at(s, t) = gram_.at(ia[s], ib[t]);
      total += ca * cb * sub.det();
    }
  return total;
}

CubicTerm cubicTerm(const CliffordAlgebra& ca) {
  const LiePair& pair = ca.pair();
  const LieAlgebra& g = pair.g;
  int n = ca.dim();
  int zeroBlockEnd = pair.dimHp + 2 * static_cast<int>(pair.delta0Plus.size());
  CubicTerm out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec gij = addVec(pair.gammaOfB[i], pair.gammaOfB[j]);
      for (int k = j + 1; k < n; ++k) {
        if (!isZeroVec(addVec(gij, pair.gammaOfB[k]))) continue;
        Rat c = g.form(g.bracket(pair.pDual[i], pair.pDual[j]), pair.pDual[k]) / Rat(-2);
        if (c == 0) continue;
        uint64_t m = bit(i) | bit(j) | bit(k);
        out.v.add(m, c);
        if (k < zeroBlockEnd)
          out.v0.add(m, c);
        else
          out.v1.add(m, c);
      }
    }
  return out;
}

CliffordElement nuStar(const CliffordAlgebra& ca, const Vec& x) {
  const LiePair& pair = ca.pair();
  if (!inSpan(pair.rBasis, x)) throw Error("NotInR", "nuStar argument must lie in r");
  CliffordElement r;
  for (int i = 0; i < ca.dim(); ++i) {
    CliffordElement adb = ca.fromPVector(pair.g.bracket(x, pair.pBasis[i]));
    CliffordElement di = ca.fromPVector(pair.pDual[i]);
    r = r + ca.wedge(adb, di).scaled(Rat(1, 4));
  }
  return r;
}

CliffordElement sigmaStar(const CliffordAlgebra& ca, const Vec& y) {
  const LiePair& pair = ca.pair();
  if (!inSpan(pair.hpBasis, y)) throw Error("NotInHp", "sigmaStar argument must lie in h_p");
  Vec hc = pair.g.hPart(y);
  int z = static_cast<int>(pair.delta0Plus.size());
  CliffordElement r;
  for (int t = 0; t < z; ++t) {
    Rat val = pair.g.evalWeight(pair.g.rs.roots[pair.delta0Plus[t]], hc);
    // e_phi at index dimHp + t, e_{-phi} at dimHp + z + t
    r.add(bit(pair.dimHp + t) | bit(pair.dimHp + z + t), val / 2);
  }
  return r;
}

SpinIdeal buildSpinIdeal(const CliffordAlgebra& ca) {
  const LiePair& pair = ca.pair();
  SpinIdeal ideal;
  for (int i : pair.mPlusIndices()) ideal.uMask |= bit(i);

  std::vector<int> free;
  for (int i = 0; i < pair.dimHp; ++i) free.push_back(i);
  for (int i : pair.mMinusIndices()) free.push_back(i);
  if (free.size() > 20) throw Error("DimensionCap", "spin ideal basis too large");

  for (uint64_t s = 0; s < (uint64_t(1) << free.size()); ++s) {
    uint64_t mask = 0;
    for (size_t t = 0; t < free.size(); ++t)
      if (s & bit(static_cast<int>(t))) mask |= bit(free[t]);
    ideal.labels.push_back(mask);
  }
  std::sort(ideal.labels.begin(), ideal.labels.end(), [](uint64_t a, uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  CliffordElement u = CliffordElement::monomial(ideal.uMask, Rat(1));
  for (size_t t = 0; t < ideal.labels.size(); ++t) {
    uint64_t label = ideal.labels[t];
    ideal.labelIndex[label] = static_cast<int>(t);
    CliffordElement p = ca.product(CliffordElement::monomial(label, Rat(1)), u);
    auto it = p.terms.find(label | ideal.uMask);
    if (it == p.terms.end())
      throw Error("InternalInconsistency", "spin ideal basis lost its leading monomial");
    ideal.leadingSign.push_back(it->second);
    ideal.phi.push_back(std::move(p));

    Vec w = pair.rhoP;
    for (uint64_t m = label; m;) {
      int i = std::countr_zero(m);
      m &= m - 1;
      w = addVec(w, pair.gammaOfB[i]);
    }
    ideal.weights.push_back(w);
  }
  return ideal;
}

Vec reduceInIdeal(const CliffordAlgebra& ca, const SpinIdeal& ideal, CliffordElement w) {
  (void)ca;
  Vec coords(ideal.dimL(), Rat(0));
  // labels are sorted by degree, so walking backwards peels leading monomials
  // before their lower-degree contraction tails can interfere
  for (int t = ideal.dimL() - 1; t >= 0; --t) {
    auto it = w.terms.find(ideal.labels[t] | ideal.uMask);
    if (it == w.terms.end()) continue;
    Rat c = it->second / ideal.leadingSign[t];
    coords[t] = c;
    w = w - ideal.phi[t].scaled(c);
  }
  if (!w.isZero()) throw Error("InternalInconsistency", "element is not in the spin ideal");
  return coords;
}

Matrix leftActionMatrix(const CliffordAlgebra& ca, const SpinIdeal& ideal, const CliffordElement& a) {
  Matrix m(ideal.dimL(), ideal.dimL());
  for (int t = 0; t < ideal.dimL(); ++t) {
    Vec col = reduceInIdeal(ca, ideal, ca.product(a, ideal.phi[t]));
    for (int i = 0; i < ideal.dimL(); ++i) m.at(i, t) = col[i];
  }
  return m;
}

}  // namespace dk
