#include "dirac.hpp"

#include <algorithm>

namespace dk {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l)
          out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return out;
}

// out += (A or id on V) (x) (C or id on L) applied to x
void addTensorApply(const WeightModule& mod, const Vec* gElem, const Matrix* lMat, const Vec& x,
                    Vec& out, int dimL) {
  int dimV = mod.dim();
  std::vector<Vec> cols(dimL, Vec(dimV, Rat(0)));
  bool any = false;
  for (int v = 0; v < dimV; ++v)
    for (int l = 0; l < dimL; ++l)
      if (x[v * dimL + l] != 0) {
        cols[l][v] = x[v * dimL + l];
        any = true;
      }
  if (!any) return;
  for (int l = 0; l < dimL; ++l) {
    if (isZeroVec(cols[l])) continue;
    Vec w = gElem ? mod.act(*gElem, cols[l]) : cols[l];
    if (!lMat) {
      for (int v = 0; v < dimV; ++v) out[v * dimL + l] += w[v];
      continue;
    }
    for (int lp = 0; lp < dimL; ++lp) {
      if (lMat->at(lp, l) == 0) continue;
      for (int v = 0; v < dimV; ++v) out[v * dimL + lp] += lMat->at(lp, l) * w[v];
    }
  }
}

}  // namespace

DiracComplex::DiracComplex(const LiePair& pair, const WeightModule& module)
    : pair_(pair), module_(module) {
  if (module.g.rs.cm.label != pair.g.rs.cm.label || module.g.dim() != pair.g.dim())
    throw Error("BasisMismatch", "module and pair are over different algebras");
  ca_ = std::make_unique<CliffordAlgebra>(pair_);
  ideal_ = buildSpinIdeal(*ca_);
  cubic_ = cubicTerm(*ca_);
  for (int i = 0; i < pair_.dimP(); ++i)
    cliffDual_.push_back(leftActionMatrix(*ca_, ideal_, ca_->fromPVector(pair_.pDual[i])));
  cliffV_ = leftActionMatrix(*ca_, ideal_, cubic_.v);
  cliffV0_ = leftActionMatrix(*ca_, ideal_, cubic_.v0);
  cliffV1_ = leftActionMatrix(*ca_, ideal_, cubic_.v1);
  if (!pair_.rBasis.empty()) {
    Matrix gram(pair_.rBasis.size(), pair_.rBasis.size());
    for (size_t a = 0; a < pair_.rBasis.size(); ++a)
      for (size_t b = 0; b < pair_.rBasis.size(); ++b)
        gram.at(a, b) = pair_.g.form(pair_.rBasis[a], pair_.rBasis[b]);
    Matrix inv = gram.inverse();
    for (size_t a = 0; a < pair_.rBasis.size(); ++a) {
      Vec d(pair_.g.dim(), Rat(0));
      for (size_t b = 0; b < pair_.rBasis.size(); ++b)
        d = addVec(d, scaleVec(inv.at(b, a), pair_.rBasis[b]));
      rDual_.push_back(d);
    }
  }
}

Vec DiracComplex::applyDprime(const Vec& x) const {
  Vec out(dim(), Rat(0));
  for (int i = 0; i < pair_.dimP(); ++i)
    addTensorApply(module_, &pair_.pBasis[i], &cliffDual_[i], x, out, dimL());
  return out;
}

Vec DiracComplex::applyDcubic(const Vec& x) const {
  Vec out(dim(), Rat(0));
  addTensorApply(module_, nullptr, &cliffV_, x, out, dimL());
  return out;
}

Vec DiracComplex::applyD(const Vec& x) const { return addVec(applyDprime(x), applyDcubic(x)); }

Vec DiracComplex::applyZeta(const Vec& y, const Vec& x) const {
  Vec out(dim(), Rat(0));
  addTensorApply(module_, &y, nullptr, x, out, dimL());
  Matrix nu = leftActionMatrix(*ca_, ideal_, nuStar(*ca_, y));
  addTensorApply(module_, nullptr, &nu, x, out, dimL());
  return out;
}

Matrix DiracComplex::matrixDprime() const {
  Matrix out(dim(), dim());
  for (int i = 0; i < pair_.dimP(); ++i)
    out = out + kron(module_.actionMatrix(pair_.pBasis[i]), cliffDual_[i]);
  return out;
}

Matrix DiracComplex::matrixDcubic() const { return kron(Matrix::identity(module_.dim()), cliffV_); }

Matrix DiracComplex::matrixD() const { return matrixDprime() + matrixDcubic(); }

Matrix DiracComplex::matrixZeta(const Vec& y) const {
  Matrix nu = leftActionMatrix(*ca_, ideal_, nuStar(*ca_, y));
  return kron(module_.actionMatrix(y), Matrix::identity(dimL())) +
         kron(Matrix::identity(module_.dim()), nu);
}

Matrix DiracComplex::matrixZetaCasR() const {
  Matrix out(dim(), dim());
  for (size_t a = 0; a < pair_.rBasis.size(); ++a)
    out = out + matrixZeta(pair_.rBasis[a]) * matrixZeta(rDual_[a]);
  return out;
}

Matrix DiracComplex::matrixCasG() const {
  return kron(casimirMatrix(module_), Matrix::identity(dimL()));
}

Vec DiracComplex::diagonalWeight(int t) const {
  Vec w = pair_.restrictToHr(module_.weights[t / dimL()]);
  return addVec(w, ideal_.weights[t % dimL()]);
}

Matrix casimirMatrix(const WeightModule& module) {
  const LieAlgebra& g = module.g;
  Matrix binv = g.formMatrix().inverse();
  Matrix out(module.dim(), module.dim());
  for (int k = 0; k < g.dim(); ++k) {
    Vec unit(g.dim(), Rat(0));
    unit[k] = 1;
    Vec dual(g.dim(), Rat(0));
    for (int j = 0; j < g.dim(); ++j) dual[j] = binv.at(j, k);
    out = out + module.actionMatrix(unit) * module.actionMatrix(dual);
  }
  return out;
}

Rat casimirScalar(const RootSystem& rs, const Vec& lambda) {
  Vec shifted = addVec(lambda, rs.rho);
  return rs.inner(shifted, shifted) - rs.inner(rs.rho, rs.rho);
}

SquareIdentityReport verifySquareIdentity(const DiracComplex& cx) {
  Matrix d = cx.matrixD();
  Matrix e = d * d - cx.matrixCasG() + cx.matrixZetaCasR();
  auto c = e.asScalarIdentity();
  if (!c) throw Error("NotScalar", "the squared operator defect is not scalar");
  SquareIdentityReport rep;
  rep.scalar = *c;
  const LiePair& pair = cx.pair();
  rep.predicted = pair.g.rs.inner(pair.g.rs.rho, pair.g.rs.rho) - pair.hrInner(pair.rhoR, pair.rhoR);
  rep.match = rep.scalar == rep.predicted;
  return rep;
}

namespace {

// coordinates in L of y_nu . w for the h_p part of a Cartan vector
Vec cartanTimes(const DiracComplex& cx, const Vec& nu, const CliffordElement& w) {
  auto cv = cartanVector(cx.pair(), nu);
  CliffordElement y = cx.cliff().fromPVector(cx.pair().g.embedH(cv.yNu));
  return reduceInIdeal(cx.cliff(), cx.ideal(), cx.cliff().product(y, w));
}

Vec topTensor(const DiracComplex& cx, const Vec& lCoords) {
  Vec x(cx.dim(), Rat(0));
  for (int l = 0; l < cx.dimL(); ++l) x[l] = lCoords[l];
  return x;
}

}  // namespace

CocycleReport cocycleCheck(const DiracComplex& cx, uint64_t aMask) {
  const LiePair& pair = cx.pair();
  if (aMask >> pair.dimHp)
    throw Error("BadArgument", "cocycle element must lie in the h_p block");
  const CliffordAlgebra& ca = cx.cliff();
  const SpinIdeal& ideal = cx.ideal();
  CliffordElement au =
      ca.product(CliffordElement::monomial(aMask, Rat(1)),
                 CliffordElement::monomial(ideal.uMask, Rat(1)));
  Vec auCoords = reduceInIdeal(ca, ideal, au);
  Vec x0 = topTensor(cx, auCoords);
  const Vec& lambda = cx.module().lambda;
  Vec lambdaRho = addVec(lambda, pair.g.rs.rho);

  CocycleReport rep;
  rep.primePart = cx.applyDprime(x0) == topTensor(cx, cartanTimes(cx, lambda, au));
  Vec zeroSide(cx.dim(), Rat(0));
  {
    Matrix v0 = leftActionMatrix(ca, ideal, cx.cubic().v0);
    for (int l = 0; l < cx.dimL(); ++l)
      for (int lp = 0; lp < cx.dimL(); ++lp) zeroSide[lp] += v0.at(lp, l) * x0[l];
  }
  rep.zeroPart = zeroSide == topTensor(cx, cartanTimes(cx, pair.rho0, au));
  Vec oneLhs = reduceInIdeal(ca, ideal, ca.product(cx.cubic().v1, au));
  rep.onePart = oneLhs == cartanTimes(cx, pair.rho1, au);
  Vec total = cx.applyD(x0);
  rep.total = total == topTensor(cx, cartanTimes(cx, lambdaRho, au));
  rep.forcedZero = isZeroVec(cartanVector(pair, lambdaRho).yNu);
  rep.vanishes = isZeroVec(total);
  return rep;
}

DiracCohomology diracCohomology(const DiracComplex& cx) {
  DiracCohomology coh;
  Matrix d = cx.matrixD();
  coh.kernel = d.nullspace();
  std::vector<Vec> image = d.columnSpaceBasis();
  coh.kernelCapImage = intersectSpans(coh.kernel, image, cx.dim());
  std::vector<size_t> repIdx = extendToBasis(coh.kernelCapImage, coh.kernel, cx.dim());
  for (size_t i : repIdx) coh.representatives.push_back(coh.kernel[i]);
  coh.dim = static_cast<int>(coh.representatives.size());
  coh.kerEqualsKerSquare = (d * d).nullspace().size() == coh.kernel.size();

  // zeta action on the quotient: express images in the (intersection | reps)
  // basis of the kernel and keep the rep block
  std::vector<Vec> kerBasis = coh.kernelCapImage;
  for (const Vec& r : coh.representatives) kerBasis.push_back(r);
  size_t off = coh.kernelCapImage.size();
  auto quotientMatrix = [&](const Matrix& t) {
    Matrix q(coh.dim, coh.dim);
    for (int j = 0; j < coh.dim; ++j) {
      Vec w = t.apply(coh.representatives[j]);
      auto c = coordinatesIn(kerBasis, w);
      if (!c) throw Error("InternalInconsistency", "zeta does not preserve the Dirac kernel");
      for (int i = 0; i < coh.dim; ++i) q.at(i, j) = (*c)[off + i];
    }
    return q;
  };
  std::vector<Matrix> hrActs, nrActs;
  for (const Vec& x : cx.pair().hrBasis) hrActs.push_back(quotientMatrix(cx.matrixZeta(x)));
  for (const Vec& x : cx.pair().nrBasis) nrActs.push_back(quotientMatrix(cx.matrixZeta(x)));
  std::vector<Vec> cands;
  for (int t = 0; t < cx.dim(); ++t) cands.push_back(cx.diagonalWeight(t));
  coh.rStructure = decomposeUnderR(cx.pair(), coh.dim, hrActs, nrActs, cands);
  return coh;
}

MultipletReport multipletCheck(const LiePair& pair, const Vec& lambda, const Int& dimCap) {
  if (!pair.equalRank) throw Error("BadArgument", "multiplet check needs an equal rank pair");
  if (!pair.rootType) throw Error("BadArgument", "multiplet check needs a root-type subalgebra");
  WeightModule mod = buildIrrep(pair.g, lambda, dimCap);
  DiracComplex cx(pair, mod);
  DiracCohomology coh = diracCohomology(cx);

  MultipletReport rep;
  rep.cohomologySide = coh.rStructure.constituents;
  rep.kerEqualsKerSquare = coh.kerEqualsKerSquare;
  WeylGroup wg = buildWeylGroup(pair.g.rs);
  CosetSystem cs = cosetTransversal(wg, pair.subRootIdx);
  rep.eulerNumber = cs.eulerNumber;
  std::map<Vec, int> coset;
  for (int tau : cs.transversal)
    coset[pair.restrictToHr(dotAction(wg, tau, lambda, pair.rhoRAmbient))]++;
  for (const auto& [mu, m] : coset) rep.cosetSide.push_back({mu, m});
  auto lhs = rep.cohomologySide;
  std::sort(lhs.begin(), lhs.end());
  rep.match = lhs == rep.cosetSide;  // cosetSide already sorted by map order
  rep.multiplicityFree = true;
  for (const auto& [mu, m] : rep.cohomologySide)
    if (m != 1) rep.multiplicityFree = false;
  return rep;
}

NonvanishingReport nonvanishingCheck(const LiePair& pair, const Vec& lambda, int depth) {
  if (depth < 3) throw Error("BadDepth", "nonvanishing check needs depth at least 3");
  // widen the truncation so that applying D to any vector of depth <= depth-1
  // stays inside the enumerated range even for the longest lowering operator
  const RootSystem& rs = pair.g.rs;
  int maxRootHeight = rs.heightOf(rs.roots[rs.numPositive - 1]);
  WeightModule mod = buildTruncatedVerma(pair.g, lambda, depth + maxRootHeight - 1);
  DiracComplex cx(pair, mod);
  const SpinIdeal& ideal = cx.ideal();

  NonvanishingReport rep;
  rep.lambdaAdmissible =
      isZeroVec(cartanVector(pair, addVec(lambda, pair.g.rs.rho)).yNu);
  rep.dimE = Int(1) << pair.dimHp;

  rep.kernelPart = true;
  for (uint64_t s = 0; s < (uint64_t(1) << pair.dimHp); ++s) {
    CliffordElement au = cx.cliff().product(CliffordElement::monomial(s, Rat(1)),
                                            CliffordElement::monomial(ideal.uMask, Rat(1)));
    Vec x = topTensor(cx, reduceInIdeal(cx.cliff(), ideal, au));
    if (!isZeroVec(cx.applyD(x))) rep.kernelPart = false;
  }

  // the h_p-only labels index the complement E of M inside V (x) L
  std::vector<char> pureHp(ideal.dimL(), 0);
  for (int l = 0; l < ideal.dimL(); ++l)
    if (!(ideal.labels[l] >> pair.dimHp)) pureHp[l] = 1;

  rep.stable = true;
  int minSkippedDepth = depth + 1;
  for (int t = 0; t < cx.dim(); ++t) {
    int v = t / cx.dimL(), l = t % cx.dimL();
    if (mod.depthOf[v] > depth - 1) continue;  // stability is claimed below the cutoff
    if (v == 0 && pureHp[l]) continue;  // not in M
    Vec unit(cx.dim(), Rat(0));
    unit[t] = 1;
    Vec img;
    try {
      img = cx.applyD(unit);
    } catch (const Error& e) {
      if (e.code() != "DepthLeak") throw;
      ++rep.skippedLeaks;
      minSkippedDepth = std::min(minSkippedDepth, mod.depthOf[v]);
      continue;
    }
    for (int lp = 0; lp < cx.dimL(); ++lp)
      if (pureHp[lp] && img[lp] != 0) rep.stable = false;
  }
  rep.checkedDepth = rep.skippedLeaks == 0 ? depth - 1 : minSkippedDepth - 1;
  return rep;
}

HarishChandraReport harishChandraDiagram(const LiePair& pair, int minSamples) {
  const LieAlgebra& g = pair.g;
  const RootSystem& rs = g.rs;
  HarishChandraReport rep;
  rep.shift = pair.hrInner(pair.rhoR, pair.rhoR) - rs.inner(rs.rho, rs.rho);

  int d = pair.dimHr();
  std::vector<Vec> mus;
  if (d == 0) {
    mus.push_back(Vec());
  } else {
    for (int limit = 2; static_cast<int>(mus.size()) < minSamples; ++limit) {
      mus.clear();
      std::vector<int> k(d, -limit);
      while (true) {
        Vec mu(d);
        for (int a = 0; a < d; ++a) mu[a] = k[a];
        mus.push_back(mu);
        int pos = d - 1;
        while (pos >= 0 && k[pos] == limit) k[pos--] = -limit;
        if (pos < 0) break;
        k[pos]++;
      }
    }
  }

  rep.allMatch = true;
  for (const Vec& mu : mus) {
    // lift mu to the ambient weight with zero h_p component
    Vec z(g.dim(), Rat(0));
    if (d > 0) {
      Vec c = pair.hrGramInv.apply(mu);
      for (int a = 0; a < d; ++a) z = addVec(z, scaleVec(c[a], pair.hrBasis[a]));
    }
    Vec onCoroots(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) {
      Vec hi(rs.rank(), Rat(0));
      hi[i] = 1;
      onCoroots[i] = g.form(g.embedH(hi), z);
    }
    HarishChandraSample s;
    s.nu = rs.simpleFromFundamental(onCoroots);
    if (pair.restrictToHr(s.nu) != mu || !isZeroVec(cartanVector(pair, s.nu).yNu))
      throw Error("InternalInconsistency", "sample lift failed");
    s.ambientScalar = rs.inner(s.nu, s.nu) - rs.inner(rs.rho, rs.rho);
    s.subScalar = pair.hrInner(mu, mu) - pair.hrInner(pair.rhoR, pair.rhoR) + rep.shift;
    s.match = s.ambientScalar == s.subScalar;
    if (!s.match) rep.allMatch = false;
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

bool hcOperatorIdentity(const DiracComplex& cx, const DiracCohomology& coh) {
  const LiePair& pair = cx.pair();
  Rat shift = pair.hrInner(pair.rhoR, pair.rhoR) - pair.g.rs.inner(pair.g.rs.rho, pair.g.rs.rho);
  Matrix a = cx.matrixCasG();
  Matrix zc = cx.matrixZetaCasR();
  std::vector<Vec> kerBasis = coh.kernelCapImage;
  for (const Vec& r : coh.representatives) kerBasis.push_back(r);
  size_t off = coh.kernelCapImage.size();
  for (const Vec& r : coh.representatives) {
    Vec lhs = a.apply(r);
    Vec rhs = addVec(zc.apply(r), scaleVec(shift, r));
    auto cl = coordinatesIn(kerBasis, lhs);
    auto cr = coordinatesIn(kerBasis, rhs);
    if (!cl || !cr) return false;
    for (size_t i = off; i < kerBasis.size(); ++i)
      if ((*cl)[i] != (*cr)[i]) return false;
  }
  return true;
}

}  // namespace dk
