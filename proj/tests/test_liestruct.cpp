#include <set>

#include "doctest.h"
#include "liestruct.hpp"

using namespace dk;

namespace {
LieAlgebra makeAlgebra(const char* label) {
  return buildLieAlgebra(buildRootSystem(cartanMatrixFromLabel(label)));
}

// principal sl2 inside A2: h = 2h1+2h2, e = e_a1+e_a2, f = 2e_{-a1}+2e_{-a2}
SubalgebraSpec principalSl2(const LieAlgebra& g) {
  SubalgebraSpec s;
  s.kind = SubalgebraKind::Explicit;
  Vec h(g.dim(), Rat(0)), e(g.dim(), Rat(0)), f(g.dim(), Rat(0));
  h[0] = 2;
  h[1] = 2;
  e[g.eIndex(0)] = 1;
  e[g.eIndex(1)] = 1;
  f[g.eIndex(g.rs.negationOf(0))] = 2;
  f[g.eIndex(g.rs.negationOf(1))] = 2;
  s.basis = {h, e, f};
  return s;
}

SubalgebraSpec diagonalA1(const LieAlgebra& g) {
  SubalgebraSpec s;
  s.kind = SubalgebraKind::Explicit;
  Vec h(g.dim(), Rat(0)), e(g.dim(), Rat(0)), f(g.dim(), Rat(0));
  h[0] = 1;
  h[1] = 1;
  e[g.eIndex(0)] = 1;
  e[g.eIndex(1)] = 1;
  f[g.eIndex(g.rs.negationOf(0))] = 1;
  f[g.eIndex(g.rs.negationOf(1))] = 1;
  s.basis = {h, e, f};
  return s;
}
}  // namespace

TEST_CASE("sl2 structure") {
  auto g = makeAlgebra("A1");
  Vec e = g.basisE(0), f = g.basisE(1), h = g.basisH(0);
  CHECK(g.bracket(e, f) == h);
  CHECK(g.bracket(h, e) == scaleVec(Rat(2), e));
  CHECK(g.bracket(h, f) == scaleVec(Rat(-2), f));
  CHECK(g.form(e, f) == 1);
  CHECK(g.form(h, h) == 2);
  CHECK(g.form(h, e) == 0);
}

TEST_CASE("Jacobi identity on all basis triples") {
  for (const char* label : {"A2", "B2", "G2"}) {
    auto g = makeAlgebra(label);
    std::vector<Vec> basis;
    for (int i = 0; i < g.dim(); ++i) {
      Vec v(g.dim(), Rat(0));
      v[i] = 1;
      basis.push_back(v);
    }
    int failures = 0;
    for (int a = 0; a < g.dim(); ++a)
      for (int b = a + 1; b < g.dim(); ++b)
        for (int c = b + 1; c < g.dim(); ++c) {
          Vec s = g.bracket(basis[a], g.bracket(basis[b], basis[c]));
          s = addVec(s, g.bracket(basis[b], g.bracket(basis[c], basis[a])));
          s = addVec(s, g.bracket(basis[c], g.bracket(basis[a], basis[b])));
          if (!isZeroVec(s)) ++failures;
        }
    CHECK(failures == 0);
  }
}

TEST_CASE("form is invariant and normalized") {
  for (const char* label : {"A2", "G2"}) {
    auto g = makeAlgebra(label);
    std::vector<Vec> basis;
    for (int i = 0; i < g.dim(); ++i) {
      Vec v(g.dim(), Rat(0));
      v[i] = 1;
      basis.push_back(v);
    }
    int failures = 0;
    for (int a = 0; a < g.dim(); ++a)
      for (int b = 0; b < g.dim(); ++b)
        for (int c = 0; c < g.dim(); ++c) {
          Rat s = g.form(g.bracket(basis[a], basis[b]), basis[c]) +
                  g.form(basis[b], g.bracket(basis[a], basis[c]));
          if (s != 0) ++failures;
        }
    CHECK(failures == 0);
    for (int k = 0; k < g.numRoots(); ++k)
      CHECK(g.form(g.basisE(k), g.basisE(g.rs.negationOf(k))) == 1);
  }
}

TEST_CASE("full pair is degenerate in the expected way") {
  auto g = makeAlgebra("A2");
  SubalgebraSpec s;
  s.kind = SubalgebraKind::Full;
  auto pair = buildPair(g, s);
  CHECK(pair.dimP() == 0);
  CHECK(pair.gammaPlus.empty());
  CHECK(pair.equalRank);
  CHECK(isZeroVec(pair.rhoP));
  CHECK(pair.rhoR == pair.restrictToHr(g.rs.rho));
}

TEST_CASE("zero subalgebra pair") {
  auto g = makeAlgebra("A1");
  SubalgebraSpec s;
  s.kind = SubalgebraKind::Zero;
  auto pair = buildPair(g, s);
  CHECK(pair.dimP() == 3);
  CHECK(pair.dimHr() == 0);
  CHECK(pair.dimHp == 1);
  CHECK(pair.delta0Plus == std::vector<int>{0});
  CHECK(pair.dimPplus == 0);
  CHECK(pair.rho0 == g.rs.rho);
}

TEST_CASE("Levi gl2 inside A2") {
  auto g = makeAlgebra("A2");
  SubalgebraSpec s;
  s.kind = SubalgebraKind::Levi;
  s.leviSimple = {0};
  auto pair = buildPair(g, s);
  CHECK(pair.dimP() == 4);
  CHECK(pair.dimHp == 0);
  CHECK(pair.delta0Plus.empty());
  CHECK(pair.dimPplus == 2);
  CHECK(pair.equalRank);
  CHECK(pair.rRootsPlus.size() == 1);
  // the two p^+ weights are the restrictions of the standard-pair roots
  std::multiset<Vec> got(pair.gammaPlus.begin(), pair.gammaPlus.end());
  std::multiset<Vec> want;
  want.insert(pair.restrictToHr(Vec{Rat(0), Rat(1)}));  // alpha2
  want.insert(pair.restrictToHr(Vec{Rat(1), Rat(1)}));  // alpha1+alpha2
  CHECK(got == want);
  // subsystem spec describing the same subalgebra gives the same shape
  SubalgebraSpec s2;
  s2.kind = SubalgebraKind::Subsystem;
  s2.subsystemSimple = {Vec{Rat(1), Rat(0)}};
  auto pair2 = buildPair(g, s2);
  CHECK(pair2.dimHr() == 2);
  CHECK(pair2.dimP() == pair.dimP());
  CHECK(pair2.gammaPlus == pair.gammaPlus);
}

TEST_CASE("principal sl2 inside A2") {
  auto g = makeAlgebra("A2");
  auto pair = buildPair(g, principalSl2(g));
  CHECK(pair.dimP() == 5);
  CHECK(pair.dimHr() == 1);
  CHECK(pair.dimHp == 1);
  CHECK(pair.dimPplus == 2);
  CHECK(pair.delta0Plus.empty());
  CHECK_FALSE(pair.equalRank);
  CHECK(pair.rRootsPlus.size() == 1);
  CHECK(addVec(pair.rhoP, pair.rhoR) == pair.restrictToHr(g.rs.rho));
  // the two halves of p' pair dually and m_p is isotropic
  for (int i : pair.mPlusIndices())
    for (int j : pair.mPlusIndices()) CHECK(g.form(pair.pBasis[i], pair.pBasis[j]) == 0);
  for (int i : pair.mMinusIndices())
    for (int j : pair.mMinusIndices()) CHECK(g.form(pair.pBasis[i], pair.pBasis[j]) == 0);
  // [r, p] stays inside p: pCoordinates reproduces each bracket exactly
  for (const Vec& x : pair.rBasis)
    for (const Vec& b : pair.pBasis) {
      Vec br = g.bracket(x, b);
      Vec c = pair.pCoordinates(br);
      Vec back(g.dim(), Rat(0));
      for (size_t t = 0; t < c.size(); ++t) back = addVec(back, scaleVec(c[t], pair.pBasis[t]));
      CHECK(back == br);
    }
}

TEST_CASE("g weight spaces split between r and p for the principal pair") {
  auto g = makeAlgebra("A2");
  auto pair = buildPair(g, principalSl2(g));
  std::map<Vec, int> gDim, pDim;
  for (int k = 0; k < g.numRoots(); ++k) {
    Vec mu = pair.restrictToHr(g.rs.roots[k]);
    if (!isZeroVec(mu)) gDim[mu]++;
  }
  for (int i = 0; i < pair.dimP(); ++i)
    if (!isZeroVec(pair.gammaOfB[i])) pDim[pair.gammaOfB[i]]++;
  // r contributes exactly one line per r-root
  std::map<Vec, int> rDim;
  for (const Vec& mu : pair.rRootsPlus) {
    rDim[mu]++;
    rDim[negVec(mu)]++;
  }
  for (const auto& [mu, d] : gDim) CHECK(d == pDim[mu] + rDim[mu]);
}

TEST_CASE("diagonal subalgebra of A1xA1") {
  auto g = makeAlgebra("A1xA1");
  auto pair = buildPair(g, diagonalA1(g));
  CHECK(pair.dimP() == 3);
  CHECK(pair.dimHr() == 1);
  CHECK(pair.dimHp == 1);
  CHECK(pair.dimPplus == 1);
  CHECK(pair.delta0Plus.empty());
}

TEST_CASE("cartan vectors") {
  auto g = makeAlgebra("A2");
  auto pair = buildPair(g, principalSl2(g));
  // nu = 0
  auto cv0 = cartanVector(pair, Vec{Rat(0), Rat(0)});
  CHECK(isZeroVec(cv0.zNu));
  // defining property (x, z_nu) = nu(x) on the coroot basis
  Vec nu{Rat(3), Rat(-1, 2)};
  auto cv = cartanVector(pair, nu);
  for (int i = 0; i < g.rank(); ++i) {
    Vec hi(g.rank(), Rat(0));
    hi[i] = 1;
    CHECK(g.form(g.embedH(hi), g.embedH(cv.zNu)) == g.evalWeight(nu, hi));
  }
  CHECK(cv.zNu == addVec(cv.xNu, cv.yNu));
  // x component lies in h_r, y component in h_p
  CHECK(inSpan(pair.hrBasis, g.embedH(cv.xNu)));
  CHECK(inSpan(pair.hpBasis, g.embedH(cv.yNu)));
  // half-sum over the ignored block restricts to zero on h_p
  CHECK(isZeroVec(cartanVector(pair, pair.rho2).yNu));
  // equal-rank pairs have no h_p component at all
  SubalgebraSpec levi;
  levi.kind = SubalgebraKind::Levi;
  levi.leviSimple = {0};
  auto eq = buildPair(g, levi);
  CHECK(isZeroVec(cartanVector(eq, nu).yNu));
}

TEST_CASE("F4 over B4 pair shape") {
  auto g = makeAlgebra("F4");
  SubalgebraSpec s;
  s.kind = SubalgebraKind::Subsystem;
  s.subsystemSimple = {Vec{Rat(0), Rat(1), Rat(2), Rat(2)}, Vec{Rat(1), Rat(0), Rat(0), Rat(0)},
                       Vec{Rat(0), Rat(1), Rat(0), Rat(0)}, Vec{Rat(0), Rat(0), Rat(1), Rat(0)}};
  auto pair = buildPair(g, s);
  CHECK(pair.subRootIdx.size() == 32);
  CHECK(pair.dimP() == 16);
  CHECK(pair.dimPplus == 8);
  CHECK(pair.equalRank);
}

TEST_CASE("invalid subalgebras rejected") {
  auto g = makeAlgebra("A2");
  SubalgebraSpec bad;
  bad.kind = SubalgebraKind::Explicit;
  bad.basis = {g.basisE(0), g.basisE(1)};  // [e1,e2] leaves the span
  CHECK_THROWS_AS(buildPair(g, bad), Error);
  SubalgebraSpec iso;
  iso.kind = SubalgebraKind::Explicit;
  iso.basis = {g.basisE(0)};  // bracket-closed but B-isotropic
  CHECK_THROWS_AS(buildPair(g, iso), Error);
}
