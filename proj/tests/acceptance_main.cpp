// End-to-end verification suite. Each numbered check prints one PASS/FAIL
// line; the process exits nonzero if any check fails. Everything here is
// exact rational arithmetic, no tolerances.
#include <cstdio>
#include <filesystem>
#include <set>

#include "experiment.hpp"

using namespace dk;

namespace {

int failures = 0;

void report(int n, const char* what, bool ok) {
  std::printf("%s - check %d: %s\n", ok ? "PASS" : "FAIL", n, what);
  if (!ok) ++failures;
}

LieAlgebra makeAlgebra(const char* label) {
  return buildLieAlgebra(buildRootSystem(cartanMatrixFromLabel(label)));
}

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

LiePair leviGl2(const LieAlgebra& g) {
  SubalgebraSpec s;
  s.kind = SubalgebraKind::Levi;
  s.leviSimple = {0};
  return buildPair(g, s);
}

// lambda with (lambda+rho) vanishing on h_p, built from a target h_r value mu
Vec admissibleLambda(const LiePair& pair, const Vec& mu) {
  const LieAlgebra& g = pair.g;
  Vec z(g.dim(), Rat(0));
  Vec c = pair.hrGramInv.apply(mu);
  for (int a = 0; a < pair.dimHr(); ++a) z = addVec(z, scaleVec(c[a], pair.hrBasis[a]));
  Vec onCoroots(g.rank());
  for (int i = 0; i < g.rank(); ++i) {
    Vec hi(g.rank(), Rat(0));
    hi[i] = 1;
    onCoroots[i] = g.form(g.embedH(hi), z);
  }
  return subVec(g.rs.simpleFromFundamental(onCoroots), g.rs.rho);
}

void check1_multiplets() {
  auto g = makeAlgebra("A2");
  auto pair = leviGl2(g);
  bool ok = true;
  for (Vec lambda : {Vec{Rat(0), Rat(0)}, Vec{Rat(1), Rat(1)},
                     g.rs.simpleFromFundamental(Vec{Rat(1), Rat(0)})}) {
    auto rep = multipletCheck(pair, lambda);
    ok = ok && rep.match && rep.multiplicityFree && rep.kerEqualsKerSquare &&
         rep.eulerNumber == 3 && rep.cohomologySide.size() == 3;
  }
  report(1, "cohomology multiplets match the coset dot-action orbit, multiplicity one, d = 3",
         ok);
}

void check2_squareIdentity() {
  bool ok = true;
  auto g = makeAlgebra("A2");
  {
    DiracComplex cx(leviGl2(g), buildIrrep(g, Vec{Rat(1), Rat(1)}));
    ok = ok && verifySquareIdentity(cx).match;
  }
  {
    auto pair = buildPair(g, principalSl2(g));
    auto mod = buildIrrep(g, Vec{Rat(1), Rat(1)});
    DiracComplex cx(pair, mod);
    ok = ok && mod.dim() * cx.dimL() <= 1000 && verifySquareIdentity(cx).match;
  }
  {
    auto g2 = makeAlgebra("A1xA1");
    DiracComplex cx(buildPair(g2, diagonalA1(g2)), buildIrrep(g2, Vec{Rat(1, 2), Rat(1, 2)}));
    ok = ok && verifySquareIdentity(cx).match;
  }
  report(2, "square of D is Casimir difference plus the predicted scalar on all test pairs", ok);
}

bool cubicIdentityHolds(const LiePair& pair) {
  CliffordAlgebra ca(pair);
  CliffordElement v = cubicTerm(ca).v;
  int n = pair.dimP();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Rat lhs = pair.g.form(pair.g.bracket(pair.pBasis[i], pair.pBasis[j]), pair.pBasis[k]);
        CliffordElement wedge =
            CliffordElement::monomial((uint64_t(1) << i) | (uint64_t(1) << j) | (uint64_t(1) << k), Rat(1));
        if (lhs != Rat(-2) * ca.gramPairing(v, wedge)) return false;
      }
  return true;
}

void check3_cubicTerm() {
  bool ok = true;
  auto g = makeAlgebra("A2");
  ok = ok && cubicIdentityHolds(leviGl2(g));
  ok = ok && cubicIdentityHolds(buildPair(g, principalSl2(g)));
  {
    SubalgebraSpec s;
    s.kind = SubalgebraKind::Levi;  // empty: torus subalgebra
    ok = ok && cubicIdentityHolds(buildPair(g, s));
  }
  {
    auto g1 = makeAlgebra("A1");
    SubalgebraSpec s;
    s.kind = SubalgebraKind::Zero;
    ok = ok && cubicIdentityHolds(buildPair(g1, s));
  }
  {
    auto g2 = makeAlgebra("A1xA1");
    auto pair = buildPair(g2, diagonalA1(g2));
    ok = ok && cubicIdentityHolds(pair);
    CliffordAlgebra ca(pair);
    ok = ok && cubicTerm(ca).v.terms.empty();  // symmetric pair: cubic term vanishes
  }
  report(3, "cubic term satisfies its defining pairing identity on all basis triples", ok);
}

void check4_cocycle() {
  auto g = makeAlgebra("A2");
  auto pair = buildPair(g, principalSl2(g));
  bool ok = true;
  std::vector<Vec> lambdas;
  for (int k = 1; k <= 9; ++k) lambdas.push_back(Vec{Rat(k, 3), Rat(-k, 5)});
  lambdas.push_back(admissibleLambda(pair, Vec{Rat(2)}));
  int forced = 0;
  for (const Vec& lambda : lambdas) {
    DiracComplex cx(pair, buildTruncatedVerma(g, lambda, 4));
    for (uint64_t a = 0; a < (uint64_t(1) << pair.dimHp); ++a) {
      auto rep = cocycleCheck(cx, a);
      ok = ok && rep.primePart && rep.zeroPart && rep.onePart && rep.total &&
           rep.vanishes == rep.forcedZero;
      if (a == 0 && rep.forcedZero) ++forced;
    }
  }
  ok = ok && forced == 1;
  report(4, "cocycle formula holds for 10 weights, vanishing exactly at the admissible one", ok);
}

void check5_nonvanishing() {
  bool ok = true;
  {
    auto g = makeAlgebra("A1");
    SubalgebraSpec s;
    s.kind = SubalgebraKind::Zero;
    auto pair = buildPair(g, s);
    auto rep = nonvanishingCheck(pair, negVec(g.rs.rho), 6);
    ok = ok && rep.lambdaAdmissible && rep.kernelPart && rep.stable && rep.dimE == 2 &&
         rep.checkedDepth >= 5;
  }
  {
    auto g = makeAlgebra("A2");
    auto pair = buildPair(g, principalSl2(g));
    auto rep = nonvanishingCheck(pair, admissibleLambda(pair, Vec{Rat(1, 2)}), 4);
    ok = ok && rep.lambdaAdmissible && rep.kernelPart && rep.stable && rep.dimE == 2 &&
         rep.checkedDepth >= 3;
  }
  report(5, "highest-weight spinor space lies in the kernel, with stability to depth N-1", ok);
}

void check6_hcDiagram() {
  auto g = makeAlgebra("A2");
  bool ok = true;
  for (const auto& pair : {leviGl2(g), buildPair(g, principalSl2(g))}) {
    auto rep = harishChandraDiagram(pair, 20);
    ok = ok && rep.samples.size() >= 20 && rep.allMatch;
  }
  auto pair = leviGl2(g);
  for (Vec lambda : {Vec{Rat(0), Rat(0)}, Vec{Rat(1), Rat(1)}}) {
    DiracComplex cx(pair, buildIrrep(g, lambda));
    auto coh = diracCohomology(cx);
    ok = ok && hcOperatorIdentity(cx, coh);
  }
  report(6, "Casimir transfer diagram commutes on 20+ samples and as operators on cohomology",
         ok);
}

void check7_euler() {
  bool ok = true;
  {
    auto g = makeAlgebra("F4");
    WeylGroup w = buildWeylGroup(g.rs);
    ok = ok && w.order() == 1152;
    SubalgebraSpec s;
    s.kind = SubalgebraKind::Subsystem;
    s.subsystemSimple = {Vec{Rat(0), Rat(1), Rat(2), Rat(2)}, Vec{Rat(1), Rat(0), Rat(0), Rat(0)},
                         Vec{Rat(0), Rat(1), Rat(0), Rat(0)}, Vec{Rat(0), Rat(0), Rat(1), Rat(0)}};
    auto pair = buildPair(g, s);
    auto cs = cosetTransversal(w, pair.subRootIdx);
    ok = ok && cs.eulerNumber == 3;
  }
  {
    auto g = makeAlgebra("A2");
    auto pair = leviGl2(g);
    WeylGroup w = buildWeylGroup(g.rs);
    ok = ok && cosetTransversal(w, pair.subRootIdx).eulerNumber == 3;
  }
  report(7, "coset numbers: 3 for B4 inside F4 (|W| = 1152) and for A1 inside A2", ok);
}

bool spinIdealSound(const LiePair& pair) {
  CliffordAlgebra ca(pair);
  SpinIdeal ideal = buildSpinIdeal(ca);
  Int expect = Int(1) << (pair.dimHp + static_cast<int>(pair.delta0Plus.size()) + pair.dimPplus);
  if (Int(ideal.dimL()) != expect) return false;
  // injectivity of a -> a u on the exterior algebra of h_p: images of the
  // 2^{dim h_p} basis monomials stay linearly independent in L
  std::vector<Vec> images;
  for (uint64_t a = 0; a < (uint64_t(1) << pair.dimHp); ++a) {
    CliffordElement au = ca.product(CliffordElement::monomial(a, Rat(1)), CliffordElement::monomial(ideal.uMask, Rat(1)));
    images.push_back(reduceInIdeal(ca, ideal, au));
  }
  Matrix m = Matrix::fromColumns(images, ideal.dimL());
  if (m.rank() != images.size()) return false;
  // every element of the isotropic half annihilates u
  for (int i : pair.mPlusIndices()) {
    CliffordElement zu =
        ca.product(CliffordElement::monomial(uint64_t(1) << i, Rat(1)), CliffordElement::monomial(ideal.uMask, Rat(1)));
    if (!isZeroVec(reduceInIdeal(ca, ideal, zu))) return false;
  }
  return true;
}

void check8_spinIdeal() {
  bool ok = true;
  auto g = makeAlgebra("A2");
  ok = ok && spinIdealSound(leviGl2(g));
  ok = ok && spinIdealSound(buildPair(g, principalSl2(g)));
  {
    auto g1 = makeAlgebra("A1");
    SubalgebraSpec s;
    s.kind = SubalgebraKind::Zero;
    ok = ok && spinIdealSound(buildPair(g1, s));
  }
  {
    auto g2 = makeAlgebra("A1xA1");
    ok = ok && spinIdealSound(buildPair(g2, diagonalA1(g2)));
  }
  report(8, "spinor space has dimension 2^(dim h_p + |Delta0+| + dim p+), with exact kernel", ok);
}

void check9_reports() {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "dirac_kit_acceptance";
  fs::remove_all(dir);
  SessionOptions opts;
  opts.cacheDir = (dir / "cache").string();
  auto cfg = parseConfigText(R"({
    "algebra": "A2",
    "subalgebra": {"kind": "levi", "simple": [0]},
    "lambda": {"basis": "fundamental", "coords": [1, 0]},
    "command": "multiplets"
  })");
  auto r1 = runExperiment(cfg, opts);
  auto r2 = runExperiment(cfg, opts);
  bool ok = r1.status == RunStatus::Pass && r2.status == RunStatus::Pass &&
            canonicalReport(r1.report) == canonicalReport(r2.report) &&
            r1.report["meta"]["cacheHits"] == 0 && r2.report["meta"]["cacheHits"] == 1;
  fs::remove_all(dir);
  report(9, "identical configs give byte-identical reports, second run served from cache", ok);
}

}  // namespace

int main() {
  check1_multiplets();
  check2_squareIdentity();
  check3_cubicTerm();
  check4_cocycle();
  check5_nonvanishing();
  check6_hcDiagram();
  check7_euler();
  check8_spinIdeal();
  check9_reports();
  std::printf("%s (%d failure%s)\n", failures == 0 ? "ALL CHECKS PASSED" : "SUITE FAILED",
              failures, failures == 1 ? "" : "s");
  return failures == 0 ? 0 : 1;
}
