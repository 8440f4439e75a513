#include <bit>

#include "clifford.hpp"
#include "doctest.h"

using namespace dk;

namespace {
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

LiePair pairOf(const char* label, SubalgebraKind kind) {
  auto g = makeAlgebra(label);
  SubalgebraSpec s;
  s.kind = kind;
  return buildPair(g, s);
}

// independent product oracle working in the increasing-word basis of the
// Clifford algebra
using WordElem = std::map<std::vector<int>, Rat>;

void wordAdd(WordElem& out, const std::vector<int>& w, const Rat& c) {
  if (c == 0) return;
  auto it = out.find(w);
  if (it == out.end()) {
    out.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second == 0) out.erase(it);
}

// rewrite with v_i v_j = -v_j v_i + 2B(v_i, v_j) and v_i v_i = B(v_i, v_i)
// until the word is strictly increasing
void normalOrder(std::vector<int> w, Rat c, const Matrix& gram, WordElem& out) {
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] < w[i + 1]) continue;
    if (w[i] == w[i + 1]) {
      Rat sq = gram.at(w[i], w[i]);
      w.erase(w.begin() + i, w.begin() + i + 2);
      if (sq != 0) normalOrder(std::move(w), c * sq, gram, out);
      return;
    }
    Rat tw = 2 * gram.at(w[i], w[i + 1]);
    std::vector<int> swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    w.erase(w.begin() + i, w.begin() + i + 2);
    normalOrder(std::move(swapped), -c, gram, out);
    if (tw != 0) normalOrder(std::move(w), c * tw, gram, out);
    return;
  }
  wordAdd(out, w, c);
}

std::vector<int> maskWord(uint64_t m) {
  std::vector<int> w;
  for (int i = 0; i < 64; ++i)
    if (m & (uint64_t(1) << i)) w.push_back(i);
  return w;
}

// exterior monomial as a Clifford element: average of signed permutation words
WordElem antisymmetrize(uint64_t mask, const Matrix& gram) {
  std::vector<int> w = maskWord(mask);
  std::sort(w.begin(), w.end());
  Rat fact(1);
  for (size_t k = 2; k <= w.size(); ++k) fact *= Rat(static_cast<long>(k));
  WordElem out;
  int sign = 1;
  std::vector<int> perm = w;
  // walk all permutations in lex order, tracking the sign by inversion count
  do {
    int inv = 0;
    for (size_t a = 0; a < perm.size(); ++a)
      for (size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b]) ++inv;
    sign = (inv % 2 == 0) ? 1 : -1;
    WordElem tmp;
    normalOrder(perm, Rat(sign) / fact, gram, tmp);
    for (const auto& [ww, cc] : tmp) wordAdd(out, ww, cc);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

WordElem toWordBasis(const CliffordElement& e, const Matrix& gram) {
  WordElem out;
  for (const auto& [m, c] : e.terms) {
    WordElem mono = antisymmetrize(m, gram);
    for (const auto& [w, k] : mono) wordAdd(out, w, c * k);
  }
  return out;
}

WordElem wordProduct(const WordElem& a, const WordElem& b, const Matrix& gram) {
  WordElem out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      std::vector<int> w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      normalOrder(std::move(w), ca * cb, gram, out);
    }
  return out;
}
}  // namespace

TEST_CASE("defining relation zw + wz = 2B(z,w)") {
  auto g = makeAlgebra("A2");
  auto pair = buildPair(g, principalSl2(g));
  CliffordAlgebra ca(pair);
  for (int i = 0; i < ca.dim(); ++i)
    for (int j = 0; j < ca.dim(); ++j) {
      auto bi = CliffordElement::monomial(uint64_t(1) << i, Rat(1));
      auto bj = CliffordElement::monomial(uint64_t(1) << j, Rat(1));
      auto anti = ca.product(bi, bj) + ca.product(bj, bi);
      CHECK(anti == CliffordElement::monomial(0, 2 * ca.gram().at(i, j)));
    }
}

TEST_CASE("product matches the tensor-word oracle on all monomial pairs") {
  for (auto* label : {"A1xA1", "A2"}) {
    auto g = makeAlgebra(label);
    auto pair = buildPair(g, std::string(label) == "A2" ? principalSl2(g) : diagonalA1(g));
    CliffordAlgebra ca(pair);
    uint64_t full = (uint64_t(1) << ca.dim());
    int failures = 0;
    for (uint64_t ma = 0; ma < full; ++ma)
      for (uint64_t mb = 0; mb < full; ++mb) {
        auto got = ca.product(CliffordElement::monomial(ma, Rat(1)),
                              CliffordElement::monomial(mb, Rat(1)));
        WordElem want = wordProduct(antisymmetrize(ma, ca.gram()), antisymmetrize(mb, ca.gram()),
                                    ca.gram());
        if (toWordBasis(got, ca.gram()) != want) ++failures;
      }
    CHECK(failures == 0);
  }
}

TEST_CASE("gram pairing of dual wedge monomials") {
  auto pair = pairOf("A2", SubalgebraKind::Zero);
  CliffordAlgebra ca(pair);
  // wedge of the p^+ block against the wedge of its dual block pairs to 1
  uint64_t plus = 0, minus = 0;
  for (int i : pair.mPlusIndices()) plus |= uint64_t(1) << i;
  for (int i : pair.mMinusIndices()) minus |= uint64_t(1) << i;
  auto a = CliffordElement::monomial(plus, Rat(1));
  // the minus block is the aligned dual basis, so the pairing matrix is the
  // identity and its determinant is 1
  CHECK(ca.gramPairing(a, CliffordElement::monomial(minus, Rat(1))) == 1);
  CHECK(ca.gramPairing(a, a) == 0);  // isotropic block
  // degree-1 pairing is just B
  for (int i = 0; i < ca.dim(); ++i)
    for (int j = 0; j < ca.dim(); ++j)
      CHECK(ca.gramPairing(CliffordElement::monomial(uint64_t(1) << i, Rat(1)),
                           CliffordElement::monomial(uint64_t(1) << j, Rat(1))) == ca.gram().at(i, j));
}

TEST_CASE("cubic element satisfies its defining identity on all basis triples") {
  std::vector<LiePair> pairs;
  {
    auto g = makeAlgebra("A2");
    pairs.push_back(buildPair(g, principalSl2(g)));
    SubalgebraSpec levi;
    levi.kind = SubalgebraKind::Levi;
    levi.leviSimple = {0};
    pairs.push_back(buildPair(g, levi));
  }
  pairs.push_back(pairOf("A1", SubalgebraKind::Zero));
  for (const auto& pair : pairs) {
    CliffordAlgebra ca(pair);
    auto cubic = cubicTerm(ca);
    CHECK(cubic.v == cubic.v0 + cubic.v1);
    int failures = 0;
    for (int i = 0; i < ca.dim(); ++i)
      for (int j = i + 1; j < ca.dim(); ++j)
        for (int k = j + 1; k < ca.dim(); ++k) {
          uint64_t m = (uint64_t(1) << i) | (uint64_t(1) << j) | (uint64_t(1) << k);
          Rat lhs = Rat(-2) * ca.gramPairing(cubic.v, CliffordElement::monomial(m, Rat(1)));
          Rat rhs = pair.g.form(pair.g.bracket(pair.pBasis[i], pair.pBasis[j]), pair.pBasis[k]);
          if (lhs != rhs) ++failures;
        }
    CHECK(failures == 0);
  }
}

TEST_CASE("cubic element vanishes for the diagonal pair in A1xA1") {
  auto g = makeAlgebra("A1xA1");
  auto pair = buildPair(g, diagonalA1(g));
  CliffordAlgebra ca(pair);
  CHECK(cubicTerm(ca).v.isZero());
}

TEST_CASE("nuStar implements the adjoint action by Clifford commutator") {
  auto g = makeAlgebra("A2");
  for (auto pair : {buildPair(g, principalSl2(g)), pairOf("A1", SubalgebraKind::Zero)}) {
    CliffordAlgebra ca(pair);
    int failures = 0;
    for (const Vec& x : pair.rBasis) {
      auto nu = nuStar(ca, x);
      for (int j = 0; j < ca.dim(); ++j) {
        auto b = CliffordElement::monomial(uint64_t(1) << j, Rat(1));
        auto comm = ca.product(nu, b) - ca.product(b, nu);
        if (!(comm == ca.fromPVector(pair.g.bracket(x, pair.pBasis[j])))) ++failures;
      }
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("nuStar is a Lie algebra homomorphism") {
  auto g = makeAlgebra("A2");
  auto pair = buildPair(g, principalSl2(g));
  CliffordAlgebra ca(pair);
  for (size_t a = 0; a < pair.rBasis.size(); ++a)
    for (size_t b = a + 1; b < pair.rBasis.size(); ++b) {
      auto na = nuStar(ca, pair.rBasis[a]);
      auto nb = nuStar(ca, pair.rBasis[b]);
      auto comm = ca.product(na, nb) - ca.product(nb, na);
      CHECK(comm == nuStar(ca, pair.g.bracket(pair.rBasis[a], pair.rBasis[b])));
    }
  CHECK_THROWS_AS(nuStar(ca, pair.pBasis[0]), Error);
}

TEST_CASE("spin ideal shape and annihilation") {
  std::vector<LiePair> pairs;
  {
    auto g = makeAlgebra("A2");
    pairs.push_back(buildPair(g, principalSl2(g)));
  }
  pairs.push_back(pairOf("A1", SubalgebraKind::Zero));
  {
    auto g = makeAlgebra("A1xA1");
    pairs.push_back(buildPair(g, diagonalA1(g)));
  }
  for (const auto& pair : pairs) {
    CliffordAlgebra ca(pair);
    auto ideal = buildSpinIdeal(ca);
    int expected = pair.dimHp + static_cast<int>(pair.delta0Plus.size()) + pair.dimPplus;
    CHECK(ideal.dimL() == (1 << expected));
    auto u = CliffordElement::monomial(ideal.uMask, Rat(1));
    // every isotropic-plus generator kills u, and the ideal basis reduces to
    // unit coordinates (injectivity of the label map)
    for (int i : pair.mPlusIndices())
      CHECK(ca.product(CliffordElement::monomial(uint64_t(1) << i, Rat(1)), u).isZero());
    for (int t = 0; t < ideal.dimL(); ++t) {
      Vec c = reduceInIdeal(ca, ideal, ideal.phi[t]);
      for (int s = 0; s < ideal.dimL(); ++s) CHECK(c[s] == (s == t ? Rat(1) : Rat(0)));
    }
  }
}

TEST_CASE("nuStar acts on the ideal basis by its recorded weights") {
  auto g = makeAlgebra("A2");
  auto pair = buildPair(g, principalSl2(g));
  CliffordAlgebra ca(pair);
  auto ideal = buildSpinIdeal(ca);
  for (size_t a = 0; a < pair.hrBasis.size(); ++a) {
    Matrix m = leftActionMatrix(ca, ideal, nuStar(ca, pair.hrBasis[a]));
    for (int i = 0; i < ideal.dimL(); ++i)
      for (int j = 0; j < ideal.dimL(); ++j)
        CHECK(m.at(i, j) == (i == j ? ideal.weights[i][a] : Rat(0)));
  }
  // in particular the vacuum has weight rho_p
  CHECK(ideal.weights[0] == pair.rhoP);
}

TEST_CASE("product minus wedge drops degree by at least two") {
  auto g = makeAlgebra("A2");
  auto pair = buildPair(g, principalSl2(g));
  CliffordAlgebra ca(pair);
  uint64_t full = uint64_t(1) << ca.dim();
  int failures = 0;
  for (uint64_t ma = 0; ma < full; ++ma)
    for (uint64_t mb = 0; mb < full; ++mb) {
      auto a = CliffordElement::monomial(ma, Rat(1));
      auto b = CliffordElement::monomial(mb, Rat(1));
      auto diff = ca.product(a, b) - ca.wedge(a, b);
      if (!diff.isZero() && diff.maxDegree() > std::popcount(ma) + std::popcount(mb) - 2) ++failures;
    }
  CHECK(failures == 0);
}

TEST_CASE("cubic element commutes with the h_r and h_p quadratic elements") {
  auto g = makeAlgebra("A2");
  auto pair = buildPair(g, principalSl2(g));
  CliffordAlgebra ca(pair);
  auto cubic = cubicTerm(ca);
  for (const Vec& x : pair.hrBasis) {
    auto nu = nuStar(ca, x);
    CHECK(ca.product(nu, cubic.v) == ca.product(cubic.v, nu));
  }
  for (const Vec& y : pair.hpBasis) {
    auto sig = sigmaStar(ca, y);
    CHECK(ca.product(sig, cubic.v0) == ca.product(cubic.v0, sig));
  }
}

TEST_CASE("left multiplication by the cubic element preserves the lowered part of L") {
  auto g = makeAlgebra("A2");
  for (auto pair : {buildPair(g, principalSl2(g)), pairOf("A1", SubalgebraKind::Zero)}) {
    CliffordAlgebra ca(pair);
    auto ideal = buildSpinIdeal(ca);
    auto cubic = cubicTerm(ca);
    uint64_t minusBits = 0;
    for (int i : pair.mMinusIndices()) minusBits |= uint64_t(1) << i;
    for (int t = 0; t < ideal.dimL(); ++t) {
      if (!(ideal.labels[t] & minusBits)) continue;  // basis of L^- only
      Vec c = reduceInIdeal(ca, ideal, ca.product(cubic.v, ideal.phi[t]));
      for (int s = 0; s < ideal.dimL(); ++s)
        if (c[s] != 0) CHECK((ideal.labels[s] & minusBits) != 0);
    }
  }
}

TEST_CASE("sigmaStar acts on the vacuum by the zero-block half sum") {
  auto pair = pairOf("A1", SubalgebraKind::Zero);
  CliffordAlgebra ca(pair);
  auto ideal = buildSpinIdeal(ca);
  for (const Vec& y : pair.hpBasis) {
    auto act = leftActionMatrix(ca, ideal, sigmaStar(ca, y));
    Vec u(ideal.dimL(), Rat(0));
    u[0] = 1;
    Vec got = act.apply(u);
    Rat want = pair.g.evalWeight(pair.rho0, pair.g.hPart(y));
    CHECK(got[0] == want);
    for (int s = 1; s < ideal.dimL(); ++s) CHECK(got[s] == 0);
  }
  CHECK_THROWS_AS(sigmaStar(ca, pair.g.basisE(0)), Error);
}
