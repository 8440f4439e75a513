#include "repmod.hpp"

#include <algorithm>
#include <map>

namespace dk {

namespace {

// PBW monomial: exponents over the positive roots in RootSystem order,
// meaning f_{beta_0}^{k_0} f_{beta_1}^{k_1} ... applied to the highest
// weight vector
using PbwMono = std::vector<int>;
using VermaVec = std::map<PbwMono, Rat>;

void vvAdd(VermaVec& out, const PbwMono& m, const Rat& c) {
  if (c == 0) return;
  auto it = out.find(m);
  if (it == out.end()) {
    out.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) out.erase(it);
}

/// Exact action of g on the height-truncated Verma module; drops (and flags)
/// anything falling below the height cap.
class VermaEngine {
 public:
  VermaEngine(const LieAlgebra& g, Vec lambda, int depth)
      : g_(g), lambda_(std::move(lambda)), depth_(depth) {
    for (int j = 0; j < g.rs.numPositive; ++j) posHeight_.push_back(g.rs.heightOf(g.rs.roots[j]));
    buildOmegaScales();
  }

  bool leaked = false;

  int heightMono(const PbwMono& m) const {
    int h = 0;
    for (size_t j = 0; j < m.size(); ++j) h += m[j] * posHeight_[j];
    return h;
  }

  Vec weightDrop(const PbwMono& m) const {
    Vec beta(g_.rank(), Rat(0));
    for (size_t j = 0; j < m.size(); ++j)
      if (m[j] > 0) beta = addVec(beta, scaleVec(Rat(m[j]), g_.rs.roots[j]));
    return beta;
  }

  // out += c * x_{gIdx} . m
  void actBasis(int gIdx, const PbwMono& m, const Rat& c, VermaVec& out) {
    int j = firstFactor(m);
    if (j < 0) {
      if (gIdx < g_.rank()) {
        Vec hi(g_.rank(), Rat(0));
        hi[gIdx] = 1;
        vvAdd(out, m, c * g_.evalWeight(lambda_, hi));
        return;
      }
      int rootIdx = gIdx - g_.rank();
      if (g_.rs.isPositiveIndex(rootIdx)) return;  // n kills the highest vector
      leftMulF(rootIdx - g_.rs.numPositive, m, c, out);
      return;
    }
    PbwMono rest = m;
    rest[j] -= 1;
    // x f_j = [x, f_j] + f_j x
    Vec xe(g_.dim(), Rat(0)), fj(g_.dim(), Rat(0));
    xe[gIdx] = 1;
    fj[g_.eIndex(j + g_.rs.numPositive)] = 1;
    Vec br = g_.bracket(xe, fj);
    for (int k = 0; k < g_.dim(); ++k)
      if (br[k] != 0) actBasis(k, rest, c * br[k], out);
    VermaVec tail;
    actBasis(gIdx, rest, c, tail);
    for (const auto& [m2, c2] : tail) leftMulF(j, m2, c2, out);
  }

  // out += c * f_{beta_j} . m, restoring PBW order
  void leftMulF(int j, const PbwMono& m, const Rat& c, VermaVec& out) {
    int i = firstFactor(m);
    if (i < 0 || i >= j) {
      PbwMono m2 = m;
      m2[j] += 1;
      if (heightMono(m2) > depth_) {
        leaked = true;
        return;
      }
      vvAdd(out, m2, c);
      return;
    }
    PbwMono rest = m;
    rest[i] -= 1;
    // f_j f_i = f_i f_j + [f_j, f_i]
    VermaVec tail;
    leftMulF(j, rest, c, tail);
    for (const auto& [m2, c2] : tail) leftMulF(i, m2, c2, out);
    Vec fj(g_.dim(), Rat(0)), fi(g_.dim(), Rat(0));
    fj[g_.eIndex(j + g_.rs.numPositive)] = 1;
    fi[g_.eIndex(i + g_.rs.numPositive)] = 1;
    Vec br = g_.bracket(fj, fi);
    for (int k = g_.rank(); k < g_.dim(); ++k)
      if (br[k] != 0) {
        int rootIdx = k - g_.rank();
        if (g_.rs.isPositiveIndex(rootIdx))
          throw Error("InternalInconsistency", "lowering bracket produced a raising operator");
        leftMulF(rootIdx - g_.rs.numPositive, rest, c * br[k], out);
      }
  }

  // <f_A v, f_B v>: coefficient of v in omega(f_A) applied to f_B v, where
  // omega is the transpose antiautomorphism (identity on h, e_i <-> f_i)
  Rat shapovalov(const PbwMono& a, const PbwMono& b) {
    VermaVec cur;
    cur.emplace(b, Rat(1));
    Rat scale(1);
    for (int j = 0; j < g_.rs.numPositive; ++j)
      for (int rep = 0; rep < a[j]; ++rep) {
        scale /= omegaScale_[j];
        VermaVec next;
        for (const auto& [m, c] : cur) actBasis(g_.eIndex(j), m, c, next);
        cur = std::move(next);
      }
    PbwMono empty(g_.rs.numPositive, 0);
    auto it = cur.find(empty);
    return it == cur.end() ? Rat(0) : scale * it->second;
  }

 private:
  // omega(e_gamma) = s_gamma e_{-gamma}: s = 1 on simple roots, and the
  // antihomomorphism property fixes s on every sum of positive roots
  void buildOmegaScales() {
    const auto& rs = g_.rs;
    omegaScale_.assign(rs.numPositive, Rat(0));
    auto structConst = [&](int ra, int rb, int rc) {
      Vec ea(g_.dim(), Rat(0)), eb(g_.dim(), Rat(0));
      ea[g_.eIndex(ra)] = 1;
      eb[g_.eIndex(rb)] = 1;
      return g_.bracket(ea, eb)[g_.eIndex(rc)];
    };
    for (int j = 0; j < rs.numPositive; ++j) {
      if (posHeight_[j] == 1) {
        omegaScale_[j] = 1;
        continue;
      }
      bool found = false;
      for (int a = 0; a < rs.numPositive; ++a) {
        Vec diff = subVec(rs.roots[j], rs.roots[a]);
        int b = rs.indexOfRoot(diff);
        if (b < 0 || b >= rs.numPositive) continue;
        Rat npp = structConst(a, b, j);
        if (npp == 0) continue;
        Rat nmm = structConst(b + rs.numPositive, a + rs.numPositive, j + rs.numPositive);
        Rat s = omegaScale_[a] * omegaScale_[b] * nmm / npp;
        if (found && s != omegaScale_[j])
          throw Error("InternalInconsistency", "transpose scalars disagree across decompositions");
        omegaScale_[j] = s;
        found = true;
      }
      if (!found) throw Error("InternalInconsistency", "positive root with no decomposition");
    }
  }

  static int firstFactor(const PbwMono& m) {
    for (size_t j = 0; j < m.size(); ++j)
      if (m[j] > 0) return static_cast<int>(j);
    return -1;
  }

  const LieAlgebra& g_;
  Vec lambda_;
  int depth_;
  std::vector<int> posHeight_;
  std::vector<Rat> omegaScale_;
};

struct WeightGroup {
  Vec beta;                      // weight drop in simple-root coordinates
  int height = 0;
  std::vector<PbwMono> monos;    // deterministic order
  std::map<PbwMono, int> index;
  Matrix gramS;                  // Shapovalov form
  std::vector<Vec> radical;
  std::vector<size_t> repCols;   // monomials representing the quotient basis
  Matrix gramReps;               // gramS restricted to repCols
  int firstGlobal = 0;           // index of first quotient basis vector

  // quotient coordinates of a vector over `monos`: solve S_reps c = S x
  Vec project(const Vec& x) const {
    if (repCols.empty()) return Vec();
    Vec rhs = gramS.apply(x);
    auto c = gramReps.solve(rhs);
    if (!c) throw Error("InternalInconsistency", "quotient projection failed");
    return *c;
  }
};

void enumerateMonos(const VermaEngine& eng, int numPositive, int depth, PbwMono& cur, int fromRoot,
                    std::vector<PbwMono>& out) {
  out.push_back(cur);
  for (int j = fromRoot; j < numPositive; ++j) {
    cur[j] += 1;
    if (eng.heightMono(cur) <= depth) enumerateMonos(eng, numPositive, depth, cur, j, out);
    cur[j] -= 1;
  }
}

}  // namespace

Vec WeightModule::act(const Vec& x, const Vec& v) const {
  if (anyLeak(x, v)) throw Error("DepthLeak", "action depends on truncated vectors");
  Vec out(dim(), Rat(0));
  for (int i = 0; i < g.dim(); ++i)
    if (x[i] != 0) out = addVec(out, scaleVec(x[i], action[i].apply(v)));
  return out;
}

Matrix WeightModule::actionMatrix(const Vec& x) const {
  Matrix out(dim(), dim());
  for (int i = 0; i < g.dim(); ++i) {
    if (x[i] == 0) continue;
    for (int b = 0; b < dim(); ++b)
      if (leaky[i][b]) throw Error("DepthLeak", "matrix column depends on truncated vectors");
    out = out + action[i].scaled(x[i]);
  }
  return out;
}

bool WeightModule::anyLeak(const Vec& x, const Vec& v) const {
  for (int i = 0; i < g.dim(); ++i) {
    if (x[i] == 0) continue;
    for (int b = 0; b < dim(); ++b)
      if (v[b] != 0 && leaky[i][b]) return true;
  }
  return false;
}

Int weylDimension(const RootSystem& rs, const Vec& lambda) {
  if (!rs.isDominantIntegral(lambda)) throw Error("NotDominantIntegral", "weylDimension");
  Rat q(1);
  Vec shifted = addVec(lambda, rs.rho);
  for (int j = 0; j < rs.numPositive; ++j)
    q *= rs.inner(shifted, rs.roots[j]) / rs.inner(rs.rho, rs.roots[j]);
  q.canonicalize();
  if (q.get_den() != 1) throw Error("InternalInconsistency", "Weyl dimension is not an integer");
  return q.get_num();
}

WeightModule buildTruncatedVerma(const LieAlgebra& g, const Vec& lambdaIn, int depth) {
  if (depth < 1) throw Error("BadDepth", "truncation depth must be at least 1");
  Vec lambda = canonVec(lambdaIn);
  WeightModule mod;
  mod.g = g;
  mod.lambda = lambda;
  mod.kind = ModuleKind::TruncatedVerma;
  mod.depth = depth;

  VermaEngine eng(g, lambda, depth);
  std::vector<PbwMono> all;
  PbwMono cur(g.rs.numPositive, 0);
  enumerateMonos(eng, g.rs.numPositive, depth, cur, 0, all);

  std::map<Vec, WeightGroup> groups;
  for (const auto& m : all) {
    Vec beta = eng.weightDrop(m);
    auto& grp = groups[beta];
    grp.beta = beta;
    grp.height = eng.heightMono(m);
    grp.monos.push_back(m);
  }
  for (auto& [beta, grp] : groups) {
    std::sort(grp.monos.begin(), grp.monos.end());
    for (size_t t = 0; t < grp.monos.size(); ++t) grp.index[grp.monos[t]] = static_cast<int>(t);
    size_t n = grp.monos.size();
    grp.gramS = Matrix(n, n);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) grp.gramS.at(a, b) = eng.shapovalov(grp.monos[a], grp.monos[b]);
    if (!(grp.gramS == grp.gramS.transpose()))
      throw Error("InternalInconsistency", "Shapovalov form is not symmetric");
    grp.radical = grp.gramS.nullspace();
    Matrix rr = grp.gramS;
    grp.repCols = rr.rrefInPlace();
    grp.gramReps = Matrix(n, grp.repCols.size());
    for (size_t a = 0; a < n; ++a)
      for (size_t t = 0; t < grp.repCols.size(); ++t)
        grp.gramReps.at(a, t) = grp.gramS.at(a, grp.repCols[t]);
  }

  // global quotient basis, ordered by (height, weight drop)
  std::vector<std::pair<Vec, WeightGroup*>> ordered;
  for (auto& [beta, grp] : groups) ordered.push_back({beta, &grp});
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.second->height != b.second->height) return a.second->height < b.second->height;
    return a.first < b.first;
  });
  int total = 0;
  for (auto& [beta, grp] : ordered) {
    grp->firstGlobal = total;
    total += static_cast<int>(grp->repCols.size());
    for (size_t t = 0; t < grp->repCols.size(); ++t) {
      mod.weights.push_back(subVec(lambda, beta));
      mod.depthOf.push_back(grp->height);
    }
  }

  auto projectInto = [&](const VermaVec& vv, Vec& col) {
    std::map<Vec, Vec> byGroup;
    for (const auto& [m, c] : vv) {
      Vec beta = eng.weightDrop(m);
      auto& grp = groups.at(beta);
      auto it = byGroup.find(beta);
      if (it == byGroup.end())
        it = byGroup.emplace(beta, Vec(grp.monos.size(), Rat(0))).first;
      it->second[grp.index.at(m)] += c;
    }
    for (const auto& [beta, x] : byGroup) {
      const auto& grp = groups.at(beta);
      Vec q = grp.project(x);
      for (size_t t = 0; t < q.size(); ++t) col[grp.firstGlobal + static_cast<int>(t)] += q[t];
    }
  };

  mod.action.assign(g.dim(), Matrix(total, total));
  mod.leaky.assign(g.dim(), std::vector<char>(total, 0));
  for (auto& [beta, grp] : ordered) {
    for (size_t t = 0; t < grp->repCols.size(); ++t) {
      const PbwMono& m = grp->monos[grp->repCols[t]];
      int col = grp->firstGlobal + static_cast<int>(t);
      for (int gi = 0; gi < g.dim(); ++gi) {
        eng.leaked = false;
        VermaVec out;
        eng.actBasis(gi, m, Rat(1), out);
        Vec column(total, Rat(0));
        projectInto(out, column);
        for (int rr = 0; rr < total; ++rr) mod.action[gi].at(rr, col) = column[rr];
        mod.leaky[gi][col] = eng.leaked ? 1 : 0;
      }
    }
  }

  // the radical must be a submodule: simple raising/lowering maps radical
  // vectors back into the radical (zero in the quotient)
  for (auto& [beta, grp] : ordered)
    for (const Vec& rad : grp->radical)
      for (int s = 0; s < g.rank(); ++s)
        for (int rootIdx : {s, s + g.rs.numPositive}) {
          eng.leaked = false;
          VermaVec out;
          for (size_t a = 0; a < grp->monos.size(); ++a)
            if (rad[a] != 0) eng.actBasis(g.eIndex(rootIdx), grp->monos[a], rad[a], out);
          if (eng.leaked) continue;
          Vec column(total, Rat(0));
          projectInto(out, column);
          if (!isZeroVec(column))
            throw Error("InternalInconsistency", "Shapovalov radical is not a submodule");
        }

  return mod;
}

WeightModule buildIrrep(const LieAlgebra& g, const Vec& lambdaIn, const Int& dimCap) {
  Vec lambda = canonVec(lambdaIn);
  if (!g.rs.isDominantIntegral(lambda)) throw Error("NotDominantIntegral", "buildIrrep");
  Int wd = weylDimension(g.rs, lambda);
  if (wd > dimCap) throw Error("DimensionCapExceeded", "predicted dimension " + wd.get_str());
  Vec lowest = g.rs.antidominant(lambda);
  Vec drop = subVec(lambda, lowest);
  Rat h(0);
  for (const Rat& c : drop) h += c;
  h.canonicalize();
  if (h.get_den() != 1 || h < 0)
    throw Error("InternalInconsistency", "weight drop to the lowest weight is not a root sum");
  int maxDrop = static_cast<int>(h.get_num().get_si());
  int maxRootHeight = g.rs.heightOf(g.rs.roots[g.rs.numPositive - 1]);
  // build past the lowest weight by a full root height: every one-step
  // lowering from a surviving vector then lands inside the enumerated range,
  // and anything deeper sits in weight spaces that are entirely radical
  WeightModule mod = buildTruncatedVerma(g, lambda, maxDrop + maxRootHeight);
  if (Int(mod.dim()) != wd)
    throw Error("InternalInconsistency", "irreducible quotient missed the Weyl dimension");
  for (int b = 0; b < mod.dim(); ++b)
    if (mod.depthOf[b] > maxDrop)
      throw Error("InternalInconsistency", "irreducible quotient survives past the lowest weight");
  // with the widened range no surviving column can reach the cutoff
  for (const auto& row : mod.leaky)
    for (char c : row)
      if (c) throw Error("InternalInconsistency", "finite irreducible flagged a depth leak");
  mod.kind = ModuleKind::FiniteIrreducible;
  return mod;
}

Int weylDimensionSub(const LiePair& pair, const Vec& mu) {
  Rat q(1);
  Vec shifted = addVec(mu, pair.rhoR);
  for (const Vec& beta : pair.rRootsPlus) q *= pair.hrInner(shifted, beta) / pair.hrInner(pair.rhoR, beta);
  q.canonicalize();
  if (q.get_den() != 1 || q <= 0)
    throw Error("NotSemisimpleAction", "sub-dimension formula is not a positive integer");
  return q.get_num();
}

RModuleDecomposition decomposeUnderR(const LiePair& pair, int dim, const std::vector<Matrix>& hrAct,
                                     const std::vector<Matrix>& nrAct,
                                     const std::vector<Vec>& candidateWeights) {
  RModuleDecomposition out;
  if (pair.dimHr() == 0) {
    out.constituents.push_back({Vec(), dim});
    for (int i = 0; i < dim; ++i) {
      Vec v(dim, Rat(0));
      v[i] = 1;
      out.highestVectors.push_back(v);
    }
    return out;
  }
  std::vector<Vec> cands = candidateWeights;
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  int covered = 0;
  Int dimCheck(0);
  for (const Vec& mu : cands) {
    // joint eigenspace of the h_r action
    Matrix stack(hrAct.size() * dim, dim);
    for (size_t a = 0; a < hrAct.size(); ++a)
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          stack.at(a * dim + i, j) = hrAct[a].at(i, j) - (i == j ? mu[a] : Rat(0));
    std::vector<Vec> eig = stack.nullspace();
    if (eig.empty()) continue;
    covered += static_cast<int>(eig.size());
    // highest vectors: combinations killed by every n_r generator
    Matrix killed(nrAct.size() * dim, eig.size());
    for (size_t t = 0; t < nrAct.size(); ++t)
      for (size_t s = 0; s < eig.size(); ++s) {
        Vec img = nrAct[t].apply(eig[s]);
        for (int i = 0; i < dim; ++i) killed.at(t * dim + i, s) = img[i];
      }
    std::vector<Vec> high = nrAct.empty() ? std::vector<Vec>() : killed.nullspace();
    if (nrAct.empty())
      for (size_t s = 0; s < eig.size(); ++s) {
        Vec unit(eig.size(), Rat(0));
        unit[s] = 1;
        high.push_back(unit);
      }
    if (high.empty()) continue;
    out.constituents.push_back({mu, static_cast<int>(high.size())});
    for (const Vec& c : high) {
      Vec v(dim, Rat(0));
      for (size_t s = 0; s < eig.size(); ++s) v = addVec(v, scaleVec(c[s], eig[s]));
      out.highestVectors.push_back(v);
    }
    dimCheck += Int(static_cast<long>(high.size())) * weylDimensionSub(pair, mu);
  }
  if (covered != dim)
    throw Error("NotSemisimpleAction", "candidate weights do not exhaust the space");
  if (dimCheck != Int(static_cast<long>(dim)))
    throw Error("NotSemisimpleAction", "constituent dimensions do not add up");
  return out;
}

}  // namespace dk
