#include "rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dk {

namespace {

std::vector<std::vector<int>> simpleCartan(char series, int n) {
  auto chain = [&](std::vector<std::vector<int>>& a) {
    for (int i = 0; i + 1 < n; ++i) {
      a[i][i + 1] = -1;
      a[i + 1][i] = -1;
    }
  };
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (series) {
    case 'A':
      if (n < 1) throw Error("NotFiniteType", "A requires rank >= 1");
      chain(a);
      break;
    case 'B':
      if (n < 2) throw Error("NotFiniteType", "B requires rank >= 2");
      chain(a);
      a[n - 1][n - 2] = -2;  // last simple root short
      break;
    case 'C':
      if (n < 2) throw Error("NotFiniteType", "C requires rank >= 2");
      chain(a);
      a[n - 2][n - 1] = -2;  // last simple root long
      break;
    case 'D':
      if (n < 3) throw Error("NotFiniteType", "D requires rank >= 3");
      for (int i = 0; i + 1 < n - 1; ++i) {
        a[i][i + 1] = -1;
        a[i + 1][i] = -1;
      }
      a[n - 3][n - 1] = -1;
      a[n - 1][n - 3] = -1;
      break;
    case 'E': {
      if (n < 6 || n > 8) throw Error("NotFiniteType", "E requires rank 6..8");
      // Bourbaki numbering: chain 1-3-4-5-...-n, node 2 attached to node 4.
      auto link = [&](int i, int j) {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
      };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < n; ++i) link(i, i + 1);
      break;
    }
    case 'F':
      if (n != 4) throw Error("NotFiniteType", "F requires rank 4");
      chain(a);
      a[2][1] = -2;  // roots 3,4 short
      break;
    case 'G':
      if (n != 2) throw Error("NotFiniteType", "G requires rank 2");
      a[0][1] = -3;  // first simple root short
      a[1][0] = -1;
      break;
    default:
      throw Error("NotFiniteType", std::string("unknown series '") + series + "'");
  }
  return a;
}

}  // namespace

CartanMatrix cartanMatrixFromLabel(const std::string& label) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : label) {
    if (c == 'x' || c == 'X' || c == '+') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  if (parts.empty()) throw Error("NotFiniteType", "empty type label");

  CartanMatrix cm;
  cm.label = label;
  std::vector<std::vector<std::vector<int>>> blocks;
  int total = 0;
  for (const auto& p : parts) {
    if (p.size() < 2) throw Error("NotFiniteType", "bad type token '" + p + "'");
    char series = p[0];
    int n = 0;
    try {
      size_t used = 0;
      n = std::stoi(p.substr(1), &used);
      if (used != p.size() - 1) throw std::invalid_argument(p);
    } catch (const std::exception&) {
      throw Error("NotFiniteType", "bad type token '" + p + "'");
    }
    blocks.push_back(simpleCartan(series, n));
    total += n;
  }
  cm.entries.assign(total, std::vector<int>(total, 0));
  int off = 0;
  for (const auto& b : blocks) {
    int n = static_cast<int>(b.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cm.entries[off + i][off + j] = b[i][j];
    off += n;
  }
  cm.validate();
  return cm;
}

void CartanMatrix::validate() const {
  int n = rank();
  if (n == 0) throw Error("NotFiniteType", "rank 0");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(entries[i].size()) != n) throw Error("NotFiniteType", "not square");
    if (entries[i][i] != 2) throw Error("NotFiniteType", "diagonal entry != 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (entries[i][j] > 0) throw Error("NotFiniteType", "positive off-diagonal entry");
      if ((entries[i][j] == 0) != (entries[j][i] == 0))
        throw Error("NotFiniteType", "asymmetric zero pattern");
    }
  }
  // Symmetrizer d_i > 0 with d_i a_ij = d_j a_ji, then positive definiteness.
  std::vector<Rat> d(n, Rat(0));
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || entries[i][j] == 0) continue;
        Rat dj = d[i] * entries[i][j] / entries[j][i];
        if (d[j] == 0) {
          d[j] = dj;
          stack.push_back(j);
        } else if (d[j] != dj) {
          throw Error("NotFiniteType", "matrix is not symmetrizable");
        }
      }
    }
  }
  Matrix s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.at(i, j) = d[i] * entries[i][j];
  for (int k = 1; k <= n; ++k) {
    Matrix minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor.at(i, j) = s.at(i, j);
    if (minor.det() <= 0) throw Error("NotFiniteType", "symmetrization not positive definite");
  }
}

Rat RootSystem::inner(const Vec& a, const Vec& b) const {
  Rat s(0);
  int n = rank();
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (b[j] != 0) s += a[i] * innerForm.at(i, j) * b[j];
  }
  return s;
}

Rat RootSystem::pairCoroot(const Vec& lam, const Vec& beta) const {
  return 2 * inner(lam, beta) / inner(beta, beta);
}

int RootSystem::heightOf(const Vec& root) const {
  Rat s(0);
  for (const auto& c : root) s += c;
  if (s.get_den() != 1) throw Error("InternalInconsistency", "non-integral root height");
  return static_cast<int>(s.get_num().get_si());
}

int RootSystem::indexOfRoot(const Vec& v) const {
  for (size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == v) return static_cast<int>(i);
  return -1;
}

Vec RootSystem::simpleFromFundamental(const Vec& fw) const {
  // fw_i = <lam, alpha_i^vee>; solve C^T c = fw with C the pairing matrix.
  int n = rank();
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec alphaJ(n, Rat(0));
      alphaJ[j] = 1;
      Vec alphaI(n, Rat(0));
      alphaI[i] = 1;
      m.at(i, j) = pairCoroot(alphaJ, alphaI);
    }
  auto sol = m.solve(fw);
  if (!sol) throw Error("InternalInconsistency", "fundamental-weight conversion failed");
  return *sol;
}

Vec RootSystem::fundamentalFromSimple(const Vec& sr) const {
  int n = rank();
  Vec fw(n);
  for (int i = 0; i < n; ++i) {
    Vec alphaI(n, Rat(0));
    alphaI[i] = 1;
    fw[i] = pairCoroot(sr, alphaI);
  }
  return fw;
}

bool RootSystem::isDominantIntegral(const Vec& lam) const {
  Vec fw = fundamentalFromSimple(lam);
  for (const auto& c : fw)
    if (c < 0 || c.get_den() != 1) return false;
  return true;
}

Vec RootSystem::simpleReflection(int i, const Vec& w) const {
  Vec alphaI(rank(), Rat(0));
  alphaI[i] = 1;
  Rat c = pairCoroot(w, alphaI);
  Vec r = w;
  r[i] -= c;
  return r;
}

Vec RootSystem::antidominant(Vec w) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rank(); ++i) {
      Vec alphaI(rank(), Rat(0));
      alphaI[i] = 1;
      if (pairCoroot(w, alphaI) > 0) {
        w = simpleReflection(i, w);
        changed = true;
      }
    }
  }
  return w;
}

RootSystem buildRootSystem(const CartanMatrix& cm) {
  cm.validate();
  RootSystem rs;
  rs.cm = cm;
  int n = cm.rank();

  // Inner form from the symmetrizer, rescaled per connected component so the
  // long roots there have squared length 2.
  std::vector<Rat> d(n, Rat(0));
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = ncomp;
    d[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || cm.entries[i][j] == 0) continue;
        if (comp[j] < 0) {
          comp[j] = ncomp;
          d[j] = d[i] * cm.entries[i][j] / cm.entries[j][i];
          stack.push_back(j);
        }
      }
    }
    ++ncomp;
  }
  std::vector<Rat> maxd(ncomp, Rat(0));
  for (int i = 0; i < n; ++i) maxd[comp[i]] = std::max(maxd[comp[i]], d[i]);
  rs.innerForm = Matrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.innerForm.at(i, j) = d[i] * cm.entries[i][j] / maxd[comp[i]];

  // Closure of the simple roots under simple reflections.
  std::set<Vec> all;
  for (int i = 0; i < n; ++i) {
    Vec a(n, Rat(0));
    a[i] = 1;
    all.insert(a);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> batch(all.begin(), all.end());
    for (const auto& r : batch)
      for (int i = 0; i < n; ++i) {
        Vec s = rs.simpleReflection(i, r);
        if (all.insert(s).second) grew = true;
      }
    if (all.size() > 1000) throw Error("NotFiniteType", "root closure did not terminate");
  }

  std::vector<Vec> pos;
  for (const auto& r : all) {
    bool isPos = true;
    for (const auto& c : r)
      if (c < 0) isPos = false;
    if (isPos) pos.push_back(r);
  }
  std::sort(pos.begin(), pos.end(), [&](const Vec& a, const Vec& b) {
    int ha = rs.heightOf(a), hb = rs.heightOf(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  rs.numPositive = static_cast<int>(pos.size());
  rs.roots = pos;
  for (const auto& r : pos) rs.roots.push_back(negVec(r));
  if (rs.roots.size() != all.size())
    throw Error("InternalInconsistency", "root set is not negation-symmetric");

  rs.rho.assign(n, Rat(0));
  for (const auto& r : pos) rs.rho = addVec(rs.rho, r);
  rs.rho = scaleVec(Rat(1, 2), rs.rho);
  return rs;
}

namespace {

std::vector<int> generatorPerm(const RootSystem& rs, int i) {
  std::vector<int> perm(rs.roots.size());
  for (size_t j = 0; j < rs.roots.size(); ++j) {
    int k = rs.indexOfRoot(rs.simpleReflection(i, rs.roots[j]));
    if (k < 0) throw Error("InternalInconsistency", "reflection left the root set");
    perm[j] = k;
  }
  return perm;
}

}  // namespace

WeylGroup buildWeylGroup(const RootSystem& rs, size_t orderCap) {
  WeylGroup w;
  w.rs = rs;
  int n = rs.rank();
  std::vector<std::vector<int>> gens(n);
  for (int i = 0; i < n; ++i) gens[i] = generatorPerm(rs, i);

  std::map<std::vector<int>, int> seen;
  WeylElement id;
  id.perm.resize(rs.roots.size());
  for (size_t i = 0; i < id.perm.size(); ++i) id.perm[i] = static_cast<int>(i);
  w.elements.push_back(id);
  seen[id.perm] = 0;

  std::vector<int> level{0};
  while (!level.empty()) {
    std::vector<int> next;
    for (int idx : level) {
      for (int i = 0; i < n; ++i) {
        // right multiplication: (w s_i)(x) = w(s_i x)
        std::vector<int> perm(w.elements[idx].perm.size());
        for (size_t j = 0; j < perm.size(); ++j) perm[j] = w.elements[idx].perm[gens[i][j]];
        if (seen.count(perm)) continue;
        WeylElement e;
        e.perm = std::move(perm);
        e.word = w.elements[idx].word;
        e.word.push_back(i);
        seen[e.perm] = static_cast<int>(w.elements.size());
        next.push_back(static_cast<int>(w.elements.size()));
        w.elements.push_back(std::move(e));
        if (w.elements.size() > orderCap) throw Error("GroupTooLarge", "Weyl group order exceeds cap");
      }
    }
    // keep each length level in lexicographic word order so reported
    // representatives are deterministic and words are lex-least
    std::sort(next.begin(), next.end(),
              [&](int a, int b) { return w.elements[a].word < w.elements[b].word; });
    level = next;
  }
  std::sort(w.elements.begin(), w.elements.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.word < b.word;
  });
  return w;
}

int WeylGroup::findByPerm(const std::vector<int>& perm) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i].perm == perm) return static_cast<int>(i);
  throw Error("InternalInconsistency", "permutation not in group");
}

int WeylGroup::compose(int a, int b) const {
  std::vector<int> perm(elements[a].perm.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = elements[a].perm[elements[b].perm[i]];
  return findByPerm(perm);
}

int WeylGroup::inverseOf(int a) const {
  std::vector<int> perm(elements[a].perm.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[elements[a].perm[i]] = static_cast<int>(i);
  return findByPerm(perm);
}

Vec WeylGroup::applyToWeight(int a, const Vec& v) const {
  Vec r = v;
  const auto& word = elements[a].word;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = rs.simpleReflection(*it, r);
  return r;
}

CosetSystem cosetTransversal(const WeylGroup& w, const std::vector<int>& subRootIdx) {
  const RootSystem& rs = w.rs;
  std::set<int> sub(subRootIdx.begin(), subRootIdx.end());
  for (int i : sub) {
    if (i < 0 || i >= static_cast<int>(rs.roots.size()))
      throw Error("NotASubsystem", "root index out of range");
    if (!sub.count(rs.negationOf(i))) throw Error("NotASubsystem", "subset not closed under negation");
  }
  for (int i : sub)
    for (int j : sub) {
      Rat c = rs.pairCoroot(rs.roots[j], rs.roots[i]);
      Vec refl = subVec(rs.roots[j], scaleVec(c, rs.roots[i]));
      int k = rs.indexOfRoot(refl);
      if (k < 0 || !sub.count(k)) throw Error("NotASubsystem", "subset not reflection-closed");
    }

  CosetSystem cs;
  cs.subRoots.assign(sub.begin(), sub.end());
  for (int i : cs.subRoots)
    if (rs.isPositiveIndex(i)) cs.subPositive.push_back(i);

  for (size_t t = 0; t < w.elements.size(); ++t) {
    std::vector<int> inv(w.elements[t].perm.size());
    for (size_t i = 0; i < inv.size(); ++i) inv[w.elements[t].perm[i]] = static_cast<int>(i);
    bool ok = true;
    for (int r : cs.subPositive)
      if (!rs.isPositiveIndex(inv[r])) {
        ok = false;
        break;
      }
    if (ok) cs.transversal.push_back(static_cast<int>(t));
  }
  cs.eulerNumber = cs.transversal.size();
  return cs;
}

Vec dotAction(const WeylGroup& w, int tau, const Vec& lambda, const Vec& rhoSub) {
  return subVec(w.applyToWeight(tau, addVec(lambda, w.rs.rho)), rhoSub);
}

}  // namespace dk
