#include "experiment.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace dk {

using nlohmann::json;

const char* const kConventionVersion = "1";

namespace {

json vecJson(const Vec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(ratStr(x));
  return a;
}

Rat ratFromJson(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parseRat(j.get<std::string>());
  throw Error("ConfigError", "expected a rational (integer or string), got " + j.dump());
}

Vec vecFromJson(const json& j) {
  if (!j.is_array()) throw Error("ConfigError", "expected an array of rationals");
  Vec v;
  for (const auto& x : j) v.push_back(ratFromJson(x));
  return v;
}

void rejectUnknown(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (item.key() == a) ok = true;
    if (!ok) throw Error("ConfigError", "unknown field '" + item.key() + "' in " + where);
  }
}

SubalgebraSpec parseSubalgebra(const json& j) {
  if (!j.is_object()) throw Error("ConfigError", "subalgebra must be an object");
  SubalgebraSpec s;
  std::string kind = j.value("kind", std::string());
  if (kind == "full") {
    rejectUnknown(j, {"kind"}, "subalgebra");
    s.kind = SubalgebraKind::Full;
  } else if (kind == "zero") {
    rejectUnknown(j, {"kind"}, "subalgebra");
    s.kind = SubalgebraKind::Zero;
  } else if (kind == "levi") {
    rejectUnknown(j, {"kind", "simple"}, "subalgebra");
    s.kind = SubalgebraKind::Levi;
    for (const auto& x : j.value("simple", json::array())) s.leviSimple.push_back(x.get<int>());
  } else if (kind == "subsystem" || kind == "equal-rank-subsystem") {
    rejectUnknown(j, {"kind", "simple"}, "subalgebra");
    s.kind = SubalgebraKind::Subsystem;
    if (!j.contains("simple")) throw Error("ConfigError", "subsystem subalgebra needs 'simple'");
    for (const auto& row : j.at("simple")) s.subsystemSimple.push_back(vecFromJson(row));
  } else if (kind == "explicit") {
    rejectUnknown(j, {"kind", "basis"}, "subalgebra");
    s.kind = SubalgebraKind::Explicit;
    if (!j.contains("basis")) throw Error("ConfigError", "explicit subalgebra needs 'basis'");
    for (const auto& row : j.at("basis")) s.basis.push_back(vecFromJson(row));
  } else {
    throw Error("ConfigError", "subalgebra kind must be one of full/zero/levi/subsystem/explicit");
  }
  return s;
}

json subalgebraJson(const SubalgebraSpec& s) {
  json j;
  switch (s.kind) {
    case SubalgebraKind::Full:
      j["kind"] = "full";
      break;
    case SubalgebraKind::Zero:
      j["kind"] = "zero";
      break;
    case SubalgebraKind::Levi: {
      j["kind"] = "levi";
      j["simple"] = s.leviSimple;
      break;
    }
    case SubalgebraKind::Subsystem: {
      j["kind"] = "subsystem";
      json rows = json::array();
      for (const Vec& v : s.subsystemSimple) rows.push_back(vecJson(v));
      j["simple"] = rows;
      break;
    }
    case SubalgebraKind::Explicit: {
      j["kind"] = "explicit";
      json rows = json::array();
      for (const Vec& v : s.basis) rows.push_back(vecJson(v));
      j["basis"] = rows;
      break;
    }
  }
  return j;
}

const std::initializer_list<const char*> kCommands = {
    "multiplets",    "cohomology",  "cocycle",      "square-identity",
    "hc-diagram",    "nonvanishing", "describe-pair"};

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// Simple r-roots: positive r-roots that are not a sum of two positives.
std::vector<Vec> simpleRRoots(const LiePair& pair) {
  std::vector<Vec> out;
  for (const Vec& beta : pair.rRootsPlus) {
    bool decomposable = false;
    for (const Vec& a : pair.rRootsPlus)
      for (const Vec& b : pair.rRootsPlus)
        if (addVec(a, b) == beta) decomposable = true;
    if (!decomposable) out.push_back(beta);
  }
  return out;
}

/// mu as coroot pairings against the simple r-roots; empty when r has no roots.
Vec rFundamentalCoords(const LiePair& pair, const std::vector<Vec>& simples, const Vec& mu) {
  Vec out;
  for (const Vec& beta : simples) out.push_back(Rat(2) * pair.hrInner(mu, beta) / pair.hrInner(beta, beta));
  return out;
}

json pairSummary(const LiePair& pair, size_t* eulerOut) {
  json j;
  j["dimR"] = static_cast<int>(pair.rBasis.size());
  j["dimP"] = pair.dimP();
  j["dimHr"] = pair.dimHr();
  j["dimHp"] = pair.dimHp;
  j["cardDelta0Plus"] = static_cast<int>(pair.delta0Plus.size());
  j["cardGammaPlus"] = static_cast<int>(pair.gammaPlus.size());
  j["equalRank"] = pair.equalRank;
  j["rootType"] = pair.rootType;
  j["spinDim"] = ratStr(Rat(Int(1) << (pair.dimHp + static_cast<int>(pair.delta0Plus.size()) + pair.dimPplus)));
  if (pair.equalRank && pair.rootType) {
    WeylGroup w = buildWeylGroup(pair.g.rs);
    CosetSystem cs = cosetTransversal(w, pair.subRootIdx);
    j["weylOrder"] = w.order();
    j["eulerNumber"] = cs.eulerNumber;
    if (eulerOut) *eulerOut = cs.eulerNumber;
  }
  return j;
}

json weightPairList(const LiePair& pair, const std::vector<Vec>& simples,
                    const std::vector<std::pair<Vec, int>>& list) {
  json a = json::array();
  for (const auto& [mu, mult] : list) {
    json e;
    e["weightOnHr"] = vecJson(mu);
    if (pair.rootType) e["weightFundamentalR"] = vecJson(rFundamentalCoords(pair, simples, mu));
    e["multiplicity"] = mult;
    a.push_back(e);
  }
  return a;
}

struct Payload {
  RunStatus status = RunStatus::Fail;
  json result;
};

Payload dispatch(const ExperimentConfig& cfg, const LieAlgebra& g, const LiePair& pair,
                 const SessionOptions& opts) {
  Payload out;
  auto simples = simpleRRoots(pair);
  if (cfg.command == "describe-pair") {
    json r;
    r["rho0"] = vecJson(pair.rho0);
    r["rho1"] = vecJson(pair.rho1);
    r["rho2"] = vecJson(pair.rho2);
    r["rhoROnHr"] = vecJson(pair.rhoR);
    out.result = r;
    out.status = RunStatus::Pass;
  } else if (cfg.command == "multiplets") {
    auto rep = multipletCheck(pair, cfg.lambda, cfg.maxDim < opts.maxDim ? cfg.maxDim : opts.maxDim);
    json r;
    r["cohomologySide"] = weightPairList(pair, simples, rep.cohomologySide);
    r["cosetSide"] = weightPairList(pair, simples, rep.cosetSide);
    r["eulerNumber"] = rep.eulerNumber;
    r["match"] = rep.match;
    r["multiplicityFree"] = rep.multiplicityFree;
    r["kerEqualsKerSquare"] = rep.kerEqualsKerSquare;
    out.result = r;
    out.status = rep.match && rep.multiplicityFree && rep.kerEqualsKerSquare ? RunStatus::Pass
                                                                            : RunStatus::Fail;
  } else if (cfg.command == "cohomology") {
    auto mod = buildIrrep(g, cfg.lambda, cfg.maxDim < opts.maxDim ? cfg.maxDim : opts.maxDim);
    DiracComplex cx(pair, mod);
    auto coh = diracCohomology(cx);
    json r;
    r["moduleDim"] = mod.dim();
    r["kernelDim"] = static_cast<int>(coh.kernel.size());
    r["cohomologyDim"] = coh.dim;
    r["kerEqualsKerSquare"] = coh.kerEqualsKerSquare;
    r["constituents"] = weightPairList(pair, simples, coh.rStructure.constituents);
    out.result = r;
    out.status = coh.kerEqualsKerSquare ? RunStatus::Pass : RunStatus::Fail;
  } else if (cfg.command == "square-identity") {
    auto mod = buildIrrep(g, cfg.lambda, cfg.maxDim < opts.maxDim ? cfg.maxDim : opts.maxDim);
    DiracComplex cx(pair, mod);
    auto rep = verifySquareIdentity(cx);
    json r;
    r["scalar"] = ratStr(rep.scalar);
    r["predicted"] = ratStr(rep.predicted);
    r["match"] = rep.match;
    out.result = r;
    out.status = rep.match ? RunStatus::Pass : RunStatus::Fail;
  } else if (cfg.command == "cocycle") {
    auto mod = buildTruncatedVerma(g, cfg.lambda, cfg.depth);
    DiracComplex cx(pair, mod);
    json cases = json::array();
    bool all = true;
    for (uint64_t a = 0; a < (uint64_t(1) << pair.dimHp); ++a) {
      auto rep = cocycleCheck(cx, a);
      json e;
      e["aMask"] = a;
      e["primePart"] = rep.primePart;
      e["zeroPart"] = rep.zeroPart;
      e["onePart"] = rep.onePart;
      e["total"] = rep.total;
      e["forcedZero"] = rep.forcedZero;
      e["vanishes"] = rep.vanishes;
      cases.push_back(e);
      all = all && rep.primePart && rep.zeroPart && rep.onePart && rep.total;
    }
    out.result = json{{"cases", cases}, {"allIdentitiesHold", all}};
    out.status = all ? RunStatus::Pass : RunStatus::Fail;
  } else if (cfg.command == "nonvanishing") {
    auto rep = nonvanishingCheck(pair, cfg.lambda, cfg.depth);
    json r;
    r["lambdaAdmissible"] = rep.lambdaAdmissible;
    r["kernelPart"] = rep.kernelPart;
    r["stable"] = rep.stable;
    r["checkedDepth"] = rep.checkedDepth;
    r["skippedLeaks"] = rep.skippedLeaks;
    r["dimE"] = ratStr(Rat(rep.dimE));
    out.result = r;
    bool ok = rep.lambdaAdmissible && rep.kernelPart && rep.stable;
    if (ok && rep.checkedDepth < cfg.depth - 1)
      out.status = RunStatus::Inconclusive;
    else
      out.status = ok ? RunStatus::Pass : RunStatus::Fail;
  } else if (cfg.command == "hc-diagram") {
    auto rep = harishChandraDiagram(pair, cfg.minSamples);
    json samples = json::array();
    for (const auto& s : rep.samples) {
      json e;
      e["nu"] = vecJson(s.nu);
      e["ambientScalar"] = ratStr(s.ambientScalar);
      e["subScalar"] = ratStr(s.subScalar);
      e["match"] = s.match;
      samples.push_back(e);
    }
    out.result = json{{"samples", samples},
                      {"shift", ratStr(rep.shift)},
                      {"sampleCount", rep.samples.size()},
                      {"allMatch", rep.allMatch}};
    out.status = rep.allMatch ? RunStatus::Pass : RunStatus::Fail;
  } else {
    throw Error("ConfigError", "unknown command '" + cfg.command + "'");
  }
  return out;
}

std::string statusName(RunStatus s) {
  switch (s) {
    case RunStatus::Pass: return "PASS";
    case RunStatus::Fail: return "FAIL";
    case RunStatus::Inconclusive: return "INCONCLUSIVE";
    default: return "CONFIG_ERROR";
  }
}

std::string renderTable(const json& report) {
  std::ostringstream os;
  os << "command : " << report.value("command", std::string()) << "\n";
  if (report.contains("config"))
    os << "algebra : " << report["config"].value("algebra", std::string()) << "\n";
  os << "status  : " << report.value("status", std::string()) << "\n";
  if (report.contains("pair")) {
    const json& p = report["pair"];
    os << "pair    : dim r = " << p.value("dimR", 0) << ", dim p = " << p.value("dimP", 0)
       << ", dim h_p = " << p.value("dimHp", 0) << ", |Delta0+| = " << p.value("cardDelta0Plus", 0)
       << ", |Gamma+| = " << p.value("cardGammaPlus", 0);
    if (p.contains("eulerNumber")) os << ", d = " << p["eulerNumber"].get<size_t>();
    os << "\n";
  }
  if (report.contains("result")) {
    const json& r = report["result"];
    if (r.contains("cohomologySide")) {
      os << "constituents (fundamental coordinates of r where defined):\n";
      for (const auto& e : r["cohomologySide"]) {
        os << "  mult " << e.value("multiplicity", 0) << "  weight [";
        const json& w = e.contains("weightFundamentalR") ? e["weightFundamentalR"] : e["weightOnHr"];
        for (size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i].get<std::string>();
        os << "]\n";
      }
    } else if (r.contains("scalar")) {
      os << "scalar  : " << r["scalar"].get<std::string>() << " (predicted "
         << r["predicted"].get<std::string>() << ")\n";
    } else if (r.contains("sampleCount")) {
      os << "samples : " << r["sampleCount"].get<size_t>() << ", shift "
         << r["shift"].get<std::string>() << "\n";
    } else if (r.contains("dimE")) {
      os << "dim E   : " << r["dimE"].get<std::string>() << ", checked depth "
         << r["checkedDepth"].get<int>() << "\n";
    }
  }
  return os.str();
}

std::string cacheKey(const ExperimentConfig& cfg) {
  json k;
  k["algebra"] = cfg.algebra;
  k["subalgebra"] = subalgebraJson(cfg.subalgebra);
  k["lambda"] = vecJson(cfg.lambda);
  k["command"] = cfg.command;
  k["depth"] = cfg.depth;
  k["maxDim"] = ratStr(Rat(cfg.maxDim));
  k["minSamples"] = cfg.minSamples;
  k["version"] = kConventionVersion;
  return hex64(fnv1a(k.dump()));
}

bool cacheLoad(const std::string& dir, const std::string& key, Payload& out) {
  std::ifstream in(dir + "/" + key + ".json");
  if (!in) return false;
  try {
    json j = json::parse(in);
    std::string payload = j.at("payload").dump();
    if (j.at("checksum").get<std::string>() != hex64(fnv1a(payload)))
      throw Error("CacheCorrupt", "checksum mismatch");
    out.result = j.at("payload");
    out.status = static_cast<RunStatus>(j.at("status").get<int>());
    return true;
  } catch (const std::exception& e) {
    std::cerr << "warning: ignoring unreadable cache entry " << key << ": " << e.what() << "\n";
    return false;
  }
}

void cacheStore(const std::string& dir, const std::string& key, const Payload& p) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  json j;
  j["payload"] = p.result;
  j["status"] = static_cast<int>(p.status);
  j["checksum"] = hex64(fnv1a(p.result.dump()));
  writeFileAtomic(dir + "/" + key + ".json", j.dump(2) + "\n");
}

}  // namespace

json ExperimentConfig::toJson() const {
  json j;
  j["algebra"] = algebra;
  j["subalgebra"] = subalgebraJson(subalgebra);
  // echo lambda in the internal simple-root coordinates so reports are
  // unambiguous whatever basis the config used
  j["lambda"] = json{{"basis", "simple-root"}, {"coords", vecJson(lambda)}};
  j["command"] = command;
  j["depth"] = depth;
  j["maxDim"] = ratStr(Rat(maxDim));
  j["minSamples"] = minSamples;
  return j;
}

ExperimentConfig parseConfig(const json& j) {
  if (!j.is_object()) throw Error("ConfigError", "config must be a JSON object");
  rejectUnknown(j,
                {"algebra", "subalgebra", "lambda", "command", "depth", "maxDim", "minSamples",
                 "output"},
                "config");
  ExperimentConfig cfg;
  if (!j.contains("algebra")) throw Error("ConfigError", "missing field 'algebra'");
  cfg.algebra = j.at("algebra").get<std::string>();
  if (!j.contains("command")) throw Error("ConfigError", "missing field 'command'");
  cfg.command = j.at("command").get<std::string>();
  bool known = false;
  for (const char* c : kCommands)
    if (cfg.command == c) known = true;
  if (!known) throw Error("ConfigError", "unknown command '" + cfg.command + "'");
  cfg.subalgebra = parseSubalgebra(j.value("subalgebra", json{{"kind", "full"}}));
  cfg.depth = j.value("depth", 4);
  if (cfg.depth < 0) throw Error("ConfigError", "depth must be nonnegative");
  if (j.contains("maxDim")) cfg.maxDim = Rat(ratFromJson(j.at("maxDim"))).get_num();
  cfg.minSamples = j.value("minSamples", 20);
  cfg.outputPath = j.value("output", std::string());

  RootSystem rs;
  try {
    rs = buildRootSystem(cartanMatrixFromLabel(cfg.algebra));
  } catch (const Error& e) {
    throw Error("ConfigError", "bad algebra '" + cfg.algebra + "': " + e.what());
  }
  if (j.contains("lambda")) {
    const json& lj = j.at("lambda");
    rejectUnknown(lj, {"basis", "coords"}, "lambda");
    cfg.lambdaBasis = lj.value("basis", std::string());
    if (cfg.lambdaBasis != "fundamental" && cfg.lambdaBasis != "simple-root")
      throw Error("ConfigError", "lambda.basis must be 'fundamental' or 'simple-root'");
    Vec coords = vecFromJson(lj.value("coords", json::array()));
    if (static_cast<int>(coords.size()) != rs.rank())
      throw Error("ConfigError", "lambda has wrong length for " + cfg.algebra);
    cfg.lambda = cfg.lambdaBasis == "fundamental" ? rs.simpleFromFundamental(coords) : coords;
  } else {
    cfg.lambdaBasis = "simple-root";
    cfg.lambda = Vec(rs.rank(), Rat(0));
  }
  return cfg;
}

ExperimentConfig parseConfigText(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw Error("ConfigError", std::string("invalid JSON: ") + e.what());
  }
  return parseConfig(j);
}

RunResult runExperiment(const ExperimentConfig& cfg, const SessionOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  LieAlgebra g = buildLieAlgebra(buildRootSystem(cartanMatrixFromLabel(cfg.algebra)));
  LiePair pair = buildPair(g, cfg.subalgebra);

  int cacheHits = 0;
  std::string key = cacheKey(cfg);
  Payload payload;
  bool fromCache = !opts.cacheDir.empty() && cacheLoad(opts.cacheDir, key, payload);
  if (fromCache) {
    cacheHits = 1;
  } else {
    try {
      payload = dispatch(cfg, g, pair, opts);
    } catch (const Error& e) {
      if (e.code() == "ConfigError") throw;
      payload.result = json{{"error", e.code()}, {"message", e.what()}};
      payload.status = e.code() == "DepthLeak" ? RunStatus::Inconclusive : RunStatus::Fail;
    }
    if (!opts.cacheDir.empty()) cacheStore(opts.cacheDir, key, payload);
  }

  RunResult out;
  out.status = payload.status;
  json report;
  report["command"] = cfg.command;
  report["config"] = cfg.toJson();
  report["pair"] = pairSummary(pair, nullptr);
  report["result"] = payload.result;
  report["status"] = statusName(payload.status);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  report["meta"] = json{{"timingMs", ms.count()},
                        {"cacheHits", cacheHits},
                        {"jobs", opts.jobs},
                        {"conventionVersion", kConventionVersion}};
  out.report = report;
  out.table = renderTable(report);
  if (!cfg.outputPath.empty()) writeFileAtomic(cfg.outputPath, report.dump(2) + "\n");
  return out;
}

RunResult describeType(const std::string& label) {
  RootSystem rs;
  try {
    rs = buildRootSystem(cartanMatrixFromLabel(label));
  } catch (const Error& e) {
    throw Error("ConfigError", "bad algebra '" + label + "': " + e.what());
  }
  WeylGroup w = buildWeylGroup(rs);
  json r;
  r["label"] = label;
  r["rank"] = rs.rank();
  r["positiveRoots"] = rs.numPositive;
  r["dimension"] = rs.rank() + static_cast<int>(rs.roots.size());
  r["weylOrder"] = w.order();
  r["rho"] = vecJson(rs.rho);
  RunResult out;
  out.status = RunStatus::Pass;
  out.report = json{{"command", "describe"}, {"result", r}, {"status", "PASS"},
                    {"meta", json{{"conventionVersion", kConventionVersion}}}};
  std::ostringstream os;
  os << "type    : " << label << "\nrank    : " << rs.rank() << "\nroots   : "
     << rs.roots.size() << "\ndim g   : " << rs.rank() + rs.roots.size()
     << "\n|W|     : " << w.order() << "\n";
  out.table = os.str();
  return out;
}

std::string canonicalReport(const json& report) {
  json j = report;
  j.erase("meta");
  return j.dump(2) + "\n";
}

void writeFileAtomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("IoError", "cannot open " + tmp);
    out << content;
    if (!out.good()) throw Error("IoError", "write failed for " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("IoError", "rename failed for " + path + ": " + ec.message());
}

}  // namespace dk
