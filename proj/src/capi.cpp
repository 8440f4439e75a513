#include "dirackit.h"

#include <fstream>
#include <sstream>
#include <string>

#include "experiment.hpp"

struct dk_session {
  dk::SessionOptions opts;
  std::string lastError;
};

struct dk_report {
  std::string jsonText;
  std::string tableText;
  dk_status status = DK_FAIL;
};

namespace {

dk_status toStatus(dk::RunStatus s) {
  switch (s) {
    case dk::RunStatus::Pass: return DK_PASS;
    case dk::RunStatus::Fail: return DK_FAIL;
    case dk::RunStatus::Inconclusive: return DK_INCONCLUSIVE;
    default: return DK_CONFIG_ERROR;
  }
}

dk_report* wrap(const dk::RunResult& r) {
  auto* rep = new dk_report;
  rep->jsonText = r.report.dump(2) + "\n";
  rep->tableText = r.table;
  rep->status = toStatus(r.status);
  return rep;
}

dk_status fail(dk_session* s, dk_report** out, const std::exception& e) {
  if (out) *out = nullptr;
  if (!s) return DK_INTERNAL_ERROR;
  s->lastError = e.what();
  const auto* err = dynamic_cast<const dk::Error*>(&e);
  return err && err->code() == "ConfigError" ? DK_CONFIG_ERROR : DK_INTERNAL_ERROR;
}

}  // namespace

extern "C" {

dk_session* dk_session_new(void) { return new dk_session; }

void dk_session_free(dk_session* s) { delete s; }

dk_status dk_session_set_cache_dir(dk_session* s, const char* path) {
  if (!s) return DK_INTERNAL_ERROR;
  s->opts.cacheDir = path ? path : "";
  return DK_PASS;
}

dk_status dk_session_set_max_dim(dk_session* s, long max_dim) {
  if (!s || max_dim <= 0) return DK_INTERNAL_ERROR;
  s->opts.maxDim = max_dim;
  return DK_PASS;
}

dk_status dk_session_set_jobs(dk_session* s, int jobs) {
  if (!s || jobs <= 0) return DK_INTERNAL_ERROR;
  s->opts.jobs = jobs;
  return DK_PASS;
}

const char* dk_session_last_error(const dk_session* s) {
  return s ? s->lastError.c_str() : "";
}

dk_status dk_run_config_text(dk_session* s, const char* json_text, dk_report** out) {
  if (!s || !json_text || !out) return DK_INTERNAL_ERROR;
  *out = nullptr;
  try {
    dk::ExperimentConfig cfg = dk::parseConfigText(json_text);
    dk::RunResult r = dk::runExperiment(cfg, s->opts);
    *out = wrap(r);
    return (*out)->status;
  } catch (const std::exception& e) {
    return fail(s, out, e);
  }
}

dk_status dk_run_config_file(dk_session* s, const char* path, dk_report** out) {
  if (!s || !path || !out) return DK_INTERNAL_ERROR;
  *out = nullptr;
  std::ifstream in(path);
  if (!in) {
    s->lastError = std::string("cannot open config file ") + path;
    return DK_CONFIG_ERROR;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return dk_run_config_text(s, buf.str().c_str(), out);
}

dk_status dk_describe(dk_session* s, const char* type_label, dk_report** out) {
  if (!s || !type_label || !out) return DK_INTERNAL_ERROR;
  *out = nullptr;
  try {
    dk::RunResult r = dk::describeType(type_label);
    *out = wrap(r);
    return (*out)->status;
  } catch (const std::exception& e) {
    return fail(s, out, e);
  }
}

const char* dk_report_json(const dk_report* r) { return r ? r->jsonText.c_str() : ""; }

const char* dk_report_table(const dk_report* r) { return r ? r->tableText.c_str() : ""; }

dk_status dk_report_status(const dk_report* r) { return r ? r->status : DK_INTERNAL_ERROR; }

void dk_report_free(dk_report* r) { delete r; }

const char* dk_version(void) { return "0.1.0"; }

}  // extern "C"
