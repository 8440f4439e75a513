// Command line front end. Talks to the core only through the C interface.
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "dirackit.h"

namespace {

struct SessionDeleter {
  void operator()(dk_session* s) const { dk_session_free(s); }
};
struct ReportDeleter {
  void operator()(dk_report* r) const { dk_report_free(r); }
};

int emit(dk_session* session, dk_report* raw, const std::string& format, dk_status st) {
  std::unique_ptr<dk_report, ReportDeleter> report(raw);
  if (!report) {
    std::fprintf(stderr, "error: %s\n", dk_session_last_error(session));
    return st == DK_CONFIG_ERROR ? 3 : 1;
  }
  std::fputs(format == "table" ? dk_report_table(report.get()) : dk_report_json(report.get()),
             stdout);
  return static_cast<int>(dk_report_status(report.get()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dirac-kit: exact checks for the cubic Dirac operator on V (x) L"};
  app.set_version_flag("--version", dk_version());

  std::string cacheDir;
  long maxDim = 0;
  int jobs = 0;
  std::string format = "json";
  app.add_option("--cache-dir", cacheDir, "cache directory (env DIRAC_KIT_CACHE)");
  app.add_option("--max-dim", maxDim, "module dimension cap");
  app.add_option("--jobs", jobs, "worker count for matrix assembly");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));

  std::string configPath, typeLabel;
  auto* run = app.add_subcommand("run", "run an experiment from a JSON config file");
  run->add_option("config", configPath, "config file path")->required();
  run->fallthrough();
  auto* describe = app.add_subcommand("describe", "summarize a Cartan type");
  describe->add_option("type", typeLabel, "Cartan type label, e.g. A2 or F4")->required();
  describe->fallthrough();
  app.require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  std::unique_ptr<dk_session, SessionDeleter> session(dk_session_new());
  if (cacheDir.empty())
    if (const char* env = std::getenv("DIRAC_KIT_CACHE")) cacheDir = env;
  dk_session_set_cache_dir(session.get(), cacheDir.c_str());
  if (maxDim > 0) dk_session_set_max_dim(session.get(), maxDim);
  if (jobs > 0) dk_session_set_jobs(session.get(), jobs);

  dk_report* report = nullptr;
  dk_status st;
  if (run->parsed())
    st = dk_run_config_file(session.get(), configPath.c_str(), &report);
  else
    st = dk_describe(session.get(), typeLabel.c_str(), &report);
  return emit(session.get(), report, format, st);
}
