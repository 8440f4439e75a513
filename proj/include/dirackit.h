/* C interface to the Dirac operator toolkit. All functions are
 * non-reentrant per session; create one dk_session per thread. Strings
 * returned by dk_report_* and dk_session_last_error stay valid until the
 * owning object is freed. */
#ifndef DIRACKIT_H
#define DIRACKIT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dk_session dk_session;
typedef struct dk_report dk_report;

typedef enum {
  DK_PASS = 0,
  DK_FAIL = 1,
  DK_INCONCLUSIVE = 2,
  DK_CONFIG_ERROR = 3,
  DK_INTERNAL_ERROR = 4
} dk_status;

dk_session* dk_session_new(void);
void dk_session_free(dk_session* s);

/* Empty or NULL path disables caching. */
dk_status dk_session_set_cache_dir(dk_session* s, const char* path);
dk_status dk_session_set_max_dim(dk_session* s, long max_dim);
dk_status dk_session_set_jobs(dk_session* s, int jobs);

/* Message of the last failed call on this session, or "" if none. */
const char* dk_session_last_error(const dk_session* s);

/* Runs one experiment from a JSON config. On success *out owns the report
 * and the return value is the experiment's verdict (PASS/FAIL/INCONCLUSIVE);
 * on config or internal errors *out is NULL. */
dk_status dk_run_config_text(dk_session* s, const char* json_text, dk_report** out);
dk_status dk_run_config_file(dk_session* s, const char* path, dk_report** out);

/* Root-system summary of a Cartan type label such as "A2" or "F4". */
dk_status dk_describe(dk_session* s, const char* type_label, dk_report** out);

const char* dk_report_json(const dk_report* r);
const char* dk_report_table(const dk_report* r);
dk_status dk_report_status(const dk_report* r);
void dk_report_free(dk_report* r);

const char* dk_version(void);

#ifdef __cplusplus
}
#endif

#endif /* DIRACKIT_H */
