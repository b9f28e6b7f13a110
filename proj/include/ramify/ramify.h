#ifndef RAMIFY_RAMIFY_H
#define RAMIFY_RAMIFY_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(RAMIFY_BUILDING)
#define RAMIFY_API __attribute__((visibility("default")))
#else
#define RAMIFY_API
#endif

typedef struct ramify_extension ramify_extension;

typedef enum ramify_status {
  RAMIFY_OK = 0,
  RAMIFY_ERR_GENERIC = 1,
  RAMIFY_ERR_SCHEMA = 2,
  RAMIFY_ERR_NOT_GALOIS = 3,
  RAMIFY_ERR_IDENTITY = 4,
  RAMIFY_ERR_PRECISION = 5,
  RAMIFY_ERR_ENUMERATION = 6,
  RAMIFY_ERR_ARGUMENT = 7
} ramify_status;

/* Zero fields fall back to the spec file, then to built-in defaults. */
typedef struct ramify_options {
  int precision;
  int m_grid_den;
  int tame_max;
  int catalog_cap;
  int serre; /* nonzero adds classical numbering to reports */
} ramify_options;

RAMIFY_API void ramify_options_default(ramify_options* opt);

RAMIFY_API ramify_status ramify_extension_load(const char* spec_json, ramify_extension** out);
RAMIFY_API ramify_status ramify_extension_builtin(const char* name, ramify_extension** out);
RAMIFY_API void ramify_extension_free(ramify_extension* ext);

/* Each call fills *out with a JSON document to be released by ramify_string_free.
   RAMIFY_ERR_IDENTITY and RAMIFY_ERR_NOT_GALOIS still produce a document. */
RAMIFY_API ramify_status ramify_report(ramify_extension* ext, const ramify_options* opt, char** out);
RAMIFY_API ramify_status ramify_pm_scan(ramify_extension* ext, const ramify_options* opt, char** out);
RAMIFY_API ramify_status ramify_lattice(ramify_extension* ext, const ramify_options* opt, char** out);
RAMIFY_API ramify_status ramify_herbrand_tsv(ramify_extension* ext, const ramify_options* opt, char** out);
RAMIFY_API ramify_status ramify_catalog(char** out);
RAMIFY_API ramify_status ramify_catalog_spec(const char* name, char** out);

/* Message for the last failing call on this thread; never NULL. */
RAMIFY_API const char* ramify_last_error(void);
RAMIFY_API void ramify_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
