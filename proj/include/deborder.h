#ifndef DEBORDER_H
#define DEBORDER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DBR_API __declspec(dllexport)
#else
#define DBR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dbr_status {
  DBR_OK = 0,
  DBR_VERIFY_FAILED = 1,
  DBR_PARSE_ERROR = 2,
  DBR_LEMMA_FAILED = 3,
  DBR_INVALID_ARGUMENT = 4,
  DBR_INTERNAL_ERROR = 5
} dbr_status;

typedef enum dbr_kind {
  DBR_POLYNOMIAL = 0,
  DBR_BORDER = 1,
  DBR_WARING = 2,
  DBR_REPORT = 3
} dbr_kind;

/* Opaque handle to a parsed document (polynomial, decomposition or report). */
typedef struct dbr_document dbr_document;

typedef struct dbr_deborder_config {
  uint64_t seed;
  unsigned base_threshold;
  int strengthened;
  unsigned y_size; /* 0: default floor(10 sqrt r) */
  unsigned jobs;
} dbr_deborder_config;

typedef struct dbr_family_spec {
  const char* family; /* tangent, osculating, multibase, random */
  unsigned d;
  unsigned j;
  uint64_t seed;
  unsigned nvars; /* 0: natural arity */
  unsigned rank;  /* random family */
} dbr_family_spec;

typedef struct dbr_oracle_result {
  int is_binary;
  unsigned wr;  /* valid when is_binary */
  unsigned bwr; /* valid when is_binary */
  size_t max_catalecticant;
} dbr_oracle_result;

/* Message of the last failure on this thread; empty when none. */
DBR_API const char* dbr_last_error(void);
/* JSON object {"lemma", "message", "witness"} describing the last failure. */
DBR_API const char* dbr_last_diagnostic(void);

DBR_API dbr_status dbr_parse(const char* json, dbr_document** out);
DBR_API dbr_status dbr_load(const char* path, dbr_document** out);
/* Canonical JSON; release with dbr_string_free. */
DBR_API dbr_status dbr_serialize(const dbr_document* doc, char** out);
DBR_API dbr_status dbr_save(const dbr_document* doc, const char* path);
DBR_API dbr_kind dbr_document_kind(const dbr_document* doc);
DBR_API void dbr_document_free(dbr_document* doc);
DBR_API void dbr_string_free(char* s);

DBR_API void dbr_deborder_config_default(dbr_deborder_config* config);

/* Waring decomposition of target from a border certificate; report may be NULL. */
DBR_API dbr_status dbr_deborder(const dbr_document* border, const dbr_document* target,
                                const dbr_deborder_config* config, dbr_document** waring,
                                dbr_document** report);

DBR_API dbr_status dbr_verify_waring(const dbr_document* waring, const dbr_document* target);
/* On success *order receives the eps-order of the error term, -1 when exact. */
DBR_API dbr_status dbr_verify_border(const dbr_document* border, const dbr_document* target,
                                     int* order);

DBR_API dbr_status dbr_generate(const dbr_family_spec* spec, dbr_document** target,
                                dbr_document** border);

/* Sylvester ranks when binary is set (requires 2 variables), catalecticant bounds always.
   bounds receives degree+1 entries; pass NULL to skip. */
DBR_API dbr_status dbr_oracle(const dbr_document* target, int binary, dbr_oracle_result* result,
                              size_t* bounds, size_t bounds_len);

/* Decimal ceiling of d * r^(10 sqrt r); release with dbr_string_free. */
DBR_API dbr_status dbr_rank_bound(unsigned d, unsigned r, char** out);

#ifdef __cplusplus
}
#endif

#endif
