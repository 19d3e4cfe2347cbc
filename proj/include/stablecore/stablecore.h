/*
 * stablecore: stability structure of trees.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an sc_status; on
 * failure a message for the calling thread is available from
 * sc_last_error(). Strings returned through char** are heap-allocated and
 * released with sc_string_free().
 *
 * Vertices are 0-based.
 */
#ifndef STABLECORE_STABLECORE_H_
#define STABLECORE_STABLECORE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SC_BUILDING_LIBRARY)
#    define SC_API __declspec(dllexport)
#  else
#    define SC_API __declspec(dllimport)
#  endif
#else
#  define SC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_ERR_NOT_A_TREE = 1,
  SC_ERR_OUT_OF_RANGE = 2,
  SC_ERR_TOO_SMALL = 3,
  SC_ERR_TOO_LARGE = 4,
  SC_ERR_EMPTY_RESULT = 5,
  SC_ERR_LIMIT_EXCEEDED = 6,
  SC_ERR_NOT_STABLE = 7,
  SC_ERR_NOT_PENDANT = 8,
  SC_ERR_SCALE_EXCEEDED = 9,
  SC_ERR_PARSE = 10,
  SC_ERR_INVALID_ARGUMENT = 11,
  SC_ERR_IO = 12,
  SC_ERR_INTERNAL = 13
} sc_status;

typedef struct sc_tree sc_tree;
typedef struct sc_report sc_report;
typedef struct sc_corpus sc_corpus;

SC_API const char* sc_version(void);
SC_API const char* sc_status_name(sc_status status);
/* Message of the last failed call on this thread; "" if none. */
SC_API const char* sc_last_error(void);
SC_API void sc_string_free(char* s);

/* ---- trees -------------------------------------------------------------- */

/* `edges` holds num_edges pairs as 2*num_edges consecutive vertex ids. */
SC_API sc_status sc_tree_from_edges(size_t n, const uint32_t* edges,
                                    size_t num_edges, sc_tree** out);
/* Edge-list text: '#' comment lines, then n, then n-1 lines "u v". */
SC_API sc_status sc_tree_parse(const char* text, sc_tree** out);
SC_API sc_status sc_tree_parse_file(const char* path, sc_tree** out);
SC_API void sc_tree_free(sc_tree* tree);

SC_API size_t sc_tree_order(const sc_tree* tree);
/* Copies the sorted edge list (u < v) into `out` as 2*(n-1) ids. */
SC_API sc_status sc_tree_edges(const sc_tree* tree, uint32_t* out,
                               size_t capacity);
SC_API sc_status sc_tree_serialize(const sc_tree* tree, char** out);
SC_API sc_status sc_tree_canonical_form(const sc_tree* tree, char** out);

SC_API sc_status sc_tree_random(size_t n, uint64_t seed, sc_tree** out);
SC_API sc_status sc_tree_prufer_decode(const uint32_t* code, size_t length,
                                       size_t n, sc_tree** out);
/* `out` must hold n-2 entries. */
SC_API sc_status sc_tree_prufer_encode(const sc_tree* tree, uint32_t* out,
                                       size_t capacity);

SC_API sc_status sc_spider(size_t k, sc_tree** out);
/* T1 * v * T2. T1 keeps its labels; the bond vertex is v1. */
SC_API sc_status sc_bond(const sc_tree* t1, uint32_t v1, const sc_tree* t2,
                         uint32_t v2, sc_tree** out, uint32_t* bond_vertex);

/* ---- analysis ----------------------------------------------------------- */

SC_API sc_status sc_analyze(const sc_tree* tree, sc_report** out);
SC_API void sc_report_free(sc_report* report);

SC_API size_t sc_report_alpha(const sc_report* report);
SC_API size_t sc_report_mu(const sc_report* report);
SC_API size_t sc_report_xi(const sc_report* report);
SC_API int sc_report_perfect_matching(const sc_report* report);
SC_API int sc_report_strong_unique(const sc_report* report);
/* Writes up to `capacity` core vertices in increasing order; *length
 * receives the full size of the core. */
SC_API sc_status sc_report_core(const sc_report* report, uint32_t* out,
                                size_t capacity, size_t* length);
SC_API sc_status sc_report_pendants(const sc_report* report, uint32_t* out,
                                    size_t capacity, size_t* length);
/* Decimal string; the count can exceed 64 bits. */
SC_API sc_status sc_report_num_maximum_stable_sets(const sc_report* report,
                                                   char** out);
SC_API sc_status sc_report_to_json(const sc_report* report, char** out);
SC_API sc_status sc_export_dot(const sc_tree* tree, const sc_report* report,
                               char** out);

/* ---- corpora and verification ------------------------------------------ */

typedef enum sc_corpus_mode {
  SC_CORPUS_EXHAUSTIVE = 0,
  SC_CORPUS_RANDOM = 1
} sc_corpus_mode;

typedef struct sc_corpus_spec {
  sc_corpus_mode mode;
  size_t n_min;
  size_t n_max;
  size_t sample_size; /* random mode: total number of trees */
  uint64_t seed;
  int dedup_isomorphism;
} sc_corpus_spec;

typedef struct sc_harness_options {
  size_t jobs;
  size_t witness_limit;
  size_t stable_scan_ceiling;
} sc_harness_options;

SC_API sc_corpus_spec sc_corpus_spec_default(void);
SC_API sc_harness_options sc_harness_options_default(void);

SC_API sc_status sc_corpus_generate(const sc_corpus_spec* spec,
                                    sc_corpus** out);
SC_API void sc_corpus_free(sc_corpus* corpus);
SC_API size_t sc_corpus_size(const sc_corpus* corpus);
/* Borrowed; valid until the corpus is freed. */
SC_API const sc_tree* sc_corpus_tree(const sc_corpus* corpus, size_t index);

/* Runs one claim ("C1".."C13", "C12a", "C12b", "E1") on one tree and
 * returns the result as JSON. */
SC_API sc_status sc_check_tree(const char* claim, const sc_tree* tree,
                               const sc_harness_options* options,
                               char** json);
/* `claims` is a comma-separated list or "all". Writes the verdict array as
 * JSON; *any_refuted is set when a claim other than the report-only ones
 * (C13, E1) has a refutation. */
SC_API sc_status sc_verify(const char* claims, const sc_corpus_spec* spec,
                           const sc_harness_options* options, char** json,
                           int* any_refuted);

#ifdef __cplusplus
}
#endif

#endif /* STABLECORE_STABLECORE_H_ */
