/* C interface to the shard intersection order library.
 *
 * Every function returns an so_status. On failure a message is available
 * from so_last_error() until the next call on the same thread. Strings
 * returned through `char** out` are owned by the caller and must be released
 * with so_string_free(). Permutations are one-line strings ("2413") or
 * comma-separated ("2,4,1,3"); Coxeter words are comma-separated generator
 * indices ("2,1,3"), and NULL or "" selects 1,2,...,n-1.
 */
#ifndef SHARDORDER_H
#define SHARDORDER_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SHARDORDER_BUILDING)
#    define SO_API __declspec(dllexport)
#  else
#    define SO_API __declspec(dllimport)
#  endif
#else
#  define SO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum so_status {
  SO_OK = 0,
  SO_INVALID_ARGUMENT = 1,
  SO_PARSE_ERROR = 2,
  SO_DOMAIN_ERROR = 3,
  SO_RESOURCE_LIMIT = 4,
  SO_INTERNAL_ERROR = 5,
  SO_NULL_POINTER = 6
} so_status;

typedef struct so_preorder so_preorder;
typedef struct so_lattice so_lattice;

SO_API const char* so_last_error(void);
SO_API const char* so_status_name(so_status status);
SO_API void so_string_free(char* s);

/* Permutation pre-orders. */
SO_API so_status so_preorder_from_permutation(const char* perm, so_preorder** out);
SO_API so_status so_preorder_from_json(const char* json, so_preorder** out);
SO_API void so_preorder_free(so_preorder* w);
SO_API so_status so_preorder_size(const so_preorder* w, int* out);
SO_API so_status so_preorder_block_count(const so_preorder* w, int* out);
SO_API so_status so_preorder_leq(const so_preorder* a, const so_preorder* b, int* out);
SO_API so_status so_preorder_to_json(const so_preorder* w, char** out);
SO_API so_status so_preorder_to_permutation(const so_preorder* w, char** out);

/* Shards, one "H(i,j)[+-]" per line. */
SO_API so_status so_shards_all(int n, char** out);
SO_API so_status so_shards_lower(const char* perm, char** out);

/* The lattice for one n. Fails with SO_RESOURCE_LIMIT above the default cap
 * unless `force` is nonzero. */
SO_API so_status so_lattice_build(int n, int force, so_lattice** out);
SO_API void so_lattice_free(so_lattice* lattice);
SO_API so_status so_lattice_size(const so_lattice* lattice, size_t* out);
SO_API so_status so_lattice_edge_count(const so_lattice* lattice, size_t* out);
/* format: "dot", "json" or "text". */
SO_API so_status so_lattice_export(const so_lattice* lattice, const char* format, char** out);
/* NULL endpoints select the bottom and top of the lattice. */
SO_API so_status so_lattice_mobius(const so_lattice* lattice, const char* bottom, const char* top,
                                   long long* out);
SO_API so_status so_lattice_chain_report(const so_lattice* lattice, const char* bottom,
                                         const char* top, char** out);

/* Coxeter-sortable permutations and noncrossing pre-orders. */
SO_API so_status so_is_c_sortable(const char* perm, const char* coxeter, int* out);
/* JSON array of permutation strings in lex order. */
SO_API so_status so_c_sortables(int n, const char* coxeter, char** out);
SO_API so_status so_is_noncrossing(const so_preorder* w, const char* coxeter, int* out);
/* JSON array of pre-order documents, ordered by lambda word. */
SO_API so_status so_noncrossing_all(int n, const char* coxeter, char** out);
/* Partition document in, pre-order document out. */
SO_API so_status so_noncrossing_from_partition(const char* json, char** out);

/* Runs a verification suite; `out` receives a JSON array of reports and
 * `passed` is set to 1 iff every report passed. */
SO_API so_status so_verify(const char* suite, int n, int force, char** out, int* passed);

#ifdef __cplusplus
}
#endif

#endif
