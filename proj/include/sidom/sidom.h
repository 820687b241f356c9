// Copyright 2026 The sidom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the sidom library. Every fallible call returns a
 * sidom_status; on failure sidom_last_error() describes the problem for the
 * calling thread. Strings returned through char** are owned by the caller
 * and released with sidom_string_free. */
#ifndef SIDOM_SIDOM_H_
#define SIDOM_SIDOM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SIDOM_API __declspec(dllexport)
#else
#define SIDOM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sidom_status {
  SIDOM_OK = 0,
  SIDOM_ERR_INVALID_ARGUMENT = 1,
  SIDOM_ERR_PARSE = 2,
  SIDOM_ERR_NOT_STRONG = 3,
  SIDOM_ERR_NOT_APPLICABLE = 4,
  SIDOM_ERR_SIZE_LIMIT = 5,
  SIDOM_ERR_INTERNAL = 6
} sidom_status;

typedef struct sidom_digraph sidom_digraph;
typedef struct sidom_partition sidom_partition;

SIDOM_API const char* sidom_last_error(void);
SIDOM_API void sidom_string_free(char* s);

/* Digraphs. */
SIDOM_API sidom_status sidom_digraph_create(int32_t order,
                                            const int32_t* tails,
                                            const int32_t* heads,
                                            size_t arc_count,
                                            sidom_digraph** out);
SIDOM_API sidom_status sidom_digraph_parse(const char* text,
                                           sidom_digraph** out);
SIDOM_API sidom_status sidom_digraph_read(const char* path,
                                          sidom_digraph** out);
SIDOM_API void sidom_digraph_free(sidom_digraph* d);
SIDOM_API int32_t sidom_digraph_order(const sidom_digraph* d);
SIDOM_API size_t sidom_digraph_arc_count(const sidom_digraph* d);
SIDOM_API sidom_status sidom_digraph_arc(const sidom_digraph* d, size_t index,
                                         int32_t* tail, int32_t* head);
SIDOM_API sidom_status sidom_digraph_is_strong(const sidom_digraph* d,
                                               int* strong);
/* Canonical text form: "n N" header, sorted arcs, trailing newline. */
SIDOM_API sidom_status sidom_digraph_format(const sidom_digraph* d,
                                            char** text);
SIDOM_API sidom_status sidom_digraph_to_dot(const sidom_digraph* d,
                                            char** text);

/* Vertex partitions. */
SIDOM_API sidom_status sidom_partition_parse(const char* text, int32_t order,
                                             sidom_partition** out);
SIDOM_API sidom_status sidom_partition_read(const char* path, int32_t order,
                                            sidom_partition** out);
SIDOM_API sidom_status sidom_partition_from_assignment(
    const int32_t* block_of, int32_t order, sidom_partition** out);
SIDOM_API void sidom_partition_free(sidom_partition* p);
SIDOM_API int32_t sidom_partition_order(const sidom_partition* p);
SIDOM_API int32_t sidom_partition_block_count(const sidom_partition* p);
SIDOM_API int32_t sidom_partition_block_of(const sidom_partition* p,
                                           int32_t v);
SIDOM_API sidom_status sidom_partition_format(const sidom_partition* p,
                                              char** text);

/* Invariants. */
typedef enum sidom_invariant {
  SIDOM_DSMINUS = 0,   /* strong in-domatic number */
  SIDOM_DSPLUS = 1,    /* strong out-domatic number */
  SIDOM_LAMBDA = 2,    /* maximum partition of the arcs into strong covers */
  SIDOM_INDOMATIC = 3, /* in-domatic number */
  SIDOM_DC = 4,        /* connected domatic number of the underlying graph */
  SIDOM_KAPPA = 5,     /* vertex connectivity of the underlying graph */
  SIDOM_GAMMACL = 6    /* clique domination number of the underlying graph */
} sidom_invariant;

/* `witness` (optional) receives a partition file for vertex partitions, an
 * arc-partition listing for SIDOM_LAMBDA, the clique for SIDOM_GAMMACL, and
 * NULL for SIDOM_KAPPA. */
SIDOM_API sidom_status sidom_compute(const sidom_digraph* d,
                                     sidom_invariant which, int32_t* value,
                                     char** witness);
SIDOM_API sidom_status sidom_strong_in_domatic_number(
    const sidom_digraph* d, int32_t* value, sidom_partition** witness);
SIDOM_API sidom_status sidom_upper_bound(const sidom_digraph* d,
                                         int32_t* value);

/* Sets *valid to 1 when p is a strong in-domatic partition (out_mode == 0)
 * or a strong out-domatic partition (out_mode != 0); otherwise *valid is 0
 * and `message` names the first failing block. */
SIDOM_API sidom_status sidom_verify(const sidom_digraph* d,
                                    const sidom_partition* p, int out_mode,
                                    int* valid, char** message);

/* Transforms. PRODUCT takes one extra digraph; COMPOSE takes either one part
 * used for every host vertex or one part per host vertex. */
typedef enum sidom_transform_op {
  SIDOM_OP_LINE = 0,
  SIDOM_OP_SUBDIVISION = 1,
  SIDOM_OP_ROOT = 2,
  SIDOM_OP_MIDDLE = 3,
  SIDOM_OP_TOTAL = 4,
  SIDOM_OP_CONVERSE = 5,
  SIDOM_OP_PRODUCT = 6,
  SIDOM_OP_COMPOSE = 7
} sidom_transform_op;

SIDOM_API sidom_status sidom_transform(const sidom_digraph* d,
                                       sidom_transform_op op,
                                       const sidom_digraph* const* with,
                                       size_t with_count, sidom_digraph** out);

/* Families: "complete", "cycle", "empty", "pair-critical" take a = n;
 * "order-value" takes a = p, b = m; "critical-composition" takes a = p,
 * b = n. `partition` is set to NULL when no canonical partition exists;
 * `claims` receives a JSON document. */
SIDOM_API sidom_status sidom_generate(const char* family, int32_t a,
                                      int32_t b, sidom_digraph** digraph,
                                      sidom_partition** partition,
                                      char** claims);

/* Criticality: *critical is 0 or 1; *characterization is 0 (holds),
 * 1 (fails) or 2 (not applicable). `report` receives the deletion profile
 * table and both verdicts. */
SIDOM_API sidom_status sidom_critical(const sidom_digraph* d, int* critical,
                                      int* characterization, char** report);

/* Law suite with default options. */
SIDOM_API sidom_status sidom_laws(const sidom_digraph* d, int json,
                                  int* violations, char** report);

/* Solver against the brute-force oracle over all labeled digraphs of order
 * max_n, plus random_count random strong digraphs of order up to `up_to`. */
SIDOM_API sidom_status sidom_oracle_scan(int32_t max_n, uint64_t seed,
                                         int32_t random_count, int32_t up_to,
                                         int64_t* mismatches, char** summary);

#ifdef __cplusplus
}
#endif

#endif /* SIDOM_SIDOM_H_ */
