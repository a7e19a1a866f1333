/*
 * Copyright 2026 The hamred Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to hamred. Artifacts (circuits, operators, graphs, trees and
 * reduction instances) and run reports live behind opaque handles. Every
 * function returning hamred_status leaves a message for hamred_last_error()
 * on failure; the message is per thread and stays valid until the next call
 * on that thread. Options are passed as a JSON object text, or NULL for the
 * defaults. Strings returned through char** belong to the caller and are
 * released with hamred_string_free.
 */

#ifndef HAMRED_HAMRED_H
#define HAMRED_HAMRED_H

#include <stddef.h>

#if defined(HAMRED_BUILDING_LIBRARY)
#define HAMRED_API __attribute__((visibility("default")))
#else
#define HAMRED_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hamred_artifact hamred_artifact;
typedef struct hamred_report hamred_report;

typedef enum {
    HAMRED_OK = 0,
    HAMRED_ERR_INVALID_ARGUMENT = 1,
    HAMRED_ERR_SCHEMA = 2,
    HAMRED_ERR_CAP_EXCEEDED = 3,
    HAMRED_ERR_PRECONDITION = 4,
    HAMRED_ERR_NOT_CERTIFIED = 5,
    HAMRED_ERR_SEARCH_EXHAUSTED = 6,
    HAMRED_ERR_INTERNAL = 7
} hamred_status;

typedef enum {
    HAMRED_VERDICT_HOLDS = 0,
    HAMRED_VERDICT_FAILS = 1,
    HAMRED_VERDICT_UNDETERMINED = 2
} hamred_verdict;

HAMRED_API const char *hamred_version(void);
HAMRED_API const char *hamred_status_name(hamred_status status);
HAMRED_API const char *hamred_last_error(void);
/* Process exit code for a failed call: 3 usage or schema, 2 cap, 1 other. */
HAMRED_API int hamred_status_exit_code(hamred_status status);

/* Largest dense dimension the eigensolver accepts. */
HAMRED_API size_t hamred_dim_cap(void);
HAMRED_API void hamred_set_dim_cap(size_t cap);

HAMRED_API void hamred_string_free(char *s);

/* Artifacts */
HAMRED_API hamred_status hamred_artifact_parse(const char *json_text, hamred_artifact **out);
HAMRED_API hamred_status hamred_artifact_load(const char *path, hamred_artifact **out);
HAMRED_API hamred_status hamred_artifact_to_json(const hamred_artifact *a, char **out);
HAMRED_API hamred_status hamred_artifact_save(const hamred_artifact *a, const char *path);
/* The kind tag, such as "circuit" or "qssc". Valid while the handle lives. */
HAMRED_API const char *hamred_artifact_kind(const hamred_artifact *a);
HAMRED_API void hamred_artifact_free(hamred_artifact *a);

/* Built-in toy circuits; n sizes the families that take one. */
HAMRED_API hamred_status hamred_toy(const char *name, int n, hamred_artifact **out);
/* Space-separated list of toy names. */
HAMRED_API const char *hamred_toy_names(void);

/* Commands. The report handle is optional (pass NULL to skip it). */
HAMRED_API hamred_status hamred_compile(const hamred_artifact *circuit, const char *options_json,
                                        hamred_artifact **out, hamred_report **report);
/* kind: qmw, qmsa, qssc, qirr, lh, lh-hw or amplify. */
HAMRED_API hamred_status hamred_reduce(const char *kind, const hamred_artifact *const *inputs, size_t n_inputs,
                                       const char *options_json, hamred_artifact **out, hamred_report **report);
HAMRED_API hamred_status hamred_verify(const hamred_artifact *a, const char *options_json, hamred_report **report);
/* a may be NULL when the options carry "propagation". */
HAMRED_API hamred_status hamred_spectrum(const hamred_artifact *a, const char *options_json,
                                         hamred_report **report);
HAMRED_API hamred_status hamred_disperser_find(const char *options_json, hamred_artifact **out,
                                               hamred_report **report);
HAMRED_API hamred_status hamred_disperser_verify(const hamred_artifact *graph_or_tree, const char *options_json,
                                                 hamred_report **report);
/* kind: geometric or projection. */
HAMRED_API hamred_status hamred_lemma(const char *kind, const hamred_artifact *a, const hamred_artifact *b,
                                      const char *options_json, hamred_report **report);

/* Reports */
HAMRED_API hamred_verdict hamred_report_verdict(const hamred_report *r);
/* 0 when every check holds, 1 when one fails, 2 when one is undetermined. */
HAMRED_API int hamred_report_exit_code(const hamred_report *r);
HAMRED_API size_t hamred_report_check_count(const hamred_report *r);
HAMRED_API hamred_status hamred_report_to_json(const hamred_report *r, char **out);
HAMRED_API void hamred_report_free(hamred_report *r);

#ifdef __cplusplus
}
#endif

#endif /* HAMRED_HAMRED_H */
