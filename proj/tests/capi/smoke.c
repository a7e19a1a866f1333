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

/* Drives the toy chain through the C interface from plain C. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "hamred/hamred.h"

static int failures = 0;

#define EXPECT(cond)                                                          \
    do {                                                                      \
        if (!(cond)) {                                                        \
            fprintf(stderr, "%s:%d: expected %s (%s)\n", __FILE__, __LINE__, \
                    #cond, hamred_last_error());                              \
            ++failures;                                                       \
        }                                                                     \
    } while (0)

int main(void) {
    hamred_artifact *circuit = NULL, *ham = NULL, *qmw = NULL, *qssc = NULL, *qirr = NULL, *back = NULL;
    hamred_report *report = NULL;
    char *text = NULL;

    EXPECT(strcmp(hamred_version(), "hamred/1") == 0);

    EXPECT(hamred_toy("accept_x1", 1, &circuit) == HAMRED_OK);
    EXPECT(strcmp(hamred_artifact_kind(circuit), "circuit") == 0);

    EXPECT(hamred_compile(circuit, "{\"clock\": \"unary\"}", &ham, &report) == HAMRED_OK);
    EXPECT(strcmp(hamred_artifact_kind(ham), "kitaev_hamiltonian") == 0);
    EXPECT(hamred_report_verdict(report) == HAMRED_VERDICT_HOLDS);
    hamred_report_free(report);
    report = NULL;

    /* Round trip through text. */
    EXPECT(hamred_artifact_to_json(circuit, &text) == HAMRED_OK);
    EXPECT(hamred_artifact_parse(text, &back) == HAMRED_OK);
    EXPECT(back != NULL && strcmp(hamred_artifact_kind(back), "circuit") == 0);
    hamred_string_free(text);
    hamred_artifact_free(back);

    /* Schema errors carry a JSON path and map to exit code 3. */
    back = NULL;
    EXPECT(hamred_artifact_parse("{\"version\": \"hamred/1\"}", &back) == HAMRED_ERR_SCHEMA);
    EXPECT(back == NULL);
    EXPECT(strstr(hamred_last_error(), "$.kind") != NULL);
    EXPECT(hamred_status_exit_code(HAMRED_ERR_SCHEMA) == 3);
    EXPECT(hamred_artifact_parse("{", &back) == HAMRED_ERR_SCHEMA);

    /* Chain qmw -> qssc -> qirr. */
    {
        const hamred_artifact *in[1] = {circuit};
        EXPECT(hamred_reduce("qmw", in, 1, "{\"g\": 1, \"g_prime\": 1}", &qmw, NULL) == HAMRED_OK);
    }
    {
        const hamred_artifact *in[1] = {qmw};
        EXPECT(hamred_reduce("qssc", in, 1, NULL, &qssc, &report) == HAMRED_OK);
        EXPECT(hamred_report_exit_code(report) == 0);
        EXPECT(hamred_report_check_count(report) == 2);
        hamred_report_free(report);
        report = NULL;
        EXPECT(hamred_reduce("qssc", in, 1, "{\"delta\": 1}", &back, NULL) == HAMRED_ERR_NOT_CERTIFIED);
        EXPECT(strstr(hamred_last_error(), "margin") != NULL);
        EXPECT(hamred_reduce("qmsa", (const hamred_artifact *const[]){circuit}, 1, "{\"g\": 1, \"g_prime\": 1}",
                             &back, NULL) == HAMRED_ERR_INVALID_ARGUMENT);
    }
    {
        const hamred_artifact *in[1] = {qssc};
        EXPECT(hamred_reduce("qirr", in, 1, "{\"mode\": \"improved\"}", &qirr, NULL) == HAMRED_OK);
    }

    EXPECT(hamred_verify(qssc, "{\"subset\": [0, 1, 2]}", &report) == HAMRED_OK);
    EXPECT(hamred_report_verdict(report) == HAMRED_VERDICT_HOLDS);
    EXPECT(hamred_report_to_json(report, &text) == HAMRED_OK);
    EXPECT(strstr(text, "\"IsCover\"") != NULL);
    hamred_string_free(text);
    hamred_report_free(report);

    EXPECT(hamred_verify(qssc, "{\"subset\": []}", &report) == HAMRED_OK);
    EXPECT(hamred_report_exit_code(report) == 1);
    hamred_report_free(report);

    EXPECT(hamred_verify(qirr, "{\"cover\": [0, 1, 2]}", &report) == HAMRED_OK);
    EXPECT(hamred_report_verdict(report) == HAMRED_VERDICT_HOLDS);
    hamred_report_free(report);

    EXPECT(hamred_spectrum(NULL, "{\"propagation\": 3}", &report) == HAMRED_OK);
    EXPECT(hamred_report_verdict(report) == HAMRED_VERDICT_HOLDS);
    hamred_report_free(report);

    EXPECT(hamred_verify(NULL, NULL, &report) == HAMRED_ERR_INVALID_ARGUMENT);

    hamred_artifact_free(circuit);
    hamred_artifact_free(ham);
    hamred_artifact_free(qmw);
    hamred_artifact_free(qssc);
    hamred_artifact_free(qirr);

    if (failures == 0) printf("C API smoke test passed\n");
    return failures == 0 ? 0 : 1;
}
