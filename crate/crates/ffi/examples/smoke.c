#include <stdio.h>
#include <string.h>

#include "hermgf.h"

static int check(int ok, const char *what) {
    if (!ok) {
        const char *err = hg_last_error();
        fprintf(stderr, "FAIL %s (%s)\n", what, err ? err : "no error");
    }
    return ok ? 0 : 1;
}

int main(void) {
    int failures = 0;

    HgPolynomial *h = NULL;
    failures += check(hg_hermite('h', 4, &h) == HG_STATUS_OK, "hermite");
    char *text = hg_polynomial_to_string(h);
    failures += check(strcmp(text, "u^4 + 6*u^2 + 3") == 0, "hermite text");
    printf("h_4 = %s\n", text);
    hg_string_free(text);
    hg_polynomial_free(h);

    HgReport *report = NULL;
    failures += check(hg_verify("main", 6, &report) == HG_STATUS_OK, "verify");
    failures += check(hg_report_is_verified(report), "verified");
    char *json = hg_report_to_json(report);
    printf("%s\n", json);
    hg_string_free(json);
    hg_report_free(report);

    HgSeries *w = NULL;
    failures += check(hg_expand("w", 4, &w) == HG_STATUS_OK, "expand");
    HgPolynomial *c2 = NULL;
    failures += check(hg_series_coefficient(w, 2, &c2) == HG_STATUS_OK, "coefficient");
    char *c2_text = hg_polynomial_to_string(c2);
    failures += check(strcmp(c2_text, "18*u^3") == 0, "w coefficient");
    hg_string_free(c2_text);
    hg_polynomial_free(c2);
    hg_series_free(w);

    uint64_t count = 0;
    failures += check(hg_w_tree_count(3, &count) == HG_STATUS_OK && count == 810, "w-trees");

    failures += check(hg_verify("nope", 4, &report) == HG_STATUS_UNKNOWN_NAME, "unknown name");
    failures += check(hg_last_error() != NULL, "last error set");

    return failures == 0 ? 0 : 1;
}
