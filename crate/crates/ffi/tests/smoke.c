#include <stdio.h>
#include <string.h>
#include "yzq.h"

int main(void) {
    YzqSeries *s = NULL;
    if (yzq_series_new("Q", 4, &s) != YZQ_STATUS_OK) return 10;
    size_t order = 0;
    yzq_series_order(s, &order);
    if (order != 4) return 11;
    char *c = NULL;
    if (yzq_series_coefficient(s, 4, &c) != YZQ_STATUS_OK) return 12;
    int ok = strcmp(c, "81/2") == 0;
    yzq_string_free(c);
    if (!ok) return 13;
    if (yzq_series_coefficient(s, 5, &c) != YZQ_STATUS_OUT_OF_RANGE) return 14;
    yzq_series_free(s);

    bool passed = false;
    int64_t first = 0;
    if (yzq_verify("prop31", 32, &passed, &first) != YZQ_STATUS_OK || !passed || first != -1) return 15;
    if (yzq_verify("nope", 32, &passed, &first) != YZQ_STATUS_UNKNOWN_SUITE) return 16;
    printf("%s\n", yzq_last_error_message());
    return 0;
}
