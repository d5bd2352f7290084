#include <stdio.h>
#include <string.h>

#include "cayley_spectra.h"

static int check(int ok, const char *what) {
    printf("%s %s\n", ok ? "ok" : "FAIL", what);
    return ok ? 0 : 1;
}

int main(void) {
    int failures = 0;
    char *value = NULL, *witnesses = NULL;

    failures += check(cs_lambda2(6, 2, &value, &witnesses) == CS_STATUS_OK, "lambda2 status");
    failures += check(value && strcmp(value, "18") == 0, "lambda2 value");
    failures += check(witnesses && strstr(witnesses, "[5,1]") != NULL, "lambda2 witness");
    cs_string_free(value);
    cs_string_free(witnesses);

    char *chi = NULL;
    failures += check(cs_character("3,2", "3,1,1", &chi) == CS_STATUS_OK && strcmp(chi, "-1") == 0, "character");
    cs_string_free(chi);

    CsSpectrum *spectrum = NULL;
    failures += check(cs_spectrum_new(4, 1, &spectrum) == CS_STATUS_OK, "spectrum status");
    failures += check(cs_spectrum_len(spectrum) == 5, "spectrum length");
    cs_spectrum_free(spectrum);

    failures += check(cs_spectrum_new(3, 2, &spectrum) == CS_STATUS_OUT_OF_RANGE, "out of range status");
    char *message = cs_last_error();
    failures += check(message && strlen(message) > 0, "error message");
    cs_string_free(message);

    return failures;
}
