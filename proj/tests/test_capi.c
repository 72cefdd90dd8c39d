/* Exercises the C API from plain C. */
#include <stdio.h>
#include <string.h>

#include "crlab.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expectation failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

int main(void) {
  crlab_hypersurface* m = NULL;
  unsigned ell = 99;
  int inside = -1;
  crlab_options* opt;
  crlab_report* report = NULL;
  const char* json;
  const char* paths[2] = {CRLAB_CORPUS_DIR "/sphere2.crh", CRLAB_CORPUS_DIR "/levi_flat.crh"};

  EXPECT(strcmp(crlab_version(), "0.1.0") == 0);

  EXPECT(crlab_hypersurface_new(2, "z2 + conj(z2) + z1*conj(z1)", NULL, &m) == CRLAB_OK);
  EXPECT(crlab_hypersurface_levi_type(m, &ell) == CRLAB_OK);
  EXPECT(ell == 1);
  EXPECT(crlab_hypersurface_contains(m, "1,0,-1/2,0", &inside) == CRLAB_OK);
  EXPECT(inside == 1);
  EXPECT(crlab_hypersurface_contains(m, "1,0,0,0", &inside) == CRLAB_OK);
  EXPECT(inside == 0);
  EXPECT(crlab_hypersurface_contains(m, "1,0", &inside) == CRLAB_INPUT_ERROR);
  EXPECT(strlen(crlab_last_error()) > 0);
  crlab_hypersurface_free(m);

  m = NULL;
  EXPECT(crlab_hypersurface_new(2, "(w - conj(w))/(2*i)", NULL, &m) == CRLAB_OK);
  EXPECT(crlab_hypersurface_levi_type(m, &ell) == CRLAB_OK);
  EXPECT(ell == 0);
  crlab_hypersurface_free(m);
  EXPECT(crlab_hypersurface_new(2, "z2 +", NULL, &m) == CRLAB_INPUT_ERROR);
  EXPECT(crlab_hypersurface_new(2, NULL, NULL, &m) == CRLAB_INPUT_ERROR);

  opt = crlab_options_new();
  EXPECT(crlab_options_set_int(opt, "bracket_max", 8) == CRLAB_OK);
  EXPECT(crlab_options_set_int(opt, "no_such_key", 1) == CRLAB_INPUT_ERROR);
  EXPECT(strstr(crlab_last_error(), "no_such_key") != NULL);
  EXPECT(crlab_options_set_int(opt, "steps", -1) == CRLAB_INPUT_ERROR);
  EXPECT(crlab_options_set_string(opt, "t_end", "0.5") == CRLAB_OK);

  EXPECT(crlab_artin("x*Y^2 - 1", opt, &report) == CRLAB_OK);
  json = crlab_report_render(report, CRLAB_FORMAT_JSON);
  EXPECT(strstr(json, "\"name\":\"gap_bound_r\"") != NULL);
  EXPECT(strstr(json, "\"verdict\":2") != NULL);
  EXPECT(strstr(crlab_report_render(report, CRLAB_FORMAT_TEXT), "gap_bound_r: 2") != NULL);
  crlab_report_free(report);

  report = NULL;
  EXPECT(crlab_analyze_file(CRLAB_CORPUS_DIR "/sphere2.crh", opt, &report) == CRLAB_OK);
  EXPECT(crlab_report_status(report) == CRLAB_OK);
  EXPECT(strstr(crlab_report_render(report, CRLAB_FORMAT_JSON), "\"codimension\":1") != NULL);
  crlab_report_free(report);

  report = NULL;
  EXPECT(crlab_analyze_file(CRLAB_CORPUS_DIR "/example_2_10_M.crh", opt, &report) == CRLAB_INPUT_ERROR);
  EXPECT(report == NULL);
  EXPECT(strstr(crlab_last_error(), ":6:") != NULL);
  EXPECT(crlab_analyze_file("/nonexistent.crh", opt, &report) == CRLAB_INPUT_ERROR);

  EXPECT(crlab_corpus(paths, 2, 2, opt, &report) == CRLAB_OK);
  EXPECT(strstr(crlab_report_render(report, CRLAB_FORMAT_JSON), "levi_flat") != NULL);
  crlab_report_free(report);

  crlab_options_free(opt);
  crlab_report_free(NULL);
  if (failures == 0) printf("capi: all expectations met\n");
  return failures == 0 ? 0 : 1;
}
