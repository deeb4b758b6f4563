/* Exercises the C interface from C. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "stacksort.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

static int contains(const ss_text* t, const char* needle) { return strstr(ss_text_str(t), needle) != NULL; }

static void test_words(void) {
  ss_word* w = NULL;
  ss_word* out = NULL;
  ss_text* t = NULL;
  uint32_t buf[32];
  size_t len = 0;
  unsigned r = 0;
  int flag = -1;

  EXPECT(ss_word_parse("5 4 4 4 5 3 2 2 2 3 3 5 6 1 1 1 6 6", &w) == SS_OK);
  EXPECT(ss_word_components(w) == 1);
  EXPECT(ss_word_length(w) == 18);
  EXPECT(ss_infer_r(w, &r) == SS_OK && r == 3);
  EXPECT(ss_is_r_permutation(w, 3, &flag) == SS_OK && flag == 1);
  EXPECT(ss_stack_sort(w, &out) == SS_OK);
  EXPECT(ss_word_format(out, &t) == SS_OK);
  EXPECT(strcmp(ss_text_str(t), "4 2 3 5 1 6") == 0);
  EXPECT(ss_word_letters(out, buf, 2, &len) == SS_OK && len == 6 && buf[0] == 4 && buf[1] == 2);
  ss_text_free(t);
  ss_word_free(out);

  EXPECT(ss_descents(w, 0, &t) == SS_OK);
  EXPECT(contains(t, "\"vector\""));
  ss_text_free(t);
  EXPECT(ss_tree_render(w, 0, SS_FORMAT_DOT, &t) == SS_OK);
  EXPECT(contains(t, "digraph"));
  ss_text_free(t);
  EXPECT(ss_tree_render(w, 0, SS_FORMAT_CSV, &t) == SS_ERR_INVALID_ARGUMENT);
  ss_word_free(w);

  {
    const uint32_t letters[] = {2, 3, 1};
    unsigned cuts[] = {1, 2};
    EXPECT(ss_word_from_letters(letters, 3, &w) == SS_OK);
    EXPECT(ss_stack_sort_machine(w, &out) == SS_OK);
    EXPECT(ss_word_letters(out, buf, 32, &len) == SS_OK && len == 3 && buf[0] == 2 && buf[1] == 1 && buf[2] == 3);
    ss_word_free(out);
    ss_word_free(w);
    EXPECT(ss_word_parse("11", &w) == SS_OK);
    EXPECT(ss_stack_sort_lambda(w, cuts, 2, 2, &out) == SS_OK);
    EXPECT(ss_word_length(out) == 2);
    ss_word_free(out);
    ss_word_free(w);
  }

  EXPECT(ss_word_parse("1 3 1 3", &w) == SS_OK);
  EXPECT(ss_stack_sort(w, &out) == SS_ERR_INVALID_INPUT);
  EXPECT(strlen(ss_last_error()) > 0);
  ss_word_free(w);

  EXPECT(ss_word_parse("1 x", &w) == SS_ERR_INVALID_INPUT);
  EXPECT(ss_word_parse(NULL, &w) == SS_ERR_INVALID_ARGUMENT);
  EXPECT(strlen(ss_status_name(SS_ERR_DOMAIN)) > 0);
  ss_word_free(NULL);
  ss_text_free(NULL);
}

static void test_checks(void) {
  ss_word* w = NULL;
  ss_text* t = NULL;
  int sortable = -1;

  EXPECT(ss_word_parse("2 3 4 1", &w) == SS_OK);
  EXPECT(ss_check(w, 2, "char", &sortable, &t) == SS_OK && sortable == 0);
  EXPECT(contains(t, "\"witness\""));
  ss_text_free(t);
  EXPECT(ss_check(w, 3, "iterate", &sortable, NULL) == SS_OK && sortable == 1);
  EXPECT(ss_check(w, 2, "west", &sortable, NULL) == SS_OK && sortable == 0);
  EXPECT(ss_check(w, 1, "231", &sortable, NULL) == SS_OK && sortable == 0);
  EXPECT(ss_check(w, 1, "west", &sortable, NULL) == SS_ERR_INVALID_ARGUMENT);
  EXPECT(ss_check(w, 0, NULL, &sortable, NULL) == SS_ERR_INVALID_ARGUMENT);
  ss_word_free(w);

  EXPECT(ss_word_parse("553111335 | 442224776667", &w) == SS_OK);
  EXPECT(ss_word_components(w) == 2);
  EXPECT(ss_is_2ss_tuple(w, 3, &sortable) == SS_OK && sortable == 0);
  ss_word_free(w);
  EXPECT(ss_word_parse("1 | 2", &w) == SS_OK);
  EXPECT(ss_is_2ss_tuple(w, 1, &sortable) == SS_OK && sortable == 1);
  ss_word_free(w);
}

static void test_counts(void) {
  ss_text* a = NULL;
  ss_text* b = NULL;
  ss_enum_query q;
  uint64_t k[] = {1, 1};
  int ok = 0;

  memset(&q, 0, sizeof q);
  q.n = 6;
  q.r = 1;
  q.filter = SS_FILTER_2SS;
  q.by_descents = 1;
  q.jobs = 1;
  EXPECT(ss_enumerate(&q, SS_FORMAT_CSV, &a) == SS_OK);
  q.jobs = 8;
  EXPECT(ss_enumerate(&q, SS_FORMAT_CSV, &b) == SS_OK);
  EXPECT(strcmp(ss_text_str(a), ss_text_str(b)) == 0);
  EXPECT(strncmp(ss_text_str(a), "k_0,k_1,count\n", 14) == 0);
  ss_text_free(a);
  ss_text_free(b);

  q.n = 3;
  q.r = 2;
  q.by_descents = 0;
  q.filter = SS_FILTER_ALL;
  EXPECT(ss_enumerate(&q, SS_FORMAT_CSV, &a) == SS_OK);
  EXPECT(strcmp(ss_text_str(a), "n,r,count\n3,2,15\n") == 0);
  ss_text_free(a);
  q.jobs = 0;
  EXPECT(ss_enumerate(&q, SS_FORMAT_CSV, &a) == SS_OK);
  EXPECT(strcmp(ss_text_str(a), "n,r,count\n3,2,15\n") == 0);
  ss_text_free(a);
  q.lambda_len = 1;
  EXPECT(ss_enumerate(&q, SS_FORMAT_CSV, &a) == SS_ERR_INVALID_ARGUMENT);

  EXPECT(ss_count_formula("2ss-total", 4, 1, NULL, 0, SS_FORMAT_JSON, &a) == SS_OK);
  EXPECT(contains(a, "\"22\""));
  ss_text_free(a);
  EXPECT(ss_count_formula("2ss", 0, 1, k, 2, SS_FORMAT_JSON, &a) == SS_OK);
  EXPECT(contains(a, "\"4\""));
  ss_text_free(a);
  EXPECT(ss_count_formula("nope", 4, 1, NULL, 0, SS_FORMAT_JSON, &a) == SS_ERR_INVALID_ARGUMENT);

  EXPECT(ss_verify_series("fe", 1, 2, 3, &ok, &a) == SS_OK && ok == 1);
  EXPECT(contains(a, "\"checked_coeffs\""));
  ss_text_free(a);
  EXPECT(ss_verify_series("zeilberger", 2, 2, 2, &ok, &a) != SS_OK);
}

int main(void) {
  EXPECT(strlen(ss_version()) > 0);
  test_words();
  test_checks();
  test_counts();
  if (failures) {
    fprintf(stderr, "%d C API check(s) failed\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
