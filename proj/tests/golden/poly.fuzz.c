/* Fuzzing driver for poly. Generated by motif. */
#include "motif_runtime.h"

double poly(double x);
double mut_poly(double x);

int main(int argc, char **argv) {
  load_file(argc > 1 ? argv[1] : 0, 8);

  int ret = 0;
  /* Variables for the original function */
  double origin_x;
  /* Variables for the mutated function */
  double mut_x;
  /* Variables for the return values */
  double origin_return;
  double mut_return;

  get_value(&origin_x, sizeof(origin_x));
  motif_checkpoint("CALL_ORIG");
  origin_return = poly(origin_x);
  motif_checkpoint("RET_ORIG");

  seek_data_index(0);
  get_value(&mut_x, sizeof(mut_x));
  motif_checkpoint("CALL_MUT");
  mut_return = mut_poly(mut_x);
  motif_checkpoint("RET_MUT");

  ret |= compare_value(&origin_x, &mut_x, sizeof(origin_x));
  ret |= compare_value(&origin_return, &mut_return, sizeof(origin_return));
  if (ret != 0) {
    motif_checkpoint("DIFF");
    safe_abort();
  }
  motif_checkpoint("EQ");
  return 0;
}
