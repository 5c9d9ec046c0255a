/* Test driver for poly. Generated by motif. */
#include <stdio.h>
#include "motif_runtime.h"

double poly(double x);

int main(int argc, char **argv) {
  load_file(argc > 1 ? argv[1] : 0, 8);

  double x;
  double _return;
  get_value(&x, sizeof(x));

  _return = poly(x);

  printf("return (double) = %.17g\n", (double)_return);
  return 0;
}
