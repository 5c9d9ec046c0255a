/* Test driver for checksum. Generated by motif. */
#include <stdio.h>
#include "motif_runtime.h"

unsigned int checksum(const unsigned char buf[16]);

int main(int argc, char **argv) {
  load_file(argc > 1 ? argv[1] : 0, 16);

  unsigned char buf[16];
  unsigned int _return;
  get_value(buf, sizeof(buf));

  _return = checksum(buf);

  {
    size_t motif_k;
    for (motif_k = 0; motif_k < 16; ++motif_k)
      printf("buf[%zu] (unsigned char) = %u\n", motif_k, (unsigned)buf[motif_k]);
  }
  printf("return (unsigned int) = %u\n", (unsigned)_return);
  return 0;
}
