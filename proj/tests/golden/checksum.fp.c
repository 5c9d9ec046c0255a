/* False-positive driver for checksum. Generated by motif. */
#include "motif_runtime.h"

unsigned int checksum(const unsigned char buf[16]);
unsigned int checksum(const unsigned char buf[16]);

int main(int argc, char **argv) {
  load_file(argc > 1 ? argv[1] : 0, 16);

  int ret = 0;
  /* Variables for the original function */
  unsigned char origin_buf[16];
  /* Variables for the mutated function */
  unsigned char mut_buf[16];
  /* Variables for the return values */
  unsigned int origin_return;
  unsigned int mut_return;

  get_value(origin_buf, sizeof(origin_buf));
  motif_checkpoint("CALL_ORIG");
  origin_return = checksum(origin_buf);
  motif_checkpoint("RET_ORIG");

  seek_data_index(0);
  get_value(mut_buf, sizeof(mut_buf));
  motif_checkpoint("CALL_MUT");
  mut_return = checksum(mut_buf);
  motif_checkpoint("RET_MUT");

  ret |= compare_value(origin_buf, mut_buf, sizeof(origin_buf));
  ret |= compare_value(&origin_return, &mut_return, sizeof(origin_return));
  if (ret != 0) {
    motif_checkpoint("DIFF");
    safe_abort();
  }
  motif_checkpoint("EQ");
  return 0;
}
