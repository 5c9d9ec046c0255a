void __motif_cov(unsigned short id);

int gate(const unsigned char b[4]) {
  __motif_cov(101);
  if (b[0] == 'M') {
    __motif_cov(202);
    if (b[1] == 'O') {
      __motif_cov(303);
      if (b[2] == 'T') {
        __motif_cov(404);
        if (b[3] == 'F') {
          __motif_cov(505);
          return 1;
        }
      }
    }
  }
  return 0;
}
