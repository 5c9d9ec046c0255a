unsigned int checksum(const unsigned char buf[16]) {
  unsigned int sum = 0;
  for (int i = 0; i < 16; i++) {
    sum = (sum << 1 | sum >> 31) ^ buf[i];
  }
  return sum;
}
