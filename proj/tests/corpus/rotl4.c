unsigned short rotl4(unsigned short v) {
  return (unsigned short)((v << 4) | (v >> 12));
}
