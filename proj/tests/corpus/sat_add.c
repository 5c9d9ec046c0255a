unsigned char sat_add(unsigned char a, unsigned char b) {
  unsigned int s = a + b;
  if (s > 255) return 255;
  return (unsigned char)s;
}
