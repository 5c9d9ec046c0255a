int char_class(char c) {
  if (c >= '0' && c <= '9') return 1;
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) return 2;
  if (c == ' ' || c == '\t') return 3;
  return 0;
}
