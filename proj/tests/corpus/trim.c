int trim(char s[16]) {
  int len = 0;
  int start = 0;
  s[15] = 0;
  while (s[len] != 0) len++;
  while (len > 0 && s[len - 1] == ' ') len--;
  while (start < len && s[start] == ' ') start++;
  for (int i = start; i < len; i++) {
    s[i - start] = s[i];
  }
  len = len - start;
  s[len] = 0;
  return len;
}
