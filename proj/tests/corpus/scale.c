int scale(int x) {
  return x * 1;
}

int add(int a, int b) {
  return a + b;
}
