// Copyright 2026 The Motif Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define _GNU_SOURCE
#include "motif_runtime.h"

#include <fcntl.h>
#include <signal.h>
#include <stdint.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>
#include <sys/mman.h>
#include <unistd.h>

static unsigned char *input;
static size_t input_len;
static size_t input_pos;

static int log_fd = -1;
static int log_opened;

static unsigned char fallback_map[MOTIF_MAP_SIZE];
static unsigned char *cov_map;
static unsigned short cov_prev;

static uint64_t rng_state;

static unsigned char next_random_byte(void) {
  rng_state = rng_state * 6364136223846793005ULL + 1442695040888963407ULL;
  return (unsigned char)(rng_state >> 56);
}

void load_file(const char *path, size_t needed_bytes) {
  FILE *f = path ? fopen(path, "rb") : NULL;
  if (f == NULL) exit(MOTIF_EXIT_INPUT_ERROR);
  size_t cap = 4096, len = 0;
  unsigned char *buf = malloc(cap);
  for (;;) {
    if (len == cap) {
      cap *= 2;
      buf = realloc(buf, cap);
    }
    size_t got = fread(buf + len, 1, cap - len, f);
    if (got == 0) break;
    len += got;
  }
  fclose(f);
  if (len < needed_bytes) {
    buf = realloc(buf, needed_bytes);
    const char *seed = getenv("MOTIF_RAND_SEED");
    rng_state = seed ? strtoull(seed, NULL, 0) : 0;
    for (size_t i = len; i < needed_bytes; ++i) buf[i] = next_random_byte();
    len = needed_bytes;
  }
  input = buf;
  input_len = len;
  input_pos = 0;
}

void get_value(void *dst, size_t n) {
  size_t avail = input_pos < input_len ? input_len - input_pos : 0;
  size_t take = n < avail ? n : avail;
  if (take > 0) memcpy(dst, input + input_pos, take);
  if (take < n) memset((unsigned char *)dst + take, 0, n - take);
  input_pos += take;
}

void seek_data_index(size_t i) { input_pos = i <= input_len ? i : input_len; }

int compare_value(const void *a, const void *b, size_t n) {
  return n != 0 && memcmp(a, b, n) != 0;
}

void motif_log_to_stderr(void) {
  log_fd = 2;
  log_opened = 1;
}

void motif_checkpoint(const char *token) {
  if (!log_opened) {
    const char *path = getenv("MOTIF_LOG_FILE");
    if (path) log_fd = open(path, O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
    log_opened = 1;
  }
  if (log_fd < 0) return;
  char line[64];
  size_t n = strlen(token);
  if (n > sizeof(line) - 1) n = sizeof(line) - 1;
  memcpy(line, token, n);
  line[n] = '\n';
  ssize_t ignored = write(log_fd, line, n + 1);
  (void)ignored;
}

void safe_abort(void) {
  fflush(NULL);
  if (cov_map && cov_map != fallback_map) msync(cov_map, MOTIF_MAP_SIZE, MS_SYNC);
  abort();
}

void printf_struct(const char *label, const void *p, size_t n) {
  const unsigned char *b = p;
  fputs(label, stdout);
  for (size_t i = 0; i < n; ++i) printf("%s%02x", i ? " " : "", b[i]);
  fputc('\n', stdout);
}

static void map_coverage(void) {
  cov_map = fallback_map;
  const char *path = getenv("MOTIF_COV_FILE");
  if (!path) return;
  int fd = open(path, O_RDWR | O_CLOEXEC);
  if (fd < 0) return;
  void *m = mmap(NULL, MOTIF_MAP_SIZE, PROT_READ | PROT_WRITE, MAP_SHARED, fd, 0);
  close(fd);
  if (m != MAP_FAILED) cov_map = m;
}

void __motif_cov(unsigned short id) {
  if (!cov_map) map_coverage();
  unsigned short idx = (unsigned short)(id ^ cov_prev);
  if (cov_map[idx] != 255) cov_map[idx]++;
  cov_prev = (unsigned short)(id >> 1);
}
