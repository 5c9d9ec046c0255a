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

/* Runtime linked into every generated driver. */

#ifndef MOTIF_RUNTIME_H_
#define MOTIF_RUNTIME_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Exit status of a driver whose input file cannot be read. */
#define MOTIF_EXIT_INPUT_ERROR 111

#define MOTIF_MAP_SIZE 65536

void load_file(const char *path, size_t needed_bytes);
void get_value(void *dst, size_t n);
void seek_data_index(size_t i);
int compare_value(const void *a, const void *b, size_t n);

void motif_checkpoint(const char *token);
void motif_log_to_stderr(void);
void safe_abort(void);

void printf_struct(const char *label, const void *p, size_t n);

void __motif_cov(unsigned short id);

#ifdef __cplusplus
}
#endif

#endif /* MOTIF_RUNTIME_H_ */
