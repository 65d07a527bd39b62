// SPDX-License-Identifier: Apache-2.0

#include <malloc.h>

#include <iostream>

#include "genpal/cli.hpp"

int main(int argc, char** argv) {
  // Keep freed memory in the heap so repeated bench runs do not re-fault pages.
  mallopt(M_MMAP_THRESHOLD, 32 << 20);
  mallopt(M_TRIM_THRESHOLD, 1 << 30);
  return genpal::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
