// Class sizes and successive ratios for a few single hatted patterns.
#include <cstdio>
#include <cstdlib>

#include "hatperm/oracle.hpp"

using namespace hatperm;

int main(int argc, char** argv) {
  const int n_max = argc > 1 ? std::atoi(argv[1]) : 8;
  for (const char* text : {"2^13", "^123", "1^32", "2-13"}) {
    const auto pattern = parse_pattern(text);
    std::printf("%s\n", to_string(pattern).c_str());
    for (const auto& row : growth_table(pattern, n_max)) {
      if (row.ratio) {
        std::printf("  n=%2d  %10llu  x%.3f\n", row.n, static_cast<unsigned long long>(row.count), *row.ratio);
      } else {
        std::printf("  n=%2d  %10llu\n", row.n, static_cast<unsigned long long>(row.count));
      }
    }
  }
}
