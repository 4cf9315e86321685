#include <iostream>

#include "msetord/bench.hpp"

int main(int argc, char** argv) {
  return msetord::bench::bench_main(argc, argv, std::cout, std::cerr);
}
