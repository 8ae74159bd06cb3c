#include <cstdio>

int main() {
  std::puts("semikit: work in progress");
  return 0;
}
