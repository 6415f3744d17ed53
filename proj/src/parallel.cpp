#include "parallel.hpp"

#include <cstdlib>
#include <thread>

namespace braidforge {

int parallel_workers() {
  const char* env = std::getenv("BRAIDFORGE_THREADS");
  if (env == nullptr) return 1;
  int v = std::atoi(env);
  if (v < 1) return 1;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw > 0 && v > static_cast<int>(hw)) v = static_cast<int>(hw);
  return v;
}

}  // namespace braidforge
