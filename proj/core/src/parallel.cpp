#include "allab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace allab {

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  const char* env = std::getenv("ALLAB_THREADS");
  if (env == nullptr || *env == '\0') return hw;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 0) return hw;
  if (v == 0) return hw;  // 0 = auto
  return static_cast<int>(v);
}

}  // namespace allab
