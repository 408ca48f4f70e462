#include "strandfloer/parallel.hpp"

#include <cstdlib>
#include <string>

namespace strandfloer {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("STRANDFLOER_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace strandfloer
