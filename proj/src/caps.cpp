#include "qct/caps.hpp"

#include <cstdlib>
#include <string>

namespace qct {

Caps caps_from_env() {
  Caps caps;
  if (const char* v = std::getenv("QCT_CAP")) {
    try {
      std::size_t used = 0;
      const unsigned long n = std::stoul(v, &used);
      if (n > 0 && used == std::string(v).size()) {
        caps.automorphism_elements = n;
        caps.closure_elements = n;
      }
    } catch (const std::exception&) {
    }
  }
  return caps;
}

}  // namespace qct
