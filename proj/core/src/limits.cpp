#include "pcp/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "pcp/error.hpp"

namespace pcp {

int max_size() {
  static const int value = [] {
    const char* env = std::getenv("C3_MAX_SIZE");
    if (env == nullptr || *env == '\0') return kDefaultMaxSize;
    int parsed = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), parsed);
    if (ec != std::errc{} || *ptr != '\0' || parsed < 0) return kDefaultMaxSize;
    return parsed;
  }();
  return value;
}

void check_size(int n, const char* what) {
  if (n < 0 || n > max_size()) {
    throw Error(ErrorCode::SizeLimit,
                std::string(what) + ": size " + std::to_string(n) +
                    " outside [0, " + std::to_string(max_size()) +
                    "] (raise C3_MAX_SIZE to allow more)");
  }
}

}  // namespace pcp
