#pragma once

namespace pcp {

inline constexpr int kDefaultMaxSize = 8;

/// Upper bound on object sizes accepted by the enumerators and the CLI.
/// Read once from the C3_MAX_SIZE environment variable; defaults to 8.
int max_size();

/// Throws Error{SizeLimit} unless 0 <= n <= max_size().
void check_size(int n, const char* what);

}  // namespace pcp
