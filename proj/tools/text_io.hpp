#ifndef SUFFRIDGE_TOOLS_TEXT_IO_HPP
#define SUFFRIDGE_TOOLS_TEXT_IO_HPP

#include <string>

namespace cli {

/// Shortest decimal with 17 significant digits; round-trips a double exactly.
std::string fmt17(double v);

/// Write to `path` atomically (temp file + rename), or to stdout when path is
/// empty. Throws std::runtime_error with the path on I/O failure.
void write_output(const std::string& path, const std::string& content);

}  // namespace cli

#endif
