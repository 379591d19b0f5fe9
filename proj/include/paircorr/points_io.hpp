#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "paircorr/sequence.hpp"

namespace paircorr {

class IngestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads one point per line: "p/q" or an exact decimal. '#' starts a comment,
// blank lines are skipped, values are reduced mod 1 into [0, 1). Throws
// IngestError naming the offending line on malformed input, or on an
// unreadable file.
PointSet ingest_points(const std::string& path);

// Same, from an already-open stream; `name` labels error messages.
PointSet parse_points(std::istream& in, const std::string& name);

}  // namespace paircorr
