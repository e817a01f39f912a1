#pragma once

#include <stdexcept>
#include <string>

namespace shs {

// malformed input: bad node ids, bad parameters, unparsable files
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// an edge update that does not apply to the current graph
class UpdateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace shs
