#pragma once
#include <stdexcept>
#include <string>

namespace rsg {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// malformed textual input
struct parse_error : error {
  using error::error;
};
// symbol outside the declared alphabet
struct alphabet_error : error {
  using error::error;
};
// operation applied outside its domain
struct domain_error : error {
  using error::error;
};
// ill-formed algebra or action instance
struct instance_error : error {
  using error::error;
};
// partition fails compatibility with the operations
struct congruence_error : error {
  using error::error;
};

} // namespace rsg
