#include "opforge/algebra/scalar.hpp"

#include "opforge/error.hpp"

namespace opforge {

std::string to_string(const Scalar& s) { return s.get_str(); }

Scalar parse_scalar(std::string_view text) {
  std::string t(text);
  if (t.empty()) throw Error("empty rational");
  Scalar s;
  if (s.set_str(t, 10) != 0) throw Error("malformed rational '" + t + "'");
  if (s.get_den() == 0) throw Error("zero denominator in '" + t + "'");
  s.canonicalize();
  return s;
}

}  // namespace opforge
