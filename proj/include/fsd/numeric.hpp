#pragma once

#include <gmpxx.h>
#include <string>

namespace fsd {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int &v) { return v.get_str(); }

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rat &v) {
  Rat c = v;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

} // namespace fsd
