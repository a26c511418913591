#include "dcorr/half_int.hpp"

#include "dcorr/errors.hpp"
#include "dcorr/rational.hpp"

namespace dcorr {

HalfInt HalfInt::parse(std::string_view text) {
  BigRational r = parse_rational(text);
  BigRational doubled = r * 2;
  if (doubled.get_den() != 1 || !doubled.get_num().fits_sint_p())
    throw UsageError("not a half-integer: '" + std::string(text) + "'");
  return HalfInt{static_cast<int>(doubled.get_num().get_si())};
}

std::string HalfInt::str() const {
  if (x2 % 2 == 0) return std::to_string(x2 / 2);
  return std::to_string(x2) + "/2";
}

}  // namespace dcorr
