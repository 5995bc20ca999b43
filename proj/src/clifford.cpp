#include "cliffwave/clifford.hpp"

#include <sstream>

namespace cliffwave {

std::string blade_name(std::uint8_t mask) {
  if (mask == 0) return "1";
  std::string s = "g";
  for (int mu = 0; mu < 4; ++mu)
    if ((mask >> mu) & 1) s += static_cast<char>('0' + mu);
  return s;
}

namespace {

template <typename T>
std::string format_multivector(const BasicMultivector<T>& m, int precision) {
  std::ostringstream os;
  os.precision(precision);
  bool first = true;
  for (auto mask : kCanonicalBladeMasks) {
    const T c = m.coeff(mask);
    if (c == T(0)) continue;
    if (!first) os << " + ";
    os << c;
    if (mask != 0) os << "*" << blade_name(mask);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

std::string to_string(const Multivector& m, int precision) { return format_multivector(m, precision); }
std::string to_string(const CMultivector& m, int precision) { return format_multivector(m, precision); }

}  // namespace cliffwave
