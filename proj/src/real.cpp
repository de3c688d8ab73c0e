#include "levelone/real.hpp"

#include <cctype>
#include <vector>

#include <mpfr.h>

namespace levelone {

std::string format_decimal(const Real& x, int digits) {
  const int n = mpfr_snprintf(nullptr, 0, "%.*RNf", digits, x.backend().data());
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*RNf", digits, x.backend().data());
  std::string s(buf.data(), static_cast<std::size_t>(n));

  // mpfr honours LC_NUMERIC for the radix character.
  std::size_t dot = std::string::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '-' && !std::isdigit(static_cast<unsigned char>(s[i]))) {
      s[i] = '.';
      dot = i;
      break;
    }
  }
  if (dot == std::string::npos) return s + ".0";
  while (s.size() > dot + 2 && s.back() == '0') s.pop_back();
  if (s == "-0.0") s = "0.0";
  return s;
}

}  // namespace levelone
