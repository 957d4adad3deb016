#pragma once

// Exact rational scalars. All coefficient arithmetic in the library runs on
// arbitrary-precision rationals kept in lowest terms with positive
// denominator; there is no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace algq {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

struct value_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "3", "-3", "3/2"; the result is reduced and the denominator positive.
inline Rational parse_rational(std::string_view s) {
  std::size_t i = 0;
  auto fail = [&] { throw value_error("bad rational literal: '" + std::string(s) + "'"); };
  if (s.empty()) fail();
  if (s[i] == '+' || s[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  if (digits == 0) fail();
  if (i < s.size()) {
    if (s[i] != '/') fail();
    ++i;
    digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
    if (digits == 0 || i != s.size()) fail();
  }
  if (s[0] == '+') s.remove_prefix(1);  // boost's reader takes no leading plus
  try {
    Rational r{std::string(s)};
    if (denominator(r) == 0) fail();
    return r;
  } catch (const value_error&) {
    throw;
  } catch (const std::exception&) {
    fail();
  }
  return Rational{};  // unreachable
}

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace algq
