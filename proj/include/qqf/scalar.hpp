#ifndef QQF_SCALAR_HPP
#define QQF_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qqf {

/// Exact rational; always kept in lowest terms with a positive denominator.
/// Expression templates are disabled so that `auto` and lambdas deduce plain values.
using Scalar = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Vec = std::vector<Scalar>;

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

inline bool is_zero(const Vec& v)
{
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Scalar sign_scalar(int s) { return Scalar(s); }

/// Formats as "n" or "p/q".
inline std::string to_string(const Scalar& s)
{
  Integer num = boost::multiprecision::numerator(s);
  Integer den = boost::multiprecision::denominator(s);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace detail {

inline bool parse_integer(std::string_view text, Integer& out, bool allow_sign)
{
  if (text.empty()) return false;
  std::size_t pos = 0;
  bool negative = false;
  if (allow_sign && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) return false;
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    value = value * 10 + (c - '0');
  }
  out = negative ? Integer(-value) : value;
  return true;
}

}  // namespace detail

/// Parses "n", "-n", "p/q" exactly. Throws std::invalid_argument on anything else.
inline Scalar parse_scalar(std::string_view text)
{
  const auto slash = text.find('/');
  Integer num;
  if (slash == std::string_view::npos) {
    if (!detail::parse_integer(text, num, true))
      throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    return Scalar(num);
  }
  Integer den;
  if (!detail::parse_integer(text.substr(0, slash), num, true) ||
      !detail::parse_integer(text.substr(slash + 1), den, false))
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Scalar(num, den);
}

}  // namespace qqf

#endif  // QQF_SCALAR_HPP
