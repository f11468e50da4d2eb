#include "sphpart/numeric.hpp"

#include <limits>
#include <mutex>
#include <regex>
#include <stdexcept>
#include <vector>

namespace sphpart {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  static std::mutex mutex;
  static std::vector<BigInt> table{BigInt(1)};
  std::lock_guard lock(mutex);
  while (static_cast<int>(table.size()) <= n) {
    table.push_back(table.back() * static_cast<long>(table.size()));
  }
  return table[n];
}

BigInt binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt result = 1;
  for (int i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(^\s*([+-]?\d+)(?:/(\d+))?\s*$)");
  std::string s(text);
  std::smatch match;
  if (!std::regex_match(s, match, pattern)) {
    throw std::invalid_argument("not an exact rational (expected p or p/q): '" + s + "'");
  }
  BigInt num(match[1].str().front() == '+' ? match[1].str().substr(1) : match[1].str());
  BigInt den = match[2].matched ? BigInt(match[2].str()) : BigInt(1);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  auto num = boost::multiprecision::numerator(value);
  auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const BigInt& value) { return value.str(); }

bool fits_int64(const BigInt& value) {
  return value >= std::numeric_limits<std::int64_t>::min() &&
         value <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace sphpart
