#include "garnier/algebra/scalar.hpp"

#include <stdexcept>
#include <string>

namespace garnier {

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw std::invalid_argument("empty number");
  s = s.substr(b, e - b + 1);
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument("bad number '" + s + "'");
    if (digits[0] == '+') digits.erase(0, 1);
    Integer num;
    if (num.set_str(digits, 10) != 0) throw std::invalid_argument("bad number '" + s + "'");
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    Scalar q(num, den);
    q.canonicalize();
    return q;
  }
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  Scalar q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad number '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace garnier
