#include "vvjack/rational.hpp"

namespace vvjack {

BigQ bigq_parse(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      BigInt n(text);
      return BigQ(n);
    }
    BigInt n(text.substr(0, slash));
    BigInt d(text.substr(slash + 1));
    if (d == 0) throw DivisionByZero();
    return bigq(n, d);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational: " + text);
  }
}

std::string bigq_str(const BigQ& q) { return q.get_str(); }

BigQ bigq_pow(const BigQ& base, unsigned long e) {
  BigQ out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return out;
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace vvjack
