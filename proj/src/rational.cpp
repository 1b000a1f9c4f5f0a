#include "kpack/rational.hpp"

#include <cctype>

namespace kpack {

Rational Rational::from_string(const std::string& s) {
  // Validate shape before handing to GMP: [-]digits[/digits]
  auto digits = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = part[0] == '-' ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  const auto slash = s.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = digits(s);
  } else {
    const std::string den = s.substr(slash + 1);
    ok = digits(s.substr(0, slash)) && digits(den) && den[0] != '-' && den != "0";
  }
  if (!ok) throw ParamError("malformed rational: \"" + s + "\"");
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw ParamError("malformed rational: \"" + s + "\"");
  v.canonicalize();
  Rational r;
  r.v_ = v;
  return r;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational pow(const Rational& base, long exp) {
  if (exp < 0) throw ParamError("negative exponent");
  Rational r(1);
  Rational b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
  static const char* hexd = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hexd[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace kpack
