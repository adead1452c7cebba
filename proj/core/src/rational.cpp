#include "gmet/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gmet {

Rat rat_from_decimal(const std::string& text) {
  size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string int_part, frac_part;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) int_part += text[i++];
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) frac_part += text[i++];
  }
  if (i != text.size() || (int_part.empty() && frac_part.empty())) {
    throw std::invalid_argument("malformed decimal literal: '" + text + "'");
  }
  if (int_part.empty()) int_part = "0";

  mpz_class num(int_part);
  mpz_class den(1);
  for (char c : frac_part) {
    num *= 10;
    num += c - '0';
    den *= 10;
  }
  Rat r(num, den);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string fraction_string(const Rat& r) { return r.get_str(); }

std::string decimal_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  mpz_class den = c.get_den();
  unsigned long twos = 0, fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) {
    throw std::domain_error("rational " + c.get_str() + " has no finite decimal expansion");
  }
  unsigned long digits = std::max(twos, fives);
  mpz_class scaled = c.get_num();
  for (unsigned long k = twos; k < digits; ++k) scaled *= 2;
  for (unsigned long k = fives; k < digits; ++k) scaled *= 5;

  bool neg = scaled < 0;
  mpz_class abs_scaled = abs(scaled);
  std::string s = abs_scaled.get_str();
  std::string out;
  if (digits == 0) {
    out = s;
  } else {
    if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
    out = s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return neg ? "-" + out : out;
}

double to_double(const Rat& r) { return r.get_d(); }

}  // namespace gmet
