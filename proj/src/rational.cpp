#include "hrpairs/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hrp {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view num_digits = num;
  if (!num_digits.empty() && (num_digits.front() == '+' || num_digits.front() == '-')) {
    num_digits.remove_prefix(1);
  }
  if (!all_digits(num_digits) || !all_digits(den)) {
    throw std::invalid_argument("rational: malformed text \"" + std::string(text) + "\"");
  }
  const bool negative = num.front() == '-';
  Int numerator{std::string(num_digits)};
  if (negative) numerator = -numerator;
  return make_rat(numerator, Int(std::string(den)));
}

std::string rat_str(const Rat& q) { return q.get_str(); }

bool is_integer(const Rat& q) { return q.get_den() == 1; }

IsqrtResult integer_sqrt(const Int& n) {
  if (n < 0) throw std::domain_error("integer_sqrt: negative input");
  IsqrtResult result;
  result.root = sqrt(n);
  result.exact = (result.root * result.root == n);
  return result;
}

std::optional<Rat> rational_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  const auto num = integer_sqrt(q.get_num());
  if (!num.exact) return std::nullopt;
  const auto den = integer_sqrt(q.get_den());
  if (!den.exact) return std::nullopt;
  return make_rat(num.root, den.root);
}

Int height(const Rat& q) {
  Int n = abs(q.get_num());
  return n > q.get_den() ? n : Int(q.get_den());
}

}  // namespace hrp
