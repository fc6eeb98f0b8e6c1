#include "acausal/rational.hpp"

#include "acausal/errors.hpp"

namespace acausal {

namespace {

Int parse_integer(std::string_view text) {
  if (text.empty()) throw InvalidInputError("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size())
    throw InvalidInputError("bare sign is not an integer");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw InvalidInputError("bad integer literal: " + std::string(text));
  return Int(std::string(text));
}

}  // namespace

Rat parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text));
  Int num = parse_integer(text.substr(0, slash));
  Int den = parse_integer(text.substr(slash + 1));
  if (den <= 0)
    throw InvalidInputError("denominator must be positive in '" +
                            std::string(text) + "'");
  return Rat(num) / Rat(den);
}

std::string to_string(const Rat& value) { return value.str(); }

}  // namespace acausal
