#include "qp/element_text.hpp"

#include <cctype>
#include <optional>

namespace qp {

namespace {

struct Linear {
  BigInt a = 0;
  BigInt b = 0;
};

[[noreturn]] void fail(std::string_view text, std::string_view why) {
  throw std::invalid_argument("cannot parse element '" + std::string(text) + "': " +
                              std::string(why));
}

Linear parse_linear(std::string_view s, std::string_view original, bool allow_i) {
  if (s.empty()) fail(original, "empty expression");
  Linear out;
  bool have_rational = false, have_radical = false;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      fail(original, "expected '+' or '-'");
    }
    std::size_t const digits_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string_view const digits = s.substr(digits_begin, pos - digits_begin);
    bool star = false;
    if (pos < s.size() && s[pos] == '*') {
      star = true;
      ++pos;
    }
    bool radical = false;
    if (pos < s.size() && (s[pos] == 's' || s[pos] == 'i')) {
      if (s[pos] == 'i' && !allow_i) fail(original, "'i' is only valid when d = -1");
      radical = true;
      ++pos;
    }
    if (star && (!radical || digits.empty())) fail(original, "misplaced '*'");
    if (digits.empty() && !radical) fail(original, "missing term");
    BigInt value = digits.empty() ? BigInt(1) : BigInt(std::string(digits));
    if (negative) value = -value;
    if (radical) {
      if (have_radical) fail(original, "repeated radical term");
      have_radical = true;
      out.b = value;
    } else {
      if (have_rational || have_radical) fail(original, "rational part must come first");
      have_rational = true;
      out.a = value;
    }
  }
  return out;
}

std::string format_linear(BigInt const& a, BigInt const& b) {
  if (b == 0) return a.get_str();
  std::string out = a == 0 ? "" : a.get_str();
  if (b < 0) {
    out += "-";
  } else if (a != 0) {
    out += "+";
  }
  BigInt const mag = abs(b);
  if (mag != 1) out += mag.get_str();
  out += "s";
  return out;
}

}  // namespace

QuadInt parse_element(Ring ring, std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  bool const allow_i = ring.d() == -1;
  std::string_view const s = compact;
  if (!s.empty() && s.front() == '(') {
    constexpr std::string_view kSuffix = ")/2";
    if (s.size() < 1 + kSuffix.size() || s.substr(s.size() - kSuffix.size()) != kSuffix) {
      fail(text, "expected '(...)/2'");
    }
    if (!ring.half_integral()) fail(text, "'/2' form needs d = 1 (mod 4)");
    Linear const lin = parse_linear(s.substr(1, s.size() - 1 - kSuffix.size()), text, allow_i);
    if (!ring.valid_coordinates(lin.a, lin.b)) fail(text, "coordinates must have equal parity");
    return QuadInt::from_half(ring, lin.a, lin.b);
  }
  Linear const lin = parse_linear(s, text, allow_i);
  return QuadInt(ring, lin.a, lin.b);
}

std::string format_element(QuadInt const& z) {
  if (mpz_odd_p(z.x().get_mpz_t())) return "(" + format_linear(z.x(), z.y()) + ")/2";
  return format_linear(z.x() / 2, z.y() / 2);
}

}  // namespace qp
