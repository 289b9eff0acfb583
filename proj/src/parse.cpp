#include "skewfq/parse.hpp"

#include <cctype>
#include <algorithm>
#include <functional>
#include <optional>
#include <map>
#include <vector>

#include "skewfq/error.hpp"

namespace skewfq {

namespace {

constexpr std::uint64_t kMaxExponent = 1U << 20;

[[noreturn]] void parse_fail(std::size_t offset, std::vector<std::string> expected, std::string_view found) {
  std::string msg = "at offset " + std::to_string(offset) + ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
    msg += expected[i];
  }
  msg += found.empty() ? ", found end of input" : ", found '" + std::string(found.substr(0, 1)) + "'";
  throw ParseError(offset, std::move(expected), msg);
}

template <class V>
class ExprParser {
 public:
  ExprParser(std::string_view src, std::size_t base_offset, std::function<V(std::int64_t)> from_int,
             std::map<char, V> symbols)
      : src_(src), base_(base_offset), from_int_(std::move(from_int)), symbols_(std::move(symbols)) {}

  V parse() {
    V v = expr();
    skip_ws();
    if (pos_ != src_.size()) parse_fail(base_ + pos_, {"'+'", "'-'", "'*'", "end of input"}, src_.substr(pos_));
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= src_.size()) return false;
    const char c = src_[pos_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || symbols_.count(c) > 0;
  }

  std::vector<std::string> factor_expectations() const {
    std::vector<std::string> e{"integer", "'('"};
    for (const auto& [c, v] : symbols_) e.push_back(std::string("'") + c + "'");
    return e;
  }

  V expr() {
    skip_ws();
    bool negate = false;
    if (peek('-')) {
      negate = true;
      ++pos_;
    } else if (peek('+')) {
      ++pos_;
    }
    V acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  V term() {
    V acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  V factor() {
    V base = primary();
    if (!peek('^')) return base;
    ++pos_;
    skip_ws();
    const std::uint64_t e = integer();
    V result = from_int_(1);
    for (std::uint64_t bit = std::uint64_t{1} << 20; bit != 0; bit >>= 1) {
      result = result * result;
      if (e & bit) result = result * base;
    }
    return result;
  }

  V primary() {
    skip_ws();
    if (pos_ >= src_.size()) parse_fail(base_ + pos_, factor_expectations(), {});
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      V inner = expr();
      if (!peek(')')) parse_fail(base_ + pos_, {"')'"}, src_.substr(std::min(pos_, src_.size())));
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return from_int_(static_cast<std::int64_t>(integer()));
    auto it = symbols_.find(c);
    if (it == symbols_.end()) parse_fail(base_ + pos_, factor_expectations(), src_.substr(pos_));
    ++pos_;
    return it->second;
  }

  std::uint64_t integer() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      if (pos_ - start >= 18) parse_fail(base_ + pos_, {"a shorter integer"}, src_.substr(pos_));
      v = v * 10 + static_cast<std::uint64_t>(src_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) parse_fail(base_ + pos_, {"integer"}, src_.substr(pos_));
    if (v > kMaxExponent && pos_ < src_.size() + 1 && start > 0 && src_[start - 1] == '^') {
      parse_fail(base_ + start, {"an exponent <= " + std::to_string(kMaxExponent)}, src_.substr(start));
    }
    return v;
  }

  std::string_view src_;
  std::size_t base_;
  std::size_t pos_ = 0;
  std::function<V(std::int64_t)> from_int_;
  std::map<char, V> symbols_;
};

std::vector<std::uint32_t> parse_modulus(std::string_view src, std::size_t offset, std::uint32_t p) {
  const Field prime = make_field(p, 1);
  const CPoly poly = ExprParser<CPoly>(
                         src, offset, [&](std::int64_t c) { return CPoly::constant(prime->constant(c)); },
                         {{'x', CPoly::variable(prime)}})
                         .parse();
  std::vector<std::uint32_t> out;
  for (const auto& c : poly.coeffs()) out.push_back(c.coords()[0]);
  return out;
}

std::uint64_t parse_uint(std::string_view s, std::size_t offset) {
  if (s.empty() || s.size() > 9) parse_fail(offset, {"a positive integer"}, s);
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) parse_fail(offset + i, {"digit"}, s.substr(i));
    v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
  }
  return v;
}

}  // namespace

FrobeniusTwist RingSpec::field_twist() const {
  if (kind != Kind::Field) fail(ErrorKind::UnsupportedRing, "ring spec describes a truncated polynomial ring");
  return {field, frob_power};
}

DerivationTwist RingSpec::trunc_twist() const {
  if (kind != Kind::Trunc) fail(ErrorKind::UnsupportedRing, "ring spec describes a finite field");
  return {trunc};
}

std::string RingSpec::canonical() const {
  if (kind == Kind::Field) return field_twist().describe();
  return trunc_twist().describe();
}

RingSpec parse_ring_spec(std::string_view src) {
  RingSpec spec;
  std::size_t pos = 0;
  std::optional<RingSpec::Kind> declared;
  if (src.substr(0, 6) == "field:") {
    declared = RingSpec::Kind::Field;
    pos = 6;
  } else if (src.substr(0, 6) == "trunc:") {
    declared = RingSpec::Kind::Trunc;
    pos = 6;
  }

  // Split into ';'-separated sections, each a ','-separated list of key=value.
  std::map<std::string, std::pair<std::string_view, std::size_t>> values;
  while (pos <= src.size()) {
    std::size_t end = src.find_first_of(",;", pos);
    if (end == std::string_view::npos) end = src.size();
    const std::string_view item = src.substr(pos, end - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) parse_fail(pos, {"key=value"}, item);
    const std::string key(item.substr(0, eq));
    static const std::vector<std::string> known{"p", "n", "m", "mod", "sigma", "delta"};
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      parse_fail(pos, {"'p'", "'n'", "'m'", "'mod'", "'sigma'", "'delta'"}, item);
    }
    if (values.count(key) > 0) parse_fail(pos, {"each key at most once"}, item);
    values[key] = {item.substr(eq + 1), pos + eq + 1};
    if (end == src.size()) break;
    pos = end + 1;
  }

  auto get = [&](const std::string& key) -> std::optional<std::pair<std::string_view, std::size_t>> {
    auto it = values.find(key);
    if (it == values.end()) return std::nullopt;
    return it->second;
  };

  const auto p_val = get("p");
  if (!p_val) parse_fail(src.size(), {"'p=<prime>'"}, {});
  const auto p64 = parse_uint(p_val->first, p_val->second);
  if (p64 >= kMaxCharacteristic) fail(ErrorKind::InvalidArgument, "characteristic too large");
  const auto p = static_cast<std::uint32_t>(p64);

  const auto n_val = get("n");
  const auto m_val = get("m");
  RingSpec::Kind kind = declared.value_or(m_val && !n_val ? RingSpec::Kind::Trunc : RingSpec::Kind::Field);
  spec.kind = kind;

  if (kind == RingSpec::Kind::Field) {
    if (m_val) parse_fail(m_val->second, {"'n' (a field has no truncation length)"}, m_val->first);
    const unsigned n = n_val ? static_cast<unsigned>(parse_uint(n_val->first, n_val->second)) : 1;
    std::optional<std::vector<std::uint32_t>> modulus;
    if (const auto mod = get("mod")) {
      if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
      modulus = parse_modulus(mod->first, mod->second, p);
    }
    spec.field = make_field(p, n, modulus);
    if (const auto sigma = get("sigma")) {
      const std::string_view s = sigma->first;
      if (s.substr(0, 5) != "frob^") parse_fail(sigma->second, {"'frob^<k>'"}, s);
      spec.frob_power = static_cast<unsigned>(parse_uint(s.substr(5), sigma->second + 5));
    }
    if (const auto delta = get("delta")) {
      if (delta->first != "0") parse_fail(delta->second, {"'0' (fields carry no derivation)"}, delta->first);
    }
  } else {
    if (n_val) parse_fail(n_val->second, {"'m' (truncated rings have a length, not a degree)"}, n_val->first);
    if (!m_val) parse_fail(src.size(), {"'m=<length>'"}, {});
    if (const auto mod = get("mod")) parse_fail(mod->second, {"no modulus for a truncated ring"}, mod->first);
    spec.trunc = make_trunc_ring(p, static_cast<unsigned>(parse_uint(m_val->first, m_val->second)));
    if (const auto sigma = get("sigma")) {
      if (sigma->first != "id") parse_fail(sigma->second, {"'id'"}, sigma->first);
    }
    if (const auto delta = get("delta")) {
      if (delta->first != "d/du") parse_fail(delta->second, {"'d/du'"}, delta->first);
    }
  }
  return spec;
}

FqElem parse_field_elem(std::string_view src, const Field& field) {
  return ExprParser<FqElem>(src, 0, [&](std::int64_t c) { return field->constant(c); },
                            {{'a', field->generator()}})
      .parse();
}

TruncElem parse_trunc_elem(std::string_view src, const TruncRing& ring) {
  return ExprParser<TruncElem>(src, 0, [&](std::int64_t c) { return ring->constant(c); },
                               {{'u', ring->generator()}})
      .parse();
}

CPoly parse_cpoly(std::string_view src, const Field& field) {
  return ExprParser<CPoly>(
             src, 0, [&](std::int64_t c) { return CPoly::constant(field->constant(c)); },
             {{'a', CPoly::constant(field->generator())}, {'x', CPoly::variable(field)}})
      .parse();
}

FieldSkew parse_field_skew(std::string_view src, const FrobeniusTwist& twist) {
  return ExprParser<FieldSkew>(
             src, 0, [&](std::int64_t c) { return FieldSkew::constant(twist, twist.field->constant(c)); },
             {{'a', FieldSkew::constant(twist, twist.field->generator())}, {'t', FieldSkew::variable(twist)}})
      .parse();
}

TruncSkew parse_trunc_skew(std::string_view src, const DerivationTwist& twist) {
  return ExprParser<TruncSkew>(
             src, 0, [&](std::int64_t c) { return TruncSkew::constant(twist, twist.ring->constant(c)); },
             {{'u', TruncSkew::constant(twist, twist.ring->generator())}, {'t', TruncSkew::variable(twist)}})
      .parse();
}

}  // namespace skewfq
