#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qcert/polyring/int_poly.hpp"
#include "qcert/polyring/laurent_poly.hpp"
#include "qcert/polyring/rational_fn.hpp"

namespace qcert {

/// Canonical ascending-exponent text, e.g. "1 - q + 2*q^3" or "q^-2 + 1".
inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const std::int64_t e = p.min_exp() + static_cast<std::int64_t>(i);
    const bool negative = c[i] < 0;
    Integer mag = abs(c[i]);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) {
      out += mag.get_str();
      out += '*';
    }
    out += 'q';
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

inline std::string to_string(const IntPoly& p) { return to_string(LaurentPoly(p)); }

inline std::string to_string(const RationalFn& r) {
  if (r.is_laurent_poly()) return to_string(r.num());
  return "(" + to_string(r.num()) + ") / (" + to_string(r.den()) + ")";
}

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    std::map<std::int64_t, Integer> terms;
    skip_ws();
    if (at_end()) fail("empty input");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (get() == '-') ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coef, exp] = term();
      terms[exp] += sign * coef;
      skip_ws();
    }
    if (terms.empty()) return {};
    const std::int64_t lo = terms.begin()->first;
    const std::int64_t hi = terms.rbegin()->first;
    std::vector<Integer> coeffs(static_cast<std::size_t>(hi - lo + 1));
    for (auto& [e, c] : terms) coeffs[static_cast<std::size_t>(e - lo)] = c;
    return LaurentPoly(lo, std::move(coeffs));
  }

 private:
  std::pair<Integer, std::int64_t> term() {
    Integer coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = Integer(digits());
      have_coef = true;
      skip_ws();
      if (at_end() || peek() != '*') return {coef, 0};
      get();
      skip_ws();
    }
    if (at_end() || peek() != 'q') {
      if (have_coef) fail("expected 'q' after '*'");
      fail("expected a term");
    }
    get();
    std::int64_t e = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      get();
      skip_ws();
      bool neg = false;
      if (!at_end() && peek() == '-') {
        neg = true;
        get();
      }
      const std::string d = digits();
      e = std::stoll(d);
      if (neg) e = -e;
    }
    return {coef, e};
  }

  std::string digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    if (d.empty()) fail("expected digits");
    return d;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the text form written by to_string; also accepts "0", extra
/// whitespace and repeated exponents (which are summed).
inline LaurentPoly parse_laurent(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos) {
    const auto last = s.find_last_not_of(" \t\r\n");
    if (s.substr(first, last - first + 1) == "0") return {};
  }
  return detail::PolyParser(s).parse();
}

inline IntPoly parse_int_poly(std::string_view s) { return parse_laurent(s).to_int_poly(); }

/// {"min_exp": int, "coeffs": [decimal strings]}
inline nlohmann::ordered_json to_json(const LaurentPoly& p) {
  nlohmann::ordered_json j;
  j["min_exp"] = p.min_exp();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  j["coeffs"] = std::move(arr);
  return j;
}

inline LaurentPoly laurent_from_json(const nlohmann::json& j) {
  try {
    const auto min_exp = j.at("min_exp").get<std::int64_t>();
    std::vector<Integer> coeffs;
    for (const auto& c : j.at("coeffs")) {
      const auto s = c.get<std::string>();
      Integer z;
      if (z.set_str(s, 10) != 0) throw ParseError("invalid decimal coefficient '" + s + "'");
      coeffs.push_back(std::move(z));
    }
    const bool normalized = coeffs.empty() ? min_exp == 0 : (coeffs.front() != 0 && coeffs.back() != 0);
    if (!normalized) throw ParseError("polynomial JSON is not in normalized form");
    LaurentPoly p(min_exp, std::move(coeffs));
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("polynomial JSON: ") + e.what());
  }
}

}  // namespace qcert
