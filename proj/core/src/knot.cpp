#include "cabling/knot.hpp"

#include <cctype>
#include <utility>

#include "cabling/error.hpp"

namespace cabling {

std::string_view to_string(Framing f) { return f == Framing::C ? "C" : "Cprime"; }

KnotSpec KnotSpec::prefix(std::size_t r) const {
  if (r == 0 || r > pairs_.size()) {
    throw ValidationError("prefix length " + std::to_string(r) + " out of range 1.." +
                          std::to_string(pairs_.size()));
  }
  return KnotSpec(framing_, {pairs_.begin(), pairs_.begin() + static_cast<std::ptrdiff_t>(r)});
}

KnotSpec validate(RawKnot raw) {
  if (raw.pairs.empty()) throw ValidationError("empty cabling sequence");
  for (std::size_t i = 0; i < raw.pairs.size(); ++i) {
    const auto& [c, q] = raw.pairs[i];
    const std::string at = " at level " + std::to_string(i + 1);
    if (c == 0) throw ValidationError("zero coefficient" + at);
    if (q <= 1) throw ValidationError("q <= 1" + at);
    if (gcd(c, q) != 1) throw ValidationError("non-coprime pair" + at);
    if (i == 0 && abs(c) == 1) {
      throw ValidationError("|coefficient| = 1 at level 1 (the unknot, not a torus knot)");
    }
  }
  return KnotSpec(raw.framing, std::move(raw.pairs));
}

KnotSpec extend(const KnotSpec& spec, const CablingPair& pair) {
  RawKnot raw{spec.framing(), spec.pairs()};
  raw.pairs.push_back(pair);
  return validate(std::move(raw));
}

KnotSpec to_c_framing(const KnotSpec& spec) {
  if (spec.framing() == Framing::C) return spec;
  RawKnot out{Framing::C, {}};
  Integer A;  // A_{i-1}
  for (std::size_t i = 0; i < spec.levels(); ++i) {
    const auto& [p, q] = spec.pairs()[i];
    Integer P = i == 0 ? p : q * A + p;
    A = q * q * A + p * q;
    out.pairs.push_back({std::move(P), q});
  }
  return validate(std::move(out));
}

KnotSpec to_cprime_framing(const KnotSpec& spec) {
  if (spec.framing() == Framing::Cprime) return spec;
  RawKnot out{Framing::Cprime, {}};
  Integer A;
  for (std::size_t i = 0; i < spec.levels(); ++i) {
    const auto& [P, q] = spec.pairs()[i];
    Integer p = i == 0 ? P : P - q * A;
    A = q * q * A + p * q;
    out.pairs.push_back({std::move(p), q});
  }
  return validate(std::move(out));
}

std::vector<Integer> c_meridians_by_product(const KnotSpec& spec) {
  const KnotSpec cprime = to_cprime_framing(spec);
  std::vector<Integer> P;
  for (std::size_t i = 0; i < cprime.levels(); ++i) {
    const auto& [p, q] = cprime.pairs()[i];
    if (i == 0) {
      P.push_back(p);
    } else {
      P.push_back(q * P.back() * cprime.pairs()[i - 1].longitude + p);
    }
  }
  return P;
}

namespace {

class KnotParser {
 public:
  explicit KnotParser(std::string_view text) : text_(text) {}

  RawKnot parse() {
    RawKnot raw;
    skip_space();
    raw.framing = parse_framing();
    skip_space();
    expect(':');
    do {
      skip_space();
      raw.pairs.push_back(parse_pair());
      skip_space();
    } while (accept(','));
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return raw;
  }

 private:
  Framing parse_framing() {
    for (std::string_view tag : {"Cprime", "Cp", "C'"}) {
      if (text_.substr(pos_).starts_with(tag)) {
        pos_ += tag.size();
        return Framing::Cprime;
      }
    }
    if (accept('C')) return Framing::C;
    fail("expected framing tag C or Cp");
  }

  CablingPair parse_pair() {
    expect('(');
    skip_space();
    Integer c = parse_integer();
    skip_space();
    expect(',');
    skip_space();
    Integer q = parse_integer();
    skip_space();
    expect(')');
    return {std::move(c), std::move(q)};
  }

  Integer parse_integer() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected integer");
    std::string token(text_.substr(start, pos_ - start));
    if (token.front() == '+') token.erase(0, 1);
    return Integer(token);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ValidationError("parse error at column " + std::to_string(pos_ + 1) + ": " + message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

KnotSpec parse_knot(std::string_view text) { return validate(KnotParser(text).parse()); }

std::string format_knot(const KnotSpec& spec) {
  std::string out = spec.framing() == Framing::C ? "C:" : "Cp:";
  for (std::size_t i = 0; i < spec.levels(); ++i) {
    if (i > 0) out += ',';
    out += '(' + spec.pairs()[i].meridian.str() + ',' + spec.pairs()[i].longitude.str() + ')';
  }
  return out;
}

}  // namespace cabling
