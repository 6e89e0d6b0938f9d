#include "frobcount/parse.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "frobcount/errors.hpp"

namespace frobcount {
namespace {

class PolyParser {
 public:
  PolyParser(std::string_view src, const Ring& ring) : src_(src), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected character '") + src_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 0, pos_ + 1); }

  bool at_end() const { return pos_ >= src_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (!at_end() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        skip_ws();
        std::size_t at = pos_;
        auto d = integer_mod_p();
        if (d == 0) {
          pos_ = at;
          fail("coefficient not reducible mod p (division by a multiple of p)");
        }
        acc = acc.scaled(ring_.field().inv(d));
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    skip_ws();
    if (at_end()) fail("expected a term");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      if (accept('^')) return inner.pow(exponent());
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto v = integer_mod_p();
      Polynomial k = Polynomial::constant(ring_, v);
      if (accept('^')) return k.pow(exponent());
      return k;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      std::string name(src_.substr(start, pos_ - start));
      auto idx = ring_.index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      Monomial m = Monomial::variable(ring_.nvars(), *idx);
      if (accept('^')) {
        std::vector<Monomial::Exponent> e(ring_.nvars(), 0);
        e[*idx] = checked_exponent(static_cast<std::int64_t>(exponent()));
        m = Monomial(std::move(e));
      }
      return Polynomial::term(ring_, std::move(m), 1);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::uint64_t exponent() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("expected a non-negative integer exponent");
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(src_[pos_] - '0');
      if (v > static_cast<std::uint64_t>(std::numeric_limits<Monomial::Exponent>::max()))
        fail("exponent too large");
      ++pos_;
    }
    return v;
  }

  PrimeField::Element integer_mod_p() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("expected an integer");
    const auto& field = ring_.field();
    PrimeField::Element v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = field.add(field.mul(v, field.reduce(10)), field.reduce(src_[pos_] - '0'));
      ++pos_;
    }
    return v;
  }

  std::string_view src_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial poly_parse(std::string_view src, const Ring& ring) {
  return PolyParser(src, ring).parse();
}

}  // namespace frobcount
