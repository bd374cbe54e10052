#include "cbasis/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cbasis {

Monomial::Monomial(int ell) : ell_(ell) {
  if (ell < 1) throw std::invalid_argument("Monomial: rank must be >= 1");
}

Monomial::Monomial(int ell, std::vector<Variable> factors) : ell_(ell), factors_(std::move(factors)) {
  if (ell < 1) throw std::invalid_argument("Monomial: rank must be >= 1");
  for (const Variable& v : factors_)
    if (!color_valid(v.color, ell_)) throw std::invalid_argument("Monomial: color out of range for rank");
  std::sort(factors_.begin(), factors_.end(), [](const Variable& a, const Variable& b) {
    return cmp_variable(a, b) == std::strong_ordering::less;
  });
}

long long Monomial::depth() const {
  long long d = 0;
  for (const Variable& v : factors_) d -= v.degree;
  return d;
}

std::strong_ordering cmp_monomial(const Monomial& p, const Monomial& q) {
  if (auto c = p.rank() <=> q.rank(); c != std::strong_ordering::equal) return c;
  auto a = p.factors().rbegin(), ae = p.factors().rend();
  auto b = q.factors().rbegin(), be = q.factors().rend();
  for (; a != ae && b != be; ++a, ++b) {
    if (auto c = cmp_variable(*a, *b); c != std::strong_ordering::equal) return c;
  }
  if (a == ae && b == be) return std::strong_ordering::equal;
  return (a == ae) ? std::strong_ordering::less : std::strong_ordering::greater;
}

Monomial shift(const Monomial& p, int m) {
  std::vector<Variable> f = p.factors();
  for (Variable& v : f) v.degree += m;
  return Monomial(p.rank(), std::move(f));
}

Monomial multiply(const Monomial& p, const Monomial& q) {
  if (p.rank() != q.rank()) throw std::invalid_argument("multiply: rank mismatch");
  std::vector<Variable> f;
  f.reserve(p.factors().size() + q.factors().size());
  std::merge(p.factors().begin(), p.factors().end(), q.factors().begin(), q.factors().end(),
             std::back_inserter(f), [](const Variable& a, const Variable& b) {
               return cmp_variable(a, b) == std::strong_ordering::less;
             });
  return Monomial(p.rank(), std::move(f));
}

bool divides(const Monomial& part, const Monomial& whole) {
  if (part.rank() != whole.rank()) throw std::invalid_argument("divides: rank mismatch");
  auto a = part.factors().begin(), ae = part.factors().end();
  auto b = whole.factors().begin(), be = whole.factors().end();
  while (a != ae && b != be) {
    if (*a == *b) {
      ++a;
      ++b;
    } else if (cmp_variable(*b, *a) == std::strong_ordering::less) {
      ++b;
    } else {
      return false;
    }
  }
  return a == ae;
}

Monomial quotient(const Monomial& whole, const Monomial& part) {
  if (!divides(part, whole)) throw std::invalid_argument("quotient: not a submultiset");
  std::vector<Variable> f;
  auto a = part.factors().begin(), ae = part.factors().end();
  for (const Variable& v : whole.factors()) {
    if (a != ae && v == *a)
      ++a;
    else
      f.push_back(v);
  }
  return Monomial(whole.rank(), std::move(f));
}

WeightTag weight(const Monomial& p) {
  WeightTag w{eps_zero(p.rank()), 0};
  for (const Variable& v : p.factors()) {
    w.classical[static_cast<size_t>(v.color.col) - 1] += 1;
    w.classical[static_cast<size_t>(v.color.row) - 1] += 1;
    w.depth -= v.degree;
  }
  return w;
}

std::string to_string(const Monomial& p) {
  if (p.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Variable& v : p.factors()) {
    if (!first) os << ' ';
    first = false;
    os << "x[" << v.color.col << ',' << v.color.row << "](" << v.degree << ')';
  }
  return os.str();
}

namespace {

[[noreturn]] void bad_token(const std::string& tok) {
  throw std::invalid_argument("parse_monomial: malformed factor '" + tok + "'");
}

int parse_int(const std::string& tok, size_t& pos) {
  size_t start = pos;
  if (pos < tok.size() && (tok[pos] == '-' || tok[pos] == '+')) ++pos;
  while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
  if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(tok[start])))) bad_token(tok);
  return std::stoi(tok.substr(start, pos - start));
}

Variable parse_factor(const std::string& tok) {
  size_t pos = 0;
  auto expect = [&](char c) {
    if (pos >= tok.size() || tok[pos] != c) bad_token(tok);
    ++pos;
  };
  expect('x');
  expect('[');
  int i = parse_int(tok, pos);
  expect(',');
  int j = parse_int(tok, pos);
  expect(']');
  expect('(');
  int n = parse_int(tok, pos);
  expect(')');
  if (pos != tok.size()) bad_token(tok);
  return Variable{{i, j}, n};
}

}  // namespace

Monomial parse_monomial(const std::string& text, int ell) {
  std::istringstream is(text);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  if (toks.empty()) throw std::invalid_argument("parse_monomial: empty input");
  if (toks.size() == 1 && toks[0] == "1") return Monomial(ell);
  std::vector<Variable> f;
  for (const std::string& tok : toks) f.push_back(parse_factor(tok));
  return Monomial(ell, std::move(f));
}

}  // namespace cbasis
