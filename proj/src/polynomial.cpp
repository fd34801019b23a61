#include "tame/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace tame {

std::string variant_name(Variant v) { return v == Variant::Commutative ? "comm" : "free"; }

Variant parse_variant(std::string_view s) {
  if (s == "comm" || s == "commutative") return Variant::Commutative;
  if (s == "free") return Variant::Free;
  throw Error("unknown variant '" + std::string(s) + "' (expected comm or free)");
}

int monomial_degree(Variant v, const Monomial& m) {
  if (v == Variant::Free) return static_cast<int>(m.size());
  return static_cast<int>(std::accumulate(m.begin(), m.end(), std::uint64_t{0}));
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = monomial_degree(variant, a), db = monomial_degree(variant, b);
  if (da != db) return da < db;
  if (variant == Variant::Free) return a < b;
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

Polynomial::Polynomial(Variant v, int n, Field f)
    : variant_(v), n_(n), field_(f), terms_(MonomialLess{v}) {
  if (n < 1) throw Error("polynomial ring needs at least one generator");
}

Polynomial Polynomial::constant(Variant v, int n, const Scalar& c) {
  Polynomial p(v, n, c.field());
  Monomial unit;
  if (v == Variant::Commutative) unit.assign(n, 0);
  p.add_term(unit, c);
  return p;
}

Polynomial Polynomial::variable(Variant v, int n, Field f, int i) {
  if (i < 0 || i >= n) throw Error("generator index out of range");
  Monomial m;
  if (v == Variant::Commutative) {
    m.assign(n, 0);
    m[i] = 1;
  } else {
    m.push_back(static_cast<std::uint32_t>(i));
  }
  return term(v, n, m, Scalar::one(f));
}

Polynomial Polynomial::term(Variant v, int n, const Monomial& m, const Scalar& c) {
  Polynomial p(v, n, c.field());
  p.add_term(m, c);
  return p;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

Scalar Polynomial::constant_term() const {
  if (terms_.empty()) return Scalar::zero(field_);
  const auto& [m, c] = *terms_.begin();
  return monomial_degree(variant_, m) == 0 ? c : Scalar::zero(field_);
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return monomial_degree(variant_, terms_.rbegin()->first);
}

std::optional<int> Polynomial::low_degree() const {
  if (terms_.empty()) return std::nullopt;
  return monomial_degree(variant_, terms_.begin()->first);
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial r(variant_, n_, field_);
  for (const auto& [m, c] : terms_)
    if (monomial_degree(variant_, m) == d) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

Polynomial Polynomial::truncate(int N) const {
  Polynomial r(variant_, n_, field_);
  for (const auto& [m, c] : terms_) {
    if (monomial_degree(variant_, m) >= N) break;
    r.terms_.emplace_hint(r.terms_.end(), m, c);
  }
  return r;
}

int Polynomial::var_degree(const Monomial& m, int i) const {
  if (variant_ == Variant::Commutative) return static_cast<int>(m[i]);
  return static_cast<int>(std::count(m.begin(), m.end(), static_cast<std::uint32_t>(i)));
}

bool Polynomial::depends_on(int i) const {
  for (const auto& [m, c] : terms_)
    if (var_degree(m, i) > 0) return true;
  return false;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (variant_ != o.variant_) throw Error("variant mismatch: comm vs free");
  if (n_ != o.n_)
    throw Error("generator count mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
  if (field_ != o.field_) throw Error("field mismatch: " + field_.name() + " vs " + o.field_.name());
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.variant_ == b.variant_ && a.n_ == b.n_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(variant_, n_, field_);
  if (c.is_zero()) return r;
  for (const auto& [m, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, a * c);
  return r;
}

Polynomial Polynomial::mul(const Polynomial& o, int N) const {
  check_compatible(o);
  Polynomial r(variant_, n_, field_);
  Monomial prod;
  for (const auto& [ma, ca] : terms_) {
    int da = monomial_degree(variant_, ma);
    if (N > 0 && da >= N) break;
    for (const auto& [mb, cb] : o.terms_) {
      if (N > 0 && da + monomial_degree(variant_, mb) >= N) break;
      if (variant_ == Variant::Commutative) {
        prod = ma;
        for (int i = 0; i < n_; ++i) prod[i] += mb[i];
      } else {
        prod = ma;
        prod.insert(prod.end(), mb.begin(), mb.end());
      }
      r.add_term(prod, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::pow(int k, int N) const {
  if (k < 0) throw Error("negative polynomial power");
  Polynomial r = constant(variant_, n_, Scalar::one(field_));
  if (N > 0) r = r.truncate(N);
  Polynomial base = N > 0 ? truncate(N) : *this;
  while (k) {
    if (k & 1) r = r.mul(base, N);
    k >>= 1;
    if (k) base = base.mul(base, N);
  }
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images, int N) const {
  if (static_cast<int>(images.size()) != n_)
    throw Error("substitution needs " + std::to_string(n_) + " images, got " +
                std::to_string(images.size()));
  if (images.empty()) return *this;
  const Polynomial& proto = images.front();
  for (const auto& im : images) proto.check_compatible(im);
  if (variant_ != proto.variant_ || field_ != proto.field_)
    throw Error("substitution images live in a different ring");

  Polynomial result(proto.variant_, proto.n_, field_);
  Polynomial one = constant(proto.variant_, proto.n_, Scalar::one(field_));
  if (N > 0) one = one.truncate(N);
  // every image starts in degree >= low, so a partial product only needs
  // degrees below N - low * (letters still to come)
  int low = 0;
  if (N > 0) {
    low = N;
    for (const auto& im : images) low = std::min(low, im.is_zero() ? N : *im.low_degree());
  }
  auto bound = [&](long remaining) -> int {
    if (N <= 0) return 0;
    long b = N - low * remaining;
    return b < 1 ? 1 : static_cast<int>(b);
  };

  if (variant_ == Variant::Commutative) {
    // powers[i][e] = images[i]^e, built on demand
    std::vector<std::vector<Polynomial>> powers(n_, std::vector<Polynomial>{one});
    auto power = [&](int i, std::uint32_t e) -> const Polynomial& {
      auto& cache = powers[i];
      while (cache.size() <= e) cache.push_back(cache.back().mul(images[i], N));
      return cache[e];
    };
    for (const auto& [m, c] : terms_) {
      long remaining = monomial_degree(variant_, m);
      if (N > 0 && low * remaining >= N) continue;
      Polynomial acc = one.scaled(c);
      for (int i = 0; i < n_ && !acc.is_zero(); ++i)
        if (m[i]) {
          remaining -= m[i];
          acc = acc.mul(power(i, m[i]), bound(remaining));
        }
      result += acc;
    }
  } else {
    // consecutive words share prefixes in lexicographic order; keep a prefix
    // stack, each entry with the degree bound it was truncated at
    std::vector<std::pair<Polynomial, int>> stack{{one, N}};
    Monomial prev;
    for (const auto& [m, c] : terms_) {
      if (N > 0 && low * static_cast<long>(m.size()) >= N) continue;
      std::size_t common = 0;
      while (common < prev.size() && common < m.size() && prev[common] == m[common]) ++common;
      stack.resize(common + 1);
      // a shorter word needs looser bounds than the ones cached for its prefix
      while (common > 0 && N > 0 && stack[common].second < bound(static_cast<long>(m.size() - common))) {
        --common;
        stack.resize(common + 1);
      }
      for (std::size_t j = common; j < m.size(); ++j) {
        int b = bound(static_cast<long>(m.size() - j - 1));
        stack.emplace_back(stack.back().first.mul(images[m[j]], b), b);
      }
      result += stack.back().first.scaled(c);
      prev = m;
    }
  }
  return result;
}

Polynomial Polynomial::derivative(int i) const {
  if (variant_ != Variant::Commutative) throw Error("derivative requires a commutative polynomial");
  if (i < 0 || i >= n_) throw Error("generator index out of range");
  Polynomial r(variant_, n_, field_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial d = m;
    d[i] -= 1;
    r.add_term(d, c * Scalar(field_, static_cast<long>(m[i])));
  }
  return r;
}

Polynomial Polynomial::abelianize() const {
  if (variant_ != Variant::Free) throw Error("abelianize requires a free polynomial");
  Polynomial r(Variant::Commutative, n_, field_);
  for (const auto& [m, c] : terms_) {
    Monomial e(n_, 0);
    for (auto letter : m) e[letter] += 1;
    r.add_term(e, c);
  }
  return r;
}

Polynomial Polynomial::reversed() const {
  if (variant_ != Variant::Free) throw Error("word reversal requires a free polynomial");
  Polynomial r(variant_, n_, field_);
  for (const auto& [m, c] : terms_) r.add_term(Monomial(m.rbegin(), m.rend()), c);
  return r;
}

std::string generator_name(int n, int i) {
  static const char* short_names[] = {"x", "y", "z", "t"};
  if (n <= 4) return short_names[i];
  return "x" + std::to_string(i + 1);
}

namespace {

std::string monomial_str(Variant v, int n, const Monomial& m) {
  std::string out;
  auto factor = [&](int i, std::uint32_t e) {
    if (!out.empty()) out += '*';
    out += generator_name(n, i);
    if (e > 1) out += "^" + std::to_string(e);
  };
  if (v == Variant::Commutative) {
    for (int i = 0; i < n; ++i)
      if (m[i]) factor(i, m[i]);
  } else {
    for (std::size_t j = 0; j < m.size();) {
      std::size_t k = j;
      while (k < m.size() && m[k] == m[j]) ++k;
      factor(static_cast<int>(m[j]), static_cast<std::uint32_t>(k - j));
      j = k;
    }
  }
  return out;
}

}  // namespace

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = c.is_negative();
    Scalar a = c.abs();
    std::string mono = monomial_str(variant_, n_, m);
    std::string body;
    if (mono.empty()) body = a.str();
    else if (a.is_one()) body = mono;
    else body = a.str() + "*" + mono;
    if (first) out += neg ? "-" + body : body;
    else out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

ParseError::ParseError(const std::string& msg, int line, int column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

std::optional<int> parse_generator(std::string_view name, int n) {
  if (n <= 4 && name.size() == 1) {
    static const std::string_view letters = "xyzt";
    auto pos = letters.find(name[0]);
    if (pos != std::string_view::npos && static_cast<int>(pos) < n) return static_cast<int>(pos);
  }
  if (name.size() >= 2 && name[0] == 'x' &&
      std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    if (name[1] == '0' || name.size() > 6) return std::nullopt;
    int i = std::stoi(std::string(name.substr(1)));
    if (i >= 1 && i <= n) return i - 1;
  }
  return std::nullopt;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, Variant v, int n, Field f, int line, int offset)
      : text_(text), v_(v), n_(n), f_(f), line_(line), offset_(offset) {}

  Polynomial run() {
    Polynomial p = expr();
    skip();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, offset_ + static_cast<int>(pos_) + 1);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip();
    Polynomial acc(v_, n_, f_);
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    Polynomial t = term();
    acc += neg ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      if (pos_ - start > 4) fail("exponent too large");
      base = base.pow(std::stoi(std::string(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (ch == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      std::string lit = digits();
      skip();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip();
        std::string den = digits();
        if (den.empty()) fail("expected a denominator after '/'");
        lit += "/" + den;
      }
      mpq_class q(lit, 10);
      if (q.get_den() == 0) {
        pos_ = start;
        fail("zero denominator");
      }
      q.canonicalize();
      try {
        return Polynomial::constant(v_, n_, Scalar(f_, q));
      } catch (const Error& e) {
        pos_ = start;
        fail(e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto i = parse_generator(name, n_);
      if (!i) {
        pos_ = start;
        fail("unknown generator '" + std::string(name) + "' for n=" + std::to_string(n_));
      }
      return Polynomial::variable(v_, n_, f_, *i);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  Variant v_;
  int n_;
  Field f_;
  int line_;
  int offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, Variant v, int n, Field f, int line,
                            int column_offset) {
  return Parser(text, v, n, f, line, column_offset).run();
}

void for_each_monomial(Variant v, int n, int degree, const std::function<void(const Monomial&)>& f) {
  Monomial m;
  if (v == Variant::Free) {
    m.assign(degree, 0);
    if (degree == 0) {
      f(m);
      return;
    }
    for (;;) {
      f(m);
      int k = degree - 1;
      while (k >= 0 && m[k] + 1 == static_cast<std::uint32_t>(n)) m[k--] = 0;
      if (k < 0) return;
      ++m[k];
    }
  }
  m.assign(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      m[i] = static_cast<std::uint32_t>(left);
      f(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[i] = static_cast<std::uint32_t>(e);
      rec(i + 1, left - e);
    }
  };
  rec(0, degree);
}

std::vector<Monomial> monomials_of_degree(Variant v, int n, int degree) {
  std::vector<Monomial> out;
  for_each_monomial(v, n, degree, [&](const Monomial& m) { out.push_back(m); });
  std::sort(out.begin(), out.end(), MonomialLess{v});
  return out;
}

}  // namespace tame
