#include "tame/tame_word.hpp"

#include <cctype>
#include <sstream>

namespace tame {

TameGen TameGen::linear(Variant v, const Matrix& a) {
  if (a.rows() != a.cols()) throw Error("linear generator needs a square matrix");
  if (a.determinant().is_zero()) throw Error("linear generator must be invertible");
  TameGen g(Kind::Linear, v, a.rows(), a.field());
  g.a_ = a;
  return g;
}

TameGen TameGen::elementary(int i, const Polynomial& p) {
  if (i < 0 || i >= p.nvars()) throw Error("elementary generator index out of range");
  if (p.depends_on(i))
    throw Error("elementary generator for " + generator_name(p.nvars(), i) + " must not involve it");
  TameGen g(Kind::Elementary, p.variant(), p.nvars(), p.field());
  g.index_ = i;
  g.p_ = p;
  return g;
}

Endo TameGen::endo() const {
  if (kind_ == Kind::Linear) return Endo::linear(variant_, a_);
  return Endo::elementary(index_, p_);
}

TameGen TameGen::inverse() const {
  if (kind_ == Kind::Linear) return linear(variant_, a_.inverse());
  return elementary(index_, -p_);
}

bool operator==(const TameGen& a, const TameGen& b) {
  if (a.kind_ != b.kind_ || a.variant_ != b.variant_ || a.n_ != b.n_ || a.field_ != b.field_) return false;
  if (a.kind_ == TameGen::Kind::Linear) return a.a_ == b.a_;
  return a.index_ == b.index_ && a.p_ == b.p_;
}

TameWord& TameWord::push(const TameGen& g, int exponent) {
  if (exponent != 1 && exponent != -1) throw Error("word exponents are +1 or -1");
  if (g.variant() != variant_ || g.nvars() != n_ || g.field() != field_)
    throw Error("generator does not live in the word's ring");
  letters_.push_back({g, exponent});
  return *this;
}

TameWord& TameWord::append(const TameWord& w) {
  for (const auto& l : w.letters_) push(l.gen, l.exponent);
  return *this;
}

std::string TameWord::str() const {
  std::string out = ring_header("word", variant_, n_, field_) + "\n";
  for (const auto& l : letters_) {
    if (l.gen.kind() == TameGen::Kind::Linear) out += "lin " + l.gen.matrix().str();
    else out += "elem " + std::to_string(l.gen.index() + 1) + " " + l.gen.poly().str();
    if (l.exponent < 0) out += " ^-1";
    out += "\n";
  }
  return out;
}

namespace {

Endo letter_endo(const Letter& l) { return l.exponent > 0 ? l.gen.endo() : l.gen.inverse().endo(); }

}  // namespace

Endo eval_word(const TameWord& w) {
  Endo acc = Endo::identity(w.variant(), w.nvars(), w.field());
  // acc = g1∘…∘gj; extending by g_{j+1} only substitutes into the letter's images
  for (const auto& l : w.letters()) acc = compose(letter_endo(l), acc);
  return acc;
}

Endo eval_word_mod(const TameWord& w, int N) {
  Endo acc = Endo::identity(w.variant(), w.nvars(), w.field()).truncate(N);
  for (const auto& l : w.letters()) acc = compose_mod(letter_endo(l), acc, N);
  return acc;
}

TameWord word_inverse(const TameWord& w) {
  TameWord r(w.variant(), w.nvars(), w.field());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) r.push(it->gen, -it->exponent);
  return r;
}

TameWord conjugate(const TameWord& t, const TameWord& w) {
  TameWord r = t;
  r.append(w);
  r.append(word_inverse(t));
  return r;
}

namespace {

Matrix parse_matrix(std::string_view s, int n, Field f, int line_no, int col0) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError(msg, line_no, col0 + static_cast<int>(pos) + 1);
  };
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto expect = [&](char ch) {
    skip();
    if (pos >= s.size() || s[pos] != ch) fail(std::string("expected '") + ch + "'");
    ++pos;
  };
  std::vector<std::vector<Scalar>> rows;
  expect('[');
  for (;;) {
    expect('[');
    std::vector<Scalar> row;
    for (;;) {
      skip();
      std::size_t start = pos;
      while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '-' || s[pos] == '/'))
        ++pos;
      if (start == pos) fail("expected a matrix entry");
      try {
        row.push_back(Scalar::parse(f, s.substr(start, pos - start)));
      } catch (const Error& e) {
        pos = start;
        fail(e.what());
      }
      skip();
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    expect(']');
    rows.push_back(std::move(row));
    skip();
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect(']');
  skip();
  if (pos != s.size()) fail("trailing text after matrix");
  if (static_cast<int>(rows.size()) != n) fail("matrix must have n rows");
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n) fail("matrix must have n columns");
  return Matrix::from_rows(rows, f);
}

}  // namespace

TameWord parse_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::optional<RingHeader> h;
  std::optional<TameWord> w;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!h) {
      h = parse_ring_header(line, "word", line_no);
      w.emplace(h->variant, h->n, h->field);
      continue;
    }
    std::string body = line;
    int exponent = 1;
    auto last = body.find_last_not_of(" \t");
    body.resize(last + 1);
    if (body.size() >= 3 && body.compare(body.size() - 3, 3, "^-1") == 0) {
      exponent = -1;
      body.resize(body.size() - 3);
    }
    auto first = body.find_first_not_of(" \t");
    std::size_t kw_end = body.find_first_of(" \t", first);
    std::string kw = body.substr(first, kw_end == std::string::npos ? std::string::npos : kw_end - first);
    std::size_t rest = kw_end == std::string::npos ? body.size() : kw_end;
    try {
      if (kw == "lin") {
        Matrix a = parse_matrix(std::string_view(body).substr(rest), h->n, h->field, line_no, static_cast<int>(rest));
        w->push(TameGen::linear(h->variant, a), exponent);
      } else if (kw == "elem") {
        std::size_t a = body.find_first_not_of(" \t", rest);
        if (a == std::string::npos) throw ParseError("expected generator number after 'elem'", line_no, static_cast<int>(rest) + 1);
        std::size_t b = body.find_first_of(" \t", a);
        if (b == std::string::npos) throw ParseError("expected a polynomial after the generator number", line_no, static_cast<int>(body.size()) + 1);
        std::string idx = body.substr(a, b - a);
        int i = 0;
        if (idx.find_first_not_of("0123456789") != std::string::npos || idx.size() > 3 ||
            (i = std::stoi(idx)) < 1 || i > h->n)
          throw ParseError("generator number must be in 1.." + std::to_string(h->n), line_no, static_cast<int>(a) + 1);
        Polynomial p = parse_polynomial(std::string_view(body).substr(b), h->variant, h->n, h->field, line_no,
                                        static_cast<int>(b));
        w->push(TameGen::elementary(i - 1, p), exponent);
      } else {
        throw ParseError("expected 'lin' or 'elem'", line_no, static_cast<int>(first) + 1);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no, static_cast<int>(first) + 1);
    }
  }
  if (!w) throw ParseError("missing 'word' header", line_no ? line_no : 1, 1);
  return *w;
}

}  // namespace tame
