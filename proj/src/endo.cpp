#include "tame/endo.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace tame {

Endo::Endo(std::vector<Polynomial> images) : images_(std::move(images)) {
  if (images_.empty()) throw Error("an endomorphism needs at least one image");
  for (const auto& im : images_) images_.front().check_compatible(im);
  if (images_.front().nvars() != static_cast<int>(images_.size()))
    throw Error("image count does not match the generator count");
}

Endo Endo::identity(Variant v, int n, Field f) {
  std::vector<Polynomial> ims;
  for (int i = 0; i < n; ++i) ims.push_back(Polynomial::variable(v, n, f, i));
  return Endo(std::move(ims));
}

Endo Endo::linear(Variant v, const Matrix& a) {
  if (a.rows() != a.cols()) throw Error("linear map needs a square matrix");
  int n = a.rows();
  std::vector<Polynomial> ims;
  for (int i = 0; i < n; ++i) {
    Polynomial p(v, n, a.field());
    for (int j = 0; j < n; ++j) p += Polynomial::variable(v, n, a.field(), j).scaled(a(i, j));
    ims.push_back(std::move(p));
  }
  return Endo(std::move(ims));
}

Endo Endo::elementary(int i, const Polynomial& p) {
  Endo e = identity(p.variant(), p.nvars(), p.field());
  e.images_.at(i) += p;
  return e;
}

bool Endo::is_origin_preserving() const {
  return std::all_of(images_.begin(), images_.end(),
                     [](const Polynomial& p) { return p.constant_term().is_zero(); });
}

bool Endo::is_identity() const { return *this == identity(variant(), nvars(), field()); }

Matrix Endo::linear_part() const {
  int n = nvars();
  Matrix a(n, n, field());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Monomial m;
      if (variant() == Variant::Commutative) {
        m.assign(n, 0);
        m[j] = 1;
      } else {
        m.push_back(static_cast<std::uint32_t>(j));
      }
      a(i, j) = images_[i].coefficient(m);
    }
  return a;
}

Endo Endo::truncate(int N) const {
  std::vector<Polynomial> ims;
  for (const auto& p : images_) ims.push_back(p.truncate(N));
  return Endo(std::move(ims));
}

int Endo::degree() const {
  int d = -1;
  for (const auto& p : images_) d = std::max(d, p.degree());
  return d;
}

void Endo::check_compatible(const Endo& o) const { images_.front().check_compatible(o.images_.front()); }

std::string Endo::str() const {
  std::string out = ring_header("endo", variant(), nvars(), field()) + "\n";
  for (int i = 0; i < nvars(); ++i)
    out += generator_name(nvars(), i) + " -> " + images_[i].str() + "\n";
  return out;
}

Endo compose(const Endo& phi, const Endo& psi) {
  phi.check_compatible(psi);
  std::vector<Polynomial> ims;
  for (const auto& p : phi.images()) ims.push_back(p.substitute(psi.images()));
  return Endo(std::move(ims));
}

Endo compose_mod(const Endo& phi, const Endo& psi, int N) {
  if (N < 1) throw Error("jet order must be positive");
  phi.check_compatible(psi);
  if (!psi.is_origin_preserving()) return compose(phi, psi).truncate(N);
  Endo small = psi.truncate(N);
  std::vector<Polynomial> ims;
  for (const auto& p : phi.images()) ims.push_back(p.truncate(N).substitute(small.images(), N));
  return Endo(std::move(ims));
}

Endo jet_inverse(const Endo& phi, int N) {
  if (!phi.is_origin_preserving()) throw Error("jet inverse needs an origin-preserving map");
  Matrix ainv = phi.linear_part().inverse();
  Endo psi = Endo::linear(phi.variant(), ainv);
  if (N <= 2) return psi.truncate(N);
  const int n = phi.nvars();
  Endo id = Endo::identity(phi.variant(), n, phi.field());
  for (int d = 2; d < N; ++d) {
    Endo c = compose_mod(phi, psi, d + 1);
    std::vector<Polynomial> err;
    for (int i = 0; i < n; ++i) err.push_back((c.image(i) - id.image(i)).homogeneous_part(d));
    std::vector<Polynomial> ims = psi.images();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!ainv(i, j).is_zero()) ims[i] -= err[j].scaled(ainv(i, j));
    psi = Endo(std::move(ims));
  }
  return psi;
}

Endo jet_power(const Endo& phi, int k, int N) {
  Endo base = k < 0 ? jet_inverse(phi, N) : phi.truncate(N);
  Endo r = Endo::identity(phi.variant(), phi.nvars(), phi.field()).truncate(N);
  for (int e = std::abs(k); e > 0; e >>= 1) {
    if (e & 1) r = compose_mod(r, base, N);
    if (e > 1) base = compose_mod(base, base, N);
  }
  return r;
}

JetReport aug_order(const Endo& phi) {
  JetReport rep;
  Endo id = Endo::identity(phi.variant(), phi.nvars(), phi.field());
  std::optional<int> low;
  std::vector<Polynomial> diffs;
  for (int i = 0; i < phi.nvars(); ++i) {
    diffs.push_back(phi.image(i) - id.image(i));
    auto d = diffs.back().low_degree();
    if (d && (!low || *d < *low)) low = d;
  }
  rep.order = low;
  for (const auto& df : diffs) rep.discrepancy.push_back(low ? df.homogeneous_part(*low) : df);
  return rep;
}

bool is_homothety_mod(const Endo& phi, int N) {
  if (N < 2) throw Error("homothety test needs N >= 2");
  if (!phi.is_origin_preserving()) return false;
  Matrix a = phi.linear_part();
  Scalar lambda = a(0, 0);
  if (lambda.is_zero()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != (i == j ? lambda : Scalar::zero(phi.field()))) return false;
  for (const auto& p : phi.images())
    for (int d = 2; d < N; ++d)
      if (!p.homogeneous_part(d).is_zero()) return false;
  return true;
}


bool preserves_ideal_power(const Endo& phi, int N) {
  if (N <= 0 || phi.is_origin_preserving()) return true;
  bool ok = true;
  for_each_monomial(phi.variant(), phi.nvars(), N, [&](const Monomial& m) {
    if (!ok) return;
    Polynomial p = Polynomial::term(phi.variant(), phi.nvars(), m, Scalar::one(phi.field()));
    auto low = p.substitute(phi.images()).low_degree();
    if (low && *low < N) ok = false;
  });
  return ok;
}

std::vector<std::vector<Polynomial>> jacobian(const Endo& phi) {
  if (phi.variant() != Variant::Commutative) throw Error("jacobian requires a commutative endomorphism");
  std::vector<std::vector<Polynomial>> j;
  for (const auto& p : phi.images()) {
    std::vector<Polynomial> row;
    for (int k = 0; k < phi.nvars(); ++k) row.push_back(p.derivative(k));
    j.push_back(std::move(row));
  }
  return j;
}

Polynomial polynomial_det(const std::vector<std::vector<Polynomial>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0 || n > 20) throw Error("determinant size out of range");
  const Polynomial& proto = m[0][0];
  // minors[S] = det of rows 0..|S|-1 restricted to the column set S
  std::map<unsigned, Polynomial> minors;
  minors.emplace(0u, Polynomial::constant(proto.variant(), proto.nvars(), Scalar::one(proto.field())));
  for (int r = 0; r < n; ++r) {
    std::map<unsigned, Polynomial> next;
    for (const auto& [set, det] : minors) {
      if (det.is_zero()) continue;
      int pos_after = 0;
      for (int c = n - 1; c >= 0; --c) {
        if (set & (1u << c)) {
          ++pos_after;
          continue;
        }
        if (m[r][c].is_zero()) continue;
        // column c lands at index (popcount of set below c) in the new set;
        // expanding along the last row gives sign (-1)^(r + index)
        int index = r - pos_after;
        Polynomial term = det * m[r][c];
        if ((r + index) % 2) term = -term;
        auto [it, ins] = next.try_emplace(set | (1u << c), term);
        if (!ins) it->second += term;
      }
    }
    minors = std::move(next);
  }
  auto it = minors.find((1u << n) - 1);
  if (it == minors.end()) return Polynomial(proto.variant(), proto.nvars(), proto.field());
  return it->second;
}

Polynomial jacobian_det(const Endo& phi) { return polynomial_det(jacobian(phi)); }

Endo abelianize_endo(const Endo& phi) {
  if (phi.variant() != Variant::Free) throw Error("abelianize requires a free endomorphism");
  std::vector<Polynomial> ims;
  for (const auto& p : phi.images()) ims.push_back(p.abelianize());
  return Endo(std::move(ims));
}

namespace {

void require_odd(Field f) {
  if (f.characteristic() == 2) throw Error("the Nagata formulas need characteristic != 2");
}

}  // namespace

Endo nagata(Field f) {
  require_odd(f);
  const auto v = Variant::Commutative;
  return Endo({parse_polynomial("x - 2*y*(y^2+x*z) - (y^2+x*z)^2*z", v, 3, f),
               parse_polynomial("y + (y^2+x*z)*z", v, 3, f), parse_polynomial("z", v, 3, f)});
}

Endo nagata_inverse(Field f) {
  require_odd(f);
  const auto v = Variant::Commutative;
  return Endo({parse_polynomial("x + 2*y*(y^2+x*z) - (y^2+x*z)^2*z", v, 3, f),
               parse_polynomial("y - (y^2+x*z)*z", v, 3, f), parse_polynomial("z", v, 3, f)});
}

std::string ring_header(std::string_view keyword, Variant v, int n, Field f) {
  return std::string(keyword) + " " + variant_name(v) + " n=" + std::to_string(n) + " field=" + f.name();
}

RingHeader parse_ring_header(std::string_view line, std::string_view keyword, int line_no) {
  std::istringstream in{std::string(line)};
  std::string kw, variant, ntok, ftok, extra;
  in >> kw >> variant >> ntok >> ftok;
  if (kw != keyword) throw ParseError("expected header starting with '" + std::string(keyword) + "'", line_no, 1);
  if (ftok.empty() || (in >> extra))
    throw ParseError("header must read '" + std::string(keyword) + " <comm|free> n=<n> field=<F>'", line_no, 1);
  RingHeader h{};
  try {
    h.variant = parse_variant(variant);
    if (ntok.rfind("n=", 0) != 0 || ftok.rfind("field=", 0) != 0) throw Error("malformed header fields");
    h.n = std::stoi(ntok.substr(2));
    if (h.n < 1 || h.n > 64) throw Error("generator count out of range");
    h.field = Field::parse(ftok.substr(6));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what(), line_no, 1);
  }
  return h;
}

Endo parse_endo(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::optional<RingHeader> h;
  std::vector<std::optional<Polynomial>> ims;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!h) {
      h = parse_ring_header(line, "endo", line_no);
      ims.assign(h->n, std::nullopt);
      continue;
    }
    auto arrow = line.find("->");
    if (arrow == std::string::npos) throw ParseError("expected '<generator> -> <polynomial>'", line_no, 1);
    std::string lhs = line.substr(0, arrow);
    auto b = lhs.find_first_not_of(" \t"), e = lhs.find_last_not_of(" \t");
    lhs = b == std::string::npos ? "" : lhs.substr(b, e - b + 1);
    auto g = parse_generator(lhs, h->n);
    if (!g) throw ParseError("unknown generator '" + lhs + "'", line_no, static_cast<int>(b == std::string::npos ? 1 : b + 1));
    if (ims[*g]) throw ParseError("generator '" + lhs + "' assigned twice", line_no, 1);
    ims[*g] = parse_polynomial(std::string_view(line).substr(arrow + 2), h->variant, h->n, h->field,
                               line_no, static_cast<int>(arrow + 2));
  }
  if (!h) throw ParseError("missing 'endo' header", line_no ? line_no : 1, 1);
  std::vector<Polynomial> out;
  for (int i = 0; i < h->n; ++i) {
    if (!ims[i]) throw ParseError("no image given for '" + generator_name(h->n, i) + "'", line_no, 1);
    out.push_back(*ims[i]);
  }
  return Endo(std::move(out));
}

}  // namespace tame
