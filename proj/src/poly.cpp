#include "qcodes/poly.hpp"

#include <algorithm>
#include <string>

#include "qcodes/error.hpp"

namespace qcodes {

namespace {

void require_same_ring(const ModulusRef& x, const ModulusRef& y) {
  if (!(*x == *y)) {
    throw Error(ErrorCode::kModulusMismatch, "polynomials over different rings");
  }
}

}  // namespace

Poly::Poly(ModulusRef modulus) : modulus_(std::move(modulus)) {}

Poly::Poly(ModulusRef modulus, std::vector<Residue> coeffs)
    : modulus_(std::move(modulus)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) require_same_ring(modulus_, c.modulus());
  trim();
}

Poly Poly::from_elements(const ModulusRef& modulus, std::span<const K1Element> coeffs) {
  std::vector<Residue> reduced;
  reduced.reserve(coeffs.size());
  for (const auto& c : coeffs) reduced.push_back(reduce(c, modulus));
  return Poly(modulus, std::move(reduced));
}

Poly Poly::monomial(const Residue& coeff, std::size_t degree) {
  std::vector<Residue> coeffs(degree + 1, zero(coeff.modulus()));
  coeffs[degree] = coeff;
  return Poly(coeff.modulus(), std::move(coeffs));
}

Poly Poly::x_pow_plus(const ModulusRef& modulus, std::size_t n, int sign) {
  return monomial(one(modulus), n) + Poly(modulus, {reduce({sign, 0}, modulus)});
}

Residue Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero(modulus_);
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::vector<Residue> Poly::to_vector(std::size_t length) const {
  if (coeffs_.size() > length) {
    throw Error(ErrorCode::kLengthMismatch, "polynomial of degree " +
                                               std::to_string(coeffs_.size() - 1) +
                                               " does not fit in length " + std::to_string(length));
  }
  std::vector<Residue> out = coeffs_;
  out.resize(length, zero(modulus_));
  return out;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool operator==(const Poly& p, const Poly& q) {
  return *p.modulus_ == *q.modulus_ && p.coeffs_ == q.coeffs_;
}

Poly operator+(const Poly& p, const Poly& q) {
  require_same_ring(p.modulus_, q.modulus_);
  std::vector<Residue> out;
  const std::size_t len = std::max(p.coeffs_.size(), q.coeffs_.size());
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(p.coeff(i) + q.coeff(i));
  return Poly(p.modulus_, std::move(out));
}

Poly operator-(const Poly& p) {
  std::vector<Residue> out;
  out.reserve(p.coeffs_.size());
  for (const auto& c : p.coeffs_) out.push_back(-c);
  return Poly(p.modulus_, std::move(out));
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly operator*(const Poly& p, const Poly& q) {
  require_same_ring(p.modulus_, q.modulus_);
  if (p.is_zero() || q.is_zero()) return Poly(p.modulus_);
  std::vector<Residue> out(p.coeffs_.size() + q.coeffs_.size() - 1, zero(p.modulus_));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
      out[i + j] = out[i + j] + p.coeffs_[i] * q.coeffs_[j];
    }
  }
  return Poly(p.modulus_, std::move(out));
}

Poly operator*(const Residue& c, const Poly& p) {
  require_same_ring(c.modulus(), p.modulus_);
  std::vector<Residue> out;
  out.reserve(p.coeffs_.size());
  for (const auto& x : p.coeffs_) out.push_back(c * x);
  return Poly(p.modulus_, std::move(out));
}

PolyDivMod divmod(const Poly& dividend, const Poly& divisor) {
  require_same_ring(dividend.modulus(), divisor.modulus());
  if (divisor.is_zero()) throw Error(ErrorCode::kDivisionByZeroPoly, "division by the zero polynomial");
  const Residue lead = divisor.coeffs().back();
  if (!is_unit(lead)) {
    throw Error(ErrorCode::kNonUnitLeadingCoefficient,
                "leading coefficient " + format_element(lead.rep()) + " is not a unit");
  }
  const Residue lead_inv = inverse(lead);
  const std::size_t db = divisor.coeffs().size() - 1;

  std::vector<Residue> rem = dividend.coeffs();
  if (rem.size() <= db) return {Poly(dividend.modulus()), dividend};

  std::vector<Residue> quot(rem.size() - db, zero(dividend.modulus()));
  for (std::size_t k = rem.size(); k-- > db;) {
    const Residue q = rem[k] * lead_inv;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = rem[k - db + j] - q * divisor.coeffs()[j];
  }
  rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(db), rem.end());
  return {Poly(dividend.modulus(), std::move(quot)), Poly(dividend.modulus(), std::move(rem))};
}

Poly divide_by_linear(std::size_t n, int sign, const Residue& root) {
  const ModulusRef& modulus = root.modulus();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "length must be positive");
  if (sign != 1 && sign != -1) throw Error(ErrorCode::kInvalidArgument, "sign must be +1 or -1");
  const Residue constant = reduce({sign, 0}, modulus);
  if (!(pow(root, n) + constant).is_zero()) {
    throw Error(ErrorCode::kRootCheckFailed,
                format_element(root.rep()) + "^" + std::to_string(n) + " + (" +
                    std::to_string(sign) + ") is not zero");
  }
  // q_{n-1} = 1, q_{k-1} = a_k + root * q_k for the dividend's a_k (zero for
  // 0 < k < n); the remainder a_0 + root * q_0 is zero by the check above.
  std::vector<Residue> q(n, zero(modulus));
  q[n - 1] = one(modulus);
  for (std::size_t k = n - 1; k > 0; --k) q[k - 1] = root * q[k];
  if (!(constant + root * q[0]).is_zero()) {
    throw Error(ErrorCode::kInternalContradiction, "synthetic division left a remainder");
  }
  return Poly(modulus, std::move(q));
}

Residue eval(std::span<const Residue> coeffs, const Residue& at) {
  Residue acc = zero(at.modulus());
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * at + coeffs[i];
  return acc;
}

Residue eval(const Poly& p, const Residue& at) {
  require_same_ring(p.modulus(), at.modulus());
  return eval(std::span<const Residue>(p.coeffs()), at);
}

std::string format_poly(std::span<const Residue> coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) out += ',';
    out += format_element(coeffs[i].rep());
  }
  return out.empty() ? "0" : out;
}

std::vector<K1Element> parse_poly(std::string_view text) {
  std::vector<K1Element> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if (depth < 0) throw Error(ErrorCode::kParse, "unbalanced ')' in '" + std::string(text) + "'");
      if (text[i] != ',' || depth > 0) continue;
    }
    out.push_back(parse_element(text.substr(start, i - start), false));
    start = i + 1;
  }
  if (depth != 0) throw Error(ErrorCode::kParse, "unbalanced '(' in '" + std::string(text) + "'");
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << format_poly(p.coeffs());
}

}  // namespace qcodes
