// Finite fields GF(p^k) in polynomial basis, and the quadratic extension
// GF(q^2) / GF(q) with its norm map.
//
// Elements are encoded as integers: the coefficient vector (c_0, ..., c_{k-1})
// of c_0 + c_1 x + ... + c_{k-1} x^{k-1} maps to sum c_i p^i. Multiplication and
// addition go through log/antilog and Zech-logarithm tables.

#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hq {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// If n = p^k for a prime p, returns {p, k}; otherwise {0, 0}.
inline std::pair<std::uint64_t, std::uint32_t> prime_power_decompose(std::uint64_t n) {
  if (n < 2) return {0, 0};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {n, 1};
  std::uint32_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return {0, 0};
  return {p, k};
}

inline bool is_prime_power(std::uint64_t n) { return prime_power_decompose(n).first != 0; }

namespace detail {

using Poly = std::vector<std::uint32_t>;  // little-endian coefficients mod p

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo a nonzero polynomial b over GF(p).
inline Poly poly_mod(Poly a, Poly b, std::uint32_t p) {
  poly_trim(a);
  poly_trim(b);
  const std::uint32_t lead_inv = inv_mod_prime(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
    }
    poly_trim(a);
  }
  return a;
}

inline Poly decode_poly(std::uint64_t code, std::uint32_t p, std::uint32_t len) {
  Poly out(len);
  for (std::uint32_t i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return out;
}

inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t deg = 1; 2 * deg <= k; ++deg) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = decode_poly(low, p, deg);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

struct FieldParams {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::vector<std::uint32_t> modulus;  // k+1 coefficients, monic
  std::uint32_t order = 0;             // p^k
};

/// Parameters of GF(p^k) with the smallest monic irreducible modulus of degree k
/// (ordered by the base-p integer value of its lower coefficients).
inline FieldParams field_make(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw FieldError("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw FieldError("field degree must be at least 1");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    order *= p;
    if (order > (1u << 16)) throw FieldError("field order exceeds 2^16");
  }
  FieldParams params{p, k, {}, static_cast<std::uint32_t>(order)};
  for (std::uint64_t low = 0; low < order; ++low) {
    detail::Poly f = detail::decode_poly(low, p, k);
    f.push_back(1);
    if (detail::is_irreducible(f, p)) {
      params.modulus = f;
      return params;
    }
  }
  throw FieldError("no irreducible polynomial found (internal error)");
}

class Field;

/// A field element tied to its field. Equality is coefficient-wise.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Field* field, std::uint32_t code) : field_(field), code_(code) {}

  std::uint32_t code() const { return code_; }
  const Field* field() const { return field_; }
  std::vector<std::uint32_t> coeffs() const;
  bool is_zero() const { return code_ == 0; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.code_ == b.code_;
  }

 private:
  const Field* field_ = nullptr;
  std::uint32_t code_ = 0;
};

class Field {
 public:
  explicit Field(FieldParams params) : params_(std::move(params)) { build_tables(); }

  const FieldParams& params() const { return params_; }
  std::uint32_t order() const { return params_.order; }
  std::uint32_t characteristic() const { return params_.p; }
  std::uint32_t degree() const { return params_.k; }
  std::uint32_t generator() const { return exp_[1]; }

  FieldElement element(std::uint32_t code) const {
    if (code >= params_.order) throw FieldError("element code out of range");
    return {this, code};
  }
  FieldElement from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() != params_.k) throw FieldError("coefficient vector has wrong length");
    std::uint32_t code = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      if (coeffs[i] >= params_.p) throw FieldError("coefficient out of range");
      code = code * params_.p + coeffs[i];
    }
    return {this, code};
  }
  FieldElement zero() const { return {this, 0}; }
  FieldElement one() const { return {this, 1}; }

  // Code-level arithmetic; inputs must be valid codes.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t la = log_[a], lb = log_[b];
    const std::uint32_t diff = lb >= la ? lb - la : lb + group_ - la;
    const std::int64_t z = zech_[diff];
    if (z < 0) return 0;
    return exp_[la + static_cast<std::uint32_t>(z)];
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (a == 0 || params_.p == 2) return a;
    return exp_[log_[a] + group_ / 2];
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw FieldError("division by zero");
    return exp_[(group_ - log_[a]) % group_];
  }
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[static_cast<std::uint32_t>((std::uint64_t{log_[a]} * (e % group_)) % group_)];
  }

  FieldElement add(const FieldElement& a, const FieldElement& b) const { return {this, add(check(a), check(b))}; }
  FieldElement sub(const FieldElement& a, const FieldElement& b) const { return {this, sub(check(a), check(b))}; }
  FieldElement mul(const FieldElement& a, const FieldElement& b) const { return {this, mul(check(a), check(b))}; }
  FieldElement div(const FieldElement& a, const FieldElement& b) const { return {this, div(check(a), check(b))}; }
  FieldElement pow(const FieldElement& a, std::uint64_t e) const { return {this, pow(check(a), e)}; }

  std::vector<std::uint32_t> coeffs(std::uint32_t code) const {
    return detail::decode_poly(code, params_.p, params_.k);
  }

 private:
  std::uint32_t check(const FieldElement& a) const {
    if (a.field() != this) throw FieldError("operands belong to different fields");
    return a.code();
  }

  // Digit-wise polynomial operations, used only while building the tables.
  std::uint32_t slow_add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < params_.k; ++i) {
      out += ((a % params_.p + b % params_.p) % params_.p) * scale;
      a /= params_.p;
      b /= params_.p;
      scale *= params_.p;
    }
    return out;
  }
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t p = params_.p, k = params_.k;
    detail::Poly pa = detail::decode_poly(a, p, k), pb = detail::decode_poly(b, p, k);
    detail::Poly prod(2 * k, 0);
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p);
    detail::Poly r = detail::poly_mod(prod, params_.modulus, p);
    std::uint32_t code = 0;
    for (std::size_t i = r.size(); i-- > 0;) code = code * p + r[i];
    return code;
  }

  void build_tables() {
    const std::uint32_t order = params_.order;
    group_ = order - 1;
    if (order == 2) {
      exp_ = {1, 1, 1};
      log_ = {0, 0};
      zech_ = {-1};
      return;
    }
    // Find a primitive element: the first code whose powers cycle with period order-1.
    std::uint32_t gen = 0;
    for (std::uint32_t cand = 2; cand < order && gen == 0; ++cand) {
      std::uint32_t x = cand, period = 1;
      while (x != 1) {
        x = slow_mul(x, cand);
        ++period;
      }
      if (period == group_) gen = cand;
    }
    if (gen == 0) throw FieldError("no primitive element found (internal error)");
    exp_.assign(2 * group_ + 1, 0);
    log_.assign(order, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < 2 * group_ + 1; ++i) {
      exp_[i] = x;
      if (i < group_) log_[x] = i;
      x = slow_mul(x, gen);
    }
    zech_.assign(group_, -1);
    for (std::uint32_t i = 0; i < group_; ++i) {
      const std::uint32_t s = slow_add(1, exp_[i]);
      zech_[i] = s == 0 ? -1 : static_cast<std::int64_t>(log_[s]);
    }
  }

  FieldParams params_;
  std::uint32_t group_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::int64_t> zech_;
};

inline std::vector<std::uint32_t> FieldElement::coeffs() const { return field_->coeffs(code_); }

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return a.field()->add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a.field()->sub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return a.field()->mul(a, b); }
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a.field()->div(a, b); }

/// GF(q^2) built as GF(p^{2k}) together with GF(q) = GF(p^k). The copy of GF(q)
/// inside GF(q^2) is the fixed field of x -> x^q; `to_base` / `from_base` are an
/// explicit isomorphism between that subfield and the standalone GF(q).
class QuadraticExtension {
 public:
  explicit QuadraticExtension(std::uint32_t q) {
    const auto [p, k] = prime_power_decompose(q);
    if (p == 0) throw FieldError("q must be a prime power");
    if (std::uint64_t{q} * q > (1u << 16)) throw FieldError("q^2 exceeds 2^16");
    q_ = q;
    base_ = std::make_unique<Field>(field_make(p, k));
    ext_ = std::make_unique<Field>(field_make(p, 2 * k));
    build_embedding();
  }

  std::uint32_t q() const { return q_; }
  const Field& base() const { return *base_; }
  const Field& ext() const { return *ext_; }

  bool in_subfield(std::uint32_t x) const { return ext_->pow(x, q_) == x; }

  /// x^{q+1}, as a code of GF(q^2) lying in the subfield.
  std::uint32_t norm_code(std::uint32_t x) const { return ext_->pow(x, q_ + 1); }

  /// Norm of an element of GF(q^2), returned as an element of GF(q).
  FieldElement norm(const FieldElement& x) const {
    if (x.field() != ext_.get()) throw FieldError("norm requires an element of the quadratic extension");
    const std::uint32_t n = norm_code(x.code());
    if (!in_subfield(n)) throw FieldError("norm value outside the base field (internal error)");
    return base_->element(to_base_[n]);
  }

  std::uint32_t to_base(std::uint32_t ext_code) const {
    const std::uint32_t b = to_base_[ext_code];
    if (b == kNone) throw FieldError("element not in the base subfield");
    return b;
  }
  std::uint32_t from_base(std::uint32_t base_code) const { return from_base_[base_code]; }

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  void build_embedding() {
    // Find a root of the base modulus inside GF(q^2); x -> root gives GF(q) -> GF(q^2).
    const auto& mod = base_->params().modulus;
    auto eval = [&](std::uint32_t r) {
      std::uint32_t acc = 0;
      for (std::size_t i = mod.size(); i-- > 0;) {
        std::uint32_t c = 0;
        for (std::uint32_t t = 0; t < mod[i]; ++t) c = ext_->add(c, 1);
        acc = ext_->add(ext_->mul(acc, r), c);
      }
      return acc;
    };
    std::uint32_t root = kNone;
    for (std::uint32_t r = 0; r < ext_->order() && root == kNone; ++r)
      if (eval(r) == 0) root = r;
    if (root == kNone) throw FieldError("base modulus has no root in the extension (internal error)");

    from_base_.assign(base_->order(), 0);
    to_base_.assign(ext_->order(), kNone);
    for (std::uint32_t b = 0; b < base_->order(); ++b) {
      const auto c = base_->coeffs(b);
      std::uint32_t acc = 0;
      for (std::size_t i = c.size(); i-- > 0;) {
        std::uint32_t ci = 0;
        for (std::uint32_t t = 0; t < c[i]; ++t) ci = ext_->add(ci, 1);
        acc = ext_->add(ext_->mul(acc, root), ci);
      }
      from_base_[b] = acc;
      to_base_[acc] = b;
    }
  }

  std::uint32_t q_ = 0;
  std::unique_ptr<Field> base_;
  std::unique_ptr<Field> ext_;
  std::vector<std::uint32_t> to_base_;
  std::vector<std::uint32_t> from_base_;
};

}  // namespace hq
