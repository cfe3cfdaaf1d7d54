#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spectacular {

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// The finite field GF(p^e).
///
/// Elements are encoded as integers in [0, q): the element with coefficient
/// vector (c_0, ..., c_{e-1}) over GF(p) has code c_0 + c_1 p + ... The
/// modulus is the numerically least irreducible monic polynomial of degree e
/// under that same encoding, so fields are reproducible across runs.
class Field {
public:
  static Field make(int p, int e, int max_q = 64) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
    if (e < 1) throw std::invalid_argument("field degree must be positive");
    long q = 1;
    for (int i = 0; i < e; ++i) {
      q *= p;
      if (q > max_q) throw std::invalid_argument("field size exceeds bound " + std::to_string(max_q));
    }
    return Field(p, e, static_cast<int>(q));
  }

  int p() const { return p_; }
  int degree() const { return e_; }
  int q() const { return q_; }

  /// Monic modulus polynomial, coefficients ascending, length e+1.
  /// For e == 1 this is the polynomial x.
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add_[idx(a, neg_[check(b)])]; }
  int neg(int a) const { return neg_[check(a)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }

  int inv(int a) const {
    check(a);
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[a];
  }

  std::vector<int> coeffs(int a) const {
    check(a);
    std::vector<int> c(e_);
    for (int i = 0; i < e_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  }

  bool operator==(const Field& o) const { return p_ == o.p_ && e_ == o.e_; }

private:
  Field(int p, int e, int q) : p_(p), e_(e), q_(q) {
    modulus_ = find_modulus();
    build_tables();
  }

  int check(int a) const {
    if (a < 0 || a >= q_) throw std::out_of_range("field element code out of range");
    return a;
  }
  int idx(int a, int b) const { return check(a) * q_ + check(b); }

  // Remainder of a/b in GF(p)[x]; coefficients ascending, b monic.
  static std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    int db = static_cast<int>(b.size()) - 1;
    for (int da = static_cast<int>(a.size()) - 1; da >= db; --da) {
      int lead = a[da] % p;
      if (lead == 0) continue;
      for (int i = 0; i <= db; ++i) {
        int k = da - db + i;
        a[k] = ((a[k] - lead * b[i]) % p + p) % p;
      }
    }
    a.resize(db);
    return a;
  }

  static bool is_zero(const std::vector<int>& a) {
    for (int c : a)
      if (c != 0) return false;
    return true;
  }

  // Trial division by every monic polynomial of degree 1..e/2 suffices at
  // the supported field sizes.
  bool irreducible(const std::vector<int>& f) const {
    for (int deg = 1; 2 * deg <= e_; ++deg) {
      long count = 1;
      for (int i = 0; i < deg; ++i) count *= p_;
      for (long code = 0; code < count; ++code) {
        std::vector<int> div(deg + 1, 0);
        long c = code;
        for (int i = 0; i < deg; ++i) {
          div[i] = static_cast<int>(c % p_);
          c /= p_;
        }
        div[deg] = 1;
        if (is_zero(poly_mod(f, div, p_))) return false;
      }
    }
    return true;
  }

  std::vector<int> find_modulus() const {
    if (e_ == 1) return {0, 1};
    for (int code = 0; code < q_; ++code) {
      std::vector<int> f(e_ + 1, 0);
      int c = code;
      for (int i = 0; i < e_; ++i) {
        f[i] = c % p_;
        c /= p_;
      }
      f[e_] = 1;
      if (irreducible(f)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
  }

  void build_tables() {
    add_.resize(static_cast<size_t>(q_) * q_);
    mul_.resize(static_cast<size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
      std::vector<int> ca = raw_coeffs(a);
      // negation
      std::vector<int> nc(e_);
      for (int i = 0; i < e_; ++i) nc[i] = (p_ - ca[i]) % p_;
      neg_[a] = encode(nc);
      for (int b = 0; b < q_; ++b) {
        std::vector<int> cb = raw_coeffs(b);
        std::vector<int> s(e_);
        for (int i = 0; i < e_; ++i) s[i] = (ca[i] + cb[i]) % p_;
        add_[static_cast<size_t>(a) * q_ + b] = encode(s);
        std::vector<int> prod(2 * e_ - 1, 0);
        for (int i = 0; i < e_; ++i)
          for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
        std::vector<int> r = e_ == 1 ? std::vector<int>{prod[0] % p_} : poly_mod(prod, modulus_, p_);
        r.resize(e_, 0);
        int m = encode(r);
        mul_[static_cast<size_t>(a) * q_ + b] = m;
        if (m == 1) inv_[a] = b;
      }
    }
  }

  std::vector<int> raw_coeffs(int a) const {
    std::vector<int> c(e_);
    for (int i = 0; i < e_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  }

  int encode(const std::vector<int>& c) const {
    int v = 0;
    for (int i = e_ - 1; i >= 0; --i) v = v * p_ + c[i];
    return v;
  }

  int p_, e_, q_;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace spectacular
