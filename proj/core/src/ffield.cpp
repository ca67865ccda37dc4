#include "gpk/ffield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace gpk {

namespace {

// ---- dense polynomials over GF(p), little-endian, trimmed ----------------

using Poly = std::vector<Coeff>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeff inv_mod(Coeff a, std::uint32_t p) {
  // p is prime; Fermat.
  std::uint64_t r = 1, b = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<Coeff>(r);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = factor * m[i] % p;
      a[shift + i] = static_cast<Coeff>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  Poly r(acc.begin(), acc.end());
  return poly_mod(std::move(r), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool checked_pow(std::uint64_t base, std::uint32_t e, std::uint64_t limit, std::uint64_t& out) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (r > limit / base) return false;
    r *= base;
  }
  out = r;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(std::span<const Coeff> monic_poly, std::uint32_t p) {
  Poly f(monic_poly.begin(), monic_poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  // Ben-Or: f is irreducible iff gcd(f, x^(p^i) - x) = 1 for i <= n/2.
  Poly x{0, 1};
  Poly h = x;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    // h <- h^p mod f
    Poly r{1};
    Poly b = h;
    std::uint32_t e = p;
    while (e) {
      if (e & 1) r = poly_mulmod(r, b, f, p);
      b = poly_mulmod(b, b, f, p);
      e >>= 1;
    }
    h = r;
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<Coeff>((diff[1] + p - 1) % p);
    Poly g = poly_gcd(f, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::vector<Coeff> smallest_irreducible(std::uint32_t p, std::uint32_t n) {
  std::uint64_t count = 0;
  if (!checked_pow(p, n, Field::kMaxSize, count)) throw FieldError("modulus search space too large");
  Poly cand(n + 1, 0);
  cand[n] = 1;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < n; ++i) {
      cand[i] = static_cast<Coeff>(c % p);
      c /= p;
    }
    if (is_irreducible(cand, p)) return cand;
  }
  throw FieldError("no irreducible polynomial found");  // unreachable for prime p
}

// ---- Field ----------------------------------------------------------------

const Field& Field::get(std::uint32_t p, std::uint32_t n) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<Field>> registry;
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (n == 0 || n > kMaxDegree)
    throw FieldError("extension degree " + std::to_string(n) + " outside [1, " + std::to_string(kMaxDegree) + "]");
  std::uint64_t size = 0;
  if (!checked_pow(p, n, kMaxSize, size))
    throw FieldError("field GF(" + std::to_string(p) + "^" + std::to_string(n) + ") exceeds size cap");
  std::lock_guard lock(mu);
  auto& slot = registry[{p, n}];
  if (!slot) slot.reset(new Field(p, n));
  return *slot;
}

Field::~Field() = default;

Field::Field(std::uint32_t p, std::uint32_t n) : p_(p), n_(n), size_(1) {
  pow_p_.resize(n + 1);
  pow_p_[0] = 1;
  for (std::uint32_t i = 1; i <= n; ++i) pow_p_[i] = pow_p_[i - 1] * p;
  size_ = pow_p_[n];
  modulus_ = smallest_irreducible(p, n);

  // Primitive element by the order test on prime factors of |F*|.
  const std::uint64_t order = size_ - 1;
  const auto factors = prime_factors(order);
  auto slow_pow = [&](Value a, std::uint64_t e) {
    Value r = 1;
    while (e) {
      if (e & 1) r = mul_poly(r, a);
      a = mul_poly(a, a);
      e >>= 1;
    }
    return r;
  };
  for (Value v = 1; v < size_; ++v) {
    bool gen = true;
    for (auto r : factors) {
      if (slow_pow(v, order / r) == 1) {
        gen = false;
        break;
      }
    }
    if (gen) {
      primitive_ = v;
      break;
    }
  }
  if (size_ <= kTableLimit) build_tables();
}

void Field::build_tables() {
  const std::uint64_t order = size_ - 1;
  exp_.assign(2 * order, 0);
  log_.assign(size_, 0);
  Value cur = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = static_cast<std::uint32_t>(cur);
    exp_[i + order] = static_cast<std::uint32_t>(cur);
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = mul_poly(cur, primitive_);
  }
  if (p_ != 2) {
    zech_.assign(order, kNoLog);
    for (std::uint64_t k = 0; k < order; ++k) {
      const Value s = add_digits(exp_[k], 1);
      zech_[k] = s == 0 ? kNoLog : log_[s];
    }
  }
}

Field::Value Field::add_digits(Value a, Value b) const {
  if (p_ == 2) return a ^ b;
  Value r = 0;
  for (std::uint32_t i = 0; i < n_ && (a || b); ++i) {
    const Value d = (a % p_ + b % p_) % p_;
    r += d * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

Field::Value Field::mul_poly(Value a, Value b) const {
  if (a == 0 || b == 0) return 0;
  if (p_ == 2) {
    Value prod = 0;
    for (std::uint32_t i = 0; i < n_; ++i)
      if ((b >> i) & 1) prod ^= a << i;
    Value mod_bits = 0;
    for (std::uint32_t i = 0; i <= n_; ++i)
      if (modulus_[i]) mod_bits |= Value{1} << i;
    for (int bit = static_cast<int>(2 * n_) - 2; bit >= static_cast<int>(n_); --bit)
      if ((prod >> bit) & 1) prod ^= mod_bits << (bit - n_);
    return prod;
  }
  std::vector<std::uint64_t> da(n_), db(n_), acc(2 * n_ - 1, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (!da[i]) continue;
    for (std::uint32_t j = 0; j < n_; ++j) acc[i + j] = (acc[i + j] + da[i] * db[j]) % p_;
  }
  for (int k = static_cast<int>(2 * n_) - 2; k >= static_cast<int>(n_); --k) {
    const std::uint64_t c = acc[k];
    if (!c) continue;
    acc[k] = 0;
    for (std::uint32_t i = 0; i < n_; ++i)
      acc[k - n_ + i] = (acc[k - n_ + i] + (p_ - c) * modulus_[i]) % p_;
  }
  Value r = 0;
  for (std::uint32_t i = 0; i < n_; ++i) r += acc[i] * pow_p_[i];
  return r;
}

Field::Value Field::add(Value a, Value b) const {
  if (p_ == 2) return a ^ b;
  if (a == 0) return b;
  if (b == 0) return a;
  if (zech_.empty()) return add_digits(a, b);
  const std::uint64_t order = size_ - 1;
  const std::uint32_t la = log_[a], lb = log_[b];
  const std::uint64_t k = (lb + order - la) % order;
  const std::uint32_t z = zech_[k];
  if (z == kNoLog) return 0;
  return exp_[la + z];
}

Field::Value Field::neg(Value a) const {
  if (p_ == 2 || a == 0) return a;
  Value r = 0;
  for (std::uint32_t i = 0; i < n_ && a; ++i) {
    const Value d = a % p_;
    if (d) r += (p_ - d) * pow_p_[i];
    a /= p_;
  }
  return r;
}

Field::Value Field::sub(Value a, Value b) const { return add(a, neg(b)); }

Field::Value Field::mul(Value a, Value b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return mul_poly(a, b);
}

Field::Value Field::inv(Value a) const {
  if (a == 0) throw FieldError("inversion of zero");
  if (!exp_.empty()) return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
  return pow(a, size_ - 2);
}

Field::Value Field::pow(Value a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = size_ - 1;
  if (!exp_.empty()) {
    // Tabled fields have fewer than 2^20 elements, so this cannot overflow.
    return exp_[(log_[a] * (e % order)) % order];
  }
  e %= order;
  if (e == 0) e = order;
  Value r = 1;
  while (e) {
    if (e & 1) r = mul_poly(r, a);
    a = mul_poly(a, a);
    e >>= 1;
  }
  return r;
}

Field::Value Field::frobenius(Value a, std::uint32_t r) const { return pow(a, pow_p_[r % n_]); }

Field::Value Field::from_int(std::int64_t c) const {
  const std::int64_t p = p_;
  return static_cast<Value>(((c % p) + p) % p);
}

Field::Value Field::from_coeffs(std::span<const Coeff> coeffs) const {
  if (coeffs.size() > n_) throw FieldError("coefficient list longer than extension degree");
  Value r = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r += Value{coeffs[i] % p_} * pow_p_[i];
  return r;
}

std::vector<Coeff> Field::coeffs(Value a) const {
  std::vector<Coeff> out(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    out[i] = static_cast<Coeff>(a % p_);
    a /= p_;
  }
  return out;
}

std::uint64_t Field::multiplicative_order(Value a) const {
  if (a == 0) throw FieldError("zero has no multiplicative order");
  std::uint64_t order = size_ - 1;
  for (auto r : prime_factors(size_ - 1)) {
    while (order % r == 0 && pow(a, order / r) == 1) order /= r;
  }
  return order;
}

Elem Field::operator()(Value v) const {
  if (v >= size_) throw FieldError("element encoding out of range");
  return Elem(*this, v);
}
Elem Field::zero() const { return Elem(*this, 0); }
Elem Field::one() const { return Elem(*this, 1); }
Elem Field::from_int_elem(std::int64_t c) const { return Elem(*this, from_int(c)); }

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << p_ << "^" << n_ << ")";
  return os.str();
}

// ---- Elem -----------------------------------------------------------------

const Field& Elem::field() const {
  if (!field_) throw FieldError("use of an unbound element");
  return *field_;
}

const Field& Elem::checked(const Elem& o) const {
  if (!field_ || field_ != o.field_) throw FieldError("field context mismatch");
  return *field_;
}

Elem Elem::inv() const { return Elem(field(), field().inv(value_)); }
Elem Elem::pow(std::uint64_t e) const { return Elem(field(), field().pow(value_, e)); }
Elem Elem::frobenius(std::uint32_t r) const { return Elem(field(), field().frobenius(value_, r)); }
std::vector<Coeff> Elem::coeffs() const { return field().coeffs(value_); }

std::string Elem::to_string() const {
  auto c = coeffs();
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  std::ostringstream os;
  if (field().characteristic() <= 10) {
    for (auto d : c) os << d;
  } else {
    os << '[';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ']';
  }
  return os.str();
}

Elem Elem::operator-() const { return Elem(field(), field().neg(value_)); }
Elem& Elem::operator+=(const Elem& o) {
  value_ = checked(o).add(value_, o.value_);
  return *this;
}
Elem& Elem::operator-=(const Elem& o) {
  value_ = checked(o).sub(value_, o.value_);
  return *this;
}
Elem& Elem::operator*=(const Elem& o) {
  value_ = checked(o).mul(value_, o.value_);
  return *this;
}
Elem& Elem::operator/=(const Elem& o) {
  const Field& f = checked(o);
  value_ = f.mul(value_, f.inv(o.value_));
  return *this;
}

Elem parse_elem(const Field& f, const std::string& digits) {
  if (digits.empty()) throw FieldError("empty element literal");
  if (digits.size() > f.degree()) throw FieldError("element literal '" + digits + "' longer than extension degree");
  std::vector<Coeff> c;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw FieldError("element literal '" + digits + "' is not a digit string");
    const Coeff d = static_cast<Coeff>(ch - '0');
    if (d >= f.characteristic()) throw FieldError("digit out of range in '" + digits + "'");
    c.push_back(d);
  }
  return f(f.from_coeffs(c));
}

// ---- embeddings -----------------------------------------------------------

const FieldEmbedding& FieldEmbedding::get(const Field& small, const Field& big) {
  static std::mutex mu;
  static std::map<std::pair<const Field*, const Field*>, std::unique_ptr<FieldEmbedding>> registry;
  if (small.characteristic() != big.characteristic())
    throw FieldError("embedding between fields of different characteristic");
  if (big.degree() % small.degree() != 0)
    throw FieldError(small.describe() + " is not a subfield of " + big.describe());
  std::lock_guard lock(mu);
  auto& slot = registry[{&small, &big}];
  if (!slot) slot.reset(new FieldEmbedding(small, big));
  return *slot;
}

FieldEmbedding::FieldEmbedding(const Field& small, const Field& big) : small_(&small), big_(&big) {
  if (&small == &big) {
    root_ = small.degree() == 1 ? 0 : small.characteristic();
  } else {
    // Subfield of order |small| inside big: zero plus powers of z.
    const std::uint64_t big_order = big.size() - 1;
    const std::uint64_t small_order = small.size() - 1;
    const Field::Value z = big.pow(big.primitive(), big_order / small_order);
    const auto& mod = small.modulus();
    std::vector<Field::Value> mod_big;
    for (auto c : mod) mod_big.push_back(big.from_int(c));
    auto eval = [&](Field::Value x) {
      Field::Value acc = 0;
      for (std::size_t i = mod_big.size(); i-- > 0;) acc = big.add(big.mul(acc, x), mod_big[i]);
      return acc;
    };
    bool found = false;
    Field::Value best = 0;
    auto consider = [&](Field::Value x) {
      if (eval(x) == 0 && (!found || x < best)) {
        best = x;
        found = true;
      }
    };
    consider(0);
    Field::Value cur = 1;
    for (std::uint64_t i = 0; i < small_order; ++i) {
      consider(cur);
      cur = big.mul(cur, z);
    }
    if (!found) throw FieldError("no root of the subfield modulus found");
    root_ = best;
  }
  image_.resize(small.size());
  for (Field::Value v = 0; v < small.size(); ++v) {
    const auto c = small.coeffs(v);
    Field::Value acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = big.add(big.mul(acc, root_), big.from_int(c[i]));
    if (&small == &big) acc = v;
    image_[v] = acc;
    back_.emplace(acc, v);
  }
}

Elem FieldEmbedding::operator()(const Elem& a) const {
  if (&a.field() != small_) throw FieldError("embedding applied to element of the wrong field");
  return Elem(*big_, image_[a.value()]);
}

bool FieldEmbedding::in_image(const Elem& b) const {
  return &b.field() == big_ && back_.count(b.value()) > 0;
}

Elem FieldEmbedding::preimage(const Elem& b) const {
  if (&b.field() != big_) throw FieldError("preimage of element of the wrong field");
  auto it = back_.find(b.value());
  if (it == back_.end()) throw FieldError("element " + b.to_string() + " is not in the subfield " + small_->describe());
  return Elem(*small_, it->second);
}

// ---- x^q + x = c ----------------------------------------------------------

AdditiveSolver::AdditiveSolver(const Field& f, std::uint64_t q) : field_(&f), q_(q), n_(f.degree()) {
  const std::uint32_t p = f.characteristic();
  std::uint32_t e = 0;
  for (std::uint64_t t = q; t > 1; t /= p) {
    if (t % p != 0) throw FieldError("q = " + std::to_string(q) + " is not a power of the characteristic");
    ++e;
  }
  if (e == 0 || n_ % (2 * e) != 0)
    throw FieldError(f.describe() + " does not contain GF(q^2) for q = " + std::to_string(q));

  // Columns of A are the images of the basis vectors x^i.
  std::vector<std::vector<Coeff>> a(n_, std::vector<Coeff>(n_, 0));
  Field::Value basis = 1;
  for (std::uint32_t col = 0; col < n_; ++col) {
    const Field::Value img = f.add(f.pow(basis, q), basis);
    const auto c = f.coeffs(img);
    for (std::uint32_t row = 0; row < n_; ++row) a[row][col] = c[row];
    basis *= p;
  }
  std::vector<std::vector<Coeff>> t(n_, std::vector<Coeff>(n_, 0));
  for (std::uint32_t i = 0; i < n_; ++i) t[i][i] = 1;

  std::uint32_t rank = 0;
  std::vector<int> pivots;
  for (std::uint32_t col = 0; col < n_ && rank < n_; ++col) {
    std::uint32_t sel = rank;
    while (sel < n_ && a[sel][col] == 0) ++sel;
    if (sel == n_) continue;
    std::swap(a[sel], a[rank]);
    std::swap(t[sel], t[rank]);
    const std::uint64_t inv = inv_mod(a[rank][col], p);
    for (std::uint32_t k = 0; k < n_; ++k) {
      a[rank][k] = static_cast<Coeff>(a[rank][k] * inv % p);
      t[rank][k] = static_cast<Coeff>(t[rank][k] * inv % p);
    }
    for (std::uint32_t r = 0; r < n_; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const std::uint64_t factor = a[r][col];
      for (std::uint32_t k = 0; k < n_; ++k) {
        a[r][k] = static_cast<Coeff>((a[r][k] + (p - factor) * a[rank][k]) % p);
        t[r][k] = static_cast<Coeff>((t[r][k] + (p - factor) * t[rank][k]) % p);
      }
    }
    pivots.push_back(static_cast<int>(col));
    ++rank;
  }
  pivot_col_.assign(n_, -1);
  for (std::uint32_t r = 0; r < rank; ++r) pivot_col_[r] = pivots[r];
  std::vector<bool> is_pivot(n_, false);
  for (int c : pivots) is_pivot[c] = true;
  for (std::uint32_t free = 0; free < n_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coeff> v(n_, 0);
    v[free] = 1;
    for (std::uint32_t r = 0; r < rank; ++r) v[pivots[r]] = static_cast<Coeff>((p - a[r][free]) % p);
    kernel_.push_back(std::move(v));
  }
  reduced_ = std::move(a);
  transform_ = std::move(t);
}

std::vector<Elem> AdditiveSolver::solve(const Elem& c) const {
  const Field& f = *field_;
  if (&c.field() != field_) throw FieldError("field context mismatch");
  const std::uint32_t p = f.characteristic();
  const auto cv = f.coeffs(c.value());
  std::vector<Coeff> tc(n_, 0);
  for (std::uint32_t r = 0; r < n_; ++r) {
    std::uint64_t acc = 0;
    for (std::uint32_t k = 0; k < n_; ++k) acc += std::uint64_t{transform_[r][k]} * cv[k];
    tc[r] = static_cast<Coeff>(acc % p);
  }
  std::vector<Coeff> x(n_, 0);
  for (std::uint32_t r = 0; r < n_; ++r) {
    if (pivot_col_[r] < 0) {
      if (tc[r] != 0) return {};
    } else {
      x[pivot_col_[r]] = tc[r];
    }
  }
  std::vector<Elem> out;
  const std::size_t dim = kernel_.size();
  std::vector<Coeff> lambda(dim, 0);
  while (true) {
    std::vector<Coeff> v = x;
    for (std::size_t k = 0; k < dim; ++k)
      for (std::uint32_t i = 0; i < n_; ++i) v[i] = static_cast<Coeff>((v[i] + std::uint64_t{lambda[k]} * kernel_[k][i]) % p);
    out.push_back(f(f.from_coeffs(v)));
    std::size_t k = 0;
    while (k < dim && ++lambda[k] == p) lambda[k++] = 0;
    if (k == dim) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> solve_additive(const Elem& c, const Field& f, std::uint64_t q) {
  return AdditiveSolver(f, q).solve(c);
}

bool in_subfield(const Elem& x, std::uint64_t subfield_size) { return x.pow(subfield_size) == x; }

bool hermitian_pair_check(const Elem& a, const Elem& b, std::uint64_t q) {
  if (&a.field() != &b.field()) throw FieldError("field context mismatch");
  if (!in_subfield(a, q * q) || !in_subfield(b, q * q)) throw FieldError("hermitian pair outside GF(q^2)");
  return b.pow(q) + b == a.pow(q + 1);
}

}  // namespace gpk
