#include "spancol/gf.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "spancol/error.hpp"

namespace spancol {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Monic irreducible moduli, low-order coefficient first, leading 1 omitted.
std::vector<int> modulus_for(int p, int e) {
  if (p == 2 && e == 2) return {1, 1};        // x^2 + x + 1
  if (p == 2 && e == 3) return {1, 1, 0};     // x^3 + x + 1
  if (p == 3 && e == 2) return {1, 0};        // x^2 + 1
  if (p == 2 && e == 4) return {1, 1, 0, 0};  // x^4 + x + 1
  return {};
}

std::vector<int> digits(int value, int p, int e) {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

int from_digits(const std::vector<int>& d, int p) {
  int value = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) value = value * p + d[i];
  return value;
}

}  // namespace

Field::Field(int p, int e) : p_(p), e_(e), q_(1) {
  for (int i = 0; i < e; ++i) q_ *= p;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.resize(q_, 0);
  const auto modulus = modulus_for(p, e);
  for (int a = 0; a < q_; ++a) {
    const auto da = digits(a, p, e);
    for (int b = 0; b < q_; ++b) {
      const auto db = digits(b, p, e);
      std::vector<int> s(e);
      for (int i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p;
      add_[a * q_ + b] = static_cast<Elem>(from_digits(s, p));

      std::vector<int> prod(2 * e - 1, 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      // Reduce with x^e = -(modulus lower terms).
      for (int k = 2 * e - 2; k >= e; --k) {
        const int c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (int i = 0; i < e; ++i)
          prod[k - e + i] = ((prod[k - e + i] - c * modulus[i]) % p + p) % p;
      }
      prod.resize(e);
      mul_[a * q_ + b] = static_cast<Elem>(from_digits(prod, p));
    }
  }
  for (int a = 0; a < q_; ++a) {
    for (int b = 0; b < q_; ++b) {
      if (add_[a * q_ + b] == 0) neg_[a] = static_cast<Elem>(b);
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Elem>(b);
    }
  }
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

const Field& make_field(int p, int e) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (e < 1) throw Error(ErrorKind::OrderTooLarge, "extension degree must be positive");
  long long q = 1;
  for (int i = 0; i < e && q <= 16; ++i) q *= p;
  if (q > 16) throw Error(ErrorKind::OrderTooLarge, "field order exceeds 16");

  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<Field>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, e}];
  if (!slot) slot.reset(new Field(p, e));
  return *slot;
}

const Field& field_of_order(int q) {
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(p) || q % p != 0) continue;
    int e = 0;
    int r = q;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    if (r != 1) break;
    return make_field(p, e);
  }
  throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
}

bool FVector::is_zero() const noexcept {
  return std::all_of(coords.begin(), coords.end(), [](Elem c) { return c == 0; });
}

FVector unit_vector(const Field& field, int n, int index) {
  FVector v{&field, std::vector<Elem>(n, 0)};
  v.coords.at(index) = 1;
  return v;
}

std::vector<int> row_reduce(const Field& f, std::vector<std::vector<Elem>>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int cols = static_cast<int>(rows.front().size());
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int sel = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    const Elem scale = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, scale);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Elem factor = rows[i][c];
      for (int j = c; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

Subspace Subspace::zero(const Field& field, int ambient_dim) {
  return span_rows(field, ambient_dim, {});
}

Subspace Subspace::full(const Field& field, int ambient_dim) {
  std::vector<std::vector<Elem>> rows;
  for (int i = 0; i < ambient_dim; ++i) rows.push_back(unit_vector(field, ambient_dim, i).coords);
  return span_rows(field, ambient_dim, std::move(rows));
}

Subspace span_rows(const Field& field, int ambient_dim, std::vector<std::vector<Elem>> rows) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != ambient_dim)
      throw Error(ErrorKind::MixedAmbient, "vector length differs from ambient dimension");
  row_reduce(field, rows);
  Subspace s;
  s.field_ = &field;
  s.ambient_ = ambient_dim;
  s.rows_ = std::move(rows);
  return s;
}

Subspace span(const Field& field, int ambient_dim, std::span<const FVector> vectors) {
  std::vector<std::vector<Elem>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.field != &field) throw Error(ErrorKind::MixedAmbient, "vectors over different fields");
    rows.push_back(v.coords);
  }
  return span_rows(field, ambient_dim, std::move(rows));
}

Subspace span(std::span<const FVector> vectors) {
  if (vectors.empty())
    throw Error(ErrorKind::MixedAmbient, "span of no vectors needs an explicit ambient space");
  return span(*vectors.front().field, vectors.front().dim(), vectors);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (&a.field() != &b.field() || a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::MixedAmbient, "subspaces live in different spaces");
  auto rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return span_rows(a.field(), a.ambient_dim(), std::move(rows));
}

bool Subspace::contains(std::span<const Elem> v) const {
  std::vector<Elem> w(v.begin(), v.end());
  const Field& f = *field_;
  // Eliminate against the RREF: the pivot of row i is its first nonzero entry.
  for (const auto& r : rows_) {
    const auto pivot = static_cast<int>(std::find_if(r.begin(), r.end(), [](Elem c) { return c; }) -
                                        r.begin());
    const Elem factor = w[pivot];
    if (factor == 0) continue;
    for (int j = pivot; j < ambient_; ++j) w[j] = f.sub(w[j], f.mul(factor, r[j]));
  }
  return std::all_of(w.begin(), w.end(), [](Elem c) { return c == 0; });
}

bool subspace_leq(const Subspace& a, const Subspace& b) {
  if (&a.field() != &b.field() || a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::MixedAmbient, "subspaces live in different spaces");
  if (a.dim() > b.dim()) return false;
  return std::all_of(a.rows().begin(), a.rows().end(),
                     [&](const auto& r) { return b.contains(r); });
}

long long checked_space_size(const Field& field, int n, long long cap) {
  long long size = 1;
  for (int i = 0; i < n; ++i) {
    size *= field.q();
    if (size > cap)
      throw Error(ErrorKind::CapExceeded, field.name() + "^" + std::to_string(n) +
                                              " exceeds the enumeration cap");
  }
  return size;
}

std::vector<Subspace> enumerate_subspaces(const Field& field, int n, int l, long long cap) {
  if (l < 0 || l > n) throw Error(ErrorKind::DimensionMismatch, "subspace dimension out of range");
  checked_space_size(field, n, cap);
  const int q = field.q();
  std::vector<Subspace> out;

  // Walk pivot sets in increasing lexicographic order; for each, fill the
  // free entries (right of the row's pivot, outside pivot columns).
  std::vector<int> pivots(l);
  for (int i = 0; i < l; ++i) pivots[i] = i;
  while (true) {
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < l; ++i)
      for (int c = pivots[i] + 1; c < n; ++c)
        if (!std::binary_search(pivots.begin(), pivots.end(), c)) free.emplace_back(i, c);
    std::vector<int> counter(free.size(), 0);
    while (true) {
      std::vector<std::vector<Elem>> rows(l, std::vector<Elem>(n, 0));
      for (int i = 0; i < l; ++i) rows[i][pivots[i]] = 1;
      for (std::size_t k = 0; k < free.size(); ++k)
        rows[free[k].first][free[k].second] = static_cast<Elem>(counter[k]);
      out.push_back(span_rows(field, n, std::move(rows)));
      std::size_t k = 0;
      while (k < counter.size() && ++counter[k] == q) counter[k++] = 0;
      if (k == counter.size()) break;
    }
    int i = l - 1;
    while (i >= 0 && pivots[i] == n - l + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < l; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long gaussian_binomial(long long q, int n, int l) {
  if (l < 0 || l > n) return 0;
  long long num = 1, den = 1;
  for (int i = 0; i < l; ++i) {
    long long a = 1, b = 1;
    for (int k = 0; k < n - i; ++k) a *= q;
    for (int k = 0; k < l - i; ++k) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

std::vector<FVector> enumerate_vectors(const Field& field, int n, long long cap) {
  const long long total = checked_space_size(field, n, cap);
  std::vector<FVector> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<Elem> cur(n, 0);
  for (long long idx = 0; idx < total; ++idx) {
    out.push_back({&field, cur});
    for (int j = n - 1; j >= 0; --j) {
      if (++cur[j] < field.q()) break;
      cur[j] = 0;
    }
  }
  return out;
}

long long vector_index(const FVector& v) {
  long long idx = 0;
  for (Elem c : v.coords) idx = idx * v.field->q() + c;
  return idx;
}

std::string to_string(const FVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.coords.size(); ++i) os << (i ? "," : "") << int(v.coords[i]);
  os << ')';
  return os.str();
}

std::string Subspace::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < rows_.size(); ++i) os << (i ? "," : "") << spancol::to_string(row(i));
  os << ">";
  return os.str();
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::MixedAmbient: return "MixedAmbient";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::MalformedColouring: return "MalformedColouring";
    case ErrorKind::InvalidColouring: return "InvalidColouring";
    case ErrorKind::NoExtension: return "NoExtension";
    case ErrorKind::NameClash: return "NameClash";
    case ErrorKind::BadDegrees: return "BadDegrees";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::NotASimplex: return "NotASimplex";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAnG: return "NotAnG";
    case ErrorKind::Sq4NotInPrincipalIdeal: return "Sq4NotInPrincipalIdeal";
    case ErrorKind::ExtractionInvalid: return "ExtractionInvalid";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::WrongShape: return "WrongShape";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace spancol
