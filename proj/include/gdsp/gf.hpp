#pragma once

// Dense linear algebra over a prime field GF(q).

#include "gdsp/model.hpp"

#include <cstdint>
#include <vector>

namespace gdsp {

using Element = std::uint32_t;
using Row = std::vector<Element>;
using Matrix = std::vector<Row>;

class PrimeField {
 public:
  static constexpr Element kMaxOrder = 1u << 13;

  explicit PrimeField(Element q) : q_(q) {
    if (!is_prime(q)) {
      if (is_prime_power(q)) throw Error("field order " + std::to_string(q) + " is a prime power; only prime fields are supported");
      throw Error("field order " + std::to_string(q) + " is not a prime");
    }
    if (q > kMaxOrder) throw Error("field order " + std::to_string(q) + " exceeds " + std::to_string(kMaxOrder));
    inverse_.assign(q, 0);
    for (Element a = 1; a < q; ++a) inverse_[a] = power(a, q - 2);
  }

  Element power(Element base, Element exp) const {
    Element result = 1 % q_;
    base %= q_;
    while (exp) {
      if (exp & 1u) result = mul(result, base);
      base = mul(base, base);
      exp >>= 1u;
    }
    return result;
  }

  Element order() const { return q_; }
  Element add(Element a, Element b) const { return (a + b) % q_; }
  Element sub(Element a, Element b) const { return (a + q_ - b) % q_; }
  Element mul(Element a, Element b) const { return (a * b) % q_; }
  Element neg(Element a) const { return a == 0 ? 0 : q_ - a; }
  Element inv(Element a) const {
    if (a == 0) throw Error("inverse of zero in GF(" + std::to_string(q_) + ")");
    return inverse_[a];
  }
  Element reduce(long long a) const {
    long long r = a % static_cast<long long>(q_);
    return static_cast<Element>(r < 0 ? r + q_ : r);
  }

  // Smallest generator of the multiplicative group.
  Element primitive_element() const {
    for (Element g = 1; g < q_; ++g) {
      Element x = 1;
      Element ord = 0;
      do {
        x = mul(x, g);
        ++ord;
      } while (x != 1);
      if (ord == q_ - 1) return g;
    }
    return 1;
  }

 private:
  Element q_;
  std::vector<Element> inverse_;
};

// In-place reduced row echelon form; returns the rank. Zero rows end up at
// the bottom and are erased.
inline int reduce_rows(const PrimeField& f, Matrix& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    const Element s = f.inv(m[rank][c]);
    for (auto& x : m[rank]) x = f.mul(x, s);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Element factor = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] = f.sub(m[r][k], f.mul(factor, m[rank][k]));
    }
    ++rank;
  }
  m.resize(rank);
  return static_cast<int>(rank);
}

inline int rank_of(const PrimeField& f, Matrix m) { return reduce_rows(f, m); }

inline Matrix row_basis(const PrimeField& f, Matrix m) {
  reduce_rows(f, m);
  return m;
}

inline Matrix stack(const Matrix& top, const Matrix& bottom) {
  Matrix out = top;
  out.insert(out.end(), bottom.begin(), bottom.end());
  return out;
}

// True iff every row of `rows` lies in the row space of `space`.
inline bool spans(const PrimeField& f, const Matrix& space, const Matrix& rows) {
  if (rows.empty()) return true;
  return rank_of(f, stack(space, rows)) == rank_of(f, space);
}

inline Row unit_row(std::size_t cols, std::size_t pos) {
  Row r(cols, 0);
  r.at(pos) = 1;
  return r;
}

}  // namespace gdsp
