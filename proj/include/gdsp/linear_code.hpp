#pragma once

// Explicit linear storage codes. Vertex u stores G_u * x where x stacks the
// F symbols of every file (file c occupies columns (c-1)F .. cF-1). Entropy
// of a set of stored functions, in q-ary symbols, is the rank of the stacked
// encoding matrices.

#include "gdsp/covering_lp.hpp"
#include "gdsp/gf.hpp"

#include <set>
#include <vector>

namespace gdsp {

class LinearCode {
 public:
  LinearCode(FileSpec spec, std::vector<Matrix> rows) : spec_(spec), field_(spec.field_order), rows_(std::move(rows)) {
    spec_.validate();
    const std::size_t cols = spec_.columns();
    for (std::size_t u = 0; u < rows_.size(); ++u)
      for (const auto& r : rows_[u]) {
        if (r.size() != cols)
          throw Error("vertex " + std::to_string(u + 1) + " has a row of length " + std::to_string(r.size()) +
                      ", expected " + std::to_string(cols));
        for (Element x : r)
          if (x >= field_.order())
            throw Error("vertex " + std::to_string(u + 1) + " has coefficient " + std::to_string(x) +
                        " outside [0, " + std::to_string(field_.order()) + ")");
      }
  }

  static LinearCode empty(FileSpec spec, int num_vertices) { return LinearCode(spec, std::vector<Matrix>(num_vertices)); }

  const FileSpec& spec() const { return spec_; }
  const PrimeField& field() const { return field_; }
  int num_vertices() const { return static_cast<int>(rows_.size()); }
  const Matrix& rows(Vertex u) const { return rows_.at(u - 1); }
  const std::vector<Matrix>& all_rows() const { return rows_; }

  std::size_t column(Color file, int symbol) const {
    return static_cast<std::size_t>(file - 1) * spec_.symbols_per_file + symbol;
  }

  // Stored size m_u / F in files (rows as written, redundant or not).
  Rational storage(Vertex u) const { return make_rational(static_cast<std::int64_t>(rows(u).size()), spec_.symbols_per_file); }
  Rational total_storage() const {
    Rational t = 0;
    for (Vertex u = 1; u <= num_vertices(); ++u) t += storage(u);
    return t;
  }

  Matrix stacked(const std::vector<Vertex>& vertices) const {
    Matrix m;
    for (Vertex v : vertices) {
      if (v < 1 || v > num_vertices()) throw Error("vertex " + std::to_string(v) + " out of range for code");
      const auto& r = rows(v);
      m.insert(m.end(), r.begin(), r.end());
    }
    return m;
  }

  Matrix file_units(Color file) const {
    check_file(file);
    Matrix m;
    for (int s = 0; s < spec_.symbols_per_file; ++s) m.push_back(unit_row(spec_.columns(), column(file, s)));
    return m;
  }

  void check_file(Color file) const {
    if (file < 1 || file > spec_.num_files) throw Error("file " + std::to_string(file) + " out of range for code");
  }

  friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.spec_ == b.spec_ && a.rows_ == b.rows_; }

 private:
  FileSpec spec_;
  PrimeField field_;
  std::vector<Matrix> rows_;
};

inline Rational entropy(const LinearCode& code, const std::vector<Vertex>& vertices) {
  return make_rational(rank_of(code.field(), code.stacked(vertices)), code.spec().symbols_per_file);
}

inline Matrix zero_file_columns(const LinearCode& code, Matrix m, const std::set<Color>& files) {
  for (Color c : files) {
    code.check_file(c);
    for (auto& r : m)
      for (int s = 0; s < code.spec().symbols_per_file; ++s) r[code.column(c, s)] = 0;
  }
  return m;
}

// For a linear code H(h_S | A_given = a) does not depend on a, and equals
// the rank with the given files' columns zeroed.
inline Rational conditional_entropy(const LinearCode& code, const std::vector<Vertex>& vertices,
                                    const std::set<Color>& given_files) {
  Matrix m = zero_file_columns(code, code.stacked(vertices), given_files);
  return make_rational(rank_of(code.field(), std::move(m)), code.spec().symbols_per_file);
}

inline Rational mutual_information_with_file(const LinearCode& code, Vertex vertex, Color file) {
  return entropy(code, {vertex}) - conditional_entropy(code, {vertex}, {file});
}

inline bool can_decode(const LinearCode& code, const std::vector<Vertex>& vertices, Color file) {
  return spans(code.field(), code.stacked(vertices), code.file_units(file));
}

struct CodeVerdict {
  bool valid = true;
  std::vector<ColoredEdge> failures;
  std::vector<Rational> storage;  // m_u / F per vertex
  Rational total;
};

inline CodeVerdict verify_valid(const LinearCode& code, const ColoredGraph& g) {
  if (code.num_vertices() != g.num_vertices())
    throw Error("code has " + std::to_string(code.num_vertices()) + " vertices, instance has " +
                std::to_string(g.num_vertices()));
  CodeVerdict v;
  for (const auto& e : g.edges()) {
    if (e.color < 1 || e.color > code.spec().num_files)
      throw Error("edge color " + std::to_string(e.color) + " exceeds the code's file count");
    if (!can_decode(code, {e.a, e.b}, e.color)) {
      v.valid = false;
      v.failures.push_back(e);
    }
  }
  for (Vertex u = 1; u <= code.num_vertices(); ++u) v.storage.push_back(code.storage(u));
  v.total = code.total_storage();
  return v;
}

struct HyperVerdict {
  bool valid = true;
  std::vector<std::vector<Vertex>> failures;
  std::vector<Rational> storage;
  Rational total;
};

inline HyperVerdict hyperedge_verify(const LinearCode& code, const HyperGraph& h) {
  if (code.spec().num_files != 1) throw Error("hyperedge_verify requires a single-file code");
  if (code.num_vertices() != h.num_vertices())
    throw Error("code has " + std::to_string(code.num_vertices()) + " vertices, instance has " +
                std::to_string(h.num_vertices()));
  HyperVerdict v;
  for (const auto& s : h.hyperedges())
    if (!can_decode(code, s, 1)) {
      v.valid = false;
      v.failures.push_back(s);
    }
  for (Vertex u = 1; u <= code.num_vertices(); ++u) v.storage.push_back(code.storage(u));
  v.total = code.total_storage();
  return v;
}

// Vertex u stores m_u * F consecutive Vandermonde rows (1, x, ..., x^{F-1})
// at evaluation points 1, 2, 3, ... in vertex order. Any F of these rows are
// independent, so every hyperedge holding at least F rows decodes.
inline LinearCode build_mds_single_file(const HyperGraph& h, const MemoryAllocation& m, const FileSpec& spec) {
  if (spec.num_files != 1) throw Error("build_mds_single_file requires num_files = 1");
  if (m.size() != h.num_vertices()) throw Error("allocation length does not match the hyper-graph");
  if (!check_feasible(h, m)) throw Error("allocation is infeasible for the hyper-graph");
  const int f = spec.symbols_per_file;
  std::vector<long long> counts;
  long long total = 0;
  for (Vertex u = 1; u <= h.num_vertices(); ++u) {
    Rational rows = m[u] * f;
    if (denominator_of(rows) != 1)
      throw Error("vertex " + std::to_string(u) + " would store " + to_string(rows) + " symbols; choose F so that every m_u*F is an integer");
    counts.push_back(numerator_of(rows).convert_to<long long>());
    total += counts.back();
  }
  if (total >= spec.field_order)
    throw Error("field too small: " + std::to_string(total) + " evaluation points need q > " + std::to_string(total));
  PrimeField field(spec.field_order);
  std::vector<Matrix> rows(h.num_vertices());
  Element point = 1;
  for (Vertex u = 1; u <= h.num_vertices(); ++u)
    for (long long i = 0; i < counts[u - 1]; ++i, ++point) {
      Row r(f);
      Element x = 1;
      for (int k = 0; k < f; ++k) {
        r[k] = x;
        x = field.mul(x, point);
      }
      rows[u - 1].push_back(std::move(r));
    }
  return LinearCode(spec, std::move(rows));
}

// Places a single-file code into the columns of `file` within an N-file spec.
inline LinearCode lift_to_file(const LinearCode& single, const FileSpec& target, Color file) {
  if (single.spec().num_files != 1) throw Error("lift_to_file expects a single-file code");
  if (single.spec().symbols_per_file != target.symbols_per_file || single.spec().field_order != target.field_order)
    throw Error("lift_to_file: F or q mismatch");
  LinearCode probe = LinearCode::empty(target, 0);
  probe.check_file(file);
  std::vector<Matrix> rows(single.num_vertices());
  for (Vertex u = 1; u <= single.num_vertices(); ++u)
    for (const auto& r : single.rows(u)) {
      Row out(target.columns(), 0);
      for (int s = 0; s < target.symbols_per_file; ++s) out[probe.column(file, s)] = r[s];
      rows[u - 1].push_back(std::move(out));
    }
  return LinearCode(target, std::move(rows));
}

// Per vertex, concatenate the encoding matrices. Inputs with fewer vertices
// contribute nothing to the missing ones.
inline LinearCode superpose_codes(const std::vector<LinearCode>& codes) {
  if (codes.empty()) throw Error("superpose_codes needs at least one code");
  const FileSpec spec = codes.front().spec();
  int k = 0;
  for (const auto& c : codes) {
    if (!(c.spec() == spec)) throw Error("superpose_codes: file spec mismatch");
    k = std::max(k, c.num_vertices());
  }
  std::vector<Matrix> rows(k);
  for (const auto& c : codes)
    for (Vertex u = 1; u <= c.num_vertices(); ++u) {
      const auto& r = c.rows(u);
      rows[u - 1].insert(rows[u - 1].end(), r.begin(), r.end());
    }
  return LinearCode(spec, std::move(rows));
}

// Substitutes A_c = 0 for every c in zeroed_files and re-encodes each vertex
// to a basis of what remains.
inline LinearCode restrict_code(const LinearCode& code, const std::set<Color>& zeroed_files) {
  std::vector<Matrix> rows(code.num_vertices());
  for (Vertex u = 1; u <= code.num_vertices(); ++u)
    rows[u - 1] = row_basis(code.field(), zero_file_columns(code, code.rows(u), zeroed_files));
  return LinearCode(code.spec(), std::move(rows));
}

// Keeps only the listed vertices' storage; every other vertex stores nothing.
inline LinearCode keep_vertices(const LinearCode& code, const std::set<Vertex>& keep) {
  std::vector<Matrix> rows(code.num_vertices());
  for (Vertex u = 1; u <= code.num_vertices(); ++u)
    if (keep.count(u)) rows[u - 1] = code.rows(u);
  return LinearCode(code.spec(), std::move(rows));
}

}  // namespace gdsp
