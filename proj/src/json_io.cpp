#include "antiflex/io/json_io.hpp"

#include <fstream>
#include <sstream>

namespace antiflex::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw InputError(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with field '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

Index as_index(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    fail(std::string(what) + " must be a non-negative integer");
  return static_cast<Index>(j.get<long long>());
}

void expect_array(const json& j, std::size_t size, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  if (j.size() != size)
    fail(std::string(what) + " has length " + std::to_string(j.size()) + ", expected " +
         std::to_string(size));
}

std::vector<Matrix<Q>> matrices_from_json(const json& j, Index count, Index size, const char* what) {
  expect_array(j, static_cast<std::size_t>(count), what);
  std::vector<Matrix<Q>> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m, size, size));
  return out;
}

json matrices_to_json(const std::vector<Matrix<Q>>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(matrix_to_json(m));
  return out;
}

std::vector<Index> indices_from_json(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array of indices");
  std::vector<Index> out;
  for (const auto& e : j) out.push_back(as_index(e, what));
  return out;
}

}  // namespace

json to_json(const Q& q) { return to_string(q); }

Q rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Q(j.get<long long>());
  fail("scalar must be a \"p/q\" string or an integer, got " + j.dump());
}

json matrix_to_json(const Matrix<Q>& m) {
  json out = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix<Q> matrix_from_json(const json& j, Index rows, Index cols) {
  if (!j.is_array()) fail("matrix must be an array of rows");
  if (rows < 0) rows = static_cast<Index>(j.size());
  expect_array(j, static_cast<std::size_t>(rows), "matrix");
  if (cols < 0) cols = rows == 0 ? 0 : static_cast<Index>(j[0].is_array() ? j[0].size() : 0);
  Matrix<Q> m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    expect_array(row, static_cast<std::size_t>(cols), "matrix row");
    for (Index c = 0; c < cols; ++c) m(i, c) = rational_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

json vector_to_json(const Vector<Q>& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

json tensor3_to_json(const Tensor3<Q>& t) {
  json out = json::array();
  for (Index i = 0; i < t.dim(0); ++i) {
    json slab = json::array();
    for (Index j = 0; j < t.dim(1); ++j) {
      json row = json::array();
      for (Index k = 0; k < t.dim(2); ++k) row.push_back(to_json(t(i, j, k)));
      slab.push_back(std::move(row));
    }
    out.push_back(std::move(slab));
  }
  return out;
}

json residual_to_json(const Residual<Q>& r) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Vector<Q>>) {
          return vector_to_json(v);
        } else if constexpr (std::is_same_v<T, Matrix<Q>>) {
          return matrix_to_json(v);
        } else {
          return tensor3_to_json(v);
        }
      },
      r);
}

json table_to_json(const Tensor3<Q>& c) {
  json out = json::array();
  for (Index i = 0; i < c.dim(0); ++i) {
    json row = json::array();
    for (Index j = 0; j < c.dim(1); ++j) {
      json cell = json::array();
      for (Index k = 0; k < c.dim(2); ++k)
        if (c(i, j, k) != Q(0)) cell.push_back(json::array({k, to_json(c(i, j, k))}));
      row.push_back(std::move(cell));
    }
    out.push_back(std::move(row));
  }
  return out;
}

Tensor3<Q> table_from_json(const json& j, Index n) {
  Tensor3<Q> c(n, n, n);
  expect_array(j, static_cast<std::size_t>(n), "table");
  for (Index i = 0; i < n; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    expect_array(row, static_cast<std::size_t>(n), "table row");
    for (Index jj = 0; jj < n; ++jj) {
      const json& cell = row[static_cast<std::size_t>(jj)];
      if (!cell.is_array()) fail("table cell must be a list of [k, \"p/q\"] entries");
      for (const json& entry : cell) {
        expect_array(entry, 2, "table entry");
        const Index k = as_index(entry[0], "table entry index");
        if (k >= n) fail("table entry index out of range");
        c(i, jj, k) += rational_from_json(entry[1]);
      }
    }
  }
  return c;
}

json algebra_to_json(const Algebra<Q>& a) {
  json out{{"dim", a.dim()}, {"table", table_to_json(a.constants())}};
  if (!a.name().empty()) out["name"] = a.name();
  if (!a.basis_names().empty()) out["basis"] = a.basis_names();
  return out;
}

Algebra<Q> algebra_from_json(const json& j) {
  const Index n = as_index(field(j, "dim"), "dim");
  Algebra<Q> a(table_from_json(field(j, "table"), n));
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail("name must be a string");
    a.set_name(j["name"].get<std::string>());
  }
  if (j.contains("basis")) {
    const json& b = j["basis"];
    if (!b.is_array()) fail("basis must be an array of strings");
    std::vector<std::string> names;
    for (const auto& s : b) {
      if (!s.is_string()) fail("basis must be an array of strings");
      names.push_back(s.get<std::string>());
    }
    a.set_basis_names(std::move(names));
  }
  return a;
}

json form_to_json(const BilinearForm<Q>& b) {
  json entries = json::array();
  for (Index i = 0; i < b.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j)
      if (b(i, j) != Q(0)) entries.push_back(json::array({i, j, to_json(b(i, j))}));
  return {{"dim", b.dim()}, {"entries", entries}};
}

BilinearForm<Q> form_from_json(const json& j) {
  const Index n = as_index(field(j, "dim"), "dim");
  Matrix<Q> m = Matrix<Q>::Zero(n, n);
  const json& entries = field(j, "entries");
  if (!entries.is_array()) fail("entries must be an array");
  for (const json& e : entries) {
    expect_array(e, 3, "form entry");
    const Index a = as_index(e[0], "form index"), b = as_index(e[1], "form index");
    if (a >= n || b >= n) fail("form index out of range");
    m(a, b) += rational_from_json(e[2]);
  }
  return BilinearForm<Q>(std::move(m));
}

json resolve(const json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) return read_file(base_dir / j.get<std::string>());
  if (!j.is_object()) fail("expected an inline object or a file path");
  return j;
}

json bimodule_to_json(const Bimodule<Q>& bm) {
  return {{"algebra", algebra_to_json(bm.base())},
          {"mdim", bm.mdim()},
          {"l", matrices_to_json(bm.left_maps())},
          {"r", matrices_to_json(bm.right_maps())}};
}

json bimodule_to_json(const Bimodule<Q>& bm, const std::string& algebra_path) {
  json out = bimodule_to_json(bm);
  out["algebra"] = algebra_path;
  return out;
}

Bimodule<Q> bimodule_from_json(const json& j, const std::filesystem::path& base_dir) {
  Algebra<Q> a = algebra_from_json(resolve(field(j, "algebra"), base_dir));
  const Index m = as_index(field(j, "mdim"), "mdim");
  auto l = matrices_from_json(field(j, "l"), a.dim(), m, "l");
  auto r = matrices_from_json(field(j, "r"), a.dim(), m, "r");
  return Bimodule<Q>(std::move(a), m, std::move(l), std::move(r));
}

json matched_pair_to_json(const MatchedPairSpec<Q>& mp) {
  return {{"A", algebra_to_json(mp.a)},        {"B", algebra_to_json(mp.b)},
          {"lA", matrices_to_json(mp.l_a)},    {"rA", matrices_to_json(mp.r_a)},
          {"lB", matrices_to_json(mp.l_b)},    {"rB", matrices_to_json(mp.r_b)}};
}

MatchedPairSpec<Q> matched_pair_from_json(const json& j, const std::filesystem::path& base_dir) {
  MatchedPairSpec<Q> mp{algebra_from_json(resolve(field(j, "A"), base_dir)),
                        algebra_from_json(resolve(field(j, "B"), base_dir)), {}, {}, {}, {}};
  mp.l_a = matrices_from_json(field(j, "lA"), mp.a.dim(), mp.b.dim(), "lA");
  mp.r_a = matrices_from_json(field(j, "rA"), mp.a.dim(), mp.b.dim(), "rA");
  mp.l_b = matrices_from_json(field(j, "lB"), mp.b.dim(), mp.a.dim(), "lB");
  mp.r_b = matrices_from_json(field(j, "rB"), mp.b.dim(), mp.a.dim(), "rB");
  return mp;
}

json manin_triple_to_json(const ManinTripleSpec<Q>& mt) {
  return {{"algebra", algebra_to_json(mt.big)},
          {"plus", mt.plus},
          {"minus", mt.minus},
          {"form", form_to_json(mt.form)}};
}

ManinTripleSpec<Q> manin_triple_from_json(const json& j, const std::filesystem::path& base_dir) {
  ManinTripleSpec<Q> mt{algebra_from_json(resolve(field(j, "algebra"), base_dir)),
                        indices_from_json(field(j, "plus"), "plus"),
                        indices_from_json(field(j, "minus"), "minus"),
                        form_from_json(resolve(field(j, "form"), base_dir))};
  mt.validate();
  return mt;
}

json comultiplication_to_json(const Comultiplication<Q>& d) {
  return {{"dim", d.dim()}, {"delta", matrices_to_json(d.values())}};
}

Comultiplication<Q> comultiplication_from_json(const json& j) {
  const Index n = as_index(field(j, "dim"), "dim");
  return Comultiplication<Q>(matrices_from_json(field(j, "delta"), n, n, "delta"));
}

json rtensor_to_json(const Tensor2<Q>& r) { return matrix_to_json(r); }

Tensor2<Q> rtensor_from_json(const json& j) {
  Tensor2<Q> r = matrix_from_json(j);
  if (r.rows() != r.cols()) fail("r-tensor must be a square grid");
  return r;
}

json pre_algebra_to_json(const PreAlgebra<Q>& p) {
  return {{"dim", p.dim()}, {"prec", table_to_json(p.prec)}, {"succ", table_to_json(p.succ)}};
}

PreAlgebra<Q> pre_algebra_from_json(const json& j) {
  const Index n = as_index(field(j, "dim"), "dim");
  return PreAlgebra<Q>(table_from_json(field(j, "prec"), n), table_from_json(field(j, "succ"), n));
}

json linear_op_to_json(const Matrix<Q>& t) {
  return {{"rows", t.rows()}, {"cols", t.cols()}, {"entries", matrix_to_json(t)}};
}

Matrix<Q> linear_op_from_json(const json& j) {
  const Index rows = as_index(field(j, "rows"), "rows");
  const Index cols = as_index(field(j, "cols"), "cols");
  const json& e = field(j, "entries");
  if (rows == 0 || cols == 0) {
    if (!e.is_array()) fail("entries must be an array");
    return Matrix<Q>(rows, cols);
  }
  return matrix_from_json(e, rows, cols);
}

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    fail(path.string() + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const json& j) {
  std::filesystem::path tmp = path;
  tmp += ".partial";
  {
    std::ofstream out(tmp);
    if (!out) fail("cannot write " + path.string());
    out << j.dump(2) << '\n';
    if (!out) fail("cannot write " + path.string());
  }
  std::filesystem::rename(tmp, path);
}

Algebra<Q> load_algebra(const std::filesystem::path& path) { return algebra_from_json(read_file(path)); }

}  // namespace antiflex::io
