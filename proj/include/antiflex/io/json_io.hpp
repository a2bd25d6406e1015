#pragma once

// JSON encodings of the exact-rational types. Scalars are strings "p/q" (or "p"),
// indices are 0-based, matrices are row-major grids.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "antiflex/antiflex.hpp"

namespace antiflex::io {

using json = nlohmann::json;
using Q = Rational;

json to_json(const Q& q);
Q rational_from_json(const json& j);

/// rows/cols < 0 means "take the shape from the grid".
json matrix_to_json(const Matrix<Q>& m);
Matrix<Q> matrix_from_json(const json& j, Index rows = -1, Index cols = -1);
json vector_to_json(const Vector<Q>& v);
json tensor3_to_json(const Tensor3<Q>& t);
json residual_to_json(const Residual<Q>& r);

/// table[i][j] = [[k, "p/q"], ...], nonzero entries only.
json table_to_json(const Tensor3<Q>& c);
Tensor3<Q> table_from_json(const json& j, Index n);

json algebra_to_json(const Algebra<Q>& a);
Algebra<Q> algebra_from_json(const json& j);

json form_to_json(const BilinearForm<Q>& b);
BilinearForm<Q> form_from_json(const json& j);

/// Sub-documents may be inline objects or paths (resolved against base_dir).
json resolve(const json& j, const std::filesystem::path& base_dir);

json bimodule_to_json(const Bimodule<Q>& bm);
json bimodule_to_json(const Bimodule<Q>& bm, const std::string& algebra_path);
Bimodule<Q> bimodule_from_json(const json& j, const std::filesystem::path& base_dir = {});

json matched_pair_to_json(const MatchedPairSpec<Q>& mp);
MatchedPairSpec<Q> matched_pair_from_json(const json& j, const std::filesystem::path& base_dir = {});

json manin_triple_to_json(const ManinTripleSpec<Q>& mt);
ManinTripleSpec<Q> manin_triple_from_json(const json& j, const std::filesystem::path& base_dir = {});

json comultiplication_to_json(const Comultiplication<Q>& d);
Comultiplication<Q> comultiplication_from_json(const json& j);

/// An r-tensor is a bare n×n grid.
json rtensor_to_json(const Tensor2<Q>& r);
Tensor2<Q> rtensor_from_json(const json& j);

json pre_algebra_to_json(const PreAlgebra<Q>& p);
PreAlgebra<Q> pre_algebra_from_json(const json& j);

json linear_op_to_json(const Matrix<Q>& t);
Matrix<Q> linear_op_from_json(const json& j);

/// Throws InputError if the file is missing or is not JSON.
json read_file(const std::filesystem::path& path);
/// Writes through a temporary file and renames, so a failed write leaves nothing behind.
void write_file(const std::filesystem::path& path, const json& j);

Algebra<Q> load_algebra(const std::filesystem::path& path);

}  // namespace antiflex::io
