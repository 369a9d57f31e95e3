#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "gctk/affine_matrix.hpp"
#include "gctk/kronecker.hpp"
#include "gctk/partition.hpp"
#include "gctk/powersum.hpp"
#include "gctk/sparse_poly.hpp"
#include "gctk/tomography.hpp"

namespace gctk {

using json = nlohmann::ordered_json;

// Partitions <-> JSON arrays of parts, e.g. [13,13,2,2,2,2,2].
json to_json(const Partition& p);
Partition partition_from_json(const json& j);

// Comma-separated CLI form, e.g. "13,13,2,2,2,2,2"; empty string -> empty partition.
Partition parse_partition(const std::string& text);

// Rationals as "p" or "p/q" in lowest terms.
std::string rational_to_string(const mpq_class& q);
mpq_class rational_from_string(const std::string& text);

// {"degree": N, "terms": [[partition, "p/q"], ...]}, terms in stored order.
json to_json(const PowerSumVector& v);
PowerSumVector powersum_from_json(const json& j);

// [[exponent-map, coefficient-string], ...] with exponent maps {"var": exp}.
json to_json(const SparsePoly& f);
SparsePoly poly_from_json(const json& j);

// {"size": n, "entries": [...]} with entries row-major in polynomial form.
json to_json(const AffineMatrix& a);
AffineMatrix affine_matrix_from_json(const json& j);

// [[x,y,z], ...] sorted.
json to_json(const Relation3D& r);
Relation3D relation_from_json(const json& j);

// {lambda, n, d, m, pleth, kron, shape_ok}.
json to_json(const ObstructionReport& r);

}  // namespace gctk
