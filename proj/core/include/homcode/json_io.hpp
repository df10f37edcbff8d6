#pragma once

#include <json.hpp>

#include "homcode/abelian.hpp"
#include "homcode/cell_complex.hpp"
#include "homcode/chain.hpp"
#include "homcode/error_analysis.hpp"
#include "homcode/obstruction.hpp"
#include "homcode/pauli.hpp"

namespace homcode {

// Serializers emit keys in the documented order (ordered_json), so
// serialize(parse(serialize(x))) is byte-identical.

// { "label": str, "dimension": int,
//   "cells": [ { "id": str, "dim": int,
//                "boundary": [ {"cell": str, "sign": int} ] } ] }
nlohmann::ordered_json complex_to_json(const CellComplex& c);
CellComplex complex_from_json(const nlohmann::json& j);

// Builder reference: either an inline complex object or a string such as
// "circle:5", "torus_grid:3,3", "sphere_cube", "projective_plane_min",
// "interval:4".
CellComplex complex_from_ref(const nlohmann::json& ref);

// { "degree": int, "coeffs": {cell-id: int} }
nlohmann::ordered_json chain_to_json(const ChainVector& v);
ChainVector chain_from_json(const nlohmann::json& j);

// { "d": int, "x": {cell: int}, "z": {cell: int}, "phase": int }
nlohmann::ordered_json operator_to_json(const QuditPauliOperator& op);
QuditPauliOperator operator_from_json(const nlohmann::json& j);

// { "free": int, "torsion": [int] }
nlohmann::ordered_json group_to_json(const FgAbelianGroup& g);
FgAbelianGroup group_from_json(const nlohmann::json& j);

// { "d": int, "x": chain, "z": chain }
nlohmann::ordered_json error_config_to_json(const ErrorConfig& e);
ErrorConfig error_config_from_json(const nlohmann::json& j);

// { "v": {cell: int}, "p": {cell: int} }
nlohmann::ordered_json syndrome_to_json(const Syndrome& s);
Syndrome syndrome_from_json(const nlohmann::json& j);

// { "base": complex-ref, "k": int, "group": {...},
//   "transitions": "identity" | [ {"cell": id, "face": id,
//                                  "aut": [[int]], "offset": [int]} ],
//   "f": {cell-id: [int]} }
nlohmann::ordered_json bundle_to_json(const BundleSpec& spec);
BundleSpec bundle_from_json(const nlohmann::json& j);

} // namespace homcode
