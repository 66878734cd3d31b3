#ifndef LLPACK_JSON_IO_HPP
#define LLPACK_JSON_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include "llpack/classify.hpp"
#include "llpack/cuspdata.hpp"
#include "llpack/hecke.hpp"
#include "llpack/lparam.hpp"
#include "llpack/smallgrp.hpp"

namespace llpack::io {

// Insertion-ordered JSON keeps the emitted key order fixed, so equal inputs
// serialize byte-identically.
using Json = nlohmann::ordered_json;

std::string rational_string(const gf::Rat& r);

// Polynomials carry their coefficient field as (p, e); the text form uses
// X^k with t for the extension generator.
Json poly_to_json(const poly::MonicPoly& p);
poly::MonicPoly poly_from_json(const Json& j);

Json kind_to_json(const par::PGroupKind& kind);
par::PGroupKind kind_from_json(const Json& j);

Json parameter_to_json(const par::Parameter& phi);
par::Parameter parameter_from_json(const Json& j);

Json label_to_json(const cusp::CuspidalLabel& label);
cusp::CuspidalLabel label_from_json(const Json& j);

Json datum_to_json(const cusp::TypeDatum& datum);
cusp::TypeDatum datum_from_json(const Json& j);

Json red_point_to_json(const hecke::ReducPoint& s);
Json red_set_to_json(const std::vector<hecke::ReducPoint>& points);

Json verify_report_to_json(const sg::VerifyReport& report);
Json sp4_report_to_json(const sg::Sp4Report& report);

Json table_row_to_json(const cls::TableRow& row);
// Fixed column order: family, params(a,b,c,d), deep, type_set.
std::string table_row_to_tsv(const cls::TableRow& row);

Json descend_to_json(const cls::DescendResult& res);

}  // namespace llpack::io

#endif
