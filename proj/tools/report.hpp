#pragma once

#include "json.hpp"
#include "symlie/classify.hpp"
#include "symlie/dynamics.hpp"
#include "symlie/linearize.hpp"

namespace symlie::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "symlie.report/1";
inline constexpr const char* kVersion = "0.1.0";

Json header(const std::string& command, const Json& input, const SampleDomain& dom);

Json number(const Number& n);
Json constants(const std::map<std::string, Number>& k);
Json vector(const PointVectorField& X);
Json lie_check(const LieCheck& c);
Json symmetry(const SymmetryReport& r);
Json noether(const NoetherResult& r);
Json noether_check(const NoetherCheck& c);
Json match(const RowMatch& m);
Json drift(const DriftReport& d);
Json scalar(const ScalarCheck& c);
Json weyl(const WeylCheck& c);

}  // namespace symlie::report
