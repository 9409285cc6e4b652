#pragma once

#include <json.hpp>

#include "qlat/cover.hpp"
#include "qlat/lattice.hpp"
#include "qlat/pencil.hpp"
#include "qlat/suites.hpp"

namespace qlat {

// All report JSON uses ordered maps and serializes exact values as
// strings, never floats, so byte-identical reports come out of identical
// inputs and config.
using Json = nlohmann::ordered_json;

Json to_json(const Cyclo& a);
Json to_json(const Mat2Z& m);
Json to_json(const Mat2C& m);
Json to_json(const Mat3C& m);
Json to_json(const ProjPoint& p);
Json to_json(const ConicForm& c);
Json to_json(const CheckReport& r);
Json to_json(const VerifyReport& r);
Json to_json(const IsometryClass& c);
Json to_json(const RepCertificate& c);
Json to_json(const DistinguishVerdict& v);
Json to_json(const SingularFiberReport& r);
Json to_json(const Arrangement& a);

}  // namespace qlat
