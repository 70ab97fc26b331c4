#pragma once

#include "arboreal/curves.hpp"
#include "arboreal/dynamics.hpp"
#include "arboreal/galois.hpp"
#include "arboreal/index_sets.hpp"
#include "arboreal/square_classes.hpp"
#include "arboreal/tree_group.hpp"

#include <json.hpp>

namespace arboreal::io {

using Json = nlohmann::ordered_json;

/// Exact rationals serialize as "p/q" strings (integers without the slash).
Json rational(const Rational& q);
Json rationals(const std::vector<Rational>& qs);

Json to_json(const SquareClass& s);
Json to_json(const QuadPair& p);
Json to_json(const NormalForm& nf);
Json to_json(const QuadElement& x);
Json to_json(const AdjustedOrbit& o);
Json to_json(const PcfVerdict& v);
Json to_json(const ExceptionalVerdict& v);
Json to_json(const ValuationReport& r);
Json to_json(const Level2Group& g);
Json to_json(const FrobeniusSample& s);
Json to_json(const PrimeCertificate& c);
Json to_json(const Certificate& c);
Json to_json(const AbelianVerdict& v);
Json to_json(const TreeAut& g);
Json to_json(const NoncommutationReport& r);
Json to_json(const ProgressingReport& r);
Json to_json(const MCoprimeReport& r);
Json to_json(const CurveSpec& c);
Json to_json(const CurvePoint& p);

}  // namespace arboreal::io
