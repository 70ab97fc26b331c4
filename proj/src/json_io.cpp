#include "arboreal/json_io.hpp"

namespace arboreal::io {

Json rational(const Rational& q) { return to_string(q); }

Json rationals(const std::vector<Rational>& qs) {
    Json out = Json::array();
    for (const auto& q : qs) out.push_back(rational(q));
    return out;
}

Json to_json(const SquareClass& s) {
    Json primes = Json::array();
    for (const auto& p : s.primes) primes.push_back(to_string(p));
    return Json{{"sign", s.sign}, {"primes", primes}};
}

Json to_json(const QuadPair& p) {
    return Json{{"a", rational(p.a)}, {"b", rational(p.b)}, {"alpha", rational(p.alpha)}};
}

Json to_json(const NormalForm& nf) { return Json{{"c", rational(nf.c)}, {"beta", rational(nf.beta)}}; }

Json to_json(const QuadElement& x) {
    return Json{{"a", rational(x.a)}, {"b", rational(x.b)}, {"d", x.d}, {"text", x.to_string()}};
}

Json to_json(const AdjustedOrbit& o) {
    Json j{{"raw", rationals(o.raw)}, {"adjusted", rationals(o.adjusted)}};
    j["degeneracy"] = o.degeneracy ? Json(*o.degeneracy) : Json(nullptr);
    return j;
}

Json to_json(const PcfVerdict& v) {
    Json j{{"pcf", v.pcf}, {"orbit", rationals(v.orbit)}};
    if (v.pcf) {
        j["preperiod"] = v.preperiod;
        j["period"] = v.period;
    } else {
        j["witness"] = v.witness == PcfVerdict::Witness::Denominator ? "denominator-growth" : "escape";
        j["witness_index"] = v.witness_index;
    }
    return j;
}

Json to_json(const ExceptionalVerdict& v) {
    return Json{{"exceptional", v.exceptional}, {"justification", v.justification}};
}

Json to_json(const ValuationReport& r) {
    static const char* names[] = {"negative", "rigid", "no-positive"};
    Json j{{"c", rational(r.c)}, {"prime", r.prime}, {"valuations", r.valuations},
           {"pattern", names[static_cast<int>(r.pattern)]}};
    if (r.pattern == ValuationReport::Pattern::Rigid) j["first_positive"] = r.first_positive;
    j["conforms"] = r.conforms;
    j["violations"] = r.violations;
    return j;
}

Json to_json(const Level2Group& g) {
    Json image = Json::array();
    for (const auto& e : g.ab_image) image.push_back(Json::array({int(e[0]), int(e[1])}));
    return Json{{"group", to_string(g.group)}, {"order", order(g.group)}, {"abelian", is_abelian(g.group)},
                {"root_swapping", g.root_swapping}, {"c1", rational(g.c1)}, {"c2", rational(g.c2)},
                {"ab_image", image}};
}

Json to_json(const FrobeniusSample& s) {
    Json counts = Json::array();
    for (const auto& [type, n] : s.counts) counts.push_back(Json{{"cycle_type", type}, {"count", n}});
    auto names = [](const std::vector<GroupId>& gs) {
        Json out = Json::array();
        for (auto g : gs) out.push_back(to_string(g));
        return out;
    };
    Json j{{"level", s.level}, {"good_primes", s.primes_used.size()}, {"skipped_primes", s.primes_skipped},
           {"counts", counts}};
    if (s.level == 2) {
        j["compatible"] = names(s.compatible);
        j["saturated"] = names(s.saturated);
    }
    return j;
}

Json to_json(const PrimeCertificate& c) {
    static const char* kinds[] = {"basepoint", "rational-preimage", "sqrt-preimage"};
    return Json{{"prime", c.prime}, {"condition", std::string(1, c.condition)},
                {"datum_kind", kinds[static_cast<int>(c.datum_kind)]}, {"datum", rational(c.datum)}};
}

Json to_json(const Certificate& c) {
    Json j{{"kind", to_string(c.kind)}, {"c", rational(c.c)}, {"beta", rational(c.beta)}};
    switch (c.kind) {
        case Certificate::Kind::Level2D8:
        case Certificate::Kind::FaithfulNode2Dim:
            j["values"] = rationals(c.values);
            break;
        case Certificate::Kind::PoonenPrime:
            j["prime"] = to_json(*c.prime);
            break;
        case Certificate::Kind::QuadFieldD8: {
            j["chain"] = rationals(c.chain);
            j["node"] = to_json(c.node);
            Json vals = Json::array();
            for (const auto& q : c.quad_values) vals.push_back(to_json(q));
            j["quad_values"] = vals;
            break;
        }
        case Certificate::Kind::PostCriticallyInfinite:
            j["witness_index"] = c.witness_index;
            break;
    }
    j["replays"] = replay(c);
    return j;
}

Json to_json(const AbelianVerdict& v) {
    Json j{{"status", to_string(v.status)}};
    if (!v.tag.empty()) j["tag"] = v.tag;
    j["certificate"] = v.certificate ? to_json(*v.certificate) : Json(nullptr);
    j["provenance"] = v.provenance;
    return j;
}

Json to_json(const TreeAut& g) { return Json{{"depth", g.depth()}, {"levels", g.to_strings()}}; }

Json to_json(const NoncommutationReport& r) {
    Json ce = Json::array();
    for (const auto& [g, h] : r.counterexamples) ce.push_back(Json::array({to_json(g), to_json(h)}));
    return Json{{"depth", r.depth}, {"exhaustive", r.exhaustive}, {"pairs_examined", r.pairs_examined},
                {"pairs_tested", r.pairs_tested}, {"counterexamples", ce}};
}

Json to_json(const ProgressingReport& r) {
    Json j{{"holds", r.holds}, {"offenders", r.offenders}};
    if (!r.span_certificates.empty()) {
        Json certs = Json::array();
        for (const auto& c : r.span_certificates) certs.push_back(c ? Json(*c) : Json(nullptr));
        j["span_certificates"] = certs;
    }
    return j;
}

Json to_json(const MCoprimeReport& r) {
    Json w = Json::array();
    for (const auto& x : r.witnesses) w.push_back(x ? Json(*x) : Json(nullptr));
    return Json{{"holds", r.holds}, {"witnesses", w}, {"running_max", r.running_max},
                {"failures", r.failures}, {"unbounded", r.unbounded}};
}

Json to_json(const CurveSpec& c) {
    return Json{{"pair", to_json(c.pair)}, {"k", c.k}, {"l", c.l}, {"i0", c.i0},
                {"smooth", is_smooth(c)}, {"genus_relevant", c.genus_relevant()}};
}

Json to_json(const CurvePoint& p) { return Json::array({rational(p.x), rational(p.y)}); }

}  // namespace arboreal::io
