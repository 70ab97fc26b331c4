// Command-line front-end. Every subcommand prints one JSON record per line
// (or a table for `survey --format table`). Exit codes: 0 ok, 1 input error,
// 2 inconclusive or budget exhausted.

#include "arboreal/curves.hpp"
#include "arboreal/galois.hpp"
#include "arboreal/index_sets.hpp"
#include "arboreal/json_io.hpp"
#include "arboreal/tree_group.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace arboreal;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInconclusive = 2;

struct Config {
    std::size_t orbit_budget = 8;
    std::uint64_t factor_budget = 4'000'000;
    unsigned long prime_bound = 1000;
    unsigned descent_depth = 4;
    std::uint64_t seed = 0;
    bool pretty = false;

    ClassifyOptions classify() const {
        ClassifyOptions o;
        o.orbit_budget = orbit_budget;
        o.prime_bound = prime_bound;
        o.descent_depth = descent_depth;
        o.budget = budget();
        return o;
    }
    FactorBudget budget() const {
        FactorBudget b;
        b.operations = factor_budget;
        b.seed = seed;
        return b;
    }
};

Config config;

void emit(const Json& j) { std::cout << (config.pretty ? j.dump(2) : j.dump()) << '\n'; }

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        out.push_back(line.substr(start));
    }
    return out;
}

// One pair per line; CSV rows "a,b,alpha" or "c,alpha".
std::vector<std::string> pair_inputs(std::vector<std::string> inline_pairs, const std::string& csv) {
    if (!csv.empty()) {
        for (auto& line : read_lines(csv)) inline_pairs.push_back(line);
    }
    if (inline_pairs.empty()) throw ParseError("no pairs given");
    return inline_pairs;
}

// Families arrive as a JSON array of arrays or one "{i,j,k}" vector per line.
std::vector<IndexVector> family_inputs(const std::vector<std::string>& inline_vectors, const std::string& file) {
    std::vector<IndexVector> out;
    for (const auto& s : inline_vectors) out.push_back(IndexVector::parse(s));
    if (file.empty()) return out;
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open '" + file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        Json j = Json::parse(text, nullptr, false);
        if (j.is_discarded() || !j.is_array()) throw ParseError("bad JSON family in '" + file + "'");
        for (const auto& m : j) {
            if (!m.is_array()) throw ParseError("family members must be arrays of indices");
            std::vector<std::uint64_t> idx;
            for (const auto& i : m) {
                if (!i.is_number_unsigned() || i.get<std::uint64_t>() == 0) throw ParseError("indices must be positive integers");
                idx.push_back(i.get<std::uint64_t>());
            }
            out.emplace_back(std::move(idx));
        }
    } else {
        for (const auto& line : read_lines(file)) out.push_back(IndexVector::parse(line));
    }
    return out;
}

Json pair_header(const std::string& input, const QuadPair& p) {
    return Json{{"input", input}, {"pair", io::to_json(p)}, {"normal_form", io::to_json(normal_form(p))}};
}

// ---- classify / survey -------------------------------------------------------

struct Record {
    Json json;
    bool inconclusive = false;
};

Record classify_record(const std::string& input, const QuadPair& p) {
    Record r;
    r.json = pair_header(input, p);
    r.json["pcf"] = io::to_json(is_pcf(p));
    r.json["exceptional"] = io::to_json(is_exceptional(p));
    AbelianVerdict v = classify_abelian(p, config.classify());
    r.json["abelian"] = io::to_json(v);
    if (v.status == AbelianVerdict::Status::NonAbelian && !v.certificate && v.provenance != kRootOfUnityRule)
        r.inconclusive = true;
    AdjustedOrbit orbit = adjusted_orbit(p, config.orbit_budget);
    if (orbit.degeneracy) {
        r.json["ab_dimension"] = nullptr;
        r.json["level2"] = nullptr;
        r.json["degeneracy"] = *orbit.degeneracy;
        return r;
    }
    try {
        r.json["ab_dimension"] = Json{{"n", config.orbit_budget}, {"dimension", ab_dimension(p, config.orbit_budget, config.budget())}};
    } catch (const BudgetExceeded& e) {
        r.json["ab_dimension"] = Json{{"n", config.orbit_budget}, {"inconclusive", e.what()}};
        r.inconclusive = true;
    }
    try {
        r.json["level2"] = io::to_json(level2_galois(p, config.budget()));
    } catch (const BudgetExceeded& e) {
        r.json["level2"] = Json{{"inconclusive", e.what()}};
        r.inconclusive = true;
    }
    return r;
}

int cmd_classify(const std::vector<std::string>& inputs) {
    std::vector<QuadPair> pairs;
    for (const auto& s : inputs) pairs.push_back(QuadPair::parse(s));
    std::vector<Record> records(pairs.size());
    const std::int64_t n = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) records[i] = classify_record(inputs[i], pairs[i]);
    bool inconclusive = false;
    for (const auto& r : records) {
        emit(r.json);
        inconclusive = inconclusive || r.inconclusive;
    }
    return inconclusive ? kInconclusive : kOk;
}

std::vector<Rational> rationals_of_height(unsigned long h) {
    std::vector<Rational> out;
    for (unsigned long q = 1; q <= std::max(h, 1ul); ++q) {
        for (long p = -static_cast<long>(h); p <= static_cast<long>(h); ++p) {
            Rational x(p, q);
            x.canonicalize();
            if (x.get_den() == q) out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int cmd_survey(unsigned long c_height, unsigned long alpha_height, const std::string& format) {
    auto cs = rationals_of_height(c_height);
    auto betas = rationals_of_height(alpha_height);
    std::vector<NormalForm> grid;
    for (const auto& c : cs)
        for (const auto& b : betas) grid.push_back({c, b});
    std::vector<AbelianVerdict> verdicts(grid.size());
    const std::int64_t n = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) verdicts[i] = classify_abelian(QuadPair::normal(grid[i].c, grid[i].beta), config.classify());

    std::size_t abelian = 0, nonabelian = 0, not_applicable = 0, uncertified = 0, unjustified = 0;
    Json abelian_pairs = Json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& v = verdicts[i];
        switch (v.status) {
            case AbelianVerdict::Status::Abelian:
                ++abelian;
                abelian_pairs.push_back(io::to_json(grid[i]));
                break;
            case AbelianVerdict::Status::NonAbelian:
                ++nonabelian;
                if (!v.certificate) ++uncertified;
                if (!v.certificate && v.provenance != kRootOfUnityRule) ++unjustified;
                break;
            case AbelianVerdict::Status::NotApplicable: ++not_applicable; break;
        }
        if (format == "table") {
            std::printf("%-8s %-8s %-14s %-22s %s\n", to_string(grid[i].c).c_str(), to_string(grid[i].beta).c_str(),
                        to_string(v.status).c_str(), v.certificate ? to_string(v.certificate->kind).c_str() : "-",
                        v.provenance.c_str());
        } else {
            Json j{{"c", io::rational(grid[i].c)}, {"beta", io::rational(grid[i].beta)}, {"abelian", io::to_json(v)}};
            emit(j);
        }
    }
    Json summary{{"pairs", grid.size()}, {"abelian", abelian}, {"nonabelian", nonabelian},
                 {"not_applicable", not_applicable}, {"uncertified", uncertified}, {"abelian_pairs", abelian_pairs}};
    if (format == "table") {
        std::printf("summary: %zu pairs, %zu abelian, %zu non-abelian (%zu without certificate), %zu not applicable\n",
                    grid.size(), abelian, nonabelian, uncertified, not_applicable);
    } else {
        emit(Json{{"summary", summary}});
    }
    return unjustified ? kInconclusive : kOk;
}

// ---- thin wrappers ------------------------------------------------------------

int cmd_orbit(const std::string& input, std::size_t n) {
    QuadPair p = QuadPair::parse(input);
    Json j = pair_header(input, p);
    j["orbit"] = io::to_json(adjusted_orbit(p, n));
    emit(j);
    return kOk;
}

int cmd_pcf(const std::string& input) {
    Json j{{"input", input}};
    PcfVerdict v;
    if (input.find(',') != std::string::npos) {
        QuadPair p = QuadPair::parse(input);
        j["pair"] = io::to_json(p);
        v = is_pcf(p);
    } else {
        Rational c = parse_rational(input);
        j["c"] = io::rational(c);
        v = is_pcf(c);
    }
    j["verdict"] = io::to_json(v);
    j["provenance"] = v.pcf ? "orbit-cycle-detected" : "orbit-escape-bound";
    emit(j);
    return kOk;
}

int cmd_contain(const std::string& input, const std::string& vector) {
    QuadPair p = QuadPair::parse(input);
    IndexVector v = IndexVector::parse(vector);
    Json j = pair_header(input, p);
    j["v"] = v.to_string();
    try {
        j["contained"] = contained_in_Mv(p, v);
        j["provenance"] = "orbit-product-square";
    } catch (const DegenerateBasepoint& e) {
        j["contained"] = nullptr;
        j["error"] = e.what();
        emit(j);
        return kInputError;
    }
    emit(j);
    return kOk;
}

int cmd_abdim(const std::string& input, std::size_t n) {
    QuadPair p = QuadPair::parse(input);
    Json j = pair_header(input, p);
    j["n"] = n;
    try {
        j["dimension"] = ab_dimension(p, n, config.budget());
        j["provenance"] = "square-class-rank";
    } catch (const DegenerateBasepoint& e) {
        j["error"] = e.what();
        emit(j);
        return kInputError;
    } catch (const BudgetExceeded& e) {
        j["inconclusive"] = e.what();
        emit(j);
        return kInconclusive;
    }
    emit(j);
    return kOk;
}

int cmd_group2(const std::string& input, std::size_t frobenius, unsigned level) {
    QuadPair p = QuadPair::parse(input);
    Json j = pair_header(input, p);
    try {
        j["level2"] = io::to_json(level2_galois(p, config.budget()));
        j["provenance"] = "quartic-resolvent";
    } catch (const DegenerateBasepoint& e) {
        j["error"] = e.what();
        emit(j);
        return kInputError;
    } catch (const BudgetExceeded& e) {
        j["inconclusive"] = e.what();
        emit(j);
        return kInconclusive;
    }
    if (frobenius > 0) {
        // Draw primes until `frobenius` good ones are found, up to a fixed cap.
        std::vector<unsigned long> primes = odd_primes(std::min<std::size_t>(4 * frobenius + 50, 9000));
        FrobeniusSample all = frobenius_sample(p, level, primes);
        std::vector<unsigned long> chosen;
        std::size_t good = 0;
        for (auto q : primes) {
            bool is_good = std::binary_search(all.primes_used.begin(), all.primes_used.end(), q);
            if (is_good && good == frobenius) break;
            chosen.push_back(q);
            good += is_good;
        }
        j["frobenius"] = io::to_json(frobenius_sample(p, level, chosen));
    }
    emit(j);
    return kOk;
}

int cmd_valuations(const std::string& c_text, unsigned long prime, std::size_t n) {
    if (!is_prime(prime)) throw ParseError("p must be prime");
    Rational c = parse_rational(c_text);
    Json j = io::to_json(orbit_valuations(c, prime, n));
    j["provenance"] = "orbit-valuation-divisibility";
    emit(j);
    return kOk;
}

int cmd_poonen(const std::string& input, unsigned long prime, unsigned long bound) {
    QuadPair p = QuadPair::parse(input);
    NormalForm nf = normal_form(p);
    Json j = pair_header(input, p);
    if (prime) {
        if (!is_prime(prime) || prime == 2) throw ParseError("p must be an odd prime");
        if (nf.c != 0 && valuation(nf.c, prime) < 0) throw ParseError("the test needs v_p(c) >= 0");
        PoonenResult r = poonen_check(nf.c, nf.beta, prime);
        j["prime"] = prime;
        j["fired"] = r.fired;
        j["condition"] = r.fired ? Json(std::string(1, r.condition)) : Json(nullptr);
    } else {
        auto cert = nonabelian_prime_search(p, bound);
        j["bound"] = bound;
        j["certificate"] = cert ? io::to_json(*cert) : Json(nullptr);
    }
    j["provenance"] = "tame-infinite-ramification";
    emit(j);
    return kOk;
}

int cmd_indexset_progressing(const std::vector<IndexVector>& members, const std::vector<std::string>& targets,
                             std::uint64_t k, std::uint64_t l) {
    IndexFamily family(members);
    ProgressingReport r;
    if (targets.empty()) {
        r = progressing_witness(family, k, l);
    } else {
        std::vector<IndexVector> t;
        for (const auto& s : targets) t.push_back(IndexVector::parse(s));
        r = progressing_witness(family, t, k, l);
    }
    Json j = io::to_json(r);
    j["k"] = k;
    j["l"] = l;
    j["members"] = members.size();
    j["provenance"] = "progression-check";
    emit(j);
    return kOk;
}

int cmd_indexset_coprime(const std::vector<IndexVector>& members, std::uint64_t m) {
    Json j = io::to_json(m_coprime_witness(IndexFamily(members), m));
    j["m"] = m;
    j["provenance"] = "coprime-witness-scan";
    emit(j);
    return kOk;
}

int cmd_bertrand(std::vector<std::uint64_t> a, std::uint64_t upto) {
    if (upto) {
        a.clear();
        for (std::uint64_t n = 1; n <= upto; ++n) a.push_back(n);
    }
    if (a.empty()) throw ParseError("give a sequence or --upto");
    for (std::size_t n = 0; n < a.size(); ++n) {
        if (a[n] == 0 || (n && a[n] <= a[n - 1])) throw ParseError("sequence must be strictly increasing and positive");
    }
    // Stream members: the family {1..a_n} is never materialized.
    MCoprimeScan scan(0);
    Json witnesses = Json::array();
    bool bertrand_ok = true;
    for (auto an : a) {
        BertrandMember b = bertrand_member(an);
        std::vector<std::uint64_t> support(an);
        std::iota(support.begin(), support.end(), 1);
        auto w = scan.add(IndexVector(std::move(support)));
        bertrand_ok = bertrand_ok && (an == 1 || 2 * b.witness > an) && w && *w == b.witness;
        witnesses.push_back(b.witness);
    }
    MCoprimeReport r = std::move(scan).finish();
    emit(Json{{"members", a.size()}, {"witnesses", witnesses}, {"bertrand_holds", bertrand_ok},
              {"m_coprime", r.holds}, {"unbounded", r.unbounded}, {"provenance", "bertrand-postulate"}});
    return kOk;
}

int cmd_tree_verify(unsigned depth, std::uint64_t samples) {
    NoncommutationReport r = verify_noncommutation(depth, samples, config.seed);
    Json j = io::to_json(r);
    j["summary"] = r.counterexamples.empty()
                       ? "no counterexamples (" + std::to_string(r.pairs_examined) + " pairs)"
                       : std::to_string(r.counterexamples.size()) + " counterexamples";
    j["provenance"] = r.exhaustive ? "exhaustive-enumeration" : "seeded-sampling";
    emit(j);
    return r.counterexamples.empty() ? kOk : kInconclusive;
}

int cmd_curve(const std::string& input, const std::string& vector, std::uint64_t k, std::uint64_t l, std::uint64_t i0,
              std::uint64_t search, const std::vector<std::string>& xs) {
    QuadPair p = QuadPair::parse(input);
    CurveSpec curve{p, k, l, i0};
    Json j = pair_header(input, p);
    if (!vector.empty()) {
        IndexVector v = IndexVector::parse(vector);
        curve = curve_for(p, v, i0);
        auto pt = construct_point(p, v, i0);
        j["v"] = v.to_string();
        j["constructed_point"] = pt ? io::to_json(*pt) : Json(nullptr);
    }
    j["curve"] = io::to_json(curve);
    if (!xs.empty()) {
        Json evals = Json::array();
        for (const auto& x : xs) {
            Rational q = parse_rational(x);
            evals.push_back(Json{{"x", io::rational(q)}, {"rhs", io::rational(rhs_eval(curve, q))}});
        }
        j["rhs"] = evals;
    }
    if (search) {
        Json pts = Json::array();
        for (const auto& pt : naive_point_search(curve, search)) pts.push_back(io::to_json(pt));
        j["search_height"] = search;
        j["points"] = pts;
    }
    j["provenance"] = "orbit-point-construction";
    emit(j);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arboreal Galois representations of quadratic pairs over Q"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--orbit-budget", config.orbit_budget, "orbit length N")->envname("ARBOREAL_ORBIT_BUDGET")->check(CLI::PositiveNumber);
    app.add_option("--factor-budget", config.factor_budget, "factorization operation budget")->envname("ARBOREAL_FACTOR_BUDGET")->check(CLI::PositiveNumber);
    app.add_option("--prime-bound", config.prime_bound, "bound for ramification prime search")->envname("ARBOREAL_PRIME_BOUND")->check(CLI::PositiveNumber);
    app.add_option("--descent-depth", config.descent_depth, "backward-orbit descent depth")->envname("ARBOREAL_DESCENT_DEPTH");
    app.add_option("--seed", config.seed, "sampling seed")->envname("ARBOREAL_SEED");
    app.add_flag("--pretty", config.pretty, "indent JSON output");

    std::function<int()> run;

    std::vector<std::string> pairs;
    std::string csv;
    auto* classify = app.add_subcommand("classify", "classify pairs");
    classify->add_option("pairs", pairs, "pairs 'a,b,alpha' or 'c,alpha'");
    classify->add_option("--csv", csv, "file with one pair per line")->check(CLI::ExistingFile);
    classify->callback([&] { run = [&] { return cmd_classify(pair_inputs(pairs, csv)); }; });

    unsigned long c_height = 2, alpha_height = 2;
    std::string format = "json";
    auto* survey = app.add_subcommand("survey", "classify every normal-form pair in a height grid");
    survey->add_option("--c-height", c_height, "height bound for c");
    survey->add_option("--alpha-height", alpha_height, "height bound for beta");
    survey->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
    survey->callback([&] { run = [&] { return cmd_survey(c_height, alpha_height, format); }; });

    std::string pair;
    std::size_t n = 8;
    auto* orbit = app.add_subcommand("orbit", "adjusted post-critical orbit");
    orbit->add_option("pair", pair)->required();
    orbit->add_option("-n,--n", n)->check(CLI::PositiveNumber);
    orbit->callback([&] { run = [&] { return cmd_orbit(pair, n); }; });

    auto* pcf = app.add_subcommand("pcf", "post-critical finiteness of x^2+c (or of a pair)");
    pcf->add_option("c", pair, "rational c or a pair")->required();
    pcf->callback([&] { run = [&] { return cmd_pcf(pair); }; });

    std::string vector;
    auto* contain = app.add_subcommand("contain", "containment of the image in M_v");
    contain->add_option("pair", pair)->required();
    contain->add_option("v", vector, "index vector {i,j,...}")->required();
    contain->callback([&] { run = [&] { return cmd_contain(pair, vector); }; });

    auto* abdim = app.add_subcommand("abdim", "dimension of the span of the adjusted orbit mod squares");
    abdim->add_option("pair", pair)->required();
    abdim->add_option("-n,--n", n)->check(CLI::PositiveNumber);
    abdim->callback([&] { run = [&] { return cmd_abdim(pair, n); }; });

    std::size_t frobenius = 0;
    unsigned level = 2;
    auto* group2 = app.add_subcommand("group2", "Galois group of f^2 - alpha");
    group2->add_option("pair", pair)->required();
    group2->add_option("--frobenius", frobenius, "cross-check with this many good primes");
    group2->add_option("--level", level, "Frobenius sampling level (1..3)")->check(CLI::Range(1, 3));
    group2->callback([&] { run = [&] { return cmd_group2(pair, frobenius, level); }; });

    std::string c_text;
    unsigned long prime = 0;
    auto* valuations = app.add_subcommand("valuations", "p-adic valuations along the critical orbit of x^2+c");
    valuations->add_option("--c", c_text)->required();
    valuations->add_option("--p", prime)->required();
    valuations->add_option("-n,--n", n)->check(CLI::Range(1, 62));
    valuations->callback([&] { run = [&] { return cmd_valuations(c_text, prime, n); }; });

    unsigned long bound = 1000;
    auto* poonen = app.add_subcommand("poonen", "tame infinite-ramification test");
    poonen->add_option("pair", pair)->required();
    poonen->add_option("--p", prime, "test a single odd prime");
    poonen->add_option("--bound", bound, "search primes up to this bound");
    poonen->callback([&] { run = [&] { return cmd_poonen(pair, prime, bound); }; });

    std::vector<std::string> vectors, targets;
    std::string family_file;
    std::uint64_t k = 1, l = 1, m = 0;
    auto* indexset = app.add_subcommand("indexset", "index-family predicates");
    indexset->require_subcommand(1);
    auto* progressing = indexset->add_subcommand("progressing", "(k,l)-progression check");
    progressing->add_option("vectors", vectors);
    progressing->add_option("--file", family_file)->check(CLI::ExistingFile);
    progressing->add_option("--target", targets, "span elements to check instead of members");
    progressing->add_option("--k", k)->check(CLI::PositiveNumber);
    progressing->add_option("--l", l)->check(CLI::PositiveNumber);
    progressing->callback([&] { run = [&] { return cmd_indexset_progressing(family_inputs(vectors, family_file), targets, k, l); }; });
    auto* coprime = indexset->add_subcommand("coprime", "M-coprime witness scan");
    coprime->add_option("vectors", vectors);
    coprime->add_option("--file", family_file)->check(CLI::ExistingFile);
    coprime->add_option("--m", m);
    coprime->callback([&] { run = [&] { return cmd_indexset_coprime(family_inputs(vectors, family_file), m); }; });

    std::vector<std::uint64_t> sequence;
    std::uint64_t upto = 0;
    auto* bertrand = app.add_subcommand("bertrand", "Bertrand-postulate family {1..a_n}");
    bertrand->add_option("a", sequence, "strictly increasing a_1 < a_2 < ...");
    bertrand->add_option("--upto", upto, "use a_n = n for n <= upto");
    bertrand->callback([&] { run = [&] { return cmd_bertrand(sequence, upto); }; });

    unsigned depth = 3;
    std::uint64_t samples = 200'000;
    auto* tree = app.add_subcommand("tree-verify", "finite-depth non-commutation check");
    tree->add_option("depth", depth)->check(CLI::Range(1, 6));
    tree->add_option("--samples", samples, "sampled pairs beyond depth 3");
    tree->callback([&] { run = [&] { return cmd_tree_verify(depth, samples); }; });

    std::uint64_t i0 = 1, search = 0;
    std::vector<std::string> xs;
    auto* curve = app.add_subcommand("curve", "hyperelliptic curve y^2 = prod (f^{kj+i0}(x) - alpha)");
    curve->add_option("pair", pair)->required();
    curve->add_option("--v", vector, "progression v; sets k and l and constructs the orbit point");
    curve->add_option("--k", k)->check(CLI::PositiveNumber);
    curve->add_option("--l", l)->check(CLI::PositiveNumber);
    curve->add_option("--i0", i0)->check(CLI::PositiveNumber);
    curve->add_option("--search", search, "naive point search height");
    curve->add_option("--x", xs, "evaluate the right-hand side at x");
    curve->callback([&] { run = [&] { return cmd_curve(pair, vector, k, l, i0, search, xs); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }
    try {
        return run();
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const BudgetExceeded& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return kInconclusive;
    } catch (const CapExceeded& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return kInconclusive;
    }
}
