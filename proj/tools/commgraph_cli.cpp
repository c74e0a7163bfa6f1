// Command-line front end: file parsing, operation dispatch, JSON output.
// Exit codes: 0 verified/success, 1 claim violated, 2 input error,
// 3 unsupported (budget, field capability, degenerate parameters).

#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "commgraph/census.hpp"
#include "commgraph/constructions.hpp"
#include "commgraph/m9.hpp"
#include "commgraph/verify.hpp"

namespace {

using cg::json;

json int_json(const cg::Int& v) {
    static const cg::Int lo = cg::Int(std::numeric_limits<long long>::min());
    static const cg::Int hi = cg::Int(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

bool capability_error(cg::Err c) {
    switch (c) {
    case cg::Err::NonSplitSpectrum:
    case cg::Err::NoEigenvalueInField:
    case cg::Err::InfiniteField:
    case cg::Err::BudgetExceeded:
    case cg::Err::DegenerateParameters:
    case cg::Err::FieldTooSmall:
    case cg::Err::TooLarge:
    case cg::Err::Unsupported:
        return true;
    default:
        return false;
    }
}

void emit(const json& j, const std::string& out_path) {
    std::string text = j.dump(2);
    text.push_back('\n');
    if (out_path.empty())
        std::cout << text;
    else
        cg::write_text_file(out_path, text);
}

std::optional<cg::Field> hint_from(const std::string& field_line) {
    if (field_line.empty()) return std::nullopt;
    return cg::field_from_line(field_line);
}

cg::Int parse_int(const std::string& s) { return cg::Int(s); }

json distance_result_json(const cg::DistanceResult& r) {
    json j;
    j["verdict"] = cg::verdict_name(r.verdict);
    j["lower_bound"] = r.lower_bound;
    if (r.witness_path) {
        json p = json::array();
        for (const auto& m : *r.witness_path) p.push_back(cg::matrix_to_json(m));
        j["witness_path"] = std::move(p);
        j["length"] = static_cast<int>(r.witness_path->size()) - 1;
    } else {
        j["witness_path"] = nullptr;
    }
    if (r.exhaustion) {
        j["exhaustion"] = {{"method", r.exhaustion->method},
                           {"field", r.exhaustion->field},
                           {"examined", int_json(r.exhaustion->examined)},
                           {"total", int_json(r.exhaustion->total)},
                           {"note", r.exhaustion->note}};
    } else {
        j["exhaustion"] = nullptr;
    }
    return j;
}

struct Cmd {
    std::string out;
    std::string field_line;
    std::string budget;
};

int run_centralizer(const std::string& file, const Cmd& c) {
    cg::Matrix A = cg::read_matrix_file(file, hint_from(c.field_line));
    cg::CentralizerBasis cb = cg::centralizer(A);
    json out;
    out["field"] = A.field().spec_line();
    out["n"] = A.rows();
    out["dim"] = cb.space.dim();
    json basis = json::array();
    for (const auto& m : cb.space.basis_matrices()) basis.push_back(cg::matrix_to_text(m));
    out["basis"] = std::move(basis);
    emit(out, c.out);
    return 0;
}

int run_structure(const std::string& file, const Cmd& c) {
    cg::Matrix A = cg::read_matrix_file(file, hint_from(c.field_line));
    cg::StructureReport r = cg::structure_report(A);
    json out;
    out["field"] = A.field().spec_line();
    out["n"] = A.rows();
    out["minimal"] = r.minimal;
    out["maximal"] = r.maximal;
    out["semisimple"] = r.semisimple;
    out["rank_one_equiv"] = r.rank_one_equiv;
    out["min_poly_degree"] = r.min_poly_degree;
    out["centralizer_dim"] = cg::centralizer(A).space.dim();
    out["notes"] = r.notes;
    emit(out, c.out);
    return 0;
}

int run_distance(const std::string& fa, const std::string& fb, const std::string& method,
                 const Cmd& c) {
    cg::Matrix A = cg::read_matrix_file(fa, hint_from(c.field_line));
    cg::Matrix B = cg::read_matrix_file(fb, A.field());
    json out;
    out["field"] = A.field().spec_line();
    out["n"] = A.rows();
    out["method"] = method;
    if (method == "le2") {
        out["result"] = distance_result_json(cg::distance_le2(A, B));
    } else if (method == "le3") {
        cg::DistanceResult r = c.budget.empty()
                                   ? cg::distance_le3_finite(A, B)
                                   : cg::distance_le3_finite(A, B, parse_int(c.budget));
        out["result"] = distance_result_json(r);
    } else if (method == "census") {
        cg::CensusGraph g = c.budget.empty()
                                ? cg::census_build(A.field(), A.rows())
                                : cg::census_build(A.field(), A.rows(), parse_int(c.budget));
        out["result"] = distance_result_json(cg::census_distance(g, A, B));
    } else if (method == "path4") {
        auto path = cg::path_length4(A, B);
        cg::require(cg::validate_path(path, A, B), cg::Err::Internal,
                    "constructed path failed validation");
        json pj = json::array();
        for (const auto& m : path) pj.push_back(cg::matrix_to_json(m));
        out["result"] = {{"length", static_cast<int>(path.size()) - 1},
                         {"path", std::move(pj)}};
    } else {
        out["result"] = distance_result_json(cg::distance(A, B));
    }
    emit(out, c.out);
    return 0;
}

json family_json(const cg::FamilyInstance& inst) {
    const cg::Field& f = inst.X.field();
    json j;
    j["n"] = inst.n;
    j["alpha"] = f.to_string(inst.alpha);
    if (inst.lambda) j["lambda"] = f.to_string(*inst.lambda);
    j["X"] = cg::matrix_to_text(inst.X);
    json aux = json::object();
    for (const auto& [name, m] : inst.aux) aux[name] = cg::matrix_to_text(m);
    j["aux"] = std::move(aux);
    json vecs = json::object();
    for (const auto& [name, v] : inst.vectors) {
        json row = json::array();
        for (const auto& e : v) row.push_back(f.to_string(e));
        vecs[name] = std::move(row);
    }
    j["vectors"] = std::move(vecs);
    json path = json::array();
    for (const auto& m : inst.short_path) path.push_back(cg::matrix_to_text(m));
    j["short_path"] = std::move(path);
    j["X_minimal"] = cg::is_minimal(inst.X);
    return j;
}

int run_construct(const Cmd& c, const std::string& family,
                  const std::vector<std::string>& alphas, const std::string& lambda,
                  const std::string& eigs, int n, const std::vector<std::string>& theorem5,
                  const std::string& s_file, bool m9) {
    json out;
    if (m9) {
        cg::M9Certificate cert = cg::m9_certificate();
        out["field"] = "field gf 2 1";
        out["n"] = 9;
        out["A_hat"] = cg::matrix_to_text(cert.A_hat);
        out["Y_hat"] = cg::matrix_to_text(cert.Y_hat);
        out["S1"] = cg::matrix_to_text(cert.S1);
        out["A"] = cg::matrix_to_text(cert.A);
        out["V"] = cg::matrix_to_text(cert.V);
        out["N"] = cg::matrix_to_text(cert.N);
        out["B"] = cg::matrix_to_text(cert.B);
        out["Vp"] = cg::matrix_to_text(cert.Vp);
        out["validation"] = {{"algebra_size", int_json(cert.algebra_size)},
                             {"centralizer_dim", cert.centralizer_dim},
                             {"scalar_count", cert.scalar_count},
                             {"subfield_nonscalar_count", cert.subfield_nonscalar_count},
                             {"full_count", cert.full_count},
                             {"intersection_dim", cert.intersection_dim}};
        emit(out, c.out);
        return 0;
    }
    cg::require(!c.field_line.empty(), cg::Err::ParseError,
                "construct needs --field unless --m9 is given");
    cg::Field f = cg::field_from_line(c.field_line);
    if (!theorem5.empty()) {
        cg::require(theorem5.size() == 2, cg::Err::ParseError,
                    "--theorem5 takes exactly two Jordan specs");
        cg::JordanSpec sa = cg::parse_jordan_spec(f, theorem5[0]);
        cg::JordanSpec sb = cg::parse_jordan_spec(f, theorem5[1]);
        std::optional<cg::Matrix> S;
        if (!s_file.empty()) S = cg::read_matrix_file(s_file, f);
        cg::Theorem5Instance inst = cg::theorem5_instance(f, sa, sb, S);
        out["field"] = f.spec_line();
        out["n"] = inst.A.rows();
        out["specA"] = cg::jordan_spec_to_string(f, inst.specA);
        out["specB"] = cg::jordan_spec_to_string(f, inst.specB);
        out["A"] = cg::matrix_to_text(inst.A);
        out["S"] = cg::matrix_to_text(inst.S);
        out["Bprime"] = cg::matrix_to_text(inst.Bprime);
        out["validation"] = {{"A_minimal", cg::is_minimal(inst.A)},
                             {"Bprime_minimal", cg::is_minimal(inst.Bprime)},
                             {"minors_nonzero", true}};
        emit(out, c.out);
        return 0;
    }
    cg::require(!family.empty(), cg::Err::ParseError,
                "construct needs one of --family, --theorem5, --m9");
    cg::require(!alphas.empty(), cg::Err::ParseError, "--family needs at least one --alpha");
    out["field"] = f.spec_line();
    out["family"] = family;
    json instances = json::array();
    if (family == "n3") {
        for (const auto& a : alphas) instances.push_back(family_json(cg::family_n3(f, f.parse(a))));
    } else if (family == "n4") {
        cg::require(!lambda.empty(), cg::Err::ParseError, "the n4 family needs --lambda");
        for (const auto& a : alphas)
            instances.push_back(family_json(cg::family_n4(f, f.parse(a), f.parse(lambda))));
    } else if (family == "n5") {
        cg::require(!eigs.empty(), cg::Err::ParseError,
                    "the n5 family needs --eigs (comma-separated eigenvalues)");
        std::vector<cg::Fe> ev;
        std::string cur;
        for (char ch : eigs + ",") {
            if (ch == ',') {
                if (!cur.empty()) ev.push_back(f.parse(cur));
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        int nn = n > 0 ? n : static_cast<int>(ev.size());
        std::vector<cg::Fe> av;
        for (const auto& a : alphas) av.push_back(f.parse(a));
        for (const auto& inst : cg::family_n5plus_set(f, nn, av, ev))
            instances.push_back(family_json(inst));
    } else {
        cg::fail(cg::Err::ParseError, "unknown family: " + family);
    }
    out["instances"] = std::move(instances);
    out["validation"] = {{"instances", static_cast<int>(out["instances"].size())},
                         {"all_minimal", true}};
    emit(out, c.out);
    return 0;
}

int run_verify(const std::string& claim, const cg::VerifyOptions& opts, const Cmd& c) {
    if (claim == "all") {
        json report = cg::verify_all(opts);
        emit(report, c.out);
        if (report["all_verified"].get<bool>()) return 0;
        bool violated = false;
        for (const auto& cert : report["claims"])
            violated = violated || cert["verdict"] == "violated";
        return violated ? 1 : 3;
    }
    json cert = claim == "census" ? cg::verify_census(opts) : cg::verify_claim(claim, opts);
    emit(cert, c.out);
    std::string v = cert["verdict"].get<std::string>();
    if (v == "verified") return 0;
    if (v == "violated") return 1;
    return 3;
}

int run_census(int n, bool diameter, const Cmd& c) {
    cg::Field f = c.field_line.empty() ? cg::Field::finite(2, 1)
                                       : cg::field_from_line(c.field_line);
    cg::CensusGraph g = c.budget.empty() ? cg::census_build(f, n)
                                         : cg::census_build(f, n, parse_int(c.budget));
    json out = g.to_json();
    if (diameter) {
        json wrapped;
        wrapped["graph"] = std::move(out);
        wrapped["diameter"] = cg::diameter_report_to_json(g, cg::census_diameter(g));
        out = std::move(wrapped);
    }
    emit(out, c.out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact centralizer and commuting-distance toolkit for matrix algebras"};
    app.require_subcommand(1);

    Cmd c;
    std::string method = "auto", file_a, file_b, claim, family, lambda, eigs, s_file;
    std::vector<std::string> alphas, theorem5;
    int census_n = 3, construct_n = 0;
    bool diameter = false, m9 = false;
    cg::VerifyOptions vo;
    std::string vo_budget, vo_census_budget;
    int vo_trials = -1, vo_n = -1;
    std::uint64_t vo_q = 0;
    std::string vo_specA, vo_specB;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", c.out, "write the JSON result to this file");
    };

    CLI::App* cent = app.add_subcommand("centralizer", "centralizer dimension and basis");
    cent->add_option("matrix", file_a, "matrix file")->required();
    cent->add_option("--field", c.field_line, "field line, e.g. 'field gf 5 1'");
    add_common(cent);

    CLI::App* stru = app.add_subcommand("structure", "minimality and related classifications");
    stru->add_option("matrix", file_a, "matrix file")->required();
    stru->add_option("--field", c.field_line, "field line");
    add_common(stru);

    CLI::App* dist = app.add_subcommand("distance", "commuting-graph distance between two matrices");
    dist->add_option("A", file_a, "first matrix file")->required();
    dist->add_option("B", file_b, "second matrix file")->required();
    dist->add_option("--method", method, "le2|le3|census|path4|auto")
        ->check(CLI::IsMember({"le2", "le3", "census", "path4", "auto"}));
    dist->add_option("--field", c.field_line, "field line");
    dist->add_option("--budget", c.budget, "enumeration budget override");
    add_common(dist);

    CLI::App* cons = app.add_subcommand("construct", "build the distance-four witnesses");
    cons->add_option("--family", family, "n3|n4|n5");
    cons->add_option("--alpha", alphas, "family parameter, repeatable");
    cons->add_option("--lambda", lambda, "second parameter of the n4 family");
    cons->add_option("--eigs", eigs, "comma-separated eigenvalues for the n5 family");
    cons->add_option("--n", construct_n, "size for the n5 family (defaults to #eigs)");
    cons->add_option("--theorem5", theorem5, "two Jordan specs")->expected(2);
    cons->add_option("--S", s_file, "explicit conjugator matrix file");
    cons->add_flag("--m9", m9, "emit the nine-dimensional separation example");
    cons->add_option("--field", c.field_line, "field line");
    add_common(cons);

    CLI::App* veri = app.add_subcommand("verify", "run a claim suite and emit a certificate");
    std::vector<std::string> ids = cg::claim_ids();
    ids.push_back("census");
    ids.push_back("all");
    veri->add_option("claim", claim, "claim id, 'census' or 'all'")
        ->required()
        ->check(CLI::IsMember(ids));
    veri->add_option("--seed", vo.seed, "RNG seed recorded in the certificate");
    veri->add_option("--trials", vo_trials, "sample count override");
    veri->add_option("--budget", vo_budget, "distance enumeration budget");
    veri->add_option("--census-budget", vo_census_budget, "census enumeration budget");
    veri->add_flag("--deep", vo.deep, "include the long exhaustive sweeps");
    veri->add_flag("--tamper", vo.tamper, "negative control: corrupt the construction");
    veri->add_option("--n", vo_n, "single-cell size (thm5)");
    veri->add_option("--q", vo_q, "single-cell field order (thm5)");
    veri->add_option("--specA", vo_specA, "single-cell Jordan spec A (thm5)");
    veri->add_option("--specB", vo_specB, "single-cell Jordan spec B (thm5)");
    add_common(veri);

    CLI::App* cens = app.add_subcommand("census", "centralizer classes of M_n(F)");
    cens->add_option("--field", c.field_line, "field line (default GF(2))");
    cens->add_option("--n", census_n, "matrix size");
    cens->add_option("--budget", c.budget, "class enumeration budget");
    cens->add_flag("--diameter", diameter, "append the component diameter report");
    add_common(cens);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (cent->parsed()) return run_centralizer(file_a, c);
        if (stru->parsed()) return run_structure(file_a, c);
        if (dist->parsed()) return run_distance(file_a, file_b, method, c);
        if (cons->parsed())
            return run_construct(c, family, alphas, lambda, eigs, construct_n, theorem5,
                                 s_file, m9);
        if (veri->parsed()) {
            if (vo_trials >= 0) vo.trials = vo_trials;
            if (!vo_budget.empty()) vo.budget = parse_int(vo_budget);
            if (!vo_census_budget.empty()) vo.census_budget = parse_int(vo_census_budget);
            if (vo_n >= 0) vo.n = vo_n;
            if (vo_q > 0) vo.q = vo_q;
            if (!vo_specA.empty()) vo.specA = vo_specA;
            if (!vo_specB.empty()) vo.specB = vo_specB;
            return run_verify(claim, vo, c);
        }
        if (cens->parsed()) return run_census(census_n, diameter, c);
    } catch (const cg::Error& e) {
        std::cerr << e.what() << "\n";
        if (capability_error(e.code)) return 3;
        if (e.code == cg::Err::Internal) return 1;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
