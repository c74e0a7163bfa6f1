#include "commgraph/verify.hpp"

#include <algorithm>
#include <limits>

#include "commgraph/census.hpp"
#include "commgraph/constructions.hpp"
#include "commgraph/m9.hpp"
#include "commgraph/rng.hpp"

namespace cg {

namespace {

json int_json(const Int& v) {
    static const Int lo = Int(std::numeric_limits<long long>::min());
    static const Int hi = Int(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

json poly_json(const Poly& p) {
    json a = json::array();
    for (int i = 0; i <= p.degree(); ++i) a.push_back(p.field().to_string(p.coeff(i)));
    return a;
}

bool unsupported_code(Err c) {
    switch (c) {
    case Err::NonSplitSpectrum:
    case Err::NoEigenvalueInField:
    case Err::InfiniteField:
    case Err::BudgetExceeded:
    case Err::DegenerateParameters:
    case Err::FieldTooSmall:
    case Err::TooLarge:
        return true;
    default:
        return false;
    }
}

json make_cert(const std::string& id, json field, json n, json inputs,
               const std::string& method, json witnesses, const std::string& verdict,
               json counters, std::uint64_t seed) {
    json c;
    c["claim_id"] = id;
    c["field"] = std::move(field);
    c["n"] = std::move(n);
    c["inputs"] = std::move(inputs);
    c["method"] = method;
    c["witnesses"] = std::move(witnesses);
    c["verdict"] = verdict;
    c["counters"] = std::move(counters);
    c["elapsed_ms"] = 0;
    c["seed"] = seed;
    return c;
}

Fe random_element(const Field& f, SplitMix64& rng) {
    if (f.is_finite()) {
        std::uint64_t q = f.order().convert_to<std::uint64_t>();
        return f.element_at(rng.bounded(q));
    }
    return f.from_int(static_cast<long long>(rng.bounded(9)) - 4);
}

Fe random_eigenvalue(const Field& f, SplitMix64& rng) {
    if (f.is_finite()) {
        std::uint64_t q = f.order().convert_to<std::uint64_t>();
        return f.element_at(rng.bounded(std::min<std::uint64_t>(q, 8)));
    }
    return f.from_int(static_cast<long long>(rng.bounded(7)) - 3);
}

Matrix random_invertible(const Field& f, int n, SplitMix64& rng) {
    for (;;) {
        Matrix T(f, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) T.set(i, j, random_element(f, rng));
        if (!f.is_zero(T.det())) return T;
    }
}

std::vector<Fe> random_nonzero_vector(const Field& f, int n, SplitMix64& rng) {
    for (;;) {
        std::vector<Fe> v(n);
        bool nz = false;
        for (int i = 0; i < n; ++i) {
            v[i] = random_element(f, rng);
            nz = nz || !f.is_zero(v[i]);
        }
        if (nz) return v;
    }
}

JordanSpec random_spec(const Field& f, int n, SplitMix64& rng, bool force_repeat) {
    JordanSpec spec;
    int rem = n;
    while (rem > 0) {
        int s = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(rem)));
        spec.blocks.push_back(JordanBlockSpec{random_eigenvalue(f, rng), s});
        rem -= s;
    }
    if (force_repeat) {
        if (spec.blocks.size() == 1) {
            int s = spec.blocks[0].size;
            spec.blocks[0].size = s / 2;
            spec.blocks.push_back(JordanBlockSpec{spec.blocks[0].eigenvalue, s - s / 2});
        } else {
            spec.blocks[1].eigenvalue = spec.blocks[0].eigenvalue;
        }
    }
    return spec;
}

// Conjugated Jordan build: eigenvalues always live in the field, which is
// what the rank-one and path claims assume.
Matrix random_split_matrix(const Field& f, int n, SplitMix64& rng, bool force_repeat) {
    for (;;) {
        Matrix J = build_from_spec(f, random_spec(f, n, rng, force_repeat));
        if (J.is_scalar()) continue;
        Matrix T = random_invertible(f, n, rng);
        return T * J * *T.inverse();
    }
}

bool has_split_spectrum(const Matrix& A) {
    Poly cp = A.char_poly();
    auto roots = poly_roots_in_field(cp);
    int mult = 0;
    for (const auto& r : roots) mult += r.second;
    return mult == cp.degree();
}

std::vector<Field> suite_fields() {
    return {Field::rationals(), Field::finite(2, 1), Field::finite(5, 1), Field::finite(2, 3)};
}

Field field_for_q(std::uint64_t q) {
    require(q >= 2, Err::BadParameters, "q must be at least 2");
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            unsigned k = 0;
            std::uint64_t m = q;
            while (m % p == 0) {
                m /= p;
                ++k;
            }
            require(m == 1, Err::BadParameters, "q must be a prime power");
            return Field::finite(p, k);
        }
    }
    return Field::finite(q, 1);
}

// ---------------------------------------------------------------- lemma 1

json verify_lemma1(const VerifyOptions& o) {
    int trials = o.trials.value_or(10000);
    SplitMix64 root(o.seed);
    json fields = json::array(), counters = json::object(), failures = json::array();
    json samples = json::array();
    for (const Field& f : suite_fields()) {
        SplitMix64 rng = root.split();
        long long done = 0;
        for (int i = 0; i < trials; ++i) {
            int n = 2 + (i % 4);
            Matrix A = random_split_matrix(f, n, rng, false);
            Matrix R = find_commuting_rank_one(A);
            bool good = R.rank() == 1 && A * R == R * A && !R.is_scalar();
            if (!good)
                failures.push_back({{"A", matrix_to_json(A)}, {"R", matrix_to_json(R)}});
            else
                ++done;
            if (i == 0)
                samples.push_back({{"A", matrix_to_json(A)}, {"R", matrix_to_json(R)}});
        }
        fields.push_back(f.spec_line());
        counters[f.spec_line()] = done;
    }
    std::string verdict = failures.empty() ? "verified" : "violated";
    json witnesses;
    witnesses["samples"] = std::move(samples);
    witnesses["failures"] = std::move(failures);
    return make_cert("lemma1", fields, json::array({2, 3, 4, 5}),
                     json{{"trials_per_field", trials}}, "exact", std::move(witnesses),
                     verdict, std::move(counters), o.seed);
}

// ------------------------------------------------------------ corollary 2

json verify_cor2(const VerifyOptions& o) {
    int trials = o.trials.value_or(1000);
    SplitMix64 root(o.seed);
    json fields = json::array(), counters = json::object(), failures = json::array();
    json sample;
    for (const Field& f : suite_fields()) {
        SplitMix64 rng = root.split();
        json hist = json::object();
        long long lengths[5] = {0, 0, 0, 0, 0};
        for (int i = 0; i < trials; ++i) {
            int n = 3 + (i % 3);
            Matrix A = random_split_matrix(f, n, rng, false);
            Matrix B = random_split_matrix(f, n, rng, false);
            if (A == B) continue;
            auto path = path_length4(A, B);
            int len = static_cast<int>(path.size()) - 1;
            bool good = validate_path(path, A, B) && len <= 4;
            if (!good) {
                failures.push_back({{"A", matrix_to_json(A)}, {"B", matrix_to_json(B)}});
                continue;
            }
            ++lengths[len];
            if (sample.is_null()) {
                json pj = json::array();
                for (const auto& m : path) pj.push_back(matrix_to_json(m));
                sample = {{"A", matrix_to_json(A)}, {"B", matrix_to_json(B)}, {"path", pj}};
            }
        }
        for (int l = 0; l <= 4; ++l) hist["length_" + std::to_string(l)] = lengths[l];
        fields.push_back(f.spec_line());
        counters[f.spec_line()] = hist;
    }
    std::string verdict = failures.empty() ? "verified" : "violated";
    json witnesses;
    witnesses["sample"] = std::move(sample);
    witnesses["failures"] = std::move(failures);
    return make_cert("cor2", fields, json::array({3, 4, 5}),
                     json{{"pairs_per_field", trials}}, "exact", std::move(witnesses),
                     verdict, std::move(counters), o.seed);
}

// ---------------------------------------------------------------- lemma 3

json verify_lemma3(const VerifyOptions& o) {
    int trials = o.trials.value_or(1000);
    SplitMix64 root(o.seed);
    std::vector<Field> fields = {Field::rationals(), Field::finite(5, 1)};
    json fj = json::array(), counters = json::object(), failures = json::array();
    for (const Field& f : fields) {
        SplitMix64 rng = root.split();
        long long det_zero = 0, solved = 0;
        for (int k1 = 1; k1 <= 4; ++k1)
            for (int k2 = 1; k2 <= 4; ++k2)
                for (int t = 0; t < trials; ++t) {
                    int k = k1 + k2;
                    std::vector<Fe> a(k), b(k);
                    for (int i = 0; i < k; ++i) {
                        a[i] = random_element(f, rng);
                        b[i] = random_element(f, rng);
                    }
                    Matrix M = lemma3_system(f, k1, k2, a, b);
                    if (!f.is_zero(M.det())) {
                        failures.push_back({{"field", f.spec_line()},
                                            {"k1", k1},
                                            {"k2", k2},
                                            {"system", matrix_to_json(M)}});
                        continue;
                    }
                    ++det_zero;
                    Matrix Z = lemma3_solve(f, k1, k2, a, b);
                    Matrix A = direct_sum(jordan_cell(f, k1, f.zero()),
                                          jordan_cell(f, k2, f.zero()));
                    Matrix R = Matrix::outer(f, a, b);
                    bool good = !Z.is_scalar() && (Z * A).is_zero() && (A * Z).is_zero() &&
                                (Z * R).is_zero() && (R * Z).is_zero();
                    if (!good)
                        failures.push_back({{"field", f.spec_line()},
                                            {"k1", k1},
                                            {"k2", k2},
                                            {"Z", matrix_to_json(Z)}});
                    else
                        ++solved;
                }
        fj.push_back(f.spec_line());
        counters[f.spec_line()] = {{"det_zero", det_zero}, {"solved", solved}};
    }
    // Pinned instance: k1 = 2, k2 = 1, a = b = e1 solves to the (3,2) unit.
    Field Q = Field::rationals();
    std::vector<Fe> e1 = {Q.one(), Q.zero(), Q.zero()};
    Matrix Zpin = lemma3_solve(Q, 2, 1, e1, e1);
    bool pin_ok = Zpin == Matrix::unit(Q, 3, 2, 1);
    if (!pin_ok) failures.push_back({{"pinned", matrix_to_json(Zpin)}});
    std::string verdict = failures.empty() ? "verified" : "violated";
    json witnesses;
    witnesses["pinned_corner"] = matrix_to_json(Zpin);
    witnesses["failures"] = std::move(failures);
    return make_cert("lemma3", fj, json::array({2, 3, 4, 5, 6, 7, 8}),
                     json{{"trials_per_shape", trials}, {"k1_max", 4}, {"k2_max", 4}},
                     "exact", std::move(witnesses), verdict, std::move(counters), o.seed);
}

// ---------------------------------------------------------------- lemma 4

json verify_lemma4(const VerifyOptions& o) {
    SplitMix64 root(o.seed);
    json counters = json::object(), failures = json::array();
    json sample;

    auto sweep = [&](int n) -> json {
        Field f = Field::finite(2, 1);
        std::uint64_t total = 1ull << (n * n);
        long long eligible = 0, nonsplit = 0, pairs = 0, materialized = 0;
        std::vector<std::vector<Fe>> nz;
        for (std::uint64_t m = 1; m < (1ull << n); ++m) {
            std::vector<Fe> v(n);
            for (int i = 0; i < n; ++i) v[i] = ((m >> i) & 1) ? f.one() : f.zero();
            nz.push_back(std::move(v));
        }
        for (std::uint64_t t = 0; t < total; ++t) {
            Matrix A(f, n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if ((t >> (i * n + j)) & 1) A.set(i, j, f.one());
            if (A.is_scalar() || is_minimal(A)) continue;
            std::optional<CornerWitnessContext> ctx;
            try {
                ctx = corner_witness_context(A);
            } catch (const Error& e) {
                if (e.code == Err::NonSplitSpectrum) {
                    ++nonsplit;
                    continue;
                }
                throw;
            }
            ++eligible;
            for (const auto& u : nz)
                for (const auto& v : nz) {
                    ++pairs;
                    if (!lemma4_witness_exists(*ctx, u, v)) {
                        failures.push_back({{"A", matrix_to_json(A)},
                                            {"R", matrix_to_json(Matrix::outer(f, u, v))}});
                        continue;
                    }
                    if (n == 3 || pairs % 97 == 0) {
                        Matrix Z = lemma4_witness(*ctx, Matrix::outer(f, u, v));
                        ++materialized;
                        if (sample.is_null())
                            sample = {{"A", matrix_to_json(A)},
                                      {"R", matrix_to_json(Matrix::outer(f, u, v))},
                                      {"Z", matrix_to_json(Z)}};
                    }
                }
        }
        return json{{"matrices", static_cast<long long>(total)},
                    {"eligible", eligible},
                    {"nonsplit_skipped", nonsplit},
                    {"pairs", pairs},
                    {"materialized", materialized}};
    };

    counters["exhaustive_gf2_n3"] = sweep(3);
    if (o.deep) counters["exhaustive_gf2_n4"] = sweep(4);

    int trials = o.trials.value_or(200);
    struct RandomCase {
        Field f;
        int n;
    };
    std::vector<RandomCase> cases = {{Field::finite(3, 1), 4},
                                     {Field::finite(5, 1), 3},
                                     {Field::rationals(), 4}};
    json random_counts = json::object();
    for (const auto& c : cases) {
        SplitMix64 rng = root.split();
        long long done = 0;
        for (int t = 0; t < trials; ++t) {
            Matrix A = random_split_matrix(c.f, c.n, rng, true);
            std::vector<Fe> u = random_nonzero_vector(c.f, c.n, rng);
            std::vector<Fe> v = random_nonzero_vector(c.f, c.n, rng);
            Matrix R = Matrix::outer(c.f, u, v);
            Matrix Z = lemma4_witness(A, R);
            bool good = !Z.is_scalar() && Z * A == A * Z && Z * R == R * Z;
            if (!good)
                failures.push_back({{"A", matrix_to_json(A)}, {"R", matrix_to_json(R)}});
            else
                ++done;
        }
        random_counts[c.f.spec_line() + " n=" + std::to_string(c.n)] = done;
    }
    counters["random"] = std::move(random_counts);

    std::string verdict = failures.empty() ? "verified" : "violated";
    json witnesses;
    witnesses["sample"] = std::move(sample);
    witnesses["failures"] = std::move(failures);
    return make_cert("lemma4", "field gf 2 1", o.deep ? json::array({3, 4}) : json::array({3}),
                     json{{"deep", o.deep}, {"random_trials", trials}}, "exhaustive",
                     std::move(witnesses), verdict, std::move(counters), o.seed);
}

// -------------------------------------------------------------- theorem 5

json thm5_cell(const Field& f, const JordanSpec& sa, const JordanSpec& sb, bool tamper,
               const std::optional<Int>& budget, std::string& status) {
    json row;
    row["field"] = f.spec_line();
    row["n"] = sa.total_size();
    row["specA"] = jordan_spec_to_string(f, sa);
    row["specB"] = jordan_spec_to_string(f, tamper ? sa : sb);
    try {
        // Tampered cells keep the identity conjugator and reuse specA, so the
        // pair collapses to distance zero and the verdict must flip.
        Matrix A = build_from_spec(f, sa);
        Matrix Bprime = A;
        if (!tamper) {
            Theorem5Instance inst = theorem5_instance(f, sa, sb);
            A = inst.A;
            Bprime = inst.Bprime;
        }
        DistanceResult le3 = budget ? distance_le3_finite(A, Bprime, *budget)
                                    : distance_le3_finite(A, Bprime);
        int d = -1;
        switch (le3.verdict) {
        case Verdict::d0: d = 0; break;
        case Verdict::d1: d = 1; break;
        case Verdict::d2: d = 2; break;
        case Verdict::d3: d = 3; break;
        default: {
            require(le3.lower_bound >= 4, Err::Internal, "exhaustion must bound from below");
            auto path = path_length4(A, Bprime);
            require(validate_path(path, A, Bprime), Err::Internal,
                    "length-4 path must validate");
            d = static_cast<int>(path.size()) - 1;
            require(d == 4, Err::Internal,
                    "a shorter path would contradict the exhaustion bound");
            json pj = json::array();
            for (const auto& m : path) pj.push_back(matrix_to_json(m));
            row["path"] = std::move(pj);
            break;
        }
        }
        row["distance"] = d;
        status = (d == 4) ? "verified" : "violated";
    } catch (const Error& e) {
        if (!unsupported_code(e.code)) throw;
        status = "unsupported";
        row["error"] = err_name(e.code);
        row["message"] = e.what();
    }
    return row;
}

json verify_thm5(const VerifyOptions& o) {
    json cells = json::array();
    long long verified = 0, unsupported = 0, violated = 0;

    auto run_cell = [&](const Field& f, const JordanSpec& sa, const JordanSpec& sb) {
        std::string status;
        json row = thm5_cell(f, sa, sb, o.tamper, o.budget, status);
        row["status"] = status;
        if (status == "verified") ++verified;
        else if (status == "unsupported") ++unsupported;
        else ++violated;
        cells.push_back(std::move(row));
    };

    json fields = json::array(), ns = json::array(), inputs;
    if (o.n || o.q || o.specA) {
        require(o.n && o.q && o.specA, Err::ParseError,
                "single-cell thm5 needs --n, --q and --specA");
        require(o.tamper || o.specB, Err::ParseError,
                "single-cell thm5 needs --specB unless tampering");
        Field f = field_for_q(*o.q);
        JordanSpec sa = parse_jordan_spec(f, *o.specA);
        require(sa.total_size() == *o.n, Err::ParseError, "specA size must match --n");
        JordanSpec sb = o.tamper ? sa : parse_jordan_spec(f, *o.specB);
        require(sb.total_size() == *o.n, Err::ParseError, "specB size must match --n");
        run_cell(f, sa, sb);
        fields.push_back(f.spec_line());
        ns.push_back(*o.n);
        inputs = json{{"n", *o.n}, {"q", *o.q}, {"specA", *o.specA},
                      {"specB", o.specB ? json(*o.specB) : json()}, {"tamper", o.tamper}};
    } else {
        std::vector<std::uint64_t> qs = {5, 7};
        std::map<int, std::vector<std::string>> grid = {
            {3, {"3:0", "2:0,1:1", "1:0,1:1,1:2"}},
            {4, {"4:0", "3:0,1:1", "2:0,2:1", "2:0,1:1,1:2", "1:0,1:1,1:2,1:3"}}};
        for (std::uint64_t q : qs) {
            Field f = field_for_q(q);
            fields.push_back(f.spec_line());
            for (const auto& [n, specs] : grid) {
                for (const auto& ta : specs)
                    for (const auto& tb : specs)
                        run_cell(f, parse_jordan_spec(f, ta), parse_jordan_spec(f, tb));
            }
        }
        ns = json::array({3, 4});
        inputs = json{{"grid_q", {5, 7}}, {"grid_n", {3, 4}}, {"tamper", o.tamper}};
    }

    std::string verdict;
    if (violated > 0) verdict = "violated";
    else if (verified > 0) verdict = "verified";
    else verdict = "unsupported";
    json counters{{"cells", static_cast<long long>(cells.size())},
                  {"verified", verified},
                  {"unsupported", unsupported},
                  {"violated", violated}};
    json witnesses;
    witnesses["cells"] = std::move(cells);
    return make_cert("thm5", std::move(fields), std::move(ns), std::move(inputs),
                     "exhaustive", std::move(witnesses), verdict, std::move(counters),
                     o.seed);
}

// -------------------------------------------------------------- theorem 6

json verify_thm6(const VerifyOptions& o) {
    json fields = json::array(), counters = json::object(), failures = json::array();
    json sample;
    auto expect_d4 = [&](const Matrix& X1, const Matrix& X2, const std::vector<Matrix>& path,
                         const std::string& tag) {
        DistanceResult le3 = o.budget ? distance_le3_finite(X1, X2, *o.budget)
                                      : distance_le3_finite(X1, X2);
        bool far = le3.verdict == Verdict::unknown && le3.lower_bound >= 4;
        bool near = validate_path(path, X1, X2) && path.size() == 5;
        if (!(far && near))
            failures.push_back({{"pair", tag},
                                {"le3", verdict_name(le3.verdict)},
                                {"path_ok", near}});
        return far && near;
    };
    auto expect_d2 = [&](const FamilyInstance& inst, const std::string& tag) {
        const Matrix& Z = inst.aux.at("Z");
        DistanceResult le2 = distance_le2(inst.X, Z);
        if (le2.verdict != Verdict::d2)
            failures.push_back({{"pair", tag}, {"le2", verdict_name(le2.verdict)}});
        return le2.verdict == Verdict::d2;
    };

    for (std::uint64_t q : {5ull, 7ull}) {
        Field f = field_for_q(q);
        fields.push_back(f.spec_line());
        long long pairs = 0, shorts = 0;

        std::vector<FamilyInstance> f3;
        for (std::uint64_t a : {0ull, 1ull, 2ull}) f3.push_back(family_n3(f, f.element_at(a)));
        std::vector<FamilyInstance> f4;
        for (std::uint64_t a : {1ull, 2ull, 3ull})
            f4.push_back(family_n4(f, f.element_at(a), f.element_at(2)));
        std::vector<Fe> alphas = {f.element_at(0), f.element_at(1), f.element_at(2)};
        std::vector<Fe> eigs;
        for (std::uint64_t i = 0; i < 5; ++i) eigs.push_back(f.element_at(i));
        std::vector<FamilyInstance> f5 = family_n5plus_set(f, 5, alphas, eigs);

        auto pair_path = [](const FamilyInstance& a, const FamilyInstance& b) {
            return std::vector<Matrix>{a.X, a.aux.at("hub"), a.aux.at("Z"), b.aux.at("hub"),
                                       b.X};
        };
        for (const auto* fam : {&f3, &f4, &f5}) {
            for (std::size_t i = 0; i < fam->size(); ++i) {
                std::string tag = f.spec_line() + " n=" + std::to_string((*fam)[i].n);
                if (expect_d2((*fam)[i], tag + " alpha#" + std::to_string(i))) ++shorts;
                for (std::size_t j = i + 1; j < fam->size(); ++j) {
                    std::string ptag = tag + " pair " + std::to_string(i) + "," +
                                       std::to_string(j);
                    auto path = pair_path((*fam)[i], (*fam)[j]);
                    if (expect_d4((*fam)[i].X, (*fam)[j].X, path, ptag)) ++pairs;
                    if (sample.is_null()) {
                        json pj = json::array();
                        for (const auto& m : path) pj.push_back(matrix_to_json(m));
                        sample = {{"pair", ptag}, {"path", pj}};
                    }
                }
            }
        }
        counters[f.spec_line()] = {{"distance4_pairs", pairs}, {"distance2_links", shorts}};
    }
    std::string verdict = failures.empty() ? "verified" : "violated";
    json witnesses;
    witnesses["sample"] = std::move(sample);
    witnesses["failures"] = std::move(failures);
    return make_cert("thm6", std::move(fields), json::array({3, 4, 5}),
                     json{{"alphas_n3", {0, 1, 2}},
                          {"alphas_n4", {1, 2, 3}},
                          {"lambda_n4", 2},
                          {"alphas_n5", {0, 1, 2}}},
                     "exhaustive", std::move(witnesses), verdict, std::move(counters),
                     o.seed);
}

// ---------------------------------------------------------------- lemma 7

json verify_lemma7(const VerifyOptions& o) {
    Field Q = Field::rationals();
    SplitMix64 rng(o.seed);
    json counters = json::object(), failures = json::array();
    json sample;
    long long instances = 0;

    auto check = [&](const Matrix& A, const std::string& tag) {
        Matrix X = lemma7_witness(A);
        int dim = centralizer(A).space.intersect(centralizer(X).space).dim();
        bool good = dim == 1 && A * X != X * A && !is_minimal(X);
        if (!good)
            failures.push_back({{"case", tag}, {"A", matrix_to_json(A)}, {"dim", dim}});
        else
            ++instances;
        if (sample.is_null())
            sample = {{"case", tag}, {"A", matrix_to_json(A)}, {"X", matrix_to_json(X)}};
    };
    auto conjugated = [&](const JordanSpec& spec, int n) {
        Matrix J = build_from_spec(Q, spec);
        Matrix T = random_invertible(Q, n, rng);
        return T * J * *T.inverse();
    };

    for (int n : {4, 5, 6}) {
        Fe z = Q.zero(), one = Q.one();
        for (int k = 2; 2 * k <= n; ++k) {
            JordanSpec s;
            for (int i = 0; i < k; ++i) s.blocks.push_back({z, 2});
            for (int i = 0; i < n - 2 * k; ++i) s.blocks.push_back({z, 1});
            check(conjugated(s, n), "square_zero n=" + std::to_string(n) +
                                        " k=" + std::to_string(k));
        }
        for (int k = 2; k <= n - 2; ++k) {
            JordanSpec s;
            for (int i = 0; i < k; ++i) s.blocks.push_back({one, 1});
            for (int i = 0; i < n - k; ++i) s.blocks.push_back({z, 1});
            check(conjugated(s, n), "idempotent n=" + std::to_string(n) +
                                        " k=" + std::to_string(k));
        }
        for (int k2 = 0; 3 + 2 * k2 <= n; ++k2) {
            JordanSpec s;
            s.blocks.push_back({z, 3});
            for (int i = 0; i < k2; ++i) s.blocks.push_back({z, 2});
            for (int i = 0; i < n - 3 - 2 * k2; ++i) s.blocks.push_back({z, 1});
            check(conjugated(s, n), "cube_zero n=" + std::to_string(n) +
                                        " k2=" + std::to_string(k2));
        }
        {
            // split quadratic minimal polynomial, both eigenvalue multiplicities >= 2
            JordanSpec s;
            Fe a = Q.from_int(7), b = Q.from_int(3);
            s.blocks.push_back({a, 1});
            s.blocks.push_back({a, 1});
            for (int i = 0; i < n - 2; ++i) s.blocks.push_back({b, 1});
            check(conjugated(s, n), "affine_idempotent n=" + std::to_string(n));
        }
        {
            // double root: A - 5I is square-zero of rank 2
            JordanSpec s;
            Fe lam = Q.from_int(5);
            s.blocks.push_back({lam, 2});
            s.blocks.push_back({lam, 2});
            for (int i = 0; i < n - 4; ++i) s.blocks.push_back({lam, 1});
            check(conjugated(s, n), "affine_square_zero n=" + std::to_string(n));
        }
    }

    // Class guards: inputs outside the lemma's reach are rejected, not
    // silently accepted.
    long long rejections = 0;
    auto expect_reject = [&](const Matrix& A, Err want, const std::string& tag) {
        try {
            lemma7_witness(A);
            failures.push_back({{"case", tag}, {"error", "accepted"}});
        } catch (const Error& e) {
            if (e.code == want) ++rejections;
            else failures.push_back({{"case", tag}, {"error", err_name(e.code)}});
        }
    };
    {
        JordanSpec s{{{Q.zero(), 2}, {Q.zero(), 1}, {Q.zero(), 1}}};
        expect_reject(build_from_spec(Q, s), Err::WrongClass, "square_zero rank 1");
        JordanSpec sm{{{Q.zero(), 4}}};
        expect_reject(build_from_spec(Q, sm), Err::WrongClass, "minimal nilpotent");
        JordanSpec si{{{Q.one(), 1}, {Q.zero(), 1}, {Q.zero(), 1}, {Q.zero(), 1}}};
        expect_reject(build_from_spec(Q, si), Err::WrongClass, "idempotent rank 1");
    }

    counters["instances"] = instances;
    counters["expected_rejections"] = rejections;
    std::string verdict = (failures.empty() && rejections == 3) ? "verified" : "violated";
    json witnesses;
    witnesses["sample"] = std::move(sample);
    witnesses["failures"] = std::move(failures);
    return make_cert("lemma7", "field Q", json::array({4, 5, 6}),
                     json{{"cases", "square_zero, idempotent, cube_zero, affine"}}, "exact",
                     std::move(witnesses), verdict, std::move(counters), o.seed);
}

// -------------------------------------------- census data for theorems 8, 9

struct CensusData {
    CensusGraph g;
    std::vector<std::vector<int>> dist;
    std::vector<bool> minimal, rk1eq, split;
};

CensusData census_m3f2(const std::optional<Int>& budget) {
    Field f = Field::finite(2, 1);
    CensusGraph g = budget ? census_build(f, 3, *budget) : census_build(f, 3);
    int C = static_cast<int>(g.classes().size());
    CensusData d{std::move(g), {}, {}, {}, {}};
    d.dist.reserve(C);
    for (int i = 0; i < C; ++i) d.dist.push_back(census_bfs(d.g, i));
    d.minimal.resize(C);
    d.rk1eq.resize(C);
    d.split.resize(C);
    for (int i = 0; i < C; ++i) {
        const Matrix& rep = d.g.classes()[i].rep;
        d.minimal[i] = is_minimal(rep);
        d.rk1eq[i] = is_rank_one_equivalent(rep);
        d.split[i] = has_split_spectrum(rep);
    }
    return d;
}

// -------------------------------------------------------------- theorem 8

json verify_thm8(const VerifyOptions& o) {
    CensusData cd = census_m3f2(o.census_budget);
    int C = static_cast<int>(cd.g.classes().size());
    json discrepancies = json::array();
    long long forward_pairs = 0, converse_classes = 0;

    // rank-one-equivalent R reaches every nonminimal X within two steps
    for (int i = 0; i < C; ++i) {
        if (!cd.rk1eq[i]) continue;
        for (int j = 0; j < C; ++j) {
            if (j == i || cd.minimal[j]) continue;
            ++forward_pairs;
            int d = cd.dist[i][j];
            if (d == -1 || d > 2)
                discrepancies.push_back({{"direction", "forward"},
                                         {"R_class", i},
                                         {"X_class", j},
                                         {"distance", d},
                                         {"split_R", static_cast<bool>(cd.split[i])},
                                         {"split_X", static_cast<bool>(cd.split[j])}});
        }
    }
    // non-rank-one-equivalent R is far from some nonminimal X
    for (int i = 0; i < C; ++i) {
        if (cd.rk1eq[i]) continue;
        ++converse_classes;
        bool found_far = false;
        for (int j = 0; j < C && !found_far; ++j) {
            if (cd.minimal[j]) continue;
            int d = cd.dist[i][j];
            if (d == -1 || d >= 3) found_far = true;
        }
        if (!found_far)
            discrepancies.push_back({{"direction", "converse"},
                                     {"R_class", i},
                                     {"split_R", static_cast<bool>(cd.split[i])}});
    }

    bool unexplained = false;
    for (const auto& row : discrepancies) {
        bool nonsplit = (row.contains("split_R") && !row["split_R"].get<bool>()) ||
                        (row.contains("split_X") && !row["split_X"].get<bool>());
        if (!nonsplit) unexplained = true;
    }
    std::string verdict = unexplained ? "violated" : "verified";
    json counters{{"classes", C},
                  {"forward_pairs", forward_pairs},
                  {"converse_classes", converse_classes},
                  {"discrepancies", static_cast<long long>(discrepancies.size())}};
    json witnesses;
    witnesses["discrepancies"] = std::move(discrepancies);
    witnesses["note"] = "discrepancy rows flag non-split spectra; the classification "
                        "assumes an algebraically closed field";
    return make_cert("thm8", "field gf 2 1", 3, json{{"census", "M_3(F_2)"}}, "census",
                     std::move(witnesses), verdict, std::move(counters), o.seed);
}

// -------------------------------------------------------------- theorem 9

json verify_thm9(const VerifyOptions& o) {
    CensusData cd = census_m3f2(o.census_budget);
    DiameterReport dr = census_diameter(cd.g);
    int C = static_cast<int>(cd.g.classes().size());
    json discrepancies = json::array();
    long long ecc4_classes = 0, minimal_classes = 0;

    for (int i = 0; i < C; ++i) {
        int ecc = dr.class_eccentricity[i];
        if (ecc >= 4) {
            ++ecc4_classes;
            if (!cd.minimal[i])
                discrepancies.push_back({{"direction", "ecc4_implies_minimal"},
                                         {"class", i},
                                         {"eccentricity", ecc},
                                         {"split", static_cast<bool>(cd.split[i])}});
        }
        if (cd.minimal[i]) {
            ++minimal_classes;
            // minimal vertices see some partner at distance exactly four
            if (ecc < 4)
                discrepancies.push_back({{"direction", "minimal_implies_d4_partner"},
                                         {"class", i},
                                         {"eccentricity", ecc},
                                         {"split", static_cast<bool>(cd.split[i])}});
        }
    }

    bool unexplained = false;
    for (const auto& row : discrepancies)
        if (row["split"].get<bool>()) unexplained = true;
    std::string verdict = unexplained ? "violated" : "verified";

    json components = json::array();
    for (const auto& comp : dr.components)
        components.push_back({{"classes", comp.class_count},
                              {"vertices", comp.vertex_count},
                              {"diameter", comp.diameter}});
    json counters{{"classes", C},
                  {"components", cd.g.components()},
                  {"ecc4_classes", ecc4_classes},
                  {"minimal_classes", minimal_classes},
                  {"discrepancies", static_cast<long long>(discrepancies.size())}};
    counters["component_summary"] = std::move(components);
    json witnesses;
    witnesses["discrepancies"] = std::move(discrepancies);
    witnesses["note"] = "isolated field-type classes have no distance-four partner over "
                        "F_2; their rows carry split=false";
    return make_cert("thm9", "field gf 2 1", 3, json{{"census", "M_3(F_2)"}}, "census",
                     std::move(witnesses), verdict, std::move(counters), o.seed);
}

// --------------------------------------------------------------- lemma 10

json verify_lemma10(const VerifyOptions& o) {
    SplitMix64 rng(o.seed);
    json cases = json::array(), failures = json::array();

    auto run_case = [&](const std::string& name, const Matrix& B, const Matrix& X,
                        const Matrix& Y, bool expect_lift) {
        json row;
        row["case"] = name;
        row["field"] = B.field().spec_line();
        try {
            InterpolationResult r = lemma10_interpolate(B, X, Y);
            const Field& rf = r.M.field();
            bool good = r.lifted == expect_lift && is_minimal(r.M) &&
                        r.M * r.X == r.X * r.M && r.M * r.Y == r.Y * r.M && r.M != r.X &&
                        r.M != r.Y;
            row["lifted"] = r.lifted;
            row["result_field"] = rf.spec_line();
            json nus = json::array();
            for (const auto& nu : r.nus) nus.push_back(rf.to_string(nu));
            row["nus"] = std::move(nus);
            row["M"] = matrix_to_json(r.M);
            if (!good) failures.push_back(row);
        } catch (const Error& e) {
            row["error"] = err_name(e.code);
            failures.push_back(row);
        }
        cases.push_back(row);
    };

    {
        Field f = Field::finite(7, 1);
        Matrix B = Matrix::diagonal(f, {f.from_int(1), f.from_int(2), f.from_int(3)});
        Matrix X = Matrix::diagonal(f, {f.from_int(5), f.from_int(5), f.from_int(6)});
        Matrix Y = direct_sum(jordan_cell(f, 2, f.zero()), Matrix::scalar(f, 1, f.one()));
        run_case("gf7_pinned", B, X, Y, false);
    }
    {
        Field Q = Field::rationals();
        Matrix B = Matrix::diagonal(
            Q, {Q.from_int(0), Q.from_int(1), Q.from_int(2), Q.from_int(3)});
        Matrix X = Matrix::diagonal(
            Q, {Q.from_int(7), Q.from_int(7), Q.from_int(9), Q.from_int(9)});
        Matrix Y = direct_sum(jordan_cell(Q, 2, Q.from_int(3)),
                              Matrix::diagonal(Q, {Q.from_int(4), Q.from_int(5)}));
        Matrix T = random_invertible(Q, 4, rng);
        Matrix Ti = *T.inverse();
        run_case("rational_conjugated", T * B * Ti, T * X * Ti, T * Y * Ti, false);
    }
    {
        Field f = Field::finite(2, 1);
        Matrix B = Matrix::diagonal(f, {f.zero(), f.one()});
        Matrix X = Matrix::diagonal(f, {f.one(), f.zero()});
        Matrix Y = Matrix::diagonal(f, {f.zero(), f.one()});
        run_case("gf2_lift_to_gf4", B, X, Y, true);
    }
    {
        Field f = Field::finite(3, 1);
        Matrix B = Matrix::diagonal(f, {f.from_int(0), f.from_int(1), f.from_int(2)});
        Matrix X = Matrix::diagonal(f, {f.zero(), f.zero(), f.one()});
        Matrix Y = direct_sum(jordan_cell(f, 2, f.one()), Matrix::scalar(f, 1, f.from_int(2)));
        run_case("gf3_lift_to_gf9", B, X, Y, true);
    }
    // rejected inputs keep the precondition honest
    long long rejections = 0;
    {
        Field f = Field::finite(7, 1);
        Matrix B = direct_sum(jordan_cell(f, 2, f.zero()), Matrix::scalar(f, 1, f.one()));
        Matrix X = Matrix::diagonal(f, {f.one(), f.one(), f.zero()});
        try {
            lemma10_interpolate(B, X, X);
        } catch (const Error& e) {
            if (e.code == Err::NotSemisimpleMinimal) ++rejections;
        }
    }

    std::string verdict = (failures.empty() && rejections == 1) ? "verified" : "violated";
    json counters{{"cases", static_cast<long long>(cases.size())},
                  {"expected_rejections", rejections}};
    json witnesses;
    witnesses["cases"] = std::move(cases);
    witnesses["failures"] = std::move(failures);
    return make_cert("lemma10",
                     json::array({"field gf 7 1", "field Q", "field gf 2 1", "field gf 3 1"}),
                     json::array({2, 3, 4}), json{{"lift_rule", "q >= s + 2"}}, "exact",
                     std::move(witnesses), verdict, std::move(counters), o.seed);
}

// --------------------------------------------------------------- lemma 11

json verify_lemma11(const VerifyOptions& o) {
    json cases = json::array(), failures = json::array();

    auto run_case = [&](const std::string& name, const Matrix& B, int n1) {
        const Field& f = B.field();
        int n = B.rows();
        json row;
        row["case"] = name;
        row["field"] = f.spec_line();
        try {
            ObstructionPair p = lemma11_witness(B);
            int kk = (n1 == 2) ? 3 : 2;
            bool good = p.X == Matrix::unit(f, n, 0, n1 - 1) &&
                        p.Y == Matrix::unit(f, n, 0, kk - 1) && p.X * p.Y == p.Y * p.X &&
                        p.X * B == B * p.X;
            row["X"] = matrix_to_json(p.X);
            row["Y"] = matrix_to_json(p.Y);
            if (p.searched) {
                row["searched"] = int_json(*p.searched);
                good = good && *p.searched > 0;
            } else {
                row["searched"] = nullptr;
            }
            if (!good) failures.push_back(row);
        } catch (const Error& e) {
            row["error"] = err_name(e.code);
            failures.push_back(row);
        }
        cases.push_back(row);
    };

    {
        Field f = Field::finite(2, 1);
        run_case("gf2_n3",
                 direct_sum(jordan_cell(f, 2, f.zero()), Matrix::scalar(f, 1, f.one())), 2);
        run_case("gf2_n4", direct_sum(jordan_cell(f, 2, f.zero()), jordan_cell(f, 2, f.one())),
                 2);
    }
    {
        Field f = Field::finite(3, 1);
        run_case("gf3_n3",
                 direct_sum(jordan_cell(f, 2, f.zero()), Matrix::scalar(f, 1, f.from_int(2))),
                 2);
    }
    {
        Field Q = Field::rationals();
        run_case("rational_n3", jordan_cell(Q, 3, Q.zero()), 3);
    }

    long long rejections = 0;
    {
        Field f = Field::finite(2, 1);
        try {
            lemma11_witness(Matrix::diagonal(f, {f.zero(), f.one(), f.one()}));
        } catch (const Error& e) {
            if (e.code == Err::SemisimpleInput) ++rejections;
        }
        try {
            lemma11_witness(direct_sum(jordan_cell(f, 2, f.zero()),
                                       Matrix::scalar(f, 1, f.zero())));
        } catch (const Error& e) {
            if (e.code == Err::MinimalInput) ++rejections;
        }
    }

    std::string verdict = (failures.empty() && rejections == 2) ? "verified" : "violated";
    json counters{{"cases", static_cast<long long>(cases.size())},
                  {"expected_rejections", rejections}};
    json witnesses;
    witnesses["cases"] = std::move(cases);
    witnesses["failures"] = std::move(failures);
    return make_cert("lemma11",
                     json::array({"field gf 2 1", "field gf 3 1", "field Q"}),
                     json::array({3, 4}), json{{"enumeration", "C(X) meet C(Y)"}},
                     "exhaustive", std::move(witnesses), verdict, std::move(counters),
                     o.seed);
}

// -------------------------------------------------------------------- m9

json verify_m9(const VerifyOptions& o) {
    M9Certificate c = m9_certificate();
    json witnesses;
    witnesses["modulus"] = poly_json(c.m);
    witnesses["p_bits"] = c.p_bits;
    witnesses["A_hat"] = matrix_to_json(c.A_hat);
    witnesses["Y_hat"] = matrix_to_json(c.Y_hat);
    witnesses["S1"] = matrix_to_json(c.S1);
    witnesses["A"] = matrix_to_json(c.A);
    witnesses["V"] = matrix_to_json(c.V);
    witnesses["N"] = matrix_to_json(c.N);
    witnesses["B"] = matrix_to_json(c.B);
    witnesses["Vp"] = matrix_to_json(c.Vp);
    json counters{{"algebra_size", int_json(c.algebra_size)},
                  {"centralizer_dim", c.centralizer_dim},
                  {"subfield_centralizer_dim", c.subfield_centralizer_dim},
                  {"scalar_count", c.scalar_count},
                  {"subfield_nonscalar_count", c.subfield_nonscalar_count},
                  {"full_count", c.full_count},
                  {"dim_CA_CB", c.dim_CA_CB},
                  {"dim_CV_CB", c.dim_CV_CB},
                  {"dim_CA_CVp", c.dim_CA_CVp},
                  {"intersection_dim", c.intersection_dim}};
    return make_cert("m9", "field gf 2 1", 9, json{{"modulus", "1+x^2+x^4+x^8+x^9"}},
                     "exhaustive", std::move(witnesses), "verified", std::move(counters),
                     o.seed);
}

} // namespace

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids = {"lemma1", "cor2",   "lemma3", "lemma4",
                                                 "thm5",   "thm6",   "lemma7", "thm8",
                                                 "thm9",   "lemma10", "lemma11", "m9"};
    return ids;
}

json verify_claim(const std::string& claim_id, const VerifyOptions& opts) {
    try {
        if (claim_id == "lemma1") return verify_lemma1(opts);
        if (claim_id == "cor2") return verify_cor2(opts);
        if (claim_id == "lemma3") return verify_lemma3(opts);
        if (claim_id == "lemma4") return verify_lemma4(opts);
        if (claim_id == "thm5") return verify_thm5(opts);
        if (claim_id == "thm6") return verify_thm6(opts);
        if (claim_id == "lemma7") return verify_lemma7(opts);
        if (claim_id == "thm8") return verify_thm8(opts);
        if (claim_id == "thm9") return verify_thm9(opts);
        if (claim_id == "lemma10") return verify_lemma10(opts);
        if (claim_id == "lemma11") return verify_lemma11(opts);
        if (claim_id == "m9") return verify_m9(opts);
        if (claim_id == "census") return verify_census(opts);
    } catch (const Error& e) {
        if (unsupported_code(e.code))
            return make_cert(claim_id, nullptr, nullptr, json::object(), "exact",
                             json{{"error", err_name(e.code)}, {"message", e.what()}},
                             "unsupported", json::object(), opts.seed);
        if (e.code == Err::Internal)
            return make_cert(claim_id, nullptr, nullptr, json::object(), "exact",
                             json{{"error", err_name(e.code)}, {"message", e.what()}},
                             "violated", json::object(), opts.seed);
        throw;
    }
    fail(Err::ParseError, "unknown claim id: " + claim_id);
}

json verify_all(const VerifyOptions& opts) {
    json claims = json::array();
    bool all = true;
    for (const auto& id : claim_ids()) {
        json c = verify_claim(id, opts);
        all = all && c["verdict"] == "verified";
        claims.push_back(std::move(c));
    }
    json out;
    out["claims"] = std::move(claims);
    out["all_verified"] = all;
    return out;
}

json verify_census(const VerifyOptions& opts) {
    Field f = Field::finite(2, 1);
    CensusGraph g = opts.census_budget ? census_build(f, 3, *opts.census_budget)
                                       : census_build(f, 3);
    int C = static_cast<int>(g.classes().size());
    std::vector<std::vector<int>> dist;
    dist.reserve(C);
    for (int i = 0; i < C; ++i) dist.push_back(census_bfs(g, i));

    long long pairs = 0, le2_decided = 0, le3_decided = 0, far = 0;
    json disagreements = json::array();
    for (int i = 0; i < C; ++i) {
        const Matrix& A = g.classes()[i].rep;
        for (int j = i + 1; j < C; ++j) {
            const Matrix& B = g.classes()[j].rep;
            ++pairs;
            int direct; // 4 encodes "at least four"
            DistanceResult le2 = distance_le2(A, B);
            if (le2.verdict == Verdict::d1 || le2.verdict == Verdict::d2) {
                direct = le2.verdict == Verdict::d1 ? 1 : 2;
                ++le2_decided;
            } else {
                DistanceResult le3 = opts.budget ? distance_le3_finite(A, B, *opts.budget)
                                                 : distance_le3_finite(A, B);
                switch (le3.verdict) {
                case Verdict::d0: direct = 0; break;
                case Verdict::d1: direct = 1; break;
                case Verdict::d2: direct = 2; break;
                case Verdict::d3:
                    direct = 3;
                    ++le3_decided;
                    break;
                default:
                    require(le3.lower_bound >= 4, Err::Internal,
                            "le3 exhaustion must bound from below");
                    direct = 4;
                    ++far;
                    break;
                }
            }
            int bd = dist[i][j];
            int quotient = (bd == -1 || bd >= 4) ? 4 : bd;
            if (direct != quotient)
                disagreements.push_back({{"class_a", i},
                                         {"class_b", j},
                                         {"census", bd},
                                         {"direct", direct}});
        }
    }
    std::string verdict = disagreements.empty() ? "verified" : "violated";
    json counters{{"classes", C},
                  {"pairs", pairs},
                  {"le2_decided", le2_decided},
                  {"le3_decided", le3_decided},
                  {"distance_ge4_or_unreachable", far},
                  {"disagreements", static_cast<long long>(disagreements.size())}};
    json witnesses;
    witnesses["disagreements"] = std::move(disagreements);
    return make_cert("census", "field gf 2 1", 3, json{{"pairs", "all inequivalent classes"}},
                     "census", std::move(witnesses), verdict, std::move(counters), opts.seed);
}

} // namespace cg
