#include "omframe/cli/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "omframe/cli/parse.hpp"
#include "omframe/equivariant.hpp"
#include "omframe/omf.hpp"
#include "omframe/reference.hpp"

namespace omframe::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr const char* kBenchField = "gf:2147483647";

struct Options {
    std::string command;
    std::string field = "q";
    bool field_given = false;
    bool as_json = false;
    std::optional<std::uint64_t> seed;
    std::string input;
    std::string frame_file;
    std::string kind;
    std::size_t n = 0;
    int d = 0;
    std::string mu;
    int j = 0;
    std::vector<std::size_t> bench_n{4};
    std::vector<int> bench_d{8, 16, 32, 64};
    int reps = 5;
};

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    bool stdin_used = false;

    std::string slurp_stdin() {
        if (stdin_used) throw Error(ErrorCode::Parse, "standard input requested twice");
        stdin_used = true;
        return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
};

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::uint64_t resolve_seed(const Options& o) {
    if (o.seed) return *o.seed;
    if (const char* env = std::getenv("OMFRAME_SEED")) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw Error(ErrorCode::Parse, std::string("OMFRAME_SEED is not an unsigned integer: ") + env);
    }
    return 1;
}

// ---------------------------------------------------------------- serialization

template <Field K>
json coeffs_json(const Poly<K>& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(c.to_string());
    return out;
}

template <Field K>
json vector_json(const PolyVec<K>& v) {
    json out = json::array();
    for (const auto& p : v) out.push_back(coeffs_json(p));
    return out;
}

template <Field K>
json strings_json(const PolyVec<K>& v) {
    json out = json::array();
    for (const auto& p : v) out.push_back(to_string(p));
    return out;
}

template <Field K>
json matrix_json(const PolyMatrix<K>& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(coeffs_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

json report_json(const VerificationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"passed", rep.passed()}, {"checks", std::move(checks)}};
}

json header(const Options& o, const std::string& field) {
    return {{"schema", kSchemaVersion}, {"command", o.command}, {"field", field}};
}

template <Field K>
Poly<K> poly_from_json(const json& entry, const K& k) {
    if (entry.is_string()) return to_field(parse_poly(entry.get<std::string>()), k);
    if (!entry.is_array()) throw Error(ErrorCode::Parse, "frame entry must be a coefficient list or an expression");
    std::vector<typename K::Scalar> c;
    for (const auto& x : entry) {
        if (x.is_string()) c.push_back(k.from_rational(Rational::parse(x.get<std::string>())));
        else if (x.is_number_integer()) c.push_back(k.from_int(x.get<long long>()));
        else throw Error(ErrorCode::Parse, "coefficients must be integers or \"num/den\" strings");
    }
    return Poly<K>(k, std::move(c));
}

template <Field K>
PolyMatrix<K> matrix_from_json(const json& doc, const K& k) {
    const json& rows = doc.is_object() ? doc.at("frame") : doc;
    if (!rows.is_array() || rows.empty()) throw Error(ErrorCode::Parse, "frame must be a nonempty array of rows");
    const std::size_t n = rows.size();
    PolyMatrix<K> m(n, n, Poly<K>(k));
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) throw Error(ErrorCode::SizeMismatch, "frame must be square");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = poly_from_json(rows[i][j], k);
    }
    return m;
}

// ---------------------------------------------------------------- human output

template <Field K>
void print_matrix(std::ostream& os, const PolyMatrix<K>& m) {
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) width[j] = std::max(width[j], to_string(m(i, j)).size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) os << ' ' << std::left << std::setw(static_cast<int>(width[j])) << to_string(m(i, j));
        os << " ]\n";
    }
}

void print_ints(std::ostream& os, const std::string& label, const std::vector<int>& v) {
    os << std::left << std::setw(8) << label;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    os << '\n';
}

void print_report(std::ostream& os, const VerificationReport& rep) {
    const auto ok = std::count_if(rep.checks.begin(), rep.checks.end(), [](const CheckResult& c) { return c.passed; });
    os << "verification: " << (rep.passed() ? "passed" : "FAILED") << " (" << ok << "/" << rep.checks.size() << ")\n";
    for (const auto& c : rep.checks) {
        os << "  " << (c.passed ? "ok   " : "FAIL ") << std::left << std::setw(16) << c.name << c.detail << '\n';
    }
}

// ---------------------------------------------------------------- commands

template <Field K>
PolyVec<K> read_input(const Options& o, Io& io, const K& k) {
    std::string text = o.input == "-" ? io.slurp_stdin() : o.input;
    if (text.rfind(" -", 0) == 0) text.erase(0, 1);  // undo protect_negative_inputs
    return to_field(parse_vector(text), k);
}

template <Field K>
int cmd_frame(const Options& o, Io& io, const K& k, bool equivariant) {
    const auto a = read_input(o, io, k);
    const auto t0 = Clock::now();
    std::optional<CoefficientSection<K>> sec;
    if (equivariant) sec = coefficient_section(a);
    const auto f = equivariant ? eomf(a) : omf(a);
    const double elapsed = ms_since(t0);
    const auto rep = verify_frame(a, f);

    if (o.as_json) {
        json doc = header(o, k.name());
        doc["input"] = strings_json(a);
        doc["gcd"] = coeffs_json(f.gcd);
        doc["frame"] = matrix_json(f.P);
        doc["beta"] = f.beta;
        doc["mu"] = f.mu;
        doc["degree"] = f.degree();
        doc["pivots"] = f.profile.pivots;
        doc["basic"] = f.profile.basic;
        if (sec) doc["section"] = sec->indices;
        doc["verification"] = report_json(rep);
        doc["timing_ms"] = elapsed;
        io.out << doc.dump(2) << '\n';
    } else {
        auto& os = io.out;
        os << std::left << std::setw(8) << "field" << k.name() << '\n';
        os << std::left << std::setw(8) << "input" << to_string(a) << '\n';
        os << std::left << std::setw(8) << "gcd" << to_string(f.gcd) << '\n';
        os << std::left << std::setw(8) << "beta" << f.beta << '\n';
        print_ints(os, "mu", f.mu);
        os << std::left << std::setw(8) << "degree" << f.degree() << '\n';
        if (sec) print_ints(os, "section", sec->indices);
        os << "P =\n";
        print_matrix(os, f.P);
        print_report(os, rep);
    }
    return rep.passed() ? kExitOk : kExitVerificationFailed;
}

template <Field K>
int cmd_bezout(const Options& o, Io& io, const K& k) {
    const auto a = read_input(o, io, k);
    const auto f = omf(a);
    const auto h = column(f.P, 0);
    if (o.as_json) {
        json doc = header(o, k.name());
        doc["input"] = strings_json(a);
        doc["gcd"] = coeffs_json(f.gcd);
        doc["beta"] = f.beta;
        doc["bezout"] = vector_json(h);
        io.out << doc.dump(2) << '\n';
    } else {
        io.out << std::left << std::setw(8) << "gcd" << to_string(f.gcd) << '\n';
        io.out << std::left << std::setw(8) << "beta" << f.beta << '\n';
        io.out << std::left << std::setw(8) << "bezout" << to_string(h) << '\n';
    }
    return kExitOk;
}

template <Field K>
int cmd_mubasis(const Options& o, Io& io, const K& k) {
    const auto a = read_input(o, io, k);
    const auto f = omf(a);
    if (o.as_json) {
        json doc = header(o, k.name());
        doc["input"] = strings_json(a);
        doc["mu"] = f.mu;
        json cols = json::array();
        for (std::size_t j = 1; j < f.n(); ++j) cols.push_back(vector_json(column(f.P, j)));
        doc["mu_basis"] = std::move(cols);
        io.out << doc.dump(2) << '\n';
    } else {
        print_ints(io.out, "mu", f.mu);
        for (std::size_t j = 1; j < f.n(); ++j) io.out << "  " << to_string(column(f.P, j)) << '\n';
    }
    return kExitOk;
}

template <Field K>
int cmd_verify(const Options& o, Io& io, const K& k, const json& frame_doc) {
    const auto a = read_input(o, io, k);
    const auto p = matrix_from_json(frame_doc, k);
    const auto rep = verify_frame(a, p);
    if (o.as_json) {
        json doc = header(o, k.name());
        doc["input"] = strings_json(a);
        doc["verification"] = report_json(rep);
        io.out << doc.dump(2) << '\n';
    } else {
        print_report(io.out, rep);
    }
    return rep.passed() ? kExitOk : kExitVerificationFailed;
}

reference::WitnessKind parse_kind(const std::string& s) {
    using reference::WitnessKind;
    if (s == "beta-mu") return WitnessKind::BetaMu;
    if (s == "lower") return WitnessKind::LowerBound;
    if (s == "upper") return WitnessKind::UpperBound;
    if (s == "detc") return WitnessKind::DetC;
    throw Error(ErrorCode::InvalidWitness, "unknown witness kind '" + s + "' (expected beta-mu, lower, upper, detc)");
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorCode::Parse, "not an integer list: '" + s + "'");
        }
    }
    return out;
}

template <Field K>
int cmd_gen(const Options& o, Io& io, const K& k) {
    reference::WitnessSpec spec;
    spec.kind = parse_kind(o.kind);
    spec.mu = parse_int_list(o.mu);
    spec.j = o.j;
    spec.d = o.d;
    spec.n = o.n != 0 ? o.n : spec.mu.size() + 1;
    const auto a = reference::gen_witness(spec, k);
    std::optional<PolyMatrix<K>> p;
    if (spec.kind != reference::WitnessKind::DetC) p = reference::witness_frame(spec, k);

    if (o.as_json) {
        json doc = header(o, k.name());
        doc["kind"] = o.kind;
        doc["n"] = spec.n;
        if (spec.kind == reference::WitnessKind::BetaMu) {
            doc["mu"] = spec.mu;
            doc["j"] = spec.j;
        } else {
            doc["d"] = spec.d;
        }
        doc["vector"] = to_string(a);
        doc["coefficients"] = vector_json(a);
        if (p) doc["frame"] = matrix_json(*p);
        else doc["principal_block_nonsingular"] = reference::principal_block_nonsingular(a);
        io.out << doc.dump(2) << '\n';
    } else {
        io.out << to_string(a) << '\n';
    }
    return kExitOk;
}

template <Field K>
int cmd_oracle(const Options& o, Io& io, const K& k) {
    const auto a = read_input(o, io, k);
    const auto f = omf(a);
    const auto bez = reference::brute_min_bezout(a);
    const auto mu = reference::brute_mu_type(a);
    const bool agree = f.beta == bez.degree && f.mu == mu;
    if (o.as_json) {
        json doc = header(o, k.name());
        doc["input"] = strings_json(a);
        doc["omf"] = {{"beta", f.beta}, {"mu", f.mu}};
        doc["oracle"] = {{"beta", bez.degree}, {"mu", mu}};
        doc["agree"] = agree;
        io.out << doc.dump(2) << '\n';
    } else {
        io.out << "omf     beta " << f.beta << "  mu";
        for (int m : f.mu) io.out << ' ' << m;
        io.out << "\noracle  beta " << bez.degree << "  mu";
        for (int m : mu) io.out << ' ' << m;
        io.out << '\n' << (agree ? "agree" : "MISMATCH") << '\n';
    }
    return agree ? kExitOk : kExitVerificationFailed;
}

// Random gcd-1 input of exact degree d with coefficients in [-10, 10].
template <Field K>
PolyVec<K> bench_input(const K& k, std::size_t n, int d, std::mt19937_64& rng) {
    while (true) {
        auto a = reference::random_vector(k, n, d, -10, 10, rng);
        if (a.degree() == d && vec_gcd(a).degree() == 0) return a;
    }
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const auto m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double m = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

template <Field K>
int cmd_bench(const Options& o, Io& io, const K& k) {
    if (o.reps < 1) throw Error(ErrorCode::Parse, "--reps must be positive");
    const auto seed = resolve_seed(o);
    json cells = json::array();
    json slopes = json::object();
    std::ostringstream table;
    table << std::right << std::setw(4) << "n" << std::setw(6) << "d" << std::setw(6) << "reps" << std::setw(14)
          << "median_ms" << std::setw(14) << "min_ms" << '\n';

    for (std::size_t n : o.bench_n) {
        if (n < 2) throw Error(ErrorCode::TooShort, "bench needs n > 1");
        std::vector<double> xs, ys;
        for (int d : o.bench_d) {
            if (d < 1) throw Error(ErrorCode::DegreeBound, "bench needs d > 0");
            // one stream per cell so results do not depend on the grid
            std::seed_seq ss{seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d)};
            std::mt19937_64 rng(ss);
            std::vector<double> times;
            for (int r = 0; r < o.reps; ++r) {
                const auto a = bench_input(k, n, d, rng);
                const auto t0 = Clock::now();
                const auto f = omf(a);
                times.push_back(ms_since(t0));
                if (f.P.rows() != n) throw std::logic_error("frame has the wrong size");
            }
            const double med = median(times);
            const double mn = *std::min_element(times.begin(), times.end());
            cells.push_back({{"n", n}, {"d", d}, {"reps", o.reps}, {"median_ms", med}, {"min_ms", mn}});
            table << std::setw(4) << n << std::setw(6) << d << std::setw(6) << o.reps << std::setw(14) << std::fixed
                  << std::setprecision(3) << med << std::setw(14) << mn << '\n';
            xs.push_back(d);
            ys.push_back(med);
        }
        if (xs.size() >= 2) {
            const double slope = loglog_slope(xs, ys);
            slopes[std::to_string(n)] = slope;
            table << "slope n=" << n << ": " << std::setprecision(2) << slope << '\n';
        }
    }
    if (o.as_json) {
        json doc = header(o, k.name());
        doc["seed"] = seed;
        doc["cells"] = std::move(cells);
        doc["slopes"] = std::move(slopes);
        io.out << doc.dump(2) << '\n';
    } else {
        io.out << "field " << k.name() << ", seed " << seed << '\n' << table.str();
    }
    return kExitOk;
}

template <Field K>
int dispatch(const Options& o, Io& io, const K& k, const json& frame_doc) {
    if (o.command == "frame") return cmd_frame(o, io, k, false);
    if (o.command == "eframe") return cmd_frame(o, io, k, true);
    if (o.command == "bezout") return cmd_bezout(o, io, k);
    if (o.command == "mubasis") return cmd_mubasis(o, io, k);
    if (o.command == "verify") return cmd_verify(o, io, k, frame_doc);
    if (o.command == "gen") return cmd_gen(o, io, k);
    if (o.command == "oracle") return cmd_oracle(o, io, k);
    if (o.command == "bench") return cmd_bench(o, io, k);
    throw Error(ErrorCode::Parse, "unknown command '" + o.command + "'");
}

int exit_code_for(ErrorCode c) {
    switch (c) {
        case ErrorCode::Parse:
        case ErrorCode::InvalidField:
        case ErrorCode::InvalidWitness:
            return kExitUsage;
        default:
            return kExitDomain;
    }
}

// CLI11 reads "-s, s+1" as a short flag; no short flags exist, so a leading
// space keeps such arguments positional without changing their meaning.
std::vector<std::string> protect_negative_inputs(std::vector<std::string> args) {
    for (auto& a : args) {
        if (a.size() > 1 && a[0] == '-' && a[1] != '-') a.insert(a.begin(), ' ');
    }
    return args;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Degree-optimal moving frames of polynomial vectors", "omframe"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--field", o.field, "Coefficient field: q or gf:<prime>")->each([&](const std::string&) {
        o.field_given = true;
    });
    app.add_flag("--json", o.as_json, "Emit a structured JSON document");
    app.add_option("--seed", o.seed, "Random seed (default: $OMFRAME_SEED, else 1)");

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", o.input, "Comma-separated polynomials in s, or - for stdin")->required();
    };
    add_input(app.add_subcommand("frame", "Degree-optimal moving frame"));
    add_input(app.add_subcommand("eframe", "Equivariant degree-optimal moving frame"));
    add_input(app.add_subcommand("bezout", "Minimal-degree Bezout vector"));
    add_input(app.add_subcommand("mubasis", "mu-basis of the syzygy module"));
    add_input(app.add_subcommand("oracle", "Cross-check beta and mu against brute force"));
    auto* verify = app.add_subcommand("verify", "Check a frame file against an input vector");
    verify->add_option("--frame", o.frame_file, "JSON frame document or matrix (- for stdin)")->required();
    add_input(verify);
    auto* gen = app.add_subcommand("gen", "Generate a witness vector");
    gen->add_option("--kind", o.kind, "beta-mu, lower, upper or detc")->required();
    gen->add_option("--n", o.n, "Vector length (beta-mu: defaults to len(mu)+1)");
    gen->add_option("--d", o.d, "Degree (lower, upper, detc)");
    gen->add_option("--mu", o.mu, "Comma-separated mu-type (beta-mu)");
    gen->add_option("--j", o.j, "Bezout degree (beta-mu)");
    auto* bench = app.add_subcommand("bench", "Time omf on random inputs over an (n, d) grid");
    bench->add_option("--n", o.bench_n, "Vector lengths")->delimiter(',');
    bench->add_option("--d", o.bench_d, "Degrees")->delimiter(',');
    bench->add_option("--reps", o.reps, "Inputs per cell");

    try {
        auto argv = protect_negative_inputs(args);
        std::reverse(argv.begin(), argv.end());
        app.parse(std::move(argv));
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }
    o.command = app.get_subcommands().front()->get_name();

    Io io{in, out, err};
    try {
        json frame_doc;
        if (o.command == "verify") {
            std::string text;
            if (o.frame_file == "-") {
                text = io.slurp_stdin();
            } else {
                std::ifstream f(o.frame_file);
                if (!f) throw Error(ErrorCode::Parse, "cannot read frame file '" + o.frame_file + "'");
                text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
            }
            try {
                frame_doc = json::parse(text);
            } catch (const json::exception& e) {
                throw Error(ErrorCode::Parse, std::string("frame file is not valid JSON: ") + e.what());
            }
            if (!o.field_given && frame_doc.is_object() && frame_doc.contains("field"))
                o.field = frame_doc["field"].get<std::string>();
        }
        // Bench measures operation counts, which only track runtime when scalars
        // have bounded size; over q coefficient growth adds to the exponent.
        if (o.command == "bench" && !o.field_given) o.field = kBenchField;
        if (o.field == "q") return dispatch(o, io, RationalField{}, frame_doc);
        if (o.field.rfind("gf:", 0) == 0) {
            std::uint64_t p = 0;
            try {
                std::size_t used = 0;
                p = std::stoull(o.field.substr(3), &used);
                if (used + 3 != o.field.size()) throw std::invalid_argument(o.field);
            } catch (const std::exception&) {
                throw Error(ErrorCode::InvalidField, "bad field '" + o.field + "' (expected q or gf:<prime>)");
            }
            return dispatch(o, io, PrimeField(p), frame_doc);
        }
        throw Error(ErrorCode::InvalidField, "bad field '" + o.field + "' (expected q or gf:<prime>)");
    } catch (const Error& e) {
        if (o.as_json) {
            json doc = header(o, o.field);
            doc["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
            out << doc.dump(2) << '\n';
        }
        err << "error[" << error_code_name(e.code()) << "]: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
}

}  // namespace omframe::cli
