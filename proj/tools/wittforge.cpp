// wittforge: command-line front end. Every command prints one JSON report.
//
// Exit codes: 0 success, 1 usage error, 2 malformed input, 3 mathematical
// domain error, 4 search bound exhausted, 5 internal consistency failure.

#include "wittforge/errors.hpp"
#include "wittforge/json_io.hpp"
#include "wittforge/selftest.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using wittforge::json_io::json;

json read_json(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw wittforge::ParseError("cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    return wittforge::json_io::parse(buf.str());
}

wittforge::QuaternionAlgebra parse_algebra(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw wittforge::ParseError("expected 'a,b', got '" + text + "'");
    wittforge::Rational a = wittforge::parse_rational(text.substr(0, comma));
    wittforge::Rational b = wittforge::parse_rational(text.substr(comma + 1));
    if (a == 0 || b == 0) throw wittforge::ParseError("quaternion slots must be nonzero");
    return wittforge::QuaternionAlgebra(a, b);
}

int emit_error(int code, const char* kind, const std::exception& e) {
    json err{{"error", kind}, {"message", e.what()}, {"exit_code", code}};
    std::cerr << err.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of quadratic forms and degree-12 algebras with orthogonal involution over Q"};
    app.require_subcommand(1);

    long bound = wittforge::default_search_bound();
    bool timing = false;
    bool compact = false;
    app.add_option("--bound", bound, "Search bound (default: WITTFORGE_SEARCH_BOUND or 10000)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--timing", timing, "Include wall-clock timing in the report");
    app.add_flag("--compact", compact, "Print the report on a single line");
    app.fallthrough();

    std::string file;
    std::string dclass;
    std::string h1s, h2s;
    std::uint64_t seed = 1;
    std::size_t count = 10;

    std::string command;
    std::function<json()> run;

    auto* qf = app.add_subcommand("qf", "Quadratic form commands");
    qf->require_subcommand(1);
    auto* inv = qf->add_subcommand("invariants", "dim, e1, e2, e3, signature and Witt index");
    inv->add_option("form", file, "Form JSON ({\"diag\": [...]}, '-' for stdin)")->required();
    inv->callback([&] {
        command = "qf invariants";
        run = [&] {
            json in = read_json(file);
            json out = wittforge::json_io::invariants_report(wittforge::json_io::quadform_from_json(in), bound);
            out["input"] = in;
            return out;
        };
    });
    auto* dec = qf->add_subcommand("decompose12", "Pfister-style decomposition of a 12-dimensional form in I^3");
    dec->add_option("form", file, "Form JSON")->required();
    dec->callback([&] {
        command = "qf decompose12";
        run = [&] {
            json in = read_json(file);
            json out = wittforge::json_io::decompose12_report(wittforge::json_io::quadform_from_json(in), bound);
            out["input"] = in;
            return out;
        };
    });
    auto* hyp = qf->add_subcommand("hyper-over", "Whether the form becomes hyperbolic over Q(sqrt d)");
    hyp->add_option("form", file, "Form JSON")->required();
    hyp->add_option("--d", dclass, "Square class d")->required();
    hyp->callback([&] {
        command = "qf hyper-over";
        run = [&] {
            json in = read_json(file);
            const auto d = wittforge::SquareClass::of(wittforge::parse_rational(dclass));
            json out = wittforge::json_io::hyper_over_report(wittforge::json_io::quadform_from_json(in), d);
            out["input"] = in;
            return out;
        };
    });

    auto* alg = app.add_subcommand("alg", "Algebra-with-involution commands");
    alg->require_subcommand(1);
    auto* f3 = alg->add_subcommand("f3", "f3 by the norm-form and symbol routes");
    f3->add_option("presentation", file, "Presentation JSON")->required();
    f3->callback([&] {
        command = "alg f3";
        run = [&] {
            json in = read_json(file);
            json out = wittforge::json_io::f3_report(wittforge::json_io::presentation_from_json(in), bound);
            out["input"] = in;
            return out;
        };
    });
    auto* ex = alg->add_subcommand("exists", "Orthogonal involution with trivial e1, e2 on M_3(H1 (x) H2)");
    ex->add_option("--h1", h1s, "First factor as a,b")->required();
    ex->add_option("--h2", h2s, "Second factor as a,b")->required();
    ex->callback([&] {
        command = "alg exists";
        run = [&] { return wittforge::json_io::exists_report(parse_algebra(h1s), parse_algebra(h2s), bound); };
    });
    auto* add = alg->add_subcommand("additive", "Decomposition group of an M_3(H') presentation");
    add->add_option("presentation", file, "Presentation JSON")->required();
    add->callback([&] {
        command = "alg additive";
        run = [&] {
            json in = read_json(file);
            json out = wittforge::json_io::additive_report(wittforge::json_io::presentation_from_json(in), bound);
            out["input"] = in;
            return out;
        };
    });

    auto* val = app.add_subcommand("val", "Value-group commands over iterated Laurent series fields");
    val->require_subcommand(1);
    auto* obs = val->add_subcommand("obstruction", "Value-group obstruction for a biquaternion algebra");
    obs->add_option("slots", file, "Slots JSON")->required();
    obs->callback([&] {
        command = "val obstruction";
        run = [&] {
            json in = read_json(file);
            json out = wittforge::json_io::obstruction_report(wittforge::json_io::slots_from_json(in));
            out["input"] = in;
            return out;
        };
    });

    auto* st = app.add_subcommand("selftest", "Run the seeded property suites");
    st->add_option("--seed", seed, "RNG seed");
    st->add_option("--count", count, "Cases per suite")->check(CLI::PositiveNumber);
    st->callback([&] {
        command = "selftest";
        run = [&] { return wittforge::selftest::run_selftest(seed, count, timing); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        json out = run();
        out["command"] = command;
        if (bound != wittforge::default_search_bound()) out["bound"] = bound;
        if (timing) {
            const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
            out["timing_ms"] = ms.count();
        }
        std::cout << out.dump(compact ? -1 : 2) << "\n";
        if (command == "selftest" && !out["all_passed"].get<bool>()) return 5;
        return 0;
    } catch (const wittforge::ParseError& e) {
        return emit_error(2, "parse", e);
    } catch (const nlohmann::json::exception& e) {
        return emit_error(2, "parse", e);
    } catch (const wittforge::DomainError& e) {
        return emit_error(3, "domain", e);
    } catch (const wittforge::BoundExceeded& e) {
        return emit_error(4, "bound", e);
    } catch (const wittforge::ConsistencyError& e) {
        return emit_error(5, "consistency", e);
    }
}
