// Command-line front end. run_cli owns argument parsing, output formatting
// and the exit-code contract so main() stays a one-liner and tests can drive
// the whole binary in process.
//
// Exit codes: 0 success, 1 domain error (reported on stderr, as a structured
// object in json mode), 2 usage error. --format human|json switches every
// subcommand between readable text and single-line JSON with a schema tag.
#pragma once

#include <array>
#include <charconv>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ttc/classify.hpp"
#include "ttc/constituents.hpp"
#include "ttc/errors.hpp"
#include "ttc/fibonacci.hpp"
#include "ttc/knot.hpp"
#include "ttc/oracle.hpp"
#include "ttc/render.hpp"

namespace ttc {

using Json = nlohmann::ordered_json;

namespace cli_detail {

// Flag-level misuse detected after CLI11 is done (malformed pair/triple
// strings). Reported like any other usage error, exit code 2.
struct UsageError {
    std::string flag;
    std::string message;
};

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    size_t pos = 0;
    while (true) {
        const size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            parts.push_back(s.substr(pos));
            return parts;
        }
        parts.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
}

inline Int parse_int(std::string_view token, const std::string& flag) {
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    Int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last)
        throw UsageError{flag, "expected an integer, got \"" + std::string(token) + "\""};
    return value;
}

inline HomologyClass parse_class(std::string_view s, const std::string& flag) {
    const auto parts = split(s, ',');
    if (parts.size() != 2)
        throw UsageError{flag, "expected \"a,b\", got \"" + std::string(s) + "\""};
    return {parse_int(parts[0], flag), parse_int(parts[1], flag)};
}

inline std::array<HomologyClass, 3> parse_class_triple(std::string_view s,
                                                       const std::string& flag) {
    const auto parts = split(s, ';');
    if (parts.size() != 3)
        throw UsageError{flag, "expected \"a,b;c,d;e,f\", got \"" + std::string(s) + "\""};
    return {parse_class(parts[0], flag), parse_class(parts[1], flag),
            parse_class(parts[2], flag)};
}

inline Json class_json(const HomologyClass& c) {
    return Json::array({c.a, c.b});
}

inline Json knot_json(const TorusKnot& k) {
    return Json::array({k.p(), k.q()});
}

inline Json knot_set_json(const std::array<TorusKnot, 3>& s) {
    return Json::array({knot_json(s[0]), knot_json(s[1]), knot_json(s[2])});
}

inline std::string knot_str(const TorusKnot& k) {
    if (k.p() < 0 && k.q() < 0)
        return "-t(" + std::to_string(-k.p()) + "," + std::to_string(-k.q()) + ")";
    return "t(" + std::to_string(k.p()) + "," + std::to_string(k.q()) + ")";
}

inline std::string knot_set_str(const std::array<TorusKnot, 3>& s) {
    return knot_str(s[0]) + "  " + knot_str(s[1]) + "  " + knot_str(s[2]);
}

inline std::string theta_str(Int p, Int q, Int r) {
    std::string s = "theta(" + std::to_string(p) + "," + std::to_string(q);
    if (r != 0) s += "," + std::to_string(r);
    return s + ")";
}

inline void verdict_json(const ThetaClassification& c, Json& j) {
    if (std::holds_alternative<Unknotted>(c)) {
        j["verdict"] = "unknotted";
        return;
    }
    if (const auto* cs = std::get_if<ConnectedSum>(&c)) {
        j["verdict"] = "connected_sum";
        j["knot"] = knot_json(cs->knot);
        return;
    }
    const auto& pr = std::get<PrimeTheta>(c);
    j["verdict"] = "prime";
    j["p"] = pr.p;
    j["q"] = pr.q;
    j["signs"] = pr.signs == SignPattern::SameSigns ? "same_signs" : "opposite_signs";
}

inline std::string verdict_str(const ThetaClassification& c) {
    if (std::holds_alternative<Unknotted>(c)) return "unknotted";
    if (const auto* cs = std::get_if<ConnectedSum>(&c))
        return "connected sum with " + knot_str(cs->knot);
    const auto& pr = std::get<PrimeTheta>(c);
    return "prime " + theta_str(pr.p, pr.q, 0) +
           (pr.signs == SignPattern::SameSigns ? ", same signs" : ", opposite signs");
}

inline void emit(const Json& j, std::ostream& out) {
    out << j.dump() << "\n";
}

inline std::string yes_no(bool v) {
    return v ? "yes" : "no";
}

} // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    namespace cd = cli_detail;

    CLI::App app{"torus theta-curve toolkit"};
    app.name("ttc");
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string format = "human";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->capture_default_str();

    struct {
        Int p = 0;
        Int q = 0;
        Int r = 0;
        Int max = 0;
        Int rmax = 2;
        std::string variant;
        std::string triple;
        std::string lhs;
        std::string rhs;
        std::string style = "square";
        std::string out_path;
    } o;

    CLI::App* c_con = app.add_subcommand("constituents",
                                         "constituent knots of theta(p,q,r)");
    c_con->add_option("--p", o.p, "longitude winding")->required();
    c_con->add_option("--q", o.q, "meridian winding")->required();
    CLI::Option* con_r = c_con->add_option("--r", o.r, "extra e3 windings");
    CLI::Option* con_variant =
        c_con->add_option("--variant", o.variant, "sign variant of theta(p,q)")
            ->check(CLI::IsMember({"pp", "pn", "nn", "np"}));
    con_variant->excludes(con_r);

    CLI::App* c_cls = app.add_subcommand("classify",
                                         "classify a theta-curve from its classes");
    c_cls->add_option("--triple", o.triple, "constituent classes \"a,b;c,d;e,f\"")
        ->required();

    CLI::App* c_eqv = app.add_subcommand("equiv",
                                         "compare theta(p,q) and theta(p',q')");
    c_eqv->add_option("--lhs", o.lhs, "first pair \"p,q\"")->required();
    c_eqv->add_option("--rhs", o.rhs, "second pair \"p,q\"")->required();

    CLI::App* c_prm = app.add_subcommand("prime", "primeness of theta(p,q,r)");
    c_prm->add_option("--p", o.p)->required();
    c_prm->add_option("--q", o.q)->required();
    c_prm->add_option("--r", o.r);

    CLI::App* c_fib = app.add_subcommand("fib",
                                         "Fibonacci theta-curves theta(F_n, F_{n+1})");
    c_fib->add_option("--max", o.max, "largest n")->required();

    CLI::App* c_ren = app.add_subcommand("render", "write an SVG diagram");
    c_ren->add_option("--p", o.p)->required();
    c_ren->add_option("--q", o.q)->required();
    c_ren->add_option("--r", o.r);
    c_ren->add_option("--style", o.style, "square or cover")
        ->check(CLI::IsMember({"square", "cover"}))
        ->required();
    c_ren->add_option("--out", o.out_path, "output file")->required();

    CLI::App* c_sft = app.add_subcommand("selftest",
                                         "cross-check closed forms against oracles");
    c_sft->add_option("--max", o.max, "largest q")->required();
    c_sft->add_option("--rmax", o.rmax, "largest |r|")->required();

    // CLI11 pops arguments from the back of the vector it is given.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        CLI::App* target = &app;
        while (!target->get_subcommands().empty())
            target = target->get_subcommands().front();
        out << target->help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const bool json_mode = format == "json";
    const std::string sub = app.get_subcommands().front()->get_name();

    try {
        if (sub == "constituents") {
            if (con_variant->count() > 0) {
                const ThetaSignVariant v = o.variant == "pp"   ? ThetaSignVariant::PP
                                           : o.variant == "pn" ? ThetaSignVariant::PN
                                           : o.variant == "nn" ? ThetaSignVariant::NN
                                                               : ThetaSignVariant::NP;
                const auto set = constituents_sign_variant(o.p, o.q, v);
                if (json_mode) {
                    Json j{{"schema", 1},
                           {"input", {{"p", o.p}, {"q", o.q}, {"variant", o.variant}}},
                           {"unoriented_set", cd::knot_set_json(set)}};
                    cd::emit(j, out);
                } else {
                    const Int sp = (v == ThetaSignVariant::NN || v == ThetaSignVariant::NP)
                                       ? -o.p
                                       : o.p;
                    const Int sq = (v == ThetaSignVariant::PN || v == ThetaSignVariant::NN)
                                       ? -o.q
                                       : o.q;
                    out << cd::theta_str(sp, sq, 0) << "\n";
                    out << "unoriented constituents: " << cd::knot_set_str(set) << "\n";
                }
                return 0;
            }
            const ConstituentTriple t = constituents_pqr(ThetaPQR(o.p, o.q, o.r));
            const auto set = unoriented_set(t);
            if (json_mode) {
                Json j{{"schema", 1},
                       {"input", {{"p", o.p}, {"q", o.q}, {"r", o.r}}},
                       {"k3", cd::knot_json(t.k3())},
                       {"k2", cd::knot_json(t.k2())},
                       {"k1", cd::knot_json(t.k1())},
                       {"unoriented_set", cd::knot_set_json(set)}};
                cd::emit(j, out);
            } else {
                out << cd::theta_str(o.p, o.q, o.r) << "\n";
                out << "  k3 = " << cd::knot_str(t.k3()) << "\n";
                out << "  k2 = " << cd::knot_str(t.k2()) << "\n";
                out << "  k1 = " << cd::knot_str(t.k1()) << "\n";
                out << "unoriented constituents: " << cd::knot_set_str(set) << "\n";
            }
            return 0;
        }

        if (sub == "classify") {
            const auto classes = cd::parse_class_triple(o.triple, "--triple");
            const ThetaOnTorus theta(classes[0], classes[1], classes[2]);
            const ThetaClassification verdict = classify_theta(theta);
            if (json_mode) {
                Json j{{"schema", 1},
                       {"input",
                        {{"triple", Json::array({cd::class_json(classes[0]),
                                                 cd::class_json(classes[1]),
                                                 cd::class_json(classes[2])})}}}};
                cd::verdict_json(verdict, j);
                cd::emit(j, out);
            } else {
                out << cd::verdict_str(verdict) << "\n";
            }
            return 0;
        }

        if (sub == "equiv") {
            const HomologyClass lhs = cd::parse_class(o.lhs, "--lhs");
            const HomologyClass rhs = cd::parse_class(o.rhs, "--rhs");
            const ThetaEquivalenceVerdict v = theta_equivalent(lhs.a, lhs.b, rhs.a, rhs.b);
            if (json_mode) {
                Json j{{"schema", 1},
                       {"input", {{"lhs", cd::class_json(lhs)}, {"rhs", cd::class_json(rhs)}}},
                       {"isotopic", v.isotopic},
                       {"homeomorphic", v.homeomorphic}};
                cd::emit(j, out);
            } else {
                out << "isotopic: " << cd::yes_no(v.isotopic) << "\n";
                out << "homeomorphic: " << cd::yes_no(v.homeomorphic) << "\n";
            }
            return 0;
        }

        if (sub == "prime") {
            const ThetaClassification verdict = classify_pqr(ThetaPQR(o.p, o.q, o.r));
            const bool prime = is_prime_theta(verdict);
            if (json_mode) {
                Json j{{"schema", 1},
                       {"input", {{"p", o.p}, {"q", o.q}, {"r", o.r}}},
                       {"prime", prime}};
                cd::verdict_json(verdict, j);
                cd::emit(j, out);
            } else {
                out << "prime: " << cd::yes_no(prime) << "\n";
                out << "classification: " << cd::verdict_str(verdict) << "\n";
            }
            return 0;
        }

        if (sub == "fib") {
            const std::vector<FibRecord> records = fib_table(o.max);
            if (json_mode) {
                Json rows = Json::array();
                for (const FibRecord& rec : records) {
                    rows.push_back(Json{{"n", rec.n},
                                        {"fn", rec.fn},
                                        {"fn1", rec.fn1},
                                        {"k3", cd::knot_json(rec.constituents.k3())},
                                        {"k2", cd::knot_json(rec.constituents.k2())},
                                        {"k1", cd::knot_json(rec.constituents.k1())}});
                }
                Json j{{"schema", 1}, {"input", {{"max", o.max}}}, {"records", rows}};
                cd::emit(j, out);
            } else {
                for (const FibRecord& rec : records) {
                    out << "n=" << rec.n << "  " << cd::theta_str(rec.fn, rec.fn1, 0)
                        << ": k3 = " << cd::knot_str(rec.constituents.k3())
                        << ", k2 = " << cd::knot_str(rec.constituents.k2())
                        << ", k1 = " << cd::knot_str(rec.constituents.k1()) << "\n";
                }
            }
            return 0;
        }

        if (sub == "render") {
            const ThetaPQR theta(o.p, o.q, o.r);
            const SvgDiagram d = o.style == "square" ? render_square(theta, o.out_path)
                                                     : render_cover(theta, o.out_path);
            if (json_mode) {
                Json j{{"schema", 1},
                       {"input",
                        {{"p", o.p},
                         {"q", o.q},
                         {"r", o.r},
                         {"style", o.style},
                         {"out", o.out_path}}},
                       {"width", d.width},
                       {"height", d.height},
                       {"pieces",
                        {{"e1", static_cast<Int>(d.e1.size())},
                         {"e2", static_cast<Int>(d.e2.size())},
                         {"e3", static_cast<Int>(d.e3.size())}}}};
                cd::emit(j, out);
            } else {
                out << "wrote " << o.out_path << " (" << d.width << "x" << d.height
                    << ", pieces e1=" << d.e1.size() << " e2=" << d.e2.size()
                    << " e3=" << d.e3.size() << ")\n";
            }
            return 0;
        }

        if (sub == "selftest") {
            const CrossCheckReport report = cross_check(o.max, o.rmax);
            if (json_mode) {
                Json fails = Json::array();
                for (const CrossCheckFailure& f : report.failures) {
                    fails.push_back(Json{
                        {"p", f.p}, {"q", f.q}, {"r", f.r}, {"detail", f.detail}});
                }
                Json j{{"schema", 1},
                       {"input", {{"max", o.max}, {"rmax", o.rmax}}},
                       {"pairs_checked", report.pairs_checked},
                       {"triples_checked", report.triples_checked},
                       {"failures", fails}};
                cd::emit(j, out);
            } else {
                out << "pairs checked: " << report.pairs_checked << "\n";
                out << "triples checked: " << report.triples_checked << "\n";
                for (const CrossCheckFailure& f : report.failures) {
                    out << "FAIL p=" << f.p << " q=" << f.q << " r=" << f.r << ": "
                        << f.detail << "\n";
                }
                out << (report.ok() ? "OK" : "FAILED") << "\n";
            }
            return report.ok() ? 0 : 1;
        }

        err << "error: unknown command " << sub << "\n";
        return 2;
    } catch (const cd::UsageError& e) {
        err << "error: " << e.flag << ": " << e.message << "\n";
        return 2;
    } catch (const Error& e) {
        if (json_mode) {
            Json j{{"schema", 1},
                   {"error", {{"name", e.name()}, {"message", e.what()}}}};
            cd::emit(j, err);
        } else {
            err << "error: " << e.name() << ": " << e.what() << "\n";
        }
        return 1;
    }
}

} // namespace ttc
