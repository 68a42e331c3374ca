// k3mw: exact lattice classification and double-cover geometry for elliptic
// K3 surfaces of Picard rank 3 and 4.

#include "k3mw/autgroup.hpp"
#include "k3mw/conic.hpp"
#include "k3mw/counting.hpp"
#include "k3mw/data_files.hpp"
#include "k3mw/family.hpp"
#include "k3mw/lattice.hpp"
#include "k3mw/geometry.hpp"
#include "k3mw/report_json.hpp"
#include "k3mw/splitter.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace k3mw;

namespace {

struct Output {
    bool json = false;
    int status = 0;
};

void emit(const Output& out, const std::string& command, const json& payload,
          const std::string& human) {
    if (out.json)
        std::cout << envelope(command, payload).dump(2) << std::endl;
    else
        std::cout << human << std::endl;
}

long long budget_from_env(long long flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("K3_BUDGET"); env && *env) return std::atoll(env);
    return kDefaultBudget;
}

std::vector<Int> parse_coeff_list(const std::string& s) {
    std::vector<Int> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(std::stoll(cur));
            cur.clear();
        } else
            cur += ch;
    }
    if (!cur.empty()) out.push_back(std::stoll(cur));
    return out;
}

ProjPoint3 parse_point3(const std::string& s) {
    ProjPoint3 p{};
    std::string cur;
    int i = 0;
    auto flush = [&] {
        if (i >= 3) throw CLI::ValidationError("--node", "expected a:b:c");
        p[i++] = Rational(BigInt(cur));
        cur.clear();
    };
    for (char ch : s) {
        if (ch == ':') flush();
        else cur += ch;
    }
    flush();
    if (i != 3) throw CLI::ValidationError("--node", "expected a:b:c");
    return p;
}

std::string human_family(const FamilyReport& r) {
    std::ostringstream os;
    os << "d = " << r.d << ": MW rank " << r.mw_rank;
    if (r.mw_generator_meets_zero) os << ", S1.O = " << *r.mw_generator_meets_zero;
    os << (r.has_reducible_fiber ? ", reducible fiber" : ", no reducible fibers");
    if (r.unique_fibration) os << ", unique elliptic fibration";
    if (r.rational_bisection)
        os << "\n  smooth rational bisection: x = " << r.rational_bisection->x
           << ", B.S_n mod 4 = " << r.rational_bisection->bs_parity << ", salient generically";
    if (r.genus1_bisection)
        os << "\n  smooth genus-1 bisection: x = " << r.genus1_bisection->x
           << ", salient generically";
    for (const auto& m : r.multisections)
        os << "\n  multisection: m = " << m.m << ", genus " << m.genus << ", x = " << m.x;
    os << "\n  rank jump status: " << to_string(r.rank_jump_status);
    return os.str();
}

SurfacePreset load_preset(const std::string& spec) {
    if (spec.find(".json") != std::string::npos) {
        std::ifstream in(spec);
        if (!in) throw std::runtime_error("cannot open preset file: " + spec);
        auto j = json::parse(in);
        std::string type = j.at("type").get<std::string>();
        if (type == "lambda") return preset_lambda(j.at("d").get<Int>());
        if (type == "lambda_plus")
            return preset_lambda_plus(j.at("d").get<Int>(), j.at("c").get<Int>());
        if (type == "case_a")
            return preset_case_a(j.at("alpha").get<Int>(), j.at("beta").get<Int>(),
                                 j.at("gamma").get<Int>());
        if (type == "case_b_int")
            return preset_case_b_int(j.at("gamma").get<Int>(),
                                     j.value("with_both_components", false));
        if (type == "case_b_split") return preset_case_b_split(j.at("gamma").get<Int>());
        throw std::runtime_error("unknown preset type: " + type);
    }
    return preset_by_name(spec);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice classification and double-cover geometry for elliptic K3s"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_flag("--json", out.json, "emit the JSON report instead of text");

    // ---- classify ----
    auto* classify = app.add_subcommand("classify", "classify the rank-3 family with parameter d");
    Int cls_d = 0;
    std::string d_range;
    classify->add_option("d", cls_d, "family parameter (>= 1)");
    classify->add_option("--d-range", d_range, "inclusive range a..b");

    // ---- lattice ----
    auto* lattice_cmd = app.add_subcommand("lattice", "inspect a lattice descriptor");
    std::string lattice_desc;
    lattice_cmd->add_option("descriptor", lattice_desc,
                            "U | U(m) | L(d) | G(b,c) | <2e> | Phi(x) | PhiG1(x), '+'-joined")
        ->required();

    // ---- split ----
    auto* split = app.add_subcommand("split", "decompose a class against a surface preset");
    std::string preset_spec, class_spec;
    split->add_option("--preset", preset_spec, "preset name (L5, L7c2, A5,-5,3, Bint2, Bsplit5) or JSON file")
        ->required();
    split->add_option("--class", class_spec, "comma-separated coefficients in {F,O,b3[,b4]}")
        ->required();

    // ---- audit ----
    auto* audit = app.add_subcommand("audit", "run the rank-4 lattice audit");

    // ---- orbit ----
    auto* orbit_cmd = app.add_subcommand("orbit", "orbit of a class under the isometry group");
    Int orb_d = 0, orb_radius = 1;
    std::string orb_class;
    orbit_cmd->add_option("--d", orb_d, "family parameter (>= 2)")->required();
    orbit_cmd->add_option("--class", orb_class, "comma-separated coefficients in {F,O,b3}")
        ->required();
    orbit_cmd->add_option("--radius", orb_radius, "maximal word length");

    // ---- sextic ----
    auto* sextic = app.add_subcommand("sextic", "nodal plane sextic pipeline");
    sextic->require_subcommand(1);
    std::string sx_input, sx_node = "1:0:0", sx_line = "x";
    for (const char* name : {"verify", "fibration", "tangents", "salient", "line"}) {
        auto* sub = sextic->add_subcommand(name);
        sub->add_option("--input", sx_input, "curve file")->required();
        if (std::string(name) != "line")
            sub->add_option("--node", sx_node, "node as a:b:c (default 1:0:0)");
        else
            sub->add_option("--line", sx_line, "linear form, e.g. \"x\" or \"x + 2*y\"");
    }

    // ---- quartic ----
    auto* quartic = app.add_subcommand("quartic", "quartic surfaces in P3");
    auto* trisection = quartic->add_subcommand("trisection", "line-pencil trisection report");
    std::string q_input, q_l1 = "x", q_l2 = "z", q_t = "0";
    trisection->add_option("--input", q_input, "bundled quartic JSON")->required();
    trisection->add_option("--l1", q_l1, "first linear form of the line");
    trisection->add_option("--l2", q_l2, "second linear form of the line");
    trisection->add_option("--t", q_t, "pencil parameter (rational)");

    // ---- quadric ----
    auto* quadric = app.add_subcommand("quadric", "double covers of P1 x P1");
    auto* bisection = quadric->add_subcommand("bisection", "(0,1)-line bisection report");
    std::string b_input, b_line = "1:0";
    bisection->add_option("--input", b_input, "curve file with vars x0 x1 y0 y1")->required();
    bisection->add_option("--line", b_line, "line as gamma:delta");

    // ---- conic ----
    auto* conic = app.add_subcommand("conic", "diagonal conics over Q");
    auto* solve = conic->add_subcommand("solve", "decide a x^2 + b y^2 + c z^2 = 0");
    std::vector<std::string> conic_coeffs;
    solve->add_option("coefficients", conic_coeffs, "a b c (rationals)")->expected(3);

    // ---- census ----
    auto* census = app.add_subcommand("census", "singular points of the reduction over F_{p^n}");
    std::string census_input;
    long long census_p = 0;
    int census_n = 1, census_jobs = 0;
    census->add_option("--input", census_input, "curve file")->required();
    census->add_option("--p", census_p, "odd prime")->required();
    census->add_option("--n", census_n, "extension degree (default 1)");
    census->add_option("--jobs", census_jobs, "OpenMP threads (0 = default)");

    // ---- count ----
    auto* count = app.add_subcommand("count", "point counts and Frobenius traces");
    std::string count_input;
    long long count_p = 0, count_budget = 0;
    int count_n = 1, count_jobs = 0;
    count->add_option("--input", count_input, "curve file")->required();
    count->add_option("--p", count_p, "odd prime")->required();
    count->add_option("--n", count_n, "maximal extension degree")->required();
    count->add_option("--budget", count_budget, "character evaluation budget");
    count->add_option("--jobs", count_jobs, "OpenMP threads (0 = default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors map to exit 2
    }

    try {
        if (*classify) {
            if (!d_range.empty()) {
                auto pos = d_range.find("..");
                if (pos == std::string::npos) {
                    std::cerr << "usage error: --d-range expects a..b" << std::endl;
                    return 2;
                }
                Int a = std::stoll(d_range.substr(0, pos));
                Int b = std::stoll(d_range.substr(pos + 2));
                if (a < 1 || b < a) {
                    std::cerr << "usage error: invalid range" << std::endl;
                    return 2;
                }
                json arr = json::array();
                std::string human;
                for (Int d = a; d <= b; ++d) {
                    auto r = classify_family(d);
                    arr.push_back(to_json(r));
                    human += human_family(r) + "\n";
                }
                emit(out, "classify", arr, human);
                return 0;
            }
            if (cls_d < 1) {
                std::cerr << "usage error: d must be a positive integer" << std::endl;
                return 2;
            }
            auto r = classify_family(cls_d);
            emit(out, "classify", to_json(r), human_family(r));
            return 0;
        }

        if (*lattice_cmd) {
            auto L = parse_descriptor(lattice_desc);
            auto sig = signature(L);
            json j;
            j["descriptor"] = print_descriptor(L);
            j["gram"] = json::parse(gram_json(L));
            j["rank"] = L.rank;
            j["signature"] = {sig.n_plus, sig.n_minus, sig.n_zero};
            std::ostringstream os;
            os << print_descriptor(L) << ": rank " << L.rank << ", gram " << gram_json(L)
               << ", signature (" << sig.n_plus << "," << sig.n_minus << "," << sig.n_zero
               << ")";
            emit(out, "lattice", j, os.str());
            return 0;
        }

        if (*split) {
            auto p = load_preset(preset_spec);
            auto coeffs = parse_coeff_list(class_spec);
            if ((int)coeffs.size() != p.lat.rank) {
                std::cerr << "usage error: class needs " << p.lat.rank << " coefficients"
                          << std::endl;
                return 2;
            }
            auto B = DivisorClass::of(p.lat, coeffs);
            auto v = split_check(p, B);
            std::ostringstream os;
            os << "preset " << p.name << ", class " << class_spec << ": "
               << (v.decomposed ? "DECOMPOSES" : "IRREDUCIBLE_BY_TEST")
               << " (Q-bound " << v.q_cap << ", " << v.region_size << " indices)";
            emit(out, "split", to_json(p, v, B), os.str());
            return 0;
        }

        if (*audit) {
            auto entries = table1_audit();
            std::ostringstream os;
            for (const auto& e : entries)
                os << e.lattice_name << ": " << e.verdict << "\n";
            emit(out, "audit", to_json(entries), os.str());
            return 0;
        }

        if (*orbit_cmd) {
            if (orb_d < 2) {
                std::cerr << "usage error: orbit needs d >= 2" << std::endl;
                return 2;
            }
            auto L = fibration_basis_lattice(orb_d);
            auto v = DivisorClass::of(L, parse_coeff_list(orb_class));
            auto orb = orbit(orb_d, v, orb_radius);
            std::ostringstream os;
            os << "orbit size " << orb.size() << " at radius " << orb_radius;
            emit(out, "orbit", orbit_json(orb_d, v, orb), os.str());
            return 0;
        }

        if (*sextic) {
            auto f = load_curve_file(sx_input);
            auto node = parse_point3(sx_node);
            if (sextic->got_subcommand("verify")) {
                auto c = classify_singularity(f, node);
                std::string kinds = c.kind == SingKind::NodeA1
                                        ? "node_A1"
                                        : (c.kind == SingKind::Smooth ? "smooth" : "degenerate");
                emit(out, "sextic verify", to_json(c), "singularity class: " + kinds);
                return 0;
            }
            if (sextic->got_subcommand("fibration")) {
                auto m = fibration_from_node(f, node);
                auto prof = fiber_profile(m);
                json j;
                j["model"] = to_json(m);
                j["profile"] = to_json(prof);
                std::ostringstream os;
                os << "w^2 = (" << m.a[4].str() << ") x^4 + (" << m.a[3].str() << ") x^3 z + ("
                   << m.a[2].str() << ") x^2 z^2 + (" << m.a[1].str() << ") x z^3 + ("
                   << m.a[0].str() << ") z^4\n";
                os << "euler sum " << prof.euler_sum << ", " << prof.entries.size()
                   << " finite singular places";
                emit(out, "sextic fibration", j, os.str());
                return 0;
            }
            if (sextic->got_subcommand("tangents")) {
                auto tg = principal_tangents(f, node);
                std::ostringstream os;
                os << "tangent form " << tg.A << "*y^2 + " << tg.B << "*y*z + " << tg.C
                   << "*z^2, square class " << tg.disc_square_class;
                emit(out, "sextic tangents", to_json(tg), os.str());
                return 0;
            }
            if (sextic->got_subcommand("salient")) {
                auto m = fibration_from_node(f, node);
                auto tg = principal_tangents(f, node);
                auto rep = salient_check(m, tg);
                emit(out, "sextic salient", to_json(rep),
                     std::string("salient: ") + (rep.overall ? "true" : "false"));
                return 0;
            }
            if (sextic->got_subcommand("line")) {
                auto li = line_split_analysis(f, parse_poly(sx_line, f.vars()));
                std::ostringstream os;
                os << "multiplicities:";
                for (int m : li.multiplicities) os << " " << m;
                if (li.splits) os << "; splits over Q(sqrt " << li.split_square_class << ")";
                else
                    os << "; irreducible, genus " << li.geometric_genus << ", "
                       << li.node_count << " nodes";
                emit(out, "sextic line", to_json(li), os.str());
                return 0;
            }
        }

        if (*quartic) {
            auto bundle = load_quartic_bundle(q_input);
            const auto& V = bundle.surface.vars();
            Rational t0;
            {
                auto slash = q_t.find('/');
                if (slash == std::string::npos) t0 = Rational(BigInt(q_t));
                else
                    t0 = Rational(BigInt(q_t.substr(0, slash)), BigInt(q_t.substr(slash + 1)));
            }
            auto rep = quartic_line_pencil(bundle.surface, parse_poly(q_l1, V),
                                           parse_poly(q_l2, V), t0);
            std::ostringstream os;
            os << "pattern total " << rep.pattern_total << ", ramified "
               << (rep.ramified ? "yes" : "no") << ", cubic smooth "
               << (rep.cubic_smooth ? "yes" : "no") << ", salient "
               << (rep.salient ? "yes" : "no");
            emit(out, "quartic trisection", to_json(rep), os.str());
            return 0;
        }

        if (*quadric) {
            auto g = load_curve_file(b_input);
            auto colon = b_line.find(':');
            if (colon == std::string::npos) {
                std::cerr << "usage error: --line expects gamma:delta" << std::endl;
                return 2;
            }
            Rational gamma(BigInt(b_line.substr(0, colon)));
            Rational delta(BigInt(b_line.substr(colon + 1)));
            auto rep = quadric44_check(g, gamma, delta);
            std::ostringstream os;
            os << "pattern:";
            for (int m : rep.pattern) os << " " << m;
            os << "; salient " << (rep.salient ? "yes" : "no");
            emit(out, "quadric bisection", to_json(rep), os.str());
            return 0;
        }

        if (*conic) {
            auto parse_rat = [](const std::string& s) {
                auto slash = s.find('/');
                if (slash == std::string::npos) return Rational(BigInt(s));
                return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
            };
            auto r = conic_point(parse_rat(conic_coeffs[0]), parse_rat(conic_coeffs[1]),
                                 parse_rat(conic_coeffs[2]));
            std::ostringstream os;
            if (r.soluble)
                os << "soluble; point (" << r.point[0] << " : " << r.point[1] << " : "
                   << r.point[2] << ")";
            else
                os << "insoluble; obstruction at " << *r.obstruction;
            emit(out, "conic solve", to_json(r), os.str());
            return 0;
        }

        if (*census) {
            auto f = load_curve_file(census_input);
            FieldTower F(census_p, census_n);
            auto pts = singular_census(f, F, census_jobs);
            std::ostringstream os;
            os << pts.size() << " singular point(s) over F_" << F.q();
            for (const auto& sp : pts)
                os << "\n  " << census_point_str(F, sp.point) << " "
                   << (sp.kind == ModpSingKind::A1 ? "A1" : "degenerate");
            emit(out, "census", to_json(F, pts), os.str());
            return 0;
        }

        if (*count) {
            auto f = load_curve_file(count_input);
            auto rep =
                trace_report(f, count_p, count_n, budget_from_env(count_budget), count_jobs);
            std::ostringstream os;
            os << "p = " << rep.p;
            for (const auto& [n, e] : rep.entries)
                os << "\n  n=" << n << ": #X(F_" << e.q << ") = " << e.count
                   << ", trace = " << e.trace << ", nodes = " << e.rational_nodes
                   << (e.weil_ok ? "" : "  [WEIL BOUND VIOLATED]");
            emit(out, "count", to_json(rep), os.str());
            return 0;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 0;
}
