#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hk/faberkrahn.hpp"
#include "hk/functional.hpp"
#include "hk/harness.hpp"
#include "hk/isoperimetry.hpp"
#include "hk/pleijel.hpp"
#include "hk/weyl.hpp"

namespace {

using namespace hk;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct NamedValue {
    std::string label;
    Value value;
    std::string direction;
    std::string hypothesis;
    std::vector<std::string> route;
};

NamedValue from_bound(std::string label, const Bound& b) {
    return {std::move(label), b.value, to_string(b.direction), to_string(b.hypothesis), b.route};
}

void print_values(const std::vector<NamedValue>& vals, Format f) {
    switch (f) {
        case Format::Text:
            for (const auto& v : vals) {
                std::cout << v.label << ' ' << format_number(v.value.estimate()) << " +- "
                          << format_number(v.value.err());
                if (!v.direction.empty()) std::cout << ' ' << v.direction << ' ' << v.hypothesis;
                std::cout << '\n';
                if (!v.route.empty()) {
                    std::cout << "  route:";
                    for (const auto& r : v.route) std::cout << ' ' << r;
                    std::cout << '\n';
                }
            }
            break;
        case Format::Csv: {
            std::cout << "label,estimate,err,method,direction,hypothesis,route\r\n";
            for (const auto& v : vals) {
                std::string route;
                for (const auto& r : v.route) route += (route.empty() ? "" : " ") + r;
                std::cout << csv_field(v.label) << ',' << format_number(v.value.estimate()) << ','
                          << format_number(v.value.err()) << ',' << to_string(v.value.method()) << ','
                          << v.direction << ',' << v.hypothesis << ',' << csv_field(route) << "\r\n";
            }
            break;
        }
        case Format::Json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& v : vals) {
                nlohmann::json o{{"label", v.label}, {"value", v.value}};
                if (!v.direction.empty()) {
                    o["direction"] = v.direction;
                    o["hypothesis"] = v.hypothesis;
                    o["route"] = v.route;
                }
                arr.push_back(o);
            }
            std::cout << arr.dump(2) << '\n';
            break;
        }
    }
}

Hypothesis parse_hypothesis(const std::string& s) {
    return s == "pansu" ? Hypothesis::PansuConjecture : Hypothesis::Unconditional;
}

std::vector<NamedValue> constant_values(const std::string& name, int n, int k, const std::string& method,
                                        Hypothesis hyp) {
    GroupSpec g(n, k);
    if (name == "cn") {
        if (k != 0) throw Error(ErrorKind::Domain, "c_n takes no k");
        CnMethod m = method == "series"   ? CnMethod::DirectSeries
                     : method == "closed" ? CnMethod::ClosedFormTable
                                          : CnMethod::HurwitzReduction;
        CnResult r = cn(n, m);
        return {{std::string("c_") + std::to_string(n) + " " + to_string(r.method), r.value, "", "", {}}};
    }
    if (name == "weyl") {
        Value w = n == 0 ? weyl_euclidean(k) : weyl_hn_rk(g);
        return {{"weyl", w, "", "", {}}};
    }
    if (name == "sobolev") {
        if (n == 0) return {{"sobolev", sobolev_euclidean(k), "", "", {}}};
        if (k == 0) return {{"sobolev", sobolev_heisenberg(n), "", "", {}}};
        return {from_bound("sobolev", sobolev_lift_best(g))};
    }
    if (name == "gn") {
        if (n == 0) throw Error(ErrorKind::Unsupported, "gn is reported at the lifting exponent, which needs n >= 1");
        return {from_bound("gn", lifting_gn_constant(g))};
    }
    if (name == "iso") {
        if (n == 0) return {{"iso", iso_euclidean(k), "", "", {}}};
        IsoValue base = hyp == Hypothesis::PansuConjecture ? pansu_isoperimetric(n) : iso_lower_heisenberg(n);
        return {from_bound("iso", iso_lift(g, base).bound)};
    }
    if (name == "fk") {
        FKSelection s = fk_best(g, hyp);
        return {from_bound(std::string("fk ") + to_string(s.best.name), s.best.bound)};
    }
    throw Error(ErrorKind::Domain, "unknown constant '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral constants on Heisenberg groups and products with R^k"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    };

    auto* constant = app.add_subcommand("constant", "evaluate one constant");
    std::string c_name, c_method = "hurwitz", c_hyp = "unconditional";
    int c_n = 1, c_k = 0;
    constant->add_option("--name", c_name)->required()->check(
        CLI::IsMember({"cn", "weyl", "sobolev", "gn", "iso", "fk"}));
    constant->add_option("--n", c_n);
    constant->add_option("--k", c_k);
    constant->add_option("--method", c_method, "c_n method")->check(CLI::IsMember({"series", "hurwitz", "closed"}));
    constant->add_option("--hypothesis", c_hyp)->check(CLI::IsMember({"unconditional", "pansu"}));
    add_format(constant);

    auto* bound = app.add_subcommand("bound", "upper bound on the Pleijel constant");
    std::string b_quantity, b_hyp = "unconditional";
    int b_n = 1, b_k = 0;
    bool b_all = false;
    bound->add_option("--quantity", b_quantity)->required()->check(CLI::IsMember({"pleijel"}));
    bound->add_option("--n", b_n);
    bound->add_option("--k", b_k);
    bound->add_option("--hypothesis", b_hyp)->check(CLI::IsMember({"unconditional", "pansu"}));
    bound->add_flag("--all-routes", b_all);
    add_format(bound);

    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    std::string v_suite;
    double v_tol = 1.0;
    verify->add_option("--suite", v_suite)->required()->check(
        CLI::IsMember({"maincomp", "pansu", "bessel", "hps", "tables", "series", "lifting", "all"}));
    verify->add_option("--tol-mult", v_tol)->check(CLI::Range(0.1, 100.0));
    add_format(verify);

    auto* table = app.add_subcommand("table", "emit a report table");
    std::string t_name;
    int t_max_n = 13;
    table->add_option("--name", t_name)->required()->check(
        CLI::IsMember({"cn", "gamma_tilde", "quotients", "constants", "routes"}));
    table->add_option("--max-n", t_max_n)->check(CLI::Range(1, 13));
    add_format(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Format f = format_from_string(format);
        if (*constant) {
            print_values(constant_values(c_name, c_n, c_k, c_method, parse_hypothesis(c_hyp)), f);
            return kOk;
        }
        if (*bound) {
            Hypothesis h = parse_hypothesis(b_hyp);
            if (b_n == 0) {
                Value g = gamma_euclidean(b_k);
                print_values({{"gamma_euclidean", g, "exact", "unconditional", {"gamma_euclidean"}}}, f);
                return kOk;
            }
            PleijelBound pb = best_gamma_bound(GroupSpec(b_n, b_k), h);
            std::vector<NamedValue> vals{from_bound(std::string("upper ") + to_string(pb.winner), pb.bound)};
            vals.back().route = pb.route;
            vals.push_back({"headline", Value::exact(pb.headline()), "", "", {}});
            if (b_all)
                for (const auto& c : pb.candidates)
                    vals.push_back(from_bound(std::string("candidate ") + to_string(c.name), c.bound));
            print_values(vals, f);
            return kOk;
        }
        if (*verify) {
            Campaign c = run_campaign(campaign_from_string(v_suite), v_tol);
            emit_records(c.records, f, std::cout);
            return c.exit_status == 0 ? kOk : kVerifyFailed;
        }
        if (*table) {
            emit_table(build_table(table_from_string(t_name), t_max_n), f, std::cout);
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
