// qver: exact verification calculator for nef bundles with c1 = 2 on the
// quadric threefold and the quadric surface. Exit codes: 0 all checks pass,
// 1 a computed check failed, 2 usage or parse errors.

#include "CLI11.hpp"
#include "json.hpp"

#include "quadrics/bondal.hpp"
#include "quadrics/classify.hpp"
#include "quadrics/cohom.hpp"
#include "quadrics/expr.hpp"
#include "quadrics/kclass.hpp"
#include "quadrics/rr.hpp"

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace quadrics;

namespace {

struct check_failed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const CaseSpec& find_case(const std::string& theorem, const std::string& id) {
    const auto& cat = theorem == "q2" ? catalog_q2() : catalog_q3();
    for (const CaseSpec& c : cat)
        if (c.id == id)
            return c;
    throw std::domain_error("no case \"" + id + "\" in theorem " + theorem);
}

CohTable parse_table(const std::string& text, int len) {
    CohTable t = CohTable::unknown(len);
    std::istringstream is(text);
    std::string item;
    int q = 0;
    while (std::getline(is, item, ',')) {
        if (q >= len)
            throw std::domain_error("table \"" + text + "\" has more than " +
                                    std::to_string(len) + " entries");
        const auto a = item.find_first_not_of(" \t");
        const auto b = item.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw std::domain_error("empty entry in table \"" + text + "\"");
        try {
            t.h[q++] = Int(item.substr(a, b - a + 1));
        } catch (const std::exception&) {
            throw std::domain_error("bad integer \"" + item + "\" in table");
        }
    }
    if (q != len)
        throw std::domain_error("table \"" + text + "\" needs " +
                                std::to_string(len) + " entries");
    return t;
}

ExtGDims dims_from_tables(const std::vector<std::string>& tables) {
    return ext_g_dims(parse_table(tables[0], 4), parse_table(tables[1], 4),
                      parse_table(tables[2], 4), parse_table(tables[3], 4));
}

std::string int_str(const Int& n) { return n.str(); }

void emit(const json& j, const std::string& format) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
}

int cmd_chern(const std::string& theorem, const std::string& expr, int tw,
              const std::string& format) {
    if (theorem == "q2") {
        if (tw != 0)
            throw std::domain_error("--twist applies to the threefold only");
        const ChernData2 d = chern_of(parse_kclass2(expr));
        if (format == "json") {
            emit(json{{"rank", int_str(d.rank)},
                      {"c1", {int_str(d.c1a), int_str(d.c1b)}},
                      {"c2", int_str(d.c2)}},
                 format);
        } else {
            std::cout << "rank " << d.rank << "\nc1 (" << d.c1a << "," << d.c1b
                      << ")\nc2 " << d.c2 << "\n";
        }
        return 0;
    }
    const ChernData3 d = twist(chern_of(parse_kclass3(expr)), tw);
    if (format == "json") {
        emit(json{{"rank", int_str(d.rank)},
                  {"c1", int_str(d.c1)},
                  {"c2h", int_str(d.c2)},
                  {"c3", int_str(d.c3)}},
             format);
    } else {
        std::cout << "rank " << d.rank << "\nc1 " << d.c1 << "\nc2h " << d.c2
                  << "\nc3 " << d.c3 << "\n";
    }
    return 0;
}

int cmd_chi(const std::string& theorem, const std::string& expr, int tw,
            const std::string& format) {
    Int closed, oracle;
    if (theorem == "q2") {
        if (tw != 0)
            throw std::domain_error("--twist applies to the threefold only");
        const KClass2 x = parse_kclass2(expr);
        closed = chi_q2(x);
        oracle = chi_q2_oracle(x);
    } else {
        const KClass3 x = parse_kclass3(expr);
        closed = chi_q3_closed(chern_of(x), tw);
        oracle = chi_oracle(x, tw);
    }
    if (format == "json") {
        emit(json{{"expr", expr},
                  {"twist", tw},
                  {"closed", int_str(closed)},
                  {"oracle", int_str(oracle)},
                  {"chi", int_str(closed)}},
             format);
    } else {
        std::cout << "chi " << closed << "\n";
    }
    if (closed != oracle) {
        std::cerr << "chi routes disagree: closed " << closed << ", oracle "
                  << oracle << "\n";
        return 1;
    }
    return 0;
}

int cmd_table(const std::string& theorem, const std::string& atom, int tw,
              const std::string& format) {
    CohTable t;
    if (theorem == "q2") {
        const KClass2 x = parse_kclass2(atom);
        if (x.c.size() != 1 || x.c.begin()->second != 1 ||
            x.c.begin()->first.kind != AtomKind2::Line)
            throw std::domain_error("table expects a single line-bundle atom");
        const Atom2 a = x.c.begin()->first;
        t = table_line_q2(a.a + tw, a.b + tw);
    } else {
        const KClass3 x = parse_kclass3(atom);
        if (x.c.size() != 1 || x.c.begin()->second != 1)
            throw std::domain_error("table expects a single atom");
        const Atom3 a = x.c.begin()->first;
        if (a.kind == AtomKind3::Line)
            t = table_line_q3(a.t + tw);
        else if (a.kind == AtomKind3::Spinor)
            t = table_spinor_q3(a.t + tw);
        else
            throw std::domain_error(
                "tables are recorded for line and spinor atoms only");
    }
    if (format == "json") {
        json h = json::array();
        for (int q = 0; q < t.len; ++q)
            h.push_back(int_str(*t.h[q]));
        emit(json{{"h", h}, {"chi", int_str(t.chi())}}, format);
    } else {
        for (int q = 0; q < t.len; ++q)
            std::cout << "h^" << q << " " << *t.h[q] << "\n";
        std::cout << "chi " << t.chi() << "\n";
    }
    return 0;
}

json dims_json(const ExtGDims& d) {
    json rows = json::array();
    for (int q = 0; q < 4; ++q) {
        json row = json::array();
        for (int i = 0; i < 4; ++i)
            row.push_back(int_str(d.m[q][i]));
        rows.push_back(row);
    }
    return rows;
}

void print_dims(const ExtGDims& d) {
    std::cout << "q | E  S^vee.E  E(-1)  E(-2)\n";
    for (int q = 0; q < 4; ++q) {
        std::cout << q << " |";
        for (int i = 0; i < 4; ++i)
            std::cout << " " << d.m[q][i];
        std::cout << "\n";
    }
}

int cmd_ext(const CaseSpec* cs, const Int& r, int a,
            const std::vector<std::string>& tables, const std::string& format) {
    ExtGDims d;
    if (cs != nullptr)
        d = cs->ext_dims(r, a);
    else
        d = dims_from_tables(tables);
    if (format == "json")
        emit(json{{"m", dims_json(d)}}, format);
    else
        print_dims(d);
    return 0;
}

int cmd_bondal(const CaseSpec* cs, const Int& r, int a,
               const std::vector<std::string>& tables,
               const std::optional<std::string>& target_expr,
               const std::string& format) {
    ExtGDims d;
    std::optional<KClass3> target;
    if (cs != nullptr) {
        d = cs->ext_dims(r, a);
        target = cs->class_q3(r, a);
    } else {
        d = dims_from_tables(tables);
        if (target_expr)
            target = parse_kclass3(*target_expr);
    }
    const E2Page page = e2_page(d);
    const KClass3 sum = e2_signed_sum(page);
    std::optional<bool> ok;
    if (target)
        ok = abutment_check(page, *target);

    if (format == "json") {
        json entries = json::array();
        for (const auto& [pq, cls] : page.entries)
            entries.push_back(json{{"p", pq.first},
                                   {"q", pq.second},
                                   {"class", to_string(cls)}});
        json j{{"entries", entries}, {"signed_sum", to_string(sum)}};
        if (target) {
            j["target"] = to_string(*target);
            j["abutment"] = *ok;
        }
        emit(j, format);
    } else {
        for (const auto& [pq, cls] : page.entries)
            std::cout << "E2^{" << pq.first << "," << pq.second
                      << "} = " << to_string(cls) << "\n";
        std::cout << "signed sum " << to_string(sum) << "\n";
        if (target)
            std::cout << "target " << to_string(*target) << "\nabutment "
                      << (*ok ? "true" : "false") << "\n";
    }
    return target && !*ok ? 1 : 0;
}

int cmd_restrict(const std::string& expr, const std::string& format) {
    const KClass2 xr = restrict_to_q2(parse_kclass3(expr));
    const ChernData2 d = chern_of(xr);
    const Int chi = chi_q2(xr);
    if (chi_q2_oracle(xr) != chi)
        throw check_failed("chi routes disagree on the restriction");
    if (format == "json") {
        emit(json{{"class", to_string(xr)},
                  {"rank", int_str(d.rank)},
                  {"c1", {int_str(d.c1a), int_str(d.c1b)}},
                  {"c2", int_str(d.c2)},
                  {"chi", int_str(chi)}},
             format);
    } else {
        std::cout << "class " << to_string(xr) << "\nrank " << d.rank << "\nc1 ("
                  << d.c1a << "," << d.c1b << ")\nc2 " << d.c2 << "\nchi " << chi
                  << "\n";
    }
    return 0;
}

int cmd_wedge(const std::string& format) {
    const auto [minors, span] = wedge_span_check();
    if (format == "json")
        emit(json{{"minors_rank", minors}, {"span_dim", span}}, format);
    else
        std::cout << "independent minors " << minors
                  << "\nspan after identification " << span << "\n";
    return minors == 6 && span == 5 ? 0 : 1;
}

int cmd_verify(const std::string& theorem, std::optional<long long> rank_opt,
               std::optional<int> a_opt, const std::string& case_id,
               const std::string& format) {
    const auto& cat = theorem == "q2" ? catalog_q2() : catalog_q3();
    std::vector<VerificationReport> reports;
    for (const CaseSpec& cs : cat) {
        if (!case_id.empty() && cs.id != case_id)
            continue;
        std::vector<int> avals{0};
        if (cs.has_a)
            avals = a_opt ? std::vector<int>{*a_opt} : std::vector<int>{0, 1};
        else if (a_opt)
            continue;
        for (int a : avals) {
            std::vector<Int> ranks;
            if (rank_opt) {
                ranks.push_back(Int(*rank_opt));
            } else {
                const Int lo = cs.min_rank(a);
                for (int k = 0; k < 3; ++k)
                    ranks.push_back(lo + k);
            }
            for (const Int& r : ranks)
                reports.push_back(verify_case(cs, r, a));
        }
    }
    if (reports.empty())
        throw std::domain_error("no case matches the given selection");

    bool all = true;
    for (const auto& rep : reports)
        all = all && rep.pass;

    if (format == "json") {
        json arr = json::array();
        for (const auto& rep : reports) {
            for (const auto& ck : rep.checks) {
                json params{{"r", rep.r.convert_to<long long>()}};
                if (rep.a)
                    params["a"] = *rep.a;
                arr.push_back(
                    json{{"case_id", rep.case_id},
                         {"params", params},
                         {"computed", {{"name", ck.name}, {"value", ck.computed}}},
                         {"expected", {{"value", ck.expected}, {"citation", ck.citation}}},
                         {"pass", ck.pass}});
            }
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        int checks = 0, failed = 0;
        for (const auto& rep : reports) {
            std::cout << "case " << rep.case_id << " r=" << rep.r;
            if (rep.a)
                std::cout << " a=" << *rep.a;
            std::cout << ": " << (rep.pass ? "pass" : "FAIL") << "\n";
            for (const auto& ck : rep.checks) {
                ++checks;
                if (ck.pass) {
                    std::cout << "  ok   " << ck.name << " = " << ck.computed
                              << "\n";
                } else {
                    ++failed;
                    std::cout << "  FAIL " << ck.name << ": computed "
                              << ck.computed << ", expected " << ck.expected
                              << " (" << ck.citation << ")\n";
                }
            }
            for (const auto& n : rep.notes)
                std::cout << "  note " << n << "\n";
        }
        std::cout << reports.size() << " case instances, " << checks
                  << " checks, " << failed << " failed\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariant checks for nef bundles with c1 = 2 on quadrics"};
    app.require_subcommand(1);

    std::string theorem = "q3";
    std::string format = "text";
    std::string expr;
    std::string atom;
    std::string case_id;
    long long rank_ll = -1;
    int a_val = -1;
    int tw = 0;

    auto add_common = [&](CLI::App* sub, bool with_theorem = true) {
        sub->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        if (with_theorem)
            sub->add_option("--theorem", theorem, "q3 or q2")
                ->check(CLI::IsMember({"q3", "q2"}));
    };

    auto* c_chern = app.add_subcommand("chern", "Chern data of a K-class");
    c_chern->add_option("expr", expr, "K-class expression")->required();
    c_chern->add_option("--twist", tw, "tensor by O(t) first");
    add_common(c_chern);

    long long chi_t_pos = 0;
    auto* c_chi = app.add_subcommand("chi", "Euler characteristic, both routes");
    c_chi->add_option("expr", expr, "K-class expression")->required();
    auto* chi_pos = c_chi->add_option("t", chi_t_pos, "twist");
    auto* chi_tw = c_chi->add_option("--twist", tw, "twist");
    chi_pos->excludes(chi_tw);
    add_common(c_chi);

    auto* c_table = app.add_subcommand("table", "cohomology table of one atom");
    c_table->add_option("atom", atom, "O(t), S(t) or O(a,b)")->required();
    c_table->add_option("--twist", tw, "extra twist");
    add_common(c_table);

    std::vector<std::string> tables;
    auto* c_ext = app.add_subcommand(
        "ext", "Ext tables against O + S + O(1) + O(2), from a catalog case or "
               "from four h^q tables");
    c_ext->add_option("tables", tables,
                      "four comma-separated tables: E, S^vee.E, E(-1), E(-2)")
        ->expected(0, 4);
    c_ext->add_option("--case", case_id, "catalog case id");
    c_ext->add_option("--rank", rank_ll, "rank r");
    c_ext->add_option("--a", a_val, "extension parameter")->check(CLI::Range(0, 1));
    add_common(c_ext, false);

    std::string target_expr;
    auto* c_bondal = app.add_subcommand(
        "bondal", "E2 page from Ext tables; abutment check against a target");
    c_bondal->add_option("tables", tables,
                         "four comma-separated tables: E, S^vee.E, E(-1), E(-2)")
        ->expected(0, 4);
    c_bondal->add_option("--case", case_id, "catalog case id");
    c_bondal->add_option("--rank", rank_ll, "rank r");
    c_bondal->add_option("--a", a_val, "extension parameter")
        ->check(CLI::Range(0, 1));
    c_bondal->add_option("--target", target_expr, "abutment target class");
    add_common(c_bondal, false);

    auto* c_verify = app.add_subcommand("verify-cases",
                                        "re-derive every invariant per case");
    c_verify->add_option("--case", case_id, "verify a single case id");
    c_verify->add_option("--rank", rank_ll, "verify a single rank");
    c_verify->add_option("--a", a_val, "extension parameter")
        ->check(CLI::Range(0, 1));
    add_common(c_verify);

    auto* c_restrict = app.add_subcommand("restrict",
                                          "restrict a threefold class to Q2");
    c_restrict->add_option("expr", expr, "K-class expression")->required();
    add_common(c_restrict, false);

    auto* c_wedge = app.add_subcommand("wedge-check",
                                       "span of pairwise wedges of four sections");
    add_common(c_wedge, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_chern->parsed())
            return cmd_chern(theorem, expr, tw, format);
        if (c_chi->parsed()) {
            if (chi_pos->count() > 0)
                tw = static_cast<int>(chi_t_pos);
            return cmd_chi(theorem, expr, tw, format);
        }
        if (c_table->parsed())
            return cmd_table(theorem, atom, tw, format);
        if (c_ext->parsed() || c_bondal->parsed()) {
            const CaseSpec* cs = nullptr;
            Int r = 0;
            int a = a_val < 0 ? 0 : a_val;
            if (!case_id.empty()) {
                cs = &find_case("q3", case_id);
                if (cs->theorem != Theorem::Q3)
                    throw std::domain_error("ext tables exist on the threefold only");
                r = rank_ll < 0 ? cs->min_rank(a) : Int(rank_ll);
                if (r < cs->min_rank(a))
                    throw std::domain_error("rank below the case minimum");
                if (a != 0 && !cs->has_a)
                    throw std::domain_error("case has no parameter a");
            } else if (tables.size() != 4) {
                throw std::domain_error(
                    "give either --case or four h^q tables");
            }
            if (c_ext->parsed())
                return cmd_ext(cs, r, a, tables, format);
            std::optional<std::string> target;
            if (!target_expr.empty())
                target = target_expr;
            return cmd_bondal(cs, r, a, tables, target, format);
        }
        if (c_verify->parsed()) {
            std::optional<long long> ro;
            if (rank_ll >= 0)
                ro = rank_ll;
            std::optional<int> ao;
            if (a_val >= 0)
                ao = a_val;
            return cmd_verify(theorem, ro, ao, case_id, format);
        }
        if (c_restrict->parsed())
            return cmd_restrict(expr, format);
        if (c_wedge->parsed())
            return cmd_wedge(format);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
