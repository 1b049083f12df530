#include "surgcalc/cli.hpp"

#include "surgcalc/braid.hpp"
#include "surgcalc/catalog.hpp"
#include "surgcalc/certificate.hpp"
#include "surgcalc/constructions.hpp"
#include "surgcalc/disk_class.hpp"
#include "surgcalc/invariants.hpp"
#include "surgcalc/torus.hpp"

#include "CLI11.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace surgcalc {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& p : parts) {
        if (!s.empty()) s += " ";
        s += p;
    }
    return s;
}

std::string schedule_str(const std::vector<BlowupStep>& sched) {
    std::string s;
    for (const auto& st : sched) {
        if (!s.empty()) s += " ";
        s += std::to_string(st.multiplicity) + "x" + std::to_string(st.count);
    }
    return s.empty() ? "-" : s;
}

int cmd_torus(long long p, long long q, bool tsv, std::ostream& out) {
    TorusReport rep = blowup_schedule(p, q);
    if (tsv) {
        out << "p\t" << rep.p << "\n"
            << "q\t" << rep.q << "\n"
            << "cf\t" << rep.cf.str() << "\n"
            << "mu\t" << rep.mu << "\n"
            << "m\t" << rep.m.str() << "\n"
            << "c\t" << rep.c.str() << "\n"
            << "genus\t" << rep.genus << "\n"
            << "schedule\t" << schedule_str(rep.schedule) << "\n"
            << "diskclass\t" << rep.disk_class.format() << "\n";
        return 0;
    }
    out << "T(" << rep.p << "," << rep.q << ")\n"
        << "  continued fraction  " << rep.cf.str() << "   [p/q = a_1 + 1/(a_2 + ...)]\n"
        << "  slice genus         " << rep.genus << "   [g = (p-1)(q-1)/2]\n"
        << "  mu                  " << rep.mu << "   [mu = pq - a_n, minimal integral fillable coefficient]\n"
        << "  m                   " << rep.m.str() << "   [m = pq - c(p,q), Owens-Strle; mu = ceil(m)]\n"
        << "  c(p,q)              " << rep.c.str() << "   [reversed continued fraction]\n"
        << "  blowup schedule     " << schedule_str(rep.schedule)
        << "   [a_j blowups of multiplicity p_j]\n"
        << "  disk class          {" << rep.disk_class.format() << "}   [sum n_j^2 = "
        << surgery_coefficient(rep.disk_class) << " = pq - a_n = mu]\n";
    return 0;
}

int cmd_braid(const std::string& text, bool tsv, std::ostream& out) {
    BraidWord w = parse_braid(text);
    Permutation perm = permutation(w);
    int comps = perm.cycle_count();
    std::string alex = "-";
    if (comps == 1) alex = alexander(w).str();
    if (tsv) {
        out << "word\t" << w.format() << "\n"
            << "strands\t" << w.strands() << "\n"
            << "length\t" << w.length() << "\n"
            << "exponent_sum\t" << exponent_sum(w) << "\n"
            << "components\t" << comps << "\n"
            << "self_linking\t" << self_linking(w) << "\n"
            << "alexander\t" << alex << "\n";
        return 0;
    }
    out << w.format() << "\n"
        << "  strands        " << w.strands() << "\n"
        << "  length         " << w.length() << "\n"
        << "  exponent sum   " << exponent_sum(w) << "\n"
        << "  closure        " << comps << " component" << (comps == 1 ? "" : "s") << "\n"
        << "  self-linking   " << self_linking(w) << "   [sl = e - n]\n";
    if (comps == 1)
        out << "  Alexander      " << alex << "   [det(Burau - I)/(1 + t + ... + t^{n-1})]\n";
    else
        out << "  Alexander      -   [closure is not a knot]\n";
    return 0;
}

int cmd_certify(const std::string& path, bool tsv, std::ostream& out, std::ostream& err) {
    Certificate c = load_certificate(path);
    CertificateReport rep;
    try {
        rep = validate(c);
    } catch (const CertificateError& e) {
        err << "invalid certificate: " << e.what() << "\n";
        return 1;
    }
    if (tsv) {
        out << "genus\t" << rep.genus << "\n"
            << "r\t" << rep.surgery_coefficient << "\n"
            << "sl\t" << rep.self_linking << "\n"
            << "extended\t" << (rep.extended ? 1 : 0) << "\n"
            << "braid\t" << rep.flattened.format() << "\n";
        return 0;
    }
    out << "valid quasipositive certificate on " << c.strands << " strands\n"
        << "  genus      " << rep.genus << "   [g = sum m_j(m_j-1)/2]\n"
        << "  r          " << rep.surgery_coefficient
        << "   [fillable coefficient r = sum m_j^2 = 2g + sum m_j]\n"
        << "  sl         " << rep.self_linking << "   [sl = 2g - 1]\n"
        << "  braid      " << rep.flattened.format() << "\n";
    if (rep.extended)
        out << "  note       uses a full twist of multiplicity >= 3 (extended form)\n";
    return 0;
}

int cmd_diskclass(const std::string& text, bool down, bool up, bool tsv, std::ostream& out,
                  std::ostream& err) {
    DiskClass d = DiskClass::parse(text);
    if (down) {
        try {
            d = blow_down(d);
        } catch (const NoUnitPart& e) {
            err << e.what() << "\n";
            return 1;
        }
    }
    if (up) d = blow_up_point(d);
    if (tsv) {
        out << "parts\t" << d.format() << "\n"
            << "r\t" << surgery_coefficient(d) << "\n"
            << "genus\t" << genus_of(d) << "\n";
        return 0;
    }
    out << "{" << d.format() << "}\n"
        << "  r       " << surgery_coefficient(d) << "   [r = -Delta.Delta = sum n_j^2]\n"
        << "  genus   " << genus_of(d) << "   [2g = sum n_j(n_j-1)]\n";
    return 0;
}

int cmd_gapset(int limit, bool tsv, std::ostream& out) {
    auto computed = gap_set(limit);
    const auto& cited = cited_gap_list();
    auto extra = gap_list_discrepancy(limit);
    auto list_str = [](const std::vector<int>& v) {
        std::string s;
        for (int x : v) {
            if (!s.empty()) s += ",";
            s += std::to_string(x);
        }
        return s.empty() ? "-" : s;
    };
    if (tsv) {
        out << "limit\t" << limit << "\n"
            << "computed\t" << list_str(computed) << "\n"
            << "cited\t" << list_str(cited) << "\n"
            << "discrepancy\t" << list_str(extra) << "\n";
        return 0;
    }
    out << "gaps of the semigroup generated by squares >= 4, up to " << limit << ":\n"
        << "  computed  " << list_str(computed) << "\n"
        << "  cited     " << list_str(cited) << "   [published list]\n";
    if (extra.empty())
        out << "  no discrepancy in this range\n";
    else
        out << "  DISCREPANCY: computed but not cited: " << list_str(extra)
            << "   [23 = Frobenius number of <4,9,25,...>]\n";
    return 0;
}

int cmd_consistent(long long r, long long g, bool tsv, std::ostream& out) {
    auto classes = consistent_classes(r, g);
    if (tsv) {
        out << "r\t" << r << "\n"
            << "g\t" << g << "\n"
            << "count\t" << classes.size() << "\n";
        for (const auto& d : classes) out << "class\t" << d.format() << "\n";
        return 0;
    }
    out << "disk classes with r = sum n_j^2 = " << r << " and 2g = sum n_j(n_j-1) = "
        << 2 * g << ":\n";
    if (classes.empty()) {
        out << "  none: no embedded disk class is consistent with (r, g) = (" << r << ", "
            << g << ")\n";
        return 0;
    }
    for (const auto& d : classes) out << "  {" << d.format() << "}\n";
    return 0;
}

int print_verdict(const ConstructionVerdict& v, bool tsv, std::ostream& out) {
    bool yes = v.fillable == ConstructionVerdict::Fillable::Yes;
    if (tsv) {
        out << "rule\t" << v.rule << "\n"
            << "fillable\t" << (yes ? "yes" : "not-determined") << "\n"
            << "bound\t" << (v.coefficient_bound ? std::to_string(*v.coefficient_bound) : "-")
            << "\n"
            << "budget\t"
            << (v.crossing_change_budget ? std::to_string(*v.crossing_change_budget) : "-")
            << "\n"
            << "contradiction\t" << (v.contradiction ? 1 : 0) << "\n";
    } else {
        out << "rule: " << v.rule << "\n"
            << "  fillable positive surgery: "
            << (v.contradiction ? "CONTRADICTORY INPUT"
                                : (yes ? "yes" : "not determined by this rule"))
            << "\n";
        if (v.coefficient_bound)
            out << "  fillable coefficient bound: " << *v.coefficient_bound << "\n";
        if (v.crossing_change_budget)
            out << "  crossing-change budget: " << *v.crossing_change_budget
                << "   [(l - n + 1)/2]\n";
        out << "  " << v.notes << "\n";
    }
    return v.contradiction ? 1 : 0;
}

int cmd_table(const std::string& catalog, const std::string& certs, bool tsv, std::ostream& out,
              std::ostream& err) {
    auto records = load_catalog(catalog);
    TableReport rep = verify_table(records, certs);
    if (tsv) {
        out << "rows\t" << rep.rows << "\n"
            << "fillable_yes\t" << rep.fillable_yes << "\n"
            << "fillable_no\t" << rep.fillable_no << "\n"
            << "failures\t" << rep.failures.size() << "\n";
        for (const auto& f : rep.failures) out << "failure\t" << f.name << "\t" << f.what << "\n";
    } else {
        out << "verified " << rep.rows << " rows: " << rep.fillable_yes
            << " admit a fillable positive surgery, " << rep.fillable_no
            << " do not   [48 / 11 of the 59 quasipositive knots through 10 crossings]\n";
        if (rep.ok()) {
            out << "all checks passed (certificates, mu bounds, torus/twist formulas, "
                   "obstructions)\n";
        } else {
            for (const auto& f : rep.failures)
                err << "FAIL " << f.name << ": " << f.what << "\n";
        }
    }
    return rep.ok() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"surgery calculator: fillable positive contact surgeries on knots"};
    app.require_subcommand(1);
    app.fallthrough();
    bool tsv = false;
    app.add_flag("--tsv", tsv, "machine-readable tab-separated output");

    long long p = 0, q = 0, m = 0, r = 0, g = 0;
    int limit = 0, lens_g = 0;
    std::vector<std::string> word;
    std::string file, parts_text, catalog_path, certs_dir;
    bool blowdown = false, blowup = false;
    std::optional<int> sat_genus;

    auto* torus = app.add_subcommand("torus", "exact invariants of the torus knot T(p,q)");
    torus->add_option("p", p)->required();
    torus->add_option("q", q)->required();

    auto* braid = app.add_subcommand("braid", "invariants of a braid word, e.g. \"B3: 1 1 1\"");
    braid->add_option("word", word, "braid word in B-grammar")->required()->expected(-1);

    auto* certify = app.add_subcommand("certify", "validate a quasipositive certificate file");
    certify->add_option("file", file)->required();

    auto* diskclass = app.add_subcommand("diskclass", "invariants of a disk class, e.g. 3,2,2");
    diskclass->add_option("parts", parts_text)->required();
    diskclass->add_flag("--blow-down", blowdown, "remove one part equal to 1 first");
    diskclass->add_flag("--blow-up", blowup, "add a part equal to 1 first");

    auto* gapset_cmd = app.add_subcommand("gapset", "coefficients forcing a slice disk");
    gapset_cmd->add_option("limit", limit)->required()->check(CLI::NonNegativeNumber);

    auto* consistent = app.add_subcommand("consistent", "disk classes with given (r, g)");
    consistent->add_option("r", r)->required();
    consistent->add_option("g", g)->required();

    auto* construct = app.add_subcommand("construct", "sufficient-condition rules");
    construct->require_subcommand(1);
    auto* pb = construct->add_subcommand("positive-braid", "closure of a positive braid");
    pb->add_option("word", word)->required()->expected(-1);
    auto* lens = construct->add_subcommand("lens", "knot with a positive lens-space surgery");
    lens->add_option("genus", lens_g)->required();
    lens->add_option("coefficient", m)->required();
    auto* satellite = construct->add_subcommand("satellite", "twisted satellite of a fillable companion");
    satellite->add_option("pattern", file, "certificate file for the pattern")->required();
    satellite->add_option("m", m, "fillable companion coefficient")->required();
    satellite->add_option("--genus", sat_genus, "slice genus of the satellite, if known");
    auto* cable = construct->add_subcommand("cable", "(p,q)-cable of a fillable companion");
    cable->add_option("p", p)->required();
    cable->add_option("q", q)->required();
    cable->add_option("m", m, "fillable companion coefficient")->required();

    auto* table = app.add_subcommand("table", "verify the shipped knot table");
    table->add_option("--catalog", catalog_path, "catalog TSV path");
    table->add_option("--certs", certs_dir, "certificate directory");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*torus) return cmd_torus(p, q, tsv, out);
        if (*braid) return cmd_braid(join(word), tsv, out);
        if (*certify) return cmd_certify(file, tsv, out, err);
        if (*diskclass) return cmd_diskclass(parts_text, blowdown, blowup, tsv, out, err);
        if (*gapset_cmd) return cmd_gapset(limit, tsv, out);
        if (*consistent) return cmd_consistent(r, g, tsv, out);
        if (*construct) {
            if (*pb) return print_verdict(positive_braid_rule(parse_braid(join(word))), tsv, out);
            if (*lens) return print_verdict(lens_rule(lens_g, m), tsv, out);
            if (*satellite)
                return print_verdict(satellite_rule(load_certificate(file), m, sat_genus), tsv,
                                     out);
            if (*cable) return print_verdict(cable_rule(p, q, m), tsv, out);
        }
        if (*table) {
            if (catalog_path.empty()) catalog_path = default_catalog_path();
            if (certs_dir.empty()) certs_dir = std::string(SURGCALC_DATA_DIR) + "/certs";
            return cmd_table(catalog_path, certs_dir, tsv, out, err);
        }
    } catch (const BraidParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const CatalogError& e) {
        err << "catalog error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace surgcalc
