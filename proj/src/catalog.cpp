#include "surgcalc/catalog.hpp"

#include "surgcalc/invariants.hpp"
#include "surgcalc/disk_class.hpp"
#include "surgcalc/torus.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace surgcalc {

std::string to_string(ObstructionReason r) {
    switch (r) {
        case ObstructionReason::NotQuasipositive: return "NotQuasipositive";
        case ObstructionReason::ClaspExceedsGenus: return "ClaspExceedsGenus";
        case ObstructionReason::NegativeDoublePoints: return "NegativeDoublePoints";
    }
    return "?";
}

std::vector<ObstructionReason> obstruct(bool quasipositive, int g, int c, int c_minus) {
    if (g < 0 || c < 0 || c_minus < 0) throw std::invalid_argument("negative invariant");
    if (c < g) throw std::invalid_argument("clasp number below slice genus is impossible");
    std::vector<ObstructionReason> reasons;
    if (!quasipositive) reasons.push_back(ObstructionReason::NotQuasipositive);
    if (c > g) reasons.push_back(ObstructionReason::ClaspExceedsGenus);
    if (c_minus > 0) reasons.push_back(ObstructionReason::NegativeDoublePoints);
    return reasons;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, '\t')) out.push_back(field);
    return out;
}

std::optional<std::string> opt_field(const std::string& s) {
    if (s == "-" || s.empty()) return std::nullopt;
    return s;
}

}  // namespace

std::vector<KnotRecord> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open catalog file " + path, 0);
    std::vector<KnotRecord> records;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        auto f = split_tabs(line);
        if (f.size() < 11) throw CatalogError("expected 11 tab-separated fields", line_no);
        try {
            KnotRecord r;
            r.name = f[0];
            r.quasipositive = (f[1] == "1" || f[1] == "Y");
            r.slice_genus = std::stoi(f[2]);
            if (auto c = opt_field(f[3])) r.clasp_number = std::stoi(*c);
            if (f[4] == "Y") r.fillable = true;
            else if (f[4] == "N") r.fillable = false;
            else throw CatalogError("fillable must be Y or N", line_no);
            if (auto mu = opt_field(f[5])) {
                long long v = std::stoll(*mu);
                if (f[6] == "1") r.mu_exact = v;
                else r.mu_upper = v;
            } else if (r.fillable) {
                throw CatalogError("fillable row needs a mu value or bound", line_no);
            }
            r.braid = opt_field(f[7]);
            r.certificate_file = opt_field(f[8]);
            r.obstruction = opt_field(f[9]);
            r.note = opt_field(f[10]).value_or("");
            if (!r.fillable && !r.obstruction)
                throw CatalogError("non-fillable row without an obstruction", line_no);
            if (r.mu_exact && r.mu_upper)
                throw CatalogError("mu cannot be both exact and an upper bound", line_no);
            records.push_back(std::move(r));
        } catch (const CatalogError&) {
            throw;
        } catch (const std::exception& e) {
            throw CatalogError(std::string("malformed row: ") + e.what(), line_no);
        }
    }
    return records;
}

std::string default_catalog_path() {
    return std::string(SURGCALC_DATA_DIR) + "/catalog.tsv";
}

namespace {

// "Torus knot T(5,3)" -> (5,3)
std::optional<std::pair<long long, long long>> torus_note(const std::string& note) {
    auto pos = note.find("T(");
    if (pos == std::string::npos) return std::nullopt;
    long long p = 0, q = 0;
    if (std::sscanf(note.c_str() + pos, "T(%lld,%lld)", &p, &q) != 2) return std::nullopt;
    return std::make_pair(p, q);
}

// "Twist knot K_7" -> 7
std::optional<int> twist_note(const std::string& note) {
    auto pos = note.find("K_");
    if (pos == std::string::npos) return std::nullopt;
    return std::atoi(note.c_str() + pos + 2);
}

}  // namespace

TableReport verify_table(const std::vector<KnotRecord>& records, const std::string& cert_dir) {
    TableReport rep;
    for (const KnotRecord& r : records) {
        ++rep.rows;
        auto fail = [&](const std::string& what) { rep.failures.push_back({r.name, what}); };
        if (!r.fillable) {
            ++rep.fillable_no;
            try {
                auto reasons = obstruct(r.quasipositive, r.slice_genus,
                                        r.clasp_number.value_or(r.slice_genus), 0);
                if (reasons.empty()) fail("no obstruction applies");
            } catch (const std::exception& e) {
                fail(std::string("obstruction check: ") + e.what());
            }
            continue;
        }
        ++rep.fillable_yes;
        long long bound = r.mu_exact ? *r.mu_exact : r.mu_upper.value_or(-1);
        if (bound < 0) { fail("missing mu bound"); continue; }
        const int g = r.slice_genus;
        if (g == 0) {
            if (bound != 0) fail("slice row must have mu = 0");
        } else {
            auto mb = mu_bounds(g, false);
            if (bound < mb.lower || bound > mb.upper)
                fail("mu bound " + std::to_string(bound) + " outside [" +
                     std::to_string(mb.lower) + "," + std::to_string(mb.upper) + "]");
        }
        if (auto pq = torus_note(r.note)) {
            long long mu = mu_torus(pq->first, pq->second);
            if (!r.mu_exact || mu != *r.mu_exact)
                fail("torus formula gives mu = " + std::to_string(mu));
            if ((pq->first - 1) * (pq->second - 1) / 2 != g)
                fail("torus genus mismatch");
        }
        if (auto ell = twist_note(r.note)) {
            Certificate tc = twist_knot_certificate((*ell - 1) / 2);
            CertificateReport tr = validate(tc);
            if (tr.genus != 1 || tr.surgery_coefficient != 4)
                fail("twist certificate does not report (g,r) = (1,4)");
            if (tr.genus != g) fail("twist genus mismatch");
            if (!r.mu_exact || *r.mu_exact != 4) fail("twist row must have mu = 4");
        }
        if (r.certificate_file) {
            try {
                Certificate c = load_certificate(cert_dir + "/" + *r.certificate_file);
                CertificateReport cr = validate(c);
                if (cr.surgery_coefficient > bound)
                    fail("certificate r = " + std::to_string(cr.surgery_coefficient) +
                         " exceeds stated bound " + std::to_string(bound));
                if (cr.genus != g)
                    fail("certificate genus " + std::to_string(cr.genus) +
                         " != slice genus " + std::to_string(g));
                if (r.braid) {
                    BraidWord stated = free_reduce(parse_braid(*r.braid));
                    if (!(stated == cr.flattened))
                        fail("braid column does not match the flattened certificate");
                }
            } catch (const std::exception& e) {
                fail(std::string("certificate: ") + e.what());
            }
        }
    }
    return rep;
}

}  // namespace surgcalc
