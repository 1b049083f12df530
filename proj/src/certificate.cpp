#include "surgcalc/certificate.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace surgcalc {

Factor Factor::band(std::vector<int> conjugator, int index) {
    return Factor{Kind::Band, std::move(conjugator), index, 0, 0};
}

Factor Factor::node(std::vector<int> conjugator, int start) {
    return full_twist(std::move(conjugator), start, 2);
}

Factor Factor::full_twist(std::vector<int> conjugator, int start, int multiplicity) {
    if (multiplicity < 2)
        throw CertificateError(CertificateErrorKind::BadMultiplicity,
                               "full twist multiplicity must be at least 2");
    return Factor{Kind::FullTwist, std::move(conjugator), 0, start, multiplicity};
}

BraidWord Factor::flatten(int strands) const {
    auto check = [&](int gen) {
        if (gen < 1 || gen > strands - 1)
            throw CertificateError(CertificateErrorKind::IndexOutOfRange,
                                   "generator index " + std::to_string(gen) +
                                   " out of range for Br_" + std::to_string(strands));
    };
    for (int l : conjugator) {
        if (l == 0)
            throw CertificateError(CertificateErrorKind::IndexOutOfRange,
                                   "conjugator letter 0");
        check(std::abs(l));
    }
    std::vector<int> core;
    if (kind == Kind::Band) {
        check(index);
        core.push_back(index);
    } else {
        check(start);
        check(start + multiplicity - 2);
        for (int rep = 0; rep < multiplicity; ++rep)
            for (int g = start; g <= start + multiplicity - 2; ++g) core.push_back(g);
    }
    BraidWord w(strands, conjugator);
    return w * BraidWord(strands, std::move(core)) * w.inverse();
}

BraidWord flatten(const Certificate& c) {
    BraidWord w(c.strands, {});
    for (const Factor& f : c.factors) w = w * f.flatten(c.strands);
    return free_reduce(w);
}

CertificateReport validate(const Certificate& c) {
    if (c.strands < 2)
        throw CertificateError(CertificateErrorKind::BadSchema, "need at least 2 strands");
    int bands = 0;
    CertificateReport rep;
    for (const Factor& f : c.factors) {
        if (f.kind == Factor::Kind::Band) {
            ++bands;
        } else {
            if (f.multiplicity < 2)
                throw CertificateError(CertificateErrorKind::BadMultiplicity,
                                       "full twist multiplicity must be at least 2");
            rep.genus += f.multiplicity * (f.multiplicity - 1) / 2;
            rep.surgery_coefficient += f.multiplicity * f.multiplicity;
            if (f.multiplicity >= 3) rep.extended = true;
        }
    }
    if (bands != c.strands - 1)
        throw CertificateError(CertificateErrorKind::BandCountMismatch,
                               "certificate has " + std::to_string(bands) + " bands, expected " +
                               std::to_string(c.strands - 1) + " for Br_" +
                               std::to_string(c.strands));
    rep.flattened = flatten(c);  // also range-checks all factors
    if (closure_components(rep.flattened) != 1)
        throw CertificateError(CertificateErrorKind::NotAKnot,
                               "closure of the flattened word has " +
                               std::to_string(closure_components(rep.flattened)) +
                               " components");
    rep.self_linking = 2 * rep.genus - 1;
    return rep;
}

Certificate twist_knot_certificate(int k) {
    if (k < 1) throw std::invalid_argument("twist_knot_certificate requires k >= 1");
    const int n = 2 * k + 2;
    auto conj_range = [](int i, int j) {  // conjugator of the embedded band sigma(i,j)
        std::vector<int> w;
        for (int g = i; g <= j - 1; ++g) w.push_back(g);
        return w;
    };
    Certificate c;
    c.strands = n;
    c.factors.push_back(Factor::band(conj_range(k + 1, 2 * k + 1), 2 * k + 1));
    c.factors.push_back(Factor::node(conj_range(1, 2 * k + 1), 2 * k + 1));
    for (int i = 1; i <= k; ++i) {
        c.factors.push_back(Factor::band(conj_range(i, k + i), k + i));
        c.factors.push_back(Factor::band(conj_range(i + 1, k + i), k + i));
    }
    return c;
}

namespace {
using nlohmann::json;

std::vector<int> int_list(const json& j) {
    if (!j.is_array())
        throw CertificateError(CertificateErrorKind::BadSchema, "conjugator must be an array");
    std::vector<int> v;
    for (const auto& x : j) v.push_back(x.get<int>());
    return v;
}
}  // namespace

Certificate certificate_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw CertificateError(CertificateErrorKind::BadSchema, e.what());
    }
    try {
        Certificate c;
        c.strands = j.at("strands").get<int>();
        for (const auto& jf : j.at("factors")) {
            std::string kind = jf.at("kind").get<std::string>();
            std::vector<int> conj =
                jf.contains("conjugator") ? int_list(jf["conjugator"]) : std::vector<int>{};
            if (kind == "band") {
                c.factors.push_back(Factor::band(std::move(conj), jf.at("index").get<int>()));
            } else if (kind == "twist") {
                c.factors.push_back(Factor::full_twist(std::move(conj),
                                                       jf.at("start").get<int>(),
                                                       jf.at("multiplicity").get<int>()));
            } else {
                throw CertificateError(CertificateErrorKind::BadSchema,
                                       "unknown factor kind '" + kind + "'");
            }
        }
        return c;
    } catch (const json::exception& e) {
        throw CertificateError(CertificateErrorKind::BadSchema, e.what());
    }
}

std::string certificate_to_json(const Certificate& c) {
    json j;
    j["strands"] = c.strands;
    j["factors"] = json::array();
    for (const Factor& f : c.factors) {
        json jf;
        jf["conjugator"] = f.conjugator;
        if (f.kind == Factor::Kind::Band) {
            jf["kind"] = "band";
            jf["index"] = f.index;
        } else {
            jf["kind"] = "twist";
            jf["start"] = f.start;
            jf["multiplicity"] = f.multiplicity;
        }
        j["factors"].push_back(std::move(jf));
    }
    return j.dump(2) + "\n";
}

Certificate load_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw CertificateError(CertificateErrorKind::BadSchema,
                               "cannot open certificate file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return certificate_from_json(ss.str());
}

}  // namespace surgcalc
