#include "report.hpp"

#include <nlohmann/json.hpp>

#include <iomanip>
#include <sstream>

namespace pc {

using json = nlohmann::ordered_json;

namespace {

json field_json(const Field& f) {
    return {{"p", f.characteristic()}, {"k", f.degree()}, {"q", f.order()}};
}

json meta_json(const CensusMeta& m, const Field& f) {
    json j;
    j["field"] = field_json(f);
    j["n"] = m.n;
    j["total"] = m.total.str();
    j["elapsed_ms"] = m.elapsed_ms;
    j["workers"] = m.workers;
    return j;
}

std::string text_header(const CensusMeta& m, const Field& f) {
    std::ostringstream os;
    os << "field GF(" << f.order() << ")  n=" << m.n << "  total=" << m.total.str()
       << "  workers=" << m.workers << "  elapsed_ms=" << std::fixed << std::setprecision(1)
       << m.elapsed_ms << "\n";
    return os.str();
}

} // namespace

Format format_from_name(std::string_view name) {
    if (name == "json") return Format::json;
    if (name == "text") return Format::text;
    if (name == "csv") return Format::csv;
    fail(errc::parse_error, "unknown format '" + std::string(name) + "'");
}

std::string report_joint(const JointCensus& c, const Field& f, Format fmt) {
    if (fmt == Format::json) {
        json j = meta_json(c.meta, f);
        json counts = json::object();
        for (std::uint32_t p = 0; p < c.meta.q; ++p)
            for (std::uint32_t d = 0; d < c.meta.q; ++d) {
                std::uint64_t v = c.at(fe(p), fe(d));
                if (v) counts["per=" + f.to_string(fe(p)) + ";det=" + f.to_string(fe(d))] = v;
            }
        j["counts"] = counts;
        j["P"] = c.zero_per().str();
        j["D"] = c.zero_det().str();
        return j.dump(2);
    }
    if (fmt == Format::csv) {
        std::ostringstream os;
        os << "per,det,count\n";
        for (std::uint32_t p = 0; p < c.meta.q; ++p)
            for (std::uint32_t d = 0; d < c.meta.q; ++d)
                os << f.to_string(fe(p)) << "," << f.to_string(fe(d)) << "," << c.at(fe(p), fe(d))
                   << "\n";
        return os.str();
    }
    std::ostringstream os;
    os << text_header(c.meta, f);
    os << "P_" << c.meta.n << " = " << c.zero_per().str() << "\n";
    os << "D_" << c.meta.n << " = " << c.zero_det().str() << "\n";
    os << std::left << std::setw(12) << "per" << std::setw(12) << "det" << "count\n";
    for (std::uint32_t p = 0; p < c.meta.q; ++p)
        for (std::uint32_t d = 0; d < c.meta.q; ++d)
            if (auto v = c.at(fe(p), fe(d)))
                os << std::left << std::setw(12) << f.to_string(fe(p)) << std::setw(12)
                   << f.to_string(fe(d)) << v << "\n";
    return os.str();
}

std::string report_nr(const NrCensus& c, const Field& f, Format fmt) {
    if (fmt == Format::json) {
        json j = meta_json(c.meta, f);
        json counts = json::object();
        for (int r = 0; r <= c.m; ++r) counts[std::to_string(r)] = c.by_rank[r];
        j["counts"] = counts;
        j["P"] = c.zero_per().str();
        return j.dump(2);
    }
    if (fmt == Format::csv) {
        std::ostringstream os;
        os << "r,count\n";
        for (int r = 0; r <= c.m; ++r) os << r << "," << c.by_rank[r] << "\n";
        return os.str();
    }
    std::ostringstream os;
    os << text_header(c.meta, f);
    for (int r = 0; r <= c.m; ++r)
        os << "N^(" << r << ")_" << c.m << " = " << c.by_rank[r] << "\n";
    os << "P_" << c.m << " = " << c.zero_per().str() << "\n";
    return os.str();
}

std::string report_classes(const ValueClassCensus& c, const Field& f, Format fmt) {
    if (fmt == Format::json) {
        json j = meta_json(c.meta, f);
        json counts = json::object();
        for (std::uint32_t v = 0; v < c.meta.q; ++v)
            counts["det=" + f.to_string(fe(v))] = c.det_hist[v];
        for (std::uint32_t v = 0; v < c.meta.q; ++v)
            counts["per=" + f.to_string(fe(v))] = c.per_hist[v];
        j["counts"] = counts;
        return j.dump(2);
    }
    if (fmt == Format::csv) {
        std::ostringstream os;
        os << "stat,value,count\n";
        for (std::uint32_t v = 0; v < c.meta.q; ++v)
            os << "det," << f.to_string(fe(v)) << "," << c.det_hist[v] << "\n";
        for (std::uint32_t v = 0; v < c.meta.q; ++v)
            os << "per," << f.to_string(fe(v)) << "," << c.per_hist[v] << "\n";
        return os.str();
    }
    std::ostringstream os;
    os << text_header(c.meta, f);
    os << std::left << std::setw(8) << "stat" << std::setw(12) << "value" << "count\n";
    for (std::uint32_t v = 0; v < c.meta.q; ++v)
        os << std::left << std::setw(8) << "det" << std::setw(12) << f.to_string(fe(v))
           << c.det_hist[v] << "\n";
    for (std::uint32_t v = 0; v < c.meta.q; ++v)
        os << std::left << std::setw(8) << "per" << std::setw(12) << f.to_string(fe(v))
           << c.per_hist[v] << "\n";
    return os.str();
}

std::string report_sample(const SampleEstimate& e, const Field& f, Format fmt,
                          const std::string& stat, const std::string& target,
                          const std::string& exact_prob) {
    if (fmt == Format::json) {
        json j = meta_json(e.meta, f);
        j["stat"] = stat;
        j["target"] = target;
        j["trials"] = e.trials;
        j["hits"] = e.hits;
        j["estimate"] = e.estimate;
        j["std_error"] = e.std_error;
        j["seed"] = e.seed;
        if (!exact_prob.empty()) j["exact"] = exact_prob;
        return j.dump(2);
    }
    std::ostringstream os;
    os << text_header(e.meta, f);
    os << "P(" << stat << " = " << target << ") ~ " << std::setprecision(10) << e.estimate
       << "  (hits " << e.hits << "/" << e.trials << ", s.e. " << e.std_error << ", seed "
       << e.seed << ")\n";
    if (!exact_prob.empty()) os << "exact = " << exact_prob << "\n";
    return os.str();
}

std::string report_bounds(int n, Format fmt) {
    IntPoly L = bound_L(n), U = bound_U(n);
    if (fmt == Format::json) {
        json j;
        j["n"] = n;
        j["L"] = L.coeff_strings();
        j["U"] = U.coeff_strings();
        if (n >= 4) {
            auto sets = build_bounds(n);
            const BoundSet& b = sets.back();
            j["N0"] = b.N0.coeff_strings();
            j["N1"] = b.N1.coeff_strings();
        }
        j["note"] = "coefficient lists from degree 0 upward";
        return j.dump(2);
    }
    std::ostringstream os;
    os << "L_" << n << " = " << L.to_string() << "\n";
    os << "U_" << n << " = " << U.to_string() << "\n";
    return os.str();
}

std::string report_thresholds(int n_min, int n_max, Format fmt) {
    std::ostringstream os;
    if (fmt == Format::json) {
        json rows = json::array();
        for (int n = n_min; n <= n_max; ++n) {
            ThresholdRow r = find_threshold(n);
            rows.push_back({{"n", r.n}, {"i", r.i}, {"q", r.q}});
        }
        return json{{"rows", rows}}.dump(2);
    }
    os << "n,i,q\n";
    for (int n = n_min; n <= n_max; ++n) {
        ThresholdRow r = find_threshold(n);
        os << r.n << "," << r.i << "," << r.q << "\n";
    }
    return os.str();
}

std::string report_verify(const VerifyResult& r, const Field& f, Format fmt) {
    if (fmt == Format::json) {
        json j;
        j["map"] = r.name;
        j["field"] = field_json(f);
        j["pass"] = r.pass;
        j["checked"] = r.checked;
        if (!r.pass) j["counterexample"] = r.counterexample;
        j["elapsed_ms"] = r.elapsed_ms;
        return j.dump(2);
    }
    std::ostringstream os;
    os << r.name << " over GF(" << f.order() << "): " << (r.pass ? "pass" : "FAIL") << " ("
       << r.checked << " checked)";
    if (!r.pass) os << "  counterexample: " << r.counterexample;
    os << "\n";
    return os.str();
}

std::string report_matrix_eval(const Matrix& a, Format fmt) {
    const Field& f = a.field();
    fe p = per_laplace(a), pr = per_ryser(a), d = det(a);
    int rk = rank(a);
    if (fmt == Format::json) {
        json j;
        j["field"] = field_json(f);
        j["n"] = a.dim();
        j["matrix"] = a.to_string();
        j["per"] = f.to_string(p);
        j["per_ryser"] = f.to_string(pr);
        j["det"] = f.to_string(d);
        j["rank"] = rk;
        if (a.dim() >= 2) j["per_compound"] = per_compound(a).to_string();
        return j.dump(2);
    }
    std::ostringstream os;
    os << "per  = " << f.to_string(p) << "\n";
    os << "det  = " << f.to_string(d) << "\n";
    os << "rank = " << rk << "\n";
    if (a.dim() >= 2) os << "per_compound = " << per_compound(a).to_string() << "\n";
    return os.str();
}

} // namespace pc
