#include "satake/jobs.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "satake/kacmoody.hpp"

namespace satake {

using nlohmann::json;

nlohmann::json JobSpec::to_json() const {
    return json{{"command", command},
                {"params", params},
                {"format", format},
                {"limits",
                 {{"max_deg", limits.max_deg},
                  {"depth", limits.depth},
                  {"dimension_cap", limits.dimension_cap}}}};
}

JobSpec JobSpec::from_json(const nlohmann::json& j) {
    JobSpec s;
    s.command = j.at("command").get<std::string>();
    s.params = j.value("params", json::object());
    s.format = j.value("format", "table");
    if (j.contains("limits")) {
        const json& l = j.at("limits");
        s.limits.max_deg = l.value("max_deg", s.limits.max_deg);
        s.limits.depth = l.value("depth", s.limits.depth);
        s.limits.dimension_cap = l.value("dimension_cap", s.limits.dimension_cap);
    }
    return s;
}

namespace {

// ---- param plumbing ---------------------------------------------------------

void check_param_keys(const json& p, const std::vector<std::string>& required,
                      const std::vector<std::string>& optional) {
    if (!p.is_object()) throw std::invalid_argument("params must be a JSON object");
    for (const auto& key : required)
        if (!p.contains(key)) throw std::invalid_argument("missing parameter '" + key + "'");
    for (const auto& [key, value] : p.items()) {
        (void)value;
        if (std::find(required.begin(), required.end(), key) == required.end() &&
            std::find(optional.begin(), optional.end(), key) == optional.end())
            throw std::invalid_argument("unexpected parameter '" + key + "'");
    }
}

std::vector<long long> int_vector(const json& j, const std::string& name) {
    if (!j.is_array()) throw std::invalid_argument("parameter '" + name + "' must be an array");
    std::vector<long long> out;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw std::invalid_argument("parameter '" + name + "' must hold integers");
        out.push_back(x.get<long long>());
    }
    return out;
}

CartanDatum finite_datum(const json& p) {
    if (p.contains("cartan")) {
        const json& m = p.at("cartan");
        if (!m.is_array()) throw std::invalid_argument("parameter 'cartan' must be a matrix");
        std::vector<std::vector<long long>> a;
        for (const auto& row : m) a.push_back(int_vector(row, "cartan"));
        return CartanDatum::from_cartan(std::move(a));
    }
    if (p.contains("type")) return CartanDatum::of_label(p.at("type").get<std::string>());
    throw std::invalid_argument("missing parameter 'type' (or 'cartan')");
}

Weight weight_param(const json& p, const std::string& name, int rank) {
    Weight w = int_vector(p.at(name), name);
    if (static_cast<int>(w.size()) != rank)
        throw std::invalid_argument("parameter '" + name + "' must have " + std::to_string(rank) +
                                    " fundamental-weight coordinates");
    return w;
}

// ---- report rendering -------------------------------------------------------

std::string join(const std::vector<long long>& v, const char* sep = ",") {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

// coefficient list tagged with its grading: t when only even q-powers occur
json series_json(const QSeries& s) {
    bool even_only = true;
    for (int k = 1; k <= s.trunc(); k += 2)
        if (s.coeff(k) != 0) even_only = false;
    if (even_only) {
        std::vector<long long> t;
        for (int k = 0; k <= s.trunc(); k += 2) t.push_back(s.coeff(k));
        return json{{"grading", "t"},
                    {"coeffs", t},
                    {"max_order", s.trunc() / 2}};
    }
    return json{{"grading", "q"}, {"coeffs", s.coeffs()}, {"max_order", s.trunc()}};
}

std::string series_table(const QSeries& s) {
    json j = series_json(s);
    return format_q_terms(j.at("coeffs").get<std::vector<long long>>(),
                          j.at("grading").get<std::string>().c_str()) +
           " + O(" + j.at("grading").get<std::string>() + "^" +
           std::to_string(j.at("max_order").get<long long>() + 1) + ")";
}

std::string coeff_csv(const std::vector<long long>& coeffs) {
    std::string s = "degree,coefficient\n";
    for (size_t k = 0; k < coeffs.size(); ++k)
        s += std::to_string(k) + "," + std::to_string(coeffs[k]) + "\n";
    return s;
}

JobResult series_result(const JobSpec& job, const QSeries& s, json extra) {
    JobResult r;
    if (job.format == "json") {
        json j = series_json(s);
        j.update(extra);
        r.report = j.dump(2) + "\n";
    } else if (job.format == "csv") {
        r.report = coeff_csv(series_json(s).at("coeffs").get<std::vector<long long>>());
    } else {
        r.report = series_table(s) + "\n";
    }
    return r;
}

// ---- commands ---------------------------------------------------------------

JobResult run_kostka(const JobSpec& job) {
    check_param_keys(job.params, {"lambda", "mu"}, {"type", "cartan"});
    CartanDatum d = finite_datum(job.params);
    Weight lambda = weight_param(job.params, "lambda", d.rank());
    Weight mu = weight_param(job.params, "mu", d.rank());
    if (!is_dominant(lambda) || !is_dominant(mu))
        throw std::invalid_argument("kostka expects dominant 'lambda' and 'mu'");
    QPolynomial k = lusztig_q_analog(d, lambda, mu);
    JobResult r;
    if (job.format == "json") {
        r.report = json{{"type", d.label},
                        {"lambda", lambda},
                        {"mu", mu},
                        {"coeffs", k.coeffs()},
                        {"human", k.str()}}
                       .dump(2) +
                   "\n";
    } else if (job.format == "csv") {
        r.report = coeff_csv(k.coeffs());
    } else {
        r.report = k.str() + "\n";
    }
    return r;
}

json eq1_report_json(const GradedMultiplicityReport& rep, int trunc) {
    return json{{"lambda", rep.lambda},
                {"mu", rep.mu},
                {"type", rep.type},
                {"shift", rep.shift_defined ? json(rep.shift) : json(nullptr)},
                {"lhs", rep.lhs.coeffs()},
                {"rhs", QSeries::from_poly(rep.rhs, trunc).coeffs()},
                {"verdict", rep.match ? "match" : "mismatch"},
                {"first_mismatch",
                 rep.first_mismatch ? json(*rep.first_mismatch) : json(nullptr)}};
}

JobResult run_verify_eq1(const JobSpec& job) {
    check_param_keys(job.params, {"lambda", "mu"}, {"type", "cartan"});
    CartanDatum d = finite_datum(job.params);
    Weight lambda = weight_param(job.params, "lambda", d.rank());
    Weight mu = weight_param(job.params, "mu", d.rank());
    GradedMultiplicityReport rep = verify_eq1(d, lambda, mu, job.limits.max_deg);
    JobResult r;
    r.exit_code = rep.match ? 0 : 1;
    if (job.format == "json") {
        r.report = eq1_report_json(rep, job.limits.max_deg).dump(2) + "\n";
    } else if (job.format == "csv") {
        std::string s = "key,value\n";
        s += "type," + rep.type + "\n";
        s += "lambda,\"" + join(rep.lambda, " ") + "\"\n";
        s += "mu,\"" + join(rep.mu, " ") + "\"\n";
        s += "shift," + (rep.shift_defined ? std::to_string(rep.shift) : "") + "\n";
        s += "lhs,\"" + join(rep.lhs.coeffs(), " ") + "\"\n";
        s += "rhs,\"" + join(QSeries::from_poly(rep.rhs, job.limits.max_deg).coeffs(), " ") +
             "\"\n";
        s += std::string("verdict,") + (rep.match ? "match" : "mismatch") + "\n";
        s += "first_mismatch," +
             (rep.first_mismatch ? std::to_string(*rep.first_mismatch) : "") + "\n";
        r.report = s;
    } else {
        std::ostringstream os;
        os << "type " << rep.type << "  lambda=[" << join(rep.lambda) << "]  mu=[" << join(rep.mu)
           << "]\n";
        os << "lhs = " << rep.lhs.str() << "\n";
        os << "rhs = " << rep.rhs.str() << "\n";
        os << "verdict: " << (rep.match ? "match" : "mismatch");
        if (rep.first_mismatch) os << " (first mismatch at q^" << *rep.first_mismatch << ")";
        os << "\n";
        r.report = os.str();
    }
    return r;
}

JobResult run_verify_diagram7(const JobSpec& job) {
    check_param_keys(job.params, {"lambda", "mu"}, {"type", "cartan"});
    CartanDatum d = finite_datum(job.params);
    Weight lambda = weight_param(job.params, "lambda", d.rank());
    Weight mu = weight_param(job.params, "mu", d.rank());
    Diagram7Report rep = verify_diagram7_corners(d, lambda, mu, job.limits.max_deg);
    bool ok = rep.rank_match && rep.top_left_free;
    JobResult r;
    r.exit_code = ok ? 0 : 1;
    if (job.format == "json") {
        r.report = json{{"type", rep.type},
                        {"lambda", rep.lambda},
                        {"mu", rep.mu},
                        {"top_left", rep.top_left.coeffs()},
                        {"bottom_left", rep.bottom_left.coeffs()},
                        {"weight_multiplicity", rep.weight_multiplicity},
                        {"top_left_rank", rep.top_left_rank},
                        {"rank_match", rep.rank_match},
                        {"top_left_free", rep.top_left_free},
                        {"verdict", ok ? "match" : "mismatch"}}
                       .dump(2) +
                   "\n";
    } else if (job.format == "csv") {
        std::string s = "key,value\n";
        s += "weight_multiplicity," + std::to_string(rep.weight_multiplicity) + "\n";
        s += "top_left_rank," + std::to_string(rep.top_left_rank) + "\n";
        s += std::string("rank_match,") + (rep.rank_match ? "true" : "false") + "\n";
        s += std::string("top_left_free,") + (rep.top_left_free ? "true" : "false") + "\n";
        r.report = s;
    } else {
        std::ostringstream os;
        os << "type " << rep.type << "  lambda=[" << join(rep.lambda) << "]  mu=[" << join(rep.mu)
           << "]\n";
        os << "top-left corner    = " << rep.top_left.str() << "\n";
        os << "bottom-left corner = " << rep.bottom_left.str() << "\n";
        os << "free module rank " << rep.top_left_rank << " vs weight multiplicity "
           << rep.weight_multiplicity << "\n";
        os << "verdict: " << (ok ? "match" : "mismatch") << "\n";
        r.report = os.str();
    }
    return r;
}

AffineWeight affine_weight_param(const json& p, const std::string& name, int size) {
    AffineWeight w;
    w.coords = int_vector(p.at(name), name);
    if (static_cast<int>(w.coords.size()) != size)
        throw std::invalid_argument("parameter '" + name + "' must have " + std::to_string(size) +
                                    " coordinates (affine node first)");
    return w;
}

JobResult run_weight_table(const JobSpec& job) {
    check_param_keys(job.params, {"type", "lambda"}, {});
    AffineCartanDatum d =
        AffineCartanDatum::untwisted(CartanDatum::of_label(job.params.at("type")));
    AffineWeight lambda = affine_weight_param(job.params, "lambda", d.size());
    AffineWeightTable table = eq5_weight_table(d, lambda, job.limits.depth);
    JobResult r;
    if (job.format == "json") {
        json rows = json::array();
        for (const auto& row : table.rows)
            rows.push_back(json{{"mu_coords", row.mu_coords},
                                {"delta_drop", row.delta_drop},
                                {"multiplicity", row.multiplicity},
                                {"drop", row.drop}});
        r.report = json{{"type", table.type},
                        {"lambda", table.lambda},
                        {"depth", table.depth},
                        {"rows", rows}}
                       .dump(2) +
                   "\n";
    } else if (job.format == "csv") {
        std::string s = "mu_coords,delta_drop,multiplicity\n";
        for (const auto& row : table.rows)
            s += "\"" + join(row.mu_coords, " ") + "\"," + std::to_string(row.delta_drop) + "," +
                 std::to_string(row.multiplicity) + "\n";
        r.report = s;
    } else {
        std::ostringstream os;
        os << "type " << table.type << "(1)  lambda=[" << join(table.lambda) << "]  depth "
           << table.depth << "\n";
        os << "mu_coords | delta_drop | multiplicity\n";
        for (const auto& row : table.rows)
            os << "[" << join(row.mu_coords) << "] | " << row.delta_drop << " | "
               << row.multiplicity << "\n";
        r.report = os.str();
    }
    return r;
}

JobResult run_affine_mult(const JobSpec& job) {
    check_param_keys(job.params, {"type", "lambda", "mu", "delta_drop"}, {"algorithm"});
    AffineCartanDatum d =
        AffineCartanDatum::untwisted(CartanDatum::of_label(job.params.at("type")));
    AffineWeight lambda = affine_weight_param(job.params, "lambda", d.size());
    AffineWeight mu = affine_weight_param(job.params, "mu", d.size());
    if (!job.params.at("delta_drop").is_number_integer())
        throw std::invalid_argument("parameter 'delta_drop' must be an integer");
    mu.delta = lambda.delta - job.params.at("delta_drop").get<long long>();
    std::string algo = job.params.value("algorithm", "freudenthal");
    long long m = 0;
    if (algo == "freudenthal")
        m = affine_freudenthal(d, lambda, mu, job.limits.depth);
    else if (algo == "weyl-kac")
        m = weyl_kac_multiplicity(d, lambda, mu, job.limits.depth);
    else
        throw std::invalid_argument("parameter 'algorithm' must be freudenthal or weyl-kac");
    JobResult r;
    if (job.format == "json") {
        r.report = json{{"type", d.finite.label},
                        {"lambda", lambda.coords},
                        {"mu", mu.coords},
                        {"delta_drop", lambda.delta - mu.delta},
                        {"depth", job.limits.depth},
                        {"algorithm", algo},
                        {"multiplicity", m}}
                       .dump(2) +
                   "\n";
    } else if (job.format == "csv") {
        r.report = "key,value\nmultiplicity," + std::to_string(m) + "\n";
    } else {
        r.report = std::to_string(m) + "\n";
    }
    return r;
}

JobResult run_monopole_hs(const JobSpec& job) {
    check_param_keys(job.params, {"quiver"}, {});
    QuiverGaugeDatum d = quiver_from_json(job.params.at("quiver"));
    QSeries s = monopole_hilbert_series(d, job.limits.max_deg);
    return series_result(job, s, json{{"command", "monopole-hs"}});
}

JobResult run_sym_power(const JobSpec& job) {
    check_param_keys(job.params, {"ell", "k"}, {});
    if (!job.params.at("ell").is_number_integer() || !job.params.at("k").is_number_integer())
        throw std::invalid_argument("parameters 'ell' and 'k' must be integers");
    QSeries s = sym_power_orbifold_series(job.params.at("ell").get<long long>(),
                                          job.params.at("k").get<long long>(),
                                          job.limits.max_deg);
    return series_result(job, s, json{{"command", "sym-power"}});
}

JobResult run_sweep(const JobSpec& job, std::ostream* progress) {
    check_param_keys(job.params, {}, {"config"});
    json config = job.params.value("config", default_sweep_config());
    auto results = run_acceptance_suite(config, progress);
    bool all = std::all_of(results.begin(), results.end(),
                           [](const CriterionResult& c) { return c.pass; });
    JobResult r;
    r.exit_code = all ? 0 : 1;
    if (job.format == "json") {
        json arr = json::array();
        for (const auto& c : results)
            arr.push_back(json{{"index", c.index},
                               {"name", c.name},
                               {"pass", c.pass},
                               {"detail", c.detail},
                               {"seconds", c.seconds}});
        r.report = json{{"criteria", arr}, {"all_pass", all}}.dump(2) + "\n";
    } else if (job.format == "csv") {
        std::string s = "index,name,pass,seconds,detail\n";
        for (const auto& c : results)
            s += std::to_string(c.index) + "," + c.name + "," + (c.pass ? "true" : "false") + "," +
                 std::to_string(c.seconds) + ",\"" + c.detail + "\"\n";
        r.report = s;
    } else {
        std::ostringstream os;
        for (const auto& c : results) {
            os << "criterion " << c.index << " (" << c.name << "): "
               << (c.pass ? "PASS" : "FAIL");
            os.setf(std::ios::fixed);
            os.precision(2);
            os << " [" << c.seconds << "s]";
            if (!c.detail.empty()) os << " " << c.detail;
            os << "\n";
        }
        os << (all ? "all criteria passed" : "CRITERIA FAILED") << "\n";
        r.report = os.str();
    }
    return r;
}

JobResult error_result(const JobSpec& job, int code, const std::string& msg, json extra = {}) {
    JobResult r;
    r.exit_code = code;
    if (job.format == "json") {
        json j{{"error", msg}};
        if (!extra.is_null()) j.update(extra);
        r.report = j.dump(2) + "\n";
    } else if (job.format == "csv") {
        r.report = "error,\"" + msg + "\"\n";
    } else {
        r.report = "error: " + msg + "\n";
    }
    return r;
}

} // namespace

QuiverGaugeDatum quiver_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("quiver: expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "vertices" && key != "edges" && key != "v" && key != "w")
            throw std::invalid_argument("quiver: unexpected key '" + key + "'");
    }
    for (const char* key : {"vertices", "v", "w"})
        if (!j.contains(key)) throw std::invalid_argument(std::string("quiver: missing '") + key + "'");
    QuiverGaugeDatum d;
    std::map<std::string, int> index;
    for (const auto& name : j.at("vertices")) {
        if (!name.is_string()) throw std::invalid_argument("quiver: vertex names must be strings");
        std::string s = name.get<std::string>();
        if (index.count(s)) throw std::invalid_argument("quiver: duplicate vertex '" + s + "'");
        index[s] = static_cast<int>(d.vertices.size());
        d.vertices.push_back(s);
    }
    for (const auto& e : j.value("edges", json::array())) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw std::invalid_argument("quiver: each edge must be a pair of vertex names");
        auto a = index.find(e[0].get<std::string>()), b = index.find(e[1].get<std::string>());
        if (a == index.end() || b == index.end())
            throw std::invalid_argument("quiver: edge endpoint is not a declared vertex");
        d.edges.emplace_back(a->second, b->second);
    }
    d.v.assign(d.vertices.size(), 0);
    d.w.assign(d.vertices.size(), 0);
    for (const char* key : {"v", "w"}) {
        const json& m = j.at(key);
        if (!m.is_object())
            throw std::invalid_argument(std::string("quiver: '") + key + "' must map vertex -> dim");
        for (const auto& [name, dim] : m.items()) {
            auto it = index.find(name);
            if (it == index.end())
                throw std::invalid_argument("quiver: dimension for undeclared vertex '" + name +
                                            "'");
            if (!dim.is_number_integer() || dim.get<long long>() < 0)
                throw std::invalid_argument("quiver: dimensions must be nonnegative integers");
            (key[0] == 'v' ? d.v : d.w)[it->second] = dim.get<long long>();
        }
    }
    d.validate();
    return d;
}

JobResult run_job(const JobSpec& job, std::ostream* progress) {
    try {
        if (job.format != "table" && job.format != "json" && job.format != "csv")
            throw std::invalid_argument("format must be table, json or csv");
        if (job.limits.max_deg < 0 || job.limits.depth < 0 || job.limits.dimension_cap <= 0)
            throw std::invalid_argument("limits must be nonnegative (dimension cap positive)");
        if (job.command == "kostka") return run_kostka(job);
        if (job.command == "verify-eq1") return run_verify_eq1(job);
        if (job.command == "verify-diagram7") return run_verify_diagram7(job);
        if (job.command == "weight-table") return run_weight_table(job);
        if (job.command == "affine-mult") return run_affine_mult(job);
        if (job.command == "monopole-hs") return run_monopole_hs(job);
        if (job.command == "sym-power") return run_sym_power(job);
        if (job.command == "sweep") return run_sweep(job, progress);
        throw std::invalid_argument("unknown command '" + job.command + "'");
    } catch (const TruncationRefusal& e) {
        json dir = json::array();
        for (const auto& tup : e.direction) dir.push_back(tup);
        return error_result(job, 3, e.what(), json{{"direction", dir}});
    } catch (const std::invalid_argument& e) {
        return error_result(job, 2, e.what());
    } catch (const json::exception& e) {
        return error_result(job, 2, e.what());
    }
}

// ---- acceptance sweep --------------------------------------------------------

nlohmann::json default_sweep_config() {
    return json{
        {"eq1",
         {{"types", {"A1", "A2", "B2", "G2"}},
          {"lambda_sum_cap", {{"A1", 12}, {"A2", 7}, {"B2", 6}, {"G2", 5}}},
          {"height_cap", 8},
          {"max_deg", 10}}},
        {"kostant", {{"types", {"A2", "B2", "G2"}}, {"height_cap", 8}}},
        {"affine", {{"types", {"A1", "A2"}}, {"max_level", 2}, {"depth", 6}}},
        {"coulomb", {{"max_t", 10}}}};
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// all nonnegative integer vectors of the given length with entry sum <= cap
std::vector<std::vector<long long>> vectors_up_to(int length, long long cap) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur(length, 0);
    std::function<void(int, long long)> rec = [&](int i, long long left) {
        if (i == length) {
            out.push_back(cur);
            return;
        }
        for (long long x = 0; x <= left; ++x) {
            cur[i] = x;
            rec(i + 1, left - x);
        }
        cur[i] = 0;
    };
    rec(0, cap);
    return out;
}

// exact brute-force q-analog partition count: unordered sums of positive
// roots, graded by the number of summands (independent of the DP)
QPolynomial brute_force_partition(const CartanDatum& d, const std::vector<long long>& c) {
    auto roots = positive_roots(d);
    std::vector<long long> counts;
    std::function<void(size_t, std::vector<long long>&, long long)> rec =
        [&](size_t idx, std::vector<long long>& rest, long long parts) {
            if (std::all_of(rest.begin(), rest.end(), [](long long x) { return x == 0; })) {
                if (static_cast<size_t>(parts) >= counts.size()) counts.resize(parts + 1, 0);
                counts[parts] += 1;
                return;
            }
            if (idx == roots.size()) return;
            std::vector<long long> r = rest;
            long long k = 0;
            while (true) {
                rec(idx + 1, r, parts + k);
                bool fits = true;
                for (size_t i = 0; i < r.size(); ++i) {
                    r[i] -= roots[idx].coords[i];
                    if (r[i] < 0) fits = false;
                }
                if (!fits) break;
                ++k;
            }
        };
    std::vector<long long> rest = c;
    rec(0, rest, 0);
    return QPolynomial(counts);
}

json config_section(const json& config, const std::string& key) {
    for (const auto& [k, v] : config.items()) {
        (void)v;
        if (k != "eq1" && k != "kostant" && k != "affine" && k != "coulomb")
            throw std::invalid_argument("sweep config: unexpected key '" + k + "'");
    }
    if (!config.is_object()) throw std::invalid_argument("sweep config must be a JSON object");
    json def = default_sweep_config().at(key);
    if (!config.contains(key)) return def;
    const json& sec = config.at(key);
    if (!sec.is_object())
        throw std::invalid_argument("sweep config: section '" + key + "' must be an object");
    for (const auto& [k, v] : sec.items()) {
        (void)v;
        if (!def.contains(k))
            throw std::invalid_argument("sweep config: unexpected key '" + key + "." + k + "'");
    }
    json merged = def;
    merged.update(sec);
    return merged;
}

} // namespace

std::vector<CriterionResult> run_acceptance_suite(const nlohmann::json& config,
                                                  std::ostream* progress) {
    json eq1 = config_section(config, "eq1");
    json kostant = config_section(config, "kostant");
    json affine = config_section(config, "affine");
    json coulomb = config_section(config, "coulomb");

    std::vector<CriterionResult> out(7);
    for (int i = 0; i < 7; ++i) {
        out[i].index = i + 1;
        out[i].pass = true;
    }
    out[0].name = "graded identity, finite sweep";
    out[1].name = "q->1 specialization";
    out[2].name = "resolution series and corner ranks";
    out[3].name = "partition-function oracle";
    out[4].name = "affine dual-algorithm agreement";
    out[5].name = "Coulomb-branch cross-check";
    out[6].name = "determinism and refusal";

    auto fail = [&](int idx, const std::string& why) {
        if (out[idx].pass) out[idx].detail = why;
        out[idx].pass = false;
    };

    // criteria 1-3 share one sweep over (type, lambda, mu)
    {
        int max_deg = eq1.at("max_deg").get<int>();
        long long height_cap = eq1.at("height_cap").get<long long>();
        long long pairs = 0;
        double s1 = 0, s2 = 0, s3 = 0;
        for (const auto& tj : eq1.at("types")) {
            std::string type = tj.get<std::string>();
            if (progress) *progress << "sweep: graded identities, type " << type << "\n";
            CartanDatum d = CartanDatum::of_label(type);
            long long cap = eq1.at("lambda_sum_cap").value(type, 3LL);
            auto drops = vectors_up_to(d.rank(), height_cap);
            for (const auto& lambda : vectors_up_to(d.rank(), cap)) {
                for (const auto& c : drops) {
                    Weight mu = lambda;
                    for (int i = 0; i < d.rank(); ++i)
                        for (int j = 0; j < d.rank(); ++j) mu[i] -= d.cartan[i][j] * c[j];
                    if (!is_dominant(mu)) continue;
                    ++pairs;
                    std::string tag = type + " lambda=[" + join(lambda) + "] mu=[" + join(mu) + "]";

                    auto t0 = std::chrono::steady_clock::now();
                    GradedMultiplicityReport rep = verify_eq1(d, lambda, mu, max_deg);
                    if (!rep.match)
                        fail(0, tag + " first mismatch at q^" +
                                     (rep.first_mismatch ? std::to_string(*rep.first_mismatch)
                                                         : std::string("?")));
                    s1 += seconds_since(t0);

                    t0 = std::chrono::steady_clock::now();
                    long long at_one = rep.rhs.eval_one();
                    long long freud = freudenthal_multiplicity(d, lambda, mu);
                    if (at_one != freud)
                        fail(1, tag + " q->1 gives " + std::to_string(at_one) + ", multiplicity " +
                                     std::to_string(freud));
                    s2 += seconds_since(t0);

                    t0 = std::chrono::steady_clock::now();
                    QSeries grot = grothendieck_section_multiplicity(d, lambda, mu, max_deg);
                    QSeries graded_up = rep.lhs * QSeries::geometric_pow(d.rank(), max_deg);
                    if (grot.first_mismatch(graded_up))
                        fail(2, tag + " resolution series is not graded * (1-q)^-rank");
                    Diagram7Report d7 = verify_diagram7_corners(d, lambda, mu, max_deg);
                    if (!d7.rank_match || !d7.top_left_free)
                        fail(2, tag + " corner ranks disagree");
                    s3 += seconds_since(t0);
                }
            }
        }
        for (int i = 0; i < 3; ++i)
            if (out[i].pass) out[i].detail = std::to_string(pairs) + " dominant pairs";
        out[0].seconds = s1;
        out[1].seconds = s2;
        out[2].seconds = s3;
    }

    // criterion 4: DP partition function against brute-force enumeration
    {
        auto t0 = std::chrono::steady_clock::now();
        long long vectors = 0;
        for (const auto& tj : kostant.at("types")) {
            std::string type = tj.get<std::string>();
            if (progress) *progress << "sweep: partition oracle, type " << type << "\n";
            CartanDatum d = CartanDatum::of_label(type);
            for (const auto& c : vectors_up_to(d.rank(), kostant.at("height_cap").get<long long>())) {
                ++vectors;
                if (!(q_kostant_partition(d, c) == brute_force_partition(d, c)))
                    fail(3, type + " vector [" + join(c) + "]");
            }
        }
        if (out[3].pass) out[3].detail = std::to_string(vectors) + " root-lattice vectors";
        out[3].seconds = seconds_since(t0);
    }

    // criterion 5: affine Freudenthal against the Weyl-Kac oracle
    {
        auto t0 = std::chrono::steady_clock::now();
        int depth = affine.at("depth").get<int>();
        long long weights = 0;
        for (const auto& tj : affine.at("types")) {
            std::string type = tj.get<std::string>();
            if (progress) *progress << "sweep: affine agreement, type " << type << "(1)\n";
            AffineCartanDatum d = AffineCartanDatum::untwisted(CartanDatum::of_label(type));
            for (long long level = 1; level <= affine.at("max_level").get<long long>(); ++level) {
                // dominant level-l weights: sum of comark_i * coord_i = l
                std::vector<long long> coords(d.size(), 0);
                std::function<void(int, long long)> each = [&](int i, long long left) {
                    if (i == d.size()) {
                        if (left != 0) return;
                        AffineWeight lambda{coords, 0};
                        auto table = eq5_weight_table(d, lambda, depth);
                        auto oracle = weyl_kac_window_table(d, lambda, depth);
                        for (const auto& row : table.rows) {
                            auto it = oracle.find(row.drop);
                            long long expect = it == oracle.end() ? 0 : it->second;
                            if (row.multiplicity != expect)
                                fail(4, type + "(1) lambda=[" + join(lambda.coords) +
                                            "] drop=[" + join(row.drop) + "] " +
                                            std::to_string(row.multiplicity) + " vs " +
                                            std::to_string(expect));
                            ++weights;
                        }
                        return;
                    }
                    for (long long x = 0; x * d.comarks[i] <= left; ++x) {
                        coords[i] = x;
                        each(i + 1, left - x * d.comarks[i]);
                    }
                    coords[i] = 0;
                };
                each(0, level);
            }
        }
        if (out[4].pass) out[4].detail = std::to_string(weights) + " weights compared";
        out[4].seconds = seconds_since(t0);
    }

    // criterion 6: monopole series of the rank-1 two-flavor quiver against
    // the cyclic-group Molien series, and the matching orbifold power
    {
        auto t0 = std::chrono::steady_clock::now();
        if (progress) *progress << "sweep: Coulomb-branch cross-check\n";
        int max_t = coulomb.at("max_t").get<int>();
        QuiverGaugeDatum q;
        q.vertices = {"0"};
        q.v = {1};
        q.w = {2};
        QSeries hs = monopole_hilbert_series(q, max_t);
        for (int j = 0; j <= max_t; ++j) {
            if (hs.coeff(2 * j) != 2 * j + 1)
                fail(5, "t^" + std::to_string(j) + " coefficient " +
                            std::to_string(hs.coeff(2 * j)) + ", Molien gives " +
                            std::to_string(2 * j + 1));
            if (2 * j + 1 <= hs.trunc() && hs.coeff(2 * j + 1) != 0)
                fail(5, "odd q-power q^" + std::to_string(2 * j + 1) + " appears");
        }
        // the orbifold series is graded by polynomial degree; the monopole
        // grading counts one t-unit per degree-2 generator of C^2/(Z/2)
        QSeries sym = sym_power_orbifold_series(2, 1, 2 * max_t);
        for (int j = 0; j <= max_t; ++j)
            if (hs.coeff(2 * j) != sym.coeff(4 * j))
                fail(5, "orbifold series differs from the monopole series at t^" +
                            std::to_string(j));
        if (out[5].pass) out[5].detail = "order " + std::to_string(max_t) + " in t";
        out[5].seconds = seconds_since(t0);
    }

    // criterion 7: byte-identical reruns; certified refusal for a theory
    // whose dimension never grows
    {
        auto t0 = std::chrono::steady_clock::now();
        if (progress) *progress << "sweep: determinism and refusal\n";
        JobSpec k;
        k.command = "kostka";
        k.params = json{{"type", "A2"}, {"lambda", {1, 1}}, {"mu", {0, 0}}};
        k.format = "json";
        JobSpec v;
        v.command = "verify-eq1";
        v.params = json{{"type", "A1"}, {"lambda", {2}}, {"mu", {0}}};
        v.format = "json";
        v.limits.max_deg = 8;
        for (const JobSpec& job : {k, v}) {
            JobResult a = run_job(job), b = run_job(job);
            if (a.report != b.report || a.exit_code != b.exit_code)
                fail(6, "rerun of '" + job.command + "' differs");
            if (a.exit_code != 0) fail(6, "'" + job.command + "' exited " +
                                              std::to_string(a.exit_code));
        }
        JobSpec bad;
        bad.command = "monopole-hs";
        bad.params = json{{"quiver",
                           {{"vertices", {"0"}},
                            {"edges", json::array()},
                            {"v", {{"0", 1}}},
                            {"w", {{"0", 0}}}}}};
        bad.format = "json";
        JobResult refused = run_job(bad);
        if (refused.exit_code != 3)
            fail(6, "bad theory exited " + std::to_string(refused.exit_code) + ", expected 3");
        if (out[6].pass) out[6].detail = "reruns byte-identical; bad theory refused";
        out[6].seconds = seconds_since(t0);
    }

    return out;
}

// ---- schema validation --------------------------------------------------------

namespace {

bool type_matches(const json& doc, const std::string& t) {
    if (t == "object") return doc.is_object();
    if (t == "array") return doc.is_array();
    if (t == "string") return doc.is_string();
    if (t == "integer") return doc.is_number_integer();
    if (t == "number") return doc.is_number();
    if (t == "boolean") return doc.is_boolean();
    if (t == "null") return doc.is_null();
    return false;
}

} // namespace

std::optional<std::string> schema_violation(const nlohmann::json& doc,
                                            const nlohmann::json& schema,
                                            const std::string& path) {
    if (schema.contains("type")) {
        const json& t = schema.at("type");
        bool ok = false;
        if (t.is_string()) ok = type_matches(doc, t.get<std::string>());
        else
            for (const auto& alt : t) ok = ok || type_matches(doc, alt.get<std::string>());
        if (!ok) return path + ": wrong type, expected " + t.dump();
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& alt : schema.at("enum")) ok = ok || alt == doc;
        if (!ok) return path + ": value not in enum " + schema.at("enum").dump();
    }
    if (schema.contains("minimum") && doc.is_number() &&
        doc.get<double>() < schema.at("minimum").get<double>())
        return path + ": below minimum " + schema.at("minimum").dump();
    if (schema.contains("required") && doc.is_object())
        for (const auto& key : schema.at("required"))
            if (!doc.contains(key.get<std::string>()))
                return path + ": missing required key '" + key.get<std::string>() + "'";
    if (schema.contains("properties") && doc.is_object())
        for (const auto& [key, sub] : schema.at("properties").items())
            if (doc.contains(key))
                if (auto v = schema_violation(doc.at(key), sub, path + "." + key)) return v;
    if (schema.contains("items") && doc.is_array()) {
        size_t i = 0;
        for (const auto& el : doc) {
            if (auto v =
                    schema_violation(el, schema.at("items"), path + "[" + std::to_string(i) + "]"))
                return v;
            ++i;
        }
    }
    return std::nullopt;
}

} // namespace satake
