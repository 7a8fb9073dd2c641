// Batch front end: every run echoes its resolved configuration, emits
// machine-readable CSV or JSON, and is byte-identical across repeated runs
// and thread counts (timings are opt-in for that reason).

#include <cstdio>
#include <cstdlib>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "abelmom/divisor.hpp"
#include "abelmom/errors.hpp"
#include "abelmom/euler_product.hpp"
#include "abelmom/exponents.hpp"
#include "abelmom/fit.hpp"
#include "abelmom/partition.hpp"
#include "abelmom/profile.hpp"
#include "abelmom/sieve.hpp"
#include "abelmom/vcoeff.hpp"
#include "abelmom/version.hpp"
#include "abelmom/zeta.hpp"

using json = nlohmann::ordered_json;
using namespace abelmom;

namespace {

// exit codes: 0 ok, 1 verification failure, 2 inapplicable, 3 tolerance,
// 4 capacity, 5 fit diagnostics
constexpr int kExitVerify = 1;
constexpr int kExitInapplicable = 2;
constexpr int kExitTolerance = 3;
constexpr int kExitCapacity = 4;
constexpr int kExitFit = 5;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_rational(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

struct OutputSink {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::fwrite(text.data(), 1, text.size(), stdout);
        } else {
            std::ofstream f(path, std::ios::binary);
            if (!f) throw CapacityError("cannot open output file " + path);
            f.write(text.data(), static_cast<std::streamsize>(text.size()));
        }
    }
};

// Resolved run configuration; echoed into every output so results are
// self-describing.
struct RunConfig {
    std::string subcommand;
    std::vector<std::pair<std::string, std::string>> entries;

    void set(const std::string& k, const std::string& v) { entries.emplace_back(k, v); }

    std::string csv_echo() const {
        std::string out = "# abelmom " + std::string(kVersion) + "\n# subcommand=" + subcommand + "\n";
        for (const auto& [k, v] : entries) out += "# " + k + "=" + v + "\n";
        return out;
    }

    json to_json() const {
        json j;
        j["artifact"] = "abelmom";
        j["version"] = kVersion;
        j["subcommand"] = subcommand;
        for (const auto& [k, v] : entries) j[k] = v;
        return j;
    }
};

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("ABELMOM_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

std::vector<std::uint64_t> parse_checkpoints(const std::string& spec) {
    std::vector<std::uint64_t> out;
    if (spec.rfind("geom:", 0) == 0) {
        std::uint64_t lo = 0, hi = 0;
        int n = 0;
        if (std::sscanf(spec.c_str(), "geom:%llu:%llu:%d", (unsigned long long*)&lo,
                        (unsigned long long*)&hi, &n) != 3)
            throw CapacityError("bad checkpoint spec '" + spec + "'");
        return geometric_checkpoints(lo, hi, n);
    }
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::strtoull(tok.c_str(), nullptr, 10));
    }
    if (out.empty()) throw CapacityError("bad checkpoint spec '" + spec + "'");
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] <= out[i - 1]) throw CapacityError("checkpoints must be strictly increasing");
    return out;
}

Profile make_profile(const std::string& name, int r, int nu_max,
                     const std::string& custom_values = "") {
    if (name != "custom") return registry(name, r, nu_max);
    if (custom_values.empty())
        throw UnknownFunction("--function custom requires --values g0,g1,g2,...");
    std::vector<mpz_class> g;
    std::stringstream ss(custom_values);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        mpz_class v(tok);
        mpz_class powed;
        mpz_pow_ui(powed.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(r));
        g.push_back(powed);
    }
    return custom_profile(std::move(g), r == 1 ? "custom" : "custom^" + std::to_string(r));
}

// ---------------------------------------------------------------- constants

int cmd_constants(const std::string& function, int r, int nu_max, std::uint64_t prime_limit,
                  int series_order, double tol, bool aj_only, const std::string& custom_values,
                  const std::string& format, const OutputSink& sink) {
    RunConfig cfg;
    cfg.subcommand = "constants";
    cfg.set("function", aj_only ? "aj" : function);
    if (!aj_only) cfg.set("r", std::to_string(r));
    cfg.set("nu_max", std::to_string(nu_max));
    cfg.set("prime_limit", std::to_string(prime_limit));
    cfg.set("series_order", std::to_string(series_order));
    cfg.set("tol", fmt_double(tol));
    cfg.set("format", format);

    struct Row {
        std::string name;
        EulerProductResult res;
        bool has_direct = false;
        EulerProductResult direct;
    };
    std::vector<Row> rows;
    if (aj_only) {
        const auto a = a_constants(tol);
        rows.push_back({"A_1", a.a1, false, {}});
        rows.push_back({"A_2", a.a2, false, {}});
        rows.push_back({"A_3", a.a3, false, {}});
    } else {
        const auto profile = make_profile(function, r, nu_max, custom_values);
        EulerProductOptions opts;
        opts.prime_limit = prime_limit;
        opts.series_order = series_order;
        opts.tol = tol;
        Row row;
        row.name = "C_f(" + profile.name + ")";
        row.res = euler_product(profile, opts);
        EulerProductOptions dopts;
        dopts.prime_limit = prime_limit;
        dopts.series_order = 0;
        dopts.tol = 1e30;  // the direct route is a cross-check, not a certification
        row.direct = euler_product_direct(profile, dopts);
        row.has_direct = true;
        rows.push_back(row);
    }

    if (format == "json") {
        json j;
        j["config"] = cfg.to_json();
        j["results"] = json::array();
        for (const auto& row : rows) {
            json e;
            e["name"] = row.name;
            e["value"] = fmt_double(row.res.value);
            e["prime_limit"] = row.res.prime_limit;
            e["series_order"] = row.res.series_order;
            e["tail_bound"] = fmt_double(row.res.tail_bound);
            e["method"] =
                row.res.method == ProductMethod::zeta_accelerated ? "zeta_accelerated" : "direct";
            if (row.has_direct) {
                e["direct_value"] = fmt_double(row.direct.value);
                e["direct_tail_bound"] = fmt_double(row.direct.tail_bound);
                e["accel_direct_delta"] = fmt_double(row.res.value - row.direct.value);
            }
            j["results"].push_back(e);
        }
        sink.write(j.dump(2) + "\n");
    } else {
        std::string out = cfg.csv_echo();
        out += "name,value,prime_limit,series_order,tail_bound,method,direct_value,direct_tail_"
               "bound,accel_direct_delta\n";
        for (const auto& row : rows) {
            out += row.name + "," + fmt_double(row.res.value) + "," +
                   std::to_string(row.res.prime_limit) + "," + std::to_string(row.res.series_order) +
                   "," + fmt_double(row.res.tail_bound) + "," +
                   (row.res.method == ProductMethod::zeta_accelerated ? "zeta_accelerated"
                                                                      : "direct");
            if (row.has_direct)
                out += "," + fmt_double(row.direct.value) + "," + fmt_double(row.direct.tail_bound) +
                       "," + fmt_double(row.res.value - row.direct.value);
            else
                out += ",,,";
            out += "\n";
        }
        sink.write(out);
    }
    return 0;
}

// -------------------------------------------------------------------- sieve

int cmd_sieve(const std::string& function, int r, int nu_max, const std::string& checkpoint_spec,
              std::uint64_t segment_len, int threads, bool timings,
              const std::string& custom_values, const std::string& format,
              const OutputSink& sink) {
    const auto checkpoints = parse_checkpoints(checkpoint_spec);
    const auto profile = make_profile(function, r, nu_max, custom_values);

    // thread count shapes execution, not data, so it stays out of the echo
    // (byte-identical output for 1 vs N threads)
    RunConfig cfg;
    cfg.subcommand = "sieve";
    cfg.set("function", profile.name);
    cfg.set("checkpoints", checkpoint_spec);
    cfg.set("segment_len", std::to_string(segment_len));

    SummatoryOptions opts;
    opts.segment_len = segment_len;
    opts.threads = threads;

    std::vector<std::string> runtimes(checkpoints.size());
    CheckpointSeries series;
    if (timings) {
        // per-checkpoint timing wanted: run prefixes separately
        for (std::size_t i = 0; i < checkpoints.size(); ++i) {
            const auto t0 = std::chrono::steady_clock::now();
            auto part = summatory(profile,
                                  std::vector<std::uint64_t>(checkpoints.begin(),
                                                             checkpoints.begin() + i + 1),
                                  opts);
            const auto t1 = std::chrono::steady_clock::now();
            runtimes[i] = std::to_string(
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
            if (i + 1 == checkpoints.size()) series = std::move(part);
        }
    } else {
        series = summatory(profile, checkpoints, opts);
    }

    if (format == "json") {
        json j;
        j["config"] = cfg.to_json();
        j["rows"] = json::array();
        for (std::size_t i = 0; i < series.x.size(); ++i) {
            json e;
            e["x"] = series.x[i];
            e["S"] = series.sums[i].get_str();
            e["runtime_ms"] = runtimes[i];
            j["rows"].push_back(e);
        }
        sink.write(j.dump(2) + "\n");
    } else {
        std::string out = cfg.csv_echo();
        out += "x,S_f,runtime_ms\n";
        for (std::size_t i = 0; i < series.x.size(); ++i)
            out += std::to_string(series.x[i]) + "," + series.sums[i].get_str() + "," +
                   runtimes[i] + "\n";
        sink.write(out);
    }
    return 0;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const std::string& function, int r, std::uint64_t x_max, bool inject_fault,
               const std::string& custom_values, const OutputSink& sink) {
    RunConfig cfg;
    cfg.subcommand = "verify";
    cfg.set("function", function);
    cfg.set("r", std::to_string(r));
    cfg.set("x_max", std::to_string(x_max));
    cfg.set("inject_fault", inject_fault ? "1" : "0");

    std::string out = cfg.csv_echo();
    bool all_ok = true;
    auto line = [&](bool ok, const std::string& name, const std::string& detail) {
        out += std::string(ok ? "[PASS] " : "[FAIL] ") + name + (detail.empty() ? "" : ": " + detail) +
               "\n";
        all_ok = all_ok && ok;
    };

    const int nu_max = 64;
    const auto profile = make_profile(function, r, nu_max + 1, custom_values);
    const auto params = detect_params(profile);

    // partition bound
    line(partition_bound_check(1000), "partition_bound(nu<=1000)", "");

    // dual-route v equality and zero pattern
    {
        auto vf = v_from_formula(profile, params, nu_max);
        const auto vs = v_from_series(profile, params, nu_max);
        if (inject_fault) vf.v[static_cast<std::size_t>(params.ell + 1)] += 1;
        bool equal = true;
        int bad = -1;
        for (int nu = 0; nu <= nu_max; ++nu)
            if (vf.v[static_cast<std::size_t>(nu)] != vs.v[static_cast<std::size_t>(nu)]) {
                equal = false;
                bad = nu;
                break;
            }
        line(equal, "v_dual_route(J=64)",
             equal ? "" : "first mismatch at nu=" + std::to_string(bad));
        bool zeros = true;
        for (int nu = 1; nu <= params.ell; ++nu)
            if (vs.v[static_cast<std::size_t>(nu)] != 0) zeros = false;
        line(zeros, "v_zero_pattern(nu<=ell)", "");
    }

    // convolution identity
    {
        const auto report = convolution_identity_check(profile, params, x_max);
        line(report.ok, "convolution_identity(x<=" + std::to_string(x_max) + ")",
             report.ok ? ""
                       : "counterexample n=" + std::to_string(report.first_counterexample) +
                             " f(n)=" + report.lhs.get_str() + " (d*v)(n)=" + report.rhs.get_str());
    }

    // sieve vs direct evaluation
    {
        const auto table = sieve_values(profile, std::min<std::uint64_t>(x_max, 100000));
        bool ok = true;
        std::uint64_t bad = 0;
        for (std::uint64_t n = 1; n <= table.x_max; ++n)
            if (table.at(n) != eval_multiplicative(profile, n)) {
                ok = false;
                bad = n;
                break;
            }
        line(ok, "sieve_vs_direct(x<=" + std::to_string(table.x_max) + ")",
             ok ? "" : "mismatch at n=" + std::to_string(bad));
    }

    // divisor dual route at the theorem shape
    {
        const auto j = DivisorSignature::theorem_shape(params.ell, params.k);
        const std::uint64_t cap = std::min<std::uint64_t>(x_max, 100000);
        const auto table = divisor_signature_values(j, cap);
        const bool ok = table.prefix_sum(cap) == exact_divisor_sum(j, cap);
        line(ok, "divisor_dual_route" + j.label() + "(x=" + std::to_string(cap) + ")", "");
    }

    sink.write(out);
    return all_ok ? 0 : kExitVerify;
}

// ---------------------------------------------------------------------- fit

int cmd_fit(const std::string& function, int r, int nu_max, const std::string& checkpoint_spec,
            int degree, int split_offset, std::uint64_t segment_len, int threads,
            const std::string& custom_values, const OutputSink& sink) {
    const auto checkpoints = parse_checkpoints(checkpoint_spec);
    const auto profile = make_profile(function, r, nu_max, custom_values);
    const auto params = detect_params(profile);
    const int use_degree = degree >= 0 ? degree : static_cast<int>(params.k) - 2;

    RunConfig cfg;
    cfg.subcommand = "fit";
    cfg.set("function", profile.name);
    cfg.set("checkpoints", checkpoint_spec);
    cfg.set("degree", std::to_string(use_degree));
    cfg.set("split_offset", std::to_string(split_offset));
    cfg.set("ell", std::to_string(params.ell));
    cfg.set("k", std::to_string(params.k));

    EulerProductOptions copts;
    copts.series_order = 32;
    copts.tol = 1e-6;
    const int const_nu = std::max(nu_max, 160);
    const auto cprof = make_profile(function, r, const_nu, custom_values);
    const auto cres = euler_product(cprof, copts);

    SummatoryOptions sopts;
    sopts.segment_len = segment_len;
    sopts.threads = threads;
    const auto series = summatory(profile, checkpoints, sopts);
    auto [model, report] = fit_main_term(series, cres.value, params.ell, use_degree, split_offset);

    json j;
    j["config"] = cfg.to_json();
    j["constant"] = {{"value", fmt_double(cres.value)}, {"tail_bound", fmt_double(cres.tail_bound)}};
    j["model"] = json::object();
    j["model"]["C"] = fmt_double(model.C);
    j["model"]["ell"] = model.ell;
    j["model"]["provenance"] = model.provenance;
    j["model"]["poly_log_coeffs"] = json::array();
    for (double c : model.poly) j["model"]["poly_log_coeffs"].push_back(fmt_double(c));
    j["fit"] = json::object();
    j["fit"]["condition_estimate"] = fmt_double(report.cond_estimate);
    j["fit"]["train_x"] = report.train_x;
    j["fit"]["held_x"] = report.held_x;
    j["fit"]["held_residuals"] = json::array();
    for (double v : report.held_residuals) j["fit"]["held_residuals"].push_back(fmt_double(v));
    j["fit"]["exponent_estimate"] = json::object();
    j["fit"]["exponent_estimate"]["slope"] = fmt_double(report.exponent.slope);
    j["fit"]["exponent_estimate"]["std_error"] = fmt_double(report.exponent.std_error);
    j["fit"]["exponent_estimate"]["band"] =
        json::array({fmt_double(report.exponent.lo), fmt_double(report.exponent.hi)});
    j["fit"]["exponent_estimate"]["n_points"] = report.exponent.n_points;
    j["reference_exponents"] = json::array();
    for (const auto& e : reference_exponents_kl(params.k, params.ell)) {
        json re;
        re["name"] = e.name;
        re["value"] = fmt_rational(e.value);
        re["decimal"] = fmt_double(mpq_get_d(e.value.get_mpq_t()));
        re["log_power"] = e.log_power;
        re["containment"] = e.containment;
        j["reference_exponents"].push_back(re);
    }
    sink.write(j.dump(2) + "\n");
    return 0;
}

// ------------------------------------------------------------------ divisor

int cmd_divisor(const std::string& signature, const std::string& checkpoint_spec, int split_offset,
                const std::string& format, const OutputSink& sink) {
    DivisorSignature j;
    {
        std::stringstream ss(signature);
        std::string tok;
        while (std::getline(ss, tok, ',')) j.exponents.push_back(std::atoi(tok.c_str()));
        j.validate();
    }
    const auto checkpoints = parse_checkpoints(checkpoint_spec);

    RunConfig cfg;
    cfg.subcommand = "divisor";
    cfg.set("signature", j.label());
    cfg.set("checkpoints", checkpoint_spec);
    cfg.set("split_offset", std::to_string(split_offset));

    const auto rep = delta_measure(j, checkpoints, split_offset);

    if (format == "json") {
        json out;
        out["config"] = cfg.to_json();
        out["leading_constant"] = fmt_double(rep.leading);
        out["leading_empirical"] = fmt_double(rep.leading_empirical);
        out["rows"] = json::array();
        for (const auto& row : rep.rows) {
            json e;
            e["x"] = row.x;
            e["S"] = row.S.get_str();
            e["delta"] = fmt_double(row.delta);
            e["held_out"] = row.held_out;
            out["rows"].push_back(e);
        }
        out["exponent_estimate"] = json::object();
        out["exponent_estimate"]["slope"] = fmt_double(rep.exponent.slope);
        out["exponent_estimate"]["std_error"] = fmt_double(rep.exponent.std_error);
        out["exponent_estimate"]["n_points"] = rep.exponent.n_points;
        out["references"] = json::array();
        for (const auto& e : rep.references) {
            json re;
            re["name"] = e.name;
            re["value"] = fmt_rational(e.value);
            re["decimal"] = fmt_double(mpq_get_d(e.value.get_mpq_t()));
            re["log_power"] = e.log_power;
            out["references"].push_back(re);
        }
        sink.write(out.dump(2) + "\n");
    } else {
        std::string out = cfg.csv_echo();
        out += "# leading_constant=" + fmt_double(rep.leading) + "\n";
        out += "# leading_empirical=" + fmt_double(rep.leading_empirical) + "\n";
        out += "# exponent_slope=" + fmt_double(rep.exponent.slope) + "\n";
        out += "# exponent_std_error=" + fmt_double(rep.exponent.std_error) + "\n";
        for (const auto& e : rep.references)
            out += "# reference " + e.name + "=" + fmt_rational(e.value) +
                   " log_power=" + std::to_string(e.log_power) + "\n";
        out += "x,S,delta,held_out\n";
        for (const auto& row : rep.rows)
            out += std::to_string(row.x) + "," + row.S.get_str() + "," + fmt_double(row.delta) +
                   "," + (row.held_out ? "1" : "0") + "\n";
        sink.write(out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"power moments of the abelian-group counting function: exact sieves, "
                 "Euler-product constants, and remainder measurement"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "csv";
    std::string out_path;
    int threads_flag = 0;
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "output file (default stdout)");
    app.add_option("--threads", threads_flag, "worker threads (env ABELMOM_THREADS overrides 0)");
    std::string custom_values;
    app.add_option("--values", custom_values,
                   "g(0),g(1),... sequence for --function custom (raised to the r-th power)");

    // constants
    auto* c = app.add_subcommand("constants", "Euler-product constants with tail bounds");
    std::string c_function = "abelian";
    int c_r = 1, c_numax = 160, c_order = 32;
    std::uint64_t c_plimit = 100000;
    double c_tol = 1e-9;
    bool c_aj = false;
    c->add_option("--function", c_function, "registry profile name");
    c->add_option("--r", c_r, "power of the profile");
    c->add_option("--nu-max", c_numax, "profile length");
    c->add_option("--prime-limit", c_plimit, "prime cutoff P");
    c->add_option("--series-order", c_order, "factorization order J");
    c->add_option("--tol", c_tol, "demanded certified accuracy");
    c->add_flag("--aj", c_aj, "emit A_1, A_2, A_3 instead");

    // sieve
    auto* s = app.add_subcommand("sieve", "exact summatory values at checkpoints");
    std::string s_function = "abelian", s_checkpoints = "geom:10000:100000000:40";
    int s_r = 1, s_numax = 64;
    std::uint64_t s_seglen = std::uint64_t(1) << 22;
    bool s_timings = false;
    s->add_option("--function", s_function, "registry profile name");
    s->add_option("--r", s_r, "power of the profile");
    s->add_option("--nu-max", s_numax, "profile length");
    s->add_option("--checkpoints", s_checkpoints, "list 'a,b,c' or 'geom:lo:hi:n'");
    s->add_option("--segment-len", s_seglen, "sieve segment length");
    s->add_flag("--timings", s_timings, "fill the runtime_ms column (breaks byte-determinism)");

    // verify
    auto* v = app.add_subcommand("verify", "identity and consistency checks");
    std::string v_function = "abelian";
    int v_r = 1;
    std::uint64_t v_xmax = 10000;
    bool v_fault = false;
    v->add_option("--function", v_function, "registry profile name");
    v->add_option("--r", v_r, "power of the profile");
    v->add_option("--x-max", v_xmax, "exhaustive check range");
    v->add_flag("--inject-fault", v_fault, "flip one v coefficient (must be caught)");

    // fit
    auto* f = app.add_subcommand("fit", "main-term fit and remainder exponent");
    std::string f_function = "abelian", f_checkpoints = "geom:10000:100000000:40";
    int f_r = 1, f_numax = 64, f_degree = -1, f_split = 0;
    std::uint64_t f_seglen = std::uint64_t(1) << 22;
    f->add_option("--function", f_function, "registry profile name");
    f->add_option("--r", f_r, "power of the profile");
    f->add_option("--nu-max", f_numax, "profile length");
    f->add_option("--checkpoints", f_checkpoints, "list 'a,b,c' or 'geom:lo:hi:n'");
    f->add_option("--degree", f_degree, "secondary polynomial degree (default k-2)");
    f->add_option("--split-offset", f_split, "rotate the 2:1 train/held split");
    f->add_option("--segment-len", f_seglen, "sieve segment length");

    // divisor
    auto* d = app.add_subcommand("divisor", "generalized divisor sums and delta measurement");
    std::string d_signature = "1,2,2,2", d_checkpoints = "geom:10000:100000000:40";
    int d_split = 0;
    d->add_option("--signature", d_signature, "comma exponent tuple, e.g. 1,2,2,2");
    d->add_option("--checkpoints", d_checkpoints, "list 'a,b,c' or 'geom:lo:hi:n'");
    d->add_option("--split-offset", d_split, "rotate the 2:1 train/held split");

    CLI11_PARSE(app, argc, argv);

    const int threads = resolve_threads(threads_flag);
    const OutputSink sink{out_path};

    try {
        if (*c)
            return cmd_constants(c_function, c_r, c_numax, c_plimit, c_order, c_tol, c_aj,
                                 custom_values, format, sink);
        if (*s)
            return cmd_sieve(s_function, s_r, s_numax, s_checkpoints, s_seglen, threads, s_timings,
                             custom_values, format, sink);
        if (*v) return cmd_verify(v_function, v_r, v_xmax, v_fault, custom_values, sink);
        if (*f)
            return cmd_fit(f_function, f_r, f_numax, f_checkpoints, f_degree, f_split, f_seglen,
                           threads, custom_values, sink);
        if (*d) return cmd_divisor(d_signature, d_checkpoints, d_split, format, sink);
    } catch (const InapplicableTheorem& e) {
        std::cerr << "inapplicable: " << e.what() << "\n";
        return kExitInapplicable;
    } catch (const ToleranceUnreachable& e) {
        std::cerr << "tolerance: " << e.what() << "\n";
        return kExitTolerance;
    } catch (const IllConditionedFit& e) {
        std::cerr << "fit: " << e.what() << "\n";
        return kExitFit;
    } catch (const Error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return kExitCapacity;
    }
    return 0;
}
