#include "cutquad/study.hpp"

#include "cutquad/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

namespace cutquad {

double relative_error(double integral, double reference)
{
    const double e = std::abs(integral - reference) / std::max(std::abs(reference), 1e-300);
    return std::max(e, kMachineFloor);
}

StudyRecord run_record(const TestCase& tc, MethodId m, int q, int n_ele, const MethodParams& params)
{
    StudyRecord r;
    r.case_id = tc.id;
    r.method = m;
    r.n_set = params.n_set;
    r.n_ele = n_ele;
    r.level = uses_level(m) ? params.level.value_or(default_level(m)) : 0;
    r.reference = tc.reference(q);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const PipelineResult res = run_pipeline(m, tc, n_ele, params);
        r.n_qp_total = res.rule.size();
        r.n_qp_cut = res.n_qp_cut;
        r.integral = integrate(res.rule, scaled_monomial(tc, q));
        r.rel_error = relative_error(r.integral, r.reference);
        if (!std::isfinite(r.integral))
            throw EvaluationError("non-finite integral");
    } catch (const std::exception& e) {
        r.ok = false;
        r.failure = e.what();
        r.n_qp_total = 0;
        r.n_qp_cut = 0;
        r.integral = std::numeric_limits<double>::quiet_NaN();
        r.rel_error = std::numeric_limits<double>::quiet_NaN();
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

namespace {

void sort_records(std::vector<StudyRecord>& records)
{
    std::stable_sort(records.begin(), records.end(), [](const StudyRecord& a, const StudyRecord& b) {
        if (a.case_id != b.case_id)
            return a.case_id < b.case_id;
        if (a.method != b.method)
            return to_string(a.method) < to_string(b.method);
        if (a.n_set != b.n_set)
            return a.n_set < b.n_set;
        return a.n_ele < b.n_ele;
    });
}

} // namespace

std::vector<StudyRecord> study_nqp(const TestCase& tc, const std::vector<MethodId>& methods, int q,
                                  std::optional<int> n_max)
{
    if (q < 0 || q > kMaxReferenceDegree)
        throw ParameterError("study_nqp: q must be in [0, " + std::to_string(kMaxReferenceDegree) + "]");
    if (n_max && *n_max < 1)
        throw ParameterError("study_nqp: n_max must be at least 1");
    const int n_last = n_max.value_or(required_points(tc.degree, q, false) + 1);
    std::vector<StudyRecord> records;
    for (MethodId m : methods)
        for (int n = 1; n <= n_last; ++n)
            records.push_back(run_record(tc, m, q, 1, MethodParams{n, std::nullopt}));
    sort_records(records);
    return records;
}

HrefResult study_href(const TestCase& tc, const std::vector<MethodId>& methods, int n_set,
                      const std::vector<int>& meshes, int q, std::optional<int> level)
{
    if (meshes.empty())
        throw ParameterError("study_href: empty mesh list");
    for (std::size_t i = 0; i < meshes.size(); ++i)
        if (meshes[i] < 1 || (i > 0 && meshes[i] <= meshes[i - 1]))
            throw ParameterError("study_href: meshes must be positive and ascending");
    if (q < 0 || q > kMaxReferenceDegree)
        throw ParameterError("study_href: q must be in [0, " + std::to_string(kMaxReferenceDegree) + "]");
    HrefResult out;
    for (MethodId m : methods) {
        std::vector<std::pair<int, double>> samples;
        const MethodParams params{n_set, uses_level(m) ? level : std::nullopt};
        for (int n_ele : meshes) {
            StudyRecord r = run_record(tc, m, q, n_ele, params);
            if (r.ok)
                samples.emplace_back(n_ele, r.rel_error);
            out.records.push_back(std::move(r));
        }
        try {
            out.fits[m] = fit_rate(samples);
        } catch (const InsufficientDataError&) {
            out.fits[m] = std::nullopt;
        }
    }
    sort_records(out.records);
    return out;
}

double sweep_shift(int step, int steps)
{
    if (steps < 2)
        throw ParameterError("sweep: steps must be at least 2");
    return kParabolaShiftMin + step * (kParabolaShiftMax - kParabolaShiftMin) / (steps - 1);
}

SweepResult study_sweep(int steps, const std::vector<MethodId>& methods, int mesh, int n_set)
{
    if (steps < 2)
        throw ParameterError("study_sweep: steps must be at least 2");
    if (mesh < 1)
        throw ParameterError("study_sweep: mesh must be positive");
    for (MethodId m : methods)
        if (!is_implicit(m))
            throw ParameterError("study_sweep: method " + std::string(to_string(m)) +
                                 " needs a boundary chain, which the parabola case does not have");
    SweepResult out;
    char id[32];
    for (int i = 0; i < steps; ++i) {
        TestCase tc = parabolas_case(sweep_shift(i, steps));
        std::snprintf(id, sizeof id, "parabolas/%04d", i);
        tc.id = id;
        for (MethodId m : methods)
            out.records.push_back(run_record(tc, m, 0, mesh, MethodParams{n_set, std::nullopt}));
    }
    sort_records(out.records);
    for (MethodId m : methods) {
        SweepSummary s;
        s.method = m;
        s.steps = steps;
        double se = 0.0, se2 = 0.0, sn = 0.0, sn2 = 0.0;
        for (const StudyRecord& r : out.records) {
            if (r.method != m)
                continue;
            if (!r.ok) {
                ++s.failures;
                continue;
            }
            ++s.completed;
            se += r.rel_error;
            se2 += r.rel_error * r.rel_error;
            sn += static_cast<double>(r.n_qp_cut);
            sn2 += static_cast<double>(r.n_qp_cut) * static_cast<double>(r.n_qp_cut);
        }
        if (s.completed > 0) {
            const double c = s.completed;
            s.mean_rel_error = se / c;
            s.std_rel_error = std::sqrt(std::max(0.0, se2 / c - s.mean_rel_error * s.mean_rel_error));
            s.mean_n_qp_cut = sn / c;
            s.std_n_qp_cut = std::sqrt(std::max(0.0, sn2 / c - s.mean_n_qp_cut * s.mean_n_qp_cut));
        } else {
            s.mean_rel_error = s.std_rel_error = std::numeric_limits<double>::quiet_NaN();
            s.mean_n_qp_cut = s.std_n_qp_cut = std::numeric_limits<double>::quiet_NaN();
        }
        out.summaries.push_back(s);
    }
    return out;
}

namespace {

std::string real(double v)
{
    if (std::isnan(v))
        return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::string& path)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open '" + path + "' for writing");
    return f;
}

void finish(std::ofstream& f, const std::string& path)
{
    f.flush();
    if (!f)
        throw IoError("write to '" + path + "' failed");
}

} // namespace

void write_csv(std::ostream& os, const std::vector<StudyRecord>& records)
{
    os << "case,method,n_set,n_ele,level,n_qp_total,n_qp_cut,integral,reference,rel_error,wall_ms\n";
    for (const StudyRecord& r : records)
        os << r.case_id << ',' << to_string(r.method) << ',' << r.n_set << ',' << r.n_ele << ',' << r.level << ','
           << r.n_qp_total << ',' << r.n_qp_cut << ',' << real(r.integral) << ',' << real(r.reference) << ','
           << real(r.rel_error) << ',' << real(r.wall_ms) << '\n';
}

void write_csv(const std::string& path, const std::vector<StudyRecord>& records)
{
    std::ofstream f = open_out(path);
    write_csv(f, records);
    finish(f, path);
}

void write_summary_csv(std::ostream& os, const std::vector<SweepSummary>& summaries)
{
    os << "method,steps,completed,failures,mean_rel_error,std_rel_error,mean_n_qp_cut,std_n_qp_cut\n";
    for (const SweepSummary& s : summaries)
        os << to_string(s.method) << ',' << s.steps << ',' << s.completed << ',' << s.failures << ','
           << real(s.mean_rel_error) << ',' << real(s.std_rel_error) << ',' << real(s.mean_n_qp_cut) << ','
           << real(s.std_n_qp_cut) << '\n';
}

void write_summary_csv(const std::string& path, const std::vector<SweepSummary>& summaries)
{
    std::ofstream f = open_out(path);
    write_summary_csv(f, summaries);
    finish(f, path);
}

void write_manifest(const std::string& path, const std::string& study, const std::map<std::string, std::string>& params,
                    std::size_t records, std::size_t failures)
{
    nlohmann::json j;
    j["tool"] = "cutquad";
    j["study"] = study;
    j["parameters"] = params;
    j["records"] = records;
    j["failures"] = failures;
    j["seeds"] = nullptr;
    j["sign_convention"] = "active region is phi <= 0";
    std::ofstream f = open_out(path);
    f << j.dump(2) << '\n';
    finish(f, path);
}

std::size_t count_failures(const std::vector<StudyRecord>& records)
{
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.ok; }));
}

} // namespace cutquad
