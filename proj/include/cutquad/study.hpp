#pragma once

#include "cutquad/analysis.hpp"
#include "cutquad/catalog.hpp"
#include "cutquad/methods.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cutquad {

struct StudyRecord
{
    std::string case_id;
    MethodId method = MethodId::Quadtree;
    int n_set = 0;
    int n_ele = 0;
    /// 0 when the method takes no level.
    int level = 0;
    std::size_t n_qp_total = 0;
    std::size_t n_qp_cut = 0;
    /// NaN when the method failed.
    double integral = 0.0;
    double reference = 0.0;
    /// Floored at kMachineFloor; NaN when the method failed.
    double rel_error = 0.0;
    double wall_ms = 0.0;
    bool ok = true;
    std::string failure;
};

/// |integral - reference| / max(|reference|, 1e-300), floored at kMachineFloor.
double relative_error(double integral, double reference);

/// Runs one method once and never throws for method failures (they are recorded).
StudyRecord run_record(const TestCase& tc, MethodId m, int q, int n_ele, const MethodParams& params);

/// n_set = 1..n_max on a single element. n_max defaults per method to
/// required_points(p, q, single-curved) + 1.
std::vector<StudyRecord> study_nqp(const TestCase& tc, const std::vector<MethodId>& methods, int q,
                                   std::optional<int> n_max = std::nullopt);

inline const std::vector<int> kDefaultMeshes{1, 2, 4, 8, 16, 32};

struct HrefResult
{
    std::vector<StudyRecord> records;
    /// Convergence fit per method; absent when fewer than 2 errors sit above the floor.
    std::map<MethodId, std::optional<ConvergenceFit>> fits;
};

HrefResult study_href(const TestCase& tc, const std::vector<MethodId>& methods, int n_set,
                      const std::vector<int>& meshes = kDefaultMeshes, int q = 0,
                      std::optional<int> level = std::nullopt);

struct SweepSummary
{
    MethodId method = MethodId::Quadtree;
    int steps = 0;
    int completed = 0;
    int failures = 0;
    double mean_rel_error = 0.0;
    double std_rel_error = 0.0;
    double mean_n_qp_cut = 0.0;
    double std_n_qp_cut = 0.0;
};

struct SweepResult
{
    std::vector<StudyRecord> records;
    std::vector<SweepSummary> summaries;
};

inline const std::vector<MethodId> kSweepMethods{MethodId::Quadtree, MethodId::Tessellate,
                                                 MethodId::MomentFitLagrange, MethodId::Hmf, MethodId::Height};

/// Shift of step i: kParabolaShiftMin + i (kParabolaShiftMax - kParabolaShiftMin) / (steps - 1).
double sweep_shift(int step, int steps);

/// Area of the shifted-parabola case on a mesh x mesh background mesh for every step.
SweepResult study_sweep(int steps, const std::vector<MethodId>& methods = kSweepMethods, int mesh = 8,
                        int n_set = 2);

void write_csv(std::ostream& os, const std::vector<StudyRecord>& records);
/// Throws IoError when the file cannot be written.
void write_csv(const std::string& path, const std::vector<StudyRecord>& records);

void write_summary_csv(std::ostream& os, const std::vector<SweepSummary>& summaries);
void write_summary_csv(const std::string& path, const std::vector<SweepSummary>& summaries);

/// Small JSON run manifest (study name, parameters, record count).
void write_manifest(const std::string& path, const std::string& study, const std::map<std::string, std::string>& params,
                    std::size_t records, std::size_t failures);

/// Number of failed records.
std::size_t count_failures(const std::vector<StudyRecord>& records);

} // namespace cutquad
