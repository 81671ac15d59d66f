#pragma once

#include "linkdraw/io.hpp"
#include "linkdraw/motion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace linkdraw {

// Error tagged with the pipeline stage that raised it.
class StageError : public Error {
 public:
  StageError(std::string stage, const Error& cause);
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// 0 ok, 2 unbounded or invalid curve, 3 factorization failure, 4 m0 search
// exhausted, 5 verification mismatch, 1 anything else.
int exit_code(ErrorCode code);

struct PipelineOptions {
  std::optional<M0Mode> mode;        // overrides the spec
  std::optional<DualQuaternion> m0;  // overrides the spec, original coordinates
  std::optional<std::uint64_t> seed;
  std::vector<Rational> samples = default_samples();
};

struct FactorStage {
  RationalCurve curve;
  NormalizedCurve normalized;
  MotionPolynomial motion;
  Factorization factors;
};

struct PipelineResult {
  FactorStage stage;
  LinkageDoc doc;
  TrajectoryReport trajectory;
  ClosureReport closure;
  std::string report;
};

// curve_load -> normalize -> minmot -> tfactor.
FactorStage run_factor(const CurveSpec& spec);
// Full construction; every verification check passes or a StageError is thrown.
PipelineResult run_pipeline(const CurveSpec& spec, const PipelineOptions& opts = {});

std::string format_factorization(const FactorStage& stage);
std::string format_report(const PipelineResult& result);

}  // namespace linkdraw
