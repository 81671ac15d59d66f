#include "linkdraw/pipeline.hpp"

#include <sstream>

namespace linkdraw {

StageError::StageError(std::string stage, const Error& cause)
    : Error(cause.code(), std::string(to_string(cause.code())) + " at stage " + stage + ": " + cause.detail(),
            cause.detail()),
      stage_(std::move(stage)) {}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::Unbounded:
    case ErrorCode::InvalidCurve:
    case ErrorCode::ParseError:
      return 2;
    case ErrorCode::NotMonic:
    case ErrorCode::DivisionByZeroPoly:
    case ErrorCode::ZeroPolynomial:
    case ErrorCode::HasRealRoot:
    case ErrorCode::IrreducibleFactorNotQuadraticOverRationals:
    case ErrorCode::NotIrreducible:
    case ErrorCode::NoRationalZeroInDirection:
    case ErrorCode::NotMotionPolynomial:
    case ErrorCode::NonInvertibleRemainderLead:
    case ErrorCode::NotGeneric:
    case ErrorCode::NotTame:
    case ErrorCode::ZeroPickExhausted:
      return 3;
    case ErrorCode::SearchExhausted:
    case ErrorCode::UserM0Invalid:
    case ErrorCode::ModeUnsupported:
    case ErrorCode::FlipUndefined:
      return 4;
    case ErrorCode::Mismatch:
    case ErrorCode::ClosureViolation:
      return 5;
    default:
      return 1;
  }
}

namespace {

template <class F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(name, e);
  }
}

}  // namespace

FactorStage run_factor(const CurveSpec& spec) {
  RationalCurve curve = stage("curve_load", [&] { return curve_load(spec.x); });
  NormalizedCurve normalized = stage("normalize", [&] { return curve_normalize(curve); });
  MotionPolynomial motion = stage("minmot", [&] { return minmot(normalized.curve); });
  Factorization factors = stage("factor", [&] {
    TameOptions opts;
    opts.picker = ZeroPicker::directions(spec.picker);
    return tfactor(motion, opts);
  });
  return {curve, normalized, motion, factors};
}

PipelineResult run_pipeline(const CurveSpec& spec, const PipelineOptions& opts) {
  FactorStage fs = run_factor(spec);
  const FrameTransform& frame = fs.normalized.frame;
  std::optional<M0Mode> mode = opts.mode ? opts.mode : spec.mode;
  std::optional<DualQuaternion> user_m0 = opts.m0 ? opts.m0 : spec.m0;

  Linkage linkage = stage("synthesize", [&] {
    if (fs.factors.factors.size() == 1) return synthesize_single(fs.factors, frame);
    RotationQuaternion m0 = stage("choose_m0", [&] {
      M0Request req;
      req.seed = opts.seed.value_or(spec.seed);
      if (user_m0) {
        req.mode = M0Mode::UserSupplied;
        req.user_m0 = frame.apply_to(*user_m0);
        RotationQuaternion chosen = choose_m0(fs.factors.factors, req);
        if (mode) {
          if (auto fail = validate_m0(fs.factors.factors, chosen.value(), *mode))
            throw Error(ErrorCode::UserM0Invalid, "cell " + std::to_string(fail->cell) + ": " + fail->reason);
        }
        return chosen;
      }
      req.mode = mode.value_or(M0Mode::Generic);
      return choose_m0(fs.factors.factors, req);
    });
    M0Mode label = user_m0 ? mode.value_or(M0Mode::UserSupplied) : mode.value_or(M0Mode::Generic);
    return synthesize(fs.factors, m0, frame, label);
  });

  PipelineResult out{fs, {linkage, fs.curve.degree(), fs.curve.circularity(), fs.motion.deg()}, {}, {}, {}};
  stage("verify", [&] {
    out.closure = check_loop_closure(linkage);
    out.closure.require();
    out.trajectory = check_trajectory(linkage, fs.curve, opts.samples);
    out.trajectory.require();
    if (linkage.chain_product() != fs.motion.value() * to_dual(fs.factors.cofactor))
      throw Error(ErrorCode::Mismatch, "chain product differs from C H");
    CountBounds bounds = count_bounds(out.doc.d, out.doc.c);
    if (static_cast<int>(linkage.links().size()) > bounds.links ||
        static_cast<int>(linkage.joints().size()) > bounds.joints)
      throw Error(ErrorCode::Mismatch, "link or joint count exceeds the degree bound");
    return 0;
  });
  out.report = format_report(out);
  return out;
}

std::string format_factorization(const FactorStage& fs) {
  std::ostringstream os;
  os << "curve degree d = " << fs.curve.degree() << ", circularity c = " << fs.curve.circularity() << "\n";
  if (!fs.normalized.frame.is_identity())
    os << "normalizing translation " << str(fs.normalized.frame.translation) << ", scale "
       << fs.normalized.frame.scale.str() << "\n";
  os << "C = " << fs.motion.str() << "\n";
  os << "deg C = " << fs.motion.deg() << ", deg mrpf(P) = " << mrpf(fs.motion.primal()).deg() << "\n";
  os << "H = " << fs.factors.cofactor.str() << "\n";
  for (size_t i = 0; i < fs.factors.factors.size(); ++i)
    os << "h" << i + 1 << " = " << fs.factors.factors[i].str() << "\n";
  return os.str();
}

std::string format_report(const PipelineResult& r) {
  const Linkage& l = r.doc.linkage;
  std::ostringstream os;
  os << "Synthesis report\n\n" << format_factorization(r.stage);
  os << "n = " << l.n() << ", mode = " << (l.m.empty() ? "single joint" : std::string(to_string(l.mode))) << "\n\n";
  os << "Joints (original coordinates):\n";
  for (const auto& j : l.joints()) {
    DualQuaternion v = l.frame.unapply_to(j.value.value());
    os << "  " << j.label << " [" << j.links.first << "-" << j.links.second << "] " << v.str() << "  axis "
       << axis(v).str() << "\n";
  }
  auto cells = l.cell_reports();
  if (!cells.empty()) {
    os << "\nFour-bar cells:\n";
    for (size_t i = 0; i < cells.size(); ++i)
      os << "  cell " << i + 1 << ": " << to_string(cells[i].kind) << (cells[i].one_dof ? ", one degree of freedom" : "")
         << "\n";
  }
  CountBounds b = count_bounds(r.doc.d, r.doc.c);
  os << "\nlinks " << l.links().size() << " (bound " << b.links << "), joints " << l.joints().size() << " (bound "
     << b.joints << ")\n";
  os << "drawn point at t = inf: " << str(l.drawn_point()) << "\n";
  os << "loop closure: " << (r.closure.ok() ? "ok" : "FAILED") << ", trajectory samples: "
     << r.trajectory.samples.size() - r.trajectory.mismatches.size() << "/" << r.trajectory.samples.size()
     << " equal, symbolic identity: " << (r.trajectory.symbolic_identity ? "ok" : "FAILED") << "\n";
  return os.str();
}

}  // namespace linkdraw
