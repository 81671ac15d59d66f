#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"

#include "linkdraw/io.hpp"
#include "linkdraw/pipeline.hpp"

#ifndef LINKDRAW_TEST_DATA
#define LINKDRAW_TEST_DATA "tests/data"
#endif

using namespace fx;

namespace {

Error error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("no error thrown");
  return Error(ErrorCode::IOError, "");
}

CurveSpec data(const std::string& name) { return read_curve_spec(read_file(std::string(LINKDRAW_TEST_DATA) + "/" + name)); }

std::string what(const Error& e) { return e.what(); }

bool has(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("curve spec parsing") {
  CurveSpec s = read_curve_spec(R"({"x0": ["1","0","1"], "x1": ["-4"], "x2": ["0","-2"], "x3": [], "mode": "planar"})");
  CHECK(s.x == ellipse_coords(2, 1));
  CHECK(s.mode == M0Mode::Planar);
  CHECK_FALSE(s.m0);
  CHECK(s.seed == 1);

  CurveSpec v = data("viviani.json");
  CHECK(v.x == viviani_centered_coords());
  CHECK(v.m0 == DualQuaternion(J * R(1, 2)));
  CHECK(read_curve_spec(write_curve_spec(v)) == v);
  CHECK(read_curve_spec(write_curve_spec(s)) == s);
}

TEST_CASE("curve spec errors carry positions") {
  Error a = error_of([] { read_curve_spec(R"({"x0": ["1", )"); });
  CHECK(a.code() == ErrorCode::ParseError);
  CHECK(has(what(a), "at byte"));

  Error b = error_of([] { read_curve_spec(R"({"x0": ["1"], "x1": ["1", "2", "x"], "x2": [], "x3": []})"); });
  CHECK(b.code() == ErrorCode::ParseError);
  CHECK(has(what(b), "/x1/2"));

  Error c = error_of([] { read_curve_spec(R"({"x0": ["1"], "x1": [], "x2": []})"); });
  CHECK(c.code() == ErrorCode::ParseError);
  CHECK(has(what(c), "x3"));

  Error d = error_of([] { read_curve_spec(R"({"x0": ["1"], "x1": [], "x2": [], "x3": [], "mode": "sideways"})"); });
  CHECK(d.code() == ErrorCode::ParseError);
  CHECK(has(what(d), "/mode"));

  CHECK(error_of([] { read_curve_spec(R"({"x0": ["1/0"], "x1": [], "x2": [], "x3": []})"); }).code() ==
        ErrorCode::ParseError);
}

TEST_CASE("argument parsers") {
  CHECK(parse_rationals("1, -2/3,0") == std::vector<Rational>{R(1), R(-2, 3), R(0)});
  auto p = parse_params("0,1/2,inf");
  REQUIRE(p.size() == 3);
  CHECK(p[1] == R(1, 2));
  CHECK_FALSE(p[2]);
  CHECK(parse_dual_quaternion("0,0,0,2,0,-1,0,0") == D(K * R(2), -I));
  CHECK(error_of([] { parse_dual_quaternion("1,2"); }).code() == ErrorCode::ParseError);
  CHECK(parse_mode("spherical") == M0Mode::Spherical);
  CHECK(parse_mode("generic") == M0Mode::Generic);
}

TEST_CASE("trace output") {
  Linkage l = viviani_linkage();
  std::string csv = emit_trace(l, {R(1), std::nullopt});
  CHECK(csv == "t,x,y,z,x_float,y_float,z_float\n1,-1,0,1,-1,0,1\ninf,0,0,0,0,0,0\n");
  CHECK(emit_trace(l, {}) == "t,x,y,z,x_float,y_float,z_float\n");
  std::string frac = emit_trace(ellipse_linkage(), {R(1, 2)});
  CHECK(has(frac, "1/2,-16/5,-4/5,0,-3.2,-0.8,0\n"));
}

TEST_CASE("viviani pipeline") {
  PipelineResult r = run_pipeline(data("viviani.json"));
  const Linkage& l = r.doc.linkage;
  CHECK(r.doc.d == 4);
  CHECK(r.doc.c == 2);
  CHECK(r.doc.deg_c == 2);
  CHECK(l.links().size() == 6);
  CHECK(l.joints().size() == 7);
  CHECK(r.trajectory.ok());
  CHECK(r.closure.ok());
  CHECK(l.drawn_point() == Vec3{1, 0, 0});
  std::map<std::string, DualQuaternion> joints;
  for (const auto& j : l.joints()) joints[j.label] = l.frame.unapply_to(j.value.value());
  CHECK(joints["k1"] == DualQuaternion((J * R(4) + K * R(3)) / R(5)));
  CHECK(joints["m2"] == DualQuaternion((J * R(5) - K * R(12)) / R(26)));
  for (const auto& r2 : l.cell_reports()) CHECK(r2.kind == FourBarKind::Spherical);
  CHECK(has(r.report, "cell 2: Spherical"));
}

TEST_CASE("linkage document round trip") {
  for (const char* name : {"viviani.json", "ellipse.json", "cardioid.json", "segment.json", "circle.json"}) {
    CAPTURE(name);
    PipelineResult r = run_pipeline(data(name));
    std::string text = write_linkage_doc(r.doc);
    LinkageDoc back = read_linkage_doc(text);
    CHECK(back == r.doc);
    CHECK(check_loop_closure(back.linkage).ok());
    CHECK(check_trajectory(back.linkage, r.stage.curve).ok());
    CHECK(write_linkage_doc(run_pipeline(data(name)).doc) == text);
  }
  std::string text = write_linkage_doc(run_pipeline(data("viviani.json")).doc);
  CHECK(has(text, "\"links\": 6"));
  CHECK(has(text, "\"joints\": 7"));
}

TEST_CASE("planar pipeline") {
  PipelineResult r = run_pipeline(data("ellipse.json"));
  const Linkage& l = r.doc.linkage;
  CHECK(l.links().size() == 8);
  CHECK(l.joints().size() == 10);
  for (const auto& j : l.joints()) CHECK(is_zero(cross(j.axis().direction(), Vec3{0, 0, 1})));
  for (const auto& c : l.cell_reports()) CHECK(c.kind == FourBarKind::PlanarAntiparallelogram);

  PipelineOptions generic;
  generic.mode = M0Mode::Generic;
  PipelineResult g = run_pipeline(data("ellipse.json"), generic);
  for (const auto& c : g.doc.linkage.cell_reports()) CHECK(c.kind == FourBarKind::Bennett);
}

TEST_CASE("single joint pipeline") {
  PipelineResult r = run_pipeline(data("circle.json"));
  CHECK(r.doc.linkage.links().size() == 2);
  CHECK(r.doc.linkage.joints().size() == 1);
  CHECK(r.trajectory.ok());
}

TEST_CASE("pipeline failures name their stage") {
  CurveSpec s = data("ellipse.json");
  s.x[0] = P({-1, 0, 1});
  try {
    run_pipeline(s);
    FAIL("expected failure");
  } catch (const StageError& e) {
    CHECK(e.stage() == "curve_load");
    CHECK(e.code() == ErrorCode::Unbounded);
    CHECK(has(e.what(), "Unbounded at stage curve_load"));
    CHECK(exit_code(e.code()) == 2);
  }

  PipelineOptions bad;
  bad.m0 = DualQuaternion(J);
  try {
    run_pipeline(data("viviani.json"), bad);
    FAIL("expected failure");
  } catch (const StageError& e) {
    CHECK(e.stage() == "choose_m0");
    CHECK(e.code() == ErrorCode::UserM0Invalid);
    CHECK(exit_code(e.code()) == 4);
  }

  PipelineOptions sph;
  sph.mode = M0Mode::Spherical;
  CHECK(error_of([&] { run_pipeline(data("ellipse.json"), sph); }).code() == ErrorCode::ModeUnsupported);
}

TEST_CASE("exit codes") {
  CHECK(exit_code(ErrorCode::InvalidCurve) == 2);
  CHECK(exit_code(ErrorCode::ParseError) == 2);
  CHECK(exit_code(ErrorCode::NotTame) == 3);
  CHECK(exit_code(ErrorCode::ZeroPickExhausted) == 3);
  CHECK(exit_code(ErrorCode::SearchExhausted) == 4);
  CHECK(exit_code(ErrorCode::Mismatch) == 5);
  CHECK(exit_code(ErrorCode::ClosureViolation) == 5);
  CHECK(exit_code(ErrorCode::IOError) == 1);
}
