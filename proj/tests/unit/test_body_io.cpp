#include <gtest/gtest.h>

#include "hilbert/body_io.hpp"

using namespace hilbert;

namespace {
std::string fieldOf(const std::string& json) {
  try {
    bodyFromJson(json);
  } catch (const InvalidArgument& e) {
    return e.field();
  }
  return "<no error>";
}
}  // namespace

TEST(BodyIo, ParsesEveryKind) {
  EXPECT_EQ(bodyFromJson(R"({"type":"ball","dim":2})").kind(), BodyKind::Ball);
  EXPECT_EQ(bodyFromJson(R"({"type":"ellipsoid","center":[0,0],"shape":[[1,0],[0,4]]})").kind(),
            BodyKind::Ellipsoid);
  EXPECT_EQ(bodyFromJson(R"({"type":"hpolytope","A":[[1,0],[-1,0],[0,1],[0,-1]],"b":[1,1,1,1]})").kind(),
            BodyKind::HPolytope);
  EXPECT_EQ(bodyFromJson(R"({"type":"vpolytope","vertices":[[0,0],[1,0],[0,1]]})").kind(), BodyKind::VPolytope);
  const ConvexBody p = bodyFromJson(
      R"({"type":"product","factors":[{"type":"ball","dim":2},{"type":"hpolytope","A":[[1],[-1]],"b":[1,1]}]})");
  EXPECT_EQ(p.dim(), 3);
  EXPECT_EQ(bodyFromJson(R"({"type":"minkowski_ball","base":{"type":"ball","dim":2},"radius":0.5})").kind(),
            BodyKind::MinkowskiBall);
  const ConvexBody a =
      bodyFromJson(R"({"type":"affine","map":[[2,0],[0,1]],"shift":[1,0],"base":{"type":"ball","dim":2}})");
  EXPECT_NEAR(a.support((Vec(2) << 1, 0).finished()), 3.0, 1e-12);
}

TEST(BodyIo, ErrorsNameTheField) {
  EXPECT_EQ(fieldOf(R"({"type":"ball"})"), "dim");
  EXPECT_EQ(fieldOf(R"({"type":"ball","dim":2,"colour":1})"), "colour");
  EXPECT_EQ(fieldOf(R"({"type":"cube","dim":2})"), "type");
  EXPECT_EQ(fieldOf(R"({"type":"ellipsoid","center":[0,0],"shape":[[1,0],[0,-1]]})"), "shape");
  EXPECT_EQ(fieldOf(R"({"type":"product","factors":[{"type":"ball","dim":2},{"type":"ellipsoid","center":[0],"shape":[[0]]}]})"),
            "factors[1].shape");
  EXPECT_EQ(fieldOf(R"({"type":"affine","map":[[1,1],[1,1]],"shift":[0,0],"base":{"type":"ball","dim":2}})"), "map");
  EXPECT_EQ(fieldOf("{not json"), "body");
}

TEST(BodyIo, RoundTrip) {
  const std::string src =
      R"({"type":"minkowski_ball","radius":0.25,"base":{"type":"product","factors":[{"type":"ball","dim":2},{"type":"hpolytope","A":[[1],[-1]],"b":[1,1]}]}})";
  const ConvexBody a = bodyFromJson(src);
  const ConvexBody b = bodyFromJson(bodyToJson(a));
  const Vec x = Vec::Zero(3);
  for (int i = 0; i < 3; ++i) {
    const Vec e = Vec::Unit(3, i);
    EXPECT_NEAR(a.chord(x, e).tPlus, b.chord(x, e).tPlus, 1e-12);
  }
  EXPECT_EQ(bodyToJson(a), bodyToJson(b));
}
