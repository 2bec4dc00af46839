#include <doctest.h>

#include "helpers.hpp"
#include "uepframe/catalog.hpp"
#include "uepframe/sos_frame.hpp"

using namespace uep;
using namespace uep::testing;

TEST_CASE("verify_sos") {
  const Mask box = catalog_get("boxspline111");
  CHECK(verify_sos(box, builtin_certificate("boxspline111")) < 1e-12);
  const Mask bf = catalog_get("butterfly");
  CHECK(verify_sos(bf, builtin_certificate("butterfly")) < 1e-10);
  CHECK(verify_sos(bf, SosCertificate{}) == doctest::Approx(subqmf_poly(bf).max_abs_coeff()));
  CHECK_THROWS_AS(verify_sos(bf, SosCertificate{{mono({1})}}), DimensionError);
}

TEST_CASE("builtin certificates: term counts") {
  CHECK(builtin_certificate("boxspline111").hs.size() == 3);
  CHECK(builtin_certificate("butterfly").hs.size() == 9);
  // Seven squares for each of three images of p_110, three for each of four images of p_100.
  CHECK(builtin_certificate("interp3d", {{"lambda", 1.0 / 32}}).hs.size() == 33);
  CHECK(builtin_certificate("interp3d").hs.size() == 33);
  CHECK_THROWS_AS(builtin_certificate("interp3d", {{"lambda", 0.1}}), std::out_of_range);
  CHECK_THROWS_AS(builtin_certificate("interp3d", {{"lambda", -0.01}}), std::out_of_range);
  CHECK_THROWS_AS(builtin_certificate("sqrt3-partial"), CertificateError);
  CHECK_THROWS_AS(builtin_certificate("nope"), std::invalid_argument);
  const auto names = builtin_certificate_names();
  CHECK(names.size() == 4);
}

TEST_CASE("interp3d certificate reproduces f over the whole tension range") {
  for (double lambda : {0.0, 1.0 / 64, 1.0 / 32, 3.0 / 64, 1.0 / 16}) {
    const Mask mk = catalog_get("interp3d", {{"lambda", lambda}});
    CHECK(verify_sos(mk, builtin_certificate("interp3d", {{"lambda", lambda}})) < 1e-9);
  }
}

TEST_CASE("polyphase_lift_cert") {
  const Mask box = catalog_get("boxspline111");
  const auto lifted = polyphase_lift_cert(box, builtin_certificate("boxspline111"));
  CHECK(lifted.hs.size() == 3);
  for (const auto& h : lifted.hs) CHECK(is_g_invariant(*box.ctx, h, 1e-14));
  CHECK(verify_sos(box, lifted) < 1e-12);

  // Already lifted input comes back unchanged.
  const auto again = polyphase_lift_cert(box, lifted);
  REQUIRE(again.hs.size() == lifted.hs.size());
  for (std::size_t k = 0; k < again.hs.size(); ++k) CHECK(max_abs_diff(again.hs[k], lifted.hs[k]) == 0.0);

  const Mask bf = catalog_get("butterfly");
  CHECK(polyphase_lift_cert(bf, builtin_certificate("butterfly")).hs.size() == 9);

  CHECK_THROWS_AS(polyphase_lift_cert(bf, SosCertificate{}), CertificateError);
}

TEST_CASE("construct_from_sos: box spline gives 7 generators") {
  const Mask box = catalog_get("boxspline111");
  const auto f = construct_from_sos(box, polyphase_lift_cert(box, builtin_certificate("boxspline111")));
  CHECK(f.generators.size() == 7);
  const auto r = check_all(f, 1e-10);
  CHECK(r.passed);
  CHECK(r.vanishingMomentMax <= 1e-9);
}

TEST_CASE("construct_from_sos: butterfly gives 13 generators and q1 = 1/2 - p/2") {
  const Mask bf = catalog_get("butterfly");
  const auto f = construct_from_sos(bf, polyphase_lift_cert(bf, builtin_certificate("butterfly")));
  CHECK(f.generators.size() == 13);
  CHECK(max_abs_diff(f.generators[0], 0.5 - 0.5 * bf.p) < 1e-15);
  // The general formula keeps the z1 factor on the (1,0) generator.
  const auto s = split(bf);
  const std::size_t k10 = bf.ctx->class_of(MultiIndex{1, 0});
  const LaurentPoly q2 = 0.5 * (mono({1, 0}) * (1.0 - 4.0 * (bf.p * involution(s.components[k10]))));
  CHECK(max_abs_diff(f.generators[k10], q2) < 1e-15);
  CHECK(check_all(f, 1e-9).passed);
}

TEST_CASE("construct_from_sos: interp3d generator counts") {
  const Mask a = catalog_get("interp3d", {{"lambda", 1.0 / 32}});
  const auto fa = construct_from_sos(a, polyphase_lift_cert(a, builtin_certificate("interp3d", {{"lambda", 1.0 / 32}})));
  CHECK(fa.generators.size() == 41);
  CHECK(check_uep(fa, 1e-8).passed);

  const Mask b = catalog_get("interp3d", {{"lambda", 1.0 / 16}});
  const auto fb = construct_from_sos(b, polyphase_lift_cert(b, builtin_certificate("interp3d", {{"lambda", 1.0 / 16}})));
  CHECK(fb.generators.size() <= 41);
  CHECK(check_uep(fb, 1e-8).passed);
}

TEST_CASE("construct_from_sos: generator count and degree bounds") {
  for (const char* name : {"boxspline111", "butterfly"}) {
    const Mask mk = catalog_get(name);
    const auto cert = builtin_certificate(name);
    const auto lifted = polyphase_lift_cert(mk, cert);
    const auto f = construct_from_sos(mk, lifted);
    CHECK(f.generators.size() == mk.m() + lifted.hs.size());
    for (const auto& q : f.generators) CHECK(std::abs(evaluate(q, TorusPoint(mk.dim(), 0.0))) <= 1e-9);
    std::int64_t hs = 0;
    for (const auto& h : cert.hs) hs = std::max(hs, exponent_spread(h));
    for (std::size_t k = mk.m(); k < f.generators.size(); ++k)
      CHECK(exponent_spread(f.generators[k]) <= exponent_spread(mk.p) + hs);
  }
}

TEST_CASE("construct_from_sos: preconditions") {
  const Mask box = catalog_get("boxspline111");
  CHECK_THROWS_AS(construct_from_sos(box, builtin_certificate("butterfly")), std::exception);
  // Unlifted terms are rejected.
  CHECK_THROWS_AS(construct_from_sos(box, SosCertificate{{0.5 * sin_poly(MultiIndex{1, 0})}}), ConstructionError);
  // Wrong certificate.
  CHECK_THROWS_AS(construct_from_sos(box, SosCertificate{{0.5 * (mono({2, 0}) - one(2))}}), CertificateError);
  // No partition of unity.
  const Mask p1 = Mask::make(IntMatrix{{2}}, one(1));
  CHECK_THROWS_AS(construct_from_sos(p1, SosCertificate{}), ConstructionError);
}
