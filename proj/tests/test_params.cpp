#include <doctest.h>

#include "omit/params.hpp"
#include "test_util.hpp"

using namespace omit;
using namespace omit_test;

TEST_CASE("derived constants match the independent high-precision values") {
    const PhysicalParams p = reference_params();
    DriveParams d;
    d.pump_power = 1e-3;
    const DerivedConstants c = derive_constants(p, d);

    CHECK(rel_close(c.cavity_freq, frozen::cavity_freq, 1e-14));
    CHECK(rel_close(c.coupling, frozen::coupling, 1e-14));
    CHECK(rel_close(c.pump_amplitude * c.pump_amplitude, frozen::pump_flux_1mw,
                    1e-13));
}

TEST_CASE("zero pump power gives zero pump amplitude") {
    const PhysicalParams p = reference_params();
    DriveParams d;
    d.pump_power = 0.0;
    CHECK(derive_constants(p, d).pump_amplitude == 0.0);
}

TEST_CASE("pump amplitude scales as sqrt(power)") {
    const PhysicalParams p = reference_params();
    DriveParams d;
    d.pump_power = 1e-3;
    const double a1 = derive_constants(p, d).pump_amplitude;
    d.pump_power = 4e-3;
    const double a4 = derive_constants(p, d).pump_amplitude;
    CHECK(rel_close(a4, 2.0 * a1, 1e-14));
}

TEST_CASE("non-positive hardware parameters are rejected by name") {
    DriveParams d;
    PhysicalParams p = reference_params();
    p.mirror_mass = -1e-9;
    CHECK_THROWS_WITH_AS(derive_constants(p, d), doctest::Contains("mirror_mass"),
                         NonPositiveParameter);

    p = reference_params();
    p.cavity_length = 0.0;
    CHECK_THROWS_AS(derive_constants(p, d), NonPositiveParameter);

    p = reference_params();
    p.pump_wavelength = -1.0;
    CHECK_THROWS_AS(derive_constants(p, d), NonPositiveParameter);

    p = reference_params();
    p.cavity_halfwidth = 0.0;
    CHECK_THROWS_AS(derive_constants(p, d), NonPositiveParameter);

    p = reference_params();
    p.mech_freq = 0.0;
    CHECK_THROWS_AS(derive_constants(p, d), NonPositiveParameter);
}

TEST_CASE("zero mechanical damping is tolerated") {
    PhysicalParams p = reference_params();
    p.mech_damping = 0.0;
    CHECK_NOTHROW(p.validate());
    CHECK(std::isinf(p.quality_factor()));
}

TEST_CASE("negative pump power is rejected") {
    DriveParams d;
    d.pump_power = -1e-6;
    CHECK_THROWS_AS(d.validate(), ValidationError);
}

TEST_CASE("reference set quality factor and sideband resolution") {
    const PhysicalParams p = reference_params();
    CHECK(rel_close(p.quality_factor(), 947e3 / 141.0, 1e-14));
    CHECK(p.sideband_resolution() > 4.0);  // omega_m / kappa = 947/215
}
