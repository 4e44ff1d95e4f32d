#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "omit/config.hpp"
#include "omit/mean_field.hpp"
#include "omit/response.hpp"
#include "omit/sweep.hpp"

namespace py = pybind11;
using namespace omit;

PYBIND11_MODULE(_core, m) {
    m.doc() = "pump-probe linear response of a one-sided optomechanical cavity";

    py::register_exception<Error>(m, "OmitError");

    py::enum_<DetuningMode>(m, "DetuningMode")
        .value("FIXED_EFFECTIVE", DetuningMode::FixedEffective)
        .value("BARE", DetuningMode::Bare);

    py::class_<PhysicalParams>(m, "PhysicalParams")
        .def(py::init([](double cavity_length, double pump_wavelength,
                         double mirror_mass, double cavity_halfwidth,
                         double mech_freq, double mech_damping) {
                 PhysicalParams p{cavity_length, pump_wavelength, mirror_mass,
                                  cavity_halfwidth, mech_freq, mech_damping};
                 p.validate();
                 return p;
             }),
             py::arg("cavity_length"), py::arg("pump_wavelength"),
             py::arg("mirror_mass"), py::arg("cavity_halfwidth"),
             py::arg("mech_freq"), py::arg("mech_damping"),
             "Lengths in m, mass in kg, rates in rad/s.")
        .def_readwrite("cavity_length", &PhysicalParams::cavity_length)
        .def_readwrite("pump_wavelength", &PhysicalParams::pump_wavelength)
        .def_readwrite("mirror_mass", &PhysicalParams::mirror_mass)
        .def_readwrite("cavity_halfwidth", &PhysicalParams::cavity_halfwidth)
        .def_readwrite("mech_freq", &PhysicalParams::mech_freq)
        .def_readwrite("mech_damping", &PhysicalParams::mech_damping)
        .def("quality_factor", &PhysicalParams::quality_factor)
        .def("sideband_resolution", &PhysicalParams::sideband_resolution);

    py::class_<DriveParams>(m, "DriveParams")
        .def(py::init([](double pump_power, DetuningMode mode, double detuning,
                         double probe_offset) {
                 DriveParams d{pump_power, mode, detuning, probe_offset};
                 d.validate();
                 return d;
             }),
             py::arg("pump_power"),
             py::arg("detuning_mode") = DetuningMode::FixedEffective,
             py::arg("detuning") = 0.0, py::arg("probe_offset") = 0.0)
        .def_readwrite("pump_power", &DriveParams::pump_power)
        .def_readwrite("detuning_mode", &DriveParams::detuning_mode)
        .def_readwrite("detuning", &DriveParams::detuning)
        .def_readwrite("probe_offset", &DriveParams::probe_offset);

    py::class_<DerivedConstants>(m, "DerivedConstants")
        .def_readonly("cavity_freq", &DerivedConstants::cavity_freq)
        .def_readonly("coupling", &DerivedConstants::coupling)
        .def_readonly("pump_amplitude", &DerivedConstants::pump_amplitude);

    py::class_<SteadyState>(m, "SteadyState")
        .def_readonly("cavity_amp", &SteadyState::cavity_amp)
        .def_readonly("mirror_pos", &SteadyState::mirror_pos)
        .def_readonly("eff_detuning", &SteadyState::eff_detuning)
        .def_readonly("opto_coupling", &SteadyState::opto_coupling)
        .def_readonly("residual", &SteadyState::residual);

    py::class_<ResponsePoint>(m, "ResponsePoint")
        .def_readonly("probe_offset", &ResponsePoint::probe_offset)
        .def_readonly("c_plus", &ResponsePoint::c_plus)
        .def_readonly("lambda_response", &ResponsePoint::lambda_response)
        .def_readonly("eps_out_plus", &ResponsePoint::eps_out_plus)
        .def_readonly("transmission", &ResponsePoint::transmission)
        .def_readonly("phase", &ResponsePoint::phase)
        .def_readonly("group_delay", &ResponsePoint::group_delay);

    py::class_<MeanFieldResult>(m, "MeanFieldResult")
        .def_readonly("c_plus", &MeanFieldResult::c_plus)
        .def_readonly("cavity_mean", &MeanFieldResult::cavity_mean)
        .def_readonly("window_mismatch", &MeanFieldResult::window_mismatch)
        .def_readonly("dt", &MeanFieldResult::dt)
        .def_readonly("t_end", &MeanFieldResult::t_end);

    m.def("derive_constants", &derive_constants, py::arg("physical"),
          py::arg("drive"));
    m.def("steady_state_fixed", &steady_state_fixed, py::arg("eff_detuning"),
          py::arg("constants"), py::arg("physical"), py::arg("pump_phase") = 0.0);
    m.def("steady_state_self_consistent", &steady_state_self_consistent,
          py::arg("bare_detuning"), py::arg("constants"), py::arg("physical"),
          py::arg("pump_phase") = 0.0);
    m.def("probe_response", &probe_response, py::arg("delta"), py::arg("state"),
          py::arg("physical"));
    m.def("output_amplitude", &output_amplitude, py::arg("c_plus"),
          py::arg("kappa"));
    m.def("phase", &phase, py::arg("eps"));
    m.def("group_delay_numeric", &group_delay_numeric, py::arg("delta"),
          py::arg("state"), py::arg("physical"), py::arg("step"));
    m.def("group_delay_analytic", &group_delay_analytic, py::arg("delta"),
          py::arg("state"), py::arg("physical"));
    m.def("evaluate_point", &evaluate_point, py::arg("delta"), py::arg("state"),
          py::arg("physical"));
    m.def(
        "integrate_mean_field",
        [](const PhysicalParams& p, const DerivedConstants& c,
           const DriveParams& d, double probe_amplitude, double t_end,
           double dt) {
            py::gil_scoped_release release;
            return integrate_mean_field(p, c, d, probe_amplitude, t_end, dt);
        },
        py::arg("physical"), py::arg("constants"), py::arg("drive"),
        py::arg("probe_amplitude"), py::arg("t_end"), py::arg("dt"));

    py::enum_<SweepAxis>(m, "SweepAxis")
        .value("PROBE_OFFSET", SweepAxis::ProbeOffset)
        .value("PUMP_POWER", SweepAxis::PumpPower);

    py::class_<SweepSpec>(m, "SweepSpec")
        .def(py::init<>())
        .def_readwrite("axis", &SweepSpec::axis)
        .def_readwrite("start", &SweepSpec::start)
        .def_readwrite("stop", &SweepSpec::stop)
        .def_readwrite("count", &SweepSpec::count)
        .def_readwrite("physical", &SweepSpec::physical)
        .def_readwrite("drive", &SweepSpec::drive)
        .def_readwrite("gamma_variants", &SweepSpec::gamma_variants);

    py::class_<SeriesRow>(m, "SeriesRow")
        .def_readonly("axis_value", &SeriesRow::axis_value)
        .def_readonly("re_lambda", &SeriesRow::re_lambda)
        .def_readonly("im_lambda", &SeriesRow::im_lambda)
        .def_readonly("transmission", &SeriesRow::transmission)
        .def_readonly("phase_raw", &SeriesRow::phase_raw)
        .def_readonly("phase_unwrapped", &SeriesRow::phase_unwrapped)
        .def_readonly("group_delay", &SeriesRow::group_delay);

    py::class_<Series>(m, "Series")
        .def_readonly("gamma_m", &Series::gamma_m)
        .def_readonly("rows", &Series::rows);

    m.def("grid_point", &grid_point, py::arg("start"), py::arg("stop"),
          py::arg("count"), py::arg("index"));
    m.def(
        "sweep_probe",
        [](const SweepSpec& spec) {
            py::gil_scoped_release release;
            return sweep_probe(spec);
        },
        py::arg("spec"));
    m.def(
        "sweep_power",
        [](const SweepSpec& spec) {
            py::gil_scoped_release release;
            return sweep_power(spec);
        },
        py::arg("spec"));

    m.attr("HBAR") = kHbar;
    m.attr("SPEED_OF_LIGHT") = kSpeedOfLight;

#ifdef VERSION_INFO
#define OMIT_STR_EXPAND(x) #x
#define OMIT_STR(x) OMIT_STR_EXPAND(x)
    m.attr("__version__") = OMIT_STR(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
