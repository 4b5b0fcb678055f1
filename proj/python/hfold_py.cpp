#include <optional>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hfold/counting.hpp"
#include "hfold/duality.hpp"
#include "hfold/io.hpp"
#include "hfold/structure.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

hfold::NormalizedSet as_set(const std::vector<hfold::Integer>& elements)
{
    return hfold::NormalizedSet(elements);
}

py::object to_python_int(const hfold::BigCount& c)
{
    static py::object int_type = py::module_::import("builtins").attr("int");
    return int_type(py::str(c.str()));
}

py::dict fringe_dict(const hfold::FringeStructure& f)
{
    return py::dict("set"_a = std::vector<hfold::Integer>(f.set.elements().begin(), f.set.elements().end()),
                    "t"_a = f.t, "h_t"_a = f.h_t, "c_prime_t"_a = f.c_prime_t, "d_prime_t"_a = f.d_prime_t,
                    "c_t"_a = f.empty_for_all_h ? py::object(py::none()) : py::int_(f.c_t),
                    "d_t"_a = f.empty_for_all_h ? py::object(py::none()) : py::int_(f.d_t),
                    "C_t"_a = f.C_t, "D_t"_a = f.D_t, "empty_for_all_h"_a = f.empty_for_all_h);
}

hfold::FringeStructure fringe_from_dict(const py::dict& d)
{
    const bool empty = d.contains("empty_for_all_h") && d["empty_for_all_h"].cast<bool>();
    return hfold::FringeStructure{
        as_set(d["set"].cast<std::vector<hfold::Integer>>()),
        d["t"].cast<std::uint32_t>(),
        d["h_t"].cast<hfold::Integer>(),
        d["c_prime_t"].cast<hfold::Integer>(),
        d["d_prime_t"].cast<hfold::Integer>(),
        empty ? 0 : d["c_t"].cast<hfold::Integer>(),
        empty ? 0 : d["d_t"].cast<hfold::Integer>(),
        d["C_t"].cast<std::vector<hfold::Integer>>(),
        d["D_t"].cast<std::vector<hfold::Integer>>(),
        empty,
    };
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "h-fold sumsets, threshold sumsets and their fringe structure";
    py::register_exception<hfold::Error>(m, "HFoldError", PyExc_ValueError);

    m.def("normalize", [](std::vector<hfold::Integer> raw) {
        const hfold::NormalizationRecord r = hfold::normalize(hfold::RawSet(std::move(raw)));
        return py::dict("normalized"_a = std::vector<hfold::Integer>(r.normalized.elements().begin(),
                                                                      r.normalized.elements().end()),
                        "offset"_a = r.offset, "scale"_a = r.scale);
    }, "raw"_a);

    m.def("rep_counts", [](const std::vector<hfold::Integer>& set, hfold::Integer h, std::optional<std::uint32_t> cap) {
        const auto table = hfold::rep_count_table(as_set(set), h, cap ? hfold::Cap::at(*cap) : hfold::Cap::exact());
        py::list out;
        for (hfold::Integer n = 0; n <= table.extent(); ++n)
            out.append(to_python_int(table.count(n)));
        return out;
    }, "set"_a, "h"_a, "cap"_a = py::none(), "r_{A,h}(n) for n in [0, h*a_max]; exact when cap is None.");

    m.def("rep_counts_oracle", [](const std::vector<hfold::Integer>& set, hfold::Integer h) {
        const auto table = hfold::rep_count_oracle(as_set(set), h);
        py::list out;
        for (hfold::Integer n = 0; n <= table.extent(); ++n)
            out.append(to_python_int(table.count(n)));
        return out;
    }, "set"_a, "h"_a);

    m.def("threshold_sumset", [](const std::vector<hfold::Integer>& set, hfold::Integer h, std::uint32_t t) {
        return hfold::threshold_sumset(as_set(set), h, t).members.to_vector();
    }, "set"_a, "h"_a, "t"_a = 1);

    m.def("threshold_bounds", [](const std::vector<hfold::Integer>& set, std::uint32_t t) {
        const auto b = hfold::threshold_bounds(as_set(set), t);
        return py::dict("t"_a = b.t, "h_t"_a = b.h_t, "c_prime_t"_a = b.c_prime_t, "d_prime_t"_a = b.d_prime_t);
    }, "set"_a, "t"_a = 1);

    m.def("extract_fringes", [](const std::vector<hfold::Integer>& set, std::uint32_t t) {
        return fringe_dict(hfold::extract_fringes(as_set(set), t));
    }, "set"_a, "t"_a = 1);

    m.def("predict_sumset", [](const py::dict& fringe, hfold::Integer h) {
        return hfold::predict_sumset(fringe_from_dict(fringe), h).members.to_vector();
    }, "fringe"_a, "h"_a);

    m.def("verify_structure", [](const std::vector<hfold::Integer>& set, std::uint32_t t, hfold::Integer h_lo,
                                 hfold::Integer h_hi) -> py::dict {
        const auto verdict = hfold::verify_structure(as_set(set), t, h_lo, h_hi);
        if (const auto* cert = std::get_if<hfold::StructureCertificate>(&verdict))
            return py::dict("ok"_a = true, "fringe"_a = fringe_dict(cert->fringe),
                            "verified_h"_a = py::make_tuple(cert->verified_h_lo, cert->verified_h_hi));
        const auto& m = std::get<hfold::StructureMismatch>(verdict);
        return py::dict("ok"_a = false, "fringe"_a = fringe_dict(m.fringe), "h"_a = m.h, "missing"_a = m.missing,
                        "unexpected"_a = m.unexpected);
    }, "set"_a, "t"_a, "h_lo"_a, "h_hi"_a);

    m.def("structure_json", [](const std::vector<hfold::Integer>& set, std::uint32_t t, hfold::Integer window) {
        const hfold::NormalizedSet a = as_set(set);
        const auto f = hfold::extract_fringes(a, t);
        const auto verdict = hfold::verify_structure(a, t, f.h_t, f.h_t + window);
        if (const auto* m = std::get_if<hfold::StructureMismatch>(&verdict))
            throw hfold::InternalError("structure mismatch at h = " + std::to_string(m->h));
        return hfold::io::to_json(std::get<hfold::StructureCertificate>(verdict)).dump();
    }, "set"_a, "t"_a = 1, "window"_a = 4, "FringeStructure JSON with its verified fold range.");

    m.def("empirical_onset", [](const std::vector<hfold::Integer>& set, std::uint32_t t, hfold::Integer window) {
        return hfold::empirical_onset(as_set(set), t, window);
    }, "set"_a, "t"_a = 1, "window"_a = 4);

    m.def("check_inclusion_lemma", [](const std::vector<hfold::Integer>& set, hfold::Integer h, std::uint32_t t) {
        return hfold::check_inclusion_lemma(as_set(set), h, t);
    }, "set"_a, "h"_a, "t"_a = 1);

    m.def("check_interval_lemma", [](const std::vector<hfold::Integer>& set, hfold::Integer h, std::uint32_t t) {
        return hfold::check_interval_lemma(as_set(set), h, t);
    }, "set"_a, "h"_a, "t"_a = 1);

    m.def("construct_witnesses", [](const std::vector<hfold::Integer>& set, std::uint32_t t, hfold::Integer h,
                                    hfold::Integer n) {
        return hfold::construct_witnesses(as_set(set), t, h, n).witnesses;
    }, "set"_a, "t"_a, "h"_a, "n"_a, "Multiplicities of a_1..a_k for each of t distinct representations.");

    m.def("frobenius_number", [](const std::vector<hfold::Integer>& set, std::uint32_t t) {
        return hfold::frobenius_number(as_set(set), t);
    }, "set"_a, "t"_a = 1);

    m.def("frobenius_sequence", [](const std::vector<hfold::Integer>& set, std::uint32_t t_max) {
        return hfold::frobenius_sequence(as_set(set), t_max);
    }, "set"_a, "t_max"_a);

    m.def("dual_set", [](const std::vector<hfold::Integer>& set) {
        const auto d = hfold::dual_set(as_set(set));
        return std::vector<hfold::Integer>(d.elements().begin(), d.elements().end());
    }, "set"_a);

    m.def("check_duality", [](const std::vector<hfold::Integer>& set, hfold::Integer h, std::uint32_t t) {
        return hfold::check_duality(as_set(set), h, t);
    }, "set"_a, "h"_a, "t"_a = 1);

    m.def("dual_fringes", [](const py::dict& fringe) {
        return fringe_dict(hfold::dual_fringes(fringe_from_dict(fringe)));
    }, "fringe"_a);
}
