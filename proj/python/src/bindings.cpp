#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "paretosum/algorithm.hpp"
#include "paretosum/bench.hpp"
#include "paretosum/generators.hpp"
#include "paretosum/hull.hpp"
#include "paretosum/minplus.hpp"
#include "paretosum/reference.hpp"
#include "paretosum/successive.hpp"

namespace py = pybind11;
namespace ps = paretosum;

namespace {

using Pair = std::pair<std::int64_t, std::int64_t>;

ps::ParetoSet to_set(const std::vector<Pair>& pts) {
    std::vector<ps::Point> out;
    out.reserve(pts.size());
    for (const auto& [x, y] : pts) out.push_back({x, y});
    return ps::ParetoSet(std::move(out));
}

std::vector<Pair> to_pairs(std::span<const ps::Point> pts) {
    std::vector<Pair> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.emplace_back(p.x, p.y);
    return out;
}

py::dict record_dict(const ps::TimedRun& run) {
    const auto& r = run.record;
    py::dict d;
    d["algo"] = r.algo;
    d["k"] = r.k;
    d["time_ns"] = r.time_ns;
    d["checks"] = r.checks;
    d["oracle_calls"] = r.oracle_calls;
    d["cells"] = r.cells;
    d["heap_peak"] = r.heap_peak;
    d["frontier_peak"] = r.frontier_peak;
    d["rebuilds"] = r.rebuilds;
    d["verified"] = r.verified;
    d["ks_prep_ns"] = run.ks_prep_ns ? py::cast(*run.ks_prep_ns) : py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Pareto sums of two 2-D Pareto sets";

    m.def("algorithms", [] {
        std::vector<std::string> names;
        for (auto a : ps::kAllAlgorithms) names.emplace_back(ps::to_string(a));
        return names;
    });

    m.def("validate", [](const std::vector<Pair>& pts) {
        std::vector<ps::Point> v;
        for (const auto& [x, y] : pts) v.push_back({x, y});
        return ps::validate(v);
    }, py::arg("points"));

    m.def(
        "pareto_sum",
        [](const std::vector<Pair>& a, const std::vector<Pair>& b, const std::string& algo, std::size_t delta) {
            ps::RunOptions opts;
            opts.delta = delta;
            return to_pairs(ps::pareto_sum(ps::parse_algorithm(algo), to_set(a), to_set(b), opts).points());
        },
        py::arg("a"), py::arg("b"), py::arg("algo") = "sss", py::arg("delta") = 0,
        "Pareto sum of two sorted Pareto sets given as lists of (x, y).");

    m.def(
        "run",
        [](const std::vector<Pair>& a, const std::vector<Pair>& b, const std::string& algo, bool verify) {
            return record_dict(ps::timed_run(ps::parse_algorithm(algo), to_set(a), to_set(b), {}, verify));
        },
        py::arg("a"), py::arg("b"), py::arg("algo") = "sss", py::arg("verify") = false,
        "Timed run returning the run record as a dict.");

    m.def(
        "reference",
        [](const std::vector<Pair>& a, const std::vector<Pair>& b) {
            auto r = ps::pareto_sum_reference(to_set(a), to_set(b));
            return py::make_tuple(to_pairs(r.points.points()), r.nondominated_cells);
        },
        py::arg("a"), py::arg("b"), "Brute-force oracle: (points, non-dominated cell count).");

    m.def(
        "range_min",
        [](const std::vector<Pair>& a, const std::vector<Pair>& b, std::int64_t x_min, std::int64_t y_max,
           const std::string& oracle, std::size_t delta) -> py::object {
            const auto sa = to_set(a), sb = to_set(b);
            const ps::MinkowskiView view(sa, sb);
            const ps::SearchRange r{x_min, y_max};
            std::optional<ps::RangeHit> hit;
            if (oracle == "binary") {
                hit = ps::range_min_binary(view, r);
            } else if (oracle == "sweep") {
                hit = ps::range_min_sweep(view, r, {delta});
            } else if (oracle == "reference") {
                hit = ps::range_min_reference(view, r);
            } else {
                throw std::invalid_argument("oracle must be binary, sweep or reference");
            }
            if (!hit) return py::none();
            return py::make_tuple(hit->point.x, hit->point.y);
        },
        py::arg("a"), py::arg("b"), py::arg("x_min"), py::arg("y_max"), py::arg("oracle") = "sweep",
        py::arg("delta") = 1);

    m.def(
        "convex_seed",
        [](const std::vector<Pair>& a, const std::vector<Pair>& b) {
            std::vector<ps::Point> pts;
            for (const auto& s : ps::convex_seed(to_set(a), to_set(b))) pts.push_back(s.point);
            return to_pairs(pts);
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "generate",
        [](const std::string& gen, const std::string& dist, std::size_t n, std::uint64_t seed, std::int64_t scale,
           const std::string& role) {
            ps::GenSpec spec{ps::parse_family(gen), ps::parse_distribution(dist), n, seed, scale,
                             ps::parse_role(role)};
            return to_pairs(ps::generate(spec).points());
        },
        py::arg("gen") = "sorted", py::arg("dist") = "uniform", py::arg("n") = 100, py::arg("seed") = 1,
        py::arg("scale") = 1'000'000, py::arg("role") = "a");

    m.def(
        "minplus",
        [](std::vector<std::int64_t> a, std::vector<std::int64_t> b, const std::string& algo) {
            const auto which = ps::parse_algorithm(algo);
            return ps::minplus_via_pareto(ps::ConvInstance{std::move(a), std::move(b)},
                                          [&](const ps::ParetoSet& x, const ps::ParetoSet& y) {
                                              return ps::pareto_sum(which, x, y);
                                          });
        },
        py::arg("a"), py::arg("b"), py::arg("algo") = "sc", "(min,+)-convolution through a Pareto sum.");

    m.def(
        "minplus_naive",
        [](std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
            return ps::minplus_naive(ps::ConvInstance{std::move(a), std::move(b)});
        },
        py::arg("a"), py::arg("b"));

    // Input errors map to ValueError; other logic errors are broken invariants.
    static py::exception<std::logic_error> invariant_error(m, "InvariantError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const std::invalid_argument& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const std::logic_error& e) {
            py::set_error(invariant_error, e.what());
        }
    });
}
