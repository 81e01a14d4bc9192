#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "schubvan/decide.hpp"
#include "schubvan/oracle.hpp"

namespace py = pybind11;
using namespace schubvan;

namespace {

py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

BigInt from_py(const py::handle& h) { return BigInt(py::str(h).cast<std::string>()); }

Instance make_instance(const std::string& type, int rank, const std::vector<std::vector<int>>& words) {
    const LieType t = parse_lie_type(type);
    std::vector<WeylElement> ws;
    for (const auto& w : words) ws.emplace_back(t, w);
    return Instance(t, rank, std::move(ws));
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
    if (seed) return *seed;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

Arithmetic parse_arithmetic(const std::string& s) {
    if (s == "exact") return Arithmetic::Exact;
    if (s == "modular") return Arithmetic::Modular;
    throw InputError("arithmetic must be 'exact' or 'modular'");
}

py::dict witness_dict(const Witness& w) {
    py::dict out;
    py::list alpha;
    for (const auto& block : w.alpha) {
        py::list b;
        for (const auto& v : block) b.append(to_py(v));
        alpha.append(b);
    }
    py::list x;
    for (const auto& v : w.x) x.append(to_py(v));
    out["alpha"] = alpha;
    out["x"] = x;
    out["det"] = to_py(w.det);
    out["modulus"] = w.modulus ? py::object(py::int_(w.modulus)) : py::object(py::none());
    return out;
}

Witness witness_from(const py::dict& d) {
    Witness w;
    for (const auto& block : d["alpha"]) {
        std::vector<BigInt> b;
        for (const auto& v : block) b.push_back(from_py(v));
        w.alpha.push_back(std::move(b));
    }
    for (const auto& v : d["x"]) w.x.push_back(from_py(v));
    w.det = from_py(d["det"]);
    if (d.contains("modulus") && !d["modulus"].is_none()) w.modulus = d["modulus"].cast<std::uint64_t>();
    return w;
}

py::dict decision_dict(const Decision& d, std::uint64_t seed) {
    py::dict out;
    out["decision"] = to_string(d.verdict);
    out["certain"] = d.certain;
    out["rule"] = d.rule;
    out["rounds"] = d.rounds_run;
    out["p"] = d.p;
    out["seed"] = seed;
    out["witness"] = d.witness ? py::object(witness_dict(*d.witness)) : py::object(py::none());
    return out;
}

// Validated through the same path as text input.
Partition partition(const std::vector<int>& p) {
    std::string text;
    for (std::size_t i = 0; i < p.size(); ++i) text += (i ? "," : "") + std::to_string(p[i]);
    return parse_partition(text);
}

DecideOptions options(int rounds, const std::string& arithmetic) {
    DecideOptions o;
    o.rounds = rounds;
    o.arithmetic = parse_arithmetic(arithmetic);
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Vanishing of Schubert structure constants in classical types";
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    m.def(
        "vanishing",
        [](const std::string& type, int rank, const std::vector<std::vector<int>>& words, double epsilon,
           std::optional<std::uint64_t> seed, int rounds, const std::string& arithmetic) {
            const auto inst = make_instance(type, rank, words);
            const auto s = resolve_seed(seed);
            Rng rng(s);
            Decision d;
            {
                py::gil_scoped_release release;
                d = vanishing(inst, epsilon, rng, options(rounds, arithmetic));
            }
            return decision_dict(d, s);
        },
        py::arg("type"), py::arg("rank"), py::arg("words"), py::arg("epsilon") = 1e-9, py::arg("seed") = py::none(),
        py::arg("rounds") = 0, py::arg("arithmetic") = "exact");

    m.def(
        "lr_vanishing",
        [](const std::string& type, const std::vector<int>& lambda, const std::vector<int>& mu,
           const std::vector<int>& nu, double epsilon, std::optional<std::uint64_t> seed, int rounds,
           const std::string& arithmetic) {
            const auto s = resolve_seed(seed);
            Rng rng(s);
            const PartitionTriple t{partition(lambda), partition(mu), partition(nu)};
            const auto d = lr_vanishing(t, parse_lie_type(type), epsilon, rng, options(rounds, arithmetic));
            return decision_dict(d, s);
        },
        py::arg("type"), py::arg("lam"), py::arg("mu"), py::arg("nu"), py::arg("epsilon") = 1e-9,
        py::arg("seed") = py::none(), py::arg("rounds") = 0, py::arg("arithmetic") = "exact");

    m.def(
        "verify_witness",
        [](const std::string& type, int rank, const std::vector<std::vector<int>>& words, const py::dict& witness) {
            return verify_witness(make_instance(type, rank, words), witness_from(witness));
        },
        py::arg("type"), py::arg("rank"), py::arg("words"), py::arg("witness"));

    m.def(
        "symbolic_vanishing",
        [](const std::string& type, int rank, const std::vector<std::vector<int>>& words) {
            return symbolic_vanishing(make_instance(type, rank, words));
        },
        py::arg("type"), py::arg("rank"), py::arg("words"));

    m.def(
        "dimension_check",
        [](const std::string& type, int rank, const std::vector<std::vector<int>>& words) {
            return dimension_check(make_instance(type, rank, words));
        },
        py::arg("type"), py::arg("rank"), py::arg("words"));

    m.def(
        "long_word", [](const std::string& type, int rank) { return long_word(parse_lie_type(type), rank).word(); },
        py::arg("type"), py::arg("rank"));
    m.def(
        "length",
        [](const std::string& type, const std::vector<int>& w) { return length(WeylElement(parse_lie_type(type), w)); },
        py::arg("type"), py::arg("word"));
    m.def(
        "num_positive_roots",
        [](const std::string& type, int rank) { return num_positive_roots(parse_lie_type(type), rank); },
        py::arg("type"), py::arg("rank"));

    m.def(
        "schubert_coeff",
        [](const std::vector<int>& u, const std::vector<int>& v, const std::vector<int>& w) {
            return to_py(schubert_coeff_A(WeylElement(LieType::A, u), WeylElement(LieType::A, v),
                                          WeylElement(LieType::A, w)));
        },
        py::arg("u"), py::arg("v"), py::arg("w"));
    m.def(
        "lr_coeff",
        [](const std::vector<int>& l, const std::vector<int>& mu, const std::vector<int>& nu) {
            return to_py(schur_lr_coeff(partition(l), partition(mu), partition(nu)));
        },
        py::arg("lam"), py::arg("mu"), py::arg("nu"));
    m.def(
        "pschur_coeff",
        [](const std::vector<int>& l, const std::vector<int>& mu, const std::vector<int>& nu) {
            return to_py(pschur_coeff(partition(l), partition(mu), partition(nu)));
        },
        py::arg("lam"), py::arg("mu"), py::arg("nu"));
}
