#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pimetric/autgroup.hpp"
#include "pimetric/counting.hpp"
#include "pimetric/error.hpp"
#include "pimetric/io.hpp"
#include "pimetric/oracle.hpp"

namespace py = pybind11;
using namespace pimetric;

namespace
{

// Python ints are arbitrary precision, so go through the decimal string.
py::int_ to_py(BigInt const &x)
{
  return py::int_(py::reinterpret_steal<py::object>(
      PyLong_FromString(to_decimal(x).c_str(), nullptr, 10)));
}

Partition to_partition(py::object const &pi)
{
  if (py::isinstance<py::str>(pi))
    return Partition::parse(pi.cast<std::string>());
  if (py::isinstance<Partition>(pi))
    return pi.cast<Partition>();
  return Partition(pi.cast<std::vector<unsigned>>());
}

// Vectors come in as a flat index or a coordinate list.
BlockVector to_vector(Space const &s, py::object const &v)
{
  if (py::isinstance<py::int_>(v))
    return BlockVector::from_index(s, v.cast<std::uint64_t>());
  auto coords = v.cast<std::vector<unsigned>>();
  return BlockVector(s, std::vector<Elem>(coords.begin(), coords.end()));
}

py::dict report_dict(EnumerationReport const &r, BigInt const &formula)
{
  py::dict d;
  d["space"] = r.space;
  d["kind"] = r.kind;
  d["candidates"] = r.candidates;
  d["count"] = r.count;
  d["formula"] = to_py(formula);
  d["match"] = BigInt(r.count) == formula;
  d["seconds"] = r.seconds;
  if (r.maps) {
    py::list maps;
    for (auto const &f : *r.maps)
      maps.append(f.table());
    d["maps"] = maps;
  }
  return d;
}

OracleOptions options(unsigned workers, bool keep_maps)
{
  OracleOptions o;
  o.workers = workers;
  o.keep_maps = keep_maps;
  return o;
}

template<typename Writer, typename T>
std::string to_text(Writer write, T const &value)
{
  std::ostringstream out;
  write(out, value);
  return out.str();
}

} // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Symmetries and automorphisms of F_q^n under the pi-metric";

  static py::exception<Error> error_type(m, "PimetricError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p)
        std::rethrow_exception(p);
    } catch (Error const &e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = errc_name(e.code());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<Field>(m, "Field")
      .def(py::init(&Field::make), py::arg("q"))
      .def_property_readonly("q", &Field::q)
      .def_property_readonly("p", &Field::p)
      .def_property_readonly("e", &Field::e)
      .def("add", &Field::add)
      .def("sub", &Field::sub)
      .def("neg", &Field::neg)
      .def("mul", &Field::mul)
      .def("inv", &Field::inv)
      .def("div", &Field::div)
      .def("__repr__", [](Field const &f) { return "Field(" + std::to_string(f.q()) + ")"; });

  py::class_<Partition>(m, "Partition")
      .def(py::init<std::vector<unsigned>>(), py::arg("blocks"))
      .def_static("parse", &Partition::parse)
      .def_property_readonly("blocks", &Partition::blocks)
      .def_property_readonly("m", &Partition::m)
      .def_property_readonly("n", &Partition::n)
      .def("__str__", &Partition::to_string)
      .def("__eq__", [](Partition const &a, Partition const &b) { return a == b; });

  py::class_<Space>(m, "Space")
      .def(py::init([](unsigned q, py::object const &pi) { return Space(Field::make(q), to_partition(pi)); }),
           py::arg("q"), py::arg("pi"))
      .def_property_readonly("q", &Space::q)
      .def_property_readonly("n", &Space::n)
      .def_property_readonly("m", &Space::m)
      .def_property_readonly("partition", &Space::partition)
      .def_property_readonly("size", [](Space const &s) { return s.size(); })
      .def("coords", [](Space const &s, std::uint64_t i) {
        auto v = BlockVector::from_index(s, i);
        return std::vector<unsigned>(v.coords().begin(), v.coords().end());
      })
      .def("index", [](Space const &s, py::object const &v) { return to_vector(s, v).index(); })
      .def("__str__", &Space::describe);

  m.def("pi_weight", [](Space const &s, py::object const &v) { return pi_weight(to_vector(s, v)); },
        py::arg("space"), py::arg("v"));
  m.def("pi_distance",
        [](Space const &s, py::object const &u, py::object const &v) {
          return pi_distance(to_vector(s, u), to_vector(s, v));
        },
        py::arg("space"), py::arg("u"), py::arg("v"));

  py::class_<ExplicitMap>(m, "ExplicitMap")
      .def(py::init<Space, std::vector<std::uint32_t>>(), py::arg("space"), py::arg("table"))
      .def_property_readonly("space", &ExplicitMap::space)
      .def_property_readonly("table", &ExplicitMap::table)
      .def("is_bijective", &ExplicitMap::is_bijective)
      .def("__call__", &ExplicitMap::operator())
      .def("__len__", &ExplicitMap::size)
      .def("__eq__", [](ExplicitMap const &a, ExplicitMap const &b) { return a == b; });

  py::class_<StructuredSymmetry>(m, "StructuredSymmetry")
      .def(py::init([](Space const &s, std::vector<unsigned> sigma,
                       std::vector<std::vector<std::uint32_t>> blocks) {
             BlockBijections b;
             for (auto &t : blocks)
               b.emplace_back(std::move(t));
             return StructuredSymmetry(s, BlockPermutation(std::move(sigma)), std::move(b));
           }),
           py::arg("space"), py::arg("sigma"), py::arg("blocks"))
      .def_property_readonly("space", &StructuredSymmetry::space)
      .def_property_readonly("sigma", [](StructuredSymmetry const &s) { return s.sigma().image(); })
      .def_property_readonly("blocks",
                             [](StructuredSymmetry const &s) {
                               std::vector<std::vector<std::uint32_t>> out;
                               for (auto const &b : s.blocks())
                                 out.push_back(b.table());
                               return out;
                             })
      .def("__eq__", [](StructuredSymmetry const &a, StructuredSymmetry const &b) { return a == b; })
      .def("__str__", [](StructuredSymmetry const &s) { return to_text(write_structured, s); });

  py::class_<LinearBlockMap>(m, "LinearBlockMap")
      .def_property_readonly("space", &LinearBlockMap::space)
      .def_property_readonly("sigma", [](LinearBlockMap const &l) { return l.sigma().image(); })
      .def_property_readonly("matrices",
                             [](LinearBlockMap const &l) {
                               std::vector<std::vector<std::vector<unsigned>>> out;
                               for (auto const &a : l.mats()) {
                                 std::vector<std::vector<unsigned>> rows(a.k());
                                 for (unsigned r = 0; r < a.k(); ++r)
                                   for (unsigned c = 0; c < a.k(); ++c)
                                     rows[r].push_back(a(r, c));
                                 out.push_back(std::move(rows));
                               }
                               return out;
                             })
      .def("__eq__", [](LinearBlockMap const &a, LinearBlockMap const &b) { return a == b; })
      .def("__str__", [](LinearBlockMap const &l) { return to_text(write_linear, l); });

  m.def("is_symmetry", &is_symmetry, py::arg("f"));
  m.def("is_automorphism", &is_automorphism, py::arg("f"));
  m.def("is_linear", &is_linear, py::arg("f"));
  m.def("find_distance_violation", &find_distance_violation, py::arg("f"),
        "A pair (u, v) whose distance F changes, or None.");
  m.def("decompose", &decompose, py::arg("f"), py::arg("validate") = false);
  m.def("decompose_linear", &decompose_linear, py::arg("f"));
  m.def("expand", py::overload_cast<StructuredSymmetry const &>(&expand), py::arg("s"));
  m.def("expand", py::overload_cast<LinearBlockMap const &>(&expand), py::arg("l"));
  m.def("to_structured", &to_structured, py::arg("l"));
  m.def("compose", &compose, py::arg("a"), py::arg("b"));
  m.def("invert", &invert, py::arg("s"));
  m.def("compose_tables", &compose_tables, py::arg("f"), py::arg("g"));
  m.def("random_symmetry", &random_symmetry, py::arg("space"), py::arg("seed"));
  m.def("random_automorphism", &random_automorphism, py::arg("space"), py::arg("seed"));

  m.def("s_pi_order", [](py::object const &pi) { return to_py(s_pi_order(to_partition(pi).profile())); },
        py::arg("pi"));
  m.def("m_order", [](py::object const &pi, unsigned q) { return to_py(m_order(to_partition(pi), q)); },
        py::arg("pi"), py::arg("q"));
  m.def("symm_order", [](py::object const &pi, unsigned q) { return to_py(symm_order(to_partition(pi), q)); },
        py::arg("pi"), py::arg("q"));
  m.def("aut_order", [](py::object const &pi, unsigned q) { return to_py(aut_order(to_partition(pi), q)); },
        py::arg("pi"), py::arg("q"));
  m.def("gl_order", [](unsigned k, unsigned q) { return to_py(gl_order(k, q)); }, py::arg("k"), py::arg("q"));
  m.def("hamming_orders",
        [](unsigned n, unsigned q) {
          auto h = hamming_orders(n, q);
          return py::make_tuple(to_py(h.symm), to_py(h.aut));
        },
        py::arg("n"), py::arg("q"));

  m.def("enumerate_symmetries",
        [](Space const &s, unsigned workers, bool keep_maps) {
          return report_dict(enumerate_symmetries(s, options(workers, keep_maps)),
                             symm_order(s.partition(), s.q()));
        },
        py::arg("space"), py::arg("workers") = 0, py::arg("keep_maps") = false);
  m.def("enumerate_automorphisms",
        [](Space const &s, unsigned workers, bool keep_maps) {
          return report_dict(enumerate_automorphisms(s, options(workers, keep_maps)),
                             aut_order(s.partition(), s.q()));
        },
        py::arg("space"), py::arg("workers") = 0, py::arg("keep_maps") = false);
  m.def("enumerate_M",
        [](Space const &s, unsigned workers, bool keep_maps) {
          return report_dict(enumerate_M(s, options(workers, keep_maps)), m_order(s.partition(), s.q()));
        },
        py::arg("space"), py::arg("workers") = 0, py::arg("keep_maps") = false);
  m.def("verify_lemma1", [](Space const &s, unsigned workers) { return verify_lemma1(s, options(workers, false)); },
        py::arg("space"), py::arg("workers") = 0);
  m.def("satisfies_lemma1", &satisfies_lemma1, py::arg("f"));
  m.def("verify_decomposition_bijection",
        [](Space const &s, unsigned workers) { return verify_decomposition_bijection(s, options(workers, false)); },
        py::arg("space"), py::arg("workers") = 0);

  m.def("code_min_distance",
        [](Space const &s, std::vector<std::vector<unsigned>> const &rows) {
          GeneratorMatrix g{s, {}};
          for (auto const &r : rows) {
            std::vector<Elem> e(r.begin(), r.end());
            g.rows.emplace_back(s, e);
          }
          return code_min_distance(g);
        },
        py::arg("space"), py::arg("rows"));

  m.def("format_map", [](ExplicitMap const &f) { return to_text(write_map, f); }, py::arg("f"));
  m.def("parse_map",
        [](std::string const &text) {
          std::istringstream in(text);
          return read_map(in);
        },
        py::arg("text"));
  m.def("parse_symmetry",
        [](std::string const &text) -> py::object {
          auto doc = parse_symmetry(text);
          if (auto *l = std::get_if<LinearBlockMap>(&doc))
            return py::cast(*l);
          return py::cast(std::get<StructuredSymmetry>(doc));
        },
        py::arg("text"));
}
