#pragma once

#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "zck/mpoly.hpp"
#include "zck/quiver.hpp"

namespace zck::suite {

struct NamedQuiver {
  std::string name;
  Quiver quiver;
};

inline Quiver quiver_from(const std::string& text) { return parse_quiver(text); }

/// A1, A1 u A1, Jordan, two-loop vertex, A2, A3, Kronecker.
inline std::vector<NamedQuiver> suite_quivers() {
  return {
      {"A1", quiver_from("vertex v\n")},
      {"A1+A1", quiver_from("vertex v\nvertex w\n")},
      {"Jordan", quiver_from("vertex v\nedge v v\n")},
      {"TwoLoop", quiver_from("vertex v\nedge v v\nedge v v\n")},
      {"A2", quiver_from("vertex 1\nvertex 2\nedge 1 2\n")},
      {"A3", quiver_from("vertex 1\nvertex 2\nvertex 3\nedge 1 2\nedge 2 3\n")},
      {"Kronecker", quiver_from("vertex 1\nvertex 2\nedge 1 2\nedge 1 2\n")},
  };
}

/// Every dimension vector with 1 <= |alpha| <= max_total.
inline std::vector<DimVector> dims_up_to(std::size_t vertices, int max_total) {
  std::vector<DimVector> out;
  std::vector<int> n(vertices, 0);
  while (true) {
    std::size_t i = 0;
    while (i < vertices) {
      if (++n[i] <= max_total) break;
      n[i++] = 0;
    }
    if (i == vertices) break;
    DimVector d{n};
    if (d.total() <= max_total) out.push_back(d);
  }
  return out;
}

/// Dense-ish random polynomial with small integer and half-integer coefficients.
inline MPoly random_poly(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree, int terms) {
  std::uniform_int_distribution<int> coeff(-5, 5), exp(0, static_cast<int>(max_degree));
  MPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Monomial m(nvars);
    for (auto& e : m) e = static_cast<Exponent>(exp(rng));
    Rational c(coeff(rng), 2);
    c.canonicalize();
    p += MPoly::monomial(m, c);
  }
  return p;
}

}  // namespace zck::suite

namespace zck {

inline void PrintTo(const MPoly& p, std::ostream* os) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p.nvars(); ++i) names.push_back("x" + std::to_string(i));
  *os << format(p, names);
}

}  // namespace zck
