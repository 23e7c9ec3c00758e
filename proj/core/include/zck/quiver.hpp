#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zck {

/// Malformed input; `line` is 1-based, 0 when not tied to a line.
struct ParseError : std::runtime_error {
  ParseError(std::size_t line, const std::string& what);
  std::size_t line;
};

/// Symmetric matrix offered as kappa is not of quiver type.
struct NotQuiverType : std::domain_error {
  using std::domain_error::domain_error;
};

struct Edge {
  std::size_t source;
  std::size_t target;
  bool is_loop() const { return source == target; }
  bool operator==(const Edge&) const = default;
};

/// Vertices (in declaration order) and an edge multiset; loops allowed.
class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(std::vector<std::string> vertices, std::vector<Edge> edges = {});

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  /// Throws std::out_of_range for an unknown id.
  std::size_t index_of(std::string_view id) const;

  int loops_at(std::size_t v) const;
  /// Edges joining two distinct vertices, both directions counted.
  int edges_between(std::size_t u, std::size_t v) const;

  /// Same vertices, the listed subset of edges.
  Quiver with_edges(std::vector<Edge> edges) const;

  bool operator==(const Quiver&) const = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

/// Per-vertex dimensions n_i, indexed like Quiver::vertices().
struct DimVector {
  std::vector<int> n;

  int total() const;
  bool operator==(const DimVector&) const = default;
  /// Componentwise <=.
  bool fits_in(const DimVector& alpha) const;
};

/// Integer matrix with kappa(i, j) == kappa(j, i).
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t n = 0) : n_(n), data_(n * n, 0) {}
  /// Throws std::invalid_argument for ragged or asymmetric rows.
  static SymMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t size() const { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  /// Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, int value);
  bool is_quiver_type() const;

  bool operator==(const SymMatrix&) const = default;

 private:
  std::size_t n_;
  std::vector<int> data_;
};

/// Signed pair of coordinate indices standing for a_plus - a_minus.
struct LinearForm {
  std::size_t plus;
  std::size_t minus;
  bool operator==(const LinearForm&) const = default;
};

/// Orientation of the T-weights of Hom(V_i, V_j) and of the arrow factors in l_Q.
enum class WeightSign { SourceMinusTarget, TargetMinusSource };

/// Quiver file: one directive per line, `vertex <id>`, `edge <src> <dst>`, `#` comments.
Quiver parse_quiver(std::string_view text);
std::string format_quiver(const Quiver& q);

/// `id=n,id=n`; vertices not mentioned get 0.
DimVector parse_dim_vector(std::string_view text, const Quiver& q);
std::string format_dim_vector(const DimVector& alpha, const Quiver& q);

/// kappa_ii = 1 - #loops at i, kappa_ij = -#edges between i and j.
SymMatrix kappa_of(const Quiver& q);
/// Loops 1 - kappa_ii at i, -kappa_ij edges i -> j for i < j. Throws NotQuiverType.
Quiver quiver_of_kappa(const SymMatrix& kappa, std::vector<std::string> vertex_names = {});

/// Flat coordinate index of slot (1-based) of vertex `color` under alpha.
std::size_t coordinate_index(const DimVector& alpha, std::size_t color, int slot);

/// Characters of T on N = sum over edges i -> i' of Hom(V_i, V_i'): one form
/// a^i_l - a^i'_j per edge and slot pair (sign per `sign`), zero forms omitted.
std::vector<LinearForm> weights_of_N(const Quiver& q, const DimVector& alpha,
                                     WeightSign sign = WeightSign::SourceMinusTarget);

}  // namespace zck
