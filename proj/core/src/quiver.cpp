#include "zck/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace zck {

ParseError::ParseError(std::size_t line_no, const std::string& what)
    : std::runtime_error(line_no ? "line " + std::to_string(line_no) + ": " + what : what), line(line_no) {}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = i + 1; j < vertices_.size(); ++j)
      if (vertices_[i] == vertices_[j]) throw std::invalid_argument("Quiver: duplicate vertex " + vertices_[i]);
  for (const auto& e : edges_)
    if (e.source >= vertices_.size() || e.target >= vertices_.size())
      throw std::invalid_argument("Quiver: edge endpoint out of range");
}

std::size_t Quiver::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == id) return i;
  throw std::out_of_range("unknown vertex '" + std::string(id) + "'");
}

int Quiver::loops_at(std::size_t v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [v](const Edge& e) { return e.source == v && e.target == v; }));
}

int Quiver::edges_between(std::size_t u, std::size_t v) const {
  if (u == v) return 0;
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [u, v](const Edge& e) {
    return (e.source == u && e.target == v) || (e.source == v && e.target == u);
  }));
}

Quiver Quiver::with_edges(std::vector<Edge> edges) const { return Quiver(vertices_, std::move(edges)); }

int DimVector::total() const {
  int t = 0;
  for (int x : n) t += x;
  return t;
}

bool DimVector::fits_in(const DimVector& alpha) const {
  if (n.size() != alpha.n.size()) return false;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] < 0 || n[i] > alpha.n[i]) return false;
  return true;
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  SymMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("SymMatrix: matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[i][j] != rows[j][i]) throw std::invalid_argument("SymMatrix: matrix is not symmetric");
      m.data_[i * m.n_ + j] = rows[i][j];
    }
  }
  return m;
}

void SymMatrix::set(std::size_t i, std::size_t j, int value) {
  data_[i * n_ + j] = value;
  data_[j * n_ + i] = value;
}

bool SymMatrix::is_quiver_type() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j && (*this)(i, i) > 1) return false;
      if (i != j && (*this)(i, j) > 0) return false;
    }
  return true;
}

namespace {

bool valid_id(const std::string& id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Quiver parse_quiver(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::pair<std::string, std::string>>> pending;  // (line, (src, dst))
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    if (tok[0] == "vertex") {
      if (tok.size() != 2) throw ParseError(line_no, "expected 'vertex <id>'");
      if (!valid_id(tok[1])) throw ParseError(line_no, "invalid vertex id '" + tok[1] + "'");
      if (std::find(vertices.begin(), vertices.end(), tok[1]) != vertices.end())
        throw ParseError(line_no, "duplicate vertex '" + tok[1] + "'");
      vertices.push_back(tok[1]);
    } else if (tok[0] == "edge") {
      if (tok.size() != 3) throw ParseError(line_no, "expected 'edge <src> <dst>'");
      pending.push_back({line_no, {tok[1], tok[2]}});
    } else {
      throw ParseError(line_no, "unknown directive '" + tok[0] + "'");
    }
  }
  if (vertices.empty()) throw ParseError(0, "quiver declares no vertices");
  std::vector<Edge> edges;
  auto lookup = [&](std::size_t ln, const std::string& id) {
    auto it = std::find(vertices.begin(), vertices.end(), id);
    if (it == vertices.end()) throw ParseError(ln, "unknown vertex '" + id + "' in edge");
    return static_cast<std::size_t>(it - vertices.begin());
  };
  for (const auto& [ln, ends] : pending) edges.push_back({lookup(ln, ends.first), lookup(ln, ends.second)});
  return Quiver(std::move(vertices), std::move(edges));
}

std::string format_quiver(const Quiver& q) {
  std::string out;
  for (const auto& v : q.vertices()) out += "vertex " + v + "\n";
  for (const auto& e : q.edges()) out += "edge " + q.vertices()[e.source] + " " + q.vertices()[e.target] + "\n";
  return out;
}

DimVector parse_dim_vector(std::string_view text, const Quiver& q) {
  DimVector alpha{std::vector<int>(q.vertex_count(), 0)};
  std::vector<bool> seen(q.vertex_count(), false);
  std::string s(text);
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError(0, "dimension entry '" + item + "' is not id=n");
    std::string id = item.substr(0, eq), val = item.substr(eq + 1);
    std::size_t v;
    try {
      v = q.index_of(id);
    } catch (const std::out_of_range&) {
      throw ParseError(0, "dimension vector names unknown vertex '" + id + "'");
    }
    if (seen[v]) throw ParseError(0, "vertex '" + id + "' given twice in dimension vector");
    seen[v] = true;
    if (val.empty() || !std::all_of(val.begin(), val.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError(0, "dimension for '" + id + "' is not a nonnegative integer");
    alpha.n[v] = std::stoi(val);
  }
  return alpha;
}

std::string format_dim_vector(const DimVector& alpha, const Quiver& q) {
  std::string out;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    if (i) out += ",";
    out += q.vertices()[i] + "=" + std::to_string(alpha.n.at(i));
  }
  return out;
}

SymMatrix kappa_of(const Quiver& q) {
  SymMatrix k(q.vertex_count());
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    k.set(i, i, 1 - q.loops_at(i));
    for (std::size_t j = i + 1; j < q.vertex_count(); ++j) k.set(i, j, -q.edges_between(i, j));
  }
  return k;
}

Quiver quiver_of_kappa(const SymMatrix& kappa, std::vector<std::string> vertex_names) {
  const std::size_t n = kappa.size();
  if (vertex_names.empty())
    for (std::size_t i = 0; i < n; ++i) vertex_names.push_back(std::to_string(i + 1));
  if (vertex_names.size() != n) throw std::invalid_argument("quiver_of_kappa: vertex name count mismatch");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    if (kappa(i, i) > 1)
      throw NotQuiverType("kappa(" + vertex_names[i] + "," + vertex_names[i] + ") = " +
                          std::to_string(kappa(i, i)) + " exceeds 1");
    for (int l = 0; l < 1 - kappa(i, i); ++l) edges.push_back({i, i});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (kappa(i, j) > 0)
        throw NotQuiverType("kappa(" + vertex_names[i] + "," + vertex_names[j] + ") = " +
                            std::to_string(kappa(i, j)) + " is positive");
      for (int l = 0; l < -kappa(i, j); ++l) edges.push_back({i, j});
    }
  return Quiver(std::move(vertex_names), std::move(edges));
}

std::size_t coordinate_index(const DimVector& alpha, std::size_t color, int slot) {
  if (color >= alpha.n.size() || slot < 1 || slot > alpha.n[color])
    throw std::out_of_range("coordinate_index: no such slot");
  std::size_t offset = 0;
  for (std::size_t c = 0; c < color; ++c) offset += static_cast<std::size_t>(alpha.n[c]);
  return offset + static_cast<std::size_t>(slot - 1);
}

std::vector<LinearForm> weights_of_N(const Quiver& q, const DimVector& alpha, WeightSign sign) {
  if (alpha.n.size() != q.vertex_count()) throw std::invalid_argument("weights_of_N: dimension vector size mismatch");
  std::vector<LinearForm> out;
  for (const auto& e : q.edges()) {
    for (int l = 1; l <= alpha.n[e.source]; ++l)
      for (int j = 1; j <= alpha.n[e.target]; ++j) {
        std::size_t src = coordinate_index(alpha, e.source, l);
        std::size_t dst = coordinate_index(alpha, e.target, j);
        if (src == dst) continue;
        out.push_back(sign == WeightSign::SourceMinusTarget ? LinearForm{src, dst} : LinearForm{dst, src});
      }
  }
  return out;
}

}  // namespace zck
