#include "monodim/mesh.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "monodim/errors.hpp"

namespace monodim {

namespace {

double sq_dist(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  double s = 0;
  for (int t = 0; t < 3; ++t) s += (a[t] - b[t]) * (a[t] - b[t]);
  return s;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Mesh Mesh::from_vertices_and_faces(std::vector<std::array<double, 3>> vertices,
                                   std::vector<std::array<int, 3>> faces) {
  Mesh m;
  m.vertex_count_ = int(vertices.size());
  m.vertices_ = std::move(vertices);
  m.faces_ = std::move(faces);
  m.sq_lengths_.resize(m.faces_.size());
  for (std::size_t f = 0; f < m.faces_.size(); ++f) {
    const auto& [a, b, c] = m.faces_[f];
    if (a < 0 || b < 0 || c < 0 || a >= m.vertex_count_ || b >= m.vertex_count_ || c >= m.vertex_count_)
      throw input_error("face " + std::to_string(f) + ": vertex index out of range");
    m.sq_lengths_[f] = {sq_dist(m.vertices_[b], m.vertices_[c]), sq_dist(m.vertices_[c], m.vertices_[a]),
                        sq_dist(m.vertices_[a], m.vertices_[b])};
  }
  m.validate_and_index();
  return m;
}

Mesh Mesh::from_face_edge_lengths(int vertex_count, std::vector<std::array<int, 3>> faces,
                                  std::vector<std::array<double, 3>> sq_lengths) {
  if (faces.size() != sq_lengths.size()) throw input_error("faces and edge-length rows disagree");
  Mesh m;
  m.vertex_count_ = vertex_count;
  m.faces_ = std::move(faces);
  m.sq_lengths_ = std::move(sq_lengths);
  for (std::size_t f = 0; f < m.faces_.size(); ++f) {
    for (int v : m.faces_[f])
      if (v < 0 || v >= vertex_count) throw input_error("face " + std::to_string(f) + ": vertex index out of range");
    for (double l2 : m.sq_lengths_[f])
      if (!(l2 > 0)) throw input_error("face " + std::to_string(f) + ": nonpositive squared edge length");
  }
  m.validate_and_index();
  return m;
}

void Mesh::validate_and_index() {
  // Each directed edge must occur exactly once and its reverse exactly once:
  // closed, edge-manifold, consistently oriented.
  std::map<std::pair<int, int>, int> directed;
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const auto& fc = faces_[f];
    if (fc[0] == fc[1] || fc[1] == fc[2] || fc[0] == fc[2])
      throw input_error("face " + std::to_string(f) + ": repeated vertex");
    for (int t = 0; t < 3; ++t) {
      auto key = std::make_pair(fc[t], fc[(t + 1) % 3]);
      if (++directed[key] > 1) {
        auto rev = directed.find(std::make_pair(key.second, key.first));
        if (rev != directed.end() && rev->second >= 1)
          throw input_error("non-manifold edge (" + std::to_string(key.first) + "," +
                            std::to_string(key.second) + "): more than two incident faces");
        throw input_error("inconsistent orientation at edge (" + std::to_string(key.first) + "," +
                          std::to_string(key.second) + ")");
      }
    }
  }
  int undirected = 0;
  for (const auto& [edge, count] : directed) {
    auto rev = directed.find(std::make_pair(edge.second, edge.first));
    if (rev == directed.end())
      throw input_error("boundary edge present: (" + std::to_string(edge.first) + "," +
                        std::to_string(edge.second) + ")");
    if (edge.first < edge.second) ++undirected;
  }
  edge_count_ = undirected;

  std::vector<char> referenced(vertex_count_, 0);
  for (const auto& fc : faces_)
    for (int v : fc) referenced[v] = 1;
  for (int v = 0; v < vertex_count_; ++v)
    if (!referenced[v]) throw input_error("unreferenced vertex " + std::to_string(v));

  UnionFind uf(vertex_count_);
  for (const auto& fc : faces_) {
    uf.unite(fc[0], fc[1]);
    uf.unite(fc[1], fc[2]);
  }
  std::map<int, int> component_of_root;
  vertex_component_.assign(vertex_count_, -1);
  for (int v = 0; v < vertex_count_; ++v) {
    int r = uf.find(v);
    auto [it, inserted] = component_of_root.try_emplace(r, int(component_of_root.size()));
    vertex_component_[v] = it->second;
  }
  components_.assign(component_of_root.size(), MeshComponentInfo{});
  for (int v = 0; v < vertex_count_; ++v) components_[vertex_component_[v]].vertices++;
  for (const auto& fc : faces_) components_[vertex_component_[fc[0]]].faces++;
  for (const auto& [edge, count] : directed)
    if (edge.first < edge.second) components_[vertex_component_[edge.first]].edges++;
  for (auto& info : components_) {
    info.euler = info.vertices - info.edges + info.faces;
    if (info.euler % 2 != 0 || info.euler > 2)
      throw input_error("component Euler characteristic " + std::to_string(info.euler) +
                        " is not that of a closed oriented surface");
    info.genus = (2 - info.euler) / 2;
  }
}

int Mesh::genus() const {
  if (components_.size() != 1) throw input_error("genus of a disconnected mesh is undefined");
  return components_[0].genus;
}

// ---------------------------------------------------------------------------

namespace {

/// Reads the next content line (skipping blanks and '#' comments); returns
/// false on EOF and tracks the 1-based line number.
bool next_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
  }
  return false;
}

[[noreturn]] void parse_fail(const std::string& path, int lineno, const std::string& what) {
  throw input_error(path + ":" + std::to_string(lineno) + ": " + what);
}

}  // namespace

Mesh load_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open mesh file: " + path);
  int lineno = 0;
  std::string line;
  if (!next_line(in, line, lineno)) parse_fail(path, lineno, "empty file");
  {
    std::istringstream hs(line);
    std::string magic;
    hs >> magic;
    if (magic != "OFF") parse_fail(path, lineno, "expected OFF header, got '" + magic + "'");
  }
  if (!next_line(in, line, lineno)) parse_fail(path, lineno, "missing counts line");
  long nv = 0, nf = 0, ne = 0;
  {
    std::istringstream cs(line);
    if (!(cs >> nv >> nf >> ne)) parse_fail(path, lineno, "expected 'V F E' counts");
    if (nv <= 0 || nf <= 0) parse_fail(path, lineno, "vertex and face counts must be positive");
  }
  std::vector<std::array<double, 3>> vertices(nv);
  for (long v = 0; v < nv; ++v) {
    if (!next_line(in, line, lineno)) parse_fail(path, lineno, "unexpected end of file in vertex list");
    std::istringstream vs(line);
    if (!(vs >> vertices[v][0] >> vertices[v][1] >> vertices[v][2]))
      parse_fail(path, lineno, "expected three vertex coordinates");
  }
  std::vector<std::array<int, 3>> faces(nf);
  for (long f = 0; f < nf; ++f) {
    if (!next_line(in, line, lineno)) parse_fail(path, lineno, "unexpected end of file in face list");
    std::istringstream fs(line);
    int arity = 0;
    if (!(fs >> arity)) parse_fail(path, lineno, "expected face vertex count");
    if (arity != 3) parse_fail(path, lineno, "only triangle faces are supported");
    if (!(fs >> faces[f][0] >> faces[f][1] >> faces[f][2]))
      parse_fail(path, lineno, "expected three vertex indices");
    for (int t = 0; t < 3; ++t)
      if (faces[f][t] < 0 || faces[f][t] >= nv) parse_fail(path, lineno, "vertex index out of range");
  }
  try {
    return Mesh::from_vertices_and_faces(std::move(vertices), std::move(faces));
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

void write_off(const Mesh& mesh, const std::string& path) {
  if (mesh.vertices().empty()) throw input_error("cannot write an intrinsic mesh as OFF");
  std::ofstream out(path);
  if (!out) throw input_error("cannot open for writing: " + path);
  out << "OFF\n" << mesh.vertex_count() << " " << mesh.faces().size() << " " << mesh.edge_count() << "\n";
  out.precision(17);
  for (const auto& v : mesh.vertices()) out << v[0] << " " << v[1] << " " << v[2] << "\n";
  for (const auto& f : mesh.faces()) out << "3 " << f[0] << " " << f[1] << " " << f[2] << "\n";
}

}  // namespace monodim
