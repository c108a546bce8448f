#include "mckay/graphs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace mckay {

namespace {

Character orbit_sum(const CharacterTable& t, const std::vector<std::size_t>& orbit) {
  Character sum(t.classes.size(), CyclotomicNumber(0));
  for (std::size_t r : orbit) sum = sum + t.chars.at(r);
  return sum;
}

std::string join_labels(const CharacterTable& t, const std::vector<std::size_t>& orbit) {
  std::string out;
  for (std::size_t i = 0; i < orbit.size(); ++i) out += (i ? "+" : "") + t.row_labels[orbit[i]];
  return out;
}

McKayGraph drop_trivial(const McKayGraph& g) {
  McKayGraph out;
  out.extended = false;
  out.label = g.label;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!g.vertices[i].trivial) keep.push_back(i);
  for (auto i : keep) out.vertices.push_back(g.vertices[i]);
  out.adjacency.assign(keep.size(), std::vector<int>(keep.size(), 0));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) out.adjacency[a][b] = g.adjacency[keep[a]][keep[b]];
  return out;
}

McKayGraph graph_on_orbits(const CharacterTable& t, const OrbitPartition& part, bool extended) {
  const Character v = natural_character(t);
  const std::size_t k = t.size();
  IntMatrix split(k, std::vector<int>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) split[i][j] = hom_dimension(t.chars[i], t.chars[j], v, t);

  McKayGraph g;
  const std::size_t m = part.orbits.size();
  std::vector<Character> sums;
  for (const auto& o : part.orbits) {
    Vertex vert;
    vert.label = join_labels(t, o);
    vert.mult = static_cast<int>(o.size());
    vert.degree = 0;
    for (auto r : o) vert.degree += t.degree(r);
    vert.trivial = std::find(o.begin(), o.end(), t.trivial_index) != o.end();
    g.vertices.push_back(vert);
    sums.push_back(orbit_sum(t, o));
  }
  g.adjacency.assign(m, std::vector<int>(m, 0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) {
        int h = hom_dimension(sums[a], sums[a], v, t);
        if (h % 2 != 0)
          throw std::logic_error("vertex " + g.vertices[a].label + " has a half-integral loop count");
        g.adjacency[a][a] = h / 2;
      } else {
        int e = 0;
        for (auto i : part.orbits[a])
          for (auto j : part.orbits[b]) e += split[i][j];
        g.adjacency[a][b] = e;
      }
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (g.adjacency[a][b] != g.adjacency[b][a]) throw std::logic_error("representation graph is not symmetric");
  g.extended = true;
  return extended ? g : drop_trivial(g);
}

}  // namespace

int hom_dimension(const Character& i, const Character& j, const Character& v, const CharacterTable& t) {
  if (!(v == natural_character(t)))
    throw std::invalid_argument("hom_dimension requires the natural two-dimensional character");
  CyclotomicNumber ip = inner_product(i, v * j, t);
  if (!ip.is_rational()) throw std::domain_error("hom dimension is not rational; the table is corrupted");
  Rational q = ip.to_rational();
  if (q.get_den() != 1 || q < 0 || !q.get_num().fits_sint_p())
    throw std::domain_error("hom dimension " + q.get_str() + " is not a non-negative integer");
  return static_cast<int>(q.get_num().get_si());
}

OrbitPartition split_partition(const CharacterTable& t) {
  OrbitPartition p;
  for (std::size_t r = 0; r < t.size(); ++r) p.orbits.push_back({r});
  p.multiplicity_free = true;
  return p;
}

McKayGraph build_graph(const CharacterTable& t, bool extended) {
  return graph_on_orbits(t, split_partition(t), extended);
}

McKayGraph build_graph(const CharacterTable& t, const CharacterAction& action, bool extended) {
  return graph_on_orbits(t, orbits(action, t), extended);
}

McKayGraph build_graph(const GaloisForm& form, bool extended) {
  auto t = character_table(form.group());
  return build_graph(t, character_action(form, t), extended);
}

Report check_fold_consistency(const CharacterTable& t, const OrbitPartition& part) {
  const Character v = natural_character(t);
  Report rep;
  bool ok = true;
  std::string detail;
  for (std::size_t a = 0; a < part.orbits.size(); ++a)
    for (std::size_t b = 0; b < part.orbits.size(); ++b) {
      int summed = 0;
      for (auto i : part.orbits[a])
        for (auto j : part.orbits[b]) summed += hom_dimension(t.chars[i], t.chars[j], v, t);
      int direct = hom_dimension(orbit_sum(t, part.orbits[a]), orbit_sum(t, part.orbits[b]), v, t);
      if (summed != direct) {
        ok = false;
        detail += "(" + join_labels(t, part.orbits[a]) + "," + join_labels(t, part.orbits[b]) +
                  "): " + std::to_string(summed) + " vs " + std::to_string(direct) + " ";
      }
    }
  rep.add("fold consistency", ok, ok ? std::to_string(part.orbits.size()) + " orbits" : detail);
  return rep;
}

McKayGraph permute(const McKayGraph& g, const std::vector<std::size_t>& perm) {
  McKayGraph out = g;
  for (std::size_t i = 0; i < g.size(); ++i) out.vertices[perm[i]] = g.vertices[i];
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out.adjacency[perm[i]][perm[j]] = g.adjacency[i][j];
  return out;
}

std::vector<int> null_vector_defect(const McKayGraph& g) {
  std::vector<int> out(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    int s = 2 * g.vertices[i].degree;
    for (std::size_t j = 0; j < g.size(); ++j)
      s -= (i == j ? 2 * g.adjacency[i][i] : g.adjacency[i][j]) * g.vertices[j].degree;
    out[i] = s;
  }
  return out;
}

IntMatrix multiplicity_matrix(const CharacterTable& t, const OrbitPartition& part) {
  const Character v = natural_character(t);
  const std::size_t m = part.orbits.size();
  IntMatrix a(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto& oi = part.orbits[i];
      int h = hom_dimension(orbit_sum(t, oi), orbit_sum(t, part.orbits[j]), v, t);
      int self = static_cast<int>(oi.size());
      if (h % self != 0) throw std::logic_error("decomposition multiplicity is not integral");
      a[i][j] = h / self;
    }
  return a;
}

BilinearForm bilinear_form(const CharacterTable& t, const OrbitPartition& part) {
  const Character v = natural_character(t);
  const std::size_t m = part.orbits.size();
  std::vector<Character> sums;
  for (const auto& o : part.orbits) sums.push_back(orbit_sum(t, o));
  BilinearForm f;
  f.matrix.assign(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      CyclotomicNumber plain = inner_product(sums[i], sums[j], t);
      f.matrix[i][j] = hom_dimension(sums[i], sums[j], v, t) - 2 * static_cast<int>(plain.to_rational().get_num().get_si());
    }
  return f;
}

Report check_form_identities(const BilinearForm& form, const McKayGraph& g) {
  Report rep;
  const std::size_t m = g.size();
  bool shape = g.extended && form.matrix.size() == m;
  rep.add("form indexed by the extended graph", shape);
  if (!shape) return rep;
  bool sym = true, off = true, diag = true;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      sym = sym && form.matrix[i][j] == form.matrix[j][i];
      if (i != j) off = off && form.matrix[i][j] == g.adjacency[i][j];
    }
  for (std::size_t i = 0; i < m; ++i)
    diag = diag && form.matrix[i][i] % 2 == 0 && form.matrix[i][i] / 2 == g.loops(i) - g.vertices[i].mult;
  rep.add("form symmetric", sym);
  rep.add("off-diagonal entries are edge counts", off);
  rep.add("half diagonal is loops minus multiplicity", diag);
  return rep;
}

bool is_finite_type(const BilinearForm& form, std::size_t trivial_index) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < form.matrix.size(); ++i)
    if (i != trivial_index) idx.push_back(i);
  const std::size_t n = idx.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = -form.matrix[idx[i]][idx[j]];
  // Without row swaps the k-th pivot is the ratio of consecutive leading minors.
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

// ---------------------------------------------------------------- catalog

namespace {

struct Builder {
  McKayGraph g;

  std::size_t add(bool trivial, int mult = 1, int loops = 0) {
    Vertex v;
    v.label = trivial ? "o" : "v" + std::to_string(g.size());
    v.mult = mult;
    v.degree = 0;
    v.trivial = trivial;
    g.vertices.push_back(v);
    for (auto& row : g.adjacency) row.push_back(0);
    g.adjacency.emplace_back(g.size(), 0);
    g.adjacency.back().back() = loops;
    return g.size() - 1;
  }
  void edge(std::size_t a, std::size_t b, int count = 1) {
    g.adjacency[a][b] += count;
    g.adjacency[b][a] += count;
  }
  std::size_t chain(std::size_t from, int length) {
    for (int i = 0; i < length; ++i) {
      auto v = add(false);
      edge(from, v);
      from = v;
    }
    return from;
  }
};

std::string shape_name(Shape s, int n) {
  auto sub = [&](std::string base) { return "(" + base + "_" + std::to_string(n) + ")"; };
  switch (s) {
    case Shape::A: return sub("A");
    case Shape::APrime: return sub("A") + "'";
    case Shape::D: return sub("D");
    case Shape::DPrime: return sub("D") + "'";
    case Shape::DDoublePrime: return sub("D") + "''";
    case Shape::E6:
    case Shape::E7:
    case Shape::E8: return sub("E");
    case Shape::E6Prime: return sub("E") + "'";
  }
  return {};
}

}  // namespace

McKayGraph catalog_graph(Shape shape, int n, bool extended) {
  Builder b;
  auto bad = [&] { return std::invalid_argument("no catalog graph " + shape_name(shape, n)); };
  switch (shape) {
    case Shape::A: {
      if (n < 0) throw bad();
      if (n == 0) {
        b.add(true, 1, 1);
      } else if (n == 1) {
        auto o = b.add(true);
        b.edge(o, b.add(false), 2);
      } else {
        auto o = b.add(true);
        b.edge(b.chain(o, n), o);
      }
      break;
    }
    case Shape::APrime: {
      if (n < 2) throw bad();
      auto last = b.add(true);
      const int k = n / 2;
      for (int i = 0; i < k; ++i) {
        auto v = b.add(false, 2, (n % 2 == 0 && i == k - 1) ? 1 : 0);
        b.edge(last, v, 2);
        last = v;
      }
      if (n % 2 == 1) b.edge(last, b.add(false), 2);
      break;
    }
    case Shape::D:
    case Shape::DPrime: {
      if (n < 4) throw bad();
      auto o = b.add(true);
      auto leaf = b.add(false);
      auto first = b.chain(o, 1);
      b.edge(leaf, first);
      auto end = b.chain(first, n - 4);
      if (shape == Shape::D) {
        b.edge(end, b.add(false));
        b.edge(end, b.add(false));
      } else {
        b.edge(end, b.add(false, 2), 2);
      }
      break;
    }
    case Shape::DDoublePrime: {
      if (n != 4) throw bad();
      auto c = b.chain(b.add(true), 1);
      b.edge(c, b.add(false, 3), 3);
      break;
    }
    case Shape::E6: {
      if (n != 6) throw bad();
      auto c = b.chain(b.add(true), 2);
      b.chain(c, 2);
      b.chain(c, 2);
      break;
    }
    case Shape::E6Prime: {
      if (n != 6) throw bad();
      auto c = b.chain(b.add(true), 2);
      auto d = b.add(false, 2);
      b.edge(c, d, 2);
      b.edge(d, b.add(false, 2), 2);
      break;
    }
    case Shape::E7: {
      if (n != 7) throw bad();
      auto c = b.chain(b.add(true), 3);
      b.chain(c, 3);
      b.chain(c, 1);
      break;
    }
    case Shape::E8: {
      if (n != 8) throw bad();
      auto c = b.chain(b.add(true), 5);
      b.chain(c, 2);
      b.chain(c, 1);
      break;
    }
  }
  b.g.extended = true;
  b.g.label = shape_name(shape, n);
  return extended ? b.g : drop_trivial(b.g);
}

DiagramLabel make_label(Shape shape, int n) {
  DiagramLabel l;
  l.shape = shape;
  l.n = n;
  l.name = shape_name(shape, n);
  switch (shape) {
    case Shape::A: l.dynkin = "A", l.rank = n; break;
    case Shape::APrime: l.dynkin = "C", l.rank = (n + 1) / 2; break;
    case Shape::D: l.dynkin = "D", l.rank = n; break;
    case Shape::DPrime: l.dynkin = "B", l.rank = n - 1; break;
    case Shape::DDoublePrime: l.dynkin = "G", l.rank = 2; break;
    case Shape::E6: l.dynkin = "E", l.rank = 6; break;
    case Shape::E6Prime: l.dynkin = "F", l.rank = 4; break;
    case Shape::E7: l.dynkin = "E", l.rank = 7; break;
    case Shape::E8: l.dynkin = "E", l.rank = 8; break;
  }
  return l;
}

std::string DiagramLabel::dynkin_name() const { return dynkin + std::to_string(rank); }

std::string DiagramLabel::to_string() const { return name + " ~ " + dynkin_name(); }

bool isomorphic(const McKayGraph& a, const McKayGraph& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.extended != b.extended) return false;
  auto signature = [](const McKayGraph& g, std::size_t v) {
    std::vector<int> row = g.adjacency[v];
    int loops = row[v];
    row.erase(row.begin() + static_cast<std::ptrdiff_t>(v));
    std::sort(row.begin(), row.end());
    row.push_back(loops);
    row.push_back(g.vertices[v].mult);
    row.push_back(g.vertices[v].trivial ? 1 : 0);
    return row;
  };
  std::vector<std::vector<int>> sa, sb;
  for (std::size_t v = 0; v < n; ++v) sa.push_back(signature(a, v)), sb.push_back(signature(b, v));
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  std::vector<std::size_t> map(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t v) {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || sa[v] != sb[w]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = a.adjacency[v][u] == b.adjacency[w][map[u]];
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return extend(0);
}

DiagramLabel classify(const McKayGraph& g) {
  const int ve = static_cast<int>(g.size()) + (g.extended ? 0 : 1);
  std::vector<std::pair<Shape, int>> candidates;
  candidates.emplace_back(Shape::A, ve - 1);
  if (ve >= 2) candidates.emplace_back(Shape::APrime, 2 * (ve - 1));
  if (ve >= 3) candidates.emplace_back(Shape::APrime, 2 * (ve - 2) + 1);
  if (ve - 1 >= 4) candidates.emplace_back(Shape::D, ve - 1);
  if (ve >= 4) candidates.emplace_back(Shape::DPrime, ve);
  if (ve == 3) candidates.emplace_back(Shape::DDoublePrime, 4);
  if (ve == 5) candidates.emplace_back(Shape::E6Prime, 6);
  if (ve == 7) candidates.emplace_back(Shape::E6, 6);
  if (ve == 8) candidates.emplace_back(Shape::E7, 7);
  if (ve == 9) candidates.emplace_back(Shape::E8, 8);
  for (auto [shape, n] : candidates) {
    if (ve < 1) break;
    auto ref = catalog_graph(shape, n, g.extended);
    if (isomorphic(g, ref)) return make_label(shape, n);
  }
  std::ostringstream msg;
  msg << "graph matches no catalog entry: " << g.size() << " vertices, multiplicities";
  for (const auto& v : g.vertices) msg << ' ' << v.mult;
  msg << ", loops";
  for (std::size_t i = 0; i < g.size(); ++i) msg << ' ' << g.loops(i);
  int edges = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) edges += g.adjacency[i][j];
  msg << ", " << edges << " edges" << (g.extended ? ", extended" : ", non-extended");
  throw UnrecognizedGraph(msg.str());
}

// ---------------------------------------------------------------- emission

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const McKayGraph& g) {
  std::ostringstream out;
  out << "graph mckay {\n";
  if (g.label) out << "  label=" << dot_quote(*g.label) << ";\n";
  out << "  extended=" << (g.extended ? "true" : "false") << ";\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& v = g.vertices[i];
    out << "  v" << i << " [label=" << dot_quote(v.label) << ", multiplicity=" << v.mult << ", degree=" << v.degree
        << ", trivial=" << (v.trivial ? "true" : "false") << ", loops=" << g.loops(i)
        << (v.trivial ? ", shape=circle" : v.mult > 1 ? ", shape=doublecircle" : "") << "];\n";
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g.adjacency[i][j] > 0) out << "  v" << i << " -- v" << j << " [count=" << g.adjacency[i][j] << "];\n";
  out << "}\n";
  return out.str();
}

std::string to_json(const McKayGraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : g.vertices)
    j["vertices"].push_back({{"label", v.label}, {"mult", v.mult}, {"degree", v.degree}, {"trivial", v.trivial}});
  j["adjacency"] = g.adjacency;
  j["extended"] = g.extended;
  if (g.label) j["label"] = *g.label;
  return j.dump(2) + "\n";
}

std::string to_text(const McKayGraph& g) {
  std::ostringstream out;
  if (g.label) out << "graph " << *g.label << "\n";
  out << (g.extended ? "extended" : "non-extended") << ", " << g.size() << " vertices\n";
  std::size_t width = 0;
  for (const auto& v : g.vertices) width = std::max(width, v.label.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& v = g.vertices[i];
    out << "  " << i << ' ' << v.label << std::string(width - v.label.size(), ' ') << "  mult=" << v.mult
        << " degree=" << v.degree << " loops=" << g.loops(i) << (v.trivial ? " trivial" : "") << "\n";
  }
  out << "adjacency\n";
  for (const auto& row : g.adjacency) {
    out << " ";
    for (int x : row) out << ' ' << x;
    out << "\n";
  }
  return out.str();
}

McKayGraph graph_from_json(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    McKayGraph g;
    for (const auto& v : j.at("vertices"))
      g.vertices.push_back({v.at("label").get<std::string>(), v.at("mult").get<int>(), v.at("degree").get<int>(),
                            v.at("trivial").get<bool>()});
    g.adjacency = j.at("adjacency").get<IntMatrix>();
    g.extended = j.at("extended").get<bool>();
    if (j.contains("label")) g.label = j.at("label").get<std::string>();
    if (g.adjacency.size() != g.size()) throw std::invalid_argument("adjacency size does not match vertex count");
    for (const auto& row : g.adjacency)
      if (row.size() != g.size()) throw std::invalid_argument("adjacency is not square");
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
  }
}

}  // namespace mckay
