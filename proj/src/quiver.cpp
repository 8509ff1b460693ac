#include "quiver.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace klr {

using ordered_json = nlohmann::ordered_json;

Quiver::Quiver(std::vector<std::string> names, std::vector<int> loops,
               std::vector<std::vector<int>> arrows)
    : names_(std::move(names)), loops_(std::move(loops)), arrows_(std::move(arrows)) {
  const size_t n = names_.size();
  if (loops_.size() != n || arrows_.size() != n)
    throw std::invalid_argument("Quiver: inconsistent field sizes");
  for (const auto& row : arrows_)
    if (row.size() != n) throw std::invalid_argument("Quiver: arrows shape mismatch");
  for (int l : loops_)
    if (l < 0) throw std::invalid_argument("Quiver: loops must be >= 0");
  for (size_t i = 0; i < n; ++i) {
    if (arrows_[i][i] != 0)
      throw std::invalid_argument("Quiver: same-vertex arrows belong in loops");
    for (size_t j = 0; j < n; ++j)
      if (arrows_[i][j] < 0) throw std::invalid_argument("Quiver: arrow counts must be >= 0");
  }
}

int Quiver::vertex_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    throw std::invalid_argument("quiver: unknown vertex '" + name + "'");
  return static_cast<int>(it - names_.begin());
}

bool Quiver::operator==(const Quiver& o) const {
  return names_ == o.names_ && loops_ == o.loops_ && arrows_ == o.arrows_;
}

Quiver Quiver::parse(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("quiver: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("quiver: document must be an object");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw std::invalid_argument("quiver: field 'vertices' missing or not a list");

  std::vector<std::string> names;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string())
      throw std::invalid_argument("quiver: field 'vertices' must hold strings");
    names.push_back(v.get<std::string>());
  }
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t k = i + 1; k < names.size(); ++k)
      if (names[i] == names[k])
        throw std::invalid_argument("quiver: field 'vertices' has duplicate '" + names[i] + "'");

  const size_t n = names.size();
  std::vector<int> loops(n, 0);
  if (j.contains("loops")) {
    if (!j["loops"].is_object())
      throw std::invalid_argument("quiver: field 'loops' must be a map");
    for (const auto& [key, val] : j["loops"].items()) {
      auto it = std::find(names.begin(), names.end(), key);
      if (it == names.end())
        throw std::invalid_argument("quiver: field 'loops' names unknown vertex '" + key + "'");
      if (!val.is_number_integer() || val.get<int>() < 0)
        throw std::invalid_argument("quiver: field 'loops' values must be integers >= 0");
      loops[static_cast<size_t>(it - names.begin())] = val.get<int>();
    }
  }

  std::vector<std::vector<int>> arrows(n, std::vector<int>(n, 0));
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array())
      throw std::invalid_argument("quiver: field 'arrows' must be a list of pairs");
    for (const auto& a : j["arrows"]) {
      if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string())
        throw std::invalid_argument("quiver: field 'arrows' entries must be [source, target]");
      std::string s = a[0].get<std::string>(), t = a[1].get<std::string>();
      auto si = std::find(names.begin(), names.end(), s);
      auto ti = std::find(names.begin(), names.end(), t);
      if (si == names.end())
        throw std::invalid_argument("quiver: field 'arrows' names unknown vertex '" + s + "'");
      if (ti == names.end())
        throw std::invalid_argument("quiver: field 'arrows' names unknown vertex '" + t + "'");
      if (s == t)
        ++loops[static_cast<size_t>(si - names.begin())];
      else
        ++arrows[static_cast<size_t>(si - names.begin())][static_cast<size_t>(ti - names.begin())];
    }
  }
  return Quiver(std::move(names), std::move(loops), std::move(arrows));
}

Quiver Quiver::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("quiver: cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string Quiver::dump() const {
  ordered_json j;
  j["vertices"] = names_;
  ordered_json loops = ordered_json::object();
  for (size_t i = 0; i < names_.size(); ++i)
    if (loops_[i] > 0) loops[names_[i]] = loops_[i];
  j["loops"] = loops;
  ordered_json arrows = ordered_json::array();
  for (size_t i = 0; i < names_.size(); ++i)
    for (size_t k = 0; k < names_.size(); ++k)
      for (int m = 0; m < arrows_[i][k]; ++m)
        arrows.push_back(ordered_json::array({names_[i], names_[k]}));
  j["arrows"] = arrows;
  return j.dump(2) + "\n";
}

Cartan::Cartan(const Quiver& q) {
  const int n = q.vertex_count();
  a_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    a_[i][i] = 2 - 2 * q.loops(i);
    for (int j = 0; j < n; ++j)
      if (i != j) a_[i][j] = -q.arrows(i, j) - q.arrows(j, i);
  }
}

VertexClass Cartan::klass(int i) const {
  int d = a(i, i);
  if (d == 2) return VertexClass::Positive;
  if (d == 0) return VertexClass::Zero;
  return VertexClass::Negative;
}

Weight weight_of_seq(const Seq& s) {
  Weight w;
  for (int v : s) ++w[v];
  return w;
}

int height(const Weight& w) {
  int n = 0;
  for (const auto& [v, m] : w) {
    (void)v;
    n += m;
  }
  return n;
}

std::vector<Seq> sequences_of(const Weight& w) {
  Seq letters;
  for (const auto& [v, m] : w) {
    if (m < 0) throw std::invalid_argument("weight multiplicities must be >= 0");
    letters.insert(letters.end(), static_cast<size_t>(m), v);
  }
  std::vector<Seq> out;
  std::sort(letters.begin(), letters.end());
  do {
    out.push_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

std::string seq_str(const Quiver& q, const Seq& s) {
  std::string out;
  for (size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += q.name(s[k]);
  }
  return out;
}

}  // namespace klr
