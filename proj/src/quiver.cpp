#include "quivexp/quiver.hpp"

#include "quivexp/errors.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace quivexp {

namespace {

// Kahn's algorithm; returns fewer than vertex_count vertices on a cycle.
std::vector<int> topological_sort(int vertex_count, const std::vector<Arrow>& arrows) {
  std::vector<int> indegree(vertex_count, 0);
  std::vector<std::vector<int>> out(vertex_count);
  for (const Arrow& a : arrows) {
    ++indegree[a.target];
    out[a.source].push_back(a.target);
  }
  std::vector<int> order;
  std::vector<int> ready;
  for (int v = vertex_count - 1; v >= 0; --v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int w : out[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return order;
}

std::int64_t checked(__int128 value) {
  if (value > INT64_MAX || value < INT64_MIN) {
    throw std::overflow_error("Euler form value overflows 64 bits");
  }
  return static_cast<std::int64_t>(value);
}

void check_length(const Quiver& quiver, const DimVector& v) {
  if (static_cast<int>(v.size()) != quiver.vertex_count()) {
    throw InputError("dimension vector " + v.to_string() + " has length " +
                     std::to_string(v.size()) + ", quiver has " +
                     std::to_string(quiver.vertex_count()) + " vertices");
  }
}

}  // namespace

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  if (vertex_count_ < 1) {
    throw InputError("a quiver needs at least one vertex");
  }
  for (const Arrow& a : arrows_) {
    if (a.source < 0 || a.source >= vertex_count_ || a.target < 0 ||
        a.target >= vertex_count_) {
      throw InputError("arrow " + std::to_string(a.source + 1) + " -> " +
                       std::to_string(a.target + 1) + " has an endpoint out of range");
    }
  }
  topo_order_ = topological_sort(vertex_count_, arrows_);
  if (static_cast<int>(topo_order_.size()) != vertex_count_) {
    throw InputError("quiver has a directed cycle");
  }
}

int Quiver::arrow_count(int source, int target) const {
  return static_cast<int>(std::count(arrows_.begin(), arrows_.end(), Arrow{source, target}));
}

bool Quiver::is_kronecker() const {
  return vertex_count_ == 2 && !arrows_.empty() &&
         std::all_of(arrows_.begin(), arrows_.end(),
                     [](const Arrow& a) { return a.source == 0 && a.target == 1; });
}

DimVector::DimVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  for (std::int64_t x : entries_) {
    if (x < 0) {
      throw InputError("dimension vector entries must be non-negative");
    }
    if (x > kMaxDimEntry) {
      throw InputError("dimension vector entry " + std::to_string(x) +
                       " exceeds the configured maximum " + std::to_string(kMaxDimEntry));
    }
  }
}

DimVector::DimVector(std::initializer_list<std::int64_t> entries)
    : DimVector(std::vector<std::int64_t>(entries)) {}

DimVector DimVector::zero(std::size_t size) {
  return DimVector(std::vector<std::int64_t>(size, 0));
}

DimVector DimVector::unit(std::size_t size, std::size_t index) {
  std::vector<std::int64_t> entries(size, 0);
  entries.at(index) = 1;
  return DimVector(std::move(entries));
}

std::int64_t DimVector::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

bool DimVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t x) { return x == 0; });
}

bool DimVector::fits_in(const DimVector& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (entries_[i] > other.entries_[i]) return false;
  }
  return true;
}

DimVector operator+(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw InputError("dimension vector length mismatch");
  std::vector<std::int64_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return DimVector(std::move(out));
}

DimVector operator-(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw InputError("dimension vector length mismatch");
  std::vector<std::int64_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return DimVector(std::move(out));
}

std::string DimVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

DimVector parse_dim_vector(std::string_view csv) {
  std::vector<std::int64_t> entries;
  std::string item;
  std::istringstream in{std::string(csv)};
  static const std::regex digits(R"(\s*[0-9]+\s*)");
  while (std::getline(in, item, ',')) {
    if (!std::regex_match(item, digits)) {
      throw InputError("malformed dimension vector '" + std::string(csv) + "'");
    }
    try {
      entries.push_back(std::stoll(item));
    } catch (const std::out_of_range&) {
      throw InputError("dimension vector entry '" + item + "' is too large");
    }
  }
  if (entries.empty() || csv.back() == ',') {
    throw InputError("malformed dimension vector '" + std::string(csv) + "'");
  }
  return DimVector(std::move(entries));
}

Quiver make_kronecker(int m) {
  if (m < 1) {
    throw InputError("Kronecker quiver needs m >= 1 arrows");
  }
  return Quiver(2, std::vector<Arrow>(m, Arrow{0, 1}));
}

std::int64_t euler_form(const Quiver& quiver, const DimVector& d, const DimVector& e) {
  check_length(quiver, d);
  check_length(quiver, e);
  __int128 sum = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    sum += static_cast<__int128>(d[i]) * e[i];
  }
  for (const Arrow& a : quiver.arrows()) {
    sum -= static_cast<__int128>(d[a.source]) * e[a.target];
  }
  return checked(sum);
}

std::int64_t symmetrized_form(const Quiver& quiver, const DimVector& d, const DimVector& e) {
  return checked(static_cast<__int128>(euler_form(quiver, d, e)) + euler_form(quiver, e, d));
}

bool in_fundamental_domain(const Quiver& quiver, const DimVector& d) {
  check_length(quiver, d);
  if (d.is_zero()) {
    throw InputError("fundamental domain test needs a non-zero dimension vector");
  }
  const int n = quiver.vertex_count();
  std::vector<int> support;
  for (int i = 0; i < n; ++i) {
    if (d[i] > 0) support.push_back(i);
  }

  // Connectivity of the support in the underlying undirected graph.
  std::vector<int> seen(n, 0);
  std::vector<int> stack{support.front()};
  seen[support.front()] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (const Arrow& a : quiver.arrows()) {
      int w = a.source == v ? a.target : (a.target == v ? a.source : -1);
      if (w >= 0 && d[w] > 0 && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  if (reached != support.size()) return false;

  for (int i : support) {
    if (symmetrized_form(quiver, d, DimVector::unit(n, i)) > 0) return false;
  }
  return true;
}

Quiver parse_quiver(std::string_view text) {
  static const std::regex header(R"(\s*vertices\s+([0-9]+)\s*)");
  static const std::regex arrow(R"(\s*([0-9]+)\s*->\s*([0-9]+)\s*)");
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int vertex_count = -1;
  std::vector<Arrow> arrows;
  auto fail = [&](const std::string& what) {
    throw InputError("quiver line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::smatch m;
    if (vertex_count < 0) {
      if (!std::regex_match(line, m, header)) fail("expected 'vertices N'");
      try {
        vertex_count = std::stoi(m[1].str());
      } catch (const std::out_of_range&) {
        fail("vertex count too large");
      }
      if (vertex_count < 1) fail("vertex count must be positive");
      continue;
    }
    if (!std::regex_match(line, m, arrow)) fail("expected 'i -> j'");
    long long src = 0;
    long long dst = 0;
    try {
      src = std::stoll(m[1].str());
      dst = std::stoll(m[2].str());
    } catch (const std::out_of_range&) {
      fail("vertex index too large");
    }
    if (src < 1 || src > vertex_count || dst < 1 || dst > vertex_count) {
      fail("vertex index out of range");
    }
    arrows.push_back({static_cast<int>(src - 1), static_cast<int>(dst - 1)});
  }
  if (vertex_count < 0) {
    throw InputError("quiver text has no 'vertices N' line");
  }
  return Quiver(vertex_count, std::move(arrows));
}

Quiver load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open quiver file '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_quiver(buffer.str());
}

}  // namespace quivexp
