#include "cycsec/instance_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "cycsec/rng.hpp"

namespace cycsec {

namespace {

struct LineReader {
  std::istringstream in;
  int line_no = 0;

  explicit LineReader(const std::string& text) : in(text) {}

  /// Next non-empty line with comments stripped; throws at end of input.
  std::string next() {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t' ||
                              raw.back() == '\r'))
        raw.pop_back();
      std::size_t start = raw.find_first_not_of(" \t");
      if (start == std::string::npos) continue;
      return raw.substr(start);
    }
    throw ParseError(line_no + 1, "unexpected end of input");
  }
};

long parse_count(LineReader& r, const std::string& line,
                 const std::string& keyword) {
  std::istringstream ss(line);
  std::string kw;
  long value;
  if (!(ss >> kw >> value) || kw != keyword)
    throw ParseError(r.line_no, "expected '" + keyword + " <count>'");
  std::string trail;
  if (ss >> trail) throw ParseError(r.line_no, "trailing tokens");
  return value;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

FractionalPoint parse_instance(const std::string& text) {
  LineReader r(text);

  {
    std::string header = r.next();
    std::istringstream ss(header);
    std::string magic;
    int version = 0;
    if (!(ss >> magic >> version) || magic != "CYCSEC")
      throw ParseError(r.line_no, "missing CYCSEC header");
    if (version != 1)
      throw ParseError(r.line_no,
                       "unsupported format version " + std::to_string(version));
  }

  FractionalPoint p;
  p.n_vertices = static_cast<int>(parse_count(r, r.next(), "VERTICES"));
  if (p.n_vertices < 1) throw ParseError(r.line_no, "vertex count must be >= 1");
  p.depot = static_cast<Vertex>(parse_count(r, r.next(), "DEPOT"));
  if (p.depot < 0 || p.depot > p.n_vertices)
    throw ParseError(r.line_no, "depot out of range");

  long y_count = parse_count(r, r.next(), "Y");
  if (y_count < 0) throw ParseError(r.line_no, "negative Y count");
  for (long i = 0; i < y_count; ++i) {
    std::istringstream ss(r.next());
    Vertex v;
    double val;
    if (!(ss >> v >> val)) throw ParseError(r.line_no, "bad Y record");
    if (v < 1 || v > p.n_vertices)
      throw ParseError(r.line_no, "vertex id out of range");
    if (p.y.count(v)) throw ParseError(r.line_no, "duplicate Y record");
    if (val <= 0.0) throw ParseError(r.line_no, "non-positive y value");
    p.y[v] = val;
  }

  long e_count = parse_count(r, r.next(), "EDGES");
  if (e_count < 0) throw ParseError(r.line_no, "negative EDGES count");
  for (long i = 0; i < e_count; ++i) {
    std::istringstream ss(r.next());
    Vertex u, v;
    double val;
    if (!(ss >> u >> v >> val)) throw ParseError(r.line_no, "bad edge record");
    if (u == v) throw ParseError(r.line_no, "loop edge");
    if (u < 1 || u > p.n_vertices || v < 1 || v > p.n_vertices)
      throw ParseError(r.line_no, "edge endpoint out of range");
    if (p.x.count(edge_key(u, v)))
      throw ParseError(r.line_no, "duplicate edge");
    if (val <= 0.0) throw ParseError(r.line_no, "non-positive edge value");
    p.x[edge_key(u, v)] = val;
  }
  return p;
}

std::string write_instance(const FractionalPoint& p) {
  std::ostringstream out;
  out << "CYCSEC 1\n";
  out << "VERTICES " << p.n_vertices << "\n";
  out << "DEPOT " << p.depot << "\n";
  out << "Y " << p.y.size() << "\n";
  for (const auto& [v, yv] : p.y) out << v << " " << fmt(yv) << "\n";
  out << "EDGES " << p.x.size() << "\n";
  for (const auto& [e, xe] : p.x)
    out << e.first << " " << e.second << " " << fmt(xe) << "\n";
  return out.str();
}

FractionalPoint load_instance_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_instance(buf.str());
}

void save_instance_file(const FractionalPoint& p, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << write_instance(p);
}

FractionalPoint generate_synthetic(const SyntheticParams& params) {
  if (params.clusters < 1 || params.cycles_per_cluster < 1 ||
      params.n < 3 * params.clusters || params.perturbation < 0.0)
    throw std::domain_error("infeasible synthetic parameters");

  Rng rng(params.seed);
  const int n = params.n;

  std::vector<std::pair<double, double>> pts(n);
  for (auto& pt : pts) pt = {rng.next_double(), rng.next_double()};

  // Spatial clustering by x coordinate quantiles.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return pts[a - 1] < pts[b - 1];
  });

  FractionalPoint p;
  p.n_vertices = n;

  int taken = 0;
  for (int c = 0; c < params.clusters; ++c) {
    const int size = (n - taken) / (params.clusters - c);
    std::vector<Vertex> group(order.begin() + taken,
                              order.begin() + taken + size);
    taken += size;
    std::sort(group.begin(), group.end());
    const Vertex anchor = group.front();

    std::vector<std::vector<Vertex>> cycles;
    {
      // First cycle spans the whole group so every member gets support.
      std::vector<Vertex> tour = group;
      rng.shuffle(tour);
      cycles.push_back(tour);
    }
    for (int t = 1; t < params.cycles_per_cluster; ++t) {
      // Later cycles hit random subsets but always contain the anchor,
      // which pins y(anchor) = 1.
      std::vector<Vertex> rest;
      for (Vertex v : group)
        if (v != anchor) rest.push_back(v);
      rng.shuffle(rest);
      const std::size_t extra =
          2 + rng.next_index(rest.size() - 1);  // subset size in [3, |group|]
      std::vector<Vertex> tour(rest.begin(), rest.begin() + extra);
      tour.push_back(anchor);
      rng.shuffle(tour);
      cycles.push_back(tour);
    }

    std::vector<double> lambda(cycles.size());
    double sum = 0.0;
    for (double& l : lambda) {
      l = -std::log(1.0 - rng.next_double());
      sum += l;
    }
    for (double& l : lambda) l /= sum;
    if (params.perturbation > 0.0 && lambda.size() > 1) {
      sum = 0.0;
      for (double& l : lambda) {
        l *= 1.0 + params.perturbation * (2.0 * rng.next_double() - 1.0);
        l = std::max(l, 1e-6);
        sum += l;
      }
      for (double& l : lambda) l /= sum;
    }

    for (std::size_t t = 0; t < cycles.size(); ++t) {
      const auto& tour = cycles[t];
      for (std::size_t i = 0; i < tour.size(); ++i) {
        Vertex u = tour[i];
        Vertex v = tour[(i + 1) % tour.size()];
        p.add_x(u, v, lambda[t]);
        p.y[u] += lambda[t];
      }
    }
  }

  // Drop float dust so support queries stay crisp.
  for (auto it = p.y.begin(); it != p.y.end();) {
    it->second = std::min(it->second, 1.0);
    it = it->second > 0.0 ? std::next(it) : p.y.erase(it);
  }
  return p;
}

}  // namespace cycsec
