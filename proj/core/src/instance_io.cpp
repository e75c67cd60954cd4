#include "cmopt/instance_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "cmopt/errors.hpp"

namespace cmopt {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return pos_ >= lines_.size(); }
  int last_line() const { return lines_.empty() ? 1 : lines_.back().number; }

  const Line& next(const char* what) {
    if (done()) throw ParseError(last_line(), std::string("unexpected end of file, expected ") + what);
    return lines_[pos_++];
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

int parse_int(const Line& line, const std::string& tok, const char* what) {
  char* end = nullptr;
  long v = std::strtol(tok.c_str(), &end, 10);
  if (end == tok.c_str() || *end != '\0')
    throw ParseError(line.number, std::string("expected integer ") + what + ", got '" + tok + "'");
  return static_cast<int>(v);
}

double parse_num(const Line& line, const std::string& tok, const char* what) {
  char* end = nullptr;
  double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0' || !std::isfinite(v))
    throw ParseError(line.number, std::string("expected number ") + what + ", got '" + tok + "'");
  return v;
}

Vec parse_row(const Line& line, std::size_t count, const char* what) {
  if (line.tokens.size() != count)
    throw ParseError(line.number, std::string("expected ") + std::to_string(count) + " numbers for " +
                                      what + ", got " + std::to_string(line.tokens.size()));
  Vec row;
  row.reserve(count);
  for (const std::string& t : line.tokens) row.push_back(parse_num(line, t, what));
  return row;
}

void expect_arity(const Line& line, std::size_t arity) {
  if (line.tokens.size() != arity)
    throw ParseError(line.number, "wrong number of tokens on '" + line.tokens.front() + "' line");
}

MatroidSpec parse_matroid(Cursor& cur, int n, int d) {
  (void)d;
  const Line& head = cur.next("a 'matroid' line");
  if (head.tokens.front() != "matroid")
    throw ParseError(head.number, "expected keyword 'matroid', got '" + head.tokens.front() + "'");
  if (head.tokens.size() < 2) throw ParseError(head.number, "missing matroid kind");
  const std::string& kind = head.tokens[1];

  if (kind == "uniform") {
    expect_arity(head, 3);
    int r = parse_int(head, head.tokens[2], "rank");
    if (r < 0 || r > n)
      throw ParseError(head.number, "uniform rank must satisfy 0 <= r <= n");
    return UniformSpec{r};
  }
  if (kind == "graphic") {
    expect_arity(head, 3);
    int vertices = parse_int(head, head.tokens[2], "vertex count");
    if (vertices < 0) throw ParseError(head.number, "vertex count must be nonnegative");
    GraphicSpec g{vertices, {}};
    for (int e = 0; e < n; ++e) {
      const Line& el = cur.next("an edge line 'u v'");
      expect_arity(el, 2);
      int u = parse_int(el, el.tokens[0], "edge endpoint");
      int v = parse_int(el, el.tokens[1], "edge endpoint");
      if (u < 0 || u >= vertices || v < 0 || v >= vertices)
        throw ParseError(el.number, "edge endpoint out of range [0, V)");
      g.edges.emplace_back(u, v);
    }
    return g;
  }
  if (kind == "partition") {
    expect_arity(head, 2);
    PartitionSpec p;
    int last = head.number;
    while (static_cast<int>(p.block_of.size()) < n) {
      const Line& bl = cur.next("block ids");
      last = bl.number;
      for (const std::string& t : bl.tokens) {
        if (static_cast<int>(p.block_of.size()) >= n)
          throw ParseError(bl.number, "more block ids than elements");
        int b = parse_int(bl, t, "block id");
        if (b < 1) throw ParseError(bl.number, "block ids are 1-based positive integers");
        p.block_of.push_back(b - 1);
      }
    }
    const Line& cl = cur.next("a capacities line");
    for (const std::string& t : cl.tokens) {
      int c = parse_int(cl, t, "capacity");
      if (c < 0) throw ParseError(cl.number, "capacities must be nonnegative");
      p.capacities.push_back(c);
    }
    for (int b : p.block_of)
      if (b >= static_cast<int>(p.capacities.size()))
        throw ParseError(last, "block id exceeds the number of capacities");
    return p;
  }
  if (kind == "linear") {
    expect_arity(head, 3);
    int rows = parse_int(head, head.tokens[2], "matrix row count");
    if (rows < 0) throw ParseError(head.number, "matrix row count must be nonnegative");
    LinearSpec l;
    for (int i = 0; i < rows; ++i)
      l.rows.push_back(parse_row(cur.next("a matrix row"), static_cast<std::size_t>(n), "matrix row"));
    return l;
  }
  throw ParseError(head.number, "unknown matroid kind '" + kind + "'");
}

ObjectiveSpec parse_objective(Cursor& cur, int d) {
  const Line& head = cur.next("an 'objective' line");
  if (head.tokens.front() != "objective")
    throw ParseError(head.number, "expected keyword 'objective', got '" + head.tokens.front() + "'");
  if (head.tokens.size() < 2) throw ParseError(head.number, "missing objective kind");
  const std::string& kind = head.tokens[1];

  if (kind == "sqnorm") {
    expect_arity(head, 2);
    return SqNormSpec{};
  }
  if (kind == "pnorm") {
    expect_arity(head, 3);
    if (head.tokens[2] == "inf") return PNormSpec{std::numeric_limits<double>::infinity()};
    double p = parse_num(head, head.tokens[2], "p");
    if (p < 1.0) throw ParseError(head.number, "pnorm requires p >= 1");
    return PNormSpec{p};
  }
  if (kind == "balanced") {
    expect_arity(head, 2);
    return BalancedSpec{};
  }
  if (kind == "maxlin") {
    expect_arity(head, 3);
    int k = parse_int(head, head.tokens[2], "row count");
    if (k < 1) throw ParseError(head.number, "maxlin needs at least one row");
    MaxLinSpec ml;
    for (int i = 0; i < k; ++i)
      ml.rows.push_back(parse_row(cur.next("a maxlin row"), static_cast<std::size_t>(d), "maxlin row"));
    return ml;
  }
  throw ParseError(head.number, "unknown objective kind '" + kind + "'");
}

std::pair<int, int> parse_header(Cursor& cur) {
  const Line& dl = cur.next("'dim <d>'");
  if (dl.tokens.front() != "dim") throw ParseError(dl.number, "expected 'dim <d>' on the first line");
  expect_arity(dl, 2);
  int d = parse_int(dl, dl.tokens[1], "dimension");
  if (d < 1) throw ParseError(dl.number, "dimension must be positive");

  const Line& nl = cur.next("'n <n>'");
  if (nl.tokens.front() != "n") throw ParseError(nl.number, "expected 'n <n>' after the dim line");
  expect_arity(nl, 2);
  int n = parse_int(nl, nl.tokens[1], "ground-set size");
  if (n < 0) throw ParseError(nl.number, "n must be nonnegative");
  return {d, n};
}

void fmt(std::string& out, double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
  Cursor cur(tokenize(text));
  auto [d, n] = parse_header(cur);

  InstanceFile file;
  file.instance.d = d;
  file.instance.n = n;
  for (int j = 0; j < n; ++j)
    file.instance.weights.push_back(
        parse_row(cur.next("a weight row"), static_cast<std::size_t>(d), "weight row"));

  file.matroid = parse_matroid(cur, n, d);
  file.objective = parse_objective(cur, d);
  if (!cur.done()) {
    const Line& extra = cur.next("");
    throw ParseError(extra.number, "trailing content after the objective");
  }
  if (auto* g = std::get_if<GraphicSpec>(&file.matroid); g && static_cast<int>(g->edges.size()) != n)
    throw ParseError(cur.last_line(), "graphic matroid edge count does not match n");
  return file;
}

std::unique_ptr<MatroidOracle> InstanceFile::make_matroid() const {
  const int n = instance.n;
  if (const auto* u = std::get_if<UniformSpec>(&matroid))
    return std::make_unique<UniformMatroid>(n, u->r);
  if (const auto* g = std::get_if<GraphicSpec>(&matroid))
    return std::make_unique<GraphicMatroid>(g->vertices, g->edges);
  if (const auto* p = std::get_if<PartitionSpec>(&matroid))
    return std::make_unique<PartitionMatroid>(p->block_of, p->capacities);
  const auto& l = std::get<LinearSpec>(matroid);
  return std::make_unique<LinearMatroid>(l.rows);
}

std::unique_ptr<ConvexObjective> InstanceFile::make_objective() const {
  if (std::holds_alternative<SqNormSpec>(objective))
    return std::make_unique<SqNorm>(instance.d);
  if (const auto* p = std::get_if<PNormSpec>(&objective))
    return std::make_unique<PNorm>(instance.d, p->p);
  if (std::holds_alternative<BalancedSpec>(objective)) {
    Vec total = zero_vec(instance.d);
    for (const Vec& w : instance.weights) total = add(total, w);
    return std::make_unique<Balanced>(std::move(total));
  }
  const auto& ml = std::get<MaxLinSpec>(objective);
  return std::make_unique<MaxLin>(ml.rows);
}

std::string serialize_instance(const InstanceFile& file) {
  std::string out;
  out += "dim " + std::to_string(file.instance.d) + "\n";
  out += "n " + std::to_string(file.instance.n) + "\n";
  for (const Vec& w : file.instance.weights) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k) out += ' ';
      fmt(out, w[k]);
    }
    out += '\n';
  }

  if (const auto* u = std::get_if<UniformSpec>(&file.matroid)) {
    out += "matroid uniform " + std::to_string(u->r) + "\n";
  } else if (const auto* g = std::get_if<GraphicSpec>(&file.matroid)) {
    out += "matroid graphic " + std::to_string(g->vertices) + "\n";
    for (const auto& [a, b] : g->edges)
      out += std::to_string(a) + " " + std::to_string(b) + "\n";
  } else if (const auto* p = std::get_if<PartitionSpec>(&file.matroid)) {
    out += "matroid partition\n";
    for (int b : p->block_of) out += std::to_string(b + 1) + "\n";
    for (std::size_t i = 0; i < p->capacities.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(p->capacities[i]);
    }
    out += '\n';
  } else {
    const auto& l = std::get<LinearSpec>(file.matroid);
    out += "matroid linear " + std::to_string(l.rows.size()) + "\n";
    for (const Vec& r : l.rows) {
      for (std::size_t k = 0; k < r.size(); ++k) {
        if (k) out += ' ';
        fmt(out, r[k]);
      }
      out += '\n';
    }
  }

  if (std::holds_alternative<SqNormSpec>(file.objective)) {
    out += "objective sqnorm\n";
  } else if (const auto* p = std::get_if<PNormSpec>(&file.objective)) {
    if (std::isinf(p->p)) {
      out += "objective pnorm inf\n";
    } else {
      out += "objective pnorm ";
      fmt(out, p->p);
      out += '\n';
    }
  } else if (std::holds_alternative<BalancedSpec>(file.objective)) {
    out += "objective balanced\n";
  } else {
    const auto& ml = std::get<MaxLinSpec>(file.objective);
    out += "objective maxlin " + std::to_string(ml.rows.size()) + "\n";
    for (const Vec& r : ml.rows) {
      for (std::size_t k = 0; k < r.size(); ++k) {
        if (k) out += ' ';
        fmt(out, r[k]);
      }
      out += '\n';
    }
  }
  return out;
}

std::vector<Vec> parse_points_file(const std::string& text) {
  Cursor cur(tokenize(text));
  auto [d, n] = parse_header(cur);
  std::vector<Vec> points;
  for (int j = 0; j < n; ++j)
    points.push_back(parse_row(cur.next("a point row"), static_cast<std::size_t>(d), "point row"));
  if (!cur.done()) throw ParseError(cur.next("").number, "trailing content after the points");
  return points;
}

QAInstance parse_matrix_file(const std::string& text) {
  Cursor cur(tokenize(text));
  auto [d, n] = parse_header(cur);
  QAInstance qa;
  qa.d = d;
  qa.columns.assign(static_cast<std::size_t>(n), zero_vec(d));
  for (int i = 0; i < d; ++i) {
    Vec row = parse_row(cur.next("a matrix row"), static_cast<std::size_t>(n), "matrix row");
    for (int j = 0; j < n; ++j)
      qa.columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(j)];
  }
  if (!cur.done()) throw ParseError(cur.next("").number, "trailing content after the matrix");
  return qa;
}

}  // namespace cmopt
