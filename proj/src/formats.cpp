#include "formats.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace gg {

namespace {

// whitespace-delimited token scanner with line tracking for diagnostics
class Tok {
public:
  Tok(const std::string& text, std::string name, int start_line = 1)
      : text_(text), name_(std::move(name)), line_(start_line) {}

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  std::string next_word(const char* what) {
    skip_space();
    if (pos_ >= text_.size()) error(std::string("expected ") + what + ", found end of input");
    size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  int next_int(const char* what) {
    std::string w = next_word(what);
    try {
      size_t used = 0;
      int v = std::stoi(w, &used);
      if (used != w.size()) throw std::invalid_argument(w);
      return v;
    } catch (const std::exception&) {
      error(std::string("expected ") + what + ", found '" + w + "'");
    }
  }

  [[noreturn]] void error(const std::string& msg) {
    fail(ErrC::parse, name_ + ":" + std::to_string(line_) + ": " + msg);
  }

private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
  }

  const std::string& text_;
  std::string name_;
  size_t pos_ = 0;
  int line_;
};

Group parse_group_from(Tok& tok) {
  std::string kind = tok.next_word("group kind");
  if (kind == "cyclic") return Group::cyclic(tok.next_int("group order"));
  if (kind == "dihedral") return Group::dihedral(tok.next_int("dihedral parameter"));
  if (kind == "symmetric") return Group::symmetric(tok.next_int("symmetric degree"));
  if (kind == "table") {
    int n = tok.next_int("table order");
    if (n < 1 || n > Group::kMaxExplicitOrder) tok.error("table order out of range");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) table[a][b] = tok.next_int("table entry");
    return Group::from_table(table);
  }
  tok.error("unknown group kind '" + kind + "' (want cyclic/dihedral/symmetric/table)");
}

}  // namespace

Group parse_group_spec(const std::string& text, const std::string& name) {
  Tok tok(text, name);
  Group g = parse_group_from(tok);
  if (!tok.at_end()) tok.error("trailing tokens after group spec");
  return g;
}

Graph parse_graph_text(const std::string& text, const std::string& name) {
  Tok tok(text, name);
  std::string head = tok.next_word("'graph' header");
  if (head != "graph") tok.error("expected 'graph' header, found '" + head + "'");
  int v = tok.next_int("vertex count");
  int e = tok.next_int("edge count");
  int b = tok.next_int("basepoint");
  if (v < 1) tok.error("vertex count must be positive");
  if (e < 0) tok.error("edge count must be nonnegative");
  if (b < 0 || b >= v) tok.error("basepoint out of range");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < e; ++i) {
    int u = tok.next_int("edge endpoint");
    int w = tok.next_int("edge endpoint");
    if (u < 0 || u >= v || w < 0 || w >= v) tok.error("edge endpoint out of range");
    edges.emplace_back(u, w);
  }
  if (!tok.at_end()) tok.error("trailing tokens after edge list");
  return Graph::build(v, edges, b);
}

FieldFile parse_field_text(const std::string& text, const std::string& name, GraphPtr graph,
                           GroupPtr group) {
  if (!graph || !group) fail(ErrC::invalid, "field parsing needs a graph and a group");
  // split the header line from the label block
  size_t nl = text.find('\n');
  std::string header = nl == std::string::npos ? text : text.substr(0, nl);
  std::string body = nl == std::string::npos ? std::string() : text.substr(nl + 1);

  Tok htok(header, name);
  std::string head = htok.next_word("'field' header");
  if (head != "field") htok.error("expected 'field' header, found '" + head + "'");
  std::string graph_ref = htok.next_word("graph reference");
  // remainder of the header line is the group spec
  std::string spec;
  while (!htok.at_end()) {
    if (!spec.empty()) spec += ' ';
    spec += htok.next_word("group spec token");
  }
  if (spec.empty()) htok.error("missing group spec in field header");
  Group header_group = parse_group_spec(spec, name);
  if (!header_group.same_table(*group))
    fail(ErrC::parse, name + ":1: field group spec does not match the supplied group");

  Tok tok(body, name, 2);
  const int m = graph->edge_count();
  std::vector<Elem> labels(m, -1);
  for (int i = 0; i < m; ++i) {
    int edge = tok.next_int("edge index");
    int label = tok.next_int("element index");
    if (edge < 0 || edge >= m) tok.error("edge index out of range");
    if (labels[edge] >= 0) tok.error("edge " + std::to_string(edge) + " labelled twice");
    if (label < 0 || label >= group->order()) tok.error("element index out of range");
    labels[edge] = label;
  }
  if (!tok.at_end()) tok.error("trailing tokens after labels");
  BundlePtr bundle = std::make_shared<Bundle>(Bundle::trivial(graph->vertex_count(), group));
  return FieldFile{std::move(graph_ref), std::move(spec),
                   GaugeField::from_labels(std::move(graph), std::move(bundle), labels)};
}

Bundle parse_bundle_text(const std::string& text, const std::string& name,
                         GroupPtr group_for_explicit) {
  Tok tok(text, name);
  std::string head = tok.next_word("bundle header");
  if (head == "trivial") {
    int base = tok.next_int("base size");
    Group g = parse_group_from(tok);
    if (!tok.at_end()) tok.error("trailing tokens after trivial bundle");
    if (base < 1) tok.error("base size must be positive");
    return Bundle::trivial(base, std::make_shared<Group>(std::move(g)));
  }
  if (head != "bundle") tok.error("expected 'bundle' or 'trivial' header");
  int base = tok.next_int("base size");
  int order = tok.next_int("group order");
  if (!group_for_explicit) fail(ErrC::invalid, "explicit bundle needs a group from context");
  if (order != group_for_explicit->order())
    tok.error("bundle group order does not match the supplied group");
  if (base < 1) tok.error("base size must be positive");
  long long total = static_cast<long long>(base) * order;
  std::vector<int> point_base(total);
  for (long long i = 0; i < total; ++i) {
    int id = tok.next_int("point id");
    int bx = tok.next_int("base index");
    if (id != i) tok.error("point ids must be ascending from 0");
    if (bx < 0 || bx >= base) tok.error("base index out of range");
    point_base[i] = bx;
  }
  std::vector<std::vector<int>> action(total, std::vector<int>(order));
  for (long long z = 0; z < total; ++z)
    for (int g = 0; g < order; ++g) {
      int img = tok.next_int("action entry");
      if (img < 0 || img >= total) tok.error("action entry out of range");
      action[z][g] = img;
    }
  if (!tok.at_end()) tok.error("trailing tokens after action table");
  return Bundle::from_tables(group_for_explicit, std::move(point_base), std::move(action));
}

GroupAction parse_action_text(const std::string& text, const std::string& name) {
  Tok tok(text, name);
  std::string head = tok.next_word("'action' header");
  if (head != "action") tok.error("expected 'action' header, found '" + head + "'");
  int set_size = tok.next_int("set size");
  int basepoint = tok.next_int("basepoint");
  if (set_size < 1) tok.error("set size must be positive");
  if (basepoint < 0 || basepoint >= set_size) tok.error("basepoint out of range");
  Group g = parse_group_from(tok);
  std::vector<std::vector<int>> table(g.order(), std::vector<int>(set_size));
  for (int e = 0; e < g.order(); ++e)
    for (int x = 0; x < set_size; ++x) {
      int y = tok.next_int("action image");
      if (y < 0 || y >= set_size) tok.error("action image out of range");
      table[e][x] = y;
    }
  if (!tok.at_end()) tok.error("trailing tokens after action table");
  return GroupAction::from_table(std::make_shared<Group>(std::move(g)), set_size,
                                 std::move(table), basepoint);
}

std::string render_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.basepoint() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string render_field(const GaugeField& w, const std::string& graph_ref) {
  std::ostringstream out;
  out << "field " << graph_ref << ' ' << w.bundle().group().name() << '\n';
  std::vector<Elem> labels = w.edge_labels();
  for (size_t i = 0; i < labels.size(); ++i) out << i << ' ' << labels[i] << '\n';
  return out.str();
}

std::string render_bundle(const Bundle& b) {
  std::ostringstream out;
  if (b.is_trivial_layout()) {
    out << "trivial " << b.base_size() << ' ' << b.group().name() << '\n';
    return out.str();
  }
  out << "bundle " << b.base_size() << ' ' << b.group().order() << '\n';
  for (int z = 0; z < b.total_size(); ++z) out << z << ' ' << b.base_of(z) << '\n';
  for (int z = 0; z < b.total_size(); ++z) {
    for (int g = 0; g < b.group().order(); ++g) {
      if (g) out << ' ';
      out << b.act(z, g);
    }
    out << '\n';
  }
  return out.str();
}

std::string render_action(const GroupAction& a) {
  std::ostringstream out;
  out << "action " << a.set_size() << ' ' << a.basepoint() << '\n';
  out << a.group().name() << '\n';
  for (int e = 0; e < a.group().order(); ++e) {
    for (int x = 0; x < a.set_size(); ++x) {
      if (x) out << ' ';
      out << a.apply(e, x);
    }
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrC::io, "cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrC::io, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) fail(ErrC::io, "write to '" + path + "' failed");
}

}  // namespace gg
