#include "hyptree/tree_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hyptree {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("tree file, line " + std::to_string(line_no) + ": " + what);
}

struct LineReader {
  std::istream& in;
  std::size_t line_no = 0;

  std::string next() {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      return line;
    }
    parse_fail(line_no, "unexpected end of file");
  }
};

void write_node(std::ostream& out, const DecisionTable& table, const DecisionTree& tree,
                std::uint32_t id) {
  switch (tree.kind(id)) {
    case DecisionTree::NodeKind::Leaf:
      out << "node leaf " << tree.decision_of(id) << "\n";
      return;
    case DecisionTree::NodeKind::Unreachable:
      out << "node none\n";
      return;
    case DecisionTree::NodeKind::Query:
      break;
  }
  const Query& q = tree.query_of(id);
  auto answers = query_answers(table, q);
  if (answers.size() != tree.node(id).edge_count)
    throw std::runtime_error("tree does not structurally match the table; refusing to save");
  if (q.kind == QueryKind::Attribute) {
    out << "node ask " << q.attribute << " " << answers.size() << "\n";
  } else {
    out << "node hyp " << answers.size() << "\ndelta";
    for (Value v : q.hypothesis.values) out << " " << v;
    out << "\n";
  }
  for (std::size_t e = 0; e < answers.size(); ++e) {
    const Answer& a = answers[e];
    switch (a.kind) {
      case AnswerKind::ValueIs:
        out << "edge val " << a.value << "\n";
        break;
      case AnswerKind::Confirmed:
        out << "edge yes\n";
        break;
      case AnswerKind::Counterexample:
        out << "edge no " << a.attribute << " " << a.value << "\n";
        break;
    }
    write_node(out, table, tree, tree.child(id, e));
  }
}

std::uint32_t read_node(LineReader& r, const DecisionTable& table, DecisionTree& tree) {
  std::string line = r.next();
  if (line.rfind("node ", 0) != 0) parse_fail(r.line_no, "expected a node line");
  std::string rest = line.substr(5);

  if (rest == "none") return tree.unreachable_node();
  if (rest == "leaf") return tree.add_leaf("");
  if (rest.rfind("leaf ", 0) == 0) return tree.add_leaf(rest.substr(5));

  Query q;
  std::size_t edge_count = 0;
  std::istringstream head(rest);
  std::string kind;
  head >> kind;
  if (kind == "ask") {
    std::size_t attr;
    if (!(head >> attr >> edge_count)) parse_fail(r.line_no, "malformed ask node");
    if (attr >= table.attribute_count()) parse_fail(r.line_no, "attribute index out of range");
    q = Query::ask_attribute(attr);
  } else if (kind == "hyp") {
    if (!(head >> edge_count)) parse_fail(r.line_no, "malformed hyp node");
    std::string delta_line = r.next();
    std::istringstream ds(delta_line);
    std::string tag;
    ds >> tag;
    if (tag != "delta") parse_fail(r.line_no, "expected a delta line");
    Hypothesis h;
    Value v;
    while (ds >> v) h.values.push_back(v);
    check_hypothesis(table, h);
    q = Query::ask_hypothesis(std::move(h));
  } else {
    parse_fail(r.line_no, "unknown node kind '" + kind + "'");
  }

  auto expected = query_answers(table, q);
  if (expected.size() != edge_count)
    parse_fail(r.line_no, "edge count does not match the query's answer set");

  std::vector<std::uint32_t> children;
  children.reserve(edge_count);
  for (const Answer& want : expected) {
    std::string edge_line = r.next();
    std::istringstream es(edge_line);
    std::string tag, sub;
    es >> tag >> sub;
    if (tag != "edge") parse_fail(r.line_no, "expected an edge line");
    Answer got;
    if (sub == "val") {
      std::size_t attr = q.attribute;
      Value v;
      if (!(es >> v)) parse_fail(r.line_no, "malformed value edge");
      got = Answer::value_is(attr, v);
    } else if (sub == "yes") {
      got = Answer::confirmed();
    } else if (sub == "no") {
      std::size_t attr;
      Value v;
      if (!(es >> attr >> v)) parse_fail(r.line_no, "malformed counterexample edge");
      got = Answer::counterexample(attr, v);
    } else {
      parse_fail(r.line_no, "unknown edge kind '" + sub + "'");
    }
    if (!(got == want)) parse_fail(r.line_no, "edges are not in canonical answer order");
    children.push_back(read_node(r, table, tree));
  }
  return tree.add_query_node(q, children);
}

}  // namespace

void save_tree(std::ostream& out, const DecisionTable& table, const DecisionTree& tree) {
  if (tree.empty()) throw std::invalid_argument("cannot save a tree without a root");
  out << "dtree 1\n";
  write_node(out, table, tree, tree.root());
  if (!out) throw std::runtime_error("tree write failed");
}

void save_tree_file(const std::string& path, const DecisionTable& table,
                    const DecisionTree& tree) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  save_tree(out, table, tree);
}

DecisionTree load_tree(std::istream& in, const DecisionTable& table) {
  LineReader r{in};
  std::string magic = r.next();
  if (magic != "dtree 1") parse_fail(r.line_no, "not a dtree file");
  DecisionTree tree;
  tree.set_root(read_node(r, table, tree));
  return tree;
}

DecisionTree load_tree_file(const std::string& path, const DecisionTable& table) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return load_tree(in, table);
}

}  // namespace hyptree
