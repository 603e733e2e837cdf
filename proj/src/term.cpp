#include "bicumulant/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace bicumulant {

namespace {

using View = std::string_view;

std::uint8_t byte_at(View code, std::size_t i) {
  return static_cast<std::uint8_t>(code[i]);
}

// Offset one past the subterm starting at `pos`.
std::size_t skip(View code, std::size_t pos) {
  if (byte_at(code, pos) == 0) return pos + 3;
  std::size_t count = byte_at(code, pos + 1);
  pos += 2;
  for (std::size_t i = 0; i < count; ++i) pos = skip(code, pos);
  return pos;
}

void child_views(View code, std::vector<View>& out) {
  std::size_t count = byte_at(code, 1);
  std::size_t pos = 2;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t end = skip(code, pos);
    out.push_back(code.substr(pos, end - pos));
    pos = end;
  }
}

// Factors of `code` with respect to `op`: its children when it is an
// `op`-node, otherwise the term itself.
void factors(View code, Op op, std::vector<View>& out) {
  if (byte_at(code, 0) == static_cast<std::uint8_t>(op))
    child_views(code, out);
  else
    out.push_back(code);
}

std::string assemble(Op op, const std::vector<View>& parts) {
  if (parts.size() > 255) throw std::length_error("term node with more than 255 children");
  std::size_t len = 2;
  for (View p : parts) len += p.size();
  std::string code;
  code.reserve(len);
  code.push_back(static_cast<char>(op));
  code.push_back(static_cast<char>(parts.size()));
  for (View p : parts) code.append(p);
  return code;
}

// Validates the subterm at `pos`; returns its end or npos.
std::size_t check(View code, std::size_t pos, int parent_op) {
  if (pos >= code.size()) return View::npos;
  std::uint8_t tag = byte_at(code, pos);
  if (tag == 0) {
    if (pos + 3 > code.size()) return View::npos;
    if (byte_at(code, pos + 1) == 0 || byte_at(code, pos + 2) == 0) return View::npos;
    return pos + 3;
  }
  if (tag != 1 && tag != 2) return View::npos;
  if (tag == parent_op) return View::npos;
  if (pos + 2 > code.size()) return View::npos;
  std::size_t count = byte_at(code, pos + 1);
  if (count < 2) return View::npos;
  std::size_t cur = pos + 2;
  View prev;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t end = check(code, cur, tag);
    if (end == View::npos) return View::npos;
    View child = code.substr(cur, end - cur);
    if (i > 0 && child < prev) return View::npos;
    prev = child;
    cur = end;
  }
  return cur;
}

void collect_slots(View code, std::size_t& pos, std::vector<Slot>& out) {
  if (byte_at(code, pos) == 0) {
    out.push_back({byte_at(code, pos + 1), byte_at(code, pos + 2)});
    pos += 3;
    return;
  }
  std::size_t count = byte_at(code, pos + 1);
  pos += 2;
  for (std::size_t i = 0; i < count; ++i) collect_slots(code, pos, out);
}

}  // namespace

char op_symbol(Op op) { return op == Op::star ? '*' : '.'; }

Term Term::leaf(Slot s) {
  if (s.group < 1 || s.position < 1 || s.group > 255 || s.position > 255)
    throw std::invalid_argument("slot indices must lie in [1, 255]");
  std::string code(3, '\0');
  code[1] = static_cast<char>(s.group);
  code[2] = static_cast<char>(s.position);
  return Term(std::move(code));
}

Term Term::product(Op op, const Term& a, const Term& b) {
  std::vector<View> fa, fb;
  factors(a.code_, op, fa);
  factors(b.code_, op, fb);
  std::vector<View> merged;
  merged.reserve(fa.size() + fb.size());
  std::merge(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(merged));
  return Term(assemble(op, merged));
}

Term Term::product(Op op, std::span<const Term> operands) {
  if (operands.empty()) throw std::invalid_argument("empty product");
  if (operands.size() == 1) return operands.front();
  std::vector<View> all;
  for (const Term& t : operands) factors(t.code_, op, all);
  std::sort(all.begin(), all.end());
  return Term(assemble(op, all));
}

Slot Term::slot() const {
  if (!is_leaf()) throw std::logic_error("slot() on a node");
  return {byte_at(code_, 1), byte_at(code_, 2)};
}

Op Term::op() const {
  if (is_leaf()) throw std::logic_error("op() on a leaf");
  return static_cast<Op>(code_[0]);
}

std::size_t Term::arity() const { return is_leaf() ? 0 : byte_at(code_, 1); }

std::vector<Term> Term::children() const {
  std::vector<Term> out;
  if (is_leaf()) return out;
  std::vector<View> views;
  child_views(code_, views);
  out.reserve(views.size());
  for (View v : views) out.push_back(Term(std::string(v)));
  return out;
}

std::vector<Slot> Term::slots() const {
  std::vector<Slot> out;
  std::size_t pos = 0;
  collect_slots(code_, pos, out);
  return out;
}

std::size_t Term::leaf_count() const { return slots().size(); }

bool Term::is_canonical_code(std::string_view code) {
  if (code.empty()) return false;
  return check(code, 0, 0) == code.size();
}

Term Term::from_code(std::string code) {
  if (!is_canonical_code(code)) throw std::invalid_argument("non-canonical term code");
  return Term(std::move(code));
}

RawTerm RawTerm::of(Slot s) {
  RawTerm r;
  r.slot = s;
  return r;
}

RawTerm RawTerm::node(Op op, std::vector<RawTerm> children) {
  RawTerm r;
  r.is_leaf = false;
  r.op = op;
  r.children = std::move(children);
  return r;
}

Term normalize(const RawTerm& raw) {
  if (raw.is_leaf) return Term::leaf(raw.slot);
  if (raw.children.empty()) throw std::invalid_argument("node without children");
  std::vector<Term> kids;
  kids.reserve(raw.children.size());
  for (const RawTerm& c : raw.children) kids.push_back(normalize(c));
  return Term::product(raw.op, kids);
}

std::string render_text(const Term& t) {
  if (t.is_leaf()) return label(t.slot());
  std::string out = "(";
  out += op_symbol(t.op());
  for (const Term& c : t.children()) {
    out += ' ';
    out += render_text(c);
  }
  out += ')';
  return out;
}

namespace {

std::string latex_inner(const Term& t, bool wrap) {
  if (t.is_leaf()) return latex_label(t.slot());
  const char* sep = t.op() == Op::star ? " \\ast " : " \\cdot ";
  std::string out;
  bool first = true;
  for (const Term& c : t.children()) {
    if (!first) out += sep;
    first = false;
    out += latex_inner(c, true);
  }
  return wrap ? "\\left(" + out + "\\right)" : out;
}

}  // namespace

std::string render_latex(const Term& t) { return latex_inner(t, false); }

}  // namespace bicumulant
