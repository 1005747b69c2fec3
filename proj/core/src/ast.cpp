#include "irgl/ast.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace irgl::ast {

namespace {

template <class... Ts>
struct Overload : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

int precedence(BinOp op) {
  switch (op) {
    case BinOp::Or: return 1;
    case BinOp::And: return 2;
    case BinOp::Eq:
    case BinOp::Ne: return 3;
    case BinOp::Lt:
    case BinOp::Le:
    case BinOp::Gt:
    case BinOp::Ge: return 4;
    case BinOp::Add:
    case BinOp::Sub: return 5;
    case BinOp::Mul:
    case BinOp::Div:
    case BinOp::Mod: return 6;
  }
  return 0;
}

void print_expr(const Expr& e, std::ostream& os, int parent_prec);

void print_float(double v, std::ostream& os) {
  std::ostringstream tmp;
  tmp.precision(17);
  tmp << v;
  std::string s = tmp.str();
  // Keep float literals recognizable as floats after a round-trip.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  os << s;
}

void print_expr(const Expr& e, std::ostream& os, int parent_prec) {
  std::visit(
      Overload{
          [&](const IntLit& n) { os << n.value; },
          [&](const FloatLit& n) { print_float(n.value, os); },
          [&](const BoolLit& n) { os << (n.value ? "true" : "false"); },
          [&](const StrLit& n) { os << '"' << n.value << '"'; },
          [&](const Ident& n) { os << n.name; },
          [&](const Unary& n) {
            os << un_op_token(n.op);
            os << '(';
            print_expr(*n.operand, os, 0);
            os << ')';
          },
          [&](const Binary& n) {
            int prec = precedence(n.op);
            bool parens = prec < parent_prec;
            if (parens) os << '(';
            print_expr(*n.lhs, os, prec);
            os << ' ' << bin_op_token(n.op) << ' ';
            // Right operand gets prec+1 so non-associative chains re-parse
            // with the same shape.
            print_expr(*n.rhs, os, prec + 1);
            if (parens) os << ')';
          },
          [&](const Index& n) {
            print_expr(*n.base, os, 100);
            os << '[';
            print_expr(*n.index, os, 0);
            os << ']';
          },
          [&](const Field& n) {
            print_expr(*n.base, os, 100);
            os << '.' << n.field;
          },
          [&](const Call& n) {
            print_expr(*n.callee, os, 100);
            os << '(';
            for (std::size_t i = 0; i < n.args.size(); ++i) {
              if (i) os << ", ";
              print_expr(n.args[i], os, 0);
            }
            os << ')';
          },
      },
      e.node);
}

}  // namespace

const char* un_op_token(UnOp op) { return op == UnOp::Neg ? "-" : "!"; }

const char* bin_op_token(BinOp op) {
  switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
    case BinOp::Mod: return "%";
    case BinOp::Lt: return "<";
    case BinOp::Le: return "<=";
    case BinOp::Gt: return ">";
    case BinOp::Ge: return ">=";
    case BinOp::Eq: return "==";
    case BinOp::Ne: return "!=";
    case BinOp::And: return "&&";
    case BinOp::Or: return "||";
  }
  return "?";
}

std::string to_string(const Expr& e) {
  std::ostringstream os;
  print_expr(e, os, 0);
  return os.str();
}

const char* to_string(Reduction r) { return r == Reduction::Any ? "Any" : "All"; }

const char* to_string(KernelKind k) {
  switch (k) {
    case KernelKind::Plain: return "plain";
    case KernelKind::Host: return "host";
    case KernelKind::Device: return "device";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Structural equality (span-insensitive)

namespace {

bool eq(const Expr& a, const Expr& b);

bool eq_vec(const std::vector<Expr>& a, const std::vector<Expr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!eq(a[i], b[i])) return false;
  return true;
}

bool eq(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      Overload{
          [&](const IntLit& x) { return x.value == std::get<IntLit>(b.node).value; },
          [&](const FloatLit& x) { return x.value == std::get<FloatLit>(b.node).value; },
          [&](const BoolLit& x) { return x.value == std::get<BoolLit>(b.node).value; },
          [&](const StrLit& x) { return x.value == std::get<StrLit>(b.node).value; },
          [&](const Ident& x) { return x.name == std::get<Ident>(b.node).name; },
          [&](const Unary& x) {
            const auto& y = std::get<Unary>(b.node);
            return x.op == y.op && eq(*x.operand, *y.operand);
          },
          [&](const Binary& x) {
            const auto& y = std::get<Binary>(b.node);
            return x.op == y.op && eq(*x.lhs, *y.lhs) && eq(*x.rhs, *y.rhs);
          },
          [&](const Index& x) {
            const auto& y = std::get<Index>(b.node);
            return eq(*x.base, *y.base) && eq(*x.index, *y.index);
          },
          [&](const Field& x) {
            const auto& y = std::get<Field>(b.node);
            return x.field == y.field && eq(*x.base, *y.base);
          },
          [&](const Call& x) {
            const auto& y = std::get<Call>(b.node);
            return eq(*x.callee, *y.callee) && eq_vec(x.args, y.args);
          },
      },
      a.node);
}

bool eq(const Stmt& a, const Stmt& b);

bool eq_body(const std::vector<Stmt>& a, const std::vector<Stmt>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!eq(a[i], b[i])) return false;
  return true;
}

bool eq_opt_body(const std::optional<std::vector<Stmt>>& a,
                 const std::optional<std::vector<Stmt>>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || eq_body(*a, *b);
}

bool eq(const WorklistInit& a, const WorklistInit& b) {
  if (!eq(a.size, b.size)) return false;
  if (a.source.index() != b.source.index()) return false;
  if (const auto* s = std::get_if<WorklistInit::Scalars>(&a.source))
    return eq_vec(s->items, std::get<WorklistInit::Scalars>(b.source).items);
  const auto& x = std::get<WorklistInit::FromArray>(a.source);
  const auto& y = std::get<WorklistInit::FromArray>(b.source);
  return eq(x.array, y.array) && eq(x.length, y.length);
}

bool eq_opt_init(const std::optional<WorklistInit>& a, const std::optional<WorklistInit>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || eq(*a, *b);
}

bool eq(const Stmt& a, const Stmt& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      Overload{
          [&](const CBlock& x) {
            const auto& y = std::get<CBlock>(b.node);
            return x.code == y.code && x.reads == y.reads && x.writes == y.writes;
          },
          [&](const ForAll& x) {
            const auto& y = std::get<ForAll>(b.node);
            return x.var == y.var && x.mapping == y.mapping && eq(x.iterator, y.iterator) &&
                   eq_body(x.body, y.body);
          },
          [&](const For& x) {
            const auto& y = std::get<For>(b.node);
            return x.var == y.var && eq(x.iterator, y.iterator) && eq_body(x.body, y.body);
          },
          [&](const While& x) {
            const auto& y = std::get<While>(b.node);
            return eq(x.cond, y.cond) && eq_body(x.body, y.body);
          },
          [&](const If& x) {
            const auto& y = std::get<If>(b.node);
            return eq(x.cond, y.cond) && eq_body(x.then_stmts, y.then_stmts) &&
                   eq_body(x.else_stmts, y.else_stmts);
          },
          [&](const Atomic& x) {
            const auto& y = std::get<Atomic>(b.node);
            return eq(x.lock, y.lock) && eq_body(x.locked, y.locked) &&
                   eq_opt_body(x.failed, y.failed);
          },
          [&](const Exclusive& x) {
            const auto& y = std::get<Exclusive>(b.node);
            return x.lock_source == y.lock_source && eq(x.object, y.object) &&
                   eq(x.count, y.count) && eq(x.locks, y.locks) && eq_body(x.locked, y.locked) &&
                   eq_opt_body(x.failed, y.failed);
          },
          [&](const SyncRunningThreads&) { return true; },
          [&](const Retry& x) { return eq(x.item, std::get<Retry>(b.node).item); },
          [&](const Respawn& x) { return eq(x.item, std::get<Respawn>(b.node).item); },
          [&](const ReduceAndReturn& x) {
            return eq(x.value, std::get<ReduceAndReturn>(b.node).value);
          },
          [&](const Invoke& x) {
            const auto& y = std::get<Invoke>(b.node);
            return x.kernel == y.kernel && x.reduction == y.reduction && eq_vec(x.args, y.args);
          },
          [&](const Iterate& x) {
            const auto& y = std::get<Iterate>(b.node);
            if (x.kernel != y.kernel || !eq_vec(x.args, y.args)) return false;
            if (x.cond.has_value() != y.cond.has_value()) return false;
            if (x.cond && (x.cond->mode != y.cond->mode || x.cond->reduction != y.cond->reduction))
              return false;
            if (!eq_opt_init(x.initial, y.initial)) return false;
            if (x.extra_cond.has_value() != y.extra_cond.has_value()) return false;
            if (x.extra_cond && (x.extra_cond->combiner != y.extra_cond->combiner ||
                                 !eq(x.extra_cond->cond, y.extra_cond->cond)))
              return false;
            return eq_body(x.between_rounds, y.between_rounds);
          },
          [&](const Pipe& x) {
            const auto& y = std::get<Pipe>(b.node);
            return x.once == y.once && eq_opt_init(x.wlinit, y.wlinit) && eq_body(x.body, y.body);
          },
          [&](const WlPop& x) {
            const auto& y = std::get<WlPop>(b.node);
            return x.var == y.var && eq(x.index, y.index);
          },
          [&](const WlPush& x) { return eq(x.value, std::get<WlPush>(b.node).value); },
      },
      a.node);
}

}  // namespace

bool structurally_equal(const Expr& a, const Expr& b) { return eq(a, b); }
bool structurally_equal(const Stmt& a, const Stmt& b) { return eq(a, b); }

bool structurally_equal(const Kernel& a, const Kernel& b) {
  if (a.name != b.name || a.kind != b.kind || a.annotations != b.annotations) return false;
  if (a.params.size() != b.params.size()) return false;
  for (std::size_t i = 0; i < a.params.size(); ++i)
    if (a.params[i].name != b.params[i].name || a.params[i].type_tag != b.params[i].type_tag)
      return false;
  if (a.launch_bounds.has_value() != b.launch_bounds.has_value()) return false;
  if (a.launch_bounds &&
      (a.launch_bounds->max_threads_per_block != b.launch_bounds->max_threads_per_block ||
       a.launch_bounds->min_blocks != b.launch_bounds->min_blocks))
    return false;
  return eq_body(a.body, b.body);
}

bool structurally_equal(const Module& a, const Module& b) {
  if (a.name != b.name || a.imported_names != b.imported_names) return false;
  if (a.decls.size() != b.decls.size()) return false;
  for (std::size_t i = 0; i < a.decls.size(); ++i)
    if (a.decls[i].name != b.decls[i].name || a.decls[i].type_tag != b.decls[i].type_tag)
      return false;
  if (a.kernels.size() != b.kernels.size()) return false;
  for (std::size_t i = 0; i < a.kernels.size(); ++i)
    if (!structurally_equal(a.kernels[i], b.kernels[i])) return false;
  return true;
}

const Kernel* find_kernel(const Module& m, const std::string& name) {
  for (const auto& k : m.kernels)
    if (k.name == name) return &k;
  return nullptr;
}

void walk_stmts(const std::vector<Stmt>& body, const std::function<void(const Stmt&)>& fn) {
  for (const auto& s : body) {
    fn(s);
    std::visit(
        Overload{
            [&](const ForAll& n) { walk_stmts(n.body, fn); },
            [&](const For& n) { walk_stmts(n.body, fn); },
            [&](const While& n) { walk_stmts(n.body, fn); },
            [&](const If& n) {
              walk_stmts(n.then_stmts, fn);
              walk_stmts(n.else_stmts, fn);
            },
            [&](const Atomic& n) {
              walk_stmts(n.locked, fn);
              if (n.failed) walk_stmts(*n.failed, fn);
            },
            [&](const Exclusive& n) {
              walk_stmts(n.locked, fn);
              if (n.failed) walk_stmts(*n.failed, fn);
            },
            [&](const Iterate& n) { walk_stmts(n.between_rounds, fn); },
            [&](const Pipe& n) { walk_stmts(n.body, fn); },
            [&](const auto&) {},
        },
        s.node);
  }
}

// ---------------------------------------------------------------------------
// Module invariants

namespace {

// Single-entry/single-exit check for CBlock text: these tokens would let the
// block jump out of itself.
const char* kForbiddenCBlockTokens[] = {"return", "goto", "break", "continue"};

bool contains_token(const std::string& code, const std::string& tok) {
  auto is_ident_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  std::size_t pos = 0;
  while ((pos = code.find(tok, pos)) != std::string::npos) {
    bool left_ok = pos == 0 || !is_ident_char(code[pos - 1]);
    std::size_t end = pos + tok.size();
    bool right_ok = end >= code.size() || !is_ident_char(code[end]);
    if (left_ok && right_ok) return true;
    pos = end;
  }
  return false;
}

}  // namespace

std::vector<Diagnostic> validate(const Module& m) {
  std::vector<Diagnostic> ds;
  std::map<std::string, int> seen;
  for (const auto& k : m.kernels) {
    if (++seen[k.name] == 2)
      ds.push_back(make_error("E007", "duplicate kernel name '" + k.name + "'", k.span));
    if (k.launch_bounds) {
      int mt = k.launch_bounds->max_threads_per_block;
      if (mt < 1 || mt > 1024)
        ds.push_back(make_error(
            "E011", "launch_bounds maxthreadsperblock must be in [1,1024], got " +
                        std::to_string(mt),
            k.span));
    }
  }
  for (const auto& k : m.kernels) {
    walk_stmts(k.body, [&](const Stmt& s) {
      if (const auto* cb = std::get_if<CBlock>(&s.node)) {
        for (const char* tok : kForbiddenCBlockTokens)
          if (contains_token(cb->code, tok))
            ds.push_back(make_error(
                "E012", std::string("CBlock code must be single-entry single-exit; '") + tok +
                            "' is not allowed",
                s.span));
      } else if (const auto* inv = std::get_if<Invoke>(&s.node)) {
        if (!find_kernel(m, inv->kernel))
          ds.push_back(
              make_error("E008", "Invoke of unknown kernel '" + inv->kernel + "'", s.span));
      } else if (const auto* it = std::get_if<Iterate>(&s.node)) {
        if (!find_kernel(m, it->kernel))
          ds.push_back(
              make_error("E008", "Iterate of unknown kernel '" + it->kernel + "'", s.span));
      }
    });
  }
  return ds;
}

}  // namespace irgl::ast
