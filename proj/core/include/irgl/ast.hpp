#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "irgl/box.hpp"
#include "irgl/diag.hpp"

// The IrGL abstract syntax tree. A Module holds global declarations and
// kernels; kernel bodies are built from a closed statement variant covering
// the parallel kernel constructs (ForAll, Atomic, Exclusive,
// SyncRunningThreads, Retry/Respawn, ReduceAndReturn), the orchestration
// constructs (Invoke, Iterate, Pipe), plain control flow, worklist
// pop/push, and CBlocks of straight-line operator code.
//
// All nodes are value types; copying a Module deep-copies the whole tree.
// Nodes are immutable by convention once a module has been analyzed.

namespace irgl::ast {

// ---------------------------------------------------------------------------
// Expressions

enum class UnOp { Neg, Not };
enum class BinOp { Add, Sub, Mul, Div, Mod, Lt, Le, Gt, Ge, Eq, Ne, And, Or };

struct Expr;

struct IntLit {
  long long value = 0;
};
struct FloatLit {
  double value = 0;
};
struct BoolLit {
  bool value = false;
};
struct Ident {
  std::string name;
};
// Only reaches the interpreter/codegen as a printf format argument; stores
// the text between the quotes with escape sequences unprocessed.
struct StrLit {
  std::string value;
};
struct Unary {
  UnOp op{};
  Box<Expr> operand;
};
struct Binary {
  BinOp op{};
  Box<Expr> lhs;
  Box<Expr> rhs;
};
struct Index {
  Box<Expr> base;
  Box<Expr> index;
};
struct Field {
  Box<Expr> base;
  std::string field;
};
// Calls cover both builtin functions (edges(n), dst(e), printf(...)) and
// method-style graph accessors (graph.edges(n)); the callee is an Ident or
// a Field chain. Meaning is assigned by the interpreter and codegen.
struct Call {
  Box<Expr> callee;
  std::vector<Expr> args;
};

struct Expr {
  std::variant<IntLit, FloatLit, BoolLit, StrLit, Ident, Unary, Binary, Index, Field, Call> node;
  SourceSpan span;
};

const char* un_op_token(UnOp op);
const char* bin_op_token(BinOp op);

// Prints an expression in C-like concrete syntax (the frontend grammar).
std::string to_string(const Expr& e);

// ---------------------------------------------------------------------------
// Statements

enum class ForAllMapping { Consecutive, Blocked };
enum class Reduction { Any, All };
enum class CondCombiner { And, Or };

const char* to_string(Reduction r);

struct Stmt;

// Worklist initialization attached to a Pipe or standalone Iterate: buffer
// capacity plus either a list of scalar seed expressions or an
// (array, length) pair to load from.
struct WorklistInit {
  struct Scalars {
    std::vector<Expr> items;
  };
  struct FromArray {
    Expr array;
    Expr length;
  };
  Expr size;
  std::variant<Scalars, FromArray> source;
};

// Straight-line operator code. `code` is the verbatim source text (one or
// more mini-language statements); reads/writes are the referenced identifier
// sets, either derived by the frontend or supplied by annotation. The text is
// single-entry single-exit: return/goto/break/continue are rejected.
struct CBlock {
  std::string code;
  std::vector<std::string> reads;   // sorted, unique
  std::vector<std::string> writes;  // sorted, unique
};

struct ForAll {
  std::string var;
  Expr iterator;
  std::vector<Stmt> body;
  ForAllMapping mapping = ForAllMapping::Consecutive;
};

struct For {
  std::string var;
  Expr iterator;
  std::vector<Stmt> body;
};

struct While {
  Expr cond;
  std::vector<Stmt> body;
};

struct If {
  Expr cond;
  std::vector<Stmt> then_stmts;
  std::vector<Stmt> else_stmts;
};

// Atomic section under a single lock. Without `failed` the form is blocking;
// with `failed` it attempts once and runs the else-statements on failure.
struct Atomic {
  Expr lock;
  std::vector<Stmt> locked;
  std::optional<std::vector<Stmt>> failed;
};

// Multi-lock exclusive section. `locks` names the lock indices to claim for
// `object`: either the first `count` elements of an array, or the values
// yielded by an array iterator. Single attempt; never blocks.
struct Exclusive {
  enum class LockSource { Array, ArrayIterator };
  Expr object;
  Expr count;
  LockSource lock_source = LockSource::Array;
  Expr locks;
  std::vector<Stmt> locked;
  std::optional<std::vector<Stmt>> failed;
};

struct SyncRunningThreads {};

struct Retry {
  Expr item;
};
struct Respawn {
  Expr item;
};

struct ReduceAndReturn {
  Expr value;
};

struct Invoke {
  std::string kernel;
  std::vector<Expr> args;
  std::optional<Reduction> reduction;
};

struct IterateCond {
  enum class Mode { While, Until };
  Mode mode = Mode::While;
  Reduction reduction = Reduction::Any;
};

struct ExtraCond {
  Expr cond;
  CondCombiner combiner = CondCombiner::Or;
};

struct Iterate {
  std::string kernel;
  std::vector<Expr> args;
  std::optional<IterateCond> cond;
  std::optional<WorklistInit> initial;
  std::optional<ExtraCond> extra_cond;
  std::vector<Stmt> between_rounds;
};

struct Pipe {
  bool once = false;
  std::optional<WorklistInit> wlinit;
  std::vector<Stmt> body;
};

// v = wl.pop(i): random-access read of the incoming worklist.
struct WlPop {
  std::string var;
  Expr index;
};
// wl.push(v): append to the outgoing worklist.
struct WlPush {
  Expr value;
};

struct Stmt {
  std::variant<CBlock, ForAll, For, While, If, Atomic, Exclusive, SyncRunningThreads,
               Retry, Respawn, ReduceAndReturn, Invoke, Iterate, Pipe, WlPop, WlPush>
      node;
  SourceSpan span;
};

// One alternative per Table-1 construct plus control flow; consumers dispatch
// with std::visit so adding a variant breaks every switch at compile time.
inline constexpr std::size_t kStmtVariantCount =
    std::variant_size_v<decltype(Stmt::node)>;
static_assert(kStmtVariantCount == 16);

// ---------------------------------------------------------------------------
// Kernels and modules

enum class KernelKind { Plain, Host, Device };

const char* to_string(KernelKind k);

struct LaunchBounds {
  int max_threads_per_block = 0;  // in [1,1024]
  std::optional<int> min_blocks;  // advisory; parsed and passed through
};

struct Param {
  std::string name;
  std::string type_tag = "val";  // val | int | float | bool | graph | array
};

struct Kernel {
  std::string name;
  KernelKind kind = KernelKind::Plain;
  std::vector<Param> params;
  std::vector<Stmt> body;
  std::optional<LaunchBounds> launch_bounds;
  // Open key->value map for compiler-specific annotations. Recognized keys:
  // "fixed_block" (statically specialized block size, value is an integer).
  std::map<std::string, std::string> annotations;
  SourceSpan span;
};

struct GlobalDecl {
  std::string name;
  std::string type_tag = "val";
  SourceSpan span;
};

struct Module {
  std::string name;
  std::vector<GlobalDecl> decls;
  std::vector<Kernel> kernels;
  std::vector<std::string> imported_names;
};

// ---------------------------------------------------------------------------
// Queries and invariants

const Kernel* find_kernel(const Module& m, const std::string& name);

// Structural equality, ignoring source spans everywhere.
bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const Stmt& a, const Stmt& b);
bool structurally_equal(const Kernel& a, const Kernel& b);
bool structurally_equal(const Module& a, const Module& b);

// Checks the Module-level invariants that do not need full semantic
// analysis: unique kernel names, Invoke/Iterate targets resolving within the
// module, launch_bounds range, CBlock single-entry/single-exit tokens.
std::vector<Diagnostic> validate(const Module& m);

// Walks every statement in the kernel body (pre-order, including nested
// bodies), invoking fn on each.
void walk_stmts(const std::vector<Stmt>& body,
                const std::function<void(const Stmt&)>& fn);

}  // namespace irgl::ast
