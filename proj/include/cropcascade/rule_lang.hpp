#pragma once

// Phenological decision rules: a small expression language over windowed
// aggregates of spectral index series.
//
//   rule       := [ "class" NAME ] expr
//   expr       := and_expr { "or" and_expr }
//   and_expr   := not_expr { "and" not_expr }
//   not_expr   := "not" not_expr | comparison
//   comparison := sum [ ("<" | "<=" | ">" | ">=" | "==" | "!=") sum ]
//   sum        := product { ("+" | "-") product }
//   product    := unary { "*" unary }
//   unary      := "-" unary | primary
//   primary    := NUMBER | INDEX | aggregate | "(" expr ")"
//   aggregate  := ("max" | "min" | "tmax" | "tmin") "(" expr "," INT "," INT ")"
//               | "count" "(" expr "," INT "," INT ")"
//               | ("pctl" | "tq") "(" expr "," NUMBER "," INT "," INT ")"
//
// Index names are only legal inside an aggregate; aggregates do not nest.
// "#" starts a comment that runs to the end of the line.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cropcascade/error.hpp"
#include "cropcascade/indices.hpp"
#include "cropcascade/timeseries.hpp"

namespace cropcascade::rules {

struct SourcePos {
    int line = 1;
    int column = 1;
};

class ParseError : public Error {
public:
    ParseError(SourcePos pos, std::string message, std::vector<std::string> expected = {});
    /// Same error, prefixed with the file it came from.
    ParseError(const std::string& source, const ParseError& inner);

    SourcePos pos() const { return pos_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    SourcePos pos_;
    std::vector<std::string> expected_;
};

enum class AggKind { max, min, count, pctl, tmax, tmin, tq };
enum class UnaryOp { neg, logical_not };
enum class BinaryOp { add, sub, mul, lt, le, gt, ge, eq, ne, logical_and, logical_or };

std::string_view to_string(AggKind kind);
std::string_view to_string(BinaryOp op);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Number {
    double value = 0.0;
};
struct IndexRef {
    IndexKind kind = IndexKind::NDVI;
};
struct Aggregate {
    AggKind kind = AggKind::max;
    ExprPtr arg;
    double percent = 0.0;  // pctl / tq only
    DoyWindow window;
};
struct Unary {
    UnaryOp op = UnaryOp::neg;
    ExprPtr operand;
};
struct Binary {
    BinaryOp op = BinaryOp::add;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct Expr {
    std::variant<Number, IndexRef, Aggregate, Unary, Binary> node;
    SourcePos pos;
};

ExprPtr make_number(double v);
ExprPtr make_index(IndexKind kind);
ExprPtr make_aggregate(AggKind kind, ExprPtr arg, DoyWindow window, double percent = 0.0);
ExprPtr make_unary(UnaryOp op, ExprPtr operand);
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);

/// Structural equality; source positions are ignored.
bool equal(const Expr& a, const Expr& b);

/// A parsed, type-checked rule. Immutable after construction.
struct RuleProgram {
    std::string name;
    std::string class_label;
    ExprPtr root;

    /// Index kinds referenced anywhere in the rule.
    std::vector<IndexKind> indices() const;
    /// Every aggregate node in evaluation (pre-)order.
    std::vector<const Aggregate*> aggregates() const;
};

bool operator==(const RuleProgram& a, const RuleProgram& b);

/// Parses rule text. Throws ParseError with line/column on syntax, name, window
/// or type errors.
RuleProgram parse_rule(std::string_view text, std::string name = {});

/// Checks a hand-built tree the same way the parser does. Throws ParseError.
void type_check(const RuleProgram& program);

/// Canonical source text; parse_rule(print_rule(p)) == p.
std::string print_rule(const RuleProgram& program);
std::string print_expr(const Expr& expr);

/// Everything a rule may read at one pixel.
struct PixelBundle {
    const PixelSeries* current = nullptr;
    const PixelSeries* prior = nullptr;  // optional prior-year series
    IndexParams params;
};

/// Evaluates the rule at one pixel. Aggregates see only valid observations in
/// their window; a window without any makes the whole rule false. Throws
/// InvalidInput when the current-year series cannot provide a referenced index.
bool eval_rule(const RuleProgram& program, const PixelBundle& pixel);

/// Linear-interpolation percentile of an unsorted sample (p in [0, 100]).
double percentile(std::vector<double> values, double p);

// Rule files and the shipped library.

RuleProgram load_rule_file(const std::string& path);

/// Every shipped rule keyed by name (e.g. "rice_zhijiang"). Rule text is
/// embedded at build time from the rules/ directory.
std::map<std::string, RuleProgram> builtin_rules();
/// Raw source text of the shipped rules keyed by name.
const std::map<std::string, std::string>& builtin_rule_sources();

}  // namespace cropcascade::rules
