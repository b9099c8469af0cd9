#pragma once

#include <string>
#include <vector>

#include "stirlab/methods.hpp"
#include "stirlab/precision.hpp"

namespace stirlab {

enum class TableKind { T1, T2, T3, custom };
enum class TableFormat { markdown, csv, json };

// A table over methods x ns. The three presets share the row set
// {2, 5, 10, 20, 50, 100, 10^3, 10^4, 10^6}:
//   T1 = {S, B, G},  T2 = {M, R, L4, N},  T3 = {W, HV, C, SAM}.
struct TableRequest {
  TableKind table = TableKind::custom;
  std::vector<MethodId> methods;
  std::vector<long> ns;
  TableFormat format = TableFormat::markdown;
  int sig_figs = 2;
};

// Preset request for T1/T2/T3 (markdown, 2 significant figures).
TableRequest table_preset(TableKind kind);

// Renders the table: one row per n, first two columns n and n!, then
// |pct_error| per method. Markdown rows are " | "-joined without outer
// pipes; CSV is RFC-4180; JSON is an array of per-cell objects
// {n, method, pct_error_decimal_string, bits_used}. Markdown flags the five
// cells whose commonly tabulated values disagree with the computed ones.
// Deterministic for fixed inputs.
std::string render_table(const TableRequest& req, const PrecisionContext& ctx);

}  // namespace stirlab
