#include "stirlab/table.hpp"

#include <json.hpp>

#include <sstream>

#include "stirlab/analysis.hpp"
#include "stirlab/factorial.hpp"
#include "stirlab/format.hpp"

namespace stirlab {

namespace {

const std::vector<long>& preset_ns() {
  static const std::vector<long> ns = {2,    5,     10,  20,     50,
                                       100,  1000, 10000, 1000000};
  return ns;
}

// Cells whose commonly tabulated values disagree with the computed ones
// (trend-consistent recomputation supports the values this tool prints).
struct FlaggedCell {
  MethodId method;
  long n;
  const char* tabulated;
};
const std::vector<FlaggedCell>& flagged_cells() {
  static const std::vector<FlaggedCell> cells = {
      {MethodId::S, 100, "8.3e-1"},
      {MethodId::N, 100, "6.5e12"},
      {MethodId::L4, 2, "1.4e-2"},
      {MethodId::L4, 5, "3.5e-4"},
      {MethodId::W, 50, "2.1e-10"},
  };
  return cells;
}

const FlaggedCell* find_flag(MethodId m, long n) {
  for (const auto& c : flagged_cells()) {
    if (c.method == m && c.n == n) return &c;
  }
  return nullptr;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

TableRequest table_preset(TableKind kind) {
  TableRequest req;
  req.table = kind;
  req.format = TableFormat::markdown;
  req.sig_figs = 2;
  switch (kind) {
    case TableKind::T1:
      req.methods = {MethodId::S, MethodId::B, MethodId::G};
      req.ns = preset_ns();
      break;
    case TableKind::T2:
      req.methods = {MethodId::M, MethodId::R, MethodId::L4, MethodId::N};
      req.ns = preset_ns();
      break;
    case TableKind::T3:
      req.methods = {MethodId::W, MethodId::HV, MethodId::C, MethodId::SAM};
      req.ns = preset_ns();
      break;
    case TableKind::custom:
      break;
  }
  return req;
}

std::string render_table(const TableRequest& req, const PrecisionContext& ctx) {
  ctx.check();
  if (req.methods.empty() || req.ns.empty()) {
    throw DomainError("render_table: methods and ns must be nonempty");
  }
  if (req.sig_figs < 1) {
    throw DomainError("render_table: sig_figs must be >= 1");
  }
  for (long n : req.ns) {
    if (n < 1) throw DomainError("render_table: ns must be positive");
  }

  // Evaluate every cell first (row-major); rendering below is pure string
  // assembly over these records.
  std::vector<std::vector<ErrorRecord>> cells;
  std::vector<std::string> fact_strs;
  cells.reserve(req.ns.size());
  for (long n : req.ns) {
    fact_strs.push_back(format_bignat(factorial_exact(n)));
    std::vector<ErrorRecord> row;
    row.reserve(req.methods.size());
    for (MethodId m : req.methods) {
      row.push_back(percentage_error(m, n, ctx));
    }
    cells.push_back(std::move(row));
  }

  std::ostringstream out;
  switch (req.format) {
    case TableFormat::markdown: {
      out << "n | n!";
      for (MethodId m : req.methods) out << " | " << method_name(m);
      out << "\n--- | ---";
      for (size_t i = 0; i < req.methods.size(); ++i) out << " | ---";
      out << "\n";
      std::vector<std::string> notes;
      for (size_t r = 0; r < req.ns.size(); ++r) {
        out << req.ns[r] << " | " << fact_strs[r];
        for (size_t c = 0; c < req.methods.size(); ++c) {
          out << " | "
              << format_value(HPReal::abs(cells[r][c].pct_error),
                              req.sig_figs);
          if (const FlaggedCell* fc = find_flag(req.methods[c], req.ns[r])) {
            out << "*";
            notes.push_back("* n=" + std::to_string(fc->n) + ", " +
                            method_name(fc->method) +
                            ": commonly tabulated as " + fc->tabulated +
                            "; the computed value is shown.");
          }
        }
        out << "\n";
      }
      for (const std::string& note : notes) out << note << "\n";
      break;
    }
    case TableFormat::csv: {
      out << "n,n!";
      for (MethodId m : req.methods) out << ',' << csv_field(method_name(m));
      out << "\n";
      for (size_t r = 0; r < req.ns.size(); ++r) {
        out << req.ns[r] << ',' << csv_field(fact_strs[r]);
        for (size_t c = 0; c < req.methods.size(); ++c) {
          out << ','
              << csv_field(format_value(HPReal::abs(cells[r][c].pct_error),
                                        req.sig_figs));
        }
        out << "\n";
      }
      break;
    }
    case TableFormat::json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (size_t r = 0; r < req.ns.size(); ++r) {
        for (size_t c = 0; c < req.methods.size(); ++c) {
          nlohmann::ordered_json cell;
          cell["n"] = req.ns[r];
          cell["method"] = method_name(req.methods[c]);
          cell["pct_error_decimal_string"] = cells[r][c].pct_error.to_decimal();
          cell["bits_used"] = cells[r][c].bits_used;
          arr.push_back(std::move(cell));
        }
      }
      out << arr.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace stirlab
