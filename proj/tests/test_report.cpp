// Rendering: the total number-format rule, the count column, table assembly
// in all three formats, and the CLI binary driven as a subprocess.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "stirlab/factorial.hpp"
#include "stirlab/format.hpp"
#include "stirlab/precision.hpp"
#include "stirlab/table.hpp"

using namespace stirlab;

namespace {

HPReal dec(const std::string& s, long bits = 256) {
  return HPReal::of_decimal(s, bits);
}

const PrecisionContext kCtx{};

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<std::string> split_csv_row(const std::string& line) {
  // Good enough for this suite: none of our fields contain quoted commas.
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) out.push_back(field);
  return out;
}

struct CliResult {
  int status = -1;
  std::string out;
};

// Runs the CLI through /bin/sh; `prefix` may carry environment assignments.
CliResult run_cli(const std::string& args, const std::string& prefix = "") {
  std::string cmd = prefix + " " + STIRLAB_CLI_PATH + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  size_t k = 0;
  while ((k = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, k);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

}  // namespace

TEST_CASE("format_value: the total number-format rule") {
  CHECK(format_value(dec("0"), 2) == "0");
  CHECK(format_value(dec("-0"), 2) == "0");
  CHECK(format_value(dec("1"), 2) == "1.0");
  CHECK(format_value(dec("-1"), 2) == "-1.0");
  CHECK(format_value(dec("4.049782425550842"), 2) == "4.0");
  CHECK(format_value(dec("-4.049782425550842"), 2) == "-4.0");
  CHECK(format_value(dec("1.665536178"), 2) == "1.7");
  CHECK(format_value(dec("17"), 2) == "17");
  CHECK(format_value(dec("17.2"), 2) == "17");
  CHECK(format_value(dec("99.4"), 2) == "99");
  CHECK(format_value(dec("99.9"), 2) == "1.0e2");
  CHECK(format_value(dec("100"), 2) == "1.0e2");
  CHECK(format_value(dec("123"), 3) == "1.23e2");
  CHECK(format_value(dec("9.99"), 2) == "10");
  CHECK(format_value(dec("0.99"), 2) == "9.9e-1");
  CHECK(format_value(dec("0.0999"), 2) == "1.0e-1");
  CHECK(format_value(dec("0.13184721694"), 2) == "1.3e-1");
  CHECK(format_value(dec("8.587208075e-6"), 2) == "8.6e-6");
  CHECK(format_value(dec("8.587208075e-6"), 3) == "8.59e-6");
  CHECK(format_value(dec("4.167052281396189e-23"), 3) == "4.17e-23");
  CHECK(format_value(dec("4.167052281396189e-23"), 2) == "4.2e-23");
  CHECK(format_value(dec("1.974564098e-10"), 2) == "2.0e-10");
  CHECK(format_value(dec("1.269283440533e-50"), 2) == "1.3e-50");
  CHECK(format_value(dec("1e54"), 2) == "1.0e54");
  CHECK_THROWS_AS(format_value(HPReal(), 2), FormatError);  // NaN
  CHECK_THROWS_AS(format_value(dec("1"), 0), FormatError);
}

TEST_CASE("format_bignat: count column") {
  CHECK(format_bignat(BigNat(2UL)) == "2");
  CHECK(format_bignat(BigNat(9UL)) == "9");
  CHECK(format_bignat(BigNat(24UL)) == "24");
  CHECK(format_bignat(BigNat(120UL)) == "1.2e2");
  CHECK(format_bignat(factorial_exact(5)) == "1.2e2");
  CHECK(format_bignat(factorial_exact(10)) == "3.6e6");
  CHECK(format_bignat(factorial_exact(20)) == "2.4e18");
  CHECK(format_bignat(factorial_exact(50)) == "3.0e64");
  CHECK(format_bignat(factorial_exact(100)) == "9.3e157");
  CHECK(format_bignat(factorial_exact(1000)) == "4.0e2567");
  CHECK(format_bignat(factorial_exact(10000)) == "2.8e35659");
  CHECK(format_bignat(factorial_exact(1000000)) == "8.3e5565708");
}

TEST_CASE("render_table: markdown rows match the reference tables") {
  std::string t1 = render_table(table_preset(TableKind::T1), kCtx);
  auto l1 = split_lines(t1);
  REQUIRE(l1.size() == 12);  // header, rule, 9 rows, 1 footnote
  CHECK(l1[0] == "n | n! | S | B | G");
  CHECK(l1[1] == "--- | --- | --- | --- | ---");
  CHECK(l1[2] == "2 | 2 | 4.0 | 1.7 | 1.3e-1");
  CHECK(l1[7] == "100 | 9.3e157 | 8.3e-2* | 4.1e-2 | 6.9e-5");
  CHECK(l1[10] == "1000000 | 8.3e5565708 | 8.3e-6 | 4.2e-6 | 6.9e-13");
  CHECK(l1[11] ==
        "* n=100, S: commonly tabulated as 8.3e-1; the computed value is "
        "shown.");

  std::string t3 = render_table(table_preset(TableKind::T3), kCtx);
  auto l3 = split_lines(t3);
  REQUIRE(l3.size() == 12);
  CHECK(l3[0] == "n | n! | W | HV | C | SAM");
  CHECK(l3[6] == "50 | 3.0e64 | 2.0e-10* | 2.3e-12 | 5.3e-14 | 6.3e-14");
  CHECK(l3[10] ==
        "1000000 | 8.3e5565708 | 6.2e-32 | 3.7e-38 | 4.2e-44 | 1.3e-50");
}

TEST_CASE("render_table: degenerate custom request in csv") {
  TableRequest req;
  req.methods = {MethodId::S};
  req.ns = {1};
  req.format = TableFormat::csv;
  req.sig_figs = 2;
  CHECK(render_table(req, kCtx) == "n,n!,S\n1,1,7.8\n");
}

TEST_CASE("render_table: input validation") {
  TableRequest req;
  req.methods = {MethodId::S};
  req.ns = {1};
  req.sig_figs = 0;
  CHECK_THROWS_AS(render_table(req, kCtx), DomainError);
  req.sig_figs = 2;
  req.ns = {};
  CHECK_THROWS_AS(render_table(req, kCtx), DomainError);
  req.ns = {0};
  CHECK_THROWS_AS(render_table(req, kCtx), DomainError);
  req.ns = {1};
  req.methods = {};
  CHECK_THROWS_AS(render_table(req, kCtx), DomainError);
}

TEST_CASE("render_table: json schema, csv agreement, determinism") {
  TableRequest req = table_preset(TableKind::T1);
  req.ns = {2, 5, 10};
  req.format = TableFormat::json;
  std::string js = render_table(req, kCtx);
  auto arr = nlohmann::json::parse(js);
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 9);
  for (const auto& cell : arr) {
    REQUIRE(cell.contains("n"));
    REQUIRE(cell.contains("method"));
    REQUIRE(cell.contains("pct_error_decimal_string"));
    REQUIRE(cell.contains("bits_used"));
    CHECK(cell["n"].is_number_integer());
    CHECK(cell["method"].is_string());
    CHECK(cell["pct_error_decimal_string"].is_string());
    CHECK(cell["bits_used"].is_number_integer());
    CHECK(cell["bits_used"].get<long>() > kCtx.bits);
  }
  CHECK(arr[0]["n"].get<long>() == 2);
  CHECK(arr[0]["method"].get<std::string>() == "S");
  // Key order is part of the contract.
  size_t pn = js.find("\"n\"");
  size_t pm = js.find("\"method\"");
  size_t pp = js.find("\"pct_error_decimal_string\"");
  size_t pb = js.find("\"bits_used\"");
  CHECK(pn < pm);
  CHECK(pm < pp);
  CHECK(pp < pb);

  // The csv cells are the json values rounded to the table's precision.
  req.format = TableFormat::csv;
  std::string csv = render_table(req, kCtx);
  auto lines = split_lines(csv);
  REQUIRE(lines.size() == 4);
  size_t cell_idx = 0;
  for (size_t r = 1; r < lines.size(); ++r) {
    auto fields = split_csv_row(lines[r]);
    REQUIRE(fields.size() == 5);  // n, n!, then 3 methods
    for (size_t c = 2; c < fields.size(); ++c, ++cell_idx) {
      HPReal v = HPReal::of_decimal(
          arr[cell_idx]["pct_error_decimal_string"].get<std::string>(), 512);
      CHECK(format_value(HPReal::abs(v), req.sig_figs) == fields[c]);
    }
  }

  // Determinism: rendering twice is byte-identical.
  CHECK(render_table(req, kCtx) == csv);
  req.format = TableFormat::json;
  CHECK(render_table(req, kCtx) == js);
}

TEST_CASE("cli: error subcommand prints reference values") {
  CliResult r = run_cli("error --method R --n 10");
  CHECK(r.status == 0);
  CHECK(r.out.find("8.6e-6") != std::string::npos);
  CliResult r3 = run_cli("error --method R --n 10 --digits 3");
  CHECK(r3.status == 0);
  CHECK(r3.out.find("8.59e-6") != std::string::npos);
  CliResult s2 = run_cli("error --method S --n 2");
  CHECK(s2.status == 0);
  CHECK(s2.out.find("4.0") != std::string::npos);
}

TEST_CASE("cli: theta subcommand reports value and bounds") {
  CliResult r = run_cli("theta --n 1");
  CHECK(r.status == 0);
  CHECK(r.out.find("0.3359287402") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("cli: order and fit-a subcommands") {
  CliResult r = run_cli("order --method C --ns 1000,10000,1000000");
  CHECK(r.status == 0);
  CHECK(r.out.find("-6.9999") != std::string::npos);
  CliResult f = run_cli("fit-a --ns 10,100");
  CHECK(f.status == 0);
  CHECK(f.out.find("0.45279656718366084806") != std::string::npos);
  CHECK(f.out.find("380279456577/722091376690") != std::string::npos);
}

TEST_CASE("cli: table subcommand equals the library rendering") {
  CliResult r = run_cli("table --which 2");
  CHECK(r.status == 0);
  CHECK(r.out == render_table(table_preset(TableKind::T2), kCtx));
  CliResult again = run_cli("table --which 2");
  CHECK(again.out == r.out);  // deterministic end to end
}

TEST_CASE("cli: usage errors exit 2, numeric failures exit 1") {
  CHECK(run_cli("error --method XX --n 10").status == 2);
  CHECK(run_cli("error --method R --n 0").status == 2);
  CHECK(run_cli("error --method R").status == 2);
  CHECK(run_cli("order --method R --ns 10,abc").status == 2);
  CHECK(run_cli("order --method R --ns 1000,100,10").status == 2);
  CHECK(run_cli("order --method R --ns 10,100").status == 2);
  CHECK(run_cli("--bits 64 error --method R --n 10").status == 2);
  CHECK(run_cli("nosuchcommand").status == 2);
  CHECK(run_cli("").status == 2);
  // Numeric domain failure, not a usage error: fit-a needs n >= 10.
  CHECK(run_cli("fit-a --ns 5,15").status == 1);
}

TEST_CASE("cli: STIRLAB_BITS environment variable") {
  CHECK(run_cli("error --method R --n 10", "STIRLAB_BITS=abc").status == 2);
  CHECK(run_cli("error --method R --n 10", "STIRLAB_BITS=64").status == 2);
  CliResult hi = run_cli("table --which 1 --format json", "STIRLAB_BITS=512");
  CHECK(hi.status == 0);
  CliResult def = run_cli("table --which 1 --format json");
  CHECK(def.status == 0);
  auto jhi = nlohmann::json::parse(hi.out);
  auto jdef = nlohmann::json::parse(def.out);
  CHECK(jhi[0]["bits_used"].get<long>() > jdef[0]["bits_used"].get<long>());
  CHECK(jhi[0]["bits_used"].get<long>() > 512);
  // An explicit flag wins over the environment.
  CliResult flag =
      run_cli("--bits 384 table --which 1 --format json", "STIRLAB_BITS=512");
  CHECK(flag.status == 0);
  CHECK(nlohmann::json::parse(flag.out)[0]["bits_used"].get<long>() ==
        jdef[0]["bits_used"].get<long>());
}

TEST_CASE("cli: selftest passes") {
  CliResult r = run_cli("selftest");
  CHECK(r.status == 0);
  CHECK(r.out.find("[ok]") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
}
