// Batch front end.  Every subcommand produces a Report (tables plus named
// checks) rendered as TSV or as JSON with "schema": 1.  Exit codes: 0 all
// checks pass, 1 a check failed, 2 usage or data error.

#ifndef CHS_CLI_HPP_
#define CHS_CLI_HPP_

#include "chs/core.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace chs {

struct RunConfig {
  std::string command;
  std::string datumPath;      // root-datum file
  std::string preset;         // alternative to datumPath
  std::string classificationPath;
  bool json = false;
  std::uint64_t seed = 0;
  int radius = 2;
  int samples = 100;
  int terms = 20;
  std::vector<int> levi;      // indres: restrict to this standard Levi
  bool hasLevi = false;
  bool finite = false, affine = false;                          // blocks
  bool facetcat = false, colim = false, fibers = false, basepoints = false; // verify
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string command, datum;
  std::vector<Table> tables;
  std::vector<Check> checks;
  bool pass() const;
};

Report run_report(const RunConfig& cfg);
std::string render_tsv(const Report& r);
std::string render_json(const Report& r);

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace chs

#endif
