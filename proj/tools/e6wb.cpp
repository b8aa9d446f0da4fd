#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "e6wb/report.hpp"

namespace {

int write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for sl(3,O) = e6(52,26)"};
  app.require_subcommand(1);

  std::string section;
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--section", section, "run a single section")
      ->check(CLI::IsMember(e6wb::section_names()));

  std::string which, format = "text";
  CLI::App* tables = app.add_subcommand("tables", "print a computed table");
  tables->add_option("which", which, "table name")
      ->required()
      ->check(CLI::IsMember(e6wb::table_names()));
  tables->add_option("--format", format, "text or json")
      ->check(CLI::IsMember(std::vector<std::string>{"text", "json"}));

  std::string chains_out;
  CLI::App* chains = app.add_subcommand("chains", "write the inclusion graph as DOT");
  chains->add_option("--out", chains_out, "output .dot path")->required();

  std::string dump_out;
  CLI::App* dump = app.add_subcommand("dump", "write the full verification report as JSON");
  dump->add_option("--out", dump_out, "output .json path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      std::vector<std::string> only;
      if (!section.empty()) only.push_back(section);
      std::vector<e6wb::Section> sections = e6wb::run_verify(only);
      std::cout << e6wb::render_text(sections);
      return e6wb::all_passed(sections) ? 0 : 1;
    }
    if (tables->parsed()) {
      std::cout << e6wb::render_table(which, format == "json");
      return 0;
    }
    if (chains->parsed()) {
      const e6wb::Workspace& w = e6wb::Workspace::get();
      return write_file(chains_out, e6wb::to_dot(w.graph()));
    }
    if (dump->parsed()) {
      std::vector<e6wb::Section> sections = e6wb::run_verify({});
      int rc = write_file(dump_out, e6wb::render_json(sections));
      if (rc != 0) return rc;
      return e6wb::all_passed(sections) ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
