#pragma once

#include <string>
#include <vector>

#include "e6wb/atlas.hpp"

namespace e6wb {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct Section {
  std::string name;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
};

// Shared immutable context, built once per process.
class Workspace {
 public:
  static const Workspace& get();

  const StructureContext& ctx() const { return ctx_; }
  const Involution& s() const { return s_; }
  const Involution& t() const { return t_; }
  const Involution& h() const { return h_; }
  const AtomDecomposition& atoms() const { return atoms_; }

  // Built on first use (catalog construction dominates the runtime).
  const Catalog& catalog() const;
  const InclusionGraph& graph() const;

 private:
  Workspace();
  StructureContext ctx_;
  Involution s_, t_, h_;
  AtomDecomposition atoms_;
};

// All verification section names, in report order.
const std::vector<std::string>& section_names();

// Runs the named sections (all when `only` is empty). Workers are capped by
// the E6WB_THREADS environment variable; output order is fixed regardless.
std::vector<Section> run_verify(const std::vector<std::string>& only);

bool all_passed(const std::vector<Section>& sections);

std::string render_text(const std::vector<Section>& sections);
std::string render_json(const std::vector<Section>& sections);

// Table printing for the `tables` subcommand.
const std::vector<std::string>& table_names();
std::string render_table(const std::string& which, bool json);

}  // namespace e6wb
