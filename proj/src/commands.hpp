#pragma once

#include <filesystem>
#include <iosfwd>

#include "gcn/experiment.hpp"

namespace gcn::detail {

int cmd_gen(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_play(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_solve(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_boxgame(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_ballsbins(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_arrange(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_formulas(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_estimate(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

// out_dir/<command>/<hash>, created on demand.
std::filesystem::path run_directory(const ExperimentConfig& cfg);
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace gcn::detail
