#ifndef PADELAB_TOOLS_COMMANDS_HPP
#define PADELAB_TOOLS_COMMANDS_HPP

#include <string>

#include "cli_options.hpp"

namespace padelab::cli {

std::string run_table(const GlobalOptions& global, const TableOptions& options);
std::string run_membership(const GlobalOptions& global, const MembershipOptions& options);
std::string run_construct(const GlobalOptions& global, const ConstructOptions& options);
std::string run_converge(const GlobalOptions& global, const ConvergeOptions& options);

} // namespace padelab::cli

#endif
