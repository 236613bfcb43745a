#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arrchow/errors.hpp"

namespace arrchow {

// Bad flags or flag combinations; the front end exits with status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Request {
  std::string command;  // gamma | chow | fvector | tables | verify
  std::string family = "b";  // a | b | d | dns | file
  int n = 0;
  std::optional<int> s;
  std::string file;
  std::string method = "auto";  // auto | chains | closed | recursive | topegraph | separation
  std::string format = "text";  // text | json
  int jobs = 1;
  bool show_h = false;
  bool show_f = false;
  std::string dump_tope_graph;  // path, "-" for stdout
  std::string dump_chains;      // path, "-" for stdout
  std::string suite = "all";
  std::optional<int> n_max;
  std::string table = "all";  // gamma | chow | all
};

// Throws UsageError.  Returns std::nullopt after printing help to out.
std::optional<Request> parse_command_line(int argc, const char* const* argv, std::ostream& out);
void validate(const Request& req);

// Exit status: 0 success, 1 failed check or runtime error, 2 usage error.
int run(const Request& req, std::ostream& out, std::ostream& err);
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arrchow
