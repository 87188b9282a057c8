#ifndef CYCLERECON_INSTANCE_IO_HPP
#define CYCLERECON_INSTANCE_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "cyclerecon/orientation.hpp"

namespace cyclerecon {

// A reconfiguration instance as stored on disk. Line-oriented text:
//
//   D <orientation string>     the target cycle
//   C <orientation string>     the source cycle
//   phi <comma-separated ints> first map, 0-based target vertices
//   psi <comma-separated ints> second map
//
// '#' starts a comment, blank lines are ignored. Image lists must have one
// entry per source vertex.
struct InstanceFile {
  OrientationString target;
  OrientationString source;
  std::vector<int> phi;
  std::vector<int> psi;
};

// Accepts comma- and/or whitespace-separated decimal integers.
std::vector<int> parse_image_list(std::string_view text);

// Parse errors carry "name:line:" prefixes.
InstanceFile parse_instance_text(std::string_view text,
                                 const std::string& name = "<input>");

InstanceFile load_instance_file(const std::string& path);

}  // namespace cyclerecon

#endif
