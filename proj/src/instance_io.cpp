#include "cyclerecon/instance_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace cyclerecon {

std::vector<int> parse_image_list(std::string_view text) {
  std::vector<int> out;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + token + "'");
    }
    if (used != token.size())
      throw std::invalid_argument("not an integer: '" + token + "'");
    out.push_back(value);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t')
      flush();
    else
      token.push_back(c);
  }
  flush();
  if (out.empty()) throw std::invalid_argument("empty image list");
  return out;
}

InstanceFile parse_instance_text(std::string_view text, const std::string& name) {
  std::optional<OrientationString> target, source;
  std::optional<std::vector<int>> phi, psi;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw std::invalid_argument(name + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string rest;
    std::getline(ls, rest);
    const auto start = rest.find_first_not_of(" \t");
    rest = start == std::string::npos ? std::string() : rest.substr(start);
    const auto stop = rest.find_last_not_of(" \t\r");
    if (stop != std::string::npos) rest.erase(stop + 1);
    try {
      if (key == "D") {
        target = OrientationString::parse(rest);
      } else if (key == "C") {
        source = OrientationString::parse(rest);
      } else if (key == "phi") {
        phi = parse_image_list(rest);
      } else if (key == "psi") {
        psi = parse_image_list(rest);
      } else {
        fail("unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  auto fail_file = [&](const std::string& msg) -> void {
    throw std::invalid_argument(name + ": " + msg);
  };
  if (!target) fail_file("missing 'D' line");
  if (!source) fail_file("missing 'C' line");
  if (!phi) fail_file("missing 'phi' line");
  if (!psi) fail_file("missing 'psi' line");
  if (phi->size() != source->size())
    fail_file("phi has " + std::to_string(phi->size()) + " entries, C has " +
              std::to_string(source->size()) + " vertices");
  if (psi->size() != source->size())
    fail_file("psi has " + std::to_string(psi->size()) + " entries, C has " +
              std::to_string(source->size()) + " vertices");
  return InstanceFile{std::move(*target), std::move(*source), std::move(*phi),
                      std::move(*psi)};
}

InstanceFile load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str(), path);
}

}  // namespace cyclerecon
