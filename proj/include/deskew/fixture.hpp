#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "deskew/error.hpp"
#include "deskew/pnm.hpp"

namespace deskew {

/// Pre-rendered glyph rasters checked into the repository, addressed by name
/// ("A-upright", "A-italic", ...). The manifest is a plain text file with one
/// "name path" pair per line, paths relative to the manifest's directory.
class FixtureSet {
public:
  static FixtureSet load(const std::string &dir) {
    FixtureSet set;
    set.dir_ = dir;
    std::ifstream in(dir + "/manifest.txt");
    if (!in)
      throw Error("cannot open fixture manifest in '" + dir + "'");
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#')
        continue;
      std::istringstream fields(line);
      std::string name, path;
      if (!(fields >> name >> path))
        throw Error("malformed manifest line: '" + line + "'");
      set.paths_[name] = path;
    }
    return set;
  }

  Grayscale render(const std::string &name) const {
    const auto it = paths_.find(name);
    if (it == paths_.end())
      throw UnknownFixtureError("unknown fixture '" + name + "'");
    return load_pnm_file(dir_ + "/" + it->second);
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    out.reserve(paths_.size());
    for (const auto &[name, path] : paths_)
      out.push_back(name);
    return out;
  }

  bool contains(const std::string &name) const { return paths_.count(name) != 0; }

private:
  std::string dir_;
  std::map<std::string, std::string> paths_;
};

} // namespace deskew
