#ifndef BLOCKLAT_TESTS_HELPERS_HPP
#define BLOCKLAT_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "blocklat/group.hpp"
#include "blocklat/perm.hpp"

namespace blocklat::test
{

inline std::string data_path(std::string const &name)
{
  return std::string(BLOCKLAT_DATA_DIR) + "/" + name;
}

inline GroupTable load(std::string const &name)
{
  return close(read_group_file(data_path("groups/" + name + ".grp")));
}

inline Permutation cyc(std::string const &text, std::size_t degree)
{
  return parse_cycles(text, degree);
}

inline GroupTable group(std::size_t degree,
                        std::vector<std::string> const &gens)
{
  GroupSpec spec{degree, {}};
  for (auto const &g : gens)
    spec.generators.push_back(parse_cycles(g, degree));
  return close(spec);
}

} // namespace blocklat::test

#endif // BLOCKLAT_TESTS_HELPERS_HPP
