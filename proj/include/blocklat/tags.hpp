#ifndef BLOCKLAT_TAGS_HPP
#define BLOCKLAT_TAGS_HPP

#include <string>

#include "blocklat/group.hpp"

namespace blocklat
{

// Short isomorphism-type label for report output: "1", "C4", "V4",
// "C2xC6", "S3", "D8", "Q8", "A4", "S4", "SL(2,3)", "A5", "F20", falling
// back to "G<order>". Labels are heuristic names, not certified types.
std::string structure_tag(GroupTable const &g);

} // namespace blocklat

#endif // BLOCKLAT_TAGS_HPP
