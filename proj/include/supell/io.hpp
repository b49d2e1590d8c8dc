#ifndef SUPELL_IO_HPP
#define SUPELL_IO_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "supell/construct.hpp"
#include "supell/search.hpp"

namespace supell {

inline constexpr const char* kArtifactVersion = "1.0.0";

// Run manifest: emitted at the top of every output.  Identical manifests
// (minus the timestamp line) imply byte-identical bodies.
void write_manifest(std::ostream& os, const std::string& command,
                    const std::vector<std::pair<std::string, std::string>>& args,
                    const Field& field, bool with_timestamp = true);

// One point per line, whitespace-separated key=value fields.
std::string format_point(const RationalPoint& pt, bool porcelain);
std::string format_found_point(const FoundPoint& pt, bool porcelain);

struct PointRecord {
    RatFunc x, y;
    std::map<std::string, std::string> fields;
};

// Reads point lines back; ignores comments (#) and blank lines.
std::vector<PointRecord> read_points(std::istream& is, const FieldPtr& f);

// CurveParams config, plain-text key/value; round-trips bit-exactly.
void write_params(std::ostream& os, const CurveParams& params);
CurveParams read_params(std::istream& is);

}  // namespace supell

#endif
