#ifndef INVCORR_IO_HPP_
#define INVCORR_IO_HPP_

#include <map>
#include <string>

#include "invcorr/correspondence.hpp"
#include "invcorr/rees.hpp"
#include "invcorr/set_ops.hpp"

namespace invcorr {

enum class FileKind {
  Semigroup,
  Set,
  Morita,
  Correspondence,
  McAlister,
  Hom,
  Presheaf,
};
const char* kind_name(FileKind k);
FileKind kind_from_name(const std::string& name);  // throws UNKNOWN_KIND

// Named registry of loaded structures. Fixture semigroups are always
// resolvable by name; loaded names must be unique.
struct Workspace {
  std::map<std::string, SgPtr> semigroups;
  std::map<std::string, RightSet> sets;
  std::map<std::string, LeftSet> left_sets;
  std::map<std::string, PartialMorita> moritas;
  std::map<std::string, Correspondence> correspondences;
  std::map<std::string, McAlisterFn> mcalisters;
  std::map<std::string, SemigroupHom> homs;

  SgPtr semigroup(const std::string& name) const;  // fixture or loaded
};

struct LoadedFile {
  FileKind kind;
  std::string name;
};

// Parses a file, validates it structurally, stores it in the workspace
// under its "name" (or the path stem), and returns what was loaded.
// Throws InputError with PARSE_ERROR line/column context on bad JSON.
LoadedFile load_file(Workspace& ws, const std::string& path,
                     const std::string& rename = "");
LoadedFile load_text(Workspace& ws, const std::string& text,
                     const std::string& fallback_name,
                     const std::string& rename = "");

// Lenient variant for `check`: malformed JSON and out-of-range tables
// still throw, but semantic failures (non-associative table, no unique
// generalized inverses, MF violations, bad hom) land in the report
// instead. The structure is stored only when the report is clean.
struct CheckedFile {
  FileKind kind;
  std::string name;
  CheckReport report;
  bool loaded = false;
};
CheckedFile check_file(Workspace& ws, const std::string& path);

// serializers; `inv` and derived data are never written, only recomputed
std::string semigroup_to_text(const std::string& name,
                              const InverseSemigroup& sg);
std::string table_to_text(const std::string& name, const MulTable& t);
std::string set_to_text(const std::string& name, const RightSet& u,
                        const std::string& sg_name);
std::string left_set_to_text(const std::string& name, const LeftSet& u,
                             const std::string& sg_name);
std::string morita_to_text(const std::string& name, const PartialMorita& m);
std::string correspondence_to_text(const std::string& name,
                                   const Correspondence& c);
std::string mcalister_to_text(const std::string& name, const McAlisterFn& p);

void write_file(const std::string& path, const std::string& content);

}  // namespace invcorr

#endif  // INVCORR_IO_HPP_
