#ifndef CFORGE_IO_HPP
#define CFORGE_IO_HPP

#include <memory>
#include <string>

#include "json.hpp"

#include "cforge/descent.hpp"
#include "cforge/gerbe.hpp"
#include "cforge/groupoid.hpp"

namespace cforge {

using nlohmann::json;

// Schema violations carry a JSON-pointer-ish location; they map to a
// different exit code than precondition failures.
class schema_error : public std::runtime_error {
  public:
    schema_error(std::string where, const std::string& what)
        : std::runtime_error(what + " (at " + where + ")"), where_(std::move(where)) {}
    const std::string& where() const { return where_; }

  private:
    std::string where_;
};

json load_json_file(const std::string& path);

// {"vertices": N, "simplices": [[v0, v1, ...], ...]} with maximal
// simplices; face closure is computed on load.
SimplicialComplex complex_from_json(const json& j, const std::string& where = "/");
json complex_to_json(const SimplicialComplex& cx);

IntCochain int_cochain_from_json(const json& j, const SimplicialComplex* cx,
                                 const std::string& where);
RatCochain rat_cochain_from_json(const json& j, const SimplicialComplex* cx,
                                 const std::string& where);
ModCochain mod_cochain_from_json(const json& j, const SimplicialComplex* cx,
                                 const std::string& where);
json cochain_to_json(const IntCochain& c);
json cochain_to_json(const RatCochain& c);
json cochain_to_json(const ModCochain& c);

DiffCochain diffcochain_from_json(const json& j, const SimplicialComplex* cx,
                                  const std::string& where);
json diffcochain_to_json(const DiffCochain& x);

// Owning bundles: covers and levels hold pointers into the base.
struct CoverBundle {
    std::shared_ptr<SimplicialComplex> base;
    std::shared_ptr<Cover> cover;
    std::shared_ptr<CechLevels> levels;
};

CoverBundle cover_from_json(const json& j, int q_max, const std::string& where = "/");
json cover_to_json(const Cover& cover);

struct ActionBundle {
    std::shared_ptr<SimplicialComplex> base;
    std::shared_ptr<ActionGroupoid> groupoid;
};

// {"complex": ..., "group": {"order": n, "table": [[...]]},
//  "action": [permutation per group element]}
ActionBundle action_from_json(const json& j, const std::string& where = "/");

struct DescentBundle {
    CoverBundle cover;
    std::shared_ptr<DescentDatum> datum;
};

DescentBundle descent_from_json(const json& j, const std::string& where = "/");
json descent_to_json(const DescentDatum& d);
json descent_arrow_to_json(const DescentArrow& w);

struct GerbeBundle {
    CoverBundle cover;
    std::shared_ptr<GerbeCocycle> gerbe;
    GerbeFlavor flavor = GerbeFlavor::bare;
};

GerbeBundle gerbe_from_json(const json& j, const std::string& where = "/");
json gerbe_to_json(const GerbeCocycle& g, GerbeFlavor flavor);

json class_to_json(const FgAbelianGroup& g, const ClassCoordinates& c);
json group_to_json(const FgAbelianGroup& g);

std::string fnv1a_digest(const std::string& bytes);

// Flat key,value projection of a report for spreadsheets; JSON is the
// authoritative format.
std::string report_to_csv(const json& report);

}  // namespace cforge

#endif
