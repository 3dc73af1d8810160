#pragma once

#include <string>

#include "chowtree/contract.hpp"
#include "chowtree/curves.hpp"
#include "chowtree/degeneration.hpp"
#include "chowtree/group.hpp"
#include "chowtree/kunneth.hpp"
#include "chowtree/tree.hpp"

namespace chowtree {

// JSON text formats. Rationals serialize as "a/b" strings ("/b" omitted when
// the denominator is 1); polynomials as coefficient arrays, lowest degree
// first. Serialization is deterministic (sorted object keys, fixed array
// orders); parsers throw MalformedInput with a diagnostic.

std::string tree_to_json(const StableTree& tree);
StableTree tree_from_json(const std::string& text);

std::string configuration_to_json(const Configuration& c);
Configuration configuration_from_json(const std::string& text);

std::string group_element_to_json(const GroupElement& g);
GroupElement group_element_from_json(const std::string& text);

std::string cycle_to_json(const ConfigurationCycle& z);
ConfigurationCycle cycle_from_json(const std::string& text);

std::string kunneth_to_json(const KunnethClass& k);

std::string family_to_json(const FamilyConfiguration& f);
FamilyConfiguration family_from_json(const std::string& text);

std::string form_to_json(const MultilinearForm& f);

}  // namespace chowtree
