#pragma once

#include "orbhrr/group.hpp"
#include "orbhrr/inertia.hpp"
#include "orbhrr/mukai.hpp"
#include "orbhrr/orbifold_hrr.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace orbhrr::json_io {

using Json = nlohmann::ordered_json;

/// Group descriptor, one of
///   {"type": "cyclic", "order": n}
///   {"type": "symmetric", "degree": k}
///   {"type": "cayley", "table": [[...]], "labels": [...]}
/// Writing always produces the "cayley" form.
GroupPtr group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& g);

/// {"rank": rho, "gram": [[...]], "ample": [...]}
PicardLattice lattice_from_json(const Json& j);
Json lattice_to_json(const PicardLattice& lattice);

/// {"r": r, "c1": [...], "s": s}
MukaiVector mukai_from_json(const Json& j);
Json mukai_to_json(const MukaiVector& v);

/// A cyclotomic value: a string in the exact-arith format or a JSON integer.
CyclotomicNumber cyclotomic_from_json(const Json& j);

/// {"group": {...}, "lattice": {...}, "sectors": [{"class", "stabilizer",
/// "eig_order", "eig_exp", "multiplicity"}]}; multiplicity defaults to 1.
/// With validate set, the unit identity is checked (ModelIntegrityError).
K3GModel model_from_json(const Json& j, bool validate = true);
Json model_to_json(const K3GModel& model);

/// {"mukai": {...}, "twisted": ["c[L]: ...", ...]}
EquivariantClass class_from_json(const Json& j);
Json class_to_json(const EquivariantClass& x);

/// {"group": {...}, "characters": [[value per class], ...]}
std::vector<Character> character_table_from_json(const Json& j);

/// Reads and parses a file; ParseError on I/O or syntax problems.
Json read_file(const std::string& path);

}  // namespace orbhrr::json_io
