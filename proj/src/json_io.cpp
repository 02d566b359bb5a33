#include "orbhrr/json_io.hpp"

#include "orbhrr/errors.hpp"

#include <fstream>

namespace orbhrr::json_io {

namespace {

const Json& field(const Json& j, const char* key, const char* context)
{
    if (!j.is_object()) {
        throw SchemaError(std::string(context) + " must be a JSON object");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        throw SchemaError(std::string(context) + " is missing field \"" + key + "\"");
    }
    return *it;
}

std::int64_t as_int(const Json& j, const char* what)
{
    if (!j.is_number_integer()) {
        throw SchemaError(std::string(what) + " must be an integer");
    }
    return j.get<std::int64_t>();
}

std::uint64_t as_positive(const Json& j, const char* what)
{
    const std::int64_t v = as_int(j, what);
    if (v <= 0) {
        throw SchemaError(std::string(what) + " must be positive");
    }
    return static_cast<std::uint64_t>(v);
}

std::vector<std::int64_t> as_int_vector(const Json& j, const char* what)
{
    if (!j.is_array()) {
        throw SchemaError(std::string(what) + " must be an array");
    }
    std::vector<std::int64_t> out;
    for (const auto& x : j) out.push_back(as_int(x, what));
    return out;
}

IntMatrix as_int_matrix(const Json& j, const char* what)
{
    if (!j.is_array()) {
        throw SchemaError(std::string(what) + " must be an array of arrays");
    }
    IntMatrix out;
    for (const auto& row : j) out.push_back(as_int_vector(row, what));
    return out;
}

}  // namespace

GroupPtr group_from_json(const Json& j)
{
    const std::string type = field(j, "type", "group").get<std::string>();
    if (type == "cyclic") {
        return std::make_shared<const FiniteGroup>(cyclic_group(as_positive(field(j, "order", "group"), "order")));
    }
    if (type == "symmetric") {
        return std::make_shared<const FiniteGroup>(
            symmetric_group(as_positive(field(j, "degree", "group"), "degree")));
    }
    if (type == "cayley") {
        std::vector<std::vector<ElementIndex>> table;
        for (const auto& row : as_int_matrix(field(j, "table", "group"), "Cayley table entry")) {
            std::vector<ElementIndex> r;
            for (auto x : row) {
                if (x < 0) throw SchemaError("Cayley table entries must be non-negative");
                r.push_back(static_cast<ElementIndex>(x));
            }
            table.push_back(std::move(r));
        }
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
        try {
            return std::make_shared<const FiniteGroup>(std::move(table), std::move(labels));
        } catch (const GroupError& e) {
            throw SchemaError(std::string("invalid group: ") + e.what());
        }
    }
    throw SchemaError("unknown group type \"" + type + "\"");
}

Json group_to_json(const FiniteGroup& g)
{
    return Json{{"type", "cayley"}, {"table", g.cayley()}, {"labels", g.labels()}};
}

PicardLattice lattice_from_json(const Json& j)
{
    const std::int64_t rank = as_int(field(j, "rank", "lattice"), "rank");
    IntMatrix gram = as_int_matrix(field(j, "gram", "lattice"), "gram");
    std::vector<std::int64_t> ample = as_int_vector(field(j, "ample", "lattice"), "ample");
    if (rank < 1 || static_cast<std::size_t>(rank) != gram.size()) {
        throw SchemaError("lattice rank does not match the Gram matrix");
    }
    try {
        return PicardLattice(std::move(gram), std::move(ample));
    } catch (const DimensionMismatchError& e) {
        throw SchemaError(e.what());
    }
}

Json lattice_to_json(const PicardLattice& lattice)
{
    return Json{{"rank", lattice.rank()}, {"gram", lattice.gram()}, {"ample", lattice.ample().coords}};
}

MukaiVector mukai_from_json(const Json& j)
{
    MukaiVector v;
    v.r = as_int(field(j, "r", "Mukai vector"), "r");
    v.c1.coords = as_int_vector(field(j, "c1", "Mukai vector"), "c1");
    v.s = as_int(field(j, "s", "Mukai vector"), "s");
    return v;
}

Json mukai_to_json(const MukaiVector& v) { return Json{{"r", v.r}, {"c1", v.c1.coords}, {"s", v.s}}; }

CyclotomicNumber cyclotomic_from_json(const Json& j)
{
    if (j.is_number_integer()) return CyclotomicNumber(1, Rational(j.get<std::int64_t>()));
    if (j.is_string()) return CyclotomicNumber::parse(j.get<std::string>());
    throw SchemaError("cyclotomic value must be a string or an integer");
}

K3GModel model_from_json(const Json& j, bool validate)
{
    GroupPtr group = group_from_json(field(j, "group", "model"));
    PicardLattice lattice = lattice_from_json(field(j, "lattice", "model"));
    const Json& sectors_json = field(j, "sectors", "model");
    if (!sectors_json.is_array()) {
        throw SchemaError("sectors must be an array");
    }
    std::vector<SectorEntry> sectors;
    for (const auto& s : sectors_json) {
        SectorEntry e;
        const std::int64_t cls = as_int(field(s, "class", "sector"), "class");
        if (cls < 0) throw SchemaError("class must be non-negative");
        e.class_index = static_cast<std::size_t>(cls);
        e.stabilizer_order = as_positive(field(s, "stabilizer", "sector"), "stabilizer");
        e.eig_order = static_cast<std::uint32_t>(as_positive(field(s, "eig_order", "sector"), "eig_order"));
        e.eig_exp = as_int(field(s, "eig_exp", "sector"), "eig_exp");
        e.multiplicity = s.contains("multiplicity") ? as_positive(s["multiplicity"], "multiplicity") : 1;
        sectors.push_back(e);
    }
    K3GModel model(std::move(group), std::move(sectors), std::move(lattice));
    if (validate) check_identity(model);
    return model;
}

Json model_to_json(const K3GModel& model)
{
    Json sectors = Json::array();
    for (const auto& e : model.sectors()) {
        sectors.push_back(Json{{"class", e.class_index},
                               {"stabilizer", e.stabilizer_order},
                               {"eig_order", e.eig_order},
                               {"eig_exp", e.eig_exp},
                               {"multiplicity", e.multiplicity}});
    }
    return Json{{"group", group_to_json(*model.group())},
                {"lattice", lattice_to_json(model.lattice())},
                {"sectors", std::move(sectors)}};
}

EquivariantClass class_from_json(const Json& j)
{
    EquivariantClass x;
    x.mukai = mukai_from_json(field(j, "mukai", "class"));
    const Json& twisted = field(j, "twisted", "class");
    if (!twisted.is_array()) throw SchemaError("twisted must be an array");
    for (const auto& t : twisted) x.local_chars.push_back(cyclotomic_from_json(t));
    return x;
}

Json class_to_json(const EquivariantClass& x)
{
    Json twisted = Json::array();
    for (const auto& t : x.local_chars) twisted.push_back(t.to_string());
    return Json{{"mukai", mukai_to_json(x.mukai)}, {"twisted", std::move(twisted)}};
}

std::vector<Character> character_table_from_json(const Json& j)
{
    GroupPtr group = group_from_json(field(j, "group", "character table"));
    const Json& rows = field(j, "characters", "character table");
    if (!rows.is_array()) throw SchemaError("characters must be an array");
    std::vector<Character> table;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != group->class_count()) {
            throw SchemaError("each character needs one value per conjugacy class");
        }
        std::vector<CyclotomicNumber> values;
        for (const auto& v : row) values.push_back(cyclotomic_from_json(v));
        table.emplace_back(group, std::move(values));
    }
    return table;
}

Json read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace orbhrr::json_io
