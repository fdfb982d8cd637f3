#include "enriques/json_io.hpp"

namespace enriques {

namespace {
const Int kSafeLimit = Int(1) << 53;
}

json int_to_json(const Int& x) {
    if (x > -kSafeLimit && x < kSafeLimit) return json(x.get_si());
    return json(x.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw InputError("malformed integer string: " + j.dump());
        }
    }
    throw InputError("expected an integer (number or decimal string), got " + j.dump());
}

json vec_to_json(const IntVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

IntVec vec_from_json(const json& j) {
    if (!j.is_array()) throw InputError("expected an array of integers, got " + j.dump());
    IntVec v;
    v.reserve(j.size());
    for (const json& x : j) v.push_back(int_from_json(x));
    return v;
}

json matrix_to_json(const IntMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw InputError("matrix JSON must have rows, cols and entries");
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows)
        throw InputError("matrix entries must hold exactly 'rows' rows");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = entries.at(i);
        if (!row.is_array() || row.size() != cols)
            throw InputError("matrix row has the wrong length");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = int_from_json(row.at(k));
    }
    return m;
}

json group_to_json(const AbelianGroupInvariants& g) {
    json factors = json::array();
    for (const Int& d : g.torsion) factors.push_back(int_to_json(d));
    return json{{"free_rank", g.free_rank}, {"invariant_factors", std::move(factors)}};
}

AbelianGroupInvariants group_from_json(const json& j) {
    AbelianGroupInvariants g;
    g.free_rank = j.at("free_rank").get<std::size_t>();
    for (const json& d : j.at("invariant_factors")) g.torsion.push_back(int_from_json(d));
    return g;
}

json lattice_to_json(const Lattice& L) {
    return json{{"label", L.label}, {"gram", matrix_to_json(L.gram)}};
}

Lattice lattice_from_json(const json& j) {
    std::string label = j.contains("label") ? j.at("label").get<std::string>() : "";
    return Lattice(matrix_from_json(j.at("gram")), std::move(label));
}

json module_to_json(const CyclicGModule& m) {
    json j{{"order", m.order}, {"action", matrix_to_json(m.action)}};
    if (m.lattice) j["gram"] = matrix_to_json(m.lattice->gram);
    return j;
}

CyclicGModule module_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("action"))
        throw InputError("module JSON must have order and action");
    const auto order = j.at("order").get<unsigned>();
    IntMatrix action = matrix_from_json(j.at("action"));
    std::optional<Lattice> form;
    if (j.contains("gram") && !j.at("gram").is_null())
        form = Lattice(matrix_from_json(j.at("gram")));
    return CyclicGModule(std::move(action), order, std::move(form));
}

json brauer_result_to_json(const BrauerResult& r) {
    return json{{"family", family_name(r.spec.family)},
                {"param", r.spec.param},
                {"H1", group_to_json(r.h1)},
                {"mode", mode_name(r.mode)},
                {"brauer", group_to_json(r.group)},
                {"conditional", r.conditional},
                {"note", r.note},
                {"citation", r.citation}};
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace enriques
