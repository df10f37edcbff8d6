#include "homcode/json_io.hpp"

#include <sstream>

#include "homcode/builders.hpp"
#include "homcode/errors.hpp"

namespace homcode {

using nlohmann::json;
using nlohmann::ordered_json;

nlohmann::ordered_json complex_to_json(const CellComplex& c) {
    ordered_json out;
    out["label"] = c.label();
    out["dimension"] = c.dimension();
    ordered_json cells = ordered_json::array();
    for (int k = 0; k <= c.dimension(); ++k)
        for (const auto& id : c.cells_of_dim(k)) {
            const Cell& cell = c.cell(id);
            ordered_json jc;
            jc["id"] = cell.id;
            jc["dim"] = cell.dim;
            ordered_json bd = ordered_json::array();
            for (const auto& e : cell.boundary) {
                ordered_json je;
                je["cell"] = e.cell;
                je["sign"] = e.sign;
                bd.push_back(std::move(je));
            }
            jc["boundary"] = std::move(bd);
            cells.push_back(std::move(jc));
        }
    out["cells"] = std::move(cells);
    return out;
}

CellComplex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("cells"))
        throw SpecError("complex JSON must be an object with a 'cells' array");
    std::vector<Cell> cells;
    for (const auto& jc : j.at("cells")) {
        Cell c;
        c.id = jc.at("id").get<std::string>();
        c.dim = jc.at("dim").get<int>();
        if (jc.contains("boundary"))
            for (const auto& je : jc.at("boundary"))
                c.boundary.push_back(
                    {je.at("cell").get<std::string>(), je.at("sign").get<int>()});
        cells.push_back(std::move(c));
    }
    return CellComplex(j.value("label", std::string("unlabeled")), j.at("dimension").get<int>(),
                       std::move(cells));
}

CellComplex complex_from_ref(const json& ref) {
    if (ref.is_object()) return complex_from_json(ref);
    if (!ref.is_string()) throw SpecError("complex reference must be a string or an object");
    std::string spec = ref.get<std::string>();
    std::string name = spec;
    std::vector<long> args;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        name = spec.substr(0, colon);
        std::stringstream ss(spec.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) args.push_back(std::stol(tok));
    }
    auto want = [&](std::size_t n) {
        if (args.size() != n)
            throw SpecError("builder '" + name + "' expects " + std::to_string(n) + " argument(s)");
    };
    if (name == "circle") {
        want(1);
        return builders::circle(args[0]);
    }
    if (name == "interval") {
        want(1);
        return builders::interval(args[0]);
    }
    if (name == "torus_grid") {
        want(2);
        return builders::torus_grid(args[0], args[1]);
    }
    if (name == "sphere_cube") {
        want(0);
        return builders::sphere_cube();
    }
    if (name == "projective_plane_min") {
        want(0);
        return builders::projective_plane_min();
    }
    throw SpecError("unknown builder '" + name + "'");
}

nlohmann::ordered_json chain_to_json(const ChainVector& v) {
    ordered_json out;
    out["degree"] = v.degree;
    ordered_json coeffs = ordered_json::object();
    for (const auto& [cell, value] : v.coeffs)
        coeffs[cell] = static_cast<std::int64_t>(value);
    out["coeffs"] = std::move(coeffs);
    return out;
}

ChainVector chain_from_json(const json& j) {
    ChainVector v;
    v.degree = j.at("degree").get<int>();
    if (j.contains("coeffs"))
        for (const auto& [cell, value] : j.at("coeffs").items())
            v.coeffs[cell] = value.get<std::int64_t>();
    return v;
}

nlohmann::ordered_json operator_to_json(const QuditPauliOperator& op) {
    ordered_json out;
    out["d"] = op.modulus();
    ordered_json x = ordered_json::object();
    for (const auto& [cell, e] : op.x_exponents()) x[cell] = e;
    out["x"] = std::move(x);
    ordered_json z = ordered_json::object();
    for (const auto& [cell, e] : op.z_exponents()) z[cell] = e;
    out["z"] = std::move(z);
    out["phase"] = op.phase_exponent();
    return out;
}

QuditPauliOperator operator_from_json(const json& j) {
    QuditPauliOperator op(j.at("d").get<std::int64_t>());
    if (j.contains("x"))
        for (const auto& [cell, e] : j.at("x").items()) op.multiply_x(cell, e.get<std::int64_t>());
    if (j.contains("z"))
        for (const auto& [cell, e] : j.at("z").items()) op.multiply_z(cell, e.get<std::int64_t>());
    if (j.contains("phase")) op.add_phase(j.at("phase").get<std::int64_t>());
    return op;
}

nlohmann::ordered_json group_to_json(const FgAbelianGroup& g) {
    ordered_json out;
    out["free"] = g.free_rank();
    out["torsion"] = g.torsion();
    return out;
}

FgAbelianGroup group_from_json(const json& j) {
    std::vector<std::int64_t> torsion;
    if (j.contains("torsion")) torsion = j.at("torsion").get<std::vector<std::int64_t>>();
    return FgAbelianGroup(j.value("free", 0L), std::move(torsion));
}

nlohmann::ordered_json error_config_to_json(const ErrorConfig& e) {
    ordered_json out;
    out["d"] = e.d;
    out["x"] = chain_to_json(e.x_part);
    out["z"] = chain_to_json(e.z_part);
    return out;
}

ErrorConfig error_config_from_json(const json& j) {
    ErrorConfig e;
    e.d = j.at("d").get<std::int64_t>();
    if (j.contains("x")) e.x_part = chain_from_json(j.at("x"));
    if (j.contains("z")) e.z_part = chain_from_json(j.at("z"));
    return e;
}

nlohmann::ordered_json syndrome_to_json(const Syndrome& s) {
    ordered_json out;
    ordered_json v = ordered_json::object();
    for (const auto& [cell, value] : s.v_violations) v[cell] = value;
    out["v"] = std::move(v);
    ordered_json p = ordered_json::object();
    for (const auto& [cell, value] : s.p_violations) p[cell] = value;
    out["p"] = std::move(p);
    return out;
}

Syndrome syndrome_from_json(const json& j) {
    Syndrome s;
    if (j.contains("v"))
        for (const auto& [cell, value] : j.at("v").items())
            s.v_violations[cell] = value.get<std::int64_t>();
    if (j.contains("p"))
        for (const auto& [cell, value] : j.at("p").items())
            s.p_violations[cell] = value.get<std::int64_t>();
    return s;
}

nlohmann::ordered_json bundle_to_json(const BundleSpec& spec) {
    ordered_json out;
    out["base"] = complex_to_json(spec.base);
    out["k"] = spec.k;
    out["group"] = group_to_json(spec.group);
    bool all_identity = true;
    for (const auto& [key, t] : spec.transitions)
        if (!t.is_identity(spec.group)) all_identity = false;
    if (all_identity) {
        out["transitions"] = "identity";
    } else {
        ordered_json ts = ordered_json::array();
        for (const auto& [key, t] : spec.transitions) {
            ordered_json jt;
            jt["cell"] = key.first;
            jt["face"] = key.second;
            ordered_json aut = ordered_json::array();
            for (long r = 0; r < t.automorphism.rows(); ++r) {
                ordered_json row = ordered_json::array();
                for (long c2 = 0; c2 < t.automorphism.cols(); ++c2)
                    row.push_back(static_cast<std::int64_t>(t.automorphism.at(r, c2)));
                aut.push_back(std::move(row));
            }
            jt["aut"] = std::move(aut);
            jt["offset"] = t.offset;
            ts.push_back(std::move(jt));
        }
        out["transitions"] = std::move(ts);
    }
    ordered_json f = ordered_json::object();
    for (const auto& [cell, v] : spec.reference_obstruction) f[cell] = v;
    out["f"] = std::move(f);
    return out;
}

BundleSpec bundle_from_json(const json& j) {
    BundleSpec spec;
    spec.base = complex_from_ref(j.at("base"));
    spec.k = j.at("k").get<int>();
    spec.group = group_from_json(j.at("group"));
    const auto& jt = j.at("transitions");
    if (jt.is_string() && jt.get<std::string>() == "identity") {
        for (const auto& gamma : spec.base.cells_of_dim(spec.k + 1))
            for (const auto& beta : spec.base.cells_of_dim(spec.k))
                if (spec.base.incidence(gamma, beta) != 0)
                    spec.transitions[{gamma, beta}] = TransitionMap::identity(spec.group);
    } else {
        for (const auto& entry : jt) {
            TransitionMap t;
            const auto& aut = entry.at("aut");
            long n = spec.group.generator_count();
            t.automorphism = IntMatrix(n, n);
            for (long r = 0; r < n; ++r)
                for (long c2 = 0; c2 < n; ++c2)
                    t.automorphism.at(r, c2) = aut.at(r).at(c2).get<std::int64_t>();
            t.offset = entry.at("offset").get<GroupElement>();
            if (static_cast<long>(t.offset.size()) != n)
                throw SpecError("transition offset has wrong coordinate count");
            spec.transitions[{entry.at("cell").get<std::string>(),
                              entry.at("face").get<std::string>()}] = std::move(t);
        }
    }
    if (j.contains("f"))
        for (const auto& [cell, v] : j.at("f").items())
            spec.reference_obstruction[cell] =
                reduce_element(v.get<GroupElement>(), spec.group);
    return spec;
}

} // namespace homcode
