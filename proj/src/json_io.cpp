#include "idealproj/json_io.hpp"

#include <fstream>
#include <utility>
#include <vector>

#include "idealproj/errors.hpp"

namespace idealproj {

namespace {

using nlohmann::json;

std::string monomial_str(const ExponentVector& beta) {
    return Polynomial::monomial(beta).str();
}

json exponent_to_json(const ExponentVector& beta) { return json(beta.entries()); }

std::vector<Rational> parse_point_coords(const json& arr, const std::string& where) {
    if (!arr.is_array()) throw ValidationError(where + ": expected an array");
    std::vector<Rational> coords;
    coords.reserve(arr.size());
    for (std::size_t j = 0; j < arr.size(); ++j) {
        const std::string at = where + "[" + std::to_string(j) + "]";
        if (!arr[j].is_string()) {
            throw ValidationError(at + ": expected a rational string");
        }
        try {
            coords.push_back(Rational::parse(arr[j].get<std::string>()));
        } catch (const ParseError& e) {
            throw ValidationError(at + ": " + e.what());
        }
    }
    return coords;
}

std::vector<ExponentVector> parse_delta(const json& arr, const std::string& where) {
    if (!arr.is_array()) throw ValidationError(where + ": expected an array");
    std::vector<ExponentVector> exponents;
    exponents.reserve(arr.size());
    for (std::size_t m = 0; m < arr.size(); ++m) {
        const std::string at = where + "[" + std::to_string(m) + "]";
        if (!arr[m].is_array()) {
            throw ValidationError(at + ": expected an array of integers");
        }
        std::vector<int> entries;
        entries.reserve(arr[m].size());
        for (std::size_t j = 0; j < arr[m].size(); ++j) {
            const json& entry = arr[m][j];
            if (!entry.is_number_integer() || entry.get<long long>() < 0) {
                throw ValidationError(at + "[" + std::to_string(j) +
                                      "]: expected a nonnegative integer");
            }
            entries.push_back(entry.get<int>());
        }
        exponents.emplace_back(std::move(entries));
    }
    return exponents;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& where) {
    for (const auto& item : obj.items()) {
        bool found = false;
        for (const char* key : known) {
            if (item.key() == key) {
                found = true;
                break;
            }
        }
        if (!found) throw ValidationError(where + ": unknown key \"" + item.key() + "\"");
    }
}

}  // namespace

Problem problem_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("problem: expected a JSON object");
    reject_unknown_keys(j, {"dimension", "sites"}, "problem");
    if (!j.contains("dimension")) throw ValidationError("problem: missing key \"dimension\"");
    if (!j.contains("sites")) throw ValidationError("problem: missing key \"sites\"");

    const json& dim = j["dimension"];
    if (!dim.is_number_integer() || dim.get<long long>() <= 0) {
        throw ValidationError("dimension: expected a positive integer");
    }
    const auto dimension = dim.get<std::size_t>();

    const json& sites_json = j["sites"];
    if (!sites_json.is_array()) throw ValidationError("sites: expected an array");

    std::vector<Site> sites;
    sites.reserve(sites_json.size());
    for (std::size_t k = 0; k < sites_json.size(); ++k) {
        const std::string where = "sites[" + std::to_string(k) + "]";
        const json& site = sites_json[k];
        if (!site.is_object()) throw ValidationError(where + ": expected an object");
        reject_unknown_keys(site, {"point", "delta"}, where);
        if (!site.contains("point")) {
            throw ValidationError(where + ": missing key \"point\"");
        }
        if (!site.contains("delta")) {
            throw ValidationError(where + ": missing key \"delta\"");
        }
        Point point{parse_point_coords(site["point"], where + ".point")};
        try {
            LowerSet delta{parse_delta(site["delta"], where + ".delta")};
            sites.push_back(Site{std::move(point), std::move(delta)});
        } catch (const ValidationError& e) {
            // Duplicate exponents are detected by the LowerSet constructor,
            // which does not know the path.
            const std::string msg = e.what();
            if (msg.rfind(where, 0) == 0) throw;
            throw ValidationError(where + ".delta: " + msg);
        }
    }
    return validate_problem(dimension, std::move(sites));
}

Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError(path + ": cannot open file");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
    try {
        return problem_from_json(j);
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

json problem_to_json(const Problem& problem) {
    json sites = json::array();
    for (const Site& site : problem.sites) {
        json point = json::array();
        for (std::size_t k = 0; k < site.point.dimension(); ++k) {
            point.push_back(site.point[k].str());
        }
        json delta = json::array();
        for (const ExponentVector& alpha : site.delta.exponents()) {
            delta.push_back(exponent_to_json(alpha));
        }
        sites.push_back(json{{"point", std::move(point)}, {"delta", std::move(delta)}});
    }
    return json{{"dimension", problem.dimension}, {"sites", std::move(sites)}};
}

json escalier_to_json(const Escalier& escalier) {
    json monomials = json::array();
    json exponents = json::array();
    for (const ExponentVector& beta : escalier.monomials) {
        monomials.push_back(monomial_str(beta));
        exponents.push_back(exponent_to_json(beta));
    }
    json corners = json::array();
    for (const ExponentVector& beta : escalier.corners) {
        corners.push_back(exponent_to_json(beta));
    }
    return json{{"dimension", escalier.dimension},
                {"monomials", std::move(monomials)},
                {"exponents", std::move(exponents)},
                {"corners", std::move(corners)}};
}

json interpolant_to_json(const Interpolant& interpolant) {
    json basis = json::array();
    for (const ExponentVector& beta : interpolant.basis.monomials) {
        basis.push_back(monomial_str(beta));
    }
    json coefficients = json::array();
    for (const Rational& c : interpolant.coefficients) coefficients.push_back(c.str());
    json out{{"basis", std::move(basis)},
             {"coefficients", std::move(coefficients)},
             {"polynomial", interpolant.polynomial.str()}};
    out["h"] = interpolant.h ? json(interpolant.h->str()) : json(nullptr);
    return out;
}

json border_to_json(const BorderBasis& border) {
    json monomials = json::array();
    for (const ExponentVector& beta : border.basis.monomials) {
        monomials.push_back(monomial_str(beta));
    }
    json elements = json::array();
    for (std::size_t j = 0; j < border.border.size(); ++j) {
        elements.push_back(json{{"monomial", monomial_str(border.border[j])},
                                {"exponent", exponent_to_json(border.border[j])},
                                {"polynomial", border.elements[j].str()}});
    }
    json out{{"basis", std::move(monomials)}, {"elements", std::move(elements)}};
    out["h"] = border.h ? json(border.h->str()) : json(nullptr);
    return out;
}

json table_to_json(const ConvergenceTable& table) {
    json basis = json::array();
    for (const ExponentVector& beta : table.basis.monomials) {
        basis.push_back(monomial_str(beta));
    }
    json rows = json::array();
    for (const ConvergenceRow& row : table.rows) {
        json r{{"h", row.h.str()}, {"ok", row.interpolant.has_value()}};
        if (row.interpolant) {
            json coefficients = json::array();
            for (const Rational& c : row.interpolant->coefficients) {
                coefficients.push_back(c.str());
            }
            r["coefficients"] = std::move(coefficients);
            r["polynomial"] = row.interpolant->polynomial.str();
            r["distance"] = row.distance.str();
        } else {
            r["error"] = row.error;
        }
        rows.push_back(std::move(r));
    }
    json limit_coefficients = json::array();
    for (const Rational& c : table.limit.coefficients) {
        limit_coefficients.push_back(c.str());
    }
    return json{{"basis", std::move(basis)},
                {"rows", std::move(rows)},
                {"limit", json{{"coefficients", std::move(limit_coefficients)},
                               {"polynomial", table.limit.polynomial.str()}}}};
}

json report_to_json(const DifferenceReport& report) {
    json expansion = json::array();
    for (const Rational& c : report.expansion.coefficients()) expansion.push_back(c.str());
    return json{{"order", exponent_to_json(report.order)},
                {"order_degree", report.order_degree},
                {"expansion", std::move(expansion)},
                {"derivative", report.derivative_value.str()},
                {"low_orders_vanish", report.low_orders_vanish},
                {"matched_derivative", report.matched_derivative},
                {"exact_no_remainder", report.exact_no_remainder},
                {"support_exceeds_order", report.support_exceeds_order},
                {"routes_match", report.routes_match},
                {"ok", report.ok}};
}

json envelope(const std::string& command, json result) {
    return json{{"command", command}, {"result", std::move(result)}};
}

}  // namespace idealproj
