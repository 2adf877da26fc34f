#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "moduli/factorizer.hpp"
#include "moduli/interpolation.hpp"
#include "moduli/rational.hpp"

namespace moduli {

class DataFileError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One Shimura-curve norm sample: for the re-normalized Hauptmodul t_d the
/// external norm algorithm reports |t_d(s_{d'})| = normNum/normDen, evaluated
/// at the rational modulus zeta = zeta_d.
struct ShimuraNormPoint {
    long long d = 0;
    BigRat zeta;
    FactoredRational norm;
};

/// Contents of a ShimuraNormFile JSON document.
struct ShimuraNormFile {
    long long curve_discriminant = 0;  // always 6 here
    long long cm_discriminant = 0;     // d'
    int degree = 0;                    // h_{d'}
    std::vector<ShimuraNormPoint> points;
};

namespace detail {

inline FactoredInteger parse_norm_part(const nlohmann::json& v, const std::string& key) {
    if (!v.is_string()) throw DataFileError(key + ": expected a string (factored or plain integer)");
    try {
        return parse_factored(v.get<std::string>());
    } catch (const std::exception& e) {
        throw DataFileError(key + ": " + e.what());
    }
}

}  // namespace detail

inline ShimuraNormFile parse_shimura_norm_file(const nlohmann::json& j) {
    ShimuraNormFile out;
    for (const char* key : {"curveDiscriminant", "cmDiscriminant", "degree", "points"})
        if (!j.contains(key)) throw DataFileError(std::string("missing key '") + key + "'");
    if (!j["curveDiscriminant"].is_number_integer()) throw DataFileError("curveDiscriminant: expected integer");
    if (!j["cmDiscriminant"].is_number_integer()) throw DataFileError("cmDiscriminant: expected integer");
    if (!j["degree"].is_number_integer()) throw DataFileError("degree: expected integer");
    out.curve_discriminant = j["curveDiscriminant"].get<long long>();
    out.cm_discriminant = j["cmDiscriminant"].get<long long>();
    out.degree = j["degree"].get<int>();
    if (out.degree < 1) throw DataFileError("degree: must be >= 1");
    if (!j["points"].is_array()) throw DataFileError("points: expected array");

    size_t idx = 0;
    for (const auto& pj : j["points"]) {
        const std::string at = "points[" + std::to_string(idx) + "]";
        if (!pj.is_object()) throw DataFileError(at + ": expected object");
        for (const char* key : {"d", "zeta", "normNum", "normDen"})
            if (!pj.contains(key)) throw DataFileError(at + ": missing key '" + key + "'");
        ShimuraNormPoint pt;
        if (!pj["d"].is_number_integer()) throw DataFileError(at + ".d: expected integer");
        pt.d = pj["d"].get<long long>();
        if (!pj["zeta"].is_string()) throw DataFileError(at + ".zeta: expected exact rational string");
        try {
            pt.zeta = parse_rational(pj["zeta"].get<std::string>());
        } catch (const std::exception& e) {
            throw DataFileError(at + ".zeta: " + std::string(e.what()));
        }
        FactoredInteger num = detail::parse_norm_part(pj["normNum"], at + ".normNum");
        FactoredInteger den = detail::parse_norm_part(pj["normDen"], at + ".normDen");
        pt.norm = FactoredRational(num, den);
        if (pt.norm.value() <= 0) throw DataFileError(at + ": norm must be a positive rational");
        out.points.push_back(std::move(pt));
        ++idx;
    }
    return out;
}

inline ShimuraNormFile load_shimura_norm_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataFileError("cannot open data file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw DataFileError("JSON parse error in '" + path + "': " + e.what());
    }
    return parse_shimura_norm_file(j);
}

struct DataValidationReport {
    bool valid = true;
    std::vector<std::string> problems;
    long long cm_discriminant = 0;
    int degree = 0;
    size_t point_count = 0;
};

/// Schema and sanity checks for a ShimuraNormFile: positive norms, at least
/// degree+1 points, no duplicated abscissas.
inline DataValidationReport validate_shimura_norm_file(const std::string& path) {
    DataValidationReport rep;
    ShimuraNormFile f;
    try {
        f = load_shimura_norm_file(path);
    } catch (const std::exception& e) {
        rep.valid = false;
        rep.problems.emplace_back(e.what());
        return rep;
    }
    rep.cm_discriminant = f.cm_discriminant;
    rep.degree = f.degree;
    rep.point_count = f.points.size();
    if (f.curve_discriminant != 6) {
        rep.valid = false;
        rep.problems.push_back("curveDiscriminant: expected 6, got " + std::to_string(f.curve_discriminant));
    }
    if (f.points.size() < static_cast<size_t>(f.degree) + 1) {
        rep.valid = false;
        rep.problems.push_back("insufficient points: degree " + std::to_string(f.degree) + " needs at least " +
                               std::to_string(f.degree + 1) + ", got " + std::to_string(f.points.size()));
    }
    for (size_t i = 0; i < f.points.size(); ++i)
        for (size_t j = i + 1; j < f.points.size(); ++j)
            if (f.points[i].zeta == f.points[j].zeta) {
                rep.valid = false;
                rep.problems.push_back("duplicate zeta abscissa " + to_string(f.points[i].zeta) +
                                       " at points[" + std::to_string(i) + "] and points[" + std::to_string(j) + "]");
            }
    return rep;
}

}  // namespace moduli
