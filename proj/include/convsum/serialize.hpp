#pragma once

#include "convsum/convolution.hpp"
#include "convsum/eta.hpp"
#include "convsum/identities.hpp"
#include "convsum/qseries.hpp"
#include "convsum/rational.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>

namespace convsum {

/// JSON views of the library types.  All exact values are rendered as
/// "num/den" strings, never floating point, and object keys keep insertion
/// order so output is stable.
using Json = nlohmann::ordered_json;

inline Json json_of(const QSeries& series) {
    Json coeffs = Json::array();
    for (const auto& c : series.coeffs())
        coeffs.push_back(c.str());
    return coeffs;
}

inline Json json_of(const EtaQuotient& quotient) {
    Json exponents = Json::object();
    for (const auto& [d, r] : quotient.exponents())
        exponents[std::to_string(d)] = r;
    return Json{{"level", quotient.level()},
                {"leading_exponent", quotient.leading_exponent()},
                {"exponents", exponents}};
}

inline Json json_of(const EtaCombination& combination) {
    Json terms = Json::array();
    for (const auto& term : combination.terms())
        terms.push_back(Json{{"coeff", term.coeff.str()},
                             {"eta", json_of(term.quotient)}});
    return terms;
}

inline Json json_of(const Decomposition& dec, std::size_t residual_terms) {
    Json coeffs = Json::object();
    for (const auto& [d, c] : dec.coeffs)
        coeffs[std::to_string(d)] = c.str();
    return Json{{"r", dec.r},
                {"s", dec.s},
                {"level", dec.level},
                {"coeffs", coeffs},
                {"residual", json_of(dec.residual.truncated(residual_terms))}};
}

inline Json json_of(const SturmCertificate& cert) {
    Json j{{"r", cert.r},
           {"s", cert.s},
           {"weight", cert.weight},
           {"level", cert.level},
           {"bound", cert.bound},
           {"equal", cert.equal}};
    if (cert.mismatch) {
        j["mismatch"] = Json{{"index", cert.mismatch->index},
                             {"residual", cert.mismatch->residual.str()},
                             {"combination", cert.mismatch->combination.str()}};
    }
    return j;
}

} // namespace convsum
