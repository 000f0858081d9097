#ifndef HAHN_WIRE_HPP
#define HAHN_WIRE_HPP

// JSON wire formats shared by the CLI and by anything else that exchanges
// values with the library.
//
//   scalar        integer JSON number when exact and integral, otherwise the
//                 text form as a string ("p/q", "~1.25")
//   series        {"terms": [[exp, coeff], ...], "order": exp | null}
//   gamma_coord   {"sign": 1 | -1, "q": scalar} or "zero"
//   rv_element    {"q": scalar, "c": scalar} or "zero"
//   oclass        [dim, chi]
//   lambda_class  {"levels": {"0": [dim, chi], ...}}
//   blowup_plan   {"steps": [{"level": n, "locus": [d, c], "remainder": [d, c]}, ...]}
//   odouble       {"shared": k} | {"plain": [dim, chi]} | {"dom": [n, chi]}

#include <nlohmann/json.hpp>

#include <hahn/blowup.hpp>
#include <hahn/euler.hpp>
#include <hahn/scalar.hpp>
#include <hahn/series.hpp>
#include <hahn/valuation.hpp>

namespace hahn::wire
{

using json = nlohmann::json;

json to_json(const scalar &x);
json to_json(const series &a);
json to_json(const gamma_coord &g);
json to_json(const rv_element &r);
json to_json(const oclass &c);
json to_json(const lambda_class &u);
json to_json(const blowup_step &s);
json to_json(const blowup_plan &p);
json to_json(const odouble &x);
json to_json(const std::vector<oclass> &sig);

// All parsers throw parse_error on malformed input.
scalar scalar_from_json(const json &j, const numeric_context &ctx);
series series_from_json(const json &j, const numeric_context &ctx);
gamma_coord gamma_from_json(const json &j, const numeric_context &ctx);
oclass oclass_from_json(const json &j);
lambda_class lambda_from_json(const json &j);
blowup_plan plan_from_json(const json &j);
odouble odouble_from_json(const json &j);

} // namespace hahn::wire

#endif
