#pragma once

#include <string>

#include "json.hpp"

#include "torelli/branching.hpp"
#include "torelli/pipeline.hpp"
#include "torelli/series.hpp"
#include "torelli/symfunc.hpp"

namespace torelli {

// "2*s[2,1] + s[1]", with "1" for the unit.
std::string render(const SymFunc& f);
// "2*V[1^2] + V[0]".
std::string render(const OrthSympClass& x);
// "1 + s[1]*t + (2+s[2])*t^2".
std::string render(const LambdaSeries& s);
std::string render(const ClassSeries& s);

nlohmann::json to_json(const Rational& c);
nlohmann::json to_json(const SymFunc& f);
nlohmann::json to_json(const OrthSympClass& x);
nlohmann::json to_json(const LambdaSeries& s);
nlohmann::json to_json(const ClassSeries& s);
nlohmann::json to_json(const CohomologyTable& t);

std::string render(const CohomologyTable& t);
std::string render_latex(const CohomologyTable& t);

}  // namespace torelli
