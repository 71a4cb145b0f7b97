#include "torelli/render.hpp"

#include <sstream>

namespace torelli {

namespace {

// Linear combination of named basis elements; the empty partition prints as bare scalar.
template <class Terms>
std::string combination(const Terms& terms, const std::string& head, bool unit_is_one) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [lambda, c] : terms) {
        Rational a = c;
        if (!first) {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        } else if (a < 0) {
            out += "-";
            a = -a;
        }
        first = false;
        bool bare = unit_is_one && lambda.size() == 0;
        std::string name = head + "[" + to_string(lambda) + "]";
        if (bare)
            out += to_string(a);
        else if (a == 1)
            out += name;
        else
            out += to_string(a) + "*" + name;
    }
    return out;
}

bool single_term(const std::string& s) {
    return s.find(" + ") == std::string::npos && s.find(" - ") == std::string::npos;
}

std::string compact(std::string s) {
    // "(2 + s[2])" reads as "(2+s[2])" inside series
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == ' ' && i + 1 < s.size() && (s[i + 1] == '+' || s[i + 1] == '-') && i + 2 < s.size() &&
            s[i + 2] == ' ') {
            out += s[i + 1];
            i += 2;
        } else {
            out += s[i];
        }
    }
    return out;
}

std::string series_text(const std::map<int, std::string>& coeffs, int truncation) {
    std::string out;
    for (const auto& [k, text] : coeffs) {
        std::string c = compact(text);
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += c;
            continue;
        }
        std::string power = k == 1 ? "t" : "t^" + std::to_string(k);
        if (c == "1")
            out += power;
        else if (single_term(text))
            out += c + "*" + power;
        else
            out += "(" + c + ")*" + power;
    }
    if (out.empty()) out = "0";
    return out + " + O(t^" + std::to_string(truncation + 1) + ")";
}

}  // namespace

std::string render(const SymFunc& f) { return combination(f.terms(), "s", true); }

std::string render(const OrthSympClass& x) { return combination(x.terms(), "V", false); }

std::string render(const LambdaSeries& s) {
    std::map<int, std::string> coeffs;
    for (const auto& [k, f] : s.terms()) coeffs[k] = (combination(f.terms(), "s", true));
    return series_text(coeffs, s.truncation());
}

std::string render(const ClassSeries& s) {
    std::map<int, std::string> coeffs;
    for (const auto& [k, x] : s.terms()) coeffs[k] = (combination(x.terms(), "s<>", true));
    return series_text(coeffs, s.truncation());
}

nlohmann::json to_json(const Rational& c) {
    if (is_integer(c) && c.get_num().fits_slong_p()) return c.get_num().get_si();
    return to_string(c);
}

nlohmann::json to_json(const SymFunc& f) {
    auto arr = nlohmann::json::array();
    for (const auto& [lambda, c] : f.terms())
        arr.push_back({{"lambda", lambda.parts()}, {"coeff", to_json(c)}});
    return arr;
}

nlohmann::json to_json(const OrthSympClass& x) {
    auto arr = nlohmann::json::array();
    for (const auto& [lambda, c] : x.terms())
        arr.push_back({{"lambda", lambda.parts()}, {"mult", to_json(c)}});
    return arr;
}

nlohmann::json to_json(const LambdaSeries& s) {
    nlohmann::json j;
    j["truncation"] = s.truncation();
    j["terms"] = nlohmann::json::array();
    for (const auto& [k, f] : s.terms()) j["terms"].push_back({{"degree", k}, {"schur", to_json(f)}});
    return j;
}

nlohmann::json to_json(const ClassSeries& s) {
    nlohmann::json j;
    j["truncation"] = s.truncation();
    j["epsilon"] = s.epsilon();
    j["terms"] = nlohmann::json::array();
    for (const auto& [k, x] : s.terms())
        j["terms"].push_back({{"degree", k}, {"classes", to_json(x)}});
    return j;
}

nlohmann::json to_json(const CohomologyTable& t) {
    nlohmann::json j;
    j["dim"] = t.config.two_n;
    j["variant"] = to_string(t.config.variant);
    j["epsilon"] = t.config.epsilon();
    j["table"] = nlohmann::json::array();
    for (std::size_t d = 0; d < t.degrees.size(); ++d)
        j["table"].push_back({{"degree", d}, {"classes", to_json(t.degrees[d])}});
    j["trusted_up_to"] = t.trusted_up_to ? nlohmann::json(*t.trusted_up_to) : nlohmann::json(nullptr);
    j["notes"] = t.notes;
    return j;
}

std::string render(const CohomologyTable& t) {
    std::ostringstream os;
    os << "2n=" << t.config.two_n << " variant=" << to_string(t.config.variant)
       << " group=" << (t.config.epsilon() == -1 ? "Sp" : "O") << "\n";
    for (std::size_t d = 0; d < t.degrees.size(); ++d) {
        os << "H^" << d << " = " << render(t.degrees[d]);
        if (t.trusted_up_to && static_cast<int>(d) > *t.trusted_up_to) os << "   (outside stable range)";
        os << "\n";
    }
    for (const auto& note : t.notes) os << "note: " << note << "\n";
    return os.str();
}

std::string render_latex(const CohomologyTable& t) {
    std::ostringstream os;
    os << "\\begin{align*}\n";
    for (std::size_t d = 0; d < t.degrees.size(); ++d) {
        os << "H^{" << d << "} &= ";
        const auto& terms = t.degrees[d].terms();
        if (terms.empty()) os << "0";
        bool first = true;
        for (const auto& [lambda, c] : terms) {
            if (!first) os << " + ";
            first = false;
            if (c != 1) os << to_string(c);
            os << "V_{";
            os << to_string(lambda);
            os << "}";
        }
        os << (d + 1 < t.degrees.size() ? " \\\\\n" : "\n");
    }
    os << "\\end{align*}\n";
    return os.str();
}

}  // namespace torelli
