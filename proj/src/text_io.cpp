#include "spfilt/text_io.hpp"

#include <algorithm>
#include <sstream>

namespace spfilt {

namespace {

std::string trim(const std::string& s) {
    const size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream stream(line);
    std::string token;
    while (stream >> token) tokens.push_back(token);
    return tokens;
}

bool valid_label(const std::string& label) {
    if (label.empty()) return false;
    return std::all_of(label.begin(), label.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_' || c == '.';
    });
}

std::string located(long line, const std::string& message) {
    return "line " + std::to_string(line) + ": " + message;
}

int parse_int(const std::string& text, long line) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw ParseError(located(line, "'" + text + "' is not an integer"), line);
    }
    if (used != text.size())
        throw ParseError(located(line, "'" + text + "' is not an integer"), line);
    return value;
}

// Split into lines, keeping 1-based numbering, dropping comments and blanks.
std::vector<std::pair<long, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<long, std::string>> out;
    std::istringstream stream(text);
    std::string raw;
    long number = 0;
    while (std::getline(stream, raw)) {
        ++number;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        out.emplace_back(number, line);
    }
    return out;
}

}  // namespace

PosetHandle parse_poset_text(const std::string& text) {
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> relations;
    for (const auto& [number, line] : content_lines(text)) {
        const auto tokens = tokens_of(line);
        if (tokens[0] == "elem") {
            if (tokens.size() != 2)
                throw ParseError(located(number, "expected 'elem <label>', got '" + line + "'"),
                                 number);
            if (!valid_label(tokens[1]))
                throw ParseError(located(number, "bad label '" + tokens[1] + "'"), number);
            if (std::find(elements.begin(), elements.end(), tokens[1]) != elements.end())
                throw DuplicateLabel(located(number, "element '" + tokens[1] + "' declared twice"));
            elements.push_back(tokens[1]);
        } else if (tokens[0] == "rel") {
            if (tokens.size() != 3)
                throw ParseError(located(number, "expected 'rel <a> <b>', got '" + line + "'"),
                                 number);
            for (int k = 1; k <= 2; ++k) {
                if (!valid_label(tokens[static_cast<size_t>(k)]))
                    throw ParseError(
                        located(number, "bad label '" + tokens[static_cast<size_t>(k)] + "'"),
                        number);
                if (std::find(elements.begin(), elements.end(), tokens[static_cast<size_t>(k)]) ==
                    elements.end())
                    throw UnknownLabel(located(
                        number, "relation names undeclared element '" +
                                    tokens[static_cast<size_t>(k)] + "'"));
            }
            relations.emplace_back(tokens[1], tokens[2]);
        } else {
            throw ParseError(located(number, "expected 'elem' or 'rel', got '" + tokens[0] + "'"),
                             number);
        }
    }
    return PrimePoset::build(std::move(elements), relations);
}

PosetHom parse_function_text(const std::string& text, PosetHandle poset) {
    std::vector<int> values(static_cast<size_t>(poset->size()), 0);
    std::vector<bool> assigned(static_cast<size_t>(poset->size()), false);
    for (const auto& [number, line] : content_lines(text)) {
        const auto tokens = tokens_of(line);
        if (tokens[0] != "val" || tokens.size() != 3)
            throw ParseError(located(number, "expected 'val <label> <integer>', got '" + line + "'"),
                             number);
        const int i = poset->find(tokens[1]);
        if (i < 0)
            throw UnknownLabel(located(number, "no element '" + tokens[1] + "' in this poset"));
        if (assigned[static_cast<size_t>(i)])
            throw ParseError(located(number, "element '" + tokens[1] + "' assigned twice"), number);
        assigned[static_cast<size_t>(i)] = true;
        values[static_cast<size_t>(i)] = parse_int(tokens[2], number);
    }
    for (int i = 0; i < poset->size(); ++i)
        if (!assigned[static_cast<size_t>(i)])
            throw ParseError("element '" + poset->label(i) + "' has no value");
    return PosetHom(std::move(poset), std::move(values));
}

Subset parse_subset(const std::string& text, const PrimePoset& poset) {
    if (text == "@all") return Subset(static_cast<size_t>(poset.size()), true);
    if (text == "@empty") return Subset(static_cast<size_t>(poset.size()), false);
    std::vector<std::string> labels;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) labels.push_back(trim(item));
    return poset.subset_of(labels);
}

SpFiltration parse_filtration_text(const std::string& text, PosetHandle poset) {
    std::vector<std::pair<int, Subset>> steps;
    for (const auto& [number, line] : content_lines(text)) {
        const size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError(located(number, "expected '<n>: <members>', got '" + line + "'"),
                             number);
        const int n = parse_int(trim(line.substr(0, colon)), number);
        steps.emplace_back(n, parse_subset(trim(line.substr(colon + 1)), *poset));
    }
    // Writers list the window only; the empty tail is implicit. Close it here
    // unless the last listed step is already empty.
    if (!steps.empty()) {
        const auto* last = &steps.front();
        for (const auto& step : steps)
            if (step.first > last->first) last = &step;
        if (std::count(last->second.begin(), last->second.end(), true) > 0)
            steps.emplace_back(last->first + 1, Subset(poset->size(), false));
    }
    return SpFiltration::make(std::move(poset), std::move(steps));
}

std::string print_upper(const UpperSet& set) {
    if (set.is_all()) return "@all";
    if (set.is_empty()) return "@empty";
    std::string out;
    for (const auto& label : set.sorted_labels()) {
        if (!out.empty()) out += ",";
        out += label;
    }
    return out;
}

std::string print_filtration(const SpFiltration& phi) {
    std::string out;
    for (int n = phi.lo(); n < phi.hi(); ++n)
        out += std::to_string(n) + ": " + print_upper(phi.at(n)) + "\n";
    return out;
}

std::string print_function(const PosetHom& f) {
    std::vector<std::string> labels = f.poset()->labels();
    std::sort(labels.begin(), labels.end());
    std::string out;
    for (const auto& label : labels)
        out += "val " + label + " " + std::to_string(f.value(label)) + "\n";
    return out;
}

std::string display_function(const PosetHom& f) {
    std::vector<std::string> labels = f.poset()->labels();
    std::sort(labels.begin(), labels.end());
    std::string out = "(";
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) out += ", ";
        out += labels[i] + ":" + std::to_string(f.value(labels[i]));
    }
    return out + ")";
}

}  // namespace spfilt
