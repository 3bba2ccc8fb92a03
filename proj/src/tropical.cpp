#include "mutfan/tropical.hpp"

#include <algorithm>
#include <sstream>

namespace mutfan {

TropMonomial::TropMonomial(std::map<std::string, Rat> exponents) : exp_(std::move(exponents)) {
    for (auto it = exp_.begin(); it != exp_.end();) {
        if (it->first.empty()) throw std::invalid_argument("empty variable label");
        it = it->second == 0 ? exp_.erase(it) : std::next(it);
    }
}

TropMonomial TropMonomial::variable(const std::string& label, const Rat& exponent) {
    return TropMonomial({{label, exponent}});
}

Rat TropMonomial::exponent(const std::string& label) const {
    auto it = exp_.find(label);
    return it == exp_.end() ? Rat(0) : it->second;
}

bool TropMonomial::isIntegral() const {
    return std::all_of(exp_.begin(), exp_.end(),
                       [](const auto& kv) { return denominator(kv.second) == 1; });
}

std::string TropMonomial::toString() const {
    if (exp_.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [label, e] : exp_) {
        if (!first) out << " * ";
        first = false;
        out << "u_" << label;
        if (e != 1) {
            out << "^" << numerator(e).str();
            if (denominator(e) != 1) out << "/" << denominator(e).str();
        }
    }
    return out.str();
}

TropMonomial tropMul(const TropMonomial& a, const TropMonomial& b) {
    std::map<std::string, Rat> e = a.exponents();
    for (const auto& [label, v] : b.exponents()) e[label] += v;
    return TropMonomial(std::move(e));
}

TropMonomial tropInv(const TropMonomial& a) {
    std::map<std::string, Rat> e;
    for (const auto& [label, v] : a.exponents()) e.emplace(label, -v);
    return TropMonomial(std::move(e));
}

TropMonomial tropOplus(const TropMonomial& a, const TropMonomial& b) {
    std::map<std::string, Rat> e;
    for (const auto& [label, v] : a.exponents()) e[label] = std::min(v, b.exponent(label));
    for (const auto& [label, v] : b.exponents())
        if (!e.count(label)) e[label] = std::min(Rat(0), v);
    return TropMonomial(std::move(e));
}

TropMonomial scalePow(const TropMonomial& m, const Rat& c) {
    std::map<std::string, Rat> e;
    for (const auto& [label, v] : m.exponents()) e.emplace(label, c * v);
    return TropMonomial(std::move(e));
}

TropLinearMap::TropLinearMap(std::vector<std::string> sourceLabels,
                             std::vector<std::string> targetLabels,
                             std::map<std::pair<std::string, std::string>, Rat> matrix, Ring ring)
    : source_(std::move(sourceLabels)), target_(std::move(targetLabels)), ring_(ring) {
    sourceSet_ = std::set<std::string>(source_.begin(), source_.end());
    if (sourceSet_.size() != source_.size())
        throw std::invalid_argument("duplicate source label");
    std::set<std::string> targetSet(target_.begin(), target_.end());
    if (targetSet.size() != target_.size())
        throw std::invalid_argument("duplicate target label");
    for (auto& [key, value] : matrix) {
        if (value == 0) continue;
        if (!sourceSet_.count(key.first))
            throw std::invalid_argument("matrix entry references unknown source \"" + key.first + "\"");
        if (!targetSet.count(key.second))
            throw std::invalid_argument("matrix entry references unknown target \"" + key.second + "\"");
        if (ring_ == Ring::Integers && denominator(value) != 1)
            throw std::invalid_argument("non-integer entry in an integer-ring map");
        p_.emplace(key, value);
    }
}

Rat TropLinearMap::entry(const std::string& i, const std::string& k) const {
    auto it = p_.find({i, k});
    return it == p_.end() ? Rat(0) : it->second;
}

TropMonomial TropLinearMap::imageOfVariable(const std::string& i) const {
    if (!sourceSet_.count(i)) throw std::invalid_argument("unknown source label \"" + i + "\"");
    std::map<std::string, Rat> e;
    for (const auto& [key, value] : p_)
        if (key.first == i) e.emplace(key.second, value);
    return TropMonomial(std::move(e));
}

bool TropLinearMap::allEntriesNonnegative() const {
    return std::all_of(p_.begin(), p_.end(), [](const auto& kv) { return kv.second >= 0; });
}

TropMonomial applyTropMap(const TropLinearMap& f, const TropMonomial& m) {
    std::map<std::string, Rat> e;
    for (const auto& [label, a] : m.exponents()) {
        if (!f.sourceSet_.count(label))
            throw std::invalid_argument("monomial uses unknown source label \"" + label + "\"");
    }
    for (const auto& [key, p] : f.p_) {
        Rat a = m.exponent(key.first);
        if (a != 0) e[key.second] += p * a;
    }
    return TropMonomial(std::move(e));
}

}  // namespace mutfan
