#include "fspv/lts.hpp"

#include <algorithm>
#include <cctype>

namespace fspv {

std::vector<std::string_view> ActionLabel::segments() const {
    std::vector<std::string_view> out;
    std::string_view sv(text);
    std::size_t start = 0;
    while (true) {
        std::size_t dot = sv.find('.', start);
        if (dot == std::string_view::npos) {
            out.push_back(sv.substr(start));
            break;
        }
        out.push_back(sv.substr(start, dot - start));
        start = dot + 1;
    }
    return out;
}

namespace {

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

bool is_integer(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
    });
}

}  // namespace

bool ActionLabel::valid_text(std::string_view text) {
    if (text.empty() || text.front() == '.' || text.back() == '.') return false;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t dot = text.find('.', start);
        std::string_view seg = dot == std::string_view::npos
                                   ? text.substr(start)
                                   : text.substr(start, dot - start);
        if (!is_identifier(seg) && !is_integer(seg)) return false;
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    return true;
}

void Lts::add_transition(StateId src, ActionLabel label, StateId dst) {
    transitions.push_back(Transition{src, std::move(label), dst});
}

void Lts::finalize() {
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()),
                      transitions.end());
}

std::span<const Transition> Lts::outgoing(StateId s) const {
    auto lo = std::lower_bound(
        transitions.begin(), transitions.end(), s,
        [](const Transition& t, StateId v) { return t.src < v; });
    auto hi = std::upper_bound(
        transitions.begin(), transitions.end(), s,
        [](StateId v, const Transition& t) { return v < t.src; });
    return {&*lo, static_cast<std::size_t>(hi - lo)};
}

std::vector<std::string> validate_lts(const Lts& lts) {
    std::vector<std::string> violations;
    if (lts.state_count < 1) {
        violations.push_back("state_count must be at least 1");
    }
    for (const Transition& t : lts.transitions) {
        if (!lts.alphabet.contains(t.label)) {
            violations.push_back("transition label '" + t.label.text +
                                 "' is not in the alphabet");
        }
        if (t.src == kErrorState) {
            violations.push_back("ERROR must be absorbing: outgoing '" +
                                 t.label.text + "' transition from state -1");
        } else if (t.src < 0 || t.src >= lts.state_count) {
            violations.push_back("transition source " + std::to_string(t.src) +
                                 " is out of range");
        }
        if (t.dst == kErrorState) {
            if (!lts.has_error) {
                violations.push_back(
                    "transition on '" + t.label.text +
                    "' targets ERROR but has_error is false");
            }
        } else if (t.dst < 0 || t.dst >= lts.state_count) {
            violations.push_back("transition target " + std::to_string(t.dst) +
                                 " is out of range");
        }
    }
    for (const ActionLabel& a : lts.alphabet) {
        if (!ActionLabel::valid_text(a.text)) {
            violations.push_back("malformed label '" + a.text + "'");
        }
    }
    return violations;
}

std::string trace_to_text(const Trace& trace) {
    if (trace.actions.empty()) return "<empty>";
    std::string out;
    for (std::size_t i = 0; i < trace.actions.size(); ++i) {
        if (i > 0) out += ", ";
        out += trace.actions[i].text;
    }
    return out;
}

}  // namespace fspv
