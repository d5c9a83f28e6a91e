#ifndef VLKB_GENERATORS_HPP
#define VLKB_GENERATORS_HPP

#include <stdexcept>
#include <string>

namespace vlkb {

enum class Mode { quantum, classical };

// The ground field's variable list. Quantum mode works over Q(v, U_1..U_n)
// with U_i standing for v^{mu_i}; all generators are invertible. Classical
// mode works over Q(l_1..l_n) with no negative exponents.
struct GeneratorSet {
    Mode mode = Mode::quantum;
    int n = 1;

    static GeneratorSet quantum(int n) { return {Mode::quantum, n}; }
    static GeneratorSet classical(int n) { return {Mode::classical, n}; }

    int nvars() const { return mode == Mode::quantum ? n + 1 : n; }
    bool invertible(int var) const { (void)var; return mode == Mode::quantum; }

    // Variable order fixes the monomial order: v before U_1..U_n, or l_1..l_n.
    std::string varName(int var) const {
        if (mode == Mode::quantum) {
            if (var == 0) return "v";
            return "U" + std::to_string(var);
        }
        return "l" + std::to_string(var + 1);
    }

    // -1 if the name is not a generator of this set.
    int varIndex(const std::string& name) const;

    bool operator==(const GeneratorSet&) const = default;
};

inline int GeneratorSet::varIndex(const std::string& name) const {
    if (name.empty()) return -1;
    if (mode == Mode::quantum) {
        if (name == "v") return 0;
        if (name[0] != 'U') return -1;
        try {
            int i = std::stoi(name.substr(1));
            return (i >= 1 && i <= n) ? i : -1;
        } catch (...) { return -1; }
    }
    if (name[0] != 'l') return -1;
    try {
        int i = std::stoi(name.substr(1));
        return (i >= 1 && i <= n) ? i - 1 : -1;
    } catch (...) { return -1; }
}

struct ModeError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace vlkb

#endif
