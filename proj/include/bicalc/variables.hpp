#ifndef BICALC_VARIABLES_HPP
#define BICALC_VARIABLES_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace bicalc {

using VarId = std::uint32_t;

/// Identity of an indeterminate.
///
/// Plain parameters (q^(1/2), lam, mu, x, y) have deriv == shift_x ==
/// shift_y == 0 and function == false.  Opaque function symbols a(x,y)
/// are represented by a family of independent indeterminates, one per
/// jet order and lattice shift: a^(k)(x + i*lam, y + j*mu).
struct VarKey {
    std::string name;
    bool function = false;
    int deriv = 0;
    int shift_x = 0;
    int shift_y = 0;

    friend bool operator<(const VarKey& a, const VarKey& b) {
        return std::tie(a.function, a.name, a.deriv, a.shift_x, a.shift_y) <
               std::tie(b.function, b.name, b.deriv, b.shift_x, b.shift_y);
    }
    friend bool operator==(const VarKey& a, const VarKey& b) {
        return !(a < b) && !(b < a);
    }
};

/// Process-wide interning table.  Ids are dense and stable for the
/// lifetime of the process; the standard parameters are interned first
/// so their ids (and therefore term orders) never depend on call order.
class VariableTable {
public:
    static VariableTable& instance() {
        static VariableTable table;
        return table;
    }

    VarId intern(const VarKey& key) {
        std::lock_guard lock(mutex_);
        auto it = ids_.find(key);
        if (it != ids_.end()) return it->second;
        auto id = static_cast<VarId>(keys_.size());
        keys_.push_back(key);
        ids_.emplace(key, id);
        return id;
    }

    VarKey key(VarId id) const {
        std::lock_guard lock(mutex_);
        if (id >= keys_.size()) throw std::out_of_range("unknown variable id");
        return keys_[id];
    }

private:
    VariableTable() {
        for (const char* n : {"q^(1/2)", "lam", "mu", "x", "y"}) {
            VarKey k{n};
            ids_.emplace(k, static_cast<VarId>(keys_.size()));
            keys_.push_back(k);
        }
    }

    mutable std::mutex mutex_;
    std::vector<VarKey> keys_;
    std::map<VarKey, VarId> ids_;
};

namespace var {
// Fixed ids, interned in this order by the VariableTable constructor.
inline constexpr VarId sqrt_q = 0;
inline constexpr VarId lam = 1;
inline constexpr VarId mu = 2;
inline constexpr VarId x = 3;
inline constexpr VarId y = 4;

inline VarId named(const std::string& name) {
    return VariableTable::instance().intern(VarKey{name});
}

/// Jet/shift instance of an opaque function symbol.
inline VarId function(const std::string& name, int deriv = 0, int shift_x = 0,
                      int shift_y = 0) {
    return VariableTable::instance().intern(
        VarKey{name, true, deriv, shift_x, shift_y});
}

inline VarKey key(VarId id) { return VariableTable::instance().key(id); }

/// Text form used by the printer and accepted back by the parser.
inline std::string render(VarId id) {
    if (id == sqrt_q) return "q^(1/2)";
    VarKey k = key(id);
    if (!k.function) return k.name;
    std::string s = k.name + std::string(static_cast<std::size_t>(k.deriv), '\'');
    if (k.shift_x != 0 || k.shift_y != 0)
        s += "[" + std::to_string(k.shift_x) + "," + std::to_string(k.shift_y) + "]";
    return s;
}
}  // namespace var

}  // namespace bicalc

#endif
