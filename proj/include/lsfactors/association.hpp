#pragma once

// Association of close local fields at level l and the purity (read-level)
// instrumentation used to certify that computations only see level-l data.

#include <string>
#include <utility>
#include <vector>

#include "characters.hpp"

namespace lsfactors {

/// Two fields identified through their common truncation O/p^l. On canonical
/// models with equal (p, f) the ring isomorphism is the identity on
/// coefficient vectors, so transport copies data.
class AssociationCertificate {
public:
    const TruncatedField& source() const { return source_; }
    const TruncatedField& target() const { return target_; }
    int level() const { return level_; }
    const std::vector<std::pair<MultChar, MultChar>>& mult_pairs() const { return mult_; }
    const std::vector<std::pair<AddChar, AddChar>>& add_pairs() const { return add_; }

    MultChar transport(const MultChar& chi) const {
        check_depth(chi);
        if (!(chi.field() == source_)) throw association_error("local-field", "character is not on the source field");
        return chi.at_level(target_);
    }

    /// psi' with the same conductor and a scale unit agreeing mod t^l; above
    /// the source level the target coefficients are zero.
    AddChar transport(const AddChar& psi) const {
        if (!(psi.field() == source_)) throw association_error("local-field", "character is not on the source field");
        return psi.at_level(target_);
    }

    /// psi, psi' satisfy cond(psi) = cond(psi') = k and agree on p^(k-l)/p^k.
    bool additive_window_agrees(const AddChar& a, const AddChar& b) const {
        if (a.conductor() != b.conductor()) return false;
        for (int i = 0; i < level_; ++i)
            if (a.scale().raw()[i] != b.scale().raw()[i]) return false;
        return true;
    }

private:
    friend AssociationCertificate associate(const TruncatedField&, const TruncatedField&, int,
                                            const std::vector<MultChar>&,
                                            const std::vector<std::pair<AddChar, AddChar>>&);

    AssociationCertificate(TruncatedField s, TruncatedField t, int l)
        : source_(std::move(s)), target_(std::move(t)), level_(l) {}

    void check_depth(const MultChar& chi) const {
        if (chi.conductor() >= level_)
            throw association_error("local-field", "character of conductor " + std::to_string(chi.conductor()) +
                                                       " (depth " + std::to_string(chi.depth()) +
                                                       ") is too deep for level " + std::to_string(level_));
    }

    TruncatedField source_, target_;
    int level_;
    std::vector<std::pair<MultChar, MultChar>> mult_;
    std::vector<std::pair<AddChar, AddChar>> add_;
};

/// Certifies that `source` and `target` are l-close and transports the given
/// characters. Multiplicative characters must have depth < l - 1; additive
/// pairs (psi on source, psi' on target) must satisfy the window condition.
inline AssociationCertificate associate(const TruncatedField& source, const TruncatedField& target, int l,
                                        const std::vector<MultChar>& chars = {},
                                        const std::vector<std::pair<AddChar, AddChar>>& psis = {}) {
    if (!source.same_residue_data(target))
        throw association_error("local-field", "residue data differ: q = " + std::to_string(source.q()) + " vs " +
                                                   std::to_string(target.q()));
    if (l < 1 || source.level() < l || target.level() < l)
        throw association_error("local-field", "both fields need level >= l = " + std::to_string(l));
    AssociationCertificate cert(source, target, l);
    for (const auto& chi : chars) cert.mult_.emplace_back(chi, cert.transport(chi));
    for (const auto& [a, b] : psis) {
        if (!(a.field() == source) || !(b.field() == target))
            throw association_error("local-field", "additive pair is not on (source, target)");
        if (!cert.additive_window_agrees(a, b))
            throw association_error("local-field", "additive characters differ on the level-l window");
        cert.add_.emplace_back(a, b);
    }
    return cert;
}

template <class T>
struct Tracked {
    T value;
    int level_read;  // highest coefficient index read + 1 (0 if none)
};

/// Runs `computation` under a fresh tracker and reports the level it read.
template <class F>
auto purity_check(F&& computation) -> Tracked<decltype(computation())> {
    AccessTracker tracker;
    TrackingScope scope(tracker);
    auto value = computation();
    return {std::move(value), tracker.level_read()};
}

} // namespace lsfactors
