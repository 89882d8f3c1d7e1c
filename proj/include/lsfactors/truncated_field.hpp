#pragma once

// The ring R_m = F_q[t]/(t^m): the common level-m truncation O/p^m of every
// local field in an m-close class, with t playing the uniformizer.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "finite_field.hpp"

namespace lsfactors {

/// Records the highest t-coefficient index read while it is installed.
class AccessTracker {
public:
    void note(int index) { highest_ = std::max(highest_, index); }
    /// Number of leading coefficients read (0 if none).
    int level_read() const { return highest_ + 1; }
    void reset() { highest_ = -1; }

private:
    int highest_ = -1;
};

namespace detail {
inline AccessTracker*& current_tracker() {
    thread_local AccessTracker* tracker = nullptr;
    return tracker;
}
} // namespace detail

/// Installs a tracker for the current thread for the lifetime of the scope.
class TrackingScope {
public:
    explicit TrackingScope(AccessTracker& t) : previous_(detail::current_tracker()) {
        detail::current_tracker() = &t;
    }
    ~TrackingScope() { detail::current_tracker() = previous_; }
    TrackingScope(const TrackingScope&) = delete;
    TrackingScope& operator=(const TrackingScope&) = delete;

private:
    AccessTracker* previous_;
};

/// Disables tracking for the lifetime of the scope (table construction).
class SuspendTracking {
public:
    SuspendTracking() : previous_(detail::current_tracker()) { detail::current_tracker() = nullptr; }
    ~SuspendTracking() { detail::current_tracker() = previous_; }
    SuspendTracking(const SuspendTracking&) = delete;
    SuspendTracking& operator=(const SuspendTracking&) = delete;

private:
    AccessTracker* previous_;
};

/// An element sum_{i<level} c_i t^i of R_level. Coefficient reads through
/// operator[] are reported to the installed tracker.
class RingElt {
public:
    RingElt() = default;
    explicit RingElt(std::vector<int> coeffs) : c_(std::move(coeffs)) {}

    int level() const { return static_cast<int>(c_.size()); }
    int operator[](int i) const {
        if (auto* t = detail::current_tracker()) t->note(i);
        return c_[i];
    }
    /// Raw coefficients, not tracked. For serialization and mutation tests.
    const std::vector<int>& raw() const { return c_; }
    std::vector<int>& raw() { return c_; }

    friend bool operator==(const RingElt&, const RingElt&) = default;

private:
    std::vector<int> c_;
};

class TruncatedField {
public:
    TruncatedField(long long q, int level) : ff_(FiniteField::get(q)), level_(level) {
        if (level < 1) throw usage_error("local-field", "level must be >= 1");
    }
    TruncatedField(int p, int f, int level) : TruncatedField(ipow_ll(p, f), level) {
        if (!detail::is_prime(p)) throw usage_error("local-field", "residue characteristic must be prime");
    }

    const FiniteField& residue_field() const { return *ff_; }
    int p() const { return ff_->p(); }
    int f() const { return ff_->f(); }
    int q() const { return ff_->q(); }
    int level() const { return level_; }

    bool same_residue_data(const TruncatedField& o) const { return p() == o.p() && f() == o.f(); }
    friend bool operator==(const TruncatedField& a, const TruncatedField& b) {
        return a.q() == b.q() && a.level_ == b.level_;
    }

    RingElt zero(int level) const { return RingElt(std::vector<int>(level, 0)); }
    RingElt one(int level) const {
        RingElt r = zero(level);
        if (level > 0) r.raw()[0] = 1;
        return r;
    }
    RingElt constant(int c, int level) const {
        RingElt r = zero(level);
        if (level > 0) r.raw()[0] = c;
        return r;
    }
    /// 1 + b t^i at the given level.
    RingElt one_plus(int b, int i, int level) const {
        RingElt r = one(level);
        if (i < level) r.raw()[i] = ff_->add(r.raw()[i], b);
        return r;
    }

    RingElt add(const RingElt& a, const RingElt& b, int level) const {
        RingElt r = zero(level);
        for (int i = 0; i < level; ++i) r.raw()[i] = ff_->add(a[i], b[i]);
        return r;
    }
    RingElt neg(const RingElt& a, int level) const {
        RingElt r = zero(level);
        for (int i = 0; i < level; ++i) r.raw()[i] = ff_->neg(a[i]);
        return r;
    }
    /// Product truncated to `level`; reads only the first `level` coefficients.
    RingElt mul(const RingElt& a, const RingElt& b, int level) const {
        RingElt r = zero(level);
        for (int i = 0; i < level; ++i) {
            int ai = a[i];
            if (ai == 0) continue;
            for (int j = 0; i + j < level; ++j) r.raw()[i + j] = ff_->add(r.raw()[i + j], ff_->mul(ai, b[j]));
        }
        return r;
    }
    /// Coefficient `index` of a*b, reading indices <= index only.
    int mul_coefficient(const RingElt& a, const RingElt& b, int index) const {
        int c = 0;
        for (int i = 0; i <= index; ++i) c = ff_->add(c, ff_->mul(a[i], b[index - i]));
        return c;
    }
    RingElt inverse(const RingElt& a, int level) const {
        if (a[0] == 0) throw usage_error("local-field", "inverse of a non-unit");
        // Newton-free: solve a * x = 1 coefficient by coefficient
        RingElt x = zero(level);
        int inv0 = ff_->inv(a[0]);
        for (int k = 0; k < level; ++k) {
            int s = k == 0 ? 1 : 0;
            for (int i = 1; i <= k; ++i) s = ff_->sub(s, ff_->mul(a[i], x.raw()[k - i]));
            x.raw()[k] = ff_->mul(s, inv0);
        }
        return x;
    }
    RingElt pow(RingElt base, long long e, int level) const {
        RingElt r = one(level);
        while (e > 0) {
            if (e & 1) r = mul(r, base, level);
            base = mul(base, base, level);
            e >>= 1;
        }
        return r;
    }
    RingElt truncate(const RingElt& a, int level) const {
        RingElt r = zero(level);
        for (int i = 0; i < level && i < a.level(); ++i) r.raw()[i] = a[i];
        return r;
    }

    /// Every element of R_level with nonzero constant term, in lexicographic
    /// order of the coefficient vector (constant term slowest).
    std::vector<RingElt> units(int level) const {
        std::vector<RingElt> out;
        const int q = this->q();
        long long count = q - 1;
        for (int i = 1; i < level; ++i) count *= q;
        out.reserve(static_cast<size_t>(count));
        std::vector<int> c(level, 0);
        for (int c0 = 1; c0 < q; ++c0) {
            std::fill(c.begin(), c.end(), 0);
            c[0] = c0;
            while (true) {
                out.emplace_back(c);
                int i = level - 1;
                while (i >= 1 && c[i] == q - 1) c[i--] = 0;
                if (i < 1) break;
                ++c[i];
            }
        }
        return out;
    }

    /// Base-q index of the first `level` coefficients.
    long long encode(const RingElt& a, int level) const {
        long long idx = 0;
        for (int i = level - 1; i >= 0; --i) idx = idx * q() + a[i];
        return idx;
    }

private:
    static long long ipow_ll(long long b, int e) {
        long long r = 1;
        for (int i = 0; i < e; ++i) r *= b;
        return r;
    }

    std::shared_ptr<const FiniteField> ff_;
    int level_;
};

/// Generators of R_level^x = F_q^x x (1 + t R_level): the Teichmuller
/// generator, then 1 + b t^i for p not dividing i and b in the F_p-basis of
/// F_q, ordered by (i, b). Generators at level k are a prefix of those at any
/// higher level.
struct UnitGenerator {
    int degree = 0;     // i (0 for the Teichmuller generator)
    int basis_index = 0;
    int residue = 0;    // b, or the F_q^x generator when degree = 0
    long long order = 1;
};

class UnitGroupStruct {
public:
    static std::shared_ptr<const UnitGroupStruct> get(const TruncatedField& field, int level) {
        static std::mutex mutex;
        static std::map<std::pair<int, int>, std::shared_ptr<const UnitGroupStruct>> cache;
        std::lock_guard<std::mutex> lock(mutex);
        auto& slot = cache[{field.q(), level}];
        if (!slot) {
            SuspendTracking quiet;
            slot = std::shared_ptr<const UnitGroupStruct>(new UnitGroupStruct(field, level));
        }
        return slot;
    }

    /// Generator list at `level` without building the discrete-log table.
    static std::vector<UnitGenerator> generators_at(const TruncatedField& field, int level) {
        std::vector<UnitGenerator> gens;
        const auto& ff = field.residue_field();
        if (level < 1) return gens;
        gens.push_back({0, 0, ff.generator(), ff.q() - 1});
        const auto basis = ff.basis();
        for (int i = 1; i < level; ++i) {
            if (i % ff.p() == 0) continue;
            long long order = 1;
            for (long long reach = i; reach < level; reach *= ff.p()) order *= ff.p();
            for (int j = 0; j < static_cast<int>(basis.size()); ++j) gens.push_back({i, j, basis[j], order});
        }
        return gens;
    }

    int level() const { return level_; }
    const std::vector<UnitGenerator>& generators() const { return gens_; }
    long long group_order() const { return count_; }

    /// Exponents of x (a unit, read to `level`) on generators().
    const std::vector<int>& dlog(const TruncatedField& field, const RingElt& x) const {
        long long idx = field.encode(x, level_);
        long long pos = dlog_offset_.at(idx);
        if (pos < 0) throw usage_error("local-field", "discrete log of a non-unit");
        return exps_[pos];
    }

    RingElt generator_element(const TruncatedField& field, size_t g) const {
        const auto& gen = gens_[g];
        if (gen.degree == 0) return field.constant(gen.residue, level_);
        return field.one_plus(gen.residue, gen.degree, level_);
    }

private:
    UnitGroupStruct(const TruncatedField& field, int level) : level_(level), gens_(generators_at(field, level)) {
        long long total = 1;
        for (int i = 0; i < level; ++i) total *= field.q();
        dlog_offset_.assign(static_cast<size_t>(total), -1);
        count_ = 1;
        for (const auto& g : gens_) count_ *= g.order;
        long long expected = field.q() - 1;
        for (int i = 1; i < level; ++i) expected *= field.q();
        if (count_ != expected)
            throw consistency_error("local-field", "unit generator orders do not multiply to the group order");

        std::vector<RingElt> gen_elts;
        for (size_t g = 0; g < gens_.size(); ++g) gen_elts.push_back(generator_element(field, g));
        // odometer over exponent vectors
        std::vector<int> e(gens_.size(), 0);
        exps_.reserve(static_cast<size_t>(count_));
        std::vector<RingElt> partial(gens_.size() + 1, field.one(level));
        auto rebuild_from = [&](size_t k) {
            for (size_t g = k; g < gens_.size(); ++g)
                partial[g + 1] = field.mul(partial[g], field.pow(gen_elts[g], e[g], level), level);
        };
        rebuild_from(0);
        while (true) {
            long long idx = field.encode(partial[gens_.size()], level);
            if (dlog_offset_[idx] >= 0)
                throw consistency_error("local-field", "unit generators are not independent");
            dlog_offset_[idx] = static_cast<long long>(exps_.size());
            exps_.push_back(e);
            // advance the odometer; last generator fastest
            size_t k = gens_.size();
            bool done = true;
            while (k-- > 0) {
                if (++e[k] < gens_[k].order) {
                    done = false;
                    break;
                }
                e[k] = 0;
            }
            if (done) break;
            rebuild_from(k);
        }
    }

    int level_;
    std::vector<UnitGenerator> gens_;
    std::vector<long long> dlog_offset_;
    std::vector<std::vector<int>> exps_;
    long long count_ = 0;
};

} // namespace lsfactors
