#pragma once

// Depth-bounded multiplicative and additive characters of a local field,
// described through its level-m truncation.

#include <numeric>
#include <string>
#include <vector>

#include "scalar.hpp"
#include "truncated_field.hpp"

namespace lsfactors {

/// Smallest a >= 0 such that a character with these generator images is
/// trivial on 1 + p^a (a = 0: trivial on all units).
inline int conductor_from_images(const TruncatedField& field, const std::vector<RootOfUnity>& images) {
    const auto gens = UnitGroupStruct::generators_at(field, field.level());
    for (int a = 0; a <= field.level(); ++a) {
        bool trivial = true;
        for (size_t g = 0; g < gens.size() && trivial; ++g) {
            const auto& gen = gens[g];
            if (gen.degree == 0) {
                trivial = a >= 1 || images[g].is_one();
                continue;
            }
            // (1 + b t^i)^(p^e) lies in 1 + p^a once i p^e >= a
            long long allowed = 1;
            for (long long reach = gen.degree; reach < a; reach *= field.p()) allowed *= field.p();
            trivial = allowed % images[g].order == 0;
        }
        if (trivial) return a;
    }
    return field.level();
}

class MultChar {
public:
    /// Validated constructor. `images` are the values on the level-m unit
    /// generators (see UnitGroupStruct); `pi_value` is chi(t).
    static MultChar make(const TruncatedField& field, int conductor, Scalar pi_value,
                         std::vector<RootOfUnity> images) {
        const auto gens = UnitGroupStruct::generators_at(field, field.level());
        if (conductor < 0 || conductor >= field.level())
            throw validation_error("local-field", "conductor " + std::to_string(conductor) +
                                                      " must satisfy 0 <= a < level " + std::to_string(field.level()));
        if (images.size() != gens.size())
            throw validation_error("local-field", "expected " + std::to_string(gens.size()) +
                                                      " unit generator images, got " + std::to_string(images.size()));
        for (size_t g = 0; g < gens.size(); ++g)
            if (gens[g].order % images[g].order != 0)
                throw validation_error("local-field", "image of generator " + std::to_string(g) + " has order " +
                                                          std::to_string(images[g].order) +
                                                          " not dividing " + std::to_string(gens[g].order));
        pi_value = pi_value.with_q(field.q());
        if (!pi_value.cyclo().as_root_of_unity())
            throw validation_error("local-field", "value at the uniformizer must be a root of unity times a q-power");
        const int true_conductor = conductor_from_images(field, images);
        if (true_conductor != conductor)
            throw validation_error("local-field", "claimed conductor " + std::to_string(conductor) +
                                                      " but the images have conductor " +
                                                      std::to_string(true_conductor));
        return MultChar(field, conductor, std::move(pi_value), std::move(images));
    }

    static MultChar trivial(const TruncatedField& field) { return unramified(field, Scalar(1)); }

    static MultChar unramified(const TruncatedField& field, Scalar pi_value) {
        const auto gens = UnitGroupStruct::generators_at(field, field.level());
        return make(field, 0, std::move(pi_value), std::vector<RootOfUnity>(gens.size()));
    }

    const TruncatedField& field() const { return field_; }
    int conductor() const { return conductor_; }
    int depth() const { return conductor_ > 0 ? conductor_ - 1 : 0; }
    const Scalar& pi_value() const { return pi_value_; }
    const std::vector<RootOfUnity>& images() const { return images_; }
    bool ramified() const { return conductor_ > 0; }
    bool unitary() const { return pi_value_.qpower().is_one(); }

    /// chi on a unit of R_level (level >= conductor). Reads coefficients < a.
    RootOfUnity unit_value(const RingElt& u) const {
        if (conductor_ == 0) return {};
        if (u.level() < conductor_)
            throw precision_error("local-field", "unit known to level " + std::to_string(u.level()) +
                                                     " but the conductor is " + std::to_string(conductor_));
        const auto ugs = UnitGroupStruct::get(field_, conductor_);
        const auto& exps = ugs->dlog(field_, u);
        RootOfUnity r;
        for (size_t g = 0; g < exps.size(); ++g)
            if (exps[g] != 0) r = r * images_[g].pow(exps[g]);
        return r;
    }

    /// chi(t^v u).
    Scalar value(long long v, const RingElt& u) const {
        return pi_value_.pow(v) * Scalar::root_of_unity(unit_value(u)).with_q(field_.q());
    }

    /// lcm of the orders of the unit-part values.
    long long unit_order() const {
        long long l = 1;
        for (const auto& r : images_) l = std::lcm(l, r.order);
        return l;
    }

    friend MultChar operator*(const MultChar& a, const MultChar& b) {
        a.require_same_field(b);
        std::vector<RootOfUnity> images(a.images_.size());
        for (size_t g = 0; g < images.size(); ++g) images[g] = a.images_[g] * b.images_[g];
        int cond = conductor_from_images(a.field_, images);
        return MultChar(a.field_, cond, a.pi_value_ * b.pi_value_, std::move(images));
    }

    MultChar inverse() const {
        std::vector<RootOfUnity> images(images_.size());
        for (size_t g = 0; g < images.size(); ++g) images[g] = images_[g].inverse();
        return MultChar(field_, conductor_, pi_value_.inverse(), std::move(images));
    }

    MultChar pow(long long e) const {
        std::vector<RootOfUnity> images(images_.size());
        for (size_t g = 0; g < images.size(); ++g) images[g] = images_[g].pow(e);
        int cond = conductor_from_images(field_, images);
        return MultChar(field_, cond, pi_value_.pow(e), std::move(images));
    }

    /// chi |.|^s0: the value at the uniformizer picks up q^-s0.
    MultChar twist(const Rational& s0) const {
        return MultChar(field_, conductor_, pi_value_ * Scalar::q_power(field_.q(), -s0), images_);
    }

    /// The same character viewed at another level (generator images for
    /// degrees >= conductor are 1 on both sides).
    MultChar at_level(const TruncatedField& other) const {
        if (!field_.same_residue_data(other)) throw usage_error("local-field", "residue data differ");
        const auto gens = UnitGroupStruct::generators_at(other, other.level());
        std::vector<RootOfUnity> images(gens.size());
        for (size_t g = 0; g < gens.size() && g < images_.size(); ++g) images[g] = images_[g];
        return make(other, conductor_, pi_value_, std::move(images));
    }

    friend bool operator==(const MultChar& a, const MultChar& b) {
        return a.field_ == b.field_ && a.conductor_ == b.conductor_ && a.pi_value_ == b.pi_value_ &&
               a.images_ == b.images_;
    }

    void require_same_field(const MultChar& o) const {
        if (!(field_ == o.field_)) throw usage_error("local-field", "characters live on different fields");
    }

private:
    MultChar(TruncatedField field, int conductor, Scalar pi_value, std::vector<RootOfUnity> images)
        : field_(std::move(field)), conductor_(conductor), pi_value_(std::move(pi_value)),
          images_(std::move(images)) {}

    TruncatedField field_;
    int conductor_;
    Scalar pi_value_;
    std::vector<RootOfUnity> images_;
};

/// psi(x) = psi_0(Tr(residue(u t^-n x))), psi_0(k) = z_p^k. Trivial on p^n,
/// nontrivial on p^(n-1); the canonical character has n = 0 and u = 1.
class AddChar {
public:
    AddChar(const TruncatedField& field, int conductor, RingElt scale)
        : field_(field), conductor_(conductor), scale_(std::move(scale)) {
        if (scale_.level() != field.level())
            throw validation_error("local-field", "scale unit must be given to the field level");
        if (scale_.raw()[0] == 0) throw validation_error("local-field", "scale must be a unit");
    }

    static AddChar canonical(const TruncatedField& field) { return AddChar(field, 0, field.one(field.level())); }

    const TruncatedField& field() const { return field_; }
    int conductor() const { return conductor_; }
    const RingElt& scale() const { return scale_; }

    /// psi(t^v w) for a unit w. The single evaluation path: the value is
    /// z_p^Tr(c) with c the coefficient of index n - v - 1 of u*w, so only
    /// indices <= n - v - 1 of u and w are read.
    RootOfUnity value(long long v, const RingElt& w) const {
        if (v >= conductor_) return {};
        const long long index = conductor_ - v - 1;
        if (index >= field_.level() || index >= w.level())
            throw precision_error("local-field", "additive character window index " + std::to_string(index) +
                                                     " beyond available level");
        const int c = field_.mul_coefficient(scale_, w, static_cast<int>(index));
        return RootOfUnity(field_.p(), field_.residue_field().trace(c));
    }

    /// psi^a : x -> psi(a x) for a = t^v u.
    AddChar scaled(long long v, const RingElt& u) const {
        return AddChar(field_, conductor_ - static_cast<int>(v), field_.mul(scale_, u, field_.level()));
    }

    /// psi-bar = psi^-1 = psi^(-1).
    AddChar conj() const { return AddChar(field_, conductor_, field_.neg(scale_, field_.level())); }

    AddChar at_level(const TruncatedField& other) const {
        RingElt s = other.zero(other.level());
        for (int i = 0; i < other.level() && i < scale_.level(); ++i) s.raw()[i] = scale_.raw()[i];
        return AddChar(other, conductor_, std::move(s));
    }

    friend bool operator==(const AddChar& a, const AddChar& b) {
        return a.field_ == b.field_ && a.conductor_ == b.conductor_ && a.scale_ == b.scale_;
    }

private:
    TruncatedField field_;
    int conductor_;
    RingElt scale_;
};

struct ConductorBounds {
    long long conductor_bound;  // n^2 m + n^2
    long long default_level;    // n^2 m + n^2 + 4
};

/// Conductor bound for GL_n representations of depth < m and the matching
/// closeness level used for the close-fields transfer.
inline ConductorBounds depth_and_bounds(long long n, long long m) {
    if (n < 1 || m < 0) throw usage_error("local-field", "depth_and_bounds needs n >= 1, m >= 0");
    const long long b = n * n * m + n * n;
    return {b, b + 4};
}

} // namespace lsfactors
