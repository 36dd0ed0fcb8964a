#pragma once

#include "syang/algebra.hpp"

#include <map>
#include <vector>

namespace syang {

/// Truncated expansion in u^{-1}: c[0] + c[1] u^{-1} + ... + c[order] u^{-order}.
template <class V>
struct TruncSeries {
    std::vector<V> c;

    int order() const { return static_cast<int>(c.size()) - 1; }
    const V& at(int j) const { return c[static_cast<std::size_t>(j)]; }
    V& at(int j) { return c[static_cast<std::size_t>(j)]; }

    TruncSeries& operator+=(const TruncSeries& o) {
        for (std::size_t j = 0; j < c.size() && j < o.c.size(); ++j) c[j] += o.c[j];
        return *this;
    }
    TruncSeries& operator*=(const Rational& s) {
        for (auto& x : c) x *= s;
        return *this;
    }
    friend bool operator==(const TruncSeries& x, const TruncSeries& y) { return x.c == y.c; }
};

/// The expansion of t^a_b(u + shift) to the given order. The constant term is
/// (-1)^{[b]} delta^a_b.
TruncSeries<AlgebraElement> generator_series(const GradingContext& ctx, int a, int b,
                                             const Rational& shift, int order);

/// A finite linear combination of k-fold tensors of basis monomials.
class TensorElement {
public:
    TensorElement() = default;
    TensorElement(GradingContext ctx, int slots) : ctx_(ctx), slots_(slots) {}

    static TensorElement unit(GradingContext ctx, int slots, const Rational& c = Rational(1)) {
        TensorElement t(ctx, slots);
        t.add(std::vector<PBWMonomial>(static_cast<std::size_t>(slots)), c);
        return t;
    }

    const GradingContext& ctx() const { return ctx_; }
    int slots() const { return slots_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<std::vector<PBWMonomial>, Rational>& terms() const { return t_; }

    void add(const std::vector<PBWMonomial>& tuple, const Rational& c) {
        if (c.is_zero()) return;
        auto it = t_.find(tuple);
        if (it == t_.end()) t_[tuple] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    TensorElement& operator+=(const TensorElement& o) {
        for (const auto& [m, c] : o.t_) add(m, c);
        return *this;
    }
    TensorElement& operator*=(const Rational& s) {
        if (s.is_zero()) t_.clear();
        else
            for (auto& [m, c] : t_) c *= s;
        return *this;
    }
    friend bool operator==(const TensorElement& x, const TensorElement& y) {
        return x.slots_ == y.slots_ && x.t_ == y.t_;
    }
    friend bool operator!=(const TensorElement& x, const TensorElement& y) { return !(x == y); }

    std::string str() const;

private:
    GradingContext ctx_;
    int slots_ = 1;
    std::map<std::vector<PBWMonomial>, Rational> t_;
};

/// Slotwise product with the graded transposition signs.
TensorElement graded_tensor_multiply(StraightenEngine& eng, const TensorElement& x,
                                     const TensorElement& y);

/// x_1 (x) ... (x) x_k from independent slot values (no transposition signs).
TensorElement tensor_from_slots(const GradingContext& ctx,
                                const std::vector<AlgebraElement>& slots);

/// Counit applied to one slot; the slot disappears.
TensorElement apply_counit_slot(const TensorElement& x, int slot);

/// Sign exponent of the multi-coproduct term with intermediate indices mids:
/// sum_i { [a_i] + ([a_0]+[a_i])([a_i]+[a_{i+1}]) }, a_0 = b, a_k = a.
int coproduct_sign_exponent(const GradingContext& ctx, int a, int b, const std::vector<int>& mids);

/// Delta^{(k-1)}_alpha(t^a_b(u)) expanded to the given order in u^{-1}.
/// alphas must have length k with alphas[0] = 0.
TruncSeries<TensorElement> coproduct_symbolic(StraightenEngine& eng, int a, int b, int order,
                                              int k, const std::vector<Rational>& alphas);

/// Delta_{(0,beta)} of the single mode t^a_b[n], a 2-slot tensor.
TensorElement coproduct_of_mode(StraightenEngine& eng, int a, int b, int n, const Rational& beta);

/// Apply Delta_{(0,beta)} to one slot of every term; slots grow by one.
TensorElement apply_delta_to_slot(StraightenEngine& eng, const TensorElement& x, int slot,
                                  const Rational& beta);

/// Antipode images S(t^a_b[n]) for n <= order, from inverting the generator
/// matrix L(u) = I + T(u) as a truncated series.
struct AntipodeTable {
    int order = 0;
    std::map<GenFactor, AlgebraElement> image;

    const AlgebraElement& at(int a, int b, int n) const { return image.at(GenFactor{a, b, n}); }
};
AntipodeTable antipode_images(StraightenEngine& eng, int order);

// ---- Hopf-law verification helpers ---------------------------------------

/// (Delta (x) id) Delta = (id (x) Delta) Delta = Delta^{(2)}, to the given order.
bool check_coassociativity(StraightenEngine& eng, int a, int b, int order, const Rational& alpha2,
                           const Rational& alpha3);

/// Both counit laws on the k = 2 coproduct.
bool check_counit_laws(StraightenEngine& eng, int a, int b, int order, const Rational& alpha);

/// m (S (x) id) Delta = unit counit = m (id (x) S) Delta, to the given order.
bool check_antipode_law(StraightenEngine& eng, int a, int b, int order);

} // namespace syang
