#include "nusring/constructions.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

#include "nusring/errors.hpp"

namespace nusring {

namespace {

constexpr std::uint64_t kIndexLimit = std::uint64_t{1} << 31;

/// Inline storage for the common small case, heap beyond it.
class Scratch {
public:
    explicit Scratch(std::size_t n) : size_(n) {
        if (n > inline_.size()) heap_.resize(n);
    }
    Index* data() noexcept { return size_ > inline_.size() ? heap_.data() : inline_.data(); }
    Index& operator[](std::size_t i) noexcept { return data()[i]; }
    std::span<Index> span() noexcept { return {data(), size_}; }

private:
    std::array<Index, 128> inline_;
    std::vector<Index> heap_;
    std::size_t size_;
};

/// Fixed-base positional encoding, most significant digit first.
struct Radix {
    Index base;
    std::size_t digits;

    void split(Index x, std::span<Index> out) const {
        for (std::size_t i = digits; i-- > 0;) {
            out[i] = x % base;
            x /= base;
        }
    }
    Index join(std::span<const Index> in) const {
        std::uint64_t x = 0;
        for (std::size_t i = 0; i < digits; ++i) x = x * base + in[i];
        return static_cast<Index>(x);
    }
};

std::uint64_t checked_order(const Budget& budget, std::uint64_t order, const std::string& what) {
    if (order > budget.max_order || order >= kIndexLimit)
        throw BudgetExceededError(what + " has order " +
                                  (order == std::numeric_limits<std::uint64_t>::max() ? std::string("> 2^64")
                                                                                      : std::to_string(order)) +
                                  ", budget is " + std::to_string(budget.max_order));
    return order;
}

const ElementForm& expect_items(const ElementForm& form, ElementForm::Shape shape, std::size_t count,
                                const std::string& what) {
    if (form.shape != shape || form.items.size() != count)
        throw EncodingError(what + " expects " + (shape == ElementForm::Shape::Tuple ? "a tuple" : "a list") +
                            " of " + std::to_string(count) + " entries");
    return form;
}

/// Generic builder for rings of k x k matrices whose entries are drawn from free parameters.
RingHandle make_pattern_ring(RingHandle base, MatrixShape shape, unsigned size, std::vector<int> pattern,
                             unsigned parameters, std::string label, const Budget& budget) {
    checked_order(budget, saturating_power(base->order(), parameters), label);
    const std::uint64_t order = saturating_power(base->order(), parameters);

    struct State {
        RingHandle base;
        unsigned k;
        std::vector<int> pattern;
        std::vector<std::size_t> param_position;  // first entry carrying each parameter
        Radix radix;
    };
    auto st = std::make_shared<State>();
    st->base = base;
    st->k = size;
    st->pattern = pattern;
    st->param_position.assign(parameters, 0);
    std::vector<bool> seen(parameters, false);
    for (std::size_t pos = 0; pos < pattern.size(); ++pos) {
        const int p = pattern[pos];
        if (p >= 0 && !seen[static_cast<std::size_t>(p)]) {
            seen[static_cast<std::size_t>(p)] = true;
            st->param_position[static_cast<std::size_t>(p)] = pos;
        }
    }
    st->radix = Radix{base->order(), parameters};

    auto expand = [](const State& s, Index x, std::span<Index> params, std::span<Index> entries) {
        s.radix.split(x, params);
        for (std::size_t pos = 0; pos < s.pattern.size(); ++pos)
            entries[pos] = s.pattern[pos] < 0 ? s.base->zero() : params[static_cast<std::size_t>(s.pattern[pos])];
    };
    auto collect = [](const State& s, std::span<const Index> entries, std::span<Index> params) {
        for (std::size_t p = 0; p < params.size(); ++p) params[p] = entries[s.param_position[p]];
        return s.radix.join(params);
    };

    RingOps ops;
    ops.add = [st](Index x, Index y) {
        const std::size_t n = st->radix.digits;
        Scratch a(n), b(n);
        st->radix.split(x, a.span());
        st->radix.split(y, b.span());
        for (std::size_t i = 0; i < n; ++i) a[i] = st->base->add(a[i], b[i]);
        return st->radix.join(a.span());
    };
    ops.neg = [st](Index x) {
        const std::size_t n = st->radix.digits;
        Scratch a(n);
        st->radix.split(x, a.span());
        for (std::size_t i = 0; i < n; ++i) a[i] = st->base->neg(a[i]);
        return st->radix.join(a.span());
    };
    ops.mul = [st, expand, collect](Index x, Index y) {
        const unsigned k = st->k;
        const std::size_t kk = static_cast<std::size_t>(k) * k;
        Scratch params(st->radix.digits), a(kk), b(kk), c(kk);
        expand(*st, x, params.span(), a.span());
        expand(*st, y, params.span(), b.span());
        const Ring& r = *st->base;
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < k; ++j) {
                Index acc = r.zero();
                for (unsigned t = 0; t < k; ++t) {
                    const Index lhs = a[i * k + t];
                    if (lhs == r.zero()) continue;
                    acc = r.add(acc, r.mul(lhs, b[t * k + j]));
                }
                c[i * k + j] = acc;
            }
        return collect(*st, c.span(), params.span());
    };
    ops.decode = [st, expand](Index x) {
        const std::size_t kk = static_cast<std::size_t>(st->k) * st->k;
        Scratch params(st->radix.digits), entries(kk);
        expand(*st, x, params.span(), entries.span());
        std::vector<ElementForm> items;
        items.reserve(kk);
        for (std::size_t pos = 0; pos < kk; ++pos) items.push_back(st->base->decode(entries[pos]));
        return ElementForm::vector(std::move(items));
    };
    ops.encode = [st, label](const ElementForm& form) {
        const std::size_t kk = static_cast<std::size_t>(st->k) * st->k;
        expect_items(form, ElementForm::Shape::Vector, kk, label);
        Scratch params(st->radix.digits);
        std::vector<bool> assigned(st->radix.digits, false);
        for (std::size_t pos = 0; pos < kk; ++pos) {
            const Index entry = st->base->encode(form.items[pos]);
            const int p = st->pattern[pos];
            if (p < 0) {
                if (entry != st->base->zero())
                    throw EncodingError(label + ": entry " + std::to_string(pos) + " must be zero");
                continue;
            }
            const auto up = static_cast<std::size_t>(p);
            if (assigned[up] && params[up] != entry)
                throw EncodingError(label + ": entry " + std::to_string(pos) + " violates the matrix shape");
            params[up] = entry;
            assigned[up] = true;
        }
        return st->radix.join(params.span());
    };

    // zero and one: parameters of the zero matrix / identity matrix.
    Scratch params(parameters);
    std::vector<Index> ident(static_cast<std::size_t>(size) * size, base->zero());
    for (unsigned i = 0; i < size; ++i) ident[i * size + i] = base->one();
    for (std::size_t p = 0; p < parameters; ++p) params[p] = ident[st->param_position[p]];
    const Index one = st->radix.join(params.span());
    for (std::size_t p = 0; p < parameters; ++p) params[p] = base->zero();
    const Index zero = st->radix.join(params.span());

    MatrixPatternData data{base, shape, size, std::move(pattern), parameters};
    return Ring::create(std::move(label), static_cast<Index>(order), zero, one, std::move(ops), std::move(data));
}

void require_positive(unsigned k, const char* what) {
    if (k == 0) throw InvalidConstructionError(std::string(what) + " size must be at least 1");
}

std::vector<Index> image_table(const Ring& ring, const std::function<Index(Index)>& f) {
    std::vector<Index> image(ring.order());
    for (Index a = 0; a < ring.order(); ++a) image[a] = f(a);
    return image;
}

}  // namespace

std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exponent) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        result *= base;
        if (result == 1 && base == 1) break;
    }
    return result;
}

void require_power_within(const Budget& budget, std::uint64_t base, std::uint64_t exponent, const std::string& what) {
    checked_order(budget, saturating_power(base, exponent), what);
}

// ---------------------------------------------------------------------------------------
// Endomorphism

Endomorphism Endomorphism::identity(RingHandle ring) {
    Endomorphism e;
    e.image_.resize(ring->order());
    std::iota(e.image_.begin(), e.image_.end(), Index{0});
    e.ring_ = std::move(ring);
    e.label_ = "id";
    return e;
}

Endomorphism Endomorphism::from_table(RingHandle ring, std::vector<Index> image, std::string label) {
    const Ring& r = *ring;
    if (image.size() != r.order()) throw InvalidConstructionError("endomorphism table has the wrong size");
    for (const Index v : image)
        if (v >= r.order()) throw InvalidConstructionError("endomorphism image out of range");
    if (image[r.one()] != r.one()) throw InvalidConstructionError(label + ": alpha(1) != 1");
    for (Index a = 0; a < r.order(); ++a)
        for (Index b = 0; b < r.order(); ++b) {
            if (image[r.add(a, b)] != r.add(image[a], image[b]))
                throw InvalidConstructionError(label + ": not additive at (" + r.format(a) + ", " + r.format(b) + ")");
            if (image[r.mul(a, b)] != r.mul(image[a], image[b]))
                throw InvalidConstructionError(label + ": not multiplicative at (" + r.format(a) + ", " +
                                               r.format(b) + ")");
        }
    Endomorphism e;
    e.ring_ = std::move(ring);
    e.image_ = std::move(image);
    e.label_ = std::move(label);
    return e;
}

Endomorphism Endomorphism::swap(RingHandle product) {
    const auto* data = product->construction<ProductData>();
    if (data == nullptr || data->factors.size() != 2)
        throw InvalidConstructionError("swap requires a product of exactly two rings");
    const Ring& r = *product;
    std::vector<Index> image(r.order());
    for (Index a = 0; a < r.order(); ++a) {
        ElementForm f = r.decode(a);
        std::swap(f.items[0], f.items[1]);
        try {
            image[a] = r.encode(f);
        } catch (const EncodingError&) {
            throw InvalidConstructionError("swap is not defined on " + r.label() + ": the factors differ");
        }
    }
    return from_table(std::move(product), std::move(image), "swap");
}

bool Endomorphism::is_identity() const {
    for (Index a = 0; a < image_.size(); ++a)
        if (image_[a] != a) return false;
    return true;
}

// ---------------------------------------------------------------------------------------
// BimoduleSpec

BimoduleSpec BimoduleSpec::from_tables(RingHandle r, RingHandle s, Index modulus, std::vector<Index> phi,
                                       std::vector<Index> psi) {
    if (modulus == 0) throw InvalidConstructionError("bimodule carrier Z_k needs k >= 1");
    auto validate = [modulus](const Ring& ring, const std::vector<Index>& h, const char* name) {
        if (h.size() != ring.order()) throw InvalidConstructionError(std::string(name) + " table has the wrong size");
        for (const Index v : h)
            if (v >= modulus) throw InvalidConstructionError(std::string(name) + " value out of range");
        if (h[ring.one()] != 1 % modulus) throw InvalidConstructionError(std::string(name) + " is not unital");
        for (Index a = 0; a < ring.order(); ++a)
            for (Index b = 0; b < ring.order(); ++b) {
                if (h[ring.add(a, b)] != (h[a] + h[b]) % modulus)
                    throw InvalidConstructionError(std::string(name) + " is not additive");
                if (h[ring.mul(a, b)] != static_cast<Index>((std::uint64_t{h[a]} * h[b]) % modulus))
                    throw InvalidConstructionError(std::string(name) + " is not multiplicative");
            }
    };
    validate(*r, phi, "phi");
    validate(*s, psi, "psi");
    BimoduleSpec spec;
    spec.r_ = std::move(r);
    spec.s_ = std::move(s);
    spec.modulus_ = modulus;
    spec.phi_ = std::move(phi);
    spec.psi_ = std::move(psi);
    return spec;
}

BimoduleSpec BimoduleSpec::reduction(RingHandle r, RingHandle s, Index modulus) {
    const auto* zr = r->construction<ZmodData>();
    const auto* zs = s->construction<ZmodData>();
    if (zr == nullptr || zs == nullptr) throw InvalidConstructionError("reduction maps need Z_a and Z_b");
    if (modulus == 0 || zr->modulus % modulus != 0 || zs->modulus % modulus != 0)
        throw InvalidConstructionError("Z_" + std::to_string(modulus) + " is not a quotient of both rings");
    auto reduce = [modulus](const Ring& ring) { return image_table(ring, [modulus](Index a) { return a % modulus; }); };
    std::vector<Index> phi = reduce(*r);
    std::vector<Index> psi = reduce(*s);
    return from_tables(std::move(r), std::move(s), modulus, std::move(phi), std::move(psi));
}

// ---------------------------------------------------------------------------------------
// Builders

RingHandle make_zmod(std::uint64_t n, const Budget& budget) {
    if (n == 0) throw InvalidConstructionError("Z_n requires n >= 1");
    checked_order(budget, n, "Z" + std::to_string(n));
    const auto m = static_cast<Index>(n);
    RingOps ops;
    ops.add = [m](Index a, Index b) { return static_cast<Index>((std::uint64_t{a} + b) % m); };
    ops.mul = [m](Index a, Index b) { return static_cast<Index>((std::uint64_t{a} * b) % m); };
    ops.neg = [m](Index a) { return a == 0 ? 0 : m - a; };
    ops.decode = [](Index a) { return ElementForm::scalar(a); };
    ops.encode = [m](const ElementForm& f) {
        if (f.shape != ElementForm::Shape::Scalar || f.value < 0 || f.value >= static_cast<std::int64_t>(m))
            throw EncodingError("Z" + std::to_string(m) + " expects an integer in 0.." + std::to_string(m - 1));
        return static_cast<Index>(f.value);
    };
    return Ring::create("Z" + std::to_string(n), m, 0, 1 % m, std::move(ops), ZmodData{m});
}

RingHandle make_product(std::span<const RingHandle> factors, const Budget& budget) {
    if (factors.empty()) throw InvalidConstructionError("a product needs at least one factor");
    std::string label;
    std::uint64_t order = 1;
    for (const auto& f : factors) {
        if (!label.empty()) label += "x";
        label += f->label();
        order = order > std::numeric_limits<std::uint64_t>::max() / f->order()
                    ? std::numeric_limits<std::uint64_t>::max()
                    : order * f->order();
    }
    checked_order(budget, order, label);

    auto fs = std::make_shared<std::vector<RingHandle>>(factors.begin(), factors.end());
    auto split = [fs](Index x, std::span<Index> out) {
        for (std::size_t i = fs->size(); i-- > 0;) {
            out[i] = x % (*fs)[i]->order();
            x /= (*fs)[i]->order();
        }
    };
    auto join = [fs](std::span<const Index> in) {
        std::uint64_t x = 0;
        for (std::size_t i = 0; i < fs->size(); ++i) x = x * (*fs)[i]->order() + in[i];
        return static_cast<Index>(x);
    };
    auto componentwise = [fs, split, join](auto op) {
        return [fs, split, join, op](Index x, Index y) {
            Scratch a(fs->size()), b(fs->size());
            split(x, a.span());
            split(y, b.span());
            for (std::size_t i = 0; i < fs->size(); ++i) a[i] = op(*(*fs)[i], a[i], b[i]);
            return join(a.span());
        };
    };
    RingOps ops;
    ops.add = componentwise([](const Ring& r, Index a, Index b) { return r.add(a, b); });
    ops.mul = componentwise([](const Ring& r, Index a, Index b) { return r.mul(a, b); });
    ops.neg = [fs, split, join](Index x) {
        Scratch a(fs->size());
        split(x, a.span());
        for (std::size_t i = 0; i < fs->size(); ++i) a[i] = (*fs)[i]->neg(a[i]);
        return join(a.span());
    };
    ops.decode = [fs, split](Index x) {
        Scratch a(fs->size());
        split(x, a.span());
        std::vector<ElementForm> items;
        for (std::size_t i = 0; i < fs->size(); ++i) items.push_back((*fs)[i]->decode(a[i]));
        return ElementForm::tuple(std::move(items));
    };
    ops.encode = [fs, join, label](const ElementForm& f) {
        expect_items(f, ElementForm::Shape::Tuple, fs->size(), label);
        Scratch a(fs->size());
        for (std::size_t i = 0; i < fs->size(); ++i) a[i] = (*fs)[i]->encode(f.items[i]);
        return join(a.span());
    };
    Scratch ones(fs->size()), zeros(fs->size());
    for (std::size_t i = 0; i < fs->size(); ++i) {
        ones[i] = (*fs)[i]->one();
        zeros[i] = (*fs)[i]->zero();
    }
    const Index one = join(ones.span());
    const Index zero = join(zeros.span());
    return Ring::create(label, static_cast<Index>(order), zero, one, std::move(ops), ProductData{*fs});
}

RingHandle make_product(std::initializer_list<RingHandle> factors, const Budget& budget) {
    return make_product(std::span<const RingHandle>(factors.begin(), factors.size()), budget);
}

RingHandle make_matrix(RingHandle base, unsigned k, const Budget& budget) {
    require_positive(k, "matrix");
    std::vector<int> pattern(static_cast<std::size_t>(k) * k);
    std::iota(pattern.begin(), pattern.end(), 0);
    std::string label = "M" + std::to_string(k) + "(" + base->label() + ")";
    return make_pattern_ring(std::move(base), MatrixShape::Full, k, std::move(pattern), k * k, std::move(label),
                             budget);
}

RingHandle make_upper_triangular(RingHandle base, unsigned k, const Budget& budget) {
    require_positive(k, "triangular");
    std::vector<int> pattern(static_cast<std::size_t>(k) * k, -1);
    int next = 0;
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = i; j < k; ++j) pattern[i * k + j] = next++;
    std::string label = "T" + std::to_string(k) + "(" + base->label() + ")";
    return make_pattern_ring(std::move(base), MatrixShape::UpperTriangular, k, std::move(pattern),
                             static_cast<unsigned>(next), std::move(label), budget);
}

RingHandle make_sn_constant_diag(RingHandle base, unsigned k, const Budget& budget) {
    require_positive(k, "constant-diagonal");
    std::vector<int> pattern(static_cast<std::size_t>(k) * k, -1);
    int next = 1;
    for (unsigned i = 0; i < k; ++i) {
        pattern[i * k + i] = 0;
        for (unsigned j = i + 1; j < k; ++j) pattern[i * k + j] = next++;
    }
    std::string label = "S" + std::to_string(k) + "(" + base->label() + ")";
    return make_pattern_ring(std::move(base), MatrixShape::ConstantDiagonal, k, std::move(pattern),
                             static_cast<unsigned>(next), std::move(label), budget);
}

RingHandle make_snm(RingHandle base, unsigned n, unsigned m, const Budget& budget) {
    require_positive(n, "S_{n,m}");
    require_positive(m, "S_{n,m}");
    const unsigned size = n + m - 1;
    std::vector<int> pattern(static_cast<std::size_t>(size) * size, -1);
    for (unsigned i = 0; i < size; ++i) pattern[i * size + i] = 0;
    const int b0 = 1;                            // b_1 .. b_{n-1}
    const int d0 = b0 + static_cast<int>(n) - 1;  // d_1 .. d_{m-1}
    int next = d0 + static_cast<int>(m) - 1;      // free upper-right block
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) pattern[i * size + j] = b0 + static_cast<int>(j - i) - 1;
    for (unsigned i = n - 1; i < size; ++i)
        for (unsigned j = i + 1; j < size; ++j) pattern[i * size + j] = d0 + static_cast<int>(j - i) - 1;
    for (unsigned i = 0; i + 1 < n; ++i)
        for (unsigned j = n; j < size; ++j) pattern[i * size + j] = next++;
    std::string label = "Snm" + std::to_string(n) + " " + std::to_string(m) + "(" + base->label() + ")";
    return make_pattern_ring(std::move(base), MatrixShape::Snm, size, std::move(pattern),
                             static_cast<unsigned>(next), std::move(label), budget);
}

RingHandle make_tnm(RingHandle base, unsigned n, unsigned m, const Budget& budget) {
    require_positive(n, "T_{n,m}");
    require_positive(m, "T_{n,m}");
    const unsigned size = n + m;
    std::vector<int> pattern(static_cast<std::size_t>(size) * size, -1);
    for (unsigned i = 0; i < size; ++i) pattern[i * size + i] = 0;
    const int b0 = 1;
    const int c0 = b0 + static_cast<int>(n) - 1;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) pattern[i * size + j] = b0 + static_cast<int>(j - i) - 1;
    for (unsigned i = n; i < size; ++i)
        for (unsigned j = i + 1; j < size; ++j) pattern[i * size + j] = c0 + static_cast<int>(j - i) - 1;
    const unsigned params = n + m - 1;
    std::string label = "Tnm" + std::to_string(n) + " " + std::to_string(m) + "(" + base->label() + ")";
    return make_pattern_ring(std::move(base), MatrixShape::Tnm, size, std::move(pattern), params, std::move(label),
                             budget);
}

RingHandle make_un(RingHandle base, unsigned n, const Budget& budget) {
    if (n < 2) throw InvalidConstructionError("U_n requires n >= 2");
    std::vector<int> pattern(static_cast<std::size_t>(n) * n, -1);
    const int b0 = 1;                            // b_1 .. b_{n-1}
    const int c0 = b0 + static_cast<int>(n) - 1;  // c_1 .. c_{n-2}
    for (unsigned i = 0; i < n; ++i) {
        pattern[i * n + i] = 0;
        for (unsigned j = i + 1; j < n; ++j) {
            const int d = static_cast<int>(j - i);
            pattern[i * n + j] = (i % 2 == 0 ? b0 : c0) + d - 1;
        }
    }
    const unsigned params = 2 * n - 2;
    std::string label = "U" + std::to_string(n) + "(" + base->label() + ")";
    return make_pattern_ring(std::move(base), MatrixShape::Un, n, std::move(pattern), params, std::move(label),
                             budget);
}

RingHandle make_skew_triangular(RingHandle base, unsigned k, const Endomorphism& alpha, const Budget& budget) {
    require_positive(k, "skew triangular");
    if (alpha.ring().get() != base.get() && alpha.ring()->label() != base->label())
        throw InvalidConstructionError("endomorphism is defined on a different ring");
    std::string label = "skewT" + std::to_string(k) + "(" + base->label() + "," + alpha.label() + ")";
    require_power_within(budget, base->order(), k, label);
    const auto order = static_cast<Index>(saturating_power(base->order(), k));

    struct State {
        RingHandle base;
        Radix radix;
        std::vector<std::vector<Index>> alpha_pow;  // alpha_pow[j][a] = alpha^j(a)
    };
    auto st = std::make_shared<State>();
    st->base = base;
    st->radix = Radix{base->order(), k};
    st->alpha_pow.resize(k);
    st->alpha_pow[0].resize(base->order());
    std::iota(st->alpha_pow[0].begin(), st->alpha_pow[0].end(), Index{0});
    for (unsigned j = 1; j < k; ++j) {
        st->alpha_pow[j].resize(base->order());
        for (Index a = 0; a < base->order(); ++a) st->alpha_pow[j][a] = alpha(st->alpha_pow[j - 1][a]);
    }

    RingOps ops;
    ops.add = [st](Index x, Index y) {
        const std::size_t n = st->radix.digits;
        Scratch a(n), b(n);
        st->radix.split(x, a.span());
        st->radix.split(y, b.span());
        for (std::size_t i = 0; i < n; ++i) a[i] = st->base->add(a[i], b[i]);
        return st->radix.join(a.span());
    };
    ops.neg = [st](Index x) {
        const std::size_t n = st->radix.digits;
        Scratch a(n);
        st->radix.split(x, a.span());
        for (std::size_t i = 0; i < n; ++i) a[i] = st->base->neg(a[i]);
        return st->radix.join(a.span());
    };
    ops.mul = [st](Index x, Index y) {
        const std::size_t n = st->radix.digits;
        Scratch a(n), b(n), c(n);
        st->radix.split(x, a.span());
        st->radix.split(y, b.span());
        const Ring& r = *st->base;
        for (std::size_t i = 0; i < n; ++i) {
            Index acc = r.zero();
            for (std::size_t j = 0; j <= i; ++j) acc = r.add(acc, r.mul(a[j], st->alpha_pow[j][b[i - j]]));
            c[i] = acc;
        }
        return st->radix.join(c.span());
    };
    ops.decode = [st](Index x) {
        Scratch a(st->radix.digits);
        st->radix.split(x, a.span());
        std::vector<ElementForm> items;
        for (std::size_t i = 0; i < st->radix.digits; ++i) items.push_back(st->base->decode(a[i]));
        return ElementForm::vector(std::move(items));
    };
    ops.encode = [st, label](const ElementForm& f) {
        expect_items(f, ElementForm::Shape::Vector, st->radix.digits, label);
        Scratch a(st->radix.digits);
        for (std::size_t i = 0; i < st->radix.digits; ++i) a[i] = st->base->encode(f.items[i]);
        return st->radix.join(a.span());
    };
    Scratch digits(k);
    for (unsigned i = 0; i < k; ++i) digits[i] = base->zero();
    const Index zero = st->radix.join(digits.span());
    digits[0] = base->one();
    const Index one = st->radix.join(digits.span());
    return Ring::create(label, order, zero, one, std::move(ops), SkewTriangularData{base, k, alpha});
}

RingHandle make_trivial_extension(RingHandle base, const Budget& budget) {
    std::string label = "TE(" + base->label() + ")";
    require_power_within(budget, base->order(), 2, label);
    const Index q = base->order();
    const Ring* r = base.get();
    RingOps ops;
    ops.add = [base, q](Index x, Index y) { return base->add(x / q, y / q) * q + base->add(x % q, y % q); };
    ops.neg = [base, q](Index x) { return base->neg(x / q) * q + base->neg(x % q); };
    ops.mul = [base, q](Index x, Index y) {
        const Index r1 = x / q, m1 = x % q, r2 = y / q, m2 = y % q;
        return base->mul(r1, r2) * q + base->add(base->mul(r1, m2), base->mul(m1, r2));
    };
    ops.decode = [base, q](Index x) { return ElementForm::tuple({base->decode(x / q), base->decode(x % q)}); };
    ops.encode = [base, q, label](const ElementForm& f) {
        expect_items(f, ElementForm::Shape::Tuple, 2, label);
        return base->encode(f.items[0]) * q + base->encode(f.items[1]);
    };
    const Index zero = r->zero() * q + r->zero();
    const Index one = r->one() * q + r->zero();
    return Ring::create(label, q * q, zero, one, std::move(ops), TrivialExtensionData{base});
}

RingHandle make_formal_triangular(const BimoduleSpec& bimodule, const Budget& budget) {
    const RingHandle& r = bimodule.left_ring();
    const RingHandle& s = bimodule.right_ring();
    const Index k = bimodule.modulus();
    std::string label = "FT(" + r->label() + "," + s->label() + ",Z" + std::to_string(k) + ")";
    const std::uint64_t order = std::uint64_t{r->order()} * k * s->order();
    checked_order(budget, order, label);
    const Index qs = s->order();
    auto spec = std::make_shared<BimoduleSpec>(bimodule);
    // (r, m, s) has index (r * k + m) * |S| + s.
    auto parts = [k, qs](Index x) { return std::array<Index, 3>{x / qs / k, (x / qs) % k, x % qs}; };
    auto join = [k, qs](Index a, Index m, Index b) { return (a * k + m) * qs + b; };
    RingOps ops;
    ops.add = [spec, parts, join, k](Index x, Index y) {
        const auto p = parts(x), q = parts(y);
        return join(spec->left_ring()->add(p[0], q[0]), (p[1] + q[1]) % k, spec->right_ring()->add(p[2], q[2]));
    };
    ops.neg = [spec, parts, join, k](Index x) {
        const auto p = parts(x);
        return join(spec->left_ring()->neg(p[0]), (k - p[1]) % k, spec->right_ring()->neg(p[2]));
    };
    ops.mul = [spec, parts, join, k](Index x, Index y) {
        const auto p = parts(x), q = parts(y);
        const std::uint64_t m = (std::uint64_t{spec->phi(p[0])} * q[1] + std::uint64_t{p[1]} * spec->psi(q[2])) % k;
        return join(spec->left_ring()->mul(p[0], q[0]), static_cast<Index>(m), spec->right_ring()->mul(p[2], q[2]));
    };
    ops.decode = [spec, parts](Index x) {
        const auto p = parts(x);
        return ElementForm::tuple({spec->left_ring()->decode(p[0]), ElementForm::scalar(p[1]),
                                   spec->right_ring()->decode(p[2])});
    };
    ops.encode = [spec, join, k, label](const ElementForm& f) {
        expect_items(f, ElementForm::Shape::Tuple, 3, label);
        const ElementForm& m = f.items[1];
        if (m.shape != ElementForm::Shape::Scalar || m.value < 0 || m.value >= static_cast<std::int64_t>(k))
            throw EncodingError(label + ": module entry must be an integer in 0.." + std::to_string(k - 1));
        return join(spec->left_ring()->encode(f.items[0]), static_cast<Index>(m.value),
                    spec->right_ring()->encode(f.items[2]));
    };
    const Index zero = join(r->zero(), 0, s->zero());
    const Index one = join(r->one(), 0, s->one());
    return Ring::create(label, static_cast<Index>(order), zero, one, std::move(ops), FormalTriangularData{bimodule});
}

RingHandle make_group_ring(RingHandle coefficients, const FiniteGroup& group, const Budget& budget) {
    std::string label = "GR(" + coefficients->label() + "," + group.label() + ")";
    require_power_within(budget, coefficients->order(), group.order(), label);
    const auto order = static_cast<Index>(saturating_power(coefficients->order(), group.order()));
    struct State {
        RingHandle base;
        FiniteGroup group;
        Radix radix;
    };
    auto st = std::make_shared<State>(State{coefficients, group, Radix{coefficients->order(), group.order()}});
    RingOps ops;
    ops.add = [st](Index x, Index y) {
        const std::size_t n = st->radix.digits;
        Scratch a(n), b(n);
        st->radix.split(x, a.span());
        st->radix.split(y, b.span());
        for (std::size_t i = 0; i < n; ++i) a[i] = st->base->add(a[i], b[i]);
        return st->radix.join(a.span());
    };
    ops.neg = [st](Index x) {
        const std::size_t n = st->radix.digits;
        Scratch a(n);
        st->radix.split(x, a.span());
        for (std::size_t i = 0; i < n; ++i) a[i] = st->base->neg(a[i]);
        return st->radix.join(a.span());
    };
    ops.mul = [st](Index x, Index y) {
        const std::size_t n = st->radix.digits;
        Scratch a(n), b(n), c(n);
        st->radix.split(x, a.span());
        st->radix.split(y, b.span());
        const Ring& r = *st->base;
        for (std::size_t i = 0; i < n; ++i) c[i] = r.zero();
        for (Index g = 0; g < n; ++g) {
            if (a[g] == r.zero()) continue;
            for (Index h = 0; h < n; ++h) {
                if (b[h] == r.zero()) continue;
                const Index gh = st->group.mul(g, h);
                c[gh] = r.add(c[gh], r.mul(a[g], b[h]));
            }
        }
        return st->radix.join(c.span());
    };
    ops.decode = [st](Index x) {
        Scratch a(st->radix.digits);
        st->radix.split(x, a.span());
        std::vector<ElementForm> items;
        for (std::size_t i = 0; i < st->radix.digits; ++i) items.push_back(st->base->decode(a[i]));
        return ElementForm::vector(std::move(items));
    };
    ops.encode = [st, label](const ElementForm& f) {
        expect_items(f, ElementForm::Shape::Vector, st->radix.digits, label);
        Scratch a(st->radix.digits);
        for (std::size_t i = 0; i < st->radix.digits; ++i) a[i] = st->base->encode(f.items[i]);
        return st->radix.join(a.span());
    };
    Scratch digits(group.order());
    for (Index g = 0; g < group.order(); ++g) digits[g] = coefficients->zero();
    const Index zero = st->radix.join(digits.span());
    digits[group.identity()] = coefficients->one();
    const Index one = st->radix.join(digits.span());
    return Ring::create(label, order, zero, one, std::move(ops), GroupRingData{coefficients, group});
}

RingHandle make_quotient(RingHandle parent, std::span<const Index> ideal, const std::string& ideal_label) {
    const Ring& r = *parent;
    std::vector<std::uint8_t> member(r.order(), 0);
    for (const Index i : ideal) {
        if (i >= r.order()) throw InvalidConstructionError("ideal element out of range");
        member[i] = 1;
    }
    std::vector<Index> elems;
    for (Index i = 0; i < r.order(); ++i)
        if (member[i]) elems.push_back(i);
    if (!member[r.zero()]) throw InvalidConstructionError(ideal_label + " does not contain zero");
    for (const Index a : elems) {
        if (!member[r.neg(a)]) throw InvalidConstructionError(ideal_label + " is not closed under negation");
        for (const Index b : elems)
            if (!member[r.add(a, b)]) throw InvalidConstructionError(ideal_label + " is not closed under addition");
        for (Index x = 0; x < r.order(); ++x)
            if (!member[r.mul(x, a)] || !member[r.mul(a, x)])
                throw InvalidConstructionError(ideal_label + " is not a two-sided ideal");
    }

    QuotientData data;
    data.parent = parent;
    data.coset_of.assign(r.order(), r.order());
    for (Index a = 0; a < r.order(); ++a) {
        if (data.coset_of[a] != r.order()) continue;
        const auto id = static_cast<Index>(data.representative.size());
        data.representative.push_back(a);
        for (const Index i : elems) data.coset_of[r.add(a, i)] = id;
    }
    const auto order = static_cast<Index>(data.representative.size());
    auto qd = std::make_shared<QuotientData>(data);
    RingOps ops;
    ops.add = [qd](Index x, Index y) {
        return qd->coset_of[qd->parent->add(qd->representative[x], qd->representative[y])];
    };
    ops.mul = [qd](Index x, Index y) {
        return qd->coset_of[qd->parent->mul(qd->representative[x], qd->representative[y])];
    };
    ops.neg = [qd](Index x) { return qd->coset_of[qd->parent->neg(qd->representative[x])]; };
    ops.decode = [qd](Index x) { return qd->parent->decode(qd->representative[x]); };
    ops.encode = [qd](const ElementForm& f) { return qd->coset_of[qd->parent->encode(f)]; };
    const Index zero = data.coset_of[r.zero()];
    const Index one = data.coset_of[r.one()];
    return Ring::create(r.label() + "/" + ideal_label, order, zero, one, std::move(ops), std::move(data));
}

RingHandle make_corner(RingHandle parent, Index e) {
    const Ring& r = *parent;
    if (e >= r.order()) throw InvalidConstructionError("corner idempotent out of range");
    if (r.mul(e, e) != e) throw InvalidConstructionError(r.format(e) + " is not idempotent");
    if (e == r.zero()) throw InvalidConstructionError("the corner idempotent must be nonzero");
    std::vector<Index> carrier;
    std::vector<std::uint8_t> seen(r.order(), 0);
    for (Index a = 0; a < r.order(); ++a) {
        const Index x = r.mul(r.mul(e, a), e);
        if (!seen[x]) {
            seen[x] = 1;
            carrier.push_back(x);
        }
    }
    std::sort(carrier.begin(), carrier.end());
    struct State {
        RingHandle parent;
        std::vector<Index> carrier;
        std::vector<Index> position;
    };
    auto st = std::make_shared<State>();
    st->parent = parent;
    st->carrier = carrier;
    st->position.assign(r.order(), r.order());
    for (Index i = 0; i < carrier.size(); ++i) st->position[carrier[i]] = i;
    RingOps ops;
    ops.add = [st](Index x, Index y) { return st->position[st->parent->add(st->carrier[x], st->carrier[y])]; };
    ops.mul = [st](Index x, Index y) { return st->position[st->parent->mul(st->carrier[x], st->carrier[y])]; };
    ops.neg = [st](Index x) { return st->position[st->parent->neg(st->carrier[x])]; };
    ops.decode = [st](Index x) { return st->parent->decode(st->carrier[x]); };
    ops.encode = [st](const ElementForm& f) {
        const Index p = st->position[st->parent->encode(f)];
        if (p == st->parent->order()) throw EncodingError("element is not in the corner ring");
        return p;
    };
    std::string label = "corner(" + r.label() + "," + r.format(e) + ")";
    const Index zero = st->position[r.zero()];
    const Index one = st->position[e];
    return Ring::create(std::move(label), static_cast<Index>(carrier.size()), zero, one, std::move(ops),
                        CornerData{parent, e, carrier});
}

Index skew_from_coefficients(const Ring& skew, std::span<const Index> coefficients) {
    const auto* data = skew.construction<SkewTriangularData>();
    if (data == nullptr) throw InvalidConstructionError(skew.label() + " is not a skew triangular ring");
    if (coefficients.size() != data->length)
        throw InvalidConstructionError("expected " + std::to_string(data->length) + " coefficients");
    for (const Index c : coefficients)
        if (c >= data->base->order()) throw ForeignElementError("coefficient out of range");
    return Radix{data->base->order(), data->length}.join(coefficients);
}

std::vector<Index> skew_to_coefficients(const Ring& skew, Index element) {
    const auto* data = skew.construction<SkewTriangularData>();
    if (data == nullptr) throw InvalidConstructionError(skew.label() + " is not a skew triangular ring");
    if (element >= skew.order()) throw ForeignElementError("element out of range");
    std::vector<Index> out(data->length);
    Radix{data->base->order(), data->length}.split(element, out);
    return out;
}

}  // namespace nusring
