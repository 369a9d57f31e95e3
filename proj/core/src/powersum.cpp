#include "gctk/powersum.hpp"

#include <algorithm>
#include <stdexcept>

namespace gctk {

mpq_class PowerSumVector::coefficient(const Partition& pi) const {
    auto it = terms_.find(pi);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void PowerSumVector::add_term(const Partition& pi, const mpq_class& c) {
    if (pi.size() != degree_)
        throw std::invalid_argument("PowerSumVector::add_term: degree mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(pi, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PowerSumVector& PowerSumVector::operator+=(const PowerSumVector& other) {
    if (degree_ != other.degree_)
        throw std::invalid_argument("PowerSumVector::operator+=: degree mismatch");
    for (const auto& [pi, c] : other.terms_) add_term(pi, c);
    return *this;
}

PowerSumVector PowerSumVector::operator*(const PowerSumVector& other) const {
    PowerSumVector out(degree_ + other.degree_);
    std::vector<std::uint32_t> merged;
    for (const auto& [pa, ca] : terms_) {
        for (const auto& [pb, cb] : other.terms_) {
            merged.resize(pa.length() + pb.length());
            std::merge(pa.parts().begin(), pa.parts().end(),
                       pb.parts().begin(), pb.parts().end(),
                       merged.begin(), std::greater<std::uint32_t>());
            out.add_term(Partition(merged), ca * cb);
        }
    }
    return out;
}

PowerSumVector PowerSumVector::scaled(const mpq_class& c) const {
    PowerSumVector out(degree_);
    if (c == 0) return out;
    for (const auto& [pi, coef] : terms_) out.terms_.emplace(pi, coef * c);
    return out;
}

PowerSumVector h_in_powersums(std::uint32_t n) {
    PowerSumVector out(n);
    for (const Partition& rho : enumerate_partitions(n)) {
        ClassType cls(rho);
        out.add_term(rho, mpq_class(1) / mpq_class(cls.centralizer_order()));
    }
    return out;
}

PowerSumVector powersum_plethysm(std::uint32_t k, const PowerSumVector& f) {
    if (k == 0) throw std::invalid_argument("powersum_plethysm: k must be positive");
    PowerSumVector out(f.degree() * k);
    for (const auto& [pi, c] : f.terms()) {
        std::vector<std::uint32_t> parts(pi.parts());
        for (auto& p : parts) p *= k;
        out.add_term(Partition(std::move(parts)), c);
    }
    return out;
}

PowerSumVector outer_plethysm_h_h(std::uint32_t d, std::uint32_t n) {
    const PowerSumVector hn = h_in_powersums(n);
    PowerSumVector out(static_cast<std::uint64_t>(d) * n);
    for (const Partition& rho : enumerate_partitions(d)) {
        PowerSumVector prod(0);
        prod.add_term(Partition(), 1);
        for (std::uint32_t part : rho.parts())
            prod = prod * powersum_plethysm(part, hn);
        ClassType cls(rho);
        out += prod.scaled(mpq_class(1) / mpq_class(cls.centralizer_order()));
    }
    return out;
}

mpq_class schur_coefficient(const PowerSumVector& f, const Partition& lambda,
                            CharacterTable& chi) {
    mpq_class acc = 0;
    for (const auto& [pi, c] : f.terms())
        acc += c * mpq_class(chi.character(lambda, pi));
    return acc;
}

mpz_class pleth(std::uint32_t n, std::uint32_t d, const Partition& lambda,
                std::uint32_t num_vars, CharacterTable& chi) {
    if (lambda.size() != static_cast<std::uint64_t>(d) * n)
        throw std::invalid_argument("pleth: |lambda| != d*n");
    if (lambda.length() > num_vars) return 0;
    const mpq_class c = schur_coefficient(outer_plethysm_h_h(d, n), lambda, chi);
    if (c.get_den() != 1 || c < 0)
        throw std::logic_error("pleth: coefficient not a nonnegative integer");
    return c.get_num();
}

}  // namespace gctk
