#include "tassign/fraction.hpp"

#include "tassign/errors.hpp"

#include <algorithm>
#include <map>

namespace tassign {

LinFraction::LinFraction(Polynomial numerator) : numerator_(std::move(numerator)) {}

LinFraction::LinFraction(Polynomial numerator, std::vector<DenominatorFactor> denominator)
    : numerator_(std::move(numerator)) {
    std::map<LinForm, int> merged;
    for (auto& f : denominator) {
        if (f.multiplicity < 0) throw Error("negative denominator multiplicity");
        if (f.form.rank() != numerator_.rank()) throw RankMismatch("denominator rank differs from numerator");
        const LinForm dir = f.form.direction();
        const std::int64_t s = f.form.scale();
        Integer sp = 1;
        for (int i = 0; i < f.multiplicity; ++i) sp *= Integer(static_cast<long>(s));
        numerator_ = numerator_.scaled(Rational(1) / Rational(sp));
        merged[dir] += f.multiplicity;
    }
    for (auto& [form, m] : merged)
        if (m > 0) denominator_.push_back({form, m});
    reduce();
}

LinFraction LinFraction::over_weights(const Polynomial& numerator, std::span<const LinForm> weights) {
    std::vector<DenominatorFactor> d;
    d.reserve(weights.size());
    for (const auto& w : weights) d.push_back({w, 1});
    return LinFraction(numerator, std::move(d));
}

void LinFraction::reduce() {
    if (numerator_.is_zero()) {
        denominator_.clear();
        numerator_ = Polynomial::zero(numerator_.rank(), 0);
        return;
    }
    for (auto& f : denominator_) {
        while (f.multiplicity > 0 && numerator_.degree() > 0) {
            auto q = divide_by_linear_form(numerator_, f.form, 1);
            if (!q) break;
            numerator_ = std::move(*q);
            --f.multiplicity;
        }
    }
    std::erase_if(denominator_, [](const DenominatorFactor& f) { return f.multiplicity == 0; });
    std::sort(denominator_.begin(), denominator_.end(),
              [](const DenominatorFactor& a, const DenominatorFactor& b) { return a.form > b.form; });
}

int LinFraction::denominator_degree() const {
    int d = 0;
    for (const auto& f : denominator_) d += f.multiplicity;
    return d;
}

LinFraction LinFraction::times(const Polynomial& p) const {
    LinFraction out;
    out.numerator_ = numerator_ * p;
    out.denominator_ = denominator_;
    out.reduce();
    return out;
}

bool LinFraction::operator==(const LinFraction& other) const {
    return numerator_ == other.numerator_ && denominator_ == other.denominator_;
}

namespace {

std::string wrap_if_sum(const Polynomial& p) {
    const std::string s = p.to_string();
    return p.terms().size() > 1 ? "(" + s + ")" : s;
}

} // namespace

std::string denominator_to_string(const std::vector<DenominatorFactor>& d) {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += '*';
        out += wrap_if_sum(d[i].form.to_polynomial());
        if (d[i].multiplicity > 1) out += '^' + std::to_string(d[i].multiplicity);
    }
    return d.size() > 1 ? "(" + out + ")" : out;
}

std::string LinFraction::to_string() const {
    if (denominator_.empty()) return numerator_.to_string();
    return wrap_if_sum(numerator_) + "/" + denominator_to_string(denominator_);
}

LinFraction fraction_sum(std::span<const LinFraction> terms) {
    if (terms.empty()) throw Error("fraction_sum needs at least one term to fix the rank");
    const std::size_t rank = terms.front().rank();
    std::map<LinForm, int> common;
    for (const auto& t : terms) {
        if (t.rank() != rank) throw RankMismatch("fraction_sum terms disagree on rank");
        if (t.is_zero()) continue;
        for (const auto& f : t.denominator()) common[f.form] = std::max(common[f.form], f.multiplicity);
    }
    Polynomial numerator(rank, 0);
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        Polynomial scaled = t.numerator();
        for (const auto& [form, m] : common) {
            int own = 0;
            for (const auto& f : t.denominator())
                if (f.form == form) own = f.multiplicity;
            if (m > own) scaled *= form.to_polynomial().pow(m - own);
        }
        numerator += scaled;
    }
    std::vector<DenominatorFactor> d;
    for (const auto& [form, m] : common) d.push_back({form, m});
    return LinFraction(std::move(numerator), std::move(d));
}

std::variant<Polynomial, NotPolynomial> fraction_as_polynomial(const LinFraction& f) {
    if (f.is_polynomial()) return f.numerator();
    return NotPolynomial{f.denominator()};
}

} // namespace tassign
