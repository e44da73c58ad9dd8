#include "pnchow/proj_bundle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pnchow {

MixedClass::MixedClass(Bundle base) : base_(std::move(base)) {
    if (base_.rank() < 1)
        throw std::invalid_argument("P(E) needs rank at least 1");
}

MixedClass MixedClass::monomial(Bundle base, int h_exp, int xi_exp, Int coeff) {
    MixedClass r(std::move(base));
    if (h_exp < 0 || xi_exp < 0) throw std::invalid_argument("negative exponent");
    if (h_exp <= r.base_.dim()) r.insert(h_exp, xi_exp, coeff);
    return r;
}

void MixedClass::insert(int i, int j, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = coeffs_.try_emplace({i, j}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

bool MixedClass::is_normal() const {
    for (const auto& [k, c] : coeffs_)
        if (k.second >= base_.rank()) return false;
    return true;
}

namespace {
void require_same_base(const MixedClass& a, const MixedClass& b) {
    if (!(a.base() == b.base()))
        throw dim_mismatch_error("classes live on different projective bundles");
}
}  // namespace

MixedClass operator+(const MixedClass& a, const MixedClass& b) {
    require_same_base(a, b);
    MixedClass r = a;
    for (const auto& [k, c] : b.coefficients()) r.insert(k.first, k.second, c);
    return r;
}

MixedClass operator-(const MixedClass& a, const MixedClass& b) {
    require_same_base(a, b);
    MixedClass r = a;
    for (const auto& [k, c] : b.coefficients()) r.insert(k.first, k.second, -c);
    return r;
}

MixedClass operator*(const MixedClass& a, const MixedClass& b) {
    require_same_base(a, b);
    const int n = a.base().dim();
    MixedClass r(a.base());
    for (const auto& [ka, ca] : a.coefficients())
        for (const auto& [kb, cb] : b.coefficients()) {
            int i = ka.first + kb.first;
            if (i > n) continue;
            r.insert(i, ka.second + kb.second, ca * cb);
        }
    return r;
}

MixedClass operator*(const Int& s, const MixedClass& a) {
    MixedClass r(a.base());
    if (s == 0) return r;
    for (const auto& [k, c] : a.coefficients()) r.insert(k.first, k.second, s * c);
    return r;
}

MixedClass MixedClass::reduce() const {
    const int n = base_.dim();
    const int r = base_.rank();
    const TruncZ& c = base_.chern();

    // sparse worklist ordered by descending xi-exponent; each substitution
    // strictly lowers it, and h-exponents are capped at n
    std::map<std::pair<int, int>, Int, std::greater<>> work;
    for (const auto& [k, co] : coeffs_) work[{k.second, k.first}] = co;

    MixedClass out(base_);
    while (!work.empty()) {
        auto it = work.begin();
        auto [j, i] = it->first;
        Int co = it->second;
        work.erase(it);
        if (j < r) {
            out.insert(i, j, co);
            continue;
        }
        for (int s = 1; s <= std::min(r, n); ++s) {
            if (c[s] == 0 || i + s > n) continue;
            Int add = co * c[s];
            if (s % 2 == 0) add = -add;
            auto [w, fresh] = work.try_emplace({j - s, i + s}, add);
            if (!fresh) {
                w->second += add;
                if (w->second == 0) work.erase(w);
            }
        }
    }
    return out;
}

Int MixedClass::integral() const {
    const int n = base_.dim();
    const int r = base_.rank();
    const int top = n + r - 1;
    for (const auto& [k, c] : coeffs_)
        if (k.first + k.second != top)
            throw degree_mismatch_error(
                "integral of a class not homogeneous of degree " + std::to_string(top));
    MixedClass red = reduce();
    auto it = red.coeffs_.find({n, r - 1});
    return it == red.coeffs_.end() ? Int(0) : it->second;
}

bool operator==(const MixedClass& a, const MixedClass& b) {
    if (!(a.base() == b.base())) return false;
    return a.reduce().coefficients() == b.reduce().coefficients();
}

std::string MixedClass::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool bare = (k.first == 0 && k.second == 0);
        if (a != 1 || bare) out << a.get_str();
        if (k.first > 0) {
            out << "h";
            if (k.first > 1) out << "^" << k.first;
        }
        if (k.second > 0) {
            out << "xi";
            if (k.second > 1) out << "^" << k.second;
        }
    }
    return out.str();
}

Int taut_degree(const Bundle& a) {
    if (a.rank() < 1) throw std::invalid_argument("taut_degree needs rank >= 1");
    return MixedClass::monomial(a, 0, a.dim() + a.rank() - 1).integral();
}

Int divisor_top_intersection(long a, long b, const Bundle& bundle) {
    if (bundle.rank() < 1) throw std::invalid_argument("needs rank >= 1");
    const int top = bundle.dim() + bundle.rank() - 1;
    if (top < 1) throw std::invalid_argument("bundle too small for a divisor product");
    MixedClass cls = MixedClass::monomial(bundle, 0, top, Int(a)) +
                     MixedClass::monomial(bundle, 1, top - 1, Int(b));
    return cls.integral();
}

Int segre_pushforward(const Bundle& a, int i) {
    if (a.rank() < 1) throw std::invalid_argument("needs rank >= 1");
    if (i < 0 || i > a.dim()) throw std::invalid_argument("Segre index out of range");
    Int v = MixedClass::monomial(a, a.dim() - i, a.rank() - 1 + i).integral();
    return (i % 2 == 0) ? v : -v;
}

}  // namespace pnchow
