#include "sl2rep/cyclo.hpp"

#include "sl2rep/fq.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace sl2rep {

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("euler_phi(0)");
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

constexpr std::int64_t kCoeffLimit = std::int64_t{1} << 50;

void check_magnitude(std::int64_t c) {
    if (c > kCoeffLimit || c < -kCoeffLimit) {
        throw std::overflow_error("cyclotomic reduction coefficient out of range");
    }
}

IntPoly compute_cyclotomic(std::uint32_t n, std::unordered_map<std::uint32_t, IntPoly>& memo) {
    if (auto it = memo.find(n); it != memo.end()) return it->second;

    IntPoly num(n + 1, 0);  // x^n - 1
    num[0] = -1;
    num[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const IntPoly den = compute_cyclotomic(d, memo);
        // Exact division by a monic polynomial.
        const std::size_t dd = den.size() - 1;
        IntPoly quot(num.size() - dd, 0);
        for (std::size_t i = num.size(); i-- > dd;) {
            const std::int64_t c = num[i];
            quot[i - dd] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j <= dd; ++j) {
                num[i - dd + j] -= c * den[j];
                check_magnitude(num[i - dd + j]);
            }
        }
        for (std::size_t j = 0; j < dd; ++j) {
            if (num[j] != 0) throw std::logic_error("cyclotomic division left a remainder");
        }
        num = std::move(quot);
    }
    memo.emplace(n, num);
    return num;
}

// Reduction data for one conductor: Phi_n and x^e mod Phi_n for 0 <= e < n.
struct Basis {
    std::uint32_t n = 1;
    std::size_t phi = 1;
    IntPoly modulus;
    std::vector<IntPoly> power;
};

std::shared_ptr<const Basis> build_basis(std::uint32_t n) {
    auto b = std::make_shared<Basis>();
    b->n = n;
    b->modulus = cyclotomic_polynomial(n);
    b->phi = b->modulus.size() - 1;
    b->power.resize(n);

    IntPoly cur(b->phi, 0);
    cur[0] = 1;
    for (std::uint32_t e = 0; e < n; ++e) {
        b->power[e] = cur;
        // cur <- x * cur mod Phi_n
        const std::int64_t top = cur[b->phi - 1];
        for (std::size_t i = b->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0) {
            for (std::size_t i = 0; i < b->phi; ++i) {
                cur[i] -= top * b->modulus[i];
                check_magnitude(cur[i]);
            }
        }
    }
    return b;
}

std::shared_ptr<const Basis> basis_for(std::uint32_t n) {
    static std::mutex mu;
    static std::unordered_map<std::uint32_t, std::shared_ptr<const Basis>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    auto b = build_basis(n);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(b)).first->second;
}

std::uint32_t lcm32(std::uint32_t a, std::uint32_t b) {
    const std::uint64_t l = std::lcm(std::uint64_t{a}, std::uint64_t{b});
    if (l > 0xffffffffULL) throw std::overflow_error("conductor overflow");
    return static_cast<std::uint32_t>(l);
}

std::uint32_t mod_exponent(std::int64_t k, std::uint32_t n) {
    std::int64_t r = k % static_cast<std::int64_t>(n);
    if (r < 0) r += n;
    return static_cast<std::uint32_t>(r);
}

// GMP arithmetic assumes canonical operands; callers may hand in 2/4.
Rational canonical(Rational r) {
    r.canonicalize();
    return r;
}

void add_scaled_row(std::vector<Rational>& acc, const IntPoly& row, const Rational& c) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] == 0) continue;
        if (row[i] == 1) {
            acc[i] += c;
        } else if (row[i] == -1) {
            acc[i] -= c;
        } else {
            acc[i] += c * row[i];
        }
    }
}

}  // namespace

IntPoly cyclotomic_polynomial(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_polynomial(0)");
    static std::mutex mu;
    static std::unordered_map<std::uint32_t, IntPoly> memo;
    std::lock_guard<std::mutex> lock(mu);
    return compute_cyclotomic(n, memo);
}

CycNum::CycNum() : conductor_(1), coeffs_(1, Rational(0)) {}

CycNum::CycNum(long value) : conductor_(1), coeffs_(1, Rational(value)) {}

CycNum::CycNum(const Rational& value) : conductor_(1), coeffs_(1, value) {
    coeffs_[0].canonicalize();
}

CycNum::CycNum(std::uint32_t conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

CycNum CycNum::from_coeffs(std::uint32_t conductor, std::vector<Rational> coeffs) {
    if (conductor == 0) throw std::invalid_argument("conductor must be positive");
    if (coeffs.size() != euler_phi(conductor)) {
        throw std::invalid_argument("expected " + std::to_string(euler_phi(conductor)) +
                                    " coefficients for conductor " + std::to_string(conductor));
    }
    for (auto& c : coeffs) c.canonicalize();
    return CycNum(conductor, std::move(coeffs));
}

CycNum CycNum::embed(std::uint32_t target) const {
    if (target == conductor_) return *this;
    if (target == 0 || target % conductor_ != 0) {
        throw std::invalid_argument("cannot embed conductor " + std::to_string(conductor_) +
                                    " into " + std::to_string(target));
    }
    const auto b = basis_for(target);
    const std::uint64_t step = target / conductor_;
    std::vector<Rational> out(b->phi, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        add_scaled_row(out, b->power[(k * step) % target], coeffs_[k]);
    }
    return CycNum(target, std::move(out));
}

bool CycNum::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        if (coeffs_[k] != 0) return false;
    }
    return true;
}

std::optional<Rational> CycNum::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
}

CycNum CycNum::conjugate() const {
    if (is_rational()) return *this;
    const auto b = basis_for(conductor_);
    std::vector<Rational> out(b->phi, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        add_scaled_row(out, b->power[(conductor_ - k) % conductor_], coeffs_[k]);
    }
    return CycNum(conductor_, std::move(out));
}

std::complex<double> CycNum::approx() const {
    std::complex<double> z{0.0, 0.0};
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / conductor_;
        z += coeffs_[k].get_d() * std::polar(1.0, angle);
    }
    return z;
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
    if (rhs.conductor_ == 1) {
        coeffs_[0] += rhs.coeffs_[0];
        return *this;
    }
    const std::uint32_t l = lcm32(conductor_, rhs.conductor_);
    if (l != conductor_) *this = embed(l);
    if (rhs.conductor_ == l) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    } else {
        const CycNum r = rhs.embed(l);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += r.coeffs_[i];
    }
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) { return *this += -rhs; }

CycNum CycNum::operator-() const {
    CycNum out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycNum& CycNum::operator*=(const Rational& rhs) {
    const Rational f = canonical(rhs);
    for (auto& c : coeffs_) c *= f;
    return *this;
}

CycNum& CycNum::operator/=(const Rational& rhs) {
    const Rational f = canonical(rhs);
    if (f == 0) throw std::domain_error("division of a cyclotomic number by zero");
    for (auto& c : coeffs_) c /= f;
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& rhs) {
    if (rhs.is_rational()) return *this *= rhs.coeffs_[0];
    if (is_rational()) {
        const Rational s = coeffs_[0];
        *this = rhs;
        return *this *= s;
    }
    const std::uint32_t l = lcm32(conductor_, rhs.conductor_);
    const CycNum a = embed(l);
    const CycNum bb = rhs.embed(l);
    const auto basis = basis_for(l);
    const std::size_t phi = basis->phi;

    std::vector<Rational> wide(2 * phi - 1, Rational(0));
    for (std::size_t i = 0; i < phi; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < phi; ++j) {
            if (bb.coeffs_[j] == 0) continue;
            wide[i + j] += a.coeffs_[i] * bb.coeffs_[j];
        }
    }
    std::vector<Rational> out(wide.begin(), wide.begin() + static_cast<std::ptrdiff_t>(phi));
    for (std::size_t e = phi; e < wide.size(); ++e) {
        if (wide[e] == 0) continue;
        add_scaled_row(out, basis->power[e % l], wide[e]);
    }
    conductor_ = l;
    coeffs_ = std::move(out);
    return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
    const std::uint32_t l = lcm32(a.conductor_, b.conductor_);
    return a.embed(l).coeffs_ == b.embed(l).coeffs_;
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) {
    os << "[N=" << x.conductor() << ":";
    for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
        os << (k == 0 ? " " : ", ") << x.coeffs()[k].get_str();
    }
    return os << "]";
}

CycNum root_of_unity(std::uint32_t n, std::int64_t k) {
    if (n == 0) throw std::invalid_argument("root_of_unity: n must be positive");
    const auto b = basis_for(n);
    const IntPoly& row = b->power[mod_exponent(k, n)];
    std::vector<Rational> coeffs(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) coeffs[i] = Rational(static_cast<long>(row[i]));
    return CycNum::from_coeffs(n, std::move(coeffs));
}

CycNum nu(std::uint32_t r, std::int64_t s) {
    return root_of_unity(r, s) + root_of_unity(r, -s);
}

CycNum sqrt_eps_q(std::uint32_t q) {
    if (!is_odd_prime(q)) {
        throw std::invalid_argument("sqrt_eps_q: " + std::to_string(q) + " is not an odd prime");
    }
    CycNum g;
    for (std::uint32_t k = 1; k < q; ++k) {
        const int ls = legendre_symbol(FqElem(k, q));
        g += Rational(ls) * root_of_unity(q, k);
    }
    return g;
}

void CycSum::add(const CycNum& x) {
    if (x.is_rational()) {
        rational_part_ += x.coeffs()[0];
        return;
    }
    auto [it, inserted] = partials_.try_emplace(x.conductor(), x);
    if (!inserted) it->second += x;
}

void CycSum::add(const CycNum& x, const Rational& weight) {
    const Rational w = canonical(weight);
    if (w == 0) return;
    if (x.is_rational()) {
        rational_part_ += x.coeffs()[0] * w;
        return;
    }
    add(x * w);
}

CycNum CycSum::total() const {
    CycNum out(rational_part_);
    std::vector<const CycNum*> irrational;
    for (const auto& [n, v] : partials_) {
        if (v.is_rational()) {
            out += CycNum(v.coeffs()[0]);
        } else {
            irrational.push_back(&v);
        }
    }
    for (const CycNum* v : irrational) out += *v;
    return out;
}

}  // namespace sl2rep
