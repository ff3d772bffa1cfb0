#include "rcperiod/multipoly.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "rcperiod/error.hpp"

namespace rcp {

bool grlex_less(const Exponent& a, const Exponent& b)
{
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db)
        return da < db;
    return a < b;
}

std::vector<Exponent> monomials_of_degree(int nvars, int degree)
{
    std::vector<Exponent> out;
    Exponent e(static_cast<std::size_t>(nvars), 0);
    // recursive fill, highest power of the leading variable first
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == nvars - 1) {
            e[static_cast<std::size_t>(pos)] = left;
            out.push_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[static_cast<std::size_t>(pos)] = k;
            self(self, pos + 1, left - k);
        }
    };
    if (nvars > 0)
        rec(rec, 0, degree);
    return out;
}

std::string monomial_string(const Exponent& e)
{
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += 'x' + std::to_string(i);
        if (e[i] > 1)
            s += '^' + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

namespace {

std::string shortest(double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} // namespace

std::string format_complex(Complex c)
{
    if (c.imag() == 0.0)
        return shortest(c.real());
    if (c.real() == 0.0)
        return shortest(c.imag()) + "i";
    std::string im = shortest(std::abs(c.imag())) + "i";
    return "(" + shortest(c.real()) + (c.imag() < 0 ? "-" : "+") + im + ")";
}

MultiPoly MultiPoly::constant(int nvars, Complex c)
{
    MultiPoly p(nvars);
    p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index)
{
    if (index < 0 || index >= nvars)
        throw Error(Errc::IndexError, "variable index " + std::to_string(index) + " out of range");
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& e, Complex c)
{
    MultiPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

Complex MultiPoly::coeff(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Complex{} : it->second;
}

void MultiPoly::add_term(const Exponent& e, Complex c)
{
    if (static_cast<int>(e.size()) != nvars_)
        throw Error(Errc::DimensionMismatch, "exponent length " + std::to_string(e.size()) + " vs "
                                                 + std::to_string(nvars_) + " variables");
    if (std::any_of(e.begin(), e.end(), [](int k) { return k < 0; }))
        throw Error(Errc::InputError, "negative exponent");
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw Error(Errc::InputError, "non-finite coefficient");
    if (c == Complex{})
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == Complex{})
            terms_.erase(it);
    }
}

int MultiPoly::total_degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool MultiPoly::is_homogeneous() const
{
    const int d = total_degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& kv) { return std::accumulate(kv.first.begin(), kv.first.end(), 0) == d; });
}

double MultiPoly::scale() const noexcept
{
    double m = 0.0;
    for (const auto& [e, c] : terms_)
        m = std::max(m, std::abs(c));
    return m;
}

MultiPoly MultiPoly::partial(int index) const
{
    if (index < 0 || index >= nvars_)
        throw Error(Errc::IndexError, "partial index out of range");
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        const int k = e[static_cast<std::size_t>(index)];
        if (k == 0)
            continue;
        Exponent f = e;
        f[static_cast<std::size_t>(index)] = k - 1;
        out.add_term(f, c * static_cast<double>(k));
    }
    return out;
}

Complex MultiPoly::operator()(std::span<const Complex> point) const
{
    if (static_cast<int>(point.size()) != nvars_)
        throw Error(Errc::DimensionMismatch, "evaluation point has wrong length");
    Complex acc{};
    for (const auto& [e, c] : terms_) {
        Complex term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k)
                term *= point[i];
        acc += term;
    }
    return acc;
}

namespace {

template <class T>
std::vector<std::vector<T>> power_table(std::span<const T> base, const std::map<Exponent, Complex>& terms, T one)
{
    std::vector<int> maxpow(base.size(), 0);
    for (const auto& [e, c] : terms)
        for (std::size_t i = 0; i < e.size(); ++i)
            maxpow[i] = std::max(maxpow[i], e[i]);
    std::vector<std::vector<T>> table(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        table[i].push_back(one);
        for (int k = 1; k <= maxpow[i]; ++k)
            table[i].push_back(table[i].back() * base[i]);
    }
    return table;
}

} // namespace

BinaryForm MultiPoly::compose(std::span<const BinaryForm> forms) const
{
    if (static_cast<int>(forms.size()) != nvars_)
        throw Error(Errc::DimensionMismatch, "compose: " + std::to_string(forms.size()) + " forms for "
                                                 + std::to_string(nvars_) + " variables");
    if (!is_homogeneous())
        throw Error(Errc::InputError, "compose with binary forms needs a homogeneous polynomial");
    const int D = forms.empty() ? 0 : forms.front().degree();
    for (const auto& f : forms)
        if (f.degree() != D)
            throw Error(Errc::DimensionMismatch, "binary forms of mixed degree");
    const int k = std::max(total_degree(), 0);
    BinaryForm out = BinaryForm::zero(k * D);
    if (terms_.empty())
        return out;
    const auto table = power_table<BinaryForm>(forms, terms_, BinaryForm(0, {1.0}));
    for (const auto& [e, c] : terms_) {
        BinaryForm term(0, {c});
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                term = term * table[i][static_cast<std::size_t>(e[i])];
        out += term;
    }
    return out;
}

UniPoly MultiPoly::compose(std::span<const UniPoly> polys) const
{
    if (static_cast<int>(polys.size()) != nvars_)
        throw Error(Errc::DimensionMismatch, "compose: wrong number of polynomials");
    UniPoly out;
    const auto table = power_table<UniPoly>(polys, terms_, UniPoly::constant(1.0));
    for (const auto& [e, c] : terms_) {
        UniPoly term = UniPoly::constant(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                term = term * table[i][static_cast<std::size_t>(e[i])];
        out += term;
    }
    return out;
}

void MultiPoly::check_vars(const MultiPoly& o) const
{
    if (o.nvars_ != nvars_)
        throw Error(Errc::DimensionMismatch, "polynomials in different numbers of variables");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    check_vars(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    check_vars(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(Complex c)
{
    if (c == Complex{}) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    std::erase_if(terms_, [](const auto& kv) { return kv.second == Complex{}; });
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    a.check_vars(b);
    MultiPoly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e = ea;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly MultiPoly::pow(int k) const
{
    MultiPoly r = constant(nvars_, 1.0);
    for (int i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::vector<std::pair<Exponent, Complex>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return grlex_less(b.first, a.first); });
    std::string s;
    for (const auto& [e, c] : v) {
        const bool constant_term = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
        std::string coef;
        bool negative = false;
        if (c.imag() == 0.0 && c.real() < 0.0) {
            negative = true;
            coef = format_complex(-c);
        } else {
            coef = format_complex(c);
        }
        if (!s.empty() || negative)
            s += negative ? "-" : "+";
        if (constant_term)
            s += coef;
        else if (coef == "1")
            s += monomial_string(e);
        else
            s += coef + "*" + monomial_string(e);
    }
    return s;
}

} // namespace rcp
