#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "artin/errors.hpp"
#include "artin/numeric.hpp"

namespace artin {

/// Concrete growth function N -> M. Either a clamped power law
/// M(N) = max(2, floor(c * N^alpha)) with rational c > 0 and alpha >= 0,
/// or an explicit table for extensibility.
class GrowthSpec {
  public:
    static GrowthSpec power(Rational coefficient, Rational exponent) {
        if (coefficient <= 0) throw Error("growth coefficient must be positive");
        if (exponent < 0) throw Error("growth exponent must be non-negative");
        GrowthSpec g;
        g.kind_ = Kind::Power;
        g.coeff_ = std::move(coefficient);
        g.exponent_ = std::move(exponent);
        return g;
    }

    static GrowthSpec table(std::map<int, std::uint64_t> values) {
        GrowthSpec g;
        g.kind_ = Kind::Table;
        g.table_ = std::move(values);
        return g;
    }

    bool is_power() const { return kind_ == Kind::Power; }
    const Rational& coefficient() const { return coeff_; }
    const Rational& exponent() const { return exponent_; }

    /// Exact integer evaluation: floor is computed in big-integer arithmetic,
    /// never through floating point.
    std::uint64_t eval(int n) const {
        if (n < 1) throw BadVertex("growth functions are defined for n >= 1");
        if (kind_ == Kind::Table) {
            auto it = table_.find(n);
            if (it == table_.end())
                throw Error("growth table has no entry for n = " + std::to_string(n));
            return it->second;
        }
        // floor(cp/cq * n^(ap/aq)): the largest t with (t*cq)^aq <= cp^aq * n^ap.
        const BigInt cp = numerator(coeff_), cq = denominator(coeff_);
        const BigInt ap = numerator(exponent_), aq = denominator(exponent_);
        const auto apu = ap.convert_to<std::uint64_t>();
        const auto aqu = aq.convert_to<std::uint64_t>();
        const BigInt rhs = ipow(cp, aqu) * ipow(BigInt(n), apu);
        const BigInt t = iroot(rhs, static_cast<unsigned>(aqu)) / cq;
        const BigInt m = t < 2 ? BigInt(2) : t;
        return m.convert_to<std::uint64_t>();
    }

    /// Grammar (whitespace-insensitive): [coeff '*'] 'N' ['^' exponent]
    /// where coeff is a decimal number and exponent is `p` or `p/q`.
    /// Examples: "1*N^2", "N^3/2", "0.5*N", "2*N^1/2".
    static GrowthSpec parse(std::string_view text) {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
        std::size_t pos = 0;
        const auto fail = [&](const std::string& msg) -> ParseError {
            return ParseError("bad growth spec \"" + std::string(text) + "\": " + msg, pos);
        };

        Rational coeff = 1;
        const std::size_t star = s.find('*');
        if (star != std::string::npos) {
            coeff = parse_decimal(s.substr(0, star), pos);
            pos = star + 1;
        }
        if (pos >= s.size() || (s[pos] != 'N' && s[pos] != 'n')) throw fail("expected 'N'");
        ++pos;
        Rational exponent = 1;
        if (pos < s.size()) {
            if (s[pos] != '^') throw fail("expected '^'");
            ++pos;
            exponent = parse_fraction(s.substr(pos), pos);
            pos = s.size();
        }
        if (coeff <= 0) throw fail("coefficient must be positive");
        if (exponent < 0) throw fail("exponent must be non-negative");
        return power(coeff, exponent);
    }

    std::string str() const {
        if (kind_ == Kind::Table) return "table(" + std::to_string(table_.size()) + " entries)";
        std::string s = coeff_.str() + "*N^" + exponent_.str();
        return s;
    }

  private:
    enum class Kind { Power, Table };

    static Rational parse_decimal(const std::string& s, std::size_t at) {
        if (s.empty()) throw ParseError("empty coefficient", at);
        BigInt intpart = 0, fracpart = 0;
        BigInt scale = 1;
        std::size_t i = 0;
        bool digits = false;
        for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
            intpart = intpart * 10 + (s[i] - '0');
            digits = true;
        }
        if (i < s.size() && s[i] == '.') {
            for (++i; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
                fracpart = fracpart * 10 + (s[i] - '0');
                scale *= 10;
                digits = true;
            }
        }
        if (!digits || i != s.size()) throw ParseError("bad decimal \"" + s + "\"", at + i);
        return Rational(intpart * scale + fracpart, scale);
    }

    static Rational parse_fraction(const std::string& s, std::size_t at) {
        const std::size_t slash = s.find('/');
        const auto parse_int = [&](const std::string& part, std::size_t off) {
            if (part.empty()) throw ParseError("empty exponent component", at + off);
            BigInt v = 0;
            for (std::size_t i = 0; i < part.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(part[i])))
                    throw ParseError("bad exponent \"" + s + "\"", at + off + i);
                v = v * 10 + (part[i] - '0');
            }
            return v;
        };
        if (slash == std::string::npos) return Rational(parse_int(s, 0));
        const BigInt num = parse_int(s.substr(0, slash), 0);
        const BigInt den = parse_int(s.substr(slash + 1), slash + 1);
        if (den == 0) throw ParseError("zero denominator in exponent", at + slash + 1);
        return Rational(num, den);
    }

    Kind kind_ = Kind::Power;
    Rational coeff_ = 1;
    Rational exponent_ = 1;
    std::map<int, std::uint64_t> table_;
};

inline std::uint64_t growth_eval(const GrowthSpec& spec, int n) { return spec.eval(n); }

}  // namespace artin
