#include "slicekit/numeric.hpp"

#include <array>
#include <cctype>

#include "slicekit/errors.hpp"

namespace slicekit {

namespace {

struct BinomTable {
    // Pascal's triangle up to n = 64; C(64,32) < 2^63, so no overflow.
    std::array<std::array<std::uint64_t, 65>, 65> c{};
    BinomTable() {
        for (int n = 0; n <= 64; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};

const BinomTable& table() {
    static const BinomTable t;
    return t;
}

}  // namespace

std::uint64_t binom64(int n, int k) {
    if (n < 0 || n > 64) throw CapacityError("binom64: n out of range [0,64]");
    if (k < 0 || k > n) return 0;
    return table().c[n][k];
}

Int binom_int(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Int divexact(const Int& num, const Int& den) {
    if (den == 0) throw ClaimError("divexact: division by zero");
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw ClaimError("divexact: inexact division");
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

std::string rat_to_string(const Rat& q) {
    return q.get_str();  // canonical "p" or "p/q"
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw UsageError("empty rational literal");
    // mpq accepts more than we want (whitespace, bases); validate strictly.
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        return j;
    };
    if (s[i] == '-' || s[i] == '+') ++i;
    std::size_t j = digits(i);
    if (j == i) throw UsageError("bad rational literal '" + s + "'");
    if (j < s.size()) {
        if (s[j] != '/') throw UsageError("bad rational literal '" + s + "'");
        std::size_t k = digits(j + 1);
        if (k == j + 1 || k != s.size())
            throw UsageError("bad rational literal '" + s + "'");
    }
    Rat q;
    if (q.set_str(s, 10) != 0) throw UsageError("bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw UsageError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

double rat_to_double(const Rat& q) { return q.get_d(); }

bool fits_int64(const Int& v) {
    static const Int lo = Int("-9223372036854775808");
    static const Int hi = Int("9223372036854775807");
    return v >= lo && v <= hi;
}

std::int64_t to_int64(const Int& v) {
    if (!fits_int64(v)) throw CapacityError("integer does not fit in int64");
    // mpz_get_si saturates on some platforms; go through the string for the
    // one boundary value get_si cannot represent.
    if (mpz_fits_slong_p(v.get_mpz_t())) return mpz_get_si(v.get_mpz_t());
    return std::stoll(v.get_str());
}

}  // namespace slicekit
