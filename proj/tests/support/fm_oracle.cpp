#include "fm_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace choix::testing {

namespace {

// a . lambda <= b, or < b when strict
struct Row {
    RationalVector a;
    Rational b;
    bool strict = false;
};

// Scale so the first nonzero coefficient has magnitude 1; keeps duplicates detectable.
void normalize(Row& r) {
    for (const Rational& c : r.a) {
        if (c != 0) {
            const Rational s = abs(c);
            for (Rational& x : r.a) {
                x /= s;
            }
            r.b /= s;
            return;
        }
    }
}

bool same(const Row& x, const Row& y) { return x.a == y.a && x.b == y.b && x.strict == y.strict; }

}  // namespace

bool fm_is_feasible(const std::vector<RationalVector>& generators, const RationalVector& v) {
    const std::size_t m = generators.size();
    if (m == 0) {
        return false;
    }
    if (m > 6 || v.size() > 4) {
        throw std::invalid_argument("fm oracle: instance too large");
    }
    for (const auto& g : generators) {
        if (g.size() != v.size()) {
            throw std::invalid_argument("fm oracle: dimension mismatch");
        }
    }

    std::vector<Row> rows;
    for (std::size_t j = 0; j < m; ++j) {
        Row r{RationalVector(m, 0), 0, false};
        r.a[j] = -1;
        rows.push_back(std::move(r));
    }
    {
        Row r{RationalVector(m, -1), 0, true};
        rows.push_back(std::move(r));
    }
    for (std::size_t x = 0; x < v.size(); ++x) {
        Row r{RationalVector(m, 0), v[x], false};
        for (std::size_t j = 0; j < m; ++j) {
            r.a[j] = generators[j][x];
        }
        rows.push_back(std::move(r));
    }

    for (std::size_t k = 0; k < m; ++k) {
        std::vector<Row> pos, neg, next;
        for (Row& r : rows) {
            if (r.a[k] > 0) {
                pos.push_back(std::move(r));
            } else if (r.a[k] < 0) {
                neg.push_back(std::move(r));
            } else {
                next.push_back(std::move(r));
            }
        }
        for (const Row& p : pos) {
            for (const Row& n : neg) {
                const Rational sp = -n.a[k];
                const Rational sn = p.a[k];
                Row c{RationalVector(m, 0), sp * p.b + sn * n.b, p.strict || n.strict};
                for (std::size_t i = 0; i < m; ++i) {
                    c.a[i] = sp * p.a[i] + sn * n.a[i];
                }
                c.a[k] = 0;
                normalize(c);
                if (std::none_of(next.begin(), next.end(), [&](const Row& e) { return same(e, c); })) {
                    next.push_back(std::move(c));
                }
            }
        }
        rows = std::move(next);
    }

    return std::all_of(rows.begin(), rows.end(),
                       [](const Row& r) { return r.strict ? r.b > 0 : r.b >= 0; });
}

}  // namespace choix::testing
