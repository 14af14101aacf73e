#include "chowdiv/graded_ring.hpp"

#include <sstream>
#include <stdexcept>

namespace chowdiv {

bool is_zero(const Element& x) { return is_zero_vec(x.coeffs); }

bool operator==(const Element& a, const Element& b) {
    return a.degree == b.degree && a.coeffs == b.coeffs;
}

namespace {

void check_degree(const GradedRingModel& R, int d) {
    if (d < 0 || d > R.cutoff) {
        std::ostringstream os;
        os << "degree " << d << " out of range [0," << R.cutoff << "]";
        throw std::invalid_argument(os.str());
    }
}

void check_element(const GradedRingModel& R, const Element& x) {
    check_degree(R, x.degree);
    if (static_cast<int>(x.coeffs.size()) != R.ranks[x.degree])
        throw std::invalid_argument("element coefficient vector does not match the rank of its degree");
}

}  // namespace

GradedRingModel make_ring(int cutoff, std::vector<int> ranks,
                          std::vector<std::vector<std::string>> basis_labels,
                          std::map<std::pair<int, int>, std::vector<Int>> tables) {
    if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
    if (static_cast<int>(ranks.size()) != cutoff + 1)
        throw std::invalid_argument("ranks must have length cutoff+1");
    for (int r : ranks)
        if (r < 0) throw std::invalid_argument("ranks must be non-negative");
    if (ranks[0] != 1) throw std::invalid_argument("ranks[0] must be 1");
    if (static_cast<int>(basis_labels.size()) != cutoff + 1)
        throw std::invalid_argument("basis_labels must have length cutoff+1");
    for (int d = 0; d <= cutoff; ++d) {
        if (static_cast<int>(basis_labels[d].size()) != ranks[d]) {
            std::ostringstream os;
            os << "basis_labels[" << d << "] has " << basis_labels[d].size()
               << " labels, expected " << ranks[d];
            throw std::invalid_argument(os.str());
        }
    }
    for (int i = 0; i <= cutoff; ++i) {
        for (int j = 0; i + j <= cutoff; ++j) {
            auto it = tables.find({i, j});
            if (it == tables.end()) {
                std::ostringstream os;
                os << "missing table for degree pair (" << i << "," << j << ")";
                throw std::invalid_argument(os.str());
            }
            size_t want = static_cast<size_t>(ranks[i]) * ranks[j] * ranks[i + j];
            if (it->second.size() != want) {
                std::ostringstream os;
                os << "table (" << i << "," << j << ") has " << it->second.size()
                   << " entries, expected " << want;
                throw std::invalid_argument(os.str());
            }
        }
    }
    for (const auto& [key, t] : tables) {
        (void)t;
        if (key.first < 0 || key.second < 0 || key.first + key.second > cutoff) {
            std::ostringstream os;
            os << "unexpected table for degree pair (" << key.first << "," << key.second << ")";
            throw std::invalid_argument(os.str());
        }
    }

    GradedRingModel R;
    R.cutoff = cutoff;
    R.ranks = std::move(ranks);
    R.basis_labels = std::move(basis_labels);
    R.tables = std::move(tables);

    // Degree-0 generator must act as a two-sided identity.
    for (int j = 0; j <= cutoff; ++j) {
        for (int q = 0; q < R.ranks[j]; ++q) {
            for (int k = 0; k < R.ranks[j]; ++k) {
                Int want = (q == k) ? 1 : 0;
                if (R.sc(0, j, 0, q, k) != want || R.sc(j, 0, q, 0, k) != want) {
                    std::ostringstream os;
                    os << "degree-0 generator is not an identity on basis element " << q
                       << " of degree " << j;
                    throw std::invalid_argument(os.str());
                }
            }
        }
    }
    return R;
}

AxiomReport verify_ring_axioms(const GradedRingModel& R) {
    AxiomReport report;
    auto label = [&](int d, int p) -> const std::string& { return R.basis_labels[d][p]; };

    for (int j = 0; j <= R.cutoff; ++j) {
        for (int q = 0; q < R.ranks[j]; ++q) {
            for (int k = 0; k < R.ranks[j]; ++k) {
                Int want = (q == k) ? 1 : 0;
                if (R.sc(0, j, 0, q, k) != want || R.sc(j, 0, q, 0, k) != want) {
                    std::ostringstream os;
                    os << "1 * " << label(j, q) << " != " << label(j, q);
                    report.violations.push_back({"identity", os.str()});
                }
            }
        }
    }

    for (const auto& [key, t] : R.tables) {
        (void)t;
        auto [i, j] = key;
        for (int p = 0; p < R.ranks[i]; ++p)
            for (int q = 0; q < R.ranks[j]; ++q)
                for (int k = 0; k < R.ranks[i + j]; ++k)
                    if (R.sc(i, j, p, q, k) != R.sc(j, i, q, p, k)) {
                        std::ostringstream os;
                        os << label(i, p) << " * " << label(j, q) << " differs from "
                           << label(j, q) << " * " << label(i, p) << " (degrees " << i << ","
                           << j << ")";
                        report.violations.push_back({"commutativity", os.str()});
                    }
    }

    for (int i = 0; i <= R.cutoff; ++i)
        for (int j = i; i + j <= R.cutoff; ++j)
            for (int k = j; i + j + k <= R.cutoff; ++k)
                for (int p = 0; p < R.ranks[i]; ++p)
                    for (int q = 0; q < R.ranks[j]; ++q)
                        for (int r = 0; r < R.ranks[k]; ++r) {
                            Element e = basis_element(R, i, p);
                            Element f = basis_element(R, j, q);
                            Element g = basis_element(R, k, r);
                            Element lhs = mul(R, mul(R, e, f), g);
                            Element rhs = mul(R, e, mul(R, f, g));
                            if (!(lhs == rhs)) {
                                std::ostringstream os;
                                os << "(" << label(i, p) << " * " << label(j, q) << ") * "
                                   << label(k, r) << " != " << label(i, p) << " * ("
                                   << label(j, q) << " * " << label(k, r) << ")"
                                   << " (degrees " << i << "," << j << "," << k << ")";
                                report.violations.push_back({"associativity", os.str()});
                            }
                        }

    return report;
}

Element zero_element(const GradedRingModel& R, int degree) {
    check_degree(R, degree);
    return Element{degree, std::vector<Int>(R.ranks[degree], Int(0))};
}

Element basis_element(const GradedRingModel& R, int degree, int index) {
    Element e = zero_element(R, degree);
    if (index < 0 || index >= R.ranks[degree])
        throw std::invalid_argument("basis index out of range");
    e.coeffs[index] = 1;
    return e;
}

Element mul(const GradedRingModel& R, const Element& x, const Element& y) {
    check_element(R, x);
    check_element(R, y);
    int d = x.degree + y.degree;
    if (d > R.cutoff) return zero_element(R, R.cutoff);  // above the cutoff: zero module
    Element out = zero_element(R, d);
    for (int p = 0; p < R.ranks[x.degree]; ++p) {
        if (x.coeffs[p] == 0) continue;
        for (int q = 0; q < R.ranks[y.degree]; ++q) {
            if (y.coeffs[q] == 0) continue;
            Int c = x.coeffs[p] * y.coeffs[q];
            for (int k = 0; k < R.ranks[d]; ++k) {
                const Int& s = R.sc(x.degree, y.degree, p, q, k);
                if (s != 0) out.coeffs[k] += c * s;
            }
        }
    }
    return out;
}

Element add(const Element& x, const Element& y) {
    if (x.degree != y.degree) throw std::invalid_argument("degree mismatch in addition");
    if (x.coeffs.size() != y.coeffs.size())
        throw std::invalid_argument("coefficient length mismatch in addition");
    Element out = x;
    for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += y.coeffs[i];
    return out;
}

Element sub(const Element& x, const Element& y) { return add(x, neg(y)); }

Element neg(const Element& x) {
    Element out = x;
    for (Int& c : out.coeffs) c = -c;
    return out;
}

Element scale(const Int& n, const Element& x) {
    Element out = x;
    for (Int& c : out.coeffs) c *= n;
    return out;
}

std::string format_element(const GradedRingModel& R, const Element& x) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < x.coeffs.size(); ++i) {
        const Int& c = x.coeffs[i];
        if (c == 0) continue;
        const std::string& lab = R.basis_labels[x.degree][i];
        Int a = abs_int(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || lab == "1")
            os << a.get_str();
        if (a != 1 && lab != "1") os << "*";
        if (lab != "1") os << lab;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace chowdiv
