#include "chowdiv/splitting.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chowdiv {

SplittingType normalize_splitting_type(std::vector<int> raw) {
    if (raw.empty()) throw std::invalid_argument("splitting type must be nonempty");
    std::sort(raw.begin(), raw.end(), std::greater<int>());
    SplittingType st;
    st.twist = -raw.front();
    for (int& a : raw) a += st.twist;
    st.leading_trivial = static_cast<int>(std::count(raw.begin(), raw.end(), 0));
    st.type = std::move(raw);
    return st;
}

namespace {

Element component(const GradedRingModel& R, const std::vector<Element>& v, int degree) {
    if (degree >= 1 && degree <= static_cast<int>(v.size())) {
        const Element& e = v[degree - 1];
        if (e.degree != degree)
            throw std::invalid_argument("whitney component degree mismatch");
        if (static_cast<int>(e.coeffs.size()) != R.rank(degree))
            throw std::invalid_argument("whitney component shape mismatch");
        return e;
    }
    return zero_element(R, degree);
}

}  // namespace

std::vector<Element> whitney_product(const GradedRingModel& R, const WhitneyPair& pair) {
    std::vector<Element> out;
    for (int d = 1; d <= R.cutoff; ++d) {
        Element acc = add(component(R, pair.c, d), component(R, pair.ctilde, d));
        for (int i = 1; i < d; ++i) {
            int j = d - i;
            if (i > static_cast<int>(pair.c.size()) || j > static_cast<int>(pair.ctilde.size()))
                continue;
            acc = add(acc, mul(R, component(R, pair.c, i), component(R, pair.ctilde, j)));
        }
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<WhitneyPair> find_unit_factorizations(const GradedRingModel& R, int k, int l,
                                                  int height, unsigned long long guard) {
    if (k < 0 || l < 0 || k + l > R.cutoff)
        throw std::invalid_argument("find_unit_factorizations: need 0 <= k, l and k+l <= cutoff");
    if (height < 1) throw std::invalid_argument("find_unit_factorizations: height must be >= 1");

    // The candidate space is the first factor's coefficients; the second
    // factor is forced by the unit equations in degrees 1..l.
    int coords = 0;
    for (int d = 1; d <= k; ++d) coords += R.rank(d);
    unsigned long long base = 2ull * height + 1, space = 1;
    for (int i = 0; i < coords; ++i) {
        if (space > guard / base) {
            std::ostringstream os;
            os << "unit-factorization search space exceeds the guard of " << guard
               << " candidates; lower the height or the degree split";
            throw std::runtime_error(os.str());
        }
        space *= base;
    }

    std::vector<WhitneyPair> found;
    std::vector<Int> flat(coords, Int(-height));
    if (coords == 0) return found;  // only the trivial factorization exists

    Int bound(height);
    while (true) {
        // Unpack the first factor.
        WhitneyPair pair;
        {
            int off = 0;
            bool nontrivial = false;
            for (int d = 1; d <= k; ++d) {
                Element e = zero_element(R, d);
                for (int b = 0; b < R.rank(d); ++b) e.coeffs[b] = flat[off++];
                if (!is_zero(e)) nontrivial = true;
                pair.c.push_back(std::move(e));
            }
            if (nontrivial) {
                bool ok = true;
                // Solve degrees 1..l for the second factor, then check the rest.
                for (int d = 1; d <= l && ok; ++d) {
                    Element acc = component(R, pair.c, d);
                    for (int i = 1; i < d; ++i)
                        acc = add(acc, mul(R, component(R, pair.c, i),
                                           component(R, pair.ctilde, d - i)));
                    Element cd = neg(acc);
                    for (const Int& cc : cd.coeffs)
                        if (abs_int(cc) > bound) { ok = false; break; }
                    pair.ctilde.push_back(std::move(cd));
                }
                for (int d = l + 1; d <= R.cutoff && ok; ++d) {
                    Element acc = component(R, pair.c, d);
                    for (int i = std::max(1, d - l); i <= std::min(k, d - 1); ++i)
                        acc = add(acc, mul(R, component(R, pair.c, i),
                                           component(R, pair.ctilde, d - i)));
                    if (!is_zero(acc)) ok = false;
                }
                if (ok) found.push_back(std::move(pair));
            }
        }
        int pos = coords - 1;
        while (pos >= 0 && flat[pos] == bound) {
            flat[pos] = -height;
            --pos;
        }
        if (pos < 0) break;
        ++flat[pos];
    }
    return found;
}

ForcedVanishing forced_vanishing_holds(const GradedRingModel& R, int r, int k, int height) {
    if (r > R.cutoff || r < 2) throw std::invalid_argument("forced_vanishing: need 2 <= r <= cutoff");
    if (k < 1 || k >= r) throw std::invalid_argument("forced_vanishing: need 1 <= k < r");
    auto sols = find_unit_factorizations(R, k, r - k, height);
    ForcedVanishing fv;
    fv.holds = sols.empty();
    if (!sols.empty()) fv.counterexample = sols.front();
    return fv;
}

SplitVerdict splitting_verdict(const SpaceSpec& space, int rank, AxiomSet axioms) {
    if (rank < 1) throw std::invalid_argument("splitting_verdict: rank must be >= 1");
    FamilyExpr expr = vmrt_of(space);
    SplitVerdict v;
    v.rank = rank;
    v.axioms = axioms;
    v.certificate = certify_structural(expr, axioms);
    v.bound = v.certificate.bound;
    if (rank <= v.bound) {
        v.status = SplitStatus::Splits;
        std::ostringstream os;
        os << "rank " << rank << " <= certified good-divisibility bound " << v.bound
           << " of the VMRT";
        v.note = os.str();
    } else {
        v.status = SplitStatus::Unknown;
        std::ostringstream os;
        os << "rank " << rank << " exceeds the certified bound " << v.bound
           << "; the criterion is one-directional, no conclusion";
        v.note = os.str();
    }
    return v;
}

}  // namespace chowdiv
