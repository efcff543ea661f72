#include "beadcalc/linalg.hpp"

namespace beadcalc {

namespace {

// Clears denominators and divides out the integer content, in place.
void make_primitive(std::vector<Rational>& row) {
    Int lcm_den(1);
    for (const Rational& x : row)
        if (x != 0) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
    Int g(0);
    std::vector<Int> ints(row.size());
    for (size_t j = 0; j < row.size(); j++) {
        ints[j] = numerator(row[j]) * (lcm_den / denominator(row[j]));
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(ints[j]));
    }
    if (g == 0) return;
    for (size_t j = 0; j < row.size(); j++) row[j] = Rational(ints[j] / g);
}

}  // namespace

EchelonBasis::EchelonBasis(std::vector<std::vector<Rational>> rows, int ncols) : ncols_(ncols) {
    for (auto& r : rows) {
        if (static_cast<int>(r.size()) != ncols) throw Error("EchelonBasis: row length mismatch");
        make_primitive(r);
    }

    // Bareiss-style fraction-free forward elimination on integer rows.
    // prev is the previous pivot value (1 initially).
    std::vector<std::vector<Rational>*> work;
    for (auto& r : rows) work.push_back(&r);

    size_t done = 0;
    Rational prev(1);
    for (int col = 0; col < ncols && done < work.size(); col++) {
        size_t sel = done;
        while (sel < work.size() && (*work[sel])[col] == 0) sel++;
        if (sel == work.size()) continue;
        std::swap(work[done], work[sel]);
        const Rational pivot = (*work[done])[col];
        for (size_t i = done + 1; i < work.size(); i++) {
            std::vector<Rational>& ri = *work[i];
            if (ri[col] == 0) continue;
            const Rational f = ri[col];
            for (int j = 0; j < ncols; j++) ri[j] = (pivot * ri[j] - f * (*work[done])[j]) / prev;
            ri[col] = Rational(0);
        }
        pivots_.push_back(col);
        rows_.push_back(*work[done]);
        prev = pivot;
        done++;
    }

    // Back-substitute to reduced form with unit pivots (exact divisions).
    for (int r = rank() - 1; r >= 0; r--) {
        Rational p = rows_[r][pivots_[r]];
        for (int j = 0; j < ncols_; j++) rows_[r][j] /= p;
        for (int s = 0; s < r; s++) {
            Rational f = rows_[s][pivots_[r]];
            if (f == 0) continue;
            for (int j = 0; j < ncols_; j++) rows_[s][j] -= f * rows_[r][j];
        }
    }
}

std::vector<Rational> EchelonBasis::reduce(std::vector<Rational> v) const {
    if (static_cast<int>(v.size()) != ncols_) throw Error("EchelonBasis::reduce: length mismatch");
    for (int r = 0; r < rank(); r++) {
        Rational f = v[pivots_[r]];
        if (f == 0) continue;
        for (int j = 0; j < ncols_; j++) v[j] -= f * rows_[r][j];
    }
    return v;
}

}  // namespace beadcalc
