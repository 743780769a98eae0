#include "opradius/catalog.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <stdexcept>

#include "json.hpp"

#include "opradius/eigen.hpp"
#include "opradius/structure.hpp"

namespace opradius {

namespace {

using Ms = std::vector<ComplexMatrix>;
using Terms = std::vector<TermValue>;
using Ax = TermValue;

constexpr double kSqrt2 = 1.4142135623730950488016887242097;

// tiny interval-ish arithmetic for propagating optimizer accuracies
Ax exact(double v) { return {v, 1e-12 * (1.0 + std::abs(v))}; }
Ax from(const QuantityResult& q) { return {q.value, q.accuracy}; }
Ax operator+(Ax x, Ax y) { return {x.value + y.value, x.accuracy + y.accuracy}; }
Ax operator-(Ax x, Ax y) { return {x.value - y.value, x.accuracy + y.accuracy}; }
Ax operator*(Ax x, Ax y) {
    return {x.value * y.value,
            std::abs(x.value) * y.accuracy + std::abs(y.value) * x.accuracy + x.accuracy * y.accuracy};
}
Ax operator*(double c, Ax x) { return {c * x.value, std::abs(c) * x.accuracy}; }
Ax sq(Ax x) { return x * x; }
Ax sqrtx(Ax x) {
    const double s = std::sqrt(std::max(0.0, x.value));
    const double a = (s > 1e-8) ? x.accuracy / (2.0 * s) : std::sqrt(std::max(0.0, x.accuracy));
    return {s, a + 1e-15};
}
Ax maxx(Ax x, Ax y) {
    return {std::max(x.value, y.value), std::max(x.accuracy, y.accuracy)};
}

Ax w(const ComplexMatrix& t, const SweepConfig& c) { return from(numerical_radius(t, c)); }
Ax wb(const ComplexMatrix& a, const ComplexMatrix& b, const SweepConfig& c) {
    return from(block_numerical_radius(a, b, c));
}
Ax we(const Ms& ts, const SweepConfig& c) { return from(euclidean_radius(ts, c)); }
Ax ne(const Ms& ts, const SweepConfig& c) { return from(euclidean_norm(ts, c)); }
Ax nrm(const ComplexMatrix& m) { return exact(operator_norm(m)); }

ComplexMatrix gram(const ComplexMatrix& m) { return multiply(adjoint(m), m); }   // |m|^2
ComplexMatrix cogram(const ComplexMatrix& m) { return multiply(m, adjoint(m)); } // |m*|^2
ComplexMatrix comb(const ComplexMatrix& x, const ComplexMatrix& y) { return x + Complex(0, 1) * y; }

// || c1 m1 + c2 m2 || with inexact scalar weights
Ax weighted_norm(Ax c1, const ComplexMatrix& m1, Ax c2, const ComplexMatrix& m2) {
    const double v = operator_norm(Complex(c1.value, 0.0) * m1 + Complex(c2.value, 0.0) * m2);
    const double a = c1.accuracy * operator_norm(m1) + c2.accuracy * operator_norm(m2) + 1e-12 * (1.0 + v);
    return {v, a};
}

std::vector<Relation> build_registry() {
    std::vector<Relation> rs;
    auto add = [&rs](const char* id, Signature sig, RelationKind kind, Precondition pre,
                     std::vector<std::string> names,
                     std::function<Terms(const Ms&, const SweepConfig&)> ev, const char* desc,
                     const char* src) {
        rs.push_back(Relation{id, sig, kind, pre, std::move(names), std::move(ev), desc, src});
    };

    add("R01", Signature::single_matrix, RelationKind::chain, Precondition::none,
        {"||T||/2", "w(T)", "||T||"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto n = nrm(in[0]);
            return {0.5 * n, w(in[0], c), n};
        },
        "||T||/2 <= w(T) <= ||T||", "norm equivalence");

    add("R02", Signature::single_matrix, RelationKind::bound, Precondition::none,
        {"w(T)", "|| |T|+|T*| ||/2"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            return {w(in[0], c), 0.5 * nrm(matrix_abs(in[0]) + matrix_abs(adjoint(in[0])))};
        },
        "w(T) <= || |T| + |T*| || / 2", "modulus-sum bound");

    add("R03", Signature::single_matrix, RelationKind::bound, Precondition::none,
        {"w(T)^2", "|| |T|^2+|T*|^2 ||/2"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            return {sq(w(in[0], c)), 0.5 * nrm(gram(in[0]) + cogram(in[0]))};
        },
        "w(T)^2 <= || |T|^2 + |T*|^2 || / 2", "squared modulus-sum bound");

    add("R04", Signature::matrix_pair, RelationKind::bound, Precondition::none,
        {"we(A,B)", "sqrt(w(A)||A|| + w(B)||B||)"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            return {we(in, c), sqrtx(w(in[0], c) * nrm(in[0]) + w(in[1], c) * nrm(in[1]))};
        },
        "we(A,B) <= sqrt(w(A)||A|| + w(B)||B||)", "radius-norm mixed bound");

    add("R05", Signature::matrix_pair, RelationKind::chain, Precondition::square_zero,
        {"we(A,B)", "sqrt(w(A)||A|| + w(B)||B||)", "sqrt((||A||^2+||B||^2)/2)"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto na = nrm(in[0]), nb = nrm(in[1]);
            return {we(in, c), sqrtx(w(in[0], c) * na + w(in[1], c) * nb),
                    sqrtx(0.5 * (sq(na) + sq(nb)))};
        },
        "for A^2 = B^2 = 0: we(A,B) <= sqrt(w(A)||A|| + w(B)||B||) = sqrt((||A||^2+||B||^2)/2), "
        "using w(X) = ||X||/2 for square-zero X",
        "square-zero pair bound");

    add("R06", Signature::matrix_pair, RelationKind::bound, Precondition::none,
        {"we(A,B)^2", "sqrt(w(A)^2||A||^2 + w(B)^2||B||^2 + 2w(A)w(B)w(B*A))"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto wa = w(in[0], c), wbv = w(in[1], c);
            const auto cross = w(multiply(adjoint(in[1]), in[0]), c);
            return {sq(we(in, c)),
                    sqrtx(sq(wa) * sq(nrm(in[0])) + sq(wbv) * sq(nrm(in[1])) + 2.0 * (wa * wbv * cross))};
        },
        "we(A,B)^2 <= sqrt(w(A)^2||A||^2 + w(B)^2||B||^2 + 2 w(A)w(B)w(B*A))",
        "Euclidean radius bound via w");

    add("R07", Signature::matrix_pair, RelationKind::bound, Precondition::none,
        {"we(A,B)^2", "sqrt(||w(A)^2|A*|^2 + w(B)^2|B*|^2|| + 2w(A)w(B)w(AB*))"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto wa = w(in[0], c), wbv = w(in[1], c);
            const auto cross = w(multiply(in[0], adjoint(in[1])), c);
            return {sq(we(in, c)),
                    sqrtx(weighted_norm(sq(wa), cogram(in[0]), sq(wbv), cogram(in[1])) +
                          2.0 * (wa * wbv * cross))};
        },
        "we(A,B)^2 <= sqrt(|| w(A)^2|A*|^2 + w(B)^2|B*|^2 || + 2 w(A)w(B)w(AB*))",
        "refined Euclidean radius bound");

    add("R08", Signature::matrix_pair, RelationKind::bound, Precondition::none,
        {"we(A,B)^2", "sqrt(sqrt(w(A)^4+w(B)^4) w(|A|^2+i|B|^2) + 2w(A)w(B)w(B*A))"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto wa = w(in[0], c), wbv = w(in[1], c);
            const auto cross = w(multiply(adjoint(in[1]), in[0]), c);
            const auto wc = w(comb(gram(in[0]), gram(in[1])), c);
            return {sq(we(in, c)),
                    sqrtx(sqrtx(sq(sq(wa)) + sq(sq(wbv))) * wc + 2.0 * (wa * wbv * cross))};
        },
        "we(A,B)^2 <= sqrt(sqrt(w(A)^4 + w(B)^4) w(|A|^2 + i|B|^2) + 2 w(A)w(B)w(B*A))",
        "Cartesian-combination radius bound");

    add("R09", Signature::matrix_pair, RelationKind::bound, Precondition::none,
        {"we(A,B)^2", "sqrt(w(|A|^2+i|B|^2) w(|A*|^2+i|B*|^2) + 2w(A)w(B)w(B*A))"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto wa = w(in[0], c), wbv = w(in[1], c);
            const auto cross = w(multiply(adjoint(in[1]), in[0]), c);
            const auto w1 = w(comb(gram(in[0]), gram(in[1])), c);
            const auto w2 = w(comb(cogram(in[0]), cogram(in[1])), c);
            return {sq(we(in, c)), sqrtx(w1 * w2 + 2.0 * (wa * wbv * cross))};
        },
        "we(A,B)^2 <= sqrt(w(|A|^2+i|B|^2) w(|A*|^2+i|B*|^2) + 2 w(A)w(B)w(B*A))",
        "symmetric combination radius bound");

    add("R10", Signature::matrix_pair, RelationKind::bound, Precondition::none,
        {"ne(A,B)^2", "sqrt(|| ||A||^2|A|^2 + ||B||^2|B|^2 || + || |A|+|B| || || |A*|+|B*| || w(A*B)/2)"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto na = nrm(in[0]), nb = nrm(in[1]);
            const ComplexMatrix absA = matrix_abs(in[0]), absB = matrix_abs(in[1]);
            const ComplexMatrix absAs = matrix_abs(adjoint(in[0])), absBs = matrix_abs(adjoint(in[1]));
            const auto cross = w(multiply(adjoint(in[0]), in[1]), c);
            return {sq(ne(in, c)),
                    sqrtx(weighted_norm(sq(na), gram(in[0]), sq(nb), gram(in[1])) +
                          0.5 * (nrm(absA + absB) * nrm(absAs + absBs) * cross))};
        },
        "ne(A,B)^2 <= sqrt(|| ||A||^2|A|^2 + ||B||^2|B|^2 || + "
        "|| |A|+|B| || || |A*|+|B*| || w(A*B) / 2)",
        "Euclidean norm bound via moduli");

    add("R11", Signature::matrix_pair, RelationKind::bound, Precondition::none,
        {"ne(A,B)^2",
         "sqrt(w(|A|^2+i|B|^2) w(|A*|^2+i|B*|^2) + w(|A|+i|B|) w(|A*|+i|B*|) w(BA*))"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto w1 = w(comb(gram(in[0]), gram(in[1])), c);
            const auto w2 = w(comb(cogram(in[0]), cogram(in[1])), c);
            const auto w3 = w(comb(matrix_abs(in[0]), matrix_abs(in[1])), c);
            const auto w4 = w(comb(matrix_abs(adjoint(in[0])), matrix_abs(adjoint(in[1]))), c);
            const auto cross = w(multiply(in[1], adjoint(in[0])), c);
            return {sq(ne(in, c)), sqrtx(w1 * w2 + w3 * (w4 * cross))};
        },
        "ne(A,B)^2 <= sqrt(w(|A|^2+i|B|^2) w(|A*|^2+i|B*|^2) + "
        "w(|A|+i|B|) w(|A*|+i|B*|) w(BA*))",
        "Euclidean norm combination bound");

    add("R12", Signature::single_matrix, RelationKind::bound, Precondition::none,
        {"w(T)^2", "||T||^2/2 + w(T^2)/2"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            return {sq(w(in[0], c)),
                    0.5 * sq(nrm(in[0])) + 0.5 * w(multiply(in[0], in[0]), c)};
        },
        "w(T)^2 <= ||T||^2/2 + w(T^2)/2", "power inequality");

    add("R13", Signature::single_matrix, RelationKind::bound, Precondition::none,
        {"w(T)^2", "|| |T|^2+|T*|^2 ||/4 + w(T^2)/2"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            return {sq(w(in[0], c)),
                    0.25 * nrm(gram(in[0]) + cogram(in[0])) + 0.5 * w(multiply(in[0], in[0]), c)};
        },
        "w(T)^2 <= || |T|^2 + |T*|^2 ||/4 + w(T^2)/2", "refined power inequality");

    add("R14", Signature::single_matrix, RelationKind::bound, Precondition::none,
        {"w(T)", "sqrt(sqrt(2) w(|T|^2+i|T*|^2) + 2w(T^2))/2"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto wc = w(comb(gram(in[0]), cogram(in[0])), c);
            return {w(in[0], c),
                    0.5 * sqrtx(kSqrt2 * wc + 2.0 * w(multiply(in[0], in[0]), c))};
        },
        "w(T) <= sqrt(sqrt(2) w(|T|^2 + i|T*|^2) + 2 w(T^2)) / 2",
        "combination power bound");

    add("R15", Signature::matrix_pair, RelationKind::bound, Precondition::none,
        {"w(block(A,B))^2",
         "sqrt(2)/4 max(w(|A*|^2+i|B*|^2), w(|A|^2+i|B|^2)) + max(w(AB*), w(B*A))/2"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto w1 = w(comb(cogram(in[0]), cogram(in[1])), c);
            const auto w2 = w(comb(gram(in[0]), gram(in[1])), c);
            const auto x1 = w(multiply(in[0], adjoint(in[1])), c);
            const auto x2 = w(multiply(adjoint(in[1]), in[0]), c);
            return {sq(wb(in[0], in[1], c)),
                    (kSqrt2 / 4.0) * maxx(w1, w2) + 0.5 * maxx(x1, x2)};
        },
        "w([[0,A],[B*,0]])^2 <= sqrt(2)/4 max(w(|A*|^2+i|B*|^2), w(|A|^2+i|B|^2)) "
        "+ max(w(AB*), w(B*A))/2",
        "block radius bound");

    add("R16", Signature::single_matrix, RelationKind::bound, Precondition::none,
        {"||Re T||^2", "sqrt(sqrt(2) w(T)^2 w(|T|^2+i|T*|^2) + 2w(T)^2 w(T^2))/4 + w(T)^2/2"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto wt = w(in[0], c);
            const auto wc = w(comb(gram(in[0]), cogram(in[0])), c);
            const auto w2 = w(multiply(in[0], in[0]), c);
            const auto [re, im] = cartesian_parts(in[0]);
            (void)im;
            return {sq(nrm(re)),
                    0.25 * sqrtx(kSqrt2 * (sq(wt) * wc) + 2.0 * (sq(wt) * w2)) + 0.5 * sq(wt)};
        },
        "||Re T||^2 <= sqrt(sqrt(2) w(T)^2 w(|T|^2+i|T*|^2) + 2 w(T)^2 w(T^2))/4 + w(T)^2/2",
        "real part bound");

    add("R17", Signature::matrix_pair, RelationKind::bound, Precondition::none,
        {"w(A+B)^2", "sqrt(sqrt(w(A)^4+w(B)^4) w(|A|^2+i|B|^2) + 2w(A)w(B)w(B*A)) + 2w(A)w(B)"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto wa = w(in[0], c), wbv = w(in[1], c);
            const auto cross = w(multiply(adjoint(in[1]), in[0]), c);
            const auto wc = w(comb(gram(in[0]), gram(in[1])), c);
            return {sq(w(in[0] + in[1], c)),
                    sqrtx(sqrtx(sq(sq(wa)) + sq(sq(wbv))) * wc + 2.0 * (wa * wbv * cross)) +
                        2.0 * (wa * wbv)};
        },
        "w(A+B)^2 <= sqrt(sqrt(w(A)^4+w(B)^4) w(|A|^2+i|B|^2) + 2 w(A)w(B)w(B*A)) + 2 w(A)w(B)",
        "sum radius bound");

    add("R18", Signature::single_matrix, RelationKind::bound, Precondition::none,
        {"w(T)^2", "sqrt(w(|T|^2+i|T*|^2)^2 + 2w(T)^2 w(T^2))/2"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto wt = w(in[0], c);
            const auto wc = w(comb(gram(in[0]), cogram(in[0])), c);
            return {sq(wt), 0.5 * sqrtx(sq(wc) + 2.0 * (sq(wt) * w(multiply(in[0], in[0]), c)))};
        },
        "w(T)^2 <= sqrt(w(|T|^2+i|T*|^2)^2 + 2 w(T)^2 w(T^2))/2", "squared combination bound");

    add("R19", Signature::matrix_pair, RelationKind::bound, Precondition::none,
        {"w(block(A,B))^2",
         "sqrt(w(|A|^2+i|B|^2)w(|A*|^2+i|B*|^2) + w(|A|+i|B|)w(|A*|+i|B*|)w(BA*))/4 "
         "+ sqrt(|| |A|^2+|B|^2 || || |A*|^2+|B*|^2 ||)/4"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto w1 = w(comb(gram(in[0]), gram(in[1])), c);
            const auto w2 = w(comb(cogram(in[0]), cogram(in[1])), c);
            const auto w3 = w(comb(matrix_abs(in[0]), matrix_abs(in[1])), c);
            const auto w4 = w(comb(matrix_abs(adjoint(in[0])), matrix_abs(adjoint(in[1]))), c);
            const auto cross = w(multiply(in[1], adjoint(in[0])), c);
            const auto p1 = nrm(gram(in[0]) + gram(in[1]));
            const auto p2 = nrm(cogram(in[0]) + cogram(in[1]));
            return {sq(wb(in[0], in[1], c)),
                    0.25 * sqrtx(w1 * w2 + w3 * (w4 * cross)) + 0.25 * sqrtx(p1 * p2)};
        },
        "w([[0,A],[B*,0]])^2 <= sqrt(w(|A|^2+i|B|^2)w(|A*|^2+i|B*|^2) + "
        "w(|A|+i|B|)w(|A*|+i|B*|)w(BA*))/4 + sqrt(|| |A|^2+|B|^2 || || |A*|^2+|B*|^2 ||)/4",
        "block norm-radius bound");

    add("R20", Signature::single_matrix, RelationKind::bound, Precondition::none,
        {"w(T)^2",
         "(sqrt(w(|T|^2+i|T*|^2)^2 + w(|T|+i|T*|)^2 w(T^2)) + || |T|^2+|T*|^2 ||)/4"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto w1 = w(comb(gram(in[0]), cogram(in[0])), c);
            const auto w2 = w(comb(matrix_abs(in[0]), matrix_abs(adjoint(in[0]))), c);
            const auto w3 = w(multiply(in[0], in[0]), c);
            return {sq(w(in[0], c)),
                    0.25 * (sqrtx(sq(w1) + sq(w2) * w3) + nrm(gram(in[0]) + cogram(in[0])))};
        },
        "w(T)^2 <= (sqrt(w(|T|^2+i|T*|^2)^2 + w(|T|+i|T*|)^2 w(T^2)) + || |T|^2+|T*|^2 ||)/4",
        "averaged combination bound");

    add("R21", Signature::single_matrix, RelationKind::chain, Precondition::none,
        {"w(T)^2", "ne(ReT,ImT)^2", "w(|ReT|+i|ImT|)^2", "||T*T+TT*||/2"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto [re, im] = cartesian_parts(in[0]);
            return {sq(w(in[0], c)), sq(ne({re, im}, c)),
                    sq(w(comb(matrix_abs(re), matrix_abs(im)), c)),
                    0.5 * nrm(gram(in[0]) + cogram(in[0]))};
        },
        "w(T)^2 <= ne(Re T, Im T)^2 <= w(|Re T|+i|Im T|)^2 <= ||T*T + TT*||/2",
        "Cartesian chain");

    add("R22", Signature::matrix_pair, RelationKind::bound, Precondition::none,
        {"ne(A,B)", "sqrt(w(|A|+i|B|) w(|A*|+i|B*|))"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto w1 = w(comb(matrix_abs(in[0]), matrix_abs(in[1])), c);
            const auto w2 = w(comb(matrix_abs(adjoint(in[0])), matrix_abs(adjoint(in[1]))), c);
            return {ne(in, c), sqrtx(w1 * w2)};
        },
        "ne(A,B) <= sqrt(w(|A|+i|B|) w(|A*|+i|B*|))", "modulus combination bound");

    add("R23", Signature::matrix_pair, RelationKind::chain, Precondition::none,
        {"we(A,B)", "ne(A,B)", "sqrt(w(|A|+i|B|) w(|A*|+i|B*|))"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto w1 = w(comb(matrix_abs(in[0]), matrix_abs(in[1])), c);
            const auto w2 = w(comb(matrix_abs(adjoint(in[0])), matrix_abs(adjoint(in[1]))), c);
            return {we(in, c), ne(in, c), sqrtx(w1 * w2)};
        },
        "we(A,B) <= ne(A,B) <= sqrt(w(|A|+i|B|) w(|A*|+i|B*|))", "radius-norm chain");

    add("R24", Signature::single_matrix, RelationKind::equality, Precondition::accretive_dissipative,
        {"ne(ReT,ImT)", "w(T)"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto [re, im] = cartesian_parts(in[0]);
            return {ne({re, im}, c), w(in[0], c)};
        },
        "for accretive-dissipative T: ne(Re T, Im T) = w(T)", "accretive-dissipative equality");

    add("R25", Signature::single_matrix, RelationKind::equality, Precondition::normal,
        {"ne(ReT,ImT)", "||T||"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto [re, im] = cartesian_parts(in[0]);
            return {ne({re, im}, c), nrm(in[0])};
        },
        "for normal T: ne(Re T, Im T) = w(|Re T|+i|Im T|) = ||T|| (registry pins the outer pair; "
        "the middle member is checked by the harness equality suites)",
        "normal equality");

    add("R26", Signature::single_matrix, RelationKind::chain, Precondition::none,
        {"sqrt(2) w(T)", "we(T,T*)", "ne(T,T*)", "w(|T|+i|T*|)"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const ComplexMatrix ts = adjoint(in[0]);
            return {kSqrt2 * w(in[0], c), we({in[0], ts}, c), ne({in[0], ts}, c),
                    w(comb(matrix_abs(in[0]), matrix_abs(ts)), c)};
        },
        "sqrt(2) w(T) = we(T,T*) <= ne(T,T*) <= w(|T|+i|T*|)", "refined self-adjoint pair chain");

    add("R27", Signature::single_matrix, RelationKind::chain, Precondition::none,
        {"||T||/2", "w(block(ReT,ImT))", "ne(ReT,ImT)/sqrt(2)", "w(|ReT|+i|ImT|)/sqrt(2)",
         "||(ReT)^2+(ImT)^2||^(1/2)/sqrt(2)", "sqrt(||ReT||^2+||ImT||^2)/sqrt(2)", "w(T)"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto [re, im] = cartesian_parts(in[0]);
            const double h = kSqrt2 / 2.0;
            return {0.5 * nrm(in[0]),
                    wb(re, im, c),
                    h * ne({re, im}, c),
                    h * w(comb(matrix_abs(re), matrix_abs(im)), c),
                    h * sqrtx(nrm(multiply(re, re) + multiply(im, im))),
                    h * sqrtx(sq(nrm(re)) + sq(nrm(im))),
                    w(in[0], c)};
        },
        "||T||/2 <= w([[0,ReT],[ImT,0]]) <= ne(ReT,ImT)/sqrt(2) <= w(|ReT|+i|ImT|)/sqrt(2) "
        "<= ||(ReT)^2+(ImT)^2||^(1/2)/sqrt(2) <= sqrt(||ReT||^2+||ImT||^2)/sqrt(2) <= w(T) "
        "(the fourth term combines |Re T| with |Im T|, not |Re T| twice)",
        "Cartesian block chain");

    add("R28", Signature::single_matrix, RelationKind::chain, Precondition::accretive_dissipative,
        {"||T||/sqrt(2)", "sqrt(2) w(block(ReT,ImT))", "ne(ReT,ImT)", "w(T)"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto [re, im] = cartesian_parts(in[0]);
            return {(kSqrt2 / 2.0) * nrm(in[0]), kSqrt2 * wb(re, im, c), ne({re, im}, c), w(in[0], c)};
        },
        "for accretive-dissipative T: ||T||/sqrt(2) <= sqrt(2) w([[0,ReT],[ImT,0]]) "
        "<= ne(ReT,ImT) <= w(T)",
        "accretive-dissipative chain");

    add("R29", Signature::matrix_pair, RelationKind::bound, Precondition::none,
        {"w(block(A,B))", "ne(A,B) - | ||A||-||B|| |/2"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto na = nrm(in[0]), nb = nrm(in[1]);
            const Ax gap{std::abs(na.value - nb.value), na.accuracy + nb.accuracy};
            return {wb(in[0], in[1], c), ne(in, c) - 0.5 * gap};
        },
        "w([[0,A],[B*,0]]) <= ne(A,B) - | ||A|| - ||B|| | / 2", "gap-corrected block bound");

    add("R30", Signature::matrix_pair, RelationKind::bound, Precondition::none,
        {"max(||A||,||B||)", "ne(A,B)"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            return {maxx(nrm(in[0]), nrm(in[1])), ne(in, c)};
        },
        "max(||A||, ||B||) <= ne(A,B)", "Euclidean norm lower bound");

    add("R31", Signature::matrix_pair, RelationKind::chain, Precondition::none,
        {"w([[0,A],[B*,0]])", "sup_th ||A+e^(i th)B||/2", "(||A||+||B||)/2"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            return {w(block_antidiag(in[0], in[1]), c), wb(in[0], in[1], c),
                    0.5 * (nrm(in[0]) + nrm(in[1]))};
        },
        "w([[0,A],[B*,0]]) = sup_theta ||A + e^(i theta)B||/2 <= (||A||+||B||)/2 "
        "(first link is an identity, checked both ways by the equality suites)",
        "block radius identity");

    add("R32", Signature::single_matrix, RelationKind::equality, Precondition::none,
        {"w(T)", "sup_th ||Re(e^(i th)T)||"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            return {w(in[0], c), from(sup_rotated_real_norm(in[0], c))};
        },
        "w(T) = sup_theta ||Re(e^(i theta) T)||", "rotation identity");

    add("R33", Signature::single_matrix, RelationKind::bound, Precondition::none,
        {"||Re T||", "w(T)"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto [re, im] = cartesian_parts(in[0]);
            (void)im;
            return {nrm(re), w(in[0], c)};
        },
        "||Re T|| <= w(T)", "real part lower bound");

    add("R34", Signature::single_matrix, RelationKind::bound, Precondition::none,
        {"w(|T|^2+i|T*|^2)", "|| |T|^4+|T*|^4 ||^(1/2)"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const ComplexMatrix g = gram(in[0]), cg = cogram(in[0]);
            return {w(comb(g, cg), c), sqrtx(nrm(multiply(g, g) + multiply(cg, cg)))};
        },
        "w(|T|^2+i|T*|^2) <= || |T|^4 + |T*|^4 ||^(1/2)", "fourth-power bound");

    add("R35", Signature::single_matrix, RelationKind::equality, Precondition::none,
        {"w(T)", "we(ReT,ImT)"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const auto [re, im] = cartesian_parts(in[0]);
            return {w(in[0], c), we({re, im}, c)};
        },
        "w(T) = we(Re T, Im T)", "Cartesian radius identity");

    add("R36", Signature::single_matrix, RelationKind::equality, Precondition::none,
        {"we(T,T*)", "sqrt(2) w(T)"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            return {we({in[0], adjoint(in[0])}, c), kSqrt2 * w(in[0], c)};
        },
        "we(T,T*) = sqrt(2) w(T)", "adjoint pair identity");

    add("R37", Signature::single_matrix, RelationKind::equality, Precondition::none,
        {"w(|T|^2+i|T*|^2)", "w(|T|^2-i|T*|^2)"},
        [](const Ms& in, const SweepConfig& c) -> Terms {
            const ComplexMatrix g = gram(in[0]), cg = cogram(in[0]);
            return {w(g + Complex(0, 1) * cg, c), w(g + Complex(0, -1) * cg, c)};
        },
        "w(|T|^2 + i|T*|^2) = w(|T|^2 - i|T*|^2)", "conjugation invariance");

    return rs;
}

bool precondition_holds(Precondition p, const ComplexMatrix& m) {
    if (p == Precondition::none) return true;
    const StructureFlags f = classify(m);
    switch (p) {
        case Precondition::square_zero: return f.is_square_zero;
        case Precondition::accretive_dissipative: return f.is_accretive_dissipative;
        case Precondition::normal: return f.is_normal;
        default: return true;
    }
}

std::string digest_vectors(const std::vector<ComplexVector>& vs) {
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](double d) {
        unsigned char b[sizeof d];
        std::memcpy(b, &d, sizeof d);
        for (unsigned char c : b) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    for (const auto& v : vs) {
        mix(static_cast<double>(v.size()));
        for (const auto& z : v) {
            mix(z.real());
            mix(z.imag());
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

// Shared grading of an ordered term list. Per adjacent pair the base
// tolerance is `tol` when >= 0, else the kind-specific default; the
// Inconclusive band extends a further combined-accuracy below that.
BoundReport grade(const Relation& rel, std::vector<TermValue> terms, double tol,
                  const std::string& digest) {
    BoundReport rep;
    rep.relation_id = rel.id;
    rep.inputs_digest = digest;
    for (size_t i = 0; i < terms.size(); ++i)
        rep.term_values.emplace_back(rel.term_names.size() > i ? rel.term_names[i] : "t" + std::to_string(i),
                                     terms[i].value);

    if (rel.kind == RelationKind::equality) {
        const double diff = std::abs(terms[0].value - terms[1].value);
        const double acc = terms[0].accuracy + terms[1].accuracy;
        const double base = tol >= 0.0 ? tol : 1e-6;
        rep.slack = -diff;
        rep.tolerance_used = base;
        if (diff <= base + acc) rep.status = CheckStatus::Satisfied;
        else if (diff > base + 2.0 * acc) rep.status = CheckStatus::Violated;
        else rep.status = CheckStatus::Inconclusive;
        return rep;
    }

    bool any_violated = false, any_inconclusive = false;
    double min_slack = std::numeric_limits<double>::infinity();
    double tol_at_min = 0.0;
    for (size_t i = 0; i + 1 < terms.size(); ++i) {
        const double slack = terms[i + 1].value - terms[i].value;
        const double acc = terms[i + 1].accuracy + terms[i].accuracy;
        const double base = tol >= 0.0 ? tol : 1e-9 * (1.0 + std::abs(terms[i + 1].value));
        if (slack < min_slack) {
            min_slack = slack;
            tol_at_min = base;
        }
        if (slack < -(base + acc)) any_violated = true;
        else if (slack < -base) any_inconclusive = true;
    }
    rep.slack = min_slack;
    rep.tolerance_used = tol_at_min;
    rep.status = any_violated ? CheckStatus::Violated
                              : (any_inconclusive ? CheckStatus::Inconclusive : CheckStatus::Satisfied);
    return rep;
}

} // namespace

const char* signature_name(Signature s) {
    switch (s) {
        case Signature::single_matrix: return "single_matrix";
        case Signature::matrix_pair: return "matrix_pair";
        case Signature::vector_triple: return "vector_triple";
        case Signature::vector_pair_unit: return "vector_pair_unit";
    }
    return "unknown";
}

const char* kind_name(RelationKind k) {
    switch (k) {
        case RelationKind::bound: return "bound";
        case RelationKind::chain: return "chain";
        case RelationKind::equality: return "equality";
    }
    return "unknown";
}

const char* precondition_name(Precondition p) {
    switch (p) {
        case Precondition::none: return "none";
        case Precondition::square_zero: return "square_zero";
        case Precondition::accretive_dissipative: return "accretive_dissipative";
        case Precondition::normal: return "normal";
    }
    return "unknown";
}

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Satisfied: return "Satisfied";
        case CheckStatus::Violated: return "Violated";
        case CheckStatus::Inconclusive: return "Inconclusive";
    }
    return "unknown";
}

const std::vector<Relation>& list_relations() {
    static const std::vector<Relation> registry = build_registry();
    return registry;
}

const Relation& find_relation(const std::string& id) {
    for (const auto& r : list_relations())
        if (r.id == id) return r;
    throw std::invalid_argument("unknown relation id: " + id);
}

BoundReport evaluate_relation(const std::string& id, const std::vector<ComplexMatrix>& inputs,
                              double tol, const SweepConfig& cfg) {
    const Relation& rel = find_relation(id);
    const size_t arity = rel.signature == Signature::single_matrix ? 1 : 2;
    if (inputs.size() != arity)
        throw std::invalid_argument(id + ": expected " + std::to_string(arity) + " matrix input(s)");
    if (arity == 2 && inputs[0].dim() != inputs[1].dim())
        throw std::invalid_argument(id + ": inputs must have equal dimension");
    for (const auto& m : inputs)
        if (!precondition_holds(rel.precondition, m))
            throw std::invalid_argument(id + ": input does not satisfy precondition " +
                                        precondition_name(rel.precondition));
    return grade(rel, rel.evaluate(inputs, cfg), tol, content_digest(inputs));
}

BoundReport evaluate_chain(const std::string& id, const std::vector<ComplexMatrix>& inputs,
                           double tol, const SweepConfig& cfg) {
    if (find_relation(id).kind != RelationKind::chain)
        throw std::invalid_argument(id + " is not a chain relation");
    return evaluate_relation(id, inputs, tol, cfg);
}

namespace {

BoundReport grade_direct(const std::string& id, const std::vector<std::string>& names,
                         const std::vector<TermValue>& terms, double tol, const std::string& digest,
                         RelationKind kind) {
    Relation shim;
    shim.id = id;
    shim.kind = kind;
    shim.term_names = names;
    return grade(shim, terms, tol, digest);
}

Ax abs_inner(const ComplexVector& a, const ComplexVector& b) {
    const double v = std::abs(inner(a, b));
    return {v, 1e-14 * (1.0 + v)};
}

} // namespace

BoundReport check_generalized_cauchy_schwarz(const ComplexVector& x, const ComplexVector& y,
                                             const ComplexVector& z, double tol) {
    if (x.empty() || x.size() != y.size() || x.size() != z.size())
        throw std::invalid_argument("check_generalized_cauchy_schwarz: equal nonzero lengths required");
    const Ax xy = abs_inner(x, y), xz = abs_inner(x, z), yz = abs_inner(y, z);
    const Ax nx = exact(vec_norm(x)), ny = exact(vec_norm(y)), nz = exact(vec_norm(z));

    ComplexVector mixv(x.size());
    const Complex cy = inner(x, y), cz = inner(x, z);
    for (size_t i = 0; i < x.size(); ++i) mixv[i] = cy * y[i] + cz * z[i];

    const Ax lhs = sq(xy) + sq(xz);
    const Ax mid = nx * exact(vec_norm(mixv));
    const Ax rhs = nx * sqrtx(sq(xy) * sq(ny) + sq(xz) * sq(nz) + 2.0 * (xy * (xz * yz)));
    return grade_direct("gcs", {"|<x,y>|^2+|<x,z>|^2", "||x|| ||<x,y>y+<x,z>z||", "||x|| sqrt(...)"},
                        {lhs, mid, rhs}, tol, digest_vectors({x, y, z}), RelationKind::chain);
}

BoundReport check_eq4(const ComplexVector& x, const ComplexVector& y, const ComplexVector& e,
                      double tol) {
    if (x.empty() || x.size() != y.size() || x.size() != e.size())
        throw std::invalid_argument("check_eq4: equal nonzero lengths required");
    if (std::abs(vec_norm(e) - 1.0) > 1e-12)
        throw std::invalid_argument("check_eq4: e must be a unit vector");
    const Ax xe = abs_inner(x, e), ye = abs_inner(y, e), xy = abs_inner(x, y);
    const Ax nx = exact(vec_norm(x)), ny = exact(vec_norm(y));

    ComplexVector mixv(x.size());
    const Complex cx = inner(e, x), cy = inner(e, y);
    for (size_t i = 0; i < x.size(); ++i) mixv[i] = cx * x[i] + cy * y[i];

    const Ax lhs = sq(xe) + sq(ye);
    const Ax mid = exact(vec_norm(mixv));
    const Ax rhs = sqrtx(sq(xe) * sq(nx) + sq(ye) * sq(ny) + 2.0 * (xe * (ye * xy)));
    return grade_direct("eq4", {"|<x,e>|^2+|<y,e>|^2", "||<e,x>x+<e,y>y||", "sqrt(...)"},
                        {lhs, mid, rhs}, tol, digest_vectors({x, y, e}), RelationKind::chain);
}

BoundReport check_angle_inequality(const ComplexVector& x, const ComplexVector& y,
                                   const ComplexVector& z, double tol) {
    if (x.empty() || x.size() != y.size() || x.size() != z.size())
        throw std::invalid_argument("check_angle_inequality: equal nonzero lengths required");
    const double nx = vec_norm(x), ny = vec_norm(y), nz = vec_norm(z);
    if (nx == 0.0 || ny == 0.0 || nz == 0.0)
        throw std::invalid_argument("check_angle_inequality: vectors must be nonzero");
    const Ax cyx = {std::abs(inner(y, x)) / (ny * nx), 1e-14};
    const Ax cxz = {std::abs(inner(x, z)) / (nx * nz), 1e-14};
    const Ax czy = {std::abs(inner(z, y)) / (nz * ny), 1e-14};
    const Ax lhs = cyx * cxz;
    const Ax rhs = 0.5 * sqrtx(sq(cyx) + sq(cxz) + 2.0 * (cyx * (cxz * czy)));
    return grade_direct("angle", {"cos(yx) cos(xz)", "sqrt(cos^2+cos^2+2ccc)/2"}, {lhs, rhs}, tol,
                        digest_vectors({x, y, z}), RelationKind::bound);
}

BoundReport check_mixed_schwarz(const ComplexMatrix& t, const ComplexVector& x,
                                const ComplexVector& y, double tol) {
    if (x.size() != static_cast<size_t>(t.dim()) || y.size() != x.size())
        throw std::invalid_argument("check_mixed_schwarz: dimension mismatch");
    const Ax lhs = {std::abs(inner(mat_vec(t, x), y)), 1e-14};
    const double px = std::max(0.0, inner(mat_vec(matrix_abs(t), x), x).real());
    const double py = std::max(0.0, inner(mat_vec(matrix_abs(adjoint(t)), y), y).real());
    const Ax rhs = {std::sqrt(px * py), 1e-10 * (1.0 + std::sqrt(px * py))};
    return grade_direct("mixed-schwarz", {"|<Tx,y>|", "sqrt(<|T|x,x><|T*|y,y>)"}, {lhs, rhs}, tol,
                        digest_vectors({x, y}) + content_digest({t}), RelationKind::bound);
}

std::string registry_json() {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& r : list_relations()) {
        nlohmann::ordered_json e;
        e["id"] = r.id;
        e["kind"] = kind_name(r.kind);
        e["signature"] = signature_name(r.signature);
        e["precondition"] = precondition_name(r.precondition);
        e["terms"] = r.term_names;
        e["description"] = r.description;
        e["source"] = r.source;
        doc.push_back(e);
    }
    return doc.dump(2);
}

} // namespace opradius
