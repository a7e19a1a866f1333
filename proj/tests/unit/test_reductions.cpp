// Copyright 2026 The hamred Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <set>

#include "core/reductions.hpp"
#include "core/toys.hpp"
#include "test_support.hpp"

namespace hamred {
namespace {

// ---------------------------------------------------------------------------
// Monotone wrapper

// Hand-written trees with known decode behaviour.
EncodingTree depth1_tree() {
    DisperserGraph g{3, 8, 2, {{0, 1}, {2, 3}, {4, 5}}};
    return EncodingTree(1, g);
}

EncodingTree depth2_tree() {
    DisperserGraph g{7, 10, 1, {{0}, {1}, {2}, {3}, {4}, {5}, {6}}};
    return EncodingTree(2, g);
}

// Independent model of W: accept when more than half of R is selected, or
// when some leaf whose root path has every neighbour inside y is accepted.
bool wrapper_accepts(const DisperserGraph &g, int depth, std::uint64_t y,
                     const std::function<bool(int leaf)> &v_accepts) {
    if (2 * std::popcount(y) > g.right_size) return true;
    for (int leaf = 0; leaf < (1 << depth); ++leaf) {
        int v = 0;
        bool inside = true;
        for (int level = 0; level <= depth; ++level) {
            for (int r : g.neighbors[v]) {
                if (!((y >> r) & 1u)) inside = false;
            }
            if (level < depth) v = 2 * v + 1 + ((leaf >> (depth - 1 - level)) & 1);
        }
        if (inside && v_accepts(leaf)) return true;
    }
    return false;
}

void expect_matches_model(const QmwInstance &q, const EncodingTree &tree, const std::function<bool(int)> &v_accepts) {
    const QmwCheck check = verify_qmw(q);
    ASSERT_TRUE(check.monotone.determined);
    EXPECT_TRUE(check.monotone.monotone);
    const int R = tree.graph().right_size;
    ASSERT_EQ(check.monotone.statuses.size(), std::size_t{1} << R);
    std::optional<int> min_weight;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << R); ++idx) {
        // Bit i of idx is y_{i+1}, which selects right vertex i.
        const bool expect = wrapper_accepts(tree.graph(), tree.depth(), idx, v_accepts);
        const bool got = check.monotone.statuses[idx] == CqmaStatus::Accepts;
        ASSERT_EQ(got, expect) << "y index " << idx;
        if (expect) {
            const int w = std::popcount(idx);
            if (!min_weight || w < *min_weight) min_weight = w;
        }
    }
    EXPECT_EQ(check.monotone.min_weight, min_weight);
}

TEST(ToQmw, AcceptAllMatchesModel) {
    const EncodingTree tree = depth1_tree();
    QmwLayout layout;
    const QmwInstance q = to_qmw(toys::accept_all(1), tree, &layout);
    EXPECT_EQ(layout.blocks, 1);
    EXPECT_EQ(q.W.n, 8);
    EXPECT_EQ(q.g, 4);
    EXPECT_EQ(q.g_prime, 4);
    EXPECT_FALSE(q.gap_inverted);
    expect_matches_model(q, tree, [](int) { return true; });
    // The encoding of either leaf has four right vertices.
    EXPECT_EQ(verify_qmw(q).monotone.min_weight, 4);
    EXPECT_TRUE(verify_qmw(q).yes);
}

TEST(ToQmw, RejectAllNeedsMajority) {
    const EncodingTree tree = depth1_tree();
    const QmwInstance q = to_qmw(toys::reject_all(1), tree);
    expect_matches_model(q, tree, [](int) { return false; });
    EXPECT_EQ(verify_qmw(q).monotone.min_weight, 8 / 2 + 1);
    EXPECT_TRUE(verify_qmw(q).no);
}

TEST(ToQmw, TwoBlocksForDepthTwo) {
    const EncodingTree tree = depth2_tree();
    QmwLayout layout;
    const QmwInstance q = to_qmw(toys::accept_x1(2), tree, &layout);
    EXPECT_EQ(layout.blocks, 2);
    EXPECT_EQ(q.W.m, 2);
    EXPECT_EQ(q.g, 3);
    EXPECT_EQ(q.g_prime, 5);
    // Leaf index bit 1 is x_1.
    expect_matches_model(q, tree, [](int leaf) { return (leaf >> 1) & 1; });
    EXPECT_EQ(verify_qmw(q).monotone.min_weight, 3);
}

TEST(ToQmsa, ClassicalVerifiers) {
    const EncodingTree tree = depth1_tree();
    const QmwInstance x1 = to_qmsa(toys::classical_x1(1), tree);
    EXPECT_FALSE(x1.quantum_choice);
    EXPECT_EQ(x1.W.m, 0);
    expect_matches_model(x1, tree, [](int leaf) { return leaf == 1; });

    const QmwInstance all = to_qmsa(toys::classical_accept_all(1), tree);
    EXPECT_EQ(verify_qmw(all).monotone.min_weight, 4);
    const QmwInstance none = to_qmsa(toys::classical_reject_all(1), tree);
    EXPECT_EQ(verify_qmw(none).monotone.min_weight, 5);
}

TEST(ToQmw, RejectsBadInputs) {
    const EncodingTree tree = depth1_tree();
    try {
        to_qmsa(toys::accept_x1(1), tree);
        FAIL() << "expected InvalidArgument";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
    }
    EXPECT_THROW(to_qmw(toys::accept_x1(2), tree), Error);
    EXPECT_THROW(to_qmw(toys::classical_x1(1), tree), Error);
}

TEST(ToQmw, InvertedGapIsFlagged) {
    // Degree 3 at depth 1 encodes with up to six vertices, more than half of 8.
    DisperserGraph g{3, 8, 3, {{0, 1, 2}, {3, 4, 5}, {5, 6, 7}}};
    const QmwInstance q = to_qmw(toys::accept_all(1), EncodingTree(1, g));
    EXPECT_EQ(q.g, 6);
    EXPECT_TRUE(q.gap_inverted);
    EXPECT_THROW(qmw_to_qssc(q), Error);
}

TEST(MakeQmw, ValidatesThresholds) {
    EXPECT_NO_THROW(make_qmw(toys::accept_x1(3), 1, 2));
    EXPECT_THROW(make_qmw(toys::accept_x1(3), 2, 1), Error);
    EXPECT_THROW(make_qmw(toys::accept_x1(3), 1, 4), Error);
}

// ---------------------------------------------------------------------------
// Quantum set cover

const QsscInstance &small_qssc() {
    static const QsscInstance q = qmw_to_qssc(make_qmw(toys::accept_x1(1), 1, 1));
    return q;
}

TEST(Qssc, ThresholdsAndShape) {
    const QsscInstance &q = small_qssc();
    ASSERT_EQ(q.terms.size(), 3u);
    EXPECT_EQ(q.g, 3);
    EXPECT_EQ(q.g_prime, 3);
    EXPECT_EQ(q.L, 3);
    EXPECT_DOUBLE_EQ(q.alpha, 1.0);
    // x = 0 is rejected with certainty, so b = 1 / (L + 1).
    EXPECT_NEAR(q.b, 0.25, 1e-12);
    EXPECT_NEAR(q.beta, 0.75, 1e-12);
    EXPECT_NEAR(q.scale, 4.0, 1e-12);
    EXPECT_NEAR(q.zeta, 2.0 * (1 + 16) / 4.0, 1e-12);
    EXPECT_TRUE(q.certificate.projection.holds());
    EXPECT_GE(q.certificate.margin, -1e-9);
    EXPECT_EQ(q.dim(), 32u);
}

TEST(Qssc, TermsMatchDefinition) {
    const QsscInstance &q = small_qssc();
    const KitaevHamiltonian k = compile(decompose(toys::accept_x1(1)));
    const std::vector<int> dims = k.site_dims();
    // G_1 = (L+1) |0><0|_{A_1} (x) |0><0|_clock, built from basis states.
    const long d = 32;
    Matrix g1 = Matrix::Zero(d, d);
    for (long i = 0; i < d; ++i) {
        const std::vector<int> dig = oracle::digits(i, dims);
        if (dig[0] == 0 && dig.back() == 0) g1(i, i) = 4.0;
    }
    EXPECT_LE((q.subset_sum({0}).matrix() - g1).cwiseAbs().maxCoeff(), 1e-12);
    const Matrix pen = assemble(k.penalty()).matrix();
    const Matrix total = assemble(k.total()).matrix();
    EXPECT_LE((q.subset_sum({1}).matrix() - (q.delta + 1) * pen).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LE((q.subset_sum({2}).matrix() - (Matrix::Identity(d, d) - total)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Qssc, CoverExamples) {
    const QsscInstance &q = small_qssc();
    EXPECT_TRUE(verify_qssc(q, {0, 1, 2}).is_cover);
    const CoverVerdict empty = verify_qssc(q, {});
    EXPECT_FALSE(empty.is_cover);
    EXPECT_DOUBLE_EQ(empty.lambda_min, 0.0);
    // Without G_1 the accepting history state keeps energy at most beta.
    EXPECT_FALSE(verify_qssc(q, {1, 2}).is_cover);
}

TEST(Qssc, WitnessesForMissingTerms) {
    const QsscInstance &q = small_qssc();
    const KitaevHamiltonian k = compile(decompose(toys::accept_x1(1)));
    // Omitting G_{n+2}: hist(1^n, y) has zero energy.
    Vector psi_ab = Vector::Zero(4);
    psi_ab(2) = 1.0;  // A = 1, B = 0
    const Vector hist = history_state(k, psi_ab);
    EXPECT_NEAR(expectation(q.subset_sum({0, 1}), hist), 0.0, 1e-9);
    // Omitting G_{n+1}: every qubit one at clock zero.
    Vector ones = Vector::Zero(32);
    ones(7 * 4 + 0) = 1.0;
    EXPECT_LE(expectation(q.subset_sum({0, 2}), ones), 1e-12);
}

TEST(Qssc, BruteForce) {
    const QsscInstance &q = small_qssc();
    const QsscBruteForce below = brute_force_qssc(q, 2);
    EXPECT_TRUE(below.below_beta);
    EXPECT_FALSE(below.smallest_cover.has_value());
    EXPECT_EQ(below.subsets_checked, 1u + 3u + 3u);
    const QsscBruteForce all = brute_force_qssc(q, 3);
    ASSERT_TRUE(all.smallest_cover.has_value());
    EXPECT_EQ(all.smallest_cover->size(), 3u);
    EXPECT_THROW(brute_force_qssc(q, 3, 1e-9, 5), Error);
}

TEST(Qssc, DeltaTooSmallReportsMargin) {
    QsscOptions opts;
    opts.delta = 0.5;
    try {
        qmw_to_qssc(make_qmw(toys::accept_x1(1), 1, 1), opts);
        FAIL() << "expected NotCertified";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotCertified);
        EXPECT_NE(std::string(e.what()).find("margin"), std::string::npos);
    }
}

TEST(Qssc, ExplicitDeltaAndUnaryClock) {
    QsscOptions opts;
    opts.delta = 4096;
    opts.clock = ClockMode::Unary;
    const QsscInstance q = qmw_to_qssc(make_qmw(toys::accept_x1(1), 1, 1), opts);
    EXPECT_DOUBLE_EQ(q.delta, 4096);
    EXPECT_EQ(q.dim(), 64u);
    EXPECT_TRUE(verify_qssc(q, {0, 1, 2}).is_cover);
    EXPECT_TRUE(brute_force_qssc(q, 2).below_beta);
}

TEST(Qssc, NonzeroEpsilonThresholds) {
    QsscOptions opts;
    opts.epsilon = 1e-4;
    opts.delta = 1 << 14;
    const QsscInstance q = qmw_to_qssc(make_qmw(toys::accept_x1(1), 1, 1), opts);
    EXPECT_NEAR(q.alpha, 1.0 - (q.zeta + 1.0) * 1e-4, 1e-15);
    EXPECT_GE(q.certificate.lambda_min, q.alpha - 1e-9);
}

TEST(Qssc, HistoryProjectionBound) {
    // For T containing the support of an accepted x, the compressed operator
    // Pi_hist (H_out - sum_T G_i) Pi_hist has no positive eigenvalue.
    const CqmaCircuit w = toys::accept_x1(3);
    const QsscInstance q = qmw_to_qssc(make_qmw(w, 1, 1));
    const KitaevHamiltonian k = compile(decompose(w));
    const Subspace hist = hist_projector(k);
    const HermitianOperator hout = assemble(k.h_out());
    for (const std::vector<int> &t : std::vector<std::vector<int>>{{0}, {0, 1}, {0, 2}, {0, 1, 2}}) {
        const HermitianOperator gsum = q.subset_sum(t);
        const HermitianOperator compressed = restrict_to(hout - gsum, hist);
        EXPECT_LE(max_eigenvalue(compressed), 1e-9) << "T size " << t.size();
    }
}

TEST(Qssc, HistoryStatesAreEigenvectors) {
    const CqmaCircuit w = toys::accept_x1(3);
    const QsscInstance q = qmw_to_qssc(make_qmw(w, 1, 1));
    const KitaevHamiltonian k = compile(decompose(w));
    const Matrix proj = hist_projector(k).projector();
    const std::vector<int> t{0, 2};  // z = 101
    const Matrix m = proj * (-q.subset_sum(t).matrix()) * proj;
    for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 2; ++y) {
            Vector psi = Vector::Zero(16);
            psi(2 * x + y) = 1.0;
            const Vector h = history_state(k, psi);
            // x_1 is the most significant bit of x.
            const int overlap = ((x >> 2) & 1) + (x & 1);
            const double expected = overlap - 2.0;
            EXPECT_LE((m * h - expected * h).norm(), 1e-9) << "x=" << x << " y=" << y;
        }
    }
}

// ---------------------------------------------------------------------------
// Quantum irredundant cover

const QirrInstance &basic_qirr() {
    static const QirrInstance q = qssc_to_qirr(small_qssc(), QirrMode::Basic);
    return q;
}
const QirrInstance &improved_qirr() {
    static const QirrInstance q = qssc_to_qirr(small_qssc(), QirrMode::Improved);
    return q;
}

TEST(Qirr, Shape) {
    const QirrInstance &b = basic_qirr();
    EXPECT_EQ(b.r, 5);
    EXPECT_EQ(b.r_padded, 8);
    EXPECT_EQ(b.chaperone_qubits, 3);
    EXPECT_EQ(b.dim(), 2u * 32u * 8u);
    EXPECT_EQ(b.terms.size(), 1u + 2u * 8u - 1u);
    EXPECT_EQ(b.h, 3 + 2 * 5 - 3);
    EXPECT_NEAR(b.gamma, 1.0 + 7, 1e-12);
    EXPECT_NEAR(b.delta_threshold, 0.75 + 7, 1e-12);
    int padded = 0;
    for (const QirrTerm &t : b.terms) padded += t.padded ? 1 : 0;
    // j = 5, 6, 7 in both the penalty and the tail group.
    EXPECT_EQ(padded, 6);

    const QirrInstance &im = improved_qirr();
    EXPECT_EQ(im.terms.size(), 8u + 2u * 8u - 1u);
    EXPECT_EQ(im.h, 3 * 5 - 1);
}

TEST(Qirr, TermsAreScaledProjectors) {
    for (const QirrInstance *q : {&basic_qirr(), &improved_qirr()}) {
        for (const QirrTerm &t : q->terms) {
            const Eigen::VectorXd ev = oracle::eigenvalues(q->subset_sum({static_cast<int>(&t - &q->terms[0])}).matrix());
            for (Eigen::Index k = 0; k < ev.size(); ++k) {
                const bool ok = std::abs(ev(k)) <= 1e-9 * t.c || std::abs(ev(k) - t.c) <= 1e-9 * t.c;
                ASSERT_TRUE(ok) << t.label << " eigenvalue " << ev(k);
            }
        }
        EXPECT_LE(qirr_projector_defect(*q), 1e-10);
    }
}

TEST(Qirr, PenaltyAndTailMatchDisplay) {
    const QirrInstance &q = basic_qirr();
    const QsscInstance &s = small_qssc();
    const KitaevHamiltonian k = compile(decompose(toys::accept_x1(1)));
    const long ds = 32, dc = 8;
    const Matrix i_s = Matrix::Identity(ds, ds);
    const Matrix i_c = Matrix::Identity(dc, dc);
    const Matrix p0 = oracle::proj(2, 0), p1 = oracle::proj(2, 1);
    // H_1 is the ancilla initialisation term; H_8 is H_out.
    const Matrix h1 = assemble(s.kitaev_terms[0]).matrix();
    const Matrix hout = assemble(k.h_out()).matrix();
    const Matrix f_pen1 = (q.penalty + 1) * (oracle::kron(p0, oracle::kron(h1, i_c)) +
                                             oracle::kron(p1, oracle::kron(i_s, oracle::proj(8, 0))));
    const Matrix f_tail8 = oracle::kron(p0, oracle::kron(i_s - hout, i_c)) +
                           oracle::kron(p1, oracle::kron(i_s, oracle::proj(8, 7)));
    const Matrix f_tail6 = oracle::kron(p0, oracle::kron(i_s, i_c)) +
                           oracle::kron(p1, oracle::kron(i_s, oracle::proj(8, 7)));
    auto find = [&](const std::string &label) {
        for (std::size_t k2 = 0; k2 < q.terms.size(); ++k2) {
            if (q.terms[k2].label == label) return static_cast<int>(k2);
        }
        return -1;
    };
    // n = 1: penalty F_{1+j}, tails F_{1+7+j}.
    EXPECT_LE((q.subset_sum({find("F2")}).matrix() - f_pen1).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LE((q.subset_sum({find("F16")}).matrix() - f_tail8).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((q.subset_sum({find("F14")}).matrix() - f_tail6).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_TRUE(q.terms[find("F14")].padded);
}

TEST(Qirr, KDecomposition) {
    for (const QirrInstance *q : {&basic_qirr(), &improved_qirr()}) {
        EXPECT_LE(qirr_k_decomposition_defect(*q, small_qssc(), {0}), 1e-10);
        EXPECT_LE(qirr_k_decomposition_defect(*q, small_qssc(), {}), 1e-10);
    }
}

TEST(Qirr, YesRoute) {
    for (const QirrInstance *q : {&basic_qirr(), &improved_qirr()}) {
        const std::vector<int> t = qirr_succinct_subset(*q, {0, 1, 2});
        EXPECT_EQ(q->counted_size(t), q->h);
        const QirrVerdict v = verify_qirr(*q, t);
        EXPECT_EQ(v.verdict, Verdict::Holds);
        EXPECT_EQ(v.route, QirrRoute::YesSufficient);
        EXPECT_GE(v.lambda_min, q->scale * q->gamma - 1e-9);

        std::vector<int> all(q->terms.size());
        for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<int>(k);
        EXPECT_EQ(verify_qirr(*q, all).verdict, Verdict::Holds);
    }
}

TEST(Qirr, MissingPenaltyWitness) {
    const QirrInstance &q = basic_qirr();
    std::vector<int> t = qirr_succinct_subset(q, {0});
    t.erase(std::find(t.begin(), t.end(), 1));  // F_{n+1}
    const QirrVerdict v = verify_qirr(q, t);
    EXPECT_EQ(v.verdict, Verdict::Fails);
    EXPECT_EQ(v.route, QirrRoute::MissingPenalty);
    EXPECT_NEAR(v.witness_full, q.scale * (q.penalty + 1), 1e-9 * q.penalty);
    EXPECT_NEAR(v.witness_subset, 0.0, 1e-9);
}

TEST(Qirr, MissingTailWitness) {
    const QirrInstance &q = basic_qirr();
    std::vector<int> t = qirr_succinct_subset(q, {0});
    t.pop_back();  // the last tail term
    const QirrVerdict v = verify_qirr(q, t);
    EXPECT_EQ(v.verdict, Verdict::Fails);
    EXPECT_EQ(v.route, QirrRoute::MissingTail);
    EXPECT_NEAR(v.witness_full, q.scale * q.r_padded, 1e-9);
    EXPECT_LE(v.witness_subset, q.scale * (q.r_padded - 1) + 1e-9);
}

TEST(Qirr, MissingChoiceReducesToCover) {
    for (const QirrInstance *q : {&basic_qirr(), &improved_qirr()}) {
        const std::vector<int> t = qirr_succinct_subset(*q, {});
        const QirrVerdict v = verify_qirr(*q, t);
        EXPECT_EQ(v.verdict, Verdict::Fails);
        EXPECT_EQ(v.route, QirrRoute::ReducedToCover);
        EXPECT_LE(v.witness_subset, q->scale * q->delta_threshold + 1e-9);
        EXPECT_GE(v.witness_full, q->scale * q->gamma - 1e-9);
    }
    // Improved mode: dropping one chaperone copy leaves a hole on that value.
    const QirrInstance &im = improved_qirr();
    std::vector<int> t = qirr_succinct_subset(im, {0});
    t.erase(t.begin() + 2);
    EXPECT_EQ(verify_qirr(im, t).route, QirrRoute::ReducedToCover);
}

TEST(Qirr, ImprovedReproducesBasic) {
    for (const std::vector<int> &cover : std::vector<std::vector<int>>{{0}, {}}) {
        const Matrix basic = basic_qirr().subset_sum(qirr_succinct_subset(basic_qirr(), cover)).matrix();
        const Matrix improved = improved_qirr().subset_sum(qirr_succinct_subset(improved_qirr(), cover)).matrix();
        EXPECT_LE((basic - improved).cwiseAbs().maxCoeff(), 1e-12);
        const Eigen::VectorXd eb = oracle::eigenvalues(basic);
        const Eigen::VectorXd ei = oracle::eigenvalues(improved);
        EXPECT_LE((eb - ei).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Qirr, SmallDeltaRejected) {
    QsscInstance s = small_qssc();
    s.delta = 3;
    EXPECT_THROW(qssc_to_qirr(s), Error);
}

TEST(Qirr, ModeNames) {
    EXPECT_EQ(qirr_mode_from_name("basic"), QirrMode::Basic);
    EXPECT_EQ(qirr_mode_from_name("improved"), QirrMode::Improved);
    EXPECT_THROW(qirr_mode_from_name("fancy"), Error);
}

// ---------------------------------------------------------------------------
// Local Hamiltonian with a classical proof

TEST(CqLh, PreparedLayout) {
    const VerifierCircuit v = toys::and2();
    const VerifierCircuit p = prepare_lh_verifier(v);
    EXPECT_EQ(p.n, 2);
    EXPECT_EQ(p.m, v.m);
    EXPECT_EQ(p.p, v.p + 2);
    const auto &g = p.circuit.gates();
    EXPECT_EQ(g[0].kind, GateKind::CNOT);
    EXPECT_EQ(g[1].kind, GateKind::CNOT);
    EXPECT_EQ(g.back().kind, GateKind::X);
    EXPECT_EQ(g.back().targets[0], p.output_qubit);
    // The prepared circuit accepts exactly when the original rejects.
    for (int c = 0; c < 4; ++c) {
        const Bits bits = bits_of(c, 2);
        const double orig = acceptance_operator(decompose(v), bits).matrix().real().trace();
        const double prep = acceptance_operator(p, bits).matrix().real().trace();
        EXPECT_NEAR(orig + prep, 2.0, 1e-9);
    }
}

TEST(CqLh, EffectiveHamiltonianIdentity) {
    const CqLhInstance inst = cq_to_lh(toys::and2());
    const Matrix h = assemble(inst.hamiltonian.total()).matrix();
    const long d = static_cast<long>(inst.dim());
    const long block = d / 4;
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int c = static_cast<int>(rng() % 4);
        const Vector psi = oracle::random_state(block, rng);
        Vector full = Vector::Zero(d);
        full.segment(c * block, block) = psi;
        // Qubit 0 (c_1) is the most significant bit of the block index.
        const Bits bits{static_cast<std::uint8_t>((c >> 1) & 1), static_cast<std::uint8_t>(c & 1)};
        const Matrix hc = effective_hamiltonian(inst.hamiltonian.circuit(), 2, bits).matrix();
        const Complex lhs = full.dot(h * full);
        const Complex rhs = psi.dot(hc * psi);
        EXPECT_LE(std::abs(lhs - rhs), 1e-10) << "c=" << c;
    }
}

TEST(CqLh, ZeroProofMatchesNoCopyCircuit) {
    const VerifierCircuit v = decompose(toys::and2());
    const CqLhInstance inst = cq_to_lh(v);
    // Build the circuit without A by hand: identities where the copies were.
    const int total = v.m + v.p + v.n;
    QuantumCircuit c(total);
    auto copy = [&](int j) { return v.m + v.p + j; };
    for (int j = 0; j < v.n; ++j) c.add(Gate::identity(copy(j)));
    for (const Gate &g : v.circuit.gates()) {
        Gate h = g;
        for (int &q : h.targets) q = q < v.n ? copy(q) : q - v.n;
        c.add(h);
    }
    const int out = v.output_qubit - v.n;
    c.add(Gate::x(out));
    VerifierCircuit hand{c, 0, v.m, v.p + v.n, out, {}};
    const Matrix expected = assemble(compile(hand).total()).matrix();
    const Matrix got = effective_hamiltonian(inst.hamiltonian.circuit(), 2, bits_of(0, 2)).matrix();
    ASSERT_EQ(expected.rows(), got.rows());
    EXPECT_LE((expected - got).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_THROW(effective_hamiltonian(inst.hamiltonian.circuit(), 2, Bits{0}), Error);
}

TEST(CqLh, YesToy) {
    const CqLhInstance inst = cq_to_lh(toys::and2());
    EXPECT_DOUBLE_EQ(inst.a, 0.0);
    EXPECT_GT(inst.b, 0.0);
    const CqLhCheck check = verify_cqlh(inst);
    EXPECT_TRUE(check.yes);
    EXPECT_FALSE(check.no);
    ASSERT_TRUE(check.yes_witness.has_value());
    EXPECT_EQ(format_bits(*check.yes_witness), "11");
    const double lam = min_eigenvalue(effective_hamiltonian(inst.hamiltonian.circuit(), 2, parse_bits("11")));
    EXPECT_GE(lam, inst.b - 1e-12);
    EXPECT_GE(lam, kitaev_bounds(inst.hamiltonian, 0.0).b_floor);
}

TEST(CqLh, NoToy) {
    const CqLhInstance inst = cq_to_lh(toys::reject_all(2));
    const CqLhCheck check = verify_cqlh(inst);
    EXPECT_FALSE(check.yes);
    EXPECT_TRUE(check.no);
    for (int c = 0; c < 4; ++c) {
        Vector w;
        const double e = lh_history_witness_energy(inst, bits_of(c, 2), &w);
        EXPECT_LE(e, inst.a + 1e-9);
        EXPECT_NEAR(w.norm(), 1.0, 1e-12);
    }
}

TEST(CqLh, WeightedVariantCarriesThresholds) {
    const QmwInstance q = make_qmw(toys::accept_x1(2), 1, 1);
    const CqLhInstance inst = qmw_to_lh_hw(q);
    EXPECT_EQ(inst.g, 1);
    EXPECT_EQ(inst.g_prime, 1);
    EXPECT_EQ(inst.provenance["reduction"], "qmw_to_lh_hw");
    const CqLhCheck check = verify_cqlh(inst);
    // Input 10 has weight 1 and is accepted.
    EXPECT_TRUE(check.yes);
}

}  // namespace
}  // namespace hamred
