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

// Irredundant cover instances built from a set cover instance.
//
// Sites are ordered tag qubit, the set cover sites, then log2(r') chaperone
// qubits. The Kitaev term list is padded with zero projectors up to a power of
// two r' so that H_{r'} is always H_out; padded terms exist in the instance
// but are never counted against the size bound.

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "core/reductions.hpp"

namespace hamred {

const char *qirr_mode_name(QirrMode m) { return m == QirrMode::Basic ? "basic" : "improved"; }

QirrMode qirr_mode_from_name(const std::string &name) {
    if (name == "basic") return QirrMode::Basic;
    if (name == "improved") return QirrMode::Improved;
    fail(ErrorCode::InvalidArgument, "unknown QIRR mode '" + name + "' (expected basic or improved)");
}

const char *qirr_route_name(QirrRoute r) {
    switch (r) {
        case QirrRoute::YesSufficient:
            return "yes_sufficient";
        case QirrRoute::MissingPenalty:
            return "missing_penalty";
        case QirrRoute::MissingTail:
            return "missing_tail";
        case QirrRoute::ReducedToCover:
            return "reduced_to_cover";
        case QirrRoute::NumericSearch:
            return "numeric_search";
        case QirrRoute::None:
            return "none";
    }
    return "none";
}

std::size_t QirrInstance::dim() const {
    std::size_t d = 1;
    for (int s : site_dims) d *= static_cast<std::size_t>(s);
    return d;
}

HermitianOperator QirrInstance::subset_sum(const std::vector<int> &subset) const {
    require(dim() <= dim_cap(), ErrorCode::CapExceeded, "QIRR dimension exceeds the dense cap");
    const auto d = static_cast<Eigen::Index>(dim());
    Matrix acc = Matrix::Zero(d, d);
    for (int i : subset) {
        require(i >= 0 && i < static_cast<int>(terms.size()), ErrorCode::InvalidArgument,
                "subset index " + std::to_string(i) + " out of range");
        accumulate(terms[static_cast<std::size_t>(i)].op, acc);
    }
    return HermitianOperator(std::move(acc));
}

int QirrInstance::counted_size(const std::vector<int> &subset) const {
    int k = 0;
    for (int i : subset) {
        require(i >= 0 && i < static_cast<int>(terms.size()), ErrorCode::InvalidArgument,
                "subset index " + std::to_string(i) + " out of range");
        if (!terms[static_cast<std::size_t>(i)].padded) ++k;
    }
    return k;
}

void QirrInstance::validate() const {
    require(!terms.empty(), ErrorCode::InvalidArgument, "a QIRR instance needs terms");
    require(r >= 1 && r_padded >= r && is_power_of_two(static_cast<std::size_t>(r_padded)),
            ErrorCode::InvalidArgument, "r' must be a power of two no smaller than r");
    require(site_dims.size() >= 2 && site_dims.front() == 2, ErrorCode::InvalidArgument,
            "the first site must be the tag qubit");
    for (const QirrTerm &t : terms) {
        require(t.op.site_dims() == site_dims, ErrorCode::InvalidArgument, "every term must live on the instance sites");
        require(t.c > 0, ErrorCode::InvalidArgument, "projector scale must be positive");
    }
    require(gamma > delta_threshold, ErrorCode::InvalidArgument, "gamma must exceed delta");
    require(h >= 0 && h <= h_prime, ErrorCode::InvalidArgument, "need 0 <= h <= h'");
    require(scale >= 1.0, ErrorCode::InvalidArgument, "scale must be at least one");
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

struct QirrBuilder {
    std::vector<int> sites;
    int source_sites = 0;
    int chaperone = 0;

    std::vector<int> chaperone_support() const {
        std::vector<int> s;
        for (int k = 0; k < chaperone; ++k) s.push_back(1 + source_sites + k);
        return s;
    }

    // |tag><tag| (x) term (x) |value><value|_chaperone, or I on the
    // chaperone when value < 0.
    LocalTerm lift(int tag, const LocalTerm &t, int value) const {
        LocalTerm out;
        out.support.push_back(0);
        for (int s : t.support) out.support.push_back(s + 1);
        out.block = kron(ketbra(2, tag, tag), t.block);
        if (value >= 0) {
            for (int s : chaperone_support()) out.support.push_back(s);
            out.block = kron(out.block, ketbra(Eigen::Index{1} << chaperone, value, value));
        }
        out.weight = t.weight;
        return out;
    }

    // |1><1|_tag (x) |value><value|_chaperone.
    LocalTerm flag(int value) const {
        LocalTerm out;
        out.support.push_back(0);
        for (int s : chaperone_support()) out.support.push_back(s);
        out.block = kron(ketbra(2, 1, 1), ketbra(Eigen::Index{1} << chaperone, value, value));
        return out;
    }
};

// F restricted to the sites it touches, for a cheap spectral check.
HermitianOperator local_operator(const OperatorSum &op) {
    std::set<int> used;
    for (const LocalTerm &t : op.terms()) used.insert(t.support.begin(), t.support.end());
    std::vector<int> order(used.begin(), used.end());
    std::vector<int> dims;
    std::vector<int> index(op.site_dims().size(), -1);
    for (std::size_t k = 0; k < order.size(); ++k) {
        index[order[k]] = static_cast<int>(k);
        dims.push_back(op.site_dims()[order[k]]);
    }
    OperatorSum local(dims);
    for (const LocalTerm &t : op.terms()) {
        LocalTerm u = t;
        for (int &s : u.support) s = index[s];
        local.add(std::move(u));
    }
    return assemble_or_zero(local);
}

}  // namespace

QirrInstance qssc_to_qirr(const QsscInstance &q, QirrMode mode) {
    q.validate();
    const int n = q.n;
    const int r = static_cast<int>(q.kitaev_terms.size());
    require(r >= 2, ErrorCode::Precondition, "the source Hamiltonian needs at least two terms");
    const int rp = static_cast<int>(next_power_of_two(static_cast<std::size_t>(r)));
    const int chap = log2_exact(static_cast<std::size_t>(rp));
    require(q.delta >= rp - 1, ErrorCode::Precondition,
            "Delta = " + fmt(q.delta) + " is below r' - 1 = " + std::to_string(rp - 1));

    QirrBuilder bld;
    bld.source_sites = static_cast<int>(q.site_dims.size());
    bld.chaperone = chap;
    bld.sites.push_back(2);
    bld.sites.insert(bld.sites.end(), q.site_dims.begin(), q.site_dims.end());
    for (int k = 0; k < chap; ++k) bld.sites.push_back(2);

    QirrInstance out;
    out.site_dims = bld.sites;
    out.mode = mode;
    out.r = r;
    out.r_padded = rp;
    out.chaperone_qubits = chap;
    out.n = n;
    out.penalty = q.delta;
    out.alpha = q.alpha;
    out.beta = q.beta;

    // H_j for j = 1..r': real terms first, zero padding, H_out last.
    auto h_term = [&](int j) -> const OperatorSum * {
        if (j <= r - 1) return &q.kitaev_terms[static_cast<std::size_t>(j - 1)];
        if (j == rp) return &q.kitaev_terms.back();
        return nullptr;
    };
    auto padded = [&](int j) { return j >= r && j <= rp - 1; };

    // Choice terms.
    for (int i = 0; i < n; ++i) {
        const OperatorSum &gi = q.terms[static_cast<std::size_t>(i)];
        const double c = gi.terms().front().weight;
        if (mode == QirrMode::Basic) {
            QirrTerm t{OperatorSum(bld.sites), c, QirrGroup::Choice, i, 0, false, "F" + std::to_string(i + 1)};
            for (const LocalTerm &lt : gi.terms()) t.op.add(bld.lift(0, lt, -1));
            out.terms.push_back(std::move(t));
        } else {
            for (int j = 1; j <= rp; ++j) {
                QirrTerm t{OperatorSum(bld.sites), c, QirrGroup::Choice, i, j, padded(j),
                           "F" + std::to_string(i + 1) + "," + std::to_string(j)};
                for (const LocalTerm &lt : gi.terms()) t.op.add(bld.lift(0, lt, j - 1));
                out.terms.push_back(std::move(t));
            }
        }
    }
    // Penalty terms F_{n+j}, j = 1..r'-1.
    const double pen = q.delta + 1.0;
    for (int j = 1; j <= rp - 1; ++j) {
        QirrTerm t{OperatorSum(bld.sites), pen, QirrGroup::Penalty, j, 0, padded(j), "F" + std::to_string(n + j)};
        if (const OperatorSum *hj = h_term(j)) {
            for (const LocalTerm &lt : hj->terms()) {
                LocalTerm l = bld.lift(0, lt, -1);
                l.weight *= pen;
                t.op.add(std::move(l));
            }
        }
        LocalTerm f = bld.flag(j - 1);
        f.weight = pen;
        t.op.add(std::move(f));
        out.terms.push_back(std::move(t));
    }
    // Tail terms F_{n+r'-1+j}, j = 1..r'.
    for (int j = 1; j <= rp; ++j) {
        QirrTerm t{OperatorSum(bld.sites), 1.0, QirrGroup::Tail, j, 0, padded(j),
                   "F" + std::to_string(n + rp - 1 + j)};
        t.op.add({0}, ketbra(2, 0, 0), 1.0);
        if (const OperatorSum *hj = h_term(j)) {
            for (const LocalTerm &lt : hj->terms()) {
                LocalTerm l = bld.lift(0, lt, -1);
                l.weight = -l.weight;
                t.op.add(std::move(l));
            }
        }
        t.op.add(bld.flag(rp - 1));
        out.terms.push_back(std::move(t));
    }

    out.gamma = q.alpha + rp - 1;
    out.delta_threshold = q.beta + rp - 1;
    const int g = q.g;
    const int gp = q.g_prime;
    if (mode == QirrMode::Basic) {
        out.h = g + 2 * r - 3;
        out.h_prime = gp + 2 * r - 3;
    } else {
        out.h = g * r - 1;
        out.h_prime = gp * r - 1;
    }
    out.scale = std::max(1.0, 1.0 / (out.gamma - out.delta_threshold));

    // Every generated term must be c times a projector.
    for (const QirrTerm &t : out.terms) {
        const RealVector ev = eigenvalues(local_operator(t.op));
        for (Eigen::Index k = 0; k < ev.size(); ++k) {
            const double v = ev(k);
            const bool ok = std::abs(v) <= 1e-9 * t.c || std::abs(v - t.c) <= 1e-9 * t.c;
            require(ok, ErrorCode::Internal, "term " + t.label + " has eigenvalue " + fmt(v) + " outside {0, " +
                                                 fmt(t.c) + "}");
        }
    }
    out.provenance = {{"reduction", "qssc_to_qirr"},
                      {"mode", qirr_mode_name(mode)},
                      {"source", q.provenance},
                      {"r", r},
                      {"r_padded", rp}};
    out.validate();
    return out;
}

double qirr_projector_defect(const QirrInstance &q, int probes) {
    std::mt19937_64 rng(20260101);
    std::normal_distribution<double> gauss;
    const auto d = static_cast<Eigen::Index>(q.dim());
    double worst = 0;
    for (const QirrTerm &t : q.terms) {
        for (int k = 0; k < probes; ++k) {
            Vector v(d);
            for (Eigen::Index i = 0; i < d; ++i) v(i) = Complex(gauss(rng), gauss(rng));
            v.normalize();
            const Vector pv = hamred::apply(t.op, v) / t.c;
            const Vector ppv = hamred::apply(t.op, pv) / t.c;
            worst = std::max(worst, (ppv - pv).norm());
        }
    }
    return worst;
}

std::vector<int> qirr_succinct_subset(const QirrInstance &q, const std::vector<int> &qssc_subset) {
    std::set<int> chosen;
    for (int i : qssc_subset) {
        require(i >= 0 && i < q.n + 2, ErrorCode::InvalidArgument, "QSSC index out of range");
        if (i < q.n) chosen.insert(i);
    }
    std::vector<int> out;
    for (std::size_t k = 0; k < q.terms.size(); ++k) {
        const QirrTerm &t = q.terms[k];
        if (t.group != QirrGroup::Choice || chosen.count(t.i)) out.push_back(static_cast<int>(k));
    }
    return out;
}

double qirr_k_decomposition_defect(const QirrInstance &q, const QsscInstance &source,
                                   const std::vector<int> &qssc_subset) {
    std::set<int> s;
    for (int i : qssc_subset) {
        if (i < q.n) s.insert(i);
    }
    s.insert(q.n);
    s.insert(q.n + 1);
    const HermitianOperator gs = source.subset_sum(std::vector<int>(s.begin(), s.end()));
    const auto ds = gs.dim();
    const Eigen::Index dc = Eigen::Index{1} << q.chaperone_qubits;
    const int rp = q.r_padded;
    Matrix inner = gs.matrix() + (rp - 1.0) * Matrix::Identity(ds, ds);
    const Matrix k1 = kron(ketbra(2, 0, 0), kron(inner, Matrix::Identity(dc, dc)));
    Matrix diag = Matrix::Zero(dc, dc);
    for (Eigen::Index i = 0; i < dc; ++i) diag(i, i) = i <= rp - 2 ? q.penalty + 1.0 : double(rp);
    const Matrix k2 = kron(ketbra(2, 1, 1), kron(Matrix::Identity(ds, ds), diag));
    const HermitianOperator ft = q.subset_sum(qirr_succinct_subset(q, qssc_subset));
    return (ft.matrix() - k1 - k2).cwiseAbs().maxCoeff();
}

QirrVerdict verify_qirr(const QirrInstance &q, const std::vector<int> &subset, double slack) {
    QirrVerdict out;
    const double s = q.scale;
    const double gamma_s = s * q.gamma;
    const double delta_s = s * q.delta_threshold;
    std::vector<int> all(q.terms.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<int>(k);
    std::set<int> in(subset.begin(), subset.end());
    require(in.size() == subset.size(), ErrorCode::InvalidArgument, "subset has repeated indices");
    for (int i : subset) {
        require(i >= 0 && i < static_cast<int>(q.terms.size()), ErrorCode::InvalidArgument,
                "subset index " + std::to_string(i) + " out of range");
    }

    OperatorSum full(q.site_dims), part(q.site_dims);
    for (std::size_t k = 0; k < q.terms.size(); ++k) {
        full.append(q.terms[k].op);
        if (in.count(static_cast<int>(k))) part.append(q.terms[k].op);
    }

    const HermitianOperator ft_sub = q.subset_sum(subset);
    out.lambda_min = s * min_eigenvalue(ft_sub);
    if (out.lambda_min >= gamma_s - slack) {
        out.verdict = Verdict::Holds;
        out.route = QirrRoute::YesSufficient;
        out.detail = "lambda_min(F_T') >= gamma";
        return out;
    }

    const auto d = static_cast<Eigen::Index>(q.dim());
    const Eigen::Index dc = Eigen::Index{1} << q.chaperone_qubits;
    const Eigen::Index ds = d / (2 * dc);
    // |tag>|source basis k>|chaperone value>
    auto index = [&](int tag, Eigen::Index k, Eigen::Index value) { return (tag * ds + k) * dc + value; };
    auto try_witness = [&](const Vector &psi, QirrRoute route, const std::string &detail) {
        const double wf = s * expectation(full, psi);
        const double wp = s * expectation(part, psi);
        if (wf >= gamma_s - slack && wp <= delta_s + slack) {
            out.verdict = Verdict::Fails;
            out.route = route;
            out.witness_full = wf;
            out.witness_subset = wp;
            out.detail = detail;
            return true;
        }
        return false;
    };

    for (std::size_t k = 0; k < q.terms.size(); ++k) {
        const QirrTerm &t = q.terms[k];
        if (in.count(static_cast<int>(k))) continue;
        if (t.group == QirrGroup::Penalty) {
            Vector psi = Vector::Zero(d);
            psi(index(1, 0, t.i - 1)) = 1.0;
            if (try_witness(psi, QirrRoute::MissingPenalty, "missing " + t.label)) return out;
        }
    }
    for (std::size_t k = 0; k < q.terms.size(); ++k) {
        const QirrTerm &t = q.terms[k];
        if (in.count(static_cast<int>(k))) continue;
        if (t.group == QirrGroup::Tail) {
            Vector psi = Vector::Zero(d);
            psi(index(1, 0, q.r_padded - 1)) = 1.0;
            if (try_witness(psi, QirrRoute::MissingTail, "missing " + t.label)) return out;
            break;
        }
    }

    // Every penalty and tail term present: restrict F_T' to tag 0 and one
    // chaperone value, where it equals G_{S'} + (r' - 1) I.
    bool all_fixed = true;
    for (std::size_t k = 0; k < q.terms.size(); ++k) {
        if (q.terms[k].group != QirrGroup::Choice && !in.count(static_cast<int>(k))) all_fixed = false;
    }
    if (all_fixed) {
        Eigen::Index value = 0;
        if (q.mode == QirrMode::Improved) {
            std::vector<int> hits(static_cast<std::size_t>(dc), 0);
            for (int i : subset) {
                const QirrTerm &t = q.terms[static_cast<std::size_t>(i)];
                if (t.group == QirrGroup::Choice) ++hits[static_cast<std::size_t>(t.j - 1)];
            }
            value = std::min_element(hits.begin(), hits.end()) - hits.begin();
        }
        Matrix block(ds, ds);
        for (Eigen::Index col = 0; col < ds; ++col) {
            Vector e = Vector::Zero(d);
            e(index(0, col, value)) = 1.0;
            const Vector fe = hamred::apply(part, e);
            for (Eigen::Index row = 0; row < ds; ++row) block(row, col) = fe(index(0, row, value));
        }
        const Eigensystem es = eig(HermitianOperator(block));
        Vector psi = Vector::Zero(d);
        for (Eigen::Index k = 0; k < ds; ++k) psi(index(0, k, value)) = es.vectors(k, 0);
        if (try_witness(psi, QirrRoute::ReducedToCover,
                        "ground state of G_S' on chaperone value " + std::to_string(value))) {
            return out;
        }
    }

    // Fallback: eigenvectors of F_T - t F_T' over a fixed grid.
    const HermitianOperator ft_full = q.subset_sum(all);
    for (int step = 0; step < 64; ++step) {
        const double t = 4.0 * step / 63.0;
        const Eigensystem es = eig(HermitianOperator(ft_full.matrix() - t * ft_sub.matrix()));
        // The top of the spectrum maximises <F_T> - t <F_T'>.
        const Eigen::Index cols = es.vectors.cols();
        for (Eigen::Index col = cols; col-- > std::max<Eigen::Index>(0, cols - 8);) {
            const Vector psi = es.vectors.col(col);
            const double wf = s * expectation(ft_full, psi);
            const double wp = s * expectation(ft_sub, psi);
            if (wf >= gamma_s - slack && wp <= delta_s + slack) {
                out.verdict = Verdict::Fails;
                out.route = QirrRoute::NumericSearch;
                out.witness_full = wf;
                out.witness_subset = wp;
                out.detail = "eigenvector of F_T - " + fmt(t) + " F_T'";
                return out;
            }
        }
    }
    out.verdict = Verdict::Undetermined;
    out.route = QirrRoute::None;
    out.detail = "no sufficient condition and no witness found";
    return out;
}

}  // namespace hamred
