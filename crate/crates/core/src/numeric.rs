//! Floating-point projection onto S(f) and tolerance-based classification.
//!
//! The Λ, H_η, θ and H^{(i)} polynomials are still built exactly; only
//! their evaluation at a float point is approximate. The frame rows and
//! pivot columns are chosen at the point itself, so no target change is
//! needed and the frame stays valid away from the origin.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::criteria::{lambdas_for, JetPolicy, Label};
use crate::error::NumericError;
use crate::frame::{AdaptedFrame, PolyVectorField};
use crate::germ::MapGerm;
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub residual_tol: f64,
    pub rank_tol: f64,
    pub zero_tol: f64,
    pub max_newton_iters: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            residual_tol: 1e-10,
            rank_tol: 1e-6,
            zero_tol: 1e-8,
            max_newton_iters: 50,
        }
    }
}

/// Distance of one tested quantity from the threshold it was compared with.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Margin {
    pub quantity: String,
    pub value: f64,
    pub threshold: f64,
}

impl Margin {
    /// Inside the band threshold/10 ≤ |value| ≤ 10·threshold.
    pub fn in_band(&self) -> bool {
        let v = self.value.abs();
        v >= self.threshold / 10.0 && v <= self.threshold * 10.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NumericLabel {
    Decided(Label),
    Inconclusive,
}

impl NumericLabel {
    pub fn decided(&self) -> Option<Label> {
        match self {
            NumericLabel::Decided(l) => Some(*l),
            NumericLabel::Inconclusive => None,
        }
    }
}

impl fmt::Display for NumericLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumericLabel::Decided(l) => write!(f, "{l}"),
            NumericLabel::Inconclusive => f.write_str("Inconclusive"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericVerdict {
    pub point: Vec<f64>,
    pub label: NumericLabel,
    /// Label the thresholds select, before the band check.
    pub tentative: Label,
    pub margins: Vec<Margin>,
}

/// A polynomial in the source variables compiled for f64 evaluation.
#[derive(Clone, Debug)]
struct Compiled {
    terms: Vec<(f64, Vec<(usize, i32)>)>,
}

impl Compiled {
    fn new(p: &Polynomial, pos: &HashMap<usize, usize>) -> Self {
        let terms = p
            .terms()
            .map(|(e, c)| {
                let factors = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| (pos[&i], k as i32))
                    .collect();
                (c.to_f64(), factors)
            })
            .collect();
        Compiled { terms }
    }

    fn eval(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(c, f)| f.iter().fold(*c, |acc, &(i, k)| acc * x[i].powi(k)))
            .sum()
    }
}

/// H^{(i)} chain for one adjugate column.
struct ThetaChain {
    /// H^{(1)}, …, H^{(n−1)}.
    derivs: Vec<Compiled>,
    /// Gradients of H, H′, …, H^{(n−2)}.
    grads: Vec<Vec<Compiled>>,
}

/// Exact pipeline for one choice of frame rows and pivot columns.
struct Pipeline {
    lambdas: Vec<Compiled>,
    d_lambdas: Vec<Vec<Compiled>>,
    h_eta: Vec<Vec<Compiled>>,
    h: Compiled,
    d_h: Vec<Compiled>,
    adj: Vec<Vec<Compiled>>,
    sym_adj: PolyMatrix,
    sym_h: Polynomial,
    sym_eta: Vec<PolyVectorField>,
    chains: Mutex<HashMap<usize, Arc<ThetaChain>>>,
}

type FrameKey = (Vec<usize>, Vec<usize>);

/// Numeric evaluator for one parameter-free germ; pipelines are built on
/// first use and shared between threads.
pub struct NumericGerm {
    germ: MapGerm,
    src: Vec<usize>,
    pos: HashMap<usize, usize>,
    jac: Vec<Vec<Compiled>>,
    comps: Vec<Compiled>,
    pipelines: Mutex<HashMap<FrameKey, Arc<Pipeline>>>,
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

struct RankInfo {
    rank: usize,
    min_accepted: Option<f64>,
    max_rejected: Option<f64>,
}

/// Rank by partial-pivot elimination after scaling by the largest row norm.
fn numeric_rank(rows: &[Vec<f64>], tol: f64) -> RankInfo {
    let scale = rows.iter().map(|r| norm(r)).fold(0.0, f64::max);
    let mut info = RankInfo {
        rank: 0,
        min_accepted: None,
        max_rejected: None,
    };
    if scale == 0.0 || rows.is_empty() {
        return info;
    }
    let mut a: Vec<Vec<f64>> = rows.iter().map(|r| r.iter().map(|x| x / scale).collect()).collect();
    let cols = a[0].len();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        let (p, best) = (r..a.len())
            .map(|i| (i, a[i][c].abs()))
            .fold((r, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best <= tol {
            info.max_rejected = Some(info.max_rejected.map_or(best, |m: f64| m.max(best)));
            continue;
        }
        info.min_accepted = Some(info.min_accepted.map_or(best, |m: f64| m.min(best)));
        a.swap(p, r);
        for i in r + 1..a.len() {
            let f = a[i][c] / a[r][c];
            for j in c..cols {
                a[i][j] -= f * a[r][j];
            }
        }
        r += 1;
    }
    // Residual rows below the rank are what the rejected pivots measure.
    for row in a.iter().skip(r) {
        let m = row.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
        info.max_rejected = Some(info.max_rejected.map_or(m, |x: f64| x.max(m)));
    }
    info.rank = r;
    info
}

/// Coefficients cᵣ with λ = Σᵣ cᵣ·ηf_r: signed minors of df on the pivot
/// columns with row r removed.
fn cofactor_covector(j: &[Vec<f64>], pivots: &[usize]) -> Vec<f64> {
    let n = j.len();
    (0..n)
        .map(|r| {
            let rows: Vec<usize> = (0..n).filter(|&i| i != r).collect();
            let minor = DMatrix::from_fn(n - 1, n - 1, |a, b| j[rows[a]][pivots[b]]).determinant();
            if (r + n - 1).is_multiple_of(2) {
                minor
            } else {
                -minor
            }
        })
        .collect()
}

/// Last row of the target change that `normalize` builds: elimination in
/// source order with the first row above tolerance as pivot.
fn elimination_covector(j: &[Vec<f64>], rel_tol: f64) -> Vec<f64> {
    let n = j.len();
    let eps = rel_tol * j.iter().map(|r| norm(r)).fold(0.0, f64::max);
    let mut a = j.to_vec();
    let mut t: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|k| if i == k { 1.0 } else { 0.0 }).collect()).collect();
    let mut r = 0;
    for c in 0..a[0].len() {
        if r + 1 == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| a[i][c].abs() > eps) else {
            continue;
        };
        a.swap(p, r);
        t.swap(p, r);
        for i in r + 1..n {
            let f = a[i][c] / a[r][c];
            if f == 0.0 {
                continue;
            }
            for k in 0..a[i].len() {
                a[i][k] -= f * a[r][k];
            }
            for k in 0..n {
                t[i][k] -= f * t[r][k];
            }
        }
        r += 1;
    }
    t.pop().expect("n ≥ 1")
}

impl NumericGerm {
    pub fn new(germ: &MapGerm) -> Result<Self, NumericError> {
        germ.require_parameter_free()?;
        let src = germ.source_vars();
        let pos: HashMap<usize, usize> = src.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let jac = germ
            .components()
            .iter()
            .map(|f| src.iter().map(|&v| Compiled::new(&f.partial(v), &pos)).collect())
            .collect();
        let comps = germ.components().iter().map(|f| Compiled::new(f, &pos)).collect();
        Ok(NumericGerm {
            germ: germ.clone(),
            src,
            pos,
            jac,
            comps,
            pipelines: Mutex::new(HashMap::new()),
        })
    }

    pub fn germ(&self) -> &MapGerm {
        &self.germ
    }

    fn check_dim(&self, x: &[f64]) -> Result<(), NumericError> {
        if x.len() != self.src.len() {
            return Err(NumericError::PointDimension {
                expected: self.src.len(),
                got: x.len(),
            });
        }
        Ok(())
    }

    pub fn eval_map(&self, x: &[f64]) -> Vec<f64> {
        self.comps.iter().map(|c| c.eval(x)).collect()
    }

    fn jacobian_at(&self, x: &[f64]) -> Vec<Vec<f64>> {
        self.jac.iter().map(|row| row.iter().map(|c| c.eval(x)).collect()).collect()
    }

    /// Rows and pivot columns for the frame at `x`: n−1 steps of complete
    /// pivoting on df(x).
    fn choose_frame(&self, x: &[f64]) -> FrameKey {
        let mut a = self.jacobian_at(x);
        let n = a.len();
        let m = self.src.len();
        let mut rows_left: Vec<usize> = (0..n).collect();
        let mut cols_left: Vec<usize> = (0..m).collect();
        let mut rows = Vec::new();
        let mut cols = Vec::new();
        for _ in 0..n - 1 {
            let mut best = (rows_left[0], cols_left[0], -1.0);
            for &i in &rows_left {
                for &j in &cols_left {
                    if a[i][j].abs() > best.2 {
                        best = (i, j, a[i][j].abs());
                    }
                }
            }
            let (pi, pj, _) = best;
            rows.push(pi);
            cols.push(pj);
            rows_left.retain(|&i| i != pi);
            cols_left.retain(|&j| j != pj);
            if a[pi][pj] != 0.0 {
                for &i in &rows_left {
                    let f = a[i][pj] / a[pi][pj];
                    for j in 0..m {
                        a[i][j] -= f * a[pi][j];
                    }
                }
            }
        }
        // Canonical order so identical choices share a pipeline.
        let mut pairs: Vec<(usize, usize)> = rows.into_iter().zip(cols).collect();
        pairs.sort();
        let rows = pairs.iter().map(|p| p.0).collect();
        let cols = pairs.iter().map(|p| self.src[p.1]).collect();
        (rows, cols)
    }

    fn pipeline(&self, key: &FrameKey) -> Result<Arc<Pipeline>, NumericError> {
        if let Some(p) = self.pipelines.lock().unwrap().get(key) {
            return Ok(p.clone());
        }
        let built = Arc::new(self.build_pipeline(key)?);
        Ok(self
            .pipelines
            .lock()
            .unwrap()
            .entry(key.clone())
            .or_insert(built)
            .clone())
    }

    fn build_pipeline(&self, key: &FrameKey) -> Result<Pipeline, NumericError> {
        let (rows, pivots) = key;
        let ctx = self.germ.context();
        let comps = self.germ.components();
        let leading: Vec<Polynomial> = rows.iter().map(|&r| comps[r].clone()).collect();
        let kernel: Vec<usize> = self.src.iter().copied().filter(|v| !pivots.contains(v)).collect();
        let frame = AdaptedFrame::cramer(ctx, &leading, pivots, &kernel, None).map_err(crate::error::GermError::from)?;
        // λ from the rows in their original order: leading rows first keeps
        // the cofactor sign bookkeeping in `fold_sign`.
        let lambdas = lambdas_for(comps, &frame, JetPolicy::Full);
        let l = lambdas.len();
        let mut h_entries = Vec::with_capacity(l * l);
        for lam in &lambdas {
            for eta in &frame.eta {
                h_entries.push(eta.apply(lam).expect("context"));
            }
        }
        let h_eta = PolyMatrix::new(ctx, l, l, h_entries).map_err(crate::error::GermError::from)?;
        let h = h_eta.determinant().map_err(crate::error::GermError::from)?;
        let adj = h_eta.adjugate().map_err(crate::error::GermError::from)?;
        let c = |p: &Polynomial| Compiled::new(p, &self.pos);
        Ok(Pipeline {
            d_lambdas: lambdas
                .iter()
                .map(|lam| self.src.iter().map(|&v| c(&lam.partial(v))).collect())
                .collect(),
            lambdas: lambdas.iter().map(c).collect(),
            h_eta: (0..l).map(|i| h_eta.row(i).iter().map(c).collect()).collect(),
            h: c(&h),
            d_h: self.src.iter().map(|&v| c(&h.partial(v))).collect(),
            adj: (0..l).map(|i| adj.row(i).iter().map(c).collect()).collect(),
            sym_adj: adj,
            sym_h: h,
            sym_eta: frame.eta,
            chains: Mutex::new(HashMap::new()),
        })
    }

    fn chain(&self, pl: &Pipeline, col: usize) -> Arc<ThetaChain> {
        if let Some(ch) = pl.chains.lock().unwrap().get(&col) {
            return ch.clone();
        }
        let ctx = self.germ.context();
        let mut theta = PolyVectorField::zero(ctx);
        for (i, eta) in pl.sym_eta.iter().enumerate() {
            let a = pl.sym_adj.get(i, col);
            if !a.is_zero() {
                theta = theta.add(&eta.scale(a, None));
            }
        }
        let n = self.germ.n();
        let mut hs = vec![pl.sym_h.clone()];
        for i in 1..n {
            let next = theta.apply(&hs[i - 1]).expect("context");
            hs.push(next);
        }
        let c = |p: &Polynomial| Compiled::new(p, &self.pos);
        let chain = Arc::new(ThetaChain {
            derivs: hs[1..].iter().map(c).collect(),
            grads: hs[..n - 1]
                .iter()
                .map(|h| self.src.iter().map(|&v| c(&h.partial(v))).collect())
                .collect(),
        });
        pl.chains.lock().unwrap().entry(col).or_insert(chain).clone()
    }

    fn lambda_residual(&self, pl: &Pipeline, x: &[f64]) -> Vec<f64> {
        pl.lambdas.iter().map(|l| l.eval(x)).collect()
    }

    fn residual(&self, pl: &Pipeline, x: &[f64], with_h: bool) -> Vec<f64> {
        let mut r = self.lambda_residual(pl, x);
        if with_h {
            r.push(pl.h.eval(x));
        }
        r
    }

    /// Minimum-norm damped Gauss–Newton on Λ = 0.
    pub fn project(&self, seed: &[f64], tol: &Tolerances) -> Result<Vec<f64>, NumericError> {
        self.solve(seed, tol, false)
    }

    /// As [`NumericGerm::project`] on Λ = 0, H = 0: the points of S(f)
    /// that are not folds.
    pub fn project_to_h_zero(&self, seed: &[f64], tol: &Tolerances) -> Result<Vec<f64>, NumericError> {
        self.solve(seed, tol, true)
    }

    fn solve(&self, seed: &[f64], tol: &Tolerances, with_h: bool) -> Result<Vec<f64>, NumericError> {
        self.check_dim(seed)?;
        let mut x = seed.to_vec();
        let mut iterations = 0;
        let mut residual = f64::INFINITY;
        let mut key = self.choose_frame(&x);
        for _restart in 0..4 {
            let pl = self.pipeline(&key)?;
            while iterations <= tol.max_newton_iters {
                let r = self.residual(&pl, &x, with_h);
                residual = norm(&r);
                if !residual.is_finite() {
                    return Err(NumericError::NonConvergence { iterations, residual });
                }
                if residual <= tol.residual_tol {
                    break;
                }
                iterations += 1;
                let j = DMatrix::from_fn(r.len(), x.len(), |i, k| match pl.d_lambdas.get(i) {
                    Some(row) => row[k].eval(&x),
                    None => pl.d_h[k].eval(&x),
                });
                let pinv = j.svd(true, true).pseudo_inverse(1e-14).map_err(|_| NumericError::NonConvergence {
                    iterations,
                    residual,
                })?;
                let step = -(pinv * DVector::from_vec(r));
                let mut alpha = 1.0;
                let mut accepted = false;
                while alpha > 1e-12 {
                    let cand: Vec<f64> = x.iter().zip(step.iter()).map(|(a, s)| a + alpha * s).collect();
                    if norm(&self.residual(&pl, &cand, with_h)) < residual {
                        x = cand;
                        accepted = true;
                        break;
                    }
                    alpha /= 2.0;
                }
                if !accepted {
                    return Err(NumericError::NonConvergence { iterations, residual });
                }
            }
            if residual > tol.residual_tol {
                break;
            }
            // Λ carries the pivot minor as a factor, so a root where it
            // vanishes is spurious; accept only if the frame chosen at the
            // root is the one that converged.
            let again = self.choose_frame(&x);
            if again == key {
                return Ok(x);
            }
            key = again;
        }
        Err(NumericError::NonConvergence { iterations, residual })
    }

    pub fn classify(&self, x: &[f64], tol: &Tolerances) -> Result<NumericVerdict, NumericError> {
        self.check_dim(x)?;
        let n = self.germ.n();
        let m = self.src.len();
        let mut margins = Vec::new();
        let rank_margins = |name: &str, info: &RankInfo, margins: &mut Vec<Margin>| {
            if let Some(v) = info.min_accepted {
                margins.push(Margin {
                    quantity: format!("{name} smallest pivot"),
                    value: v,
                    threshold: tol.rank_tol,
                });
            }
            if let Some(v) = info.max_rejected {
                margins.push(Margin {
                    quantity: format!("{name} largest rejected pivot"),
                    value: v,
                    threshold: tol.rank_tol,
                });
            }
        };
        let finish = |label: Label, margins: Vec<Margin>| {
            let inconclusive = margins.iter().any(Margin::in_band);
            Ok(NumericVerdict {
                point: x.to_vec(),
                label: if inconclusive {
                    NumericLabel::Inconclusive
                } else {
                    NumericLabel::Decided(label)
                },
                tentative: label,
                margins,
            })
        };
        let df = numeric_rank(&self.jacobian_at(x), tol.rank_tol);
        rank_margins("df", &df, &mut margins);
        if df.rank == n {
            return finish(Label::Regular, margins);
        }
        if df.rank + 1 < n {
            return finish(Label::CorankHigh, margins);
        }
        let key = self.choose_frame(x);
        let pl = self.pipeline(&key)?;
        let l = m - n + 1;
        margins.push(Margin {
            quantity: "lambda residual".into(),
            value: norm(&self.lambda_residual(&pl, x)),
            threshold: tol.residual_tol,
        });
        // Membership in S(f) is a precondition, not a decision.
        margins.pop();
        let dl: Vec<Vec<f64>> = pl.d_lambdas.iter().map(|r| r.iter().map(|c| c.eval(x)).collect()).collect();
        let nd = numeric_rank(&dl, tol.rank_tol);
        rank_margins("dLambda", &nd, &mut margins);
        if nd.rank < l {
            return finish(
                Label::Degenerate {
                    reason: crate::criteria::DegenerateReason::NotNondegenerate,
                },
                margins,
            );
        }
        let h = pl.h.eval(x);
        margins.push(Margin {
            quantity: "H".into(),
            value: h,
            threshold: tol.zero_tol,
        });
        if h.abs() > tol.zero_tol {
            let he = DMatrix::from_fn(l, l, |i, j| pl.h_eta[i][j].eval(x));
            let sym = (&he + he.transpose()) * 0.5;
            let eig = sym.symmetric_eigenvalues();
            let pos = eig.iter().filter(|v| **v > 0.0).count();
            let neg = eig.iter().filter(|v| **v < 0.0).count();
            // On S(f), H_η is the kernel Hessian of c·f for the cofactor
            // covector c; orient it like the exact normalization does.
            let j = self.jacobian_at(x);
            let pivots: Vec<usize> = key.1.iter().map(|v| self.pos[v]).collect();
            let c = cofactor_covector(&j, &pivots);
            let w = elimination_covector(&j, tol.rank_tol);
            let flip = c.iter().zip(&w).map(|(a, b)| a * b).sum::<f64>() < 0.0;
            let (positives, negatives) = if flip { (neg, pos) } else { (pos, neg) };
            return finish(Label::Fold { positives, negatives }, margins);
        }
        let adj0: Vec<Vec<f64>> = pl.adj.iter().map(|r| r.iter().map(|c| c.eval(x)).collect()).collect();
        let (col, col_norm) = (0..l)
            .map(|c| (c, norm(&(0..l).map(|i| adj0[i][c]).collect::<Vec<_>>())))
            .fold((0, -1.0), |acc, v| if v.1 > acc.1 { v } else { acc });
        margins.push(Margin {
            quantity: "adjugate column norm".into(),
            value: col_norm,
            threshold: tol.zero_tol,
        });
        if col_norm <= tol.zero_tol {
            return finish(
                Label::Degenerate {
                    reason: crate::criteria::DegenerateReason::Not2Nondegenerate,
                },
                margins,
            );
        }
        let chain = self.chain(&pl, col);
        let mut k = None;
        for i in 1..n {
            let v = chain.derivs[i - 1].eval(x);
            margins.push(Margin {
                quantity: format!("H^({i})"),
                value: v,
                threshold: tol.zero_tol,
            });
            if v.abs() > tol.zero_tol {
                k = Some(i + 1);
                break;
            }
        }
        let Some(k) = k else {
            return finish(
                Label::Degenerate {
                    reason: crate::criteria::DegenerateReason::AllDerivativesVanish,
                },
                margins,
            );
        };
        let mut stack = dl;
        for g in &chain.grads[..=k - 2] {
            stack.push(g.iter().map(|c| c.eval(x)).collect());
        }
        let b = numeric_rank(&stack, tol.rank_tol);
        rank_margins("condition b", &b, &mut margins);
        if b.rank < l + k - 1 {
            return finish(
                Label::Degenerate {
                    reason: crate::criteria::DegenerateReason::RankConditionFailed,
                },
                margins,
            );
        }
        finish(Label::Morin { k }, margins)
    }

    /// Seeds a grid over `bounds`, projects each seed onto S(f), merges
    /// points closer than 10·residual_tol and classifies the survivors.
    pub fn scan(&self, bounds: &[(f64, f64)], grid: usize, tol: &Tolerances) -> Result<Vec<NumericVerdict>, NumericError> {
        self.scan_with(bounds, grid, tol, false)
    }

    /// Grid-seeded search for the points of S(f) where H = 0.
    pub fn scan_h_zero(&self, bounds: &[(f64, f64)], grid: usize, tol: &Tolerances) -> Result<Vec<NumericVerdict>, NumericError> {
        self.scan_with(bounds, grid, tol, true)
    }

    fn scan_with(
        &self,
        bounds: &[(f64, f64)],
        grid: usize,
        tol: &Tolerances,
        with_h: bool,
    ) -> Result<Vec<NumericVerdict>, NumericError> {
        if bounds.len() != self.src.len() {
            return Err(NumericError::PointDimension {
                expected: self.src.len(),
                got: bounds.len(),
            });
        }
        if grid == 0 {
            return Ok(Vec::new());
        }
        let seeds = grid_points(bounds, grid);
        let projected: Vec<Vec<f64>> = seeds
            .par_iter()
            .map(|s| self.solve(s, tol, with_h).ok())
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect();
        let radius = 10.0 * tol.residual_tol;
        let mut reps: Vec<Vec<f64>> = Vec::new();
        for p in projected {
            if !reps.iter().any(|q| norm(&p.iter().zip(q).map(|(a, b)| a - b).collect::<Vec<_>>()) <= radius) {
                reps.push(p);
            }
        }
        reps.par_iter().map(|p| self.classify(p, tol)).collect()
    }
}

/// Grid points in lexicographic order (last axis fastest).
pub fn grid_points(bounds: &[(f64, f64)], grid: usize) -> Vec<Vec<f64>> {
    let axis = |&(lo, hi): &(f64, f64)| -> Vec<f64> {
        if grid == 1 {
            vec![(lo + hi) / 2.0]
        } else {
            (0..grid).map(|i| lo + (hi - lo) * i as f64 / (grid - 1) as f64).collect()
        }
    };
    let axes: Vec<Vec<f64>> = bounds.iter().map(axis).collect();
    let mut out = vec![Vec::new()];
    for ax in &axes {
        out = out
            .into_iter()
            .flat_map(|p| {
                ax.iter().map(move |&v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    if bounds.is_empty() {
        return Vec::new();
    }
    out
}

pub fn project_to_singular_locus(g: &MapGerm, seed: &[f64], tol: &Tolerances) -> Result<Vec<f64>, NumericError> {
    NumericGerm::new(g)?.project(seed, tol)
}

pub fn numeric_classify(g: &MapGerm, p: &[f64], tol: &Tolerances) -> Result<NumericVerdict, NumericError> {
    NumericGerm::new(g)?.classify(p, tol)
}

pub fn scan_region(g: &MapGerm, bounds: &[(f64, f64)], grid: usize, tol: &Tolerances) -> Result<Vec<NumericVerdict>, NumericError> {
    NumericGerm::new(g)?.scan(bounds, grid, tol)
}

/// Exact rational point to floats (source coordinates only).
pub fn to_float_point(p: &[Rational]) -> Vec<f64> {
    p.iter().map(Rational::to_f64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::VariableContext;
    use crate::parse::parse_polynomial;

    fn germ(vars: &[&str], comps: &[&str]) -> MapGerm {
        let c = VariableContext::sources(vars).unwrap();
        let comps = comps.iter().map(|s| parse_polynomial(s, &c).unwrap()).collect();
        MapGerm::new(&c, comps).unwrap()
    }

    #[test]
    fn projects_fold_seed_to_axis() {
        let g = germ(&["x", "y", "z"], &["x", "y^2 + z^2"]);
        let p = project_to_singular_locus(&g, &[0.3, 0.1, 0.2], &Tolerances::default()).unwrap();
        assert!(p[1].abs() <= 1e-10 && p[2].abs() <= 1e-10, "{p:?}");
    }

    #[test]
    fn projects_cusp_seed() {
        let g = germ(&["x", "y", "z"], &["x", "y^2 + z^3 + x*z"]);
        let p = project_to_singular_locus(&g, &[0.01, -0.02, 0.015], &Tolerances::default()).unwrap();
        assert!((2.0 * p[1]).abs() <= 1e-10);
        assert!((3.0 * p[2] * p[2] + p[0]).abs() <= 1e-10);
    }

    #[test]
    fn fold_margin_at_origin() {
        let g = germ(&["x", "y", "z"], &["x", "y^2 + z^2"]);
        let v = numeric_classify(&g, &[0.0, 0.0, 0.0], &Tolerances::default()).unwrap();
        assert_eq!(v.label, NumericLabel::Decided(Label::Fold { positives: 2, negatives: 0 }));
        let h = v.margins.iter().find(|m| m.quantity == "H").unwrap();
        assert_eq!(h.value, 4.0);
    }

    #[test]
    fn near_boundary_is_inconclusive() {
        // H = 12z on the cusp form; z = 1e-10 gives |H| = 1.2e-9.
        let g = germ(&["x", "y", "z"], &["x", "y^2 + z^3 + x*z"]);
        let z = 1e-10;
        let v = numeric_classify(&g, &[-3.0 * z * z, 0.0, z], &Tolerances::default()).unwrap();
        assert_eq!(v.label, NumericLabel::Inconclusive);
    }

    #[test]
    fn cusp_and_morin3_at_origin() {
        let g = germ(&["x", "y", "z"], &["x", "y^2 + z^3 + x*z"]);
        let v = numeric_classify(&g, &[0.0; 3], &Tolerances::default()).unwrap();
        assert_eq!(v.label, NumericLabel::Decided(Label::Morin { k: 2 }));
        let g = germ(&["x1", "x2", "y", "z"], &["x1", "x2", "y^2 + z^4 + x1*z + x2*z^2"]);
        let v = numeric_classify(&g, &[0.0; 4], &Tolerances::default()).unwrap();
        assert_eq!(v.label, NumericLabel::Decided(Label::Morin { k: 3 }));
    }

    #[test]
    fn fold_scan_is_all_fold() {
        let g = germ(&["x", "y", "z"], &["x", "y^2 + z^2"]);
        let vs = scan_region(&g, &[(-1.0, 1.0); 3], 5, &Tolerances::default()).unwrap();
        assert!(!vs.is_empty());
        for v in &vs {
            assert!(matches!(v.label, NumericLabel::Decided(Label::Fold { .. })), "{v:?}");
        }
        assert!(scan_region(&g, &[(-1.0, 1.0); 3], 0, &Tolerances::default()).unwrap().is_empty());
    }

    #[test]
    fn grid_order_is_lexicographic() {
        let g = grid_points(&[(0.0, 1.0), (0.0, 1.0)], 2);
        assert_eq!(g, vec![vec![0.0, 0.0], vec![0.0, 1.0], vec![1.0, 0.0], vec![1.0, 1.0]]);
    }
}
