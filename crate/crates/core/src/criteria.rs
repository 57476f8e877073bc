//! Λ, H_η, θ and the Morin classification with its evidence trace.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GermError;
use crate::frame::{build_frame_truncated, AdaptedFrame, PolyVectorField};
use crate::germ::{normalize_with_order, validate, GermRank, MapGerm, NormalizedGerm};
use crate::matrix::{Inertia, PolyMatrix, RationalMatrix};
use crate::poly::Polynomial;
use crate::rational::Rational;

/// How far intermediate polynomials are expanded.
///
/// `Truncated { theta_order: t }` keeps exactly the jets needed to know θ
/// to order t at the origin (f to t+3, η and λ to t+2, H_η and H to t+1,
/// H^{(i)} to t+1−i). Every value the classifier reads at 0 is exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JetPolicy {
    Full,
    Truncated { theta_order: u32 },
}

impl JetPolicy {
    /// Smallest policy that decides Morin{k} for all k ≤ n.
    pub fn for_target_dim(n: usize) -> Self {
        JetPolicy::Truncated {
            theta_order: n.saturating_sub(2) as u32,
        }
    }

    fn level(&self, offset: u32) -> Option<u32> {
        match self {
            JetPolicy::Full => None,
            JetPolicy::Truncated { theta_order } => Some(theta_order + offset),
        }
    }

    pub fn f(&self) -> Option<u32> {
        self.level(3)
    }
    pub fn eta(&self) -> Option<u32> {
        self.level(2)
    }
    pub fn lambda(&self) -> Option<u32> {
        self.level(2)
    }
    pub fn h_eta(&self) -> Option<u32> {
        self.level(1)
    }
    pub fn theta(&self) -> Option<u32> {
        self.level(0)
    }
    /// Jet kept for H^{(i)}.
    pub fn deriv(&self, i: usize) -> Option<u32> {
        match self {
            JetPolicy::Full => None,
            JetPolicy::Truncated { theta_order } => Some((theta_order + 1).saturating_sub(i as u32)),
        }
    }
}

fn trunc(p: Polynomial, max: Option<u32>) -> Polynomial {
    match max {
        Some(m) => p.truncate(m),
        None => p,
    }
}

fn det(m: &PolyMatrix, max: Option<u32>) -> Polynomial {
    match max {
        Some(t) => m.determinant_truncated(t),
        None => m.determinant(),
    }
    .expect("square by construction")
}

fn apply(vf: &PolyVectorField, p: &Polynomial, max: Option<u32>) -> Polynomial {
    match max {
        Some(m) => vf.apply_truncated(p, m),
        None => vf.apply(p).expect("shared context"),
    }
}

#[derive(Clone, Debug)]
pub struct LambdaSystem {
    pub lambdas: Vec<Polynomial>,
    pub frame: AdaptedFrame,
    pub policy: JetPolicy,
}

/// λᵢ = det(ξ₁f, …, ξₙ₋₁f, ηᵢf) for the components `f`.
pub fn lambdas_for(components: &[Polynomial], frame: &AdaptedFrame, policy: JetPolicy) -> Vec<Polynomial> {
    let ctx = components[0].context();
    let max = policy.lambda();
    let xi_cols: Vec<Vec<Polynomial>> = frame
        .xi
        .iter()
        .map(|xi| components.iter().map(|f| apply(xi, f, max)).collect())
        .collect();
    frame
        .eta
        .iter()
        .map(|eta| {
            let mut cols = xi_cols.clone();
            cols.push(components.iter().map(|f| apply(eta, f, max)).collect());
            det(&PolyMatrix::from_columns(ctx, &cols).expect("square"), max)
        })
        .collect()
}

pub fn compute_lambdas(ng: &NormalizedGerm, frame: &AdaptedFrame, policy: JetPolicy) -> LambdaSystem {
    let comps: Vec<Polynomial> = ng
        .germ
        .components()
        .iter()
        .map(|c| trunc(c.clone(), policy.f()))
        .collect();
    LambdaSystem {
        lambdas: lambdas_for(&comps, frame, policy),
        frame: frame.clone(),
        policy,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCheck {
    pub matrix: RationalMatrix,
    pub rank: usize,
    pub required: usize,
}

impl RankCheck {
    pub fn pass(&self) -> bool {
        self.rank == self.required
    }
}

fn rank_at_origin(polys: &[Polynomial], required: usize) -> RankCheck {
    let ctx = polys[0].context();
    let origin = vec![Rational::zero(); ctx.len()];
    let matrix = PolyMatrix::jacobian(ctx, polys, &ctx.source_indices())
        .evaluate(&origin)
        .expect("parameter-free germ");
    let rank = matrix.rank();
    RankCheck { matrix, rank, required }
}

/// rank dΛ₀ against m−n+1.
pub fn nondegeneracy(ls: &LambdaSystem) -> RankCheck {
    rank_at_origin(&ls.lambdas, ls.lambdas.len())
}

#[derive(Clone, Debug)]
pub struct HessData {
    pub h_eta: PolyMatrix,
    pub h: Polynomial,
    pub theta: Option<PolyVectorField>,
    pub theta_column: Option<usize>,
    pub h_derivs: Vec<Polynomial>,
    pub policy: JetPolicy,
}

/// H_η[i][j] = ηⱼλᵢ and H = det H_η.
pub fn hessian(ls: &LambdaSystem) -> HessData {
    let l = ls.lambdas.len();
    let ctx = ls.lambdas[0].context();
    let max = ls.policy.h_eta();
    let mut entries = Vec::with_capacity(l * l);
    for lam in &ls.lambdas {
        for eta in &ls.frame.eta {
            entries.push(apply(eta, lam, max));
        }
    }
    let h_eta = PolyMatrix::new(ctx, l, l, entries).expect("square");
    let h = det(&h_eta, max);
    HessData {
        h_eta,
        h: h.clone(),
        theta: None,
        theta_column: None,
        h_derivs: vec![h],
        policy: ls.policy,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ThetaColumn {
    #[default]
    First,
    Last,
}

/// θ = Σᵢ adj(H_η)[i][c]·ηᵢ for the first (or last) adjugate column not
/// vanishing at 0. Returns false when adj(H_η)(0) = 0.
pub fn build_theta(hd: &mut HessData, ls: &LambdaSystem, choice: ThetaColumn) -> bool {
    let max = hd.policy.theta();
    let adj = match max {
        Some(t) => hd.h_eta.adjugate_truncated(t),
        None => hd.h_eta.adjugate(),
    }
    .expect("square");
    let ctx = hd.h.context().clone();
    let origin = vec![Rational::zero(); ctx.len()];
    let adj0 = adj.evaluate(&origin).expect("parameter-free germ");
    let l = adj.rows();
    let nonzero = |c: usize| (0..l).any(|i| !adj0.get(i, c).is_zero());
    let col = match choice {
        ThetaColumn::First => (0..l).find(|&c| nonzero(c)),
        ThetaColumn::Last => (0..l).rev().find(|&c| nonzero(c)),
    };
    let Some(c) = col else {
        return false;
    };
    let mut theta = PolyVectorField::zero(&ctx);
    for (i, eta) in ls.frame.eta.iter().enumerate() {
        let a = adj.get(i, c);
        if !a.is_zero() {
            theta = theta.add(&eta.truncate(max).scale(a, max));
        }
    }
    hd.theta = Some(theta);
    hd.theta_column = Some(c);
    true
}

/// Extends `hd.h_derivs` to H⁽⁰⁾ … H^{(up_to)}.
pub fn iterate_h(hd: &mut HessData, up_to: usize) -> &[Polynomial] {
    let theta = hd.theta.clone().expect("θ built before iterating");
    while hd.h_derivs.len() <= up_to {
        let i = hd.h_derivs.len();
        let next = apply(&theta, &hd.h_derivs[i - 1], hd.policy.deriv(i));
        hd.h_derivs.push(next);
    }
    &hd.h_derivs[..=up_to]
}

/// rank d(λ…, H, …, H^{(k−2)})₀ against m−n+k.
pub fn rank_condition_b(ls: &LambdaSystem, hd: &HessData, k: usize) -> RankCheck {
    let mut stack = ls.lambdas.clone();
    if k >= 2 {
        stack.extend(hd.h_derivs[..=k - 2].iter().cloned());
    }
    let required = ls.lambdas.len() + k.saturating_sub(1);
    rank_at_origin(&stack, required)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DegenerateReason {
    NotNondegenerate,
    Not2Nondegenerate,
    RankConditionFailed,
    AllDerivativesVanish,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Label {
    Regular,
    Fold { positives: usize, negatives: usize },
    Morin { k: usize },
    Degenerate { reason: DegenerateReason },
    CorankHigh,
}

impl Label {
    /// Morin index: 1 for a fold, k for Morin{k}.
    pub fn morin_index(&self) -> Option<usize> {
        match self {
            Label::Fold { .. } => Some(1),
            Label::Morin { k } => Some(*k),
            _ => None,
        }
    }

    pub fn is_fold_or_cusp(&self) -> bool {
        matches!(self.morin_index(), Some(1 | 2))
    }

    /// Equality up to A-equivalence: a target change fₙ ↦ −fₙ swaps the
    /// fold signature, so (p, q) and (q, p) are identified.
    pub fn a_equivalent(&self, other: &Label) -> bool {
        match (self, other) {
            (
                Label::Fold {
                    positives: p1,
                    negatives: n1,
                },
                Label::Fold {
                    positives: p2,
                    negatives: n2,
                },
            ) => (p1, n1) == (p2, n2) || (p1, n1) == (n2, p2),
            _ => self == other,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Regular => f.write_str("Regular"),
            Label::Fold { positives, negatives } => write!(f, "Fold({positives},{negatives})"),
            Label::Morin { k } => write!(f, "Morin{{{k}}}"),
            Label::Degenerate { reason } => write!(f, "Degenerate({reason:?})"),
            Label::CorankHigh => f.write_str("CorankHigh"),
        }
    }
}

/// Where the frame came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameProvenance {
    pub target_change: Vec<Vec<Rational>>,
    pub pivots: Vec<String>,
    pub kernel_vars: Vec<String>,
    pub pivot_minor_at_0: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankRecord {
    pub matrix: Vec<Vec<Rational>>,
    pub rank: usize,
    pub required: usize,
}

impl From<&RankCheck> for RankRecord {
    fn from(r: &RankCheck) -> Self {
        RankRecord {
            matrix: r.matrix.to_rows(),
            rank: r.rank,
            required: r.required,
        }
    }
}

/// Text of the polynomials behind the decision (jets when truncated).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialTrace {
    pub lambdas: Vec<String>,
    pub h_eta: Vec<Vec<String>>,
    pub h_derivs: Vec<String>,
    pub theta: Option<String>,
    pub jet_order: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    pub m: usize,
    pub n: usize,
    pub germ_rank: GermRank,
    pub frame: Option<FrameProvenance>,
    pub lambda_rank: Option<RankRecord>,
    pub h_eta_at_0: Option<Vec<Vec<Rational>>>,
    /// H(0), H′(0), … as far as computed.
    pub h_derivs_at_0: Vec<Rational>,
    pub theta_column: Option<usize>,
    pub theta_at_0: Option<Vec<Rational>>,
    pub condition_b: Option<RankRecord>,
    /// Inertia of the Hessian of fₙ on ker df₀ (fold case).
    pub signature: Option<Inertia>,
    pub polynomials: Option<PolynomialTrace>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriteriaReport {
    pub label: Label,
    pub trace: Trace,
}

/// The label determined by a trace; `classify` uses exactly this rule.
pub fn label_from_trace(t: &Trace) -> Label {
    match t.germ_rank {
        GermRank::Regular => return Label::Regular,
        GermRank::CorankHigh => return Label::CorankHigh,
        GermRank::Corank1 => {}
    }
    let degenerate = |reason| Label::Degenerate { reason };
    match &t.lambda_rank {
        Some(r) if r.rank == r.required => {}
        _ => return degenerate(DegenerateReason::NotNondegenerate),
    }
    match t.h_derivs_at_0.first() {
        Some(h0) if !h0.is_zero() => {
            let s = t.signature.expect("fold signature recorded");
            return Label::Fold {
                positives: s.positives,
                negatives: s.negatives,
            };
        }
        Some(_) => {}
        None => return degenerate(DegenerateReason::NotNondegenerate),
    }
    if t.theta_column.is_none() {
        return degenerate(DegenerateReason::Not2Nondegenerate);
    }
    let k = (1..t.n.min(t.h_derivs_at_0.len()))
        .find(|&i| !t.h_derivs_at_0[i].is_zero())
        .map(|i| i + 1);
    let Some(k) = k else {
        return degenerate(DegenerateReason::AllDerivativesVanish);
    };
    match &t.condition_b {
        Some(r) if r.rank == r.required => Label::Morin { k },
        _ => degenerate(DegenerateReason::RankConditionFailed),
    }
}

#[derive(Clone, Debug, Default)]
pub struct ClassifyOptions {
    /// None selects the minimal truncation for the germ's target dimension.
    pub jet: Option<JetPolicy>,
    pub theta_column: ThetaColumn,
    /// Pivot search order over source variables (context indices).
    pub column_order: Option<Vec<usize>>,
    pub keep_polynomials: bool,
}

pub fn classify(g: &MapGerm) -> Result<CriteriaReport, GermError> {
    classify_with(g, &ClassifyOptions::default())
}

fn var_names(g: &MapGerm, vars: &[usize]) -> Vec<String> {
    vars.iter().map(|&v| g.context().name(v).to_string()).collect()
}

pub fn classify_with(g: &MapGerm, opts: &ClassifyOptions) -> Result<CriteriaReport, GermError> {
    g.require_parameter_free()?;
    let (m, n) = (g.m(), g.n());
    let mut trace = Trace {
        m,
        n,
        germ_rank: validate(g)?,
        frame: None,
        lambda_rank: None,
        h_eta_at_0: None,
        h_derivs_at_0: Vec::new(),
        theta_column: None,
        theta_at_0: None,
        condition_b: None,
        signature: None,
        polynomials: None,
    };
    let finish = |trace: Trace| {
        let label = label_from_trace(&trace);
        Ok(CriteriaReport { label, trace })
    };
    if trace.germ_rank != GermRank::Corank1 {
        return finish(trace);
    }
    let policy = opts.jet.unwrap_or_else(|| JetPolicy::for_target_dim(n));
    let order = opts.column_order.clone().unwrap_or_else(|| g.source_vars());
    let ng = normalize_with_order(g, &order)?;
    let ng = NormalizedGerm {
        germ: match policy.f() {
            Some(t) => ng.germ.truncate(t),
            None => ng.germ.clone(),
        },
        ..ng
    };
    let origin = g.origin();
    let frame = build_frame_truncated(&ng, policy.eta())?;
    let delta0 = frame.valid_locus_note.evaluate(&origin)?;
    trace.frame = Some(FrameProvenance {
        target_change: ng.target_change.to_rows(),
        pivots: var_names(g, &ng.pivots),
        kernel_vars: var_names(g, &ng.kernel_vars),
        pivot_minor_at_0: delta0.clone(),
    });
    let ls = compute_lambdas(&ng, &frame, policy);
    let nd = nondegeneracy(&ls);
    trace.lambda_rank = Some((&nd).into());
    let mut hd = hessian(&ls);
    let record_polys = |trace: &mut Trace, hd: &HessData| {
        if opts.keep_polynomials {
            trace.polynomials = Some(PolynomialTrace {
                lambdas: ls.lambdas.iter().map(|p| p.to_string()).collect(),
                h_eta: (0..hd.h_eta.rows())
                    .map(|i| hd.h_eta.row(i).iter().map(|p| p.to_string()).collect())
                    .collect(),
                h_derivs: hd.h_derivs.iter().map(|p| p.to_string()).collect(),
                theta: hd.theta.as_ref().map(|t| t.to_string()),
                jet_order: policy.f(),
            });
        }
    };
    if !nd.pass() {
        record_polys(&mut trace, &hd);
        return finish(trace);
    }
    let h_eta0 = hd.h_eta.evaluate(&origin)?;
    trace.h_eta_at_0 = Some(h_eta0.to_rows());
    let h0 = hd.h.evaluate(&origin)?;
    trace.h_derivs_at_0.push(h0.clone());
    if !h0.is_zero() {
        // H_η(0) = δ·Hess_η fₙ(0) with δ the pivot minor.
        let s = h_eta0.symmetric_signature()?;
        trace.signature = Some(if delta0.is_negative() {
            Inertia {
                positives: s.negatives,
                negatives: s.positives,
                zeros: s.zeros,
            }
        } else {
            s
        });
        record_polys(&mut trace, &hd);
        return finish(trace);
    }
    if !build_theta(&mut hd, &ls, opts.theta_column) {
        record_polys(&mut trace, &hd);
        return finish(trace);
    }
    trace.theta_column = hd.theta_column;
    trace.theta_at_0 = Some(hd.theta.as_ref().unwrap().evaluate(&origin)?);
    let mut k = None;
    for i in 1..n {
        iterate_h(&mut hd, i);
        let v = hd.h_derivs[i].evaluate(&origin)?;
        let nonzero = !v.is_zero();
        trace.h_derivs_at_0.push(v);
        if nonzero {
            k = Some(i + 1);
            break;
        }
    }
    if let Some(k) = k {
        trace.condition_b = Some((&rank_condition_b(&ls, &hd, k)).into());
    }
    record_polys(&mut trace, &hd);
    finish(trace)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldFastPath {
    pub is_fold: bool,
    pub signature: Inertia,
    pub hessian_rank: usize,
}

/// Hess_η fₙ(0) = (ηⱼηᵢfₙ)(0) over the frame's kernel fields.
pub fn kernel_hessian(ng: &NormalizedGerm) -> Result<RationalMatrix, GermError> {
    let policy = JetPolicy::Truncated { theta_order: 0 };
    let g = ng.germ.truncate(3);
    let frame = build_frame_truncated(&NormalizedGerm { germ: g.clone(), ..ng.clone() }, policy.eta())?;
    let fnn = &g.components()[g.n() - 1];
    let l = frame.eta.len();
    let origin = g.origin();
    let mut h = RationalMatrix::zeros(l, l);
    for i in 0..l {
        let ei = frame.eta[i].apply_truncated(fnn, 2);
        for j in 0..l {
            h.set(i, j, frame.eta[j].apply_truncated(&ei, 1).evaluate(&origin)?);
        }
    }
    Ok(h)
}

pub fn fold_fast_path(ng: &NormalizedGerm) -> Result<FoldFastPath, GermError> {
    let h = kernel_hessian(ng)?;
    let rank = h.rank();
    Ok(FoldFastPath {
        is_fold: rank == h.rows(),
        signature: h.symmetric_signature()?,
        hessian_rank: rank,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CuspFastPath {
    NotApplicable { kernel_dim: usize },
    Applicable {
        is_cusp: bool,
        theta3_fn_at_0: Rational,
        d_theta_fn_at_0: Vec<Rational>,
    },
}

pub fn cusp_fast_path(ng: &NormalizedGerm) -> Result<CuspFastPath, GermError> {
    let h = kernel_hessian(ng)?;
    let kernel_dim = h.rows() - h.rank();
    if kernel_dim != 1 {
        return Ok(CuspFastPath::NotApplicable { kernel_dim });
    }
    let policy = JetPolicy::Truncated { theta_order: 2 };
    let g = ng.germ.truncate(policy.f().unwrap());
    let ng = NormalizedGerm { germ: g.clone(), ..ng.clone() };
    let frame = build_frame_truncated(&ng, policy.eta())?;
    let ls = compute_lambdas(&ng, &frame, policy);
    let mut hd = hessian(&ls);
    if !build_theta(&mut hd, &ls, ThetaColumn::First) {
        return Ok(CuspFastPath::NotApplicable { kernel_dim });
    }
    let theta = hd.theta.unwrap();
    let fnn = g.components()[g.n() - 1].truncate(3);
    let t1 = theta.apply_truncated(&fnn, 2);
    let t2 = theta.apply_truncated(&t1, 1);
    let t3 = theta.apply_truncated(&t2, 0);
    let origin = g.origin();
    let theta3 = t3.evaluate(&origin)?;
    let d = PolyMatrix::jacobian(g.context(), &[t1], &g.source_vars())
        .evaluate(&origin)?
        .row(0)
        .to_vec();
    Ok(CuspFastPath::Applicable {
        is_cusp: !theta3.is_zero() && d.iter().any(|x| !x.is_zero()),
        theta3_fn_at_0: theta3,
        d_theta_fn_at_0: d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::{Ctx, VariableContext};
    use crate::frame::build_frame;
    use crate::germ::normalize;

    fn germ(vars: &[&str], comps: &[&str]) -> MapGerm {
        let c = VariableContext::sources(vars).unwrap();
        let comps = comps.iter().map(|s| crate::parse::parse_polynomial(s, &c).unwrap()).collect();
        MapGerm::new(&c, comps).unwrap()
    }

    fn p(c: &Ctx, s: &str) -> Polynomial {
        crate::parse::parse_polynomial(s, c).unwrap()
    }

    fn full(g: &MapGerm) -> (NormalizedGerm, LambdaSystem, HessData) {
        let ng = normalize(g).unwrap();
        let frame = build_frame(&ng).unwrap();
        let ls = compute_lambdas(&ng, &frame, JetPolicy::Full);
        let hd = hessian(&ls);
        (ng, ls, hd)
    }

    #[test]
    fn cusp_form_pipeline() {
        let g = germ(&["x", "y", "z"], &["x", "y^2 + z^3 + x*z"]);
        let c = g.context().clone();
        let (_, ls, mut hd) = full(&g);
        assert_eq!(ls.lambdas, vec![p(&c, "2*y"), p(&c, "3*z^2 + x")]);
        let nd = nondegeneracy(&ls);
        assert_eq!(nd.matrix, RationalMatrix::from_i64(&[&[0, 2, 0], &[1, 0, 0]]));
        assert!(nd.pass());
        assert_eq!(hd.h, p(&c, "12*z"));
        assert_eq!(hd.h_eta.get(0, 0), &p(&c, "2"));
        assert_eq!(hd.h_eta.get(1, 1), &p(&c, "6*z"));
        assert!(build_theta(&mut hd, &ls, ThetaColumn::First));
        assert_eq!(hd.theta.as_ref().unwrap().to_string(), "(2)*dz");
        let theta = hd.theta.clone().unwrap();
        for lam in &ls.lambdas {
            assert!(theta.apply(lam).unwrap().evaluate(&g.origin()).unwrap().is_zero());
        }
        assert_eq!(iterate_h(&mut hd, 1)[1], p(&c, "24"));
        let b = rank_condition_b(&ls, &hd, 2);
        assert_eq!((b.rank, b.required), (3, 3));
    }

    #[test]
    fn three_morin_pipeline() {
        let g = germ(&["x1", "x2", "y", "z"], &["x1", "x2", "y^2 + z^4 + x1*z + x2*z^2"]);
        let c = g.context().clone();
        let (_, ls, mut hd) = full(&g);
        assert_eq!(hd.h, p(&c, "24*z^2 + 4*x2"));
        assert!(build_theta(&mut hd, &ls, ThetaColumn::First));
        let d = iterate_h(&mut hd, 2).to_vec();
        assert_eq!(d[1], p(&c, "96*z"));
        assert_eq!(d[2], p(&c, "192"));
        let b = rank_condition_b(&ls, &hd, 3);
        assert_eq!((b.rank, b.required), (4, 4));
    }

    #[test]
    fn fold_pipeline() {
        let g = germ(&["x", "y", "z"], &["x", "y^2 + z^2"]);
        let c = g.context().clone();
        let (_, ls, hd) = full(&g);
        assert_eq!(ls.lambdas, vec![p(&c, "2*y"), p(&c, "2*z")]);
        assert_eq!(hd.h, p(&c, "4"));
        assert_eq!(nondegeneracy(&ls).rank, 2);
    }

    #[test]
    fn classify_examples() {
        let cases = [
            (vec!["x", "y^2 + z^2"], Label::Fold { positives: 2, negatives: 0 }),
            (vec!["x", "y^2 - z^2"], Label::Fold { positives: 1, negatives: 1 }),
            (vec!["x", "y^2 + z^3 + x*z"], Label::Morin { k: 2 }),
            (
                vec!["x", "y^2 + z^3"],
                Label::Degenerate {
                    reason: DegenerateReason::NotNondegenerate,
                },
            ),
            (vec!["x", "y"], Label::Regular),
            (vec!["x^2", "y^2"], Label::CorankHigh),
        ];
        for (comps, want) in cases {
            let g = germ(&["x", "y", "z"], &comps);
            let r = classify(&g).unwrap();
            assert_eq!(r.label, want, "{comps:?}");
            assert_eq!(label_from_trace(&r.trace), r.label);
        }
        let g = germ(&["x1", "x2", "y", "z"], &["x1", "x2", "y^2 + z^4 + x1*z + x2*z^2"]);
        assert_eq!(classify(&g).unwrap().label, Label::Morin { k: 3 });
    }

    #[test]
    fn quartic_is_not_morin() {
        let g = germ(&["x", "y", "z"], &["x", "y^2 + z^4"]);
        assert_eq!(classify(&g).unwrap().label.morin_index(), None);
    }

    #[test]
    fn cusp_capped_in_plane_target() {
        // k would be 3 but n = 2 caps the ladder at H′.
        let g = germ(&["x", "y", "z"], &["x", "y^2 + z^4 + x*z^2"]);
        let r = classify(&g).unwrap();
        assert!(matches!(r.label, Label::Degenerate { .. }));
    }

    #[test]
    fn negative_pivot_minor_keeps_signature() {
        let g = germ(&["x", "y", "z"], &["-x", "y^2 - z^2 + x*y"]);
        assert_eq!(classify(&g).unwrap().label, Label::Fold { positives: 1, negatives: 1 });
        let g = germ(&["x", "y", "z"], &["-2*x", "-y^2 - z^2"]);
        assert_eq!(classify(&g).unwrap().label, Label::Fold { positives: 0, negatives: 2 });
    }

    #[test]
    fn fast_paths() {
        let g = germ(&["x", "y", "z"], &["x", "y^2 - z^2"]);
        let f = fold_fast_path(&normalize(&g).unwrap()).unwrap();
        assert!(f.is_fold);
        assert_eq!((f.signature.positives, f.signature.negatives), (1, 1));
        assert_eq!(
            cusp_fast_path(&normalize(&g).unwrap()).unwrap(),
            CuspFastPath::NotApplicable { kernel_dim: 0 }
        );

        let g = germ(&["x", "y", "z"], &["x", "y^2 + z^3 + x*z"]);
        let ng = normalize(&g).unwrap();
        assert!(!fold_fast_path(&ng).unwrap().is_fold);
        match cusp_fast_path(&ng).unwrap() {
            CuspFastPath::Applicable {
                is_cusp,
                theta3_fn_at_0,
                d_theta_fn_at_0,
            } => {
                assert!(is_cusp);
                assert_eq!(theta3_fn_at_0, Rational::from(48));
                assert_eq!(d_theta_fn_at_0, vec![Rational::from(2), Rational::zero(), Rational::zero()]);
            }
            other => panic!("{other:?}"),
        }

        let g = germ(&["x1", "x2", "y", "z"], &["x1", "x2", "y^2 + z^4 + x1*z + x2*z^2"]);
        match cusp_fast_path(&normalize(&g).unwrap()).unwrap() {
            CuspFastPath::Applicable { is_cusp, theta3_fn_at_0, .. } => {
                assert!(!is_cusp);
                assert!(theta3_fn_at_0.is_zero());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn truncated_and_full_agree() {
        let g = germ(
            &["x1", "x2", "y", "z"],
            &["x1 + z^2*y", "x2 + x1*y^3", "y^2 + z^4 + x1*z + x2*z^2 + y*z^3 + z^5"],
        );
        let a = classify(&g).unwrap();
        let b = classify_with(
            &g,
            &ClassifyOptions {
                jet: Some(JetPolicy::Full),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(a.label, b.label);
        assert_eq!(a.trace.h_derivs_at_0, b.trace.h_derivs_at_0);
        assert_eq!(a.label, Label::Morin { k: 3 });
    }

    #[test]
    fn unbound_parameters_are_rejected() {
        let c = VariableContext::with_parameters(&["x", "y", "z"], &["a"]).unwrap();
        let g = MapGerm::new(&c, vec![p(&c, "x"), p(&c, "y^2 + a*z^2")]).unwrap();
        assert!(matches!(classify(&g), Err(GermError::UnboundParameters(_))));
    }
}
