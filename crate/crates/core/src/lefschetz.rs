//! The Lefschetz germ (x₁x₂−y₁y₂, x₁y₂+x₂y₁), its linear unfolding L̃ and
//! the locus of parameters where L̃ acquires a singular point that is
//! neither a fold nor a cusp.

use std::collections::HashMap;
use std::io::{self, Write};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::context::{Ctx, Role, VariableContext};
use crate::criteria::{classify, hessian, lambdas_for, JetPolicy, Label, LambdaSystem};
use crate::error::{AlgebraError, GermError, NumericError};
use crate::frame::{AdaptedFrame, PolyVectorField};
use crate::germ::MapGerm;
use crate::matrix::PolyMatrix;
use crate::numeric::{NumericGerm, NumericLabel, NumericVerdict, Tolerances};
use crate::parse::parse_polynomial;
use crate::poly::Polynomial;
use crate::rational::Rational;

pub const SOURCES: [&str; 4] = ["x1", "x2", "y1", "y2"];
pub const PARAMS: [&str; 4] = ["a1", "a2", "b1", "b2"];

fn poly(text: &str, ctx: &Ctx) -> Polynomial {
    parse_polynomial(text, ctx).expect("built-in polynomial")
}

fn idx(ctx: &Ctx, name: &str) -> usize {
    ctx.index_of(name).expect("known variable")
}

#[derive(Clone, Debug)]
pub struct LefschetzFamily {
    pub germ: MapGerm,
}

impl LefschetzFamily {
    /// L̃ = (x₁x₂−y₁y₂+a₁x₁+a₂x₂, x₁y₂+x₂y₁+b₁x₁+b₂x₂).
    pub fn unfolding() -> Self {
        let ctx = VariableContext::with_parameters(&SOURCES, &PARAMS).expect("distinct names");
        let comps = vec![
            poly("x1*x2 - y1*y2 + a1*x1 + a2*x2", &ctx),
            poly("x1*y2 + x2*y1 + b1*x1 + b2*x2", &ctx),
        ];
        LefschetzFamily {
            germ: MapGerm::new(&ctx, comps).expect("valid germ"),
        }
    }

    /// (x₁x₂−y₁y₂+s(x₁+x₂), x₁y₂+x₂y₁).
    pub fn wrinkling() -> Self {
        let ctx = VariableContext::with_parameters(&SOURCES, &["s"]).expect("distinct names");
        let comps = vec![poly("x1*x2 - y1*y2 + s*(x1 + x2)", &ctx), poly("x1*y2 + x2*y1", &ctx)];
        LefschetzFamily {
            germ: MapGerm::new(&ctx, comps).expect("valid germ"),
        }
    }

    pub fn context(&self) -> &Ctx {
        self.germ.context()
    }

    /// L̃ at numeric parameters (a₁, a₂, b₁, b₂).
    pub fn at(params: &[Rational; 4]) -> MapGerm {
        let fam = Self::unfolding();
        let binding: Vec<(&str, Rational)> = PARAMS.iter().copied().zip(params.iter().cloned()).collect();
        fam.germ.bind_parameters(&binding).expect("parameters exist")
    }
}

/// Frame with ξ = ∂x₁ from the first component; δ = a₁+x₂.
pub fn lefschetz_frame(g: &MapGerm) -> Result<AdaptedFrame, AlgebraError> {
    let ctx = g.context();
    let kernel = [idx(ctx, "x2"), idx(ctx, "y1"), idx(ctx, "y2")];
    AdaptedFrame::cramer(ctx, &g.components()[..1], &[idx(ctx, "x1")], &kernel, None)
}

#[derive(Clone, Debug)]
pub struct LefschetzLambdas {
    pub system: LambdaSystem,
    /// The pivot minor a₁+x₂ the Cramer λ's carry as a factor.
    pub unit: Polynomial,
    pub normalized: Vec<Polynomial>,
}

/// Cramer λ's of `g` (L̃ with symbolic or bound parameters) and their
/// quotients by a₁+x₂.
pub fn lefschetz_lambdas(g: &MapGerm) -> Result<LefschetzLambdas, GermError> {
    let frame = lefschetz_frame(g)?;
    let lambdas = lambdas_for(g.components(), &frame, JetPolicy::Full);
    let unit = frame.valid_locus_note.clone();
    let normalized = lambdas
        .iter()
        .map(|l| {
            l.div_exact(&unit)
                .map_err(|_| GermError::Malformed(format!("λ not divisible by {unit}: internal inconsistency")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LefschetzLambdas {
        system: LambdaSystem {
            lambdas,
            frame,
            policy: JetPolicy::Full,
        },
        unit,
        normalized,
    })
}

/// θ = Σᵢ adj(H_η)[i][c]·ηᵢ for a fixed column, without evaluating at 0.
pub fn theta_for_column(h_eta: &PolyMatrix, eta: &[PolyVectorField], column: usize) -> Result<PolyVectorField, AlgebraError> {
    let adj = h_eta.adjugate()?;
    let mut theta = PolyVectorField::zero(h_eta.context());
    for (i, e) in eta.iter().enumerate() {
        let a = adj.get(i, column);
        if !a.is_zero() {
            theta = theta.add(&e.scale(a, None));
        }
    }
    Ok(theta)
}

/// Symbolic H_η, H and θH for L̃, θ from the adjugate column that pairs
/// λ₁ with λ₂.
pub struct LefschetzHessian {
    pub lambdas: LefschetzLambdas,
    pub h_eta: PolyMatrix,
    pub h: Polynomial,
    pub theta: PolyVectorField,
    pub theta_h: Polynomial,
}

pub fn lefschetz_hessian(g: &MapGerm) -> Result<LefschetzHessian, GermError> {
    let lambdas = lefschetz_lambdas(g)?;
    let hd = hessian(&lambdas.system);
    let theta = theta_for_column(&hd.h_eta, &lambdas.system.frame.eta, 2)?;
    let theta_h = theta.apply(&hd.h)?;
    Ok(LefschetzHessian {
        lambdas,
        h_eta: hd.h_eta,
        h: hd.h,
        theta,
        theta_h,
    })
}

#[derive(Clone, Debug)]
pub struct NoncuspLocus {
    pub components: Vec<Polynomial>,
}

pub fn parameter_context() -> Ctx {
    VariableContext::new(PARAMS.iter().map(|p| (*p, Role::Parameter))).expect("distinct names")
}

pub fn noncusp_polynomials() -> NoncuspLocus {
    let ctx = parameter_context();
    let components = [
        "a1*(a2^2 - b2^2) - 2*a2*b1*b2",
        "a2*(a1^2 + b1^2) - 2*b2*(a1 + b1)",
        "a1*a2 + b1*b2",
        "a2*(a1^2 - b1^2) - 2*a1*b1*b2",
        "a1*(a2^2 + b2^2) - 2*b1*(a2 + b2)",
    ]
    .iter()
    .map(|t| poly(t, &ctx))
    .collect();
    NoncuspLocus { components }
}

impl NoncuspLocus {
    pub fn evaluate(&self, params: &[Rational; 4]) -> Vec<Rational> {
        self.components
            .iter()
            .map(|c| c.evaluate(params).expect("four parameters"))
            .collect()
    }
}

/// Polynomial coefficients of `p` in the variable `v`, lowest degree first.
pub fn coefficients_in(p: &Polynomial, v: usize) -> Vec<Polynomial> {
    let ctx = p.context();
    let mut out: Vec<Polynomial> = Vec::new();
    for (e, c) in p.terms() {
        let k = e[v] as usize;
        if out.len() <= k {
            out.resize(k + 1, Polynomial::zero(ctx));
        }
        let mut e2 = e.clone();
        e2[v] = 0;
        out[k] = &out[k] + &Polynomial::monomial(ctx, e2, c.clone());
    }
    out
}

/// Sylvester resultant of `p` and `q` with respect to `v`.
pub fn resultant(p: &Polynomial, q: &Polynomial, v: usize) -> Result<Polynomial, AlgebraError> {
    let ctx = p.context();
    let a = coefficients_in(p, v);
    let b = coefficients_in(q, v);
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    if size == 0 {
        return Ok(Polynomial::one(ctx));
    }
    let mut entries = vec![Polynomial::zero(ctx); size * size];
    for r in 0..n {
        for (k, c) in a.iter().rev().enumerate() {
            entries[r * size + r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in b.iter().rev().enumerate() {
            entries[(n + r) * size + r + k] = c.clone();
        }
    }
    PolyMatrix::new(ctx, size, size, entries)?.determinant()
}

/// Numerator of p with the variables `vars` replaced by nums[k]/den.
/// Each term is multiplied by den^{d−e}, d being the largest joint degree
/// of `vars` in p.
pub fn substitute_cleared(p: &Polynomial, vars: &[usize], nums: &[Polynomial], den: &Polynomial) -> Polynomial {
    let ctx = p.context();
    let mut groups: HashMap<Vec<u32>, Polynomial> = HashMap::new();
    for (e, c) in p.terms() {
        let key: Vec<u32> = vars.iter().map(|&v| e[v]).collect();
        let mut rest = e.clone();
        for &v in vars {
            rest[v] = 0;
        }
        let g = groups.entry(key).or_insert_with(|| Polynomial::zero(ctx));
        *g = &*g + &Polynomial::monomial(ctx, rest, c.clone());
    }
    let d = groups.keys().map(|k| k.iter().sum::<u32>()).max().unwrap_or(0);
    let mut keys: Vec<&Vec<u32>> = groups.keys().collect();
    keys.sort();
    let mut pow_cache: HashMap<(usize, u32), Polynomial> = HashMap::new();
    let mut power = |slot: usize, k: u32| -> Polynomial {
        pow_cache
            .entry((slot, k))
            .or_insert_with(|| if slot < nums.len() { nums[slot].pow(k) } else { den.pow(k) })
            .clone()
    };
    let mut out = Polynomial::zero(ctx);
    for key in keys {
        let mut term = groups[key].clone();
        for (slot, &k) in key.iter().enumerate() {
            if k > 0 {
                term = &term * &power(slot, k);
            }
        }
        let e: u32 = key.iter().sum();
        if d > e {
            term = &term * &power(nums.len(), d - e);
        }
        out = out + term;
    }
    out
}

/// Exchange of the subscripts 1 ↔ 2 (x, y, a and b together); L̃ is
/// invariant under it.
pub fn swap_subscripts(p: &Polynomial) -> Polynomial {
    let ctx = p.context();
    let mut b = HashMap::new();
    for (u, v) in [("x1", "x2"), ("y1", "y2"), ("a1", "a2"), ("b1", "b2")] {
        if let (Ok(i), Ok(j)) = (ctx.index_of(u), ctx.index_of(v)) {
            b.insert(i, Polynomial::var(ctx, j));
            b.insert(j, Polynomial::var(ctx, i));
        }
    }
    p.substitute(ctx, &b).expect("same context")
}

/// Strips every factor in `units` and returns the remaining cofactor.
pub fn strip_factors(p: &Polynomial, units: &[Polynomial]) -> Polynomial {
    let mut rest = p.clone();
    for u in units {
        rest = rest.remove_factor(u).0;
    }
    rest
}

/// Steps of the non-cusp locus derivation along the (x₁,y₁) ≠ 0 branch and
/// the x₁ = y₁ = 0 branch.
#[derive(Clone, Debug)]
pub struct LocusDerivation {
    /// Numerator of H on the Eq. (9) branch, b₂ eliminated with the circle.
    pub h_on_branch: Polynomial,
    /// Multiplicity of b₁x₁−a₁y₁ in it.
    pub linear_factor_multiplicity: u32,
    /// The remaining factor, apart from powers of x₁, y₁ and x₁²+y₁².
    pub h_cofactor: Polynomial,
    /// Multiplicities of a₂+x₁ and a₂+2x₁ in θH on {H = 0} (at x₁ = 1).
    pub theta_h_factors: (u32, u32),
    /// Resultants eliminating y₁ on a₂ = −x₁ and a₂ = −2x₁.
    pub eliminants: [Polynomial; 2],
    /// Numerator of θH at the x₁ = y₁ = 0 closed-form point.
    pub theta_h_origin_branch: Polynomial,
}

/// The second factor of H on the Eq. (9) branch.
pub fn branch_factor(ctx: &Ctx) -> Polynomial {
    poly(
        "a1*y1*(-3*x1^2 + y1^2 - 2*a2*x1) + b1*(x1^3 - 3*x1*y1^2 + a2*x1^2 - a2*y1^2)",
        ctx,
    )
}

pub fn derive_locus() -> Result<LocusDerivation, GermError> {
    let fam = LefschetzFamily::unfolding();
    let ctx = fam.context().clone();
    let v = |n: &str| idx(&ctx, n);
    let p = |t: &str| poly(t, &ctx);
    let hess = lefschetz_hessian(&fam.germ)?;

    // Eq. (9): x₂ = −x₁s/D, y₂ = −y₁s/D, then b₂ = −(a₂x₁+D)/y₁.
    let d = p("x1^2 + y1^2");
    let s = p("a1*x1 + b1*y1");
    let x2 = -(&p("x1") * &s);
    let y2 = -(&p("y1") * &s);
    let b2 = -(&p("a2*x1") + &d);
    let step = |f: &Polynomial| {
        let g = substitute_cleared(f, &[v("x2"), v("y2")], &[x2.clone(), y2.clone()], &d);
        substitute_cleared(&g, &[v("b2")], std::slice::from_ref(&b2), &p("y1"))
    };
    let h_on_branch = step(&hess.h);
    let (rest, linear_factor_multiplicity) = h_on_branch.remove_factor(&p("b1*x1 - a1*y1"));
    let h_cofactor = strip_factors(&rest, &[p("x1"), p("y1"), d.clone()]);

    // θH with x₁ = 1 (L̃ is homogeneous) and a₁ solved from the cofactor.
    let one = [(v("x1"), Rational::one())];
    let f = branch_factor(&ctx).bind(&one);
    let th = step(&hess.theta_h).bind(&one);
    let a1_num = -&f.bind(&[(v("a1"), Rational::zero())]);
    let a1_den = &f - &f.bind(&[(v("a1"), Rational::zero())]);
    let a1_den = a1_den.div_exact(&p("a1"))?;
    let th = substitute_cleared(&th, &[v("a1")], &[a1_num], &a1_den);
    let m1 = th.remove_factor(&p("a2 + 1")).1;
    let m2 = th.remove_factor(&p("a2 + 2")).1;

    // a₂ = −c·x₁: eliminate y₁ between the circle and the cofactor.
    let circle = p("a2*x1 + y1*b2 + x1^2 + y1^2");
    let f = branch_factor(&ctx);
    let eliminants = [Rational::one(), Rational::new(1, 2)].map(|c| {
        let mut b = HashMap::new();
        b.insert(v("x1"), p("a2").scale(&-c));
        let circ = circle.substitute(&ctx, &b).expect("same context");
        let ff = f.substitute(&ctx, &b).expect("same context");
        // y₁ = 0 solves both but is excluded: b₂ was solved through 1/y₁.
        let y1 = p("y1");
        let circ = circ.remove_factor(&y1).0;
        let ff = ff.remove_factor(&y1).0;
        resultant(&circ, &ff, v("y1")).expect("square Sylvester matrix")
    });

    // x₁ = y₁ = 0 with the closed form for (x₂, y₂).
    let e = p("a2^2 + b2^2");
    let origin_th = substitute_cleared(
        &hess.theta_h.bind(&[(v("x1"), Rational::zero()), (v("y1"), Rational::zero())]),
        &[v("x2"), v("y2")],
        &[p("b2*(a2*b1 - a1*b2)"), p("a2*(a1*b2 - a2*b1)")],
        &e,
    );

    Ok(LocusDerivation {
        h_on_branch,
        linear_factor_multiplicity,
        h_cofactor,
        theta_h_factors: (m1, m2),
        eliminants,
        theta_h_origin_branch: origin_th,
    })
}

impl LocusDerivation {
    /// Whether the hard-coded component `i` (0-based) divides the
    /// polynomial the derivation produced for it.
    pub fn reproduces(&self, i: usize) -> bool {
        let locus = noncusp_polynomials();
        let fam_ctx = self.eliminants[0].context().clone();
        let comp = locus.components[i].embed(&fam_ctx).expect("parameter names");
        let divides = |target: &Polynomial| !target.is_zero() && comp.divides(target);
        match i {
            0 | 1 => self.eliminants.iter().any(divides),
            2 => divides(&self.theta_h_origin_branch),
            _ => self.eliminants.iter().map(swap_subscripts).any(|e| divides(&e)),
        }
    }
}

/// Point of S(L̃) on the Eq. (9) branch: (x₁, y₁) on the circle
/// x₁²+y₁²+a₂x₁+b₂y₁ = 0 via x₁ = −(a₂+b₂t)/(1+t²), y₁ = t·x₁.
pub fn eq9_point(params: &[Rational; 4], t: &Rational) -> Option<Vec<Rational>> {
    let [a1, a2, b1, b2] = params;
    let x1 = -(a2 + &(b2 * t)) / (Rational::one() + t * t);
    let y1 = t * &x1;
    let d = &x1 * &x1 + &y1 * &y1;
    if d.is_zero() {
        return None;
    }
    let s = a1 * &x1 + b1 * &y1;
    let x2 = -(&x1 * &s) / &d;
    let y2 = -(&y1 * &s) / &d;
    Some(vec![x1, x2, y1, y2])
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let root = |n: &BigInt| {
        let s = n.abs().sqrt();
        (&s * &s == n.abs()).then_some(s)
    };
    Some(Rational::new(root(r.numer())?, root(r.denom())?))
}

/// Rational roots of a·t² + b·t + c.
fn rational_roots(a: &Rational, b: &Rational, c: &Rational) -> Vec<Rational> {
    if a.is_zero() {
        return if b.is_zero() { Vec::new() } else { vec![-c / b] };
    }
    let disc = b * b - Rational::from(4) * a * c;
    let Some(s) = rational_sqrt(&disc) else {
        return Vec::new();
    };
    let two_a = Rational::from(2) * a;
    let mut out = vec![(-b + &s) / &two_a, (-b - &s) / &two_a];
    out.dedup();
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub branch: String,
    pub point: Vec<Rational>,
    pub label: Label,
}

impl Candidate {
    pub fn is_witness(&self) -> bool {
        !matches!(self.label, Label::Fold { .. } | Label::Morin { k: 2 } | Label::Regular)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub params: [Rational; 4],
    pub component_values: Vec<Rational>,
    pub on_locus: bool,
    pub candidates: Vec<Candidate>,
    pub exact_witness: Option<Candidate>,
    pub numeric_witness: Option<NumericVerdict>,
    /// Points of S with H = 0 found by the numeric fallback, with verdicts.
    pub h_zero_points: Vec<(Vec<f64>, NumericLabel)>,
}

impl WitnessReport {
    pub fn confirmed(&self) -> bool {
        self.exact_witness.is_some() || self.numeric_witness.is_some()
    }
}

/// Branch points for parameters `c`, in source order (x₁, x₂, y₁, y₂).
fn branch_points(c: &[Rational; 4]) -> Vec<(String, Vec<Rational>)> {
    let [a1, a2, b1, b2] = c;
    let zero = Rational::zero();
    let mut out = Vec::new();
    // (x₁, y₁) ≠ 0 with (a₂+x₁)(a₂+2x₁) = 0, y₁ from the circle.
    for (name, x1) in [("a2+x1=0", -a2), ("a2+2x1=0", -a2 / Rational::from(2))] {
        for y1 in rational_roots(&Rational::one(), b2, &(&x1 * &x1 + a2 * &x1)) {
            let d = &x1 * &x1 + &y1 * &y1;
            if d.is_zero() {
                continue;
            }
            let s = a1 * &x1 + b1 * &y1;
            let x2 = -(&x1 * &s) / &d;
            let y2 = -(&y1 * &s) / &d;
            out.push((format!("x1y1!=0, {name}"), vec![x1.clone(), x2, y1, y2]));
        }
    }
    // x₁ = y₁ = 0.
    let e = a2 * a2 + b2 * b2;
    if !e.is_zero() {
        let x2 = b2 * &(a2 * b1 - a1 * b2) / &e;
        let y2 = a2 * &(a1 * b2 - a2 * b1) / &e;
        out.push(("x1=y1=0".into(), vec![zero.clone(), x2, zero.clone(), y2]));
    }
    out.push(("origin".into(), vec![zero.clone(); 4]));
    // x₁ = y₁ = 0, b₁+2y₂ = 0, a₁x₂+x₂²−y₂² = 0.
    let y2 = -b1 / Rational::from(2);
    for x2 in rational_roots(&Rational::one(), a1, &-(&y2 * &y2)) {
        out.push(("x1=y1=0, b1+2y2=0".into(), vec![zero.clone(), x2, zero.clone(), y2.clone()]));
    }
    out
}

fn swap_params(c: &[Rational; 4]) -> [Rational; 4] {
    [c[1].clone(), c[0].clone(), c[3].clone(), c[2].clone()]
}

fn swap_point(p: &[Rational]) -> Vec<Rational> {
    vec![p[1].clone(), p[0].clone(), p[3].clone(), p[2].clone()]
}

/// Exact label of L̃_c at q, or None if q is not a singular point.
pub fn classify_at(c: &[Rational; 4], q: &[Rational]) -> Result<Option<Label>, GermError> {
    let g = LefschetzFamily::at(c);
    if g.jacobian_at(q)?.rank() == 2 {
        return Ok(None);
    }
    let local = MapGerm::at_point(g.context(), g.components().to_vec(), q)?;
    Ok(Some(classify(&local)?.label))
}

/// Seeds for the fallback search: 5⁴ grid over a box scaled to the parameters.
fn fallback_bounds(c: &[Rational; 4]) -> Vec<(f64, f64)> {
    let r = 1.0 + c.iter().map(|x| x.to_f64().abs()).fold(0.0, f64::max);
    vec![(-r, r); 4]
}

pub fn witness_verify(params: &[Rational; 4]) -> Result<WitnessReport, GermError> {
    let component_values = noncusp_polynomials().evaluate(params);
    let on_locus = component_values.iter().any(Rational::is_zero);
    let mut report = WitnessReport {
        params: params.clone(),
        component_values,
        on_locus,
        candidates: Vec::new(),
        exact_witness: None,
        numeric_witness: None,
        h_zero_points: Vec::new(),
    };
    if !on_locus {
        return Ok(report);
    }
    let mut points = branch_points(params);
    points.extend(
        branch_points(&swap_params(params))
            .into_iter()
            .map(|(b, p)| (format!("{b} (1<->2)"), swap_point(&p))),
    );
    let mut seen = Vec::new();
    for (branch, q) in points {
        if seen.contains(&q) {
            continue;
        }
        seen.push(q.clone());
        if let Some(label) = classify_at(params, &q)? {
            report.candidates.push(Candidate { branch, point: q, label });
        }
    }
    report.exact_witness = report.candidates.iter().find(|c| c.is_witness()).cloned();
    if report.exact_witness.is_none() {
        let scan = NumericGerm::new(&LefschetzFamily::at(params))
            .and_then(|g| g.scan_h_zero(&fallback_bounds(params), 5, &Tolerances::default()))
            .map_err(|e| match e {
                NumericError::Germ(g) => g,
                other => GermError::Malformed(other.to_string()),
            })?;
        report.h_zero_points = scan.iter().map(|v| (v.point.clone(), v.label)).collect();
        report.numeric_witness = scan
            .into_iter()
            .find(|v| matches!(v.label, NumericLabel::Decided(l) if !matches!(l, Label::Fold { .. } | Label::Morin { k: 2 } | Label::Regular)));
    }
    Ok(report)
}

/// Numeric scan of S(L̃_c) seeded on a grid over `bounds`.
pub fn scan_parameters(
    c: &[Rational; 4],
    bounds: &[(f64, f64)],
    grid: usize,
    tol: &Tolerances,
) -> Result<Vec<NumericVerdict>, NumericError> {
    NumericGerm::new(&LefschetzFamily::at(c))?.scan(bounds, grid, tol)
}

#[derive(Clone, Debug)]
pub struct SliceGrid {
    pub b2: Rational,
    pub range: (Rational, Rational),
    pub resolution: usize,
    pub axis: Vec<Rational>,
    /// Per component, res³ values in lexicographic (a₁, a₂, b₁) order.
    pub values: Vec<Vec<f64>>,
}

pub fn emit_slice(b2: &Rational, resolution: usize, range: (Rational, Rational)) -> Result<SliceGrid, AlgebraError> {
    if resolution < 2 {
        return Err(AlgebraError::DimensionMismatch("slice resolution must be at least 2".into()));
    }
    let (lo, hi) = range.clone();
    let steps = Rational::from((resolution - 1) as i64);
    let axis: Vec<Rational> = (0..resolution)
        .map(|i| &lo + &((&hi - &lo) * Rational::from(i as i64) / &steps))
        .collect();
    let locus = noncusp_polynomials();
    // Integer coordinates over a common denominator keep the evaluation
    // exact without normalizing after every operation.
    let den = axis
        .iter()
        .chain(std::iter::once(b2))
        .fold(BigInt::from(1), |acc, a| acc.lcm(a.denom()));
    let ints: Vec<BigInt> = axis.iter().map(|a| (a * &Rational::from(den.clone())).numer().clone()).collect();
    let b2_int = (b2 * &Rational::from(den.clone())).numer().clone();
    let evaluators: Vec<IntEvaluator> = locus.components.iter().map(|c| IntEvaluator::new(c, &den)).collect();
    let r = resolution;
    let rows: Vec<Vec<f64>> = (0..r * r * r)
        .into_par_iter()
        .map(|k| {
            let p = [&ints[k / (r * r)], &ints[k / r % r], &ints[k % r], &b2_int];
            evaluators.iter().map(|e| e.eval(&p)).collect()
        })
        .collect();
    let values = (0..5).map(|c| rows.iter().map(|row| row[c]).collect()).collect();
    Ok(SliceGrid {
        b2: b2.clone(),
        range,
        resolution,
        axis,
        values,
    })
}

/// p(X/den) as (Σ Kₜ·Xᵉ) / denominator with integer Kₜ.
struct IntEvaluator {
    terms: Vec<(BigInt, Vec<u32>)>,
    denominator: BigInt,
}

impl IntEvaluator {
    fn new(p: &Polynomial, den: &BigInt) -> Self {
        let dmax = p.total_degree().unwrap_or(0);
        let lcm = p.terms().fold(BigInt::from(1), |acc, (_, c)| acc.lcm(c.denom()));
        let terms = p
            .terms()
            .map(|(e, c)| {
                let deg: u32 = e.iter().sum();
                let k = c * &Rational::from(&lcm * num_traits::pow(den.clone(), (dmax - deg) as usize));
                (k.numer().clone(), e.clone())
            })
            .collect();
        IntEvaluator {
            terms,
            denominator: lcm * num_traits::pow(den.clone(), dmax as usize),
        }
    }

    fn eval(&self, x: &[&BigInt]) -> f64 {
        let mut num = BigInt::from(0);
        for (k, e) in &self.terms {
            let mut t = k.clone();
            for (v, &d) in x.iter().zip(e) {
                for _ in 0..d {
                    t *= *v;
                }
            }
            num += t;
        }
        Rational::new(num, self.denominator.clone()).to_f64()
    }
}

fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

impl SliceGrid {
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "a1,a2,b1,n1,n2,n3,n4,n5")?;
        let r = self.resolution;
        let axis: Vec<String> = self.axis.iter().map(|a| fmt17(a.to_f64())).collect();
        for k in 0..r * r * r {
            let mut line = format!("{},{},{}", axis[k / (r * r)], axis[k / r % r], axis[k % r]);
            for c in &self.values {
                line.push(',');
                line.push_str(&fmt17(c[k]));
            }
            writeln!(w, "{line}")?;
        }
        Ok(())
    }

    /// `slice_b2_<value>.csv`, the value written as a decimal when it
    /// terminates and as `p_q` otherwise.
    pub fn file_name(&self) -> String {
        format!("slice_b2_{}.csv", rational_label(&self.b2))
    }
}

fn rational_label(r: &Rational) -> String {
    let mut d = r.denom().clone();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let mut digits = 0u32;
    let mut twos = 0u32;
    let mut fives = 0u32;
    while (&d % &two) == BigInt::from(0) {
        d /= &two;
        twos += 1;
    }
    while (&d % &five) == BigInt::from(0) {
        d /= &five;
        fives += 1;
    }
    if d != BigInt::from(1) {
        return format!("{}_{}", r.numer(), r.denom());
    }
    digits += twos.max(fives);
    let scaled = r * &Rational::from_integer(BigInt::from(10).pow(digits));
    let n = scaled.numer().clone();
    if digits == 0 {
        return n.to_string();
    }
    let neg = n.is_negative();
    let s = n.abs().to_string();
    let s = format!("{:0>width$}", s, width = digits as usize + 1);
    let (int, frac) = s.split_at(s.len() - digits as usize);
    format!("{}{}.{}", if neg { "-" } else { "" }, int, frac)
}

/// The b₂ values of the published slices.
pub fn paper_slices() -> Vec<Rational> {
    [(-1, 2), (-1, 4), (0, 1), (1, 4), (1, 2)]
        .iter()
        .map(|&(p, q)| Rational::new(p, q))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64) -> Rational {
        Rational::from(p)
    }

    #[test]
    fn family_reduces_to_lefschetz() {
        let g = LefschetzFamily::at(&[r(0), r(0), r(0), r(0)]);
        assert_eq!(g.components()[0].to_string(), "x1*x2 - y1*y2");
        assert_eq!(g.components()[1].to_string(), "x1*y2 + x2*y1");
        let w = LefschetzFamily::wrinkling();
        assert_eq!(w.germ.free_parameters(), vec!["s".to_string()]);
    }

    #[test]
    fn normalized_lambdas() {
        let fam = LefschetzFamily::unfolding();
        let l = lefschetz_lambdas(&fam.germ).unwrap();
        assert_eq!(l.unit.to_string(), "x2 + a1");
        assert_eq!(l.normalized[1].to_string(), "x2^2 + y2^2 + a1*x2 + b1*y2");
        assert_eq!(l.normalized[2].to_string(), "x1*x2 + y1*y2 + a1*x1 + b1*y1");
    }

    #[test]
    fn locus_examples() {
        let n = noncusp_polynomials();
        assert_eq!(n.evaluate(&[r(1), r(0), r(0), r(7)])[2], r(0));
        assert_eq!(n.evaluate(&[r(1), r(1), r(1), r(1)])[0], r(-2));
        assert!(n.evaluate(&[r(0), r(0), r(0), r(0)]).iter().all(Rational::is_zero));
    }

    #[test]
    fn eq9_points_are_singular() {
        let c = [r(1), r(-2), r(3), r(1)];
        let g = LefschetzFamily::at(&c);
        for t in [Rational::new(1, 3), r(3), r(-5)] {
            let q = eq9_point(&c, &t).unwrap();
            assert_eq!(g.jacobian_at(&q).unwrap().rank(), 1, "{q:?}");
        }
    }

    #[test]
    fn resultant_of_linear_forms() {
        let ctx = VariableContext::sources(&["x", "y"]).unwrap();
        let p = parse_polynomial("x - y", &ctx).unwrap();
        let q = parse_polynomial("x^2 - 4", &ctx).unwrap();
        // Res_x(x−y, x²−4) = y² − 4.
        assert_eq!(resultant(&p, &q, 0).unwrap().to_string(), "y^2 - 4");
    }

    #[test]
    fn slice_small_grid() {
        let s = emit_slice(&r(0), 2, (r(-1), r(1))).unwrap();
        assert_eq!(s.values[2].len(), 8);
        // b₂ = 0: component 3 is a₁a₂.
        for k in 0..8 {
            let a1 = s.axis[k / 4].to_f64();
            let a2 = s.axis[k / 2 % 2].to_f64();
            assert_eq!(s.values[2][k], a1 * a2);
        }
        assert_eq!(s.file_name(), "slice_b2_0.csv");
        let names: Vec<String> = paper_slices().iter().map(rational_label).collect();
        assert_eq!(names, vec!["-0.5", "-0.25", "0", "0.25", "0.5"]);
        assert_eq!(rational_label(&Rational::new(1, 3)), "1_3");
        assert!(emit_slice(&r(0), 1, (r(-1), r(1))).is_err());
    }
}
