//! Adapted vector-field frames built from Cramer kernel fields.

use std::fmt;

use crate::context::{same_context, Ctx};
use crate::error::{AlgebraError, GermError};
use crate::germ::NormalizedGerm;
use crate::matrix::{PolyMatrix, RationalMatrix};
use crate::poly::Polynomial;
use crate::rational::Rational;

/// Polynomial vector field Σ cᵢ ∂xᵢ over the source variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVectorField {
    ctx: Ctx,
    /// One coefficient per source variable, in context order.
    coefficients: Vec<Polynomial>,
}

impl PolyVectorField {
    pub fn new(ctx: &Ctx, coefficients: Vec<Polynomial>) -> Result<Self, AlgebraError> {
        if coefficients.len() != ctx.source_count() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{} coefficients for {} source variables",
                coefficients.len(),
                ctx.source_count()
            )));
        }
        if coefficients.iter().any(|c| !same_context(c.context(), ctx)) {
            return Err(AlgebraError::ContextMismatch);
        }
        Ok(PolyVectorField {
            ctx: ctx.clone(),
            coefficients,
        })
    }

    /// ∂v for the source variable with context index `v`.
    pub fn coordinate(ctx: &Ctx, v: usize) -> Self {
        let coefficients = ctx
            .source_indices()
            .into_iter()
            .map(|i| if i == v { Polynomial::one(ctx) } else { Polynomial::zero(ctx) })
            .collect();
        PolyVectorField {
            ctx: ctx.clone(),
            coefficients,
        }
    }

    pub fn zero(ctx: &Ctx) -> Self {
        PolyVectorField {
            ctx: ctx.clone(),
            coefficients: vec![Polynomial::zero(ctx); ctx.source_count()],
        }
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn coefficients(&self) -> &[Polynomial] {
        &self.coefficients
    }

    /// Coefficient on ∂v for the context variable `v`.
    pub fn coefficient(&self, v: usize) -> &Polynomial {
        let k = self.ctx.source_indices().iter().position(|&i| i == v).expect("source variable");
        &self.coefficients[k]
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        PolyVectorField {
            ctx: self.ctx.clone(),
            coefficients: self.coefficients.iter().map(f).collect(),
        }
    }

    pub fn truncate(&self, max: Option<u32>) -> Self {
        match max {
            Some(m) => self.map(|c| c.truncate(m)),
            None => self.clone(),
        }
    }

    pub fn add(&self, other: &PolyVectorField) -> Self {
        PolyVectorField {
            ctx: self.ctx.clone(),
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// p·ζ, truncated to source degree `max` when given.
    pub fn scale(&self, p: &Polynomial, max: Option<u32>) -> Self {
        self.map(|c| match max {
            Some(m) => c.mul_truncated(p, m),
            None => c * p,
        })
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Vec<Rational>, AlgebraError> {
        self.coefficients.iter().map(|c| c.evaluate(point)).collect()
    }

    /// ζp = Σ cᵢ ∂p/∂xᵢ.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial, AlgebraError> {
        if !same_context(p.context(), &self.ctx) {
            return Err(AlgebraError::ContextMismatch);
        }
        Ok(self.apply_impl(p, None))
    }

    /// ζp with every term of source degree above `max` dropped.
    pub fn apply_truncated(&self, p: &Polynomial, max: u32) -> Polynomial {
        self.apply_impl(p, Some(max))
    }

    fn apply_impl(&self, p: &Polynomial, max: Option<u32>) -> Polynomial {
        let mut acc = Polynomial::zero(&self.ctx);
        for (c, v) in self.coefficients.iter().zip(self.ctx.source_indices()) {
            if c.is_zero() {
                continue;
            }
            let d = p.partial(v);
            if d.is_zero() {
                continue;
            }
            let t = match max {
                Some(m) => c.mul_truncated(&d.truncate(m), m),
                None => c * &d,
            };
            acc = &acc + &t;
        }
        acc
    }
}

impl fmt::Display for PolyVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, v) in self.coefficients.iter().zip(self.ctx.source_indices()) {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})*d{}", self.ctx.name(v))?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// ζp for a vector field ζ and polynomial p.
pub fn directional_derivative(vf: &PolyVectorField, p: &Polynomial) -> Result<Polynomial, AlgebraError> {
    vf.apply(p)
}

/// The collection (ξ₁…ξₙ₋₁; η₁…η_{m−n+1}) together with its provenance.
#[derive(Clone, Debug)]
pub struct AdaptedFrame {
    pub xi: Vec<PolyVectorField>,
    pub eta: Vec<PolyVectorField>,
    pub target_change: RationalMatrix,
    pub pivots: Vec<usize>,
    pub kernel_vars: Vec<usize>,
    /// Determinant of the pivot block of d(f₁…fₙ₋₁); the frame is adapted where it is nonzero.
    pub valid_locus_note: Polynomial,
}

impl AdaptedFrame {
    pub fn source_order(&self) -> Vec<usize> {
        self.pivots.iter().chain(&self.kernel_vars).copied().collect()
    }

    /// Cramer frame for the leading components with the given pivots.
    /// Coefficients are kept up to source degree `max` when given.
    pub fn cramer(
        ctx: &Ctx,
        leading: &[Polynomial],
        pivots: &[usize],
        kernel_vars: &[usize],
        max: Option<u32>,
    ) -> Result<Self, AlgebraError> {
        if leading.len() != pivots.len() {
            return Err(AlgebraError::DimensionMismatch("one pivot per leading component".into()));
        }
        let block = PolyMatrix::jacobian(ctx, leading, pivots);
        let det = |m: &PolyMatrix| match max {
            Some(t) => m.determinant_truncated(t),
            None => m.determinant(),
        };
        let delta = det(&block)?;
        let xi = pivots.iter().map(|&p| PolyVectorField::coordinate(ctx, p)).collect();
        let mut eta = Vec::with_capacity(kernel_vars.len());
        for &v in kernel_vars {
            let col_v: Vec<Polynomial> = leading.iter().map(|f| f.partial(v)).collect();
            let mut coeffs: Vec<(usize, Polynomial)> = vec![(v, delta.clone())];
            for (k, &p) in pivots.iter().enumerate() {
                let mut cols: Vec<Vec<Polynomial>> = (0..pivots.len()).map(|j| block.column(j)).collect();
                cols[k] = col_v.clone();
                let m = PolyMatrix::from_columns(ctx, &cols)?;
                coeffs.push((p, -det(&m)?));
            }
            let field = ctx
                .source_indices()
                .into_iter()
                .map(|i| {
                    coeffs
                        .iter()
                        .find(|(j, _)| *j == i)
                        .map(|(_, c)| c.clone())
                        .unwrap_or_else(|| Polynomial::zero(ctx))
                })
                .collect();
            eta.push(PolyVectorField::new(ctx, field)?);
        }
        Ok(AdaptedFrame {
            xi,
            eta,
            target_change: RationalMatrix::identity(leading.len() + 1),
            pivots: pivots.to_vec(),
            kernel_vars: kernel_vars.to_vec(),
            valid_locus_note: delta,
        })
    }

    /// m×m matrix of the coefficients of (ξ, η) at `point`; column k is the k-th field.
    pub fn coefficient_matrix_at(&self, point: &[Rational]) -> Result<RationalMatrix, AlgebraError> {
        let fields: Vec<&PolyVectorField> = self.xi.iter().chain(&self.eta).collect();
        let m = fields.len();
        let mut out = RationalMatrix::zeros(m, m);
        for (k, f) in fields.iter().enumerate() {
            for (i, v) in f.evaluate(point)?.into_iter().enumerate() {
                out.set(i, k, v);
            }
        }
        Ok(out)
    }
}

pub fn build_frame(ng: &NormalizedGerm) -> Result<AdaptedFrame, GermError> {
    build_frame_truncated(ng, None)
}

pub fn build_frame_truncated(ng: &NormalizedGerm, max: Option<u32>) -> Result<AdaptedFrame, GermError> {
    let g = &ng.germ;
    let n = g.n();
    let mut frame = AdaptedFrame::cramer(g.context(), &g.components()[..n - 1], &ng.pivots, &ng.kernel_vars, max)?;
    frame.target_change = ng.target_change.clone();
    if frame.valid_locus_note.evaluate(&g.origin())?.is_zero() {
        return Err(GermError::Malformed("pivot minor vanishes at the origin".into()));
    }
    Ok(frame)
}
