//! Map germs, corank checks and linear normalization.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::context::{same_context, Ctx};
use crate::error::{AlgebraError, GermError};
use crate::matrix::{PolyMatrix, RationalMatrix};
use crate::poly::Polynomial;
use crate::rational::Rational;

/// Polynomial map germ (ℝᵐ,0) → (ℝⁿ,0) over the source variables of its context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapGerm {
    ctx: Ctx,
    components: Vec<Polynomial>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GermRank {
    Regular,
    Corank1,
    CorankHigh,
}

impl MapGerm {
    pub fn new(ctx: &Ctx, components: Vec<Polynomial>) -> Result<Self, GermError> {
        let m = ctx.source_count();
        let n = components.len();
        if n == 0 {
            return Err(GermError::Malformed("no components".into()));
        }
        if m <= n {
            return Err(GermError::Malformed(format!(
                "source dimension {m} must exceed target dimension {n}"
            )));
        }
        for (i, c) in components.iter().enumerate() {
            if !same_context(c.context(), ctx) {
                return Err(AlgebraError::ContextMismatch.into());
            }
            if !c.source_constant_part().is_zero() {
                return Err(GermError::Malformed(format!(
                    "component {} does not vanish at the origin",
                    i + 1
                )));
            }
        }
        Ok(MapGerm {
            ctx: ctx.clone(),
            components,
        })
    }

    /// The germ of `components` at `point` (source coordinates in context
    /// order), moved to the origin: x ↦ f(x + p) − f(p).
    pub fn at_point(ctx: &Ctx, components: Vec<Polynomial>, point: &[Rational]) -> Result<Self, GermError> {
        let src = ctx.source_indices();
        if point.len() != src.len() {
            return Err(GermError::Malformed(format!(
                "base point has {} coordinates, expected {}",
                point.len(),
                src.len()
            )));
        }
        if point.iter().all(Rational::is_zero) {
            let shifted = components.iter().map(|c| c - &c.source_constant_part()).collect();
            return Self::new(ctx, shifted);
        }
        let mut bindings = HashMap::new();
        for (&i, p) in src.iter().zip(point) {
            bindings.insert(i, &Polynomial::var(ctx, i) + &Polynomial::constant(ctx, p.clone()));
        }
        let shifted = components
            .iter()
            .map(|c| {
                let s = c.substitute(ctx, &bindings)?;
                Ok(&s - &s.source_constant_part())
            })
            .collect::<Result<Vec<_>, AlgebraError>>()?;
        Self::new(ctx, shifted)
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn m(&self) -> usize {
        self.ctx.source_count()
    }

    pub fn n(&self) -> usize {
        self.components.len()
    }

    pub fn source_vars(&self) -> Vec<usize> {
        self.ctx.source_indices()
    }

    /// Substitutes values for parameters (by name); the context is kept.
    pub fn bind_parameters(&self, values: &[(&str, Rational)]) -> Result<Self, GermError> {
        let mut b = Vec::new();
        for (name, v) in values {
            let i = self.ctx.index_of(name)?;
            if self.ctx.is_source(i) {
                return Err(GermError::Malformed(format!("`{name}` is not a parameter")));
            }
            b.push((i, v.clone()));
        }
        Self::new(&self.ctx, self.components.iter().map(|c| c.bind(&b)).collect())
    }

    /// Parameters that still occur in some component.
    pub fn free_parameters(&self) -> Vec<String> {
        self.ctx
            .parameter_indices()
            .into_iter()
            .filter(|&i| self.components.iter().any(|c| c.terms().any(|(e, _)| e[i] > 0)))
            .map(|i| self.ctx.name(i).to_string())
            .collect()
    }

    pub fn require_parameter_free(&self) -> Result<(), GermError> {
        let free = self.free_parameters();
        if free.is_empty() {
            Ok(())
        } else {
            Err(GermError::UnboundParameters(free))
        }
    }

    pub fn origin(&self) -> Vec<Rational> {
        vec![Rational::zero(); self.ctx.len()]
    }

    pub fn jacobian(&self) -> PolyMatrix {
        PolyMatrix::jacobian(&self.ctx, &self.components, &self.source_vars())
    }

    /// df₀ as an n×m rational matrix.
    pub fn jacobian_at_origin(&self) -> Result<RationalMatrix, GermError> {
        self.require_parameter_free()?;
        Ok(self.jacobian().evaluate(&self.origin())?)
    }

    /// df at a point given in source coordinates.
    pub fn jacobian_at(&self, point: &[Rational]) -> Result<RationalMatrix, GermError> {
        self.require_parameter_free()?;
        let src = self.source_vars();
        if point.len() != src.len() {
            return Err(GermError::Malformed(format!(
                "point has {} coordinates, expected {}",
                point.len(),
                src.len()
            )));
        }
        let mut full = self.origin();
        for (&i, v) in src.iter().zip(point) {
            full[i] = v.clone();
        }
        Ok(self.jacobian().evaluate(&full)?)
    }

    /// Applies the target change g = T·f.
    pub fn target_change(&self, t: &RationalMatrix) -> Result<Self, GermError> {
        if t.rows() != self.n() || t.cols() != self.n() {
            return Err(AlgebraError::DimensionMismatch("target change size".into()).into());
        }
        let comps = (0..self.n())
            .map(|i| {
                self.components
                    .iter()
                    .enumerate()
                    .fold(Polynomial::zero(&self.ctx), |acc, (j, c)| &acc + &c.scale(t.get(i, j)))
            })
            .collect();
        Self::new(&self.ctx, comps)
    }

    /// Composition with a source change x ↦ φ(x), φ given per source
    /// variable (context order). Optionally truncated to source degree `max`.
    pub fn compose_source(&self, phi: &[Polynomial], max: Option<u32>) -> Result<Self, GermError> {
        let src = self.source_vars();
        if phi.len() != src.len() {
            return Err(AlgebraError::DimensionMismatch("source change size".into()).into());
        }
        let bindings: HashMap<usize, Polynomial> = src.iter().copied().zip(phi.iter().cloned()).collect();
        let comps = self
            .components
            .iter()
            .map(|c| match max {
                Some(m) => c.substitute_truncated(&self.ctx, &bindings, m),
                None => c.substitute(&self.ctx, &bindings),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(&self.ctx, comps)
    }

    pub fn truncate(&self, max: u32) -> Self {
        MapGerm {
            ctx: self.ctx.clone(),
            components: self.components.iter().map(|c| c.truncate(max)).collect(),
        }
    }
}

/// Rank of df at 0: Regular (n), Corank1 (n−1) or CorankHigh.
pub fn validate(g: &MapGerm) -> Result<GermRank, GermError> {
    let r = g.jacobian_at_origin()?.rank();
    Ok(if r == g.n() {
        GermRank::Regular
    } else if r + 1 == g.n() {
        GermRank::Corank1
    } else {
        GermRank::CorankHigh
    })
}

/// A corank-one germ after the target change making d(fₙ)₀ = 0.
#[derive(Clone, Debug)]
pub struct NormalizedGerm {
    pub germ: MapGerm,
    pub target_change: RationalMatrix,
    /// Context indices of the pivot source variables, one per leading component.
    pub pivots: Vec<usize>,
    /// Remaining source variables in context order.
    pub kernel_vars: Vec<usize>,
    pub last_component_critical: bool,
}

impl NormalizedGerm {
    /// Pivot variables followed by the kernel variables.
    pub fn source_order(&self) -> Vec<usize> {
        self.pivots.iter().chain(&self.kernel_vars).copied().collect()
    }
}

pub fn normalize(g: &MapGerm) -> Result<NormalizedGerm, GermError> {
    normalize_with_order(g, &g.source_vars())
}

/// Normalization with pivot columns searched in `column_order`
/// (a permutation of the source variables' context indices).
pub fn normalize_with_order(g: &MapGerm, column_order: &[usize]) -> Result<NormalizedGerm, GermError> {
    let rank = validate(g)?;
    if rank != GermRank::Corank1 {
        return Err(GermError::NotCorank1(rank));
    }
    let src = g.source_vars();
    let mut order = column_order.to_vec();
    order.sort_unstable();
    if order != src {
        return Err(GermError::Malformed("column order is not a permutation of the source variables".into()));
    }
    let n = g.n();
    let j0 = g.jacobian_at_origin()?;
    // Column position of context variable v inside the Jacobian.
    let col_of: HashMap<usize, usize> = src.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let mut a = j0.to_rows();
    let mut t = RationalMatrix::identity(n).to_rows();
    let mut pivots = Vec::new();
    let mut r = 0;
    for &v in column_order {
        if r == n - 1 {
            break;
        }
        let c = col_of[&v];
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        t.swap(p, r);
        for i in r + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].checked_div(&a[r][c])?;
            for k in 0..a[i].len() {
                let v = &a[i][k] - &(&f * &a[r][k]);
                a[i][k] = v;
            }
            for k in 0..n {
                let v = &t[i][k] - &(&f * &t[r][k]);
                t[i][k] = v;
            }
        }
        pivots.push(v);
        r += 1;
    }
    let target_change = RationalMatrix::from_rows(t)?;
    let germ = g.target_change(&target_change)?;
    let last_component_critical = a[n - 1].iter().all(Rational::is_zero);
    debug_assert!(last_component_critical);
    let kernel_vars = src.iter().copied().filter(|v| !pivots.contains(v)).collect();
    Ok(NormalizedGerm {
        germ,
        target_change,
        pivots,
        kernel_vars,
        last_component_critical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::VariableContext;

    fn xyz() -> Ctx {
        VariableContext::sources(&["x", "y", "z"]).unwrap()
    }

    fn v(c: &Ctx, n: &str) -> Polynomial {
        Polynomial::var_named(c, n).unwrap()
    }

    #[test]
    fn validate_examples() {
        let c = xyz();
        let g = MapGerm::new(&c, vec![v(&c, "x"), v(&c, "y")]).unwrap();
        assert_eq!(validate(&g).unwrap(), GermRank::Regular);
        let q = &v(&c, "y").pow(2) + &v(&c, "z").pow(2);
        let g = MapGerm::new(&c, vec![v(&c, "x"), q]).unwrap();
        assert_eq!(validate(&g).unwrap(), GermRank::Corank1);
    }

    #[test]
    fn rejects_nonvanishing_component() {
        let c = xyz();
        let one = &v(&c, "x") + &Polynomial::one(&c);
        assert!(matches!(
            MapGerm::new(&c, vec![one, v(&c, "y")]),
            Err(GermError::Malformed(_))
        ));
        assert!(MapGerm::new(&c, vec![v(&c, "x"), v(&c, "y"), v(&c, "z")]).is_err());
    }

    #[test]
    fn lefschetz_origin_is_corank_high() {
        let c = VariableContext::sources(&["x1", "x2", "y1", "y2"]).unwrap();
        let p = &(&v(&c, "x1") * &v(&c, "x2")) - &(&v(&c, "y1") * &v(&c, "y2"));
        let q = &(&v(&c, "x1") * &v(&c, "y2")) + &(&v(&c, "x2") * &v(&c, "y1"));
        let g = MapGerm::new(&c, vec![p, q]).unwrap();
        assert_eq!(validate(&g).unwrap(), GermRank::CorankHigh);
        assert!(matches!(normalize(&g), Err(GermError::NotCorank1(GermRank::CorankHigh))));
    }

    #[test]
    fn normalized_fold_is_unchanged() {
        let c = xyz();
        let q = &v(&c, "y").pow(2) + &v(&c, "z").pow(2);
        let g = MapGerm::new(&c, vec![v(&c, "x"), q]).unwrap();
        let ng = normalize(&g).unwrap();
        assert_eq!(ng.target_change, RationalMatrix::identity(2));
        assert_eq!(ng.germ, g);
        assert!(ng.last_component_critical);
        assert_eq!(ng.pivots, vec![0]);
        assert_eq!(ng.kernel_vars, vec![1, 2]);
    }

    #[test]
    fn elimination_makes_last_component_critical() {
        let c = xyz();
        let q = &v(&c, "y").pow(2) + &v(&c, "z").pow(2);
        let f1 = &(&v(&c, "x") + &v(&c, "y")) + &q;
        let f2 = &(&v(&c, "x").scale(&Rational::from(2)) + &v(&c, "y").scale(&Rational::from(2))) + &v(&c, "z").pow(3);
        let g = MapGerm::new(&c, vec![f1, f2]).unwrap();
        let ng = normalize(&g).unwrap();
        let d = ng.germ.jacobian_at_origin().unwrap();
        assert!(d.row(1).iter().all(Rational::is_zero));
        assert_eq!(ng.target_change.to_rows()[1], vec![Rational::from(-2), Rational::one()]);
    }

    #[test]
    fn translation_to_base_point() {
        let c = VariableContext::sources(&["x", "y"]).unwrap();
        let f = &v(&c, "x").pow(2) + &v(&c, "y");
        let g = MapGerm::at_point(&c, vec![f], &[Rational::from(1), Rational::from(2)]).unwrap();
        assert_eq!(g.components()[0].to_string(), "x^2 + 2*x + y");
    }
}
