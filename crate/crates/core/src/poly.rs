//! Sparse multivariate polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::context::{same_context, Ctx, Role};
use crate::error::AlgebraError;
use crate::rational::Rational;

/// Dense exponent vector in context order.
pub type Exponents = Vec<u32>;

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ctx: Ctx,
    terms: BTreeMap<Exponents, Rational>,
}

impl Polynomial {
    pub fn zero(ctx: &Ctx) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: &Ctx, c: Rational) -> Self {
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(vec![0; ctx.len()], c);
        }
        p
    }

    /// The coordinate function of the variable at context index `i`.
    pub fn var(ctx: &Ctx, i: usize) -> Self {
        assert!(i < ctx.len(), "variable index out of range");
        let mut e = vec![0; ctx.len()];
        e[i] = 1;
        Self::monomial(ctx, e, Rational::one())
    }

    pub fn var_named(ctx: &Ctx, name: &str) -> Result<Self, AlgebraError> {
        Ok(Self::var(ctx, ctx.index_of(name)?))
    }

    pub fn monomial(ctx: &Ctx, exps: Exponents, c: Rational) -> Self {
        assert_eq!(exps.len(), ctx.len(), "exponent vector length");
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn from_terms(ctx: &Ctx, terms: impl IntoIterator<Item = (Exponents, Rational)>) -> Self {
        let mut p = Self::zero(ctx);
        for (e, c) in terms {
            assert_eq!(e.len(), ctx.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&vec![0; self.ctx.len()])
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn source_degree_of(&self, e: &[u32]) -> u32 {
        e.iter()
            .enumerate()
            .filter(|(i, _)| self.ctx.is_source(*i))
            .map(|(_, x)| *x)
            .sum()
    }

    /// Highest total degree in the source variables.
    pub fn source_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| self.source_degree_of(e)).max()
    }

    /// Lowest total degree in the source variables (vanishing order at 0).
    pub fn source_order(&self) -> Option<u32> {
        self.terms.keys().map(|e| self.source_degree_of(e)).min()
    }

    /// Part of degree 0 in the source variables.
    pub fn source_constant_part(&self) -> Polynomial {
        self.truncate(0)
    }

    /// Drops every term whose source degree exceeds `max`.
    pub fn truncate(&self, max: u32) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| self.source_degree_of(e) <= max)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    fn check(&self, other: &Polynomial) -> Result<(), AlgebraError> {
        if same_context(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(AlgebraError::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check(other)?;
        Ok(self.mul_impl(other, None))
    }

    /// Product with every term of source degree above `max` discarded.
    pub fn mul_truncated(&self, other: &Polynomial, max: u32) -> Polynomial {
        self.check(other).expect("context mismatch");
        self.mul_impl(other, Some(max))
    }

    fn mul_impl(&self, other: &Polynomial, max: Option<u32>) -> Polynomial {
        let mut acc: HashMap<Exponents, Rational> = HashMap::new();
        let degs_b: Vec<u32> = other.terms.keys().map(|e| self.source_degree_of(e)).collect();
        for (ea, ca) in &self.terms {
            let da = self.source_degree_of(ea);
            for ((eb, cb), db) in other.terms.iter().zip(&degs_b) {
                if let Some(m) = max {
                    if da + db > m {
                        continue;
                    }
                }
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let c = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v += &c,
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        self.pow_impl(k, None)
    }

    pub fn pow_truncated(&self, k: u32, max: u32) -> Polynomial {
        self.pow_impl(k, Some(max))
    }

    fn pow_impl(&self, mut k: u32, max: Option<u32>) -> Polynomial {
        let mut result = Polynomial::one(&self.ctx);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul_impl(&base, max);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_impl(&base, max);
            }
        }
        match max {
            Some(m) => result.truncate(m),
            None => result,
        }
    }

    /// Formal partial derivative with respect to context variable `i`.
    pub fn partial(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.ctx);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.terms.insert(e2, c * Rational::from_integer(e[i]));
        }
        out
    }

    pub fn partial_named(&self, name: &str) -> Result<Polynomial, AlgebraError> {
        Ok(self.partial(self.ctx.index_of(name)?))
    }

    /// Exact value at a full assignment given in context order.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, AlgebraError> {
        if point.len() != self.ctx.len() {
            let missing = self.ctx.names().get(point.len()).cloned().unwrap_or_default();
            return Err(AlgebraError::MissingAssignment(missing));
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= &x.pow(k);
                }
            }
            total += &t;
        }
        Ok(total)
    }

    /// Exact value at an assignment given by variable name.
    pub fn evaluate_named(&self, point: &HashMap<String, Rational>) -> Result<Rational, AlgebraError> {
        let values = self
            .ctx
            .names()
            .iter()
            .map(|n| {
                point
                    .get(n)
                    .cloned()
                    .ok_or_else(|| AlgebraError::MissingAssignment(n.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.evaluate(&values)
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(c.to_f64(), |acc, (&k, &x)| acc * x.powi(k as i32))
            })
            .sum()
    }

    /// Replaces the listed variables by constants; the context is unchanged.
    pub fn bind(&self, values: &[(usize, Rational)]) -> Polynomial {
        let mut out = Polynomial::zero(&self.ctx);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let mut c2 = c.clone();
            for (i, v) in values {
                if e2[*i] > 0 {
                    c2 *= &v.pow(e2[*i]);
                    e2[*i] = 0;
                }
            }
            out.add_term(e2, c2);
        }
        out
    }

    /// Composition: every variable with a binding is replaced by it; the
    /// remaining variables are carried over by name into the bindings'
    /// context `target`.
    pub fn substitute(&self, target: &Ctx, bindings: &HashMap<usize, Polynomial>) -> Result<Polynomial, AlgebraError> {
        self.substitute_impl(target, bindings, None)
    }

    /// Composition truncated to source degree `max` in the target context.
    pub fn substitute_truncated(
        &self,
        target: &Ctx,
        bindings: &HashMap<usize, Polynomial>,
        max: u32,
    ) -> Result<Polynomial, AlgebraError> {
        self.substitute_impl(target, bindings, Some(max))
    }

    fn substitute_impl(
        &self,
        target: &Ctx,
        bindings: &HashMap<usize, Polynomial>,
        max: Option<u32>,
    ) -> Result<Polynomial, AlgebraError> {
        let mut images = Vec::with_capacity(self.ctx.len());
        for i in 0..self.ctx.len() {
            match bindings.get(&i) {
                Some(b) => {
                    if !same_context(b.context(), target) {
                        return Err(AlgebraError::ContextMismatch);
                    }
                    images.push(b.clone());
                }
                None => {
                    let j = target.index_of(self.ctx.name(i))?;
                    images.push(Polynomial::var(target, j));
                }
            }
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .into_iter()
            .map(|p| vec![Polynomial::one(target), p])
            .collect();
        let mut out = Polynomial::zero(target);
        for (e, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().mul_impl(&powers[i][1], max);
                    powers[i].push(next);
                }
                t = t.mul_impl(&powers[i][k as usize], max);
                if t.is_zero() {
                    break;
                }
            }
            for (e2, c2) in t.terms {
                out.add_term(e2, c2);
            }
        }
        Ok(out)
    }

    /// Re-expresses the polynomial in another context, matching variables by name.
    pub fn embed(&self, target: &Ctx) -> Result<Polynomial, AlgebraError> {
        let map = (0..self.ctx.len())
            .map(|i| target.index_of(self.ctx.name(i)))
            .collect::<Result<Vec<_>, _>>()?;
        let mut out = Polynomial::zero(target);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; target.len()];
            for (i, &k) in e.iter().enumerate() {
                e2[map[i]] += k;
            }
            out.add_term(e2, c.clone());
        }
        Ok(out)
    }

    /// Canonical monomial order, greatest first: source degree, source
    /// exponents lexicographically, parameter degree, parameter exponents.
    pub fn cmp_monomials(&self, a: &[u32], b: &[u32]) -> Ordering {
        let key = |e: &[u32], role: Role| -> (u32, Vec<u32>) {
            let v: Vec<u32> = e
                .iter()
                .enumerate()
                .filter(|(i, _)| self.ctx.role(*i) == role)
                .map(|(_, x)| *x)
                .collect();
            (v.iter().sum(), v)
        };
        key(a, Role::Source)
            .cmp(&key(b, Role::Source))
            .then_with(|| key(a, Role::Parameter).cmp(&key(b, Role::Parameter)))
    }

    /// Terms in canonical order, leading term first.
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| self.cmp_monomials(b.0, a.0));
        v
    }

    pub fn leading_term(&self) -> Option<(&Exponents, &Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| self.cmp_monomials(a.0, b.0))
    }

    /// Multivariate division by a single divisor in the canonical order.
    /// Returns (quotient, remainder).
    pub fn div_rem(&self, d: &Polynomial) -> Result<(Polynomial, Polynomial), AlgebraError> {
        self.check(d)?;
        let (ld, lc) = match d.leading_term() {
            Some((e, c)) => (e.clone(), c.clone()),
            None => return Err(AlgebraError::DivisionByZero),
        };
        let mut q = Polynomial::zero(&self.ctx);
        let mut rem = Polynomial::zero(&self.ctx);
        let mut p = self.clone();
        while let Some((e, c)) = p.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&ld).all(|(a, b)| a >= b) {
                let qe: Exponents = e.iter().zip(&ld).map(|(a, b)| a - b).collect();
                let qc = &c / &lc;
                let t = Polynomial::monomial(&self.ctx, qe, qc);
                p = &p - &t.mul_impl(d, None);
                q.add_term(t.terms.keys().next().unwrap().clone(), t.terms.values().next().unwrap().clone());
            } else {
                p.terms.remove(&e);
                rem.add_term(e, c);
            }
        }
        Ok((q, rem))
    }

    pub fn div_exact(&self, d: &Polynomial) -> Result<Polynomial, AlgebraError> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(AlgebraError::NonExactDivision)
        }
    }

    pub fn divides(&self, p: &Polynomial) -> bool {
        matches!(p.div_rem(self), Ok((_, r)) if r.is_zero())
    }

    /// Rational gcd of all coefficients, signed like the leading coefficient.
    pub fn content(&self) -> Rational {
        let g = self
            .terms
            .values()
            .fold(Rational::zero(), |acc, c| acc.gcd(c));
        match self.leading_term() {
            Some((_, c)) if c.is_negative() => -g,
            _ => g,
        }
    }

    /// Integer-coefficient, coprime, positive-leading-coefficient associate.
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        self.scale(&c.recip().expect("nonzero content"))
    }

    /// Removes every factor `f` (to any power) that divides exactly.
    pub fn remove_factor(&self, f: &Polynomial) -> (Polynomial, u32) {
        let mut p = self.clone();
        let mut k = 0;
        if f.is_constant() || p.is_zero() {
            return (p, 0);
        }
        while let Ok(q) = p.div_exact(f) {
            p = q;
            k += 1;
        }
        (p, k)
    }

    /// True when `self = c · other` for a nonzero rational `c`.
    pub fn is_associate(&self, other: &Polynomial) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.primitive_part() == other.primitive_part()
    }

    fn render_monomial(&self, e: &[u32], out: &mut String) {
        let mut first = true;
        let order = self
            .ctx
            .parameter_indices()
            .into_iter()
            .chain(self.ctx.source_indices());
        for i in order {
            let k = e[i];
            if k == 0 {
                continue;
            }
            if !first {
                out.push('*');
            }
            first = false;
            out.push_str(self.ctx.name(i));
            if k > 1 {
                out.push('^');
                out.push_str(&k.to_string());
            }
        }
    }
}

impl fmt::Display for Polynomial {
    /// Canonical rendering: `x2^2 + y2^2 + a1*x2 + b1*y2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let is_const = e.iter().all(|&k| k == 0);
            if is_const {
                out.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    out.push_str(&a.to_string());
                    out.push('*');
                }
                self.render_monomial(e, &mut out);
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    /// Panics on mismatched contexts; see `checked_add`.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("context mismatch")
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("context mismatch")
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("context mismatch")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Jacobian rows `∂p/∂v` for the given context variables.
pub fn gradient(p: &Polynomial, vars: &[usize]) -> Vec<Polynomial> {
    vars.iter().map(|&v| p.partial(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::VariableContext;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn lef_ctx() -> Ctx {
        VariableContext::with_parameters(&["x1", "x2", "y1", "y2"], &["a1", "a2", "b1", "b2"]).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let c = VariableContext::sources(&["x", "y"]).unwrap();
        let x = Polynomial::var(&c, 0);
        let y = Polynomial::var(&c, 1);
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p, &x.pow(2) - &y.pow(2));
        assert_eq!(&p + &Polynomial::zero(&c), p);
    }

    #[test]
    fn lefschetz_sum_and_derivative() {
        let c = lef_ctx();
        let v = |n: &str| Polynomial::var_named(&c, n).unwrap();
        let l = &(&v("x1") * &v("x2")) - &(&v("y1") * &v("y2"));
        let lin = &(&v("a1") * &v("x1")) + &(&v("a2") * &v("x2"));
        assert_eq!((&l + &lin).to_string(), "x1*x2 - y1*y2 + a1*x1 + a2*x2");
        assert_eq!(l.partial_named("x1").unwrap(), v("x2"));
    }

    #[test]
    fn derivative_basics() {
        let c = VariableContext::sources(&["x", "y"]).unwrap();
        let x = Polynomial::var(&c, 0);
        let y = Polynomial::var(&c, 1);
        let p = &x.pow(2) * &y;
        assert_eq!(p.partial(0), (&x * &y).scale(&r(2, 1)));
        assert!(Polynomial::constant(&c, r(5, 1)).partial(0).is_zero());
        assert!(p.partial_named("w").is_err());
    }

    #[test]
    fn evaluation() {
        let c = VariableContext::sources(&["x", "z"]).unwrap();
        let x = Polynomial::var(&c, 0);
        let z = Polynomial::var(&c, 1);
        let p = &z.pow(2).scale(&r(3, 1)) + &x;
        assert_eq!(p.evaluate(&[r(1, 2), r(1, 3)]).unwrap(), r(5, 6));
        let q = &x.pow(2) + &Polynomial::one(&c);
        assert_eq!(q.evaluate(&[r(0, 1), r(0, 1)]).unwrap(), r(1, 1));
        assert!(q.evaluate(&[r(0, 1)]).is_err());
        let mut named = HashMap::new();
        named.insert("x".to_string(), r(1, 1));
        assert_eq!(
            q.evaluate_named(&named),
            Err(AlgebraError::MissingAssignment("z".into()))
        );
    }

    #[test]
    fn substitution() {
        let c = VariableContext::sources(&["x"]).unwrap();
        let t = VariableContext::sources(&["u"]).unwrap();
        let u = Polynomial::var(&t, 0);
        let mut b = HashMap::new();
        b.insert(0, &u + &Polynomial::one(&t));
        let p = Polynomial::var(&c, 0).pow(2);
        let s = p.substitute(&t, &b).unwrap();
        assert_eq!(s.to_string(), "u^2 + 2*u + 1");
        let id: HashMap<usize, Polynomial> = HashMap::new();
        assert_eq!(p.substitute(&c, &id).unwrap(), p);
    }

    #[test]
    fn rendering_block_order() {
        let c = lef_ctx();
        let v = |n: &str| Polynomial::var_named(&c, n).unwrap();
        let p = &(&(&v("b1") * &v("y2")) + &v("x2").pow(2)) + &(&(&v("a1") * &v("x2")) + &v("y2").pow(2));
        assert_eq!(p.to_string(), "x2^2 + y2^2 + a1*x2 + b1*y2");
        let q = v("x1").scale(&r(-1, 2));
        assert_eq!(q.to_string(), "-1/2*x1");
        assert_eq!(Polynomial::zero(&c).to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let c = VariableContext::sources(&["x", "y"]).unwrap();
        let x = Polynomial::var(&c, 0);
        let y = Polynomial::var(&c, 1);
        let a = &x + &y;
        let b = &(&x.pow(2) + &y.scale(&r(3, 1))) - &Polynomial::one(&c);
        let p = &a * &b;
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert!((&p + &Polynomial::one(&c)).div_exact(&a).is_err());
        assert_eq!(p.remove_factor(&a), (b.clone(), 1));
        assert!(p.scale(&r(-3, 7)).is_associate(&p));
    }

    #[test]
    fn truncated_product_matches_full_then_truncate() {
        let c = VariableContext::sources(&["x", "y"]).unwrap();
        let x = Polynomial::var(&c, 0);
        let y = Polynomial::var(&c, 1);
        let a = &(&x + &y.pow(2)) + &Polynomial::one(&c);
        let b = &x.pow(3) - &y;
        assert_eq!(a.mul_truncated(&b, 2), (&a * &b).truncate(2));
        assert_eq!(a.pow_truncated(4, 3), a.pow(4).truncate(3));
    }

    #[test]
    fn content_and_primitive() {
        let c = VariableContext::sources(&["x"]).unwrap();
        let x = Polynomial::var(&c, 0);
        let p = &x.scale(&r(-2, 3)) + &Polynomial::constant(&c, r(4, 9));
        assert_eq!(p.content(), r(-2, 9));
        assert_eq!(p.primitive_part().to_string(), "3*x - 2");
    }
}
