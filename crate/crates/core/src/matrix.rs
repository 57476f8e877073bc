//! Exact polynomial and rational matrices.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::context::Ctx;
use crate::error::AlgebraError;
use crate::poly::Polynomial;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    ctx: Ctx,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(ctx: &Ctx, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self, AlgebraError> {
        if entries.len() != rows * cols {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|e| !crate::context::same_context(e.context(), ctx)) {
            return Err(AlgebraError::ContextMismatch);
        }
        Ok(PolyMatrix {
            ctx: ctx.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(ctx: &Ctx, rows: Vec<Vec<Polynomial>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::DimensionMismatch("ragged rows".into()));
        }
        Self::new(ctx, r, c, rows.into_iter().flatten().collect())
    }

    /// Matrix whose j-th column is `cols[j]`.
    pub fn from_columns(ctx: &Ctx, cols: &[Vec<Polynomial>]) -> Result<Self, AlgebraError> {
        let c = cols.len();
        let r = cols.first().map_or(0, |col| col.len());
        if cols.iter().any(|col| col.len() != r) {
            return Err(AlgebraError::DimensionMismatch("ragged columns".into()));
        }
        let mut entries = Vec::with_capacity(r * c);
        for i in 0..r {
            for col in cols {
                entries.push(col[i].clone());
            }
        }
        Self::new(ctx, r, c, entries)
    }

    pub fn identity(ctx: &Ctx, n: usize) -> Self {
        let entries = (0..n * n)
            .map(|k| {
                if k / n == k % n {
                    Polynomial::one(ctx)
                } else {
                    Polynomial::zero(ctx)
                }
            })
            .collect();
        PolyMatrix {
            ctx: ctx.clone(),
            rows: n,
            cols: n,
            entries,
        }
    }

    /// Jacobian of `polys` with respect to the context variables `vars`.
    pub fn jacobian(ctx: &Ctx, polys: &[Polynomial], vars: &[usize]) -> Self {
        let entries = polys
            .iter()
            .flat_map(|p| vars.iter().map(move |&v| p.partial(v)))
            .collect();
        PolyMatrix {
            ctx: ctx.clone(),
            rows: polys.len(),
            cols: vars.len(),
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            ctx: self.ctx.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<Self, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ctx);
                for k in 0..self.cols {
                    acc = &acc + &self.get(i, k).checked_mul(other.get(k, j))?;
                }
                entries.push(acc);
            }
        }
        Ok(PolyMatrix {
            ctx: self.ctx.clone(),
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    pub fn scale(&self, p: &Polynomial) -> Self {
        PolyMatrix {
            ctx: self.ctx.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * p).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        PolyMatrix {
            ctx: self.ctx.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<RationalMatrix, AlgebraError> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.evaluate(point))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    fn square(&self) -> Result<usize, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    /// Exact determinant: cofactor expansion up to 4x4, Bareiss above.
    pub fn determinant(&self) -> Result<Polynomial, AlgebraError> {
        let n = self.square()?;
        if n <= 4 {
            Ok(self.laplace(None))
        } else {
            self.bareiss()
        }
    }

    /// Determinant modulo terms of source degree above `max`. Always uses
    /// cofactor expansion since Bareiss divisions do not commute with
    /// truncation.
    pub fn determinant_truncated(&self, max: u32) -> Result<Polynomial, AlgebraError> {
        self.square()?;
        Ok(self.laplace(Some(max)))
    }

    /// Determinant by cofactor expansion regardless of size.
    pub fn determinant_cofactor(&self) -> Result<Polynomial, AlgebraError> {
        self.square()?;
        Ok(self.laplace(None))
    }

    fn laplace(&self, max: Option<u32>) -> Polynomial {
        let idx: Vec<usize> = (0..self.rows).collect();
        self.laplace_sub(&idx, &idx, max)
    }

    fn laplace_sub(&self, rows: &[usize], cols: &[usize], max: Option<u32>) -> Polynomial {
        let mul = |a: &Polynomial, b: &Polynomial| match max {
            Some(m) => a.mul_truncated(b, m),
            None => a * b,
        };
        match rows.len() {
            0 => Polynomial::one(&self.ctx),
            1 => {
                let e = self.get(rows[0], cols[0]);
                match max {
                    Some(m) => e.truncate(m),
                    None => e.clone(),
                }
            }
            2 => {
                let a = mul(self.get(rows[0], cols[0]), self.get(rows[1], cols[1]));
                let b = mul(self.get(rows[0], cols[1]), self.get(rows[1], cols[0]));
                &a - &b
            }
            _ => {
                let mut acc = Polynomial::zero(&self.ctx);
                let r0 = rows[0];
                let sub_rows = &rows[1..];
                for (k, &c) in cols.iter().enumerate() {
                    let e = self.get(r0, c);
                    if e.is_zero() {
                        continue;
                    }
                    let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let minor = self.laplace_sub(sub_rows, &sub_cols, max);
                    let t = mul(e, &minor);
                    acc = if k % 2 == 0 { &acc + &t } else { &acc - &t };
                }
                acc
            }
        }
    }

    /// Fraction-free elimination in the polynomial ring.
    fn bareiss(&self) -> Result<Polynomial, AlgebraError> {
        let n = self.rows;
        let mut a: Vec<Vec<Polynomial>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = 1;
        let mut prev = Polynomial::one(&self.ctx);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(Polynomial::zero(&self.ctx)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev)?;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if sign < 0 { -d } else { d })
    }

    pub fn minor(&self, skip_row: usize, skip_col: usize) -> PolyMatrix {
        let mut entries = Vec::new();
        for i in (0..self.rows).filter(|&i| i != skip_row) {
            for j in (0..self.cols).filter(|&j| j != skip_col) {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            ctx: self.ctx.clone(),
            rows: self.rows - 1,
            cols: self.cols - 1,
            entries,
        }
    }

    /// Classical adjoint: adj(M)·M = M·adj(M) = det(M)·I.
    pub fn adjugate(&self) -> Result<PolyMatrix, AlgebraError> {
        self.adjugate_impl(None)
    }

    pub fn adjugate_truncated(&self, max: u32) -> Result<PolyMatrix, AlgebraError> {
        self.adjugate_impl(Some(max))
    }

    fn adjugate_impl(&self, max: Option<u32>) -> Result<PolyMatrix, AlgebraError> {
        let n = self.square()?;
        if n == 1 {
            return Ok(PolyMatrix::identity(&self.ctx, 1));
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let m = self.minor(j, i);
                let d = match max {
                    Some(t) => m.determinant_truncated(t)?,
                    None => m.determinant()?,
                };
                entries.push(if (i + j) % 2 == 0 { d } else { -d });
            }
        }
        Ok(PolyMatrix {
            ctx: self.ctx.clone(),
            rows: n,
            cols: n,
            entries,
        })
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Inertia of a symmetric matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, serde::Serialize, serde::Deserialize)]
pub struct Inertia {
    pub positives: usize,
    pub negatives: usize,
    pub zeros: usize,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, AlgebraError> {
        if entries.len() != rows * cols {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(RationalMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
                .collect(),
        )
        .expect("rectangular")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose()
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<Self, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let v: Rational = (0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum();
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    /// Rows scaled to coprime integers, as input for fraction-free elimination.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect()
    }

    /// Exact rank by fraction-free (Bareiss) elimination over the integers.
    pub fn rank(&self) -> usize {
        let mut a = self.integer_rows();
        let (rows, cols) = (self.rows, self.cols);
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(p, r);
            for i in r + 1..rows {
                for j in c + 1..cols {
                    let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                    a[i][j] = v / &prev;
                }
                a[i][c] = BigInt::zero();
            }
            prev = a[r][c].clone();
            r += 1;
        }
        r
    }

    pub fn determinant(&self) -> Result<Rational, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = Rational::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != k {
                a.swap(p, k);
                det = -det;
            }
            det *= &a[k][k];
            let inv = a[k][k].recip()?;
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] * &inv;
                for j in k..n {
                    let v = &a[i][j] - &(&f * &a[k][j]);
                    a[i][j] = v;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut inv = Self::identity(n).to_rows();
        for k in 0..n {
            let p = (k..n)
                .find(|&i| !a[i][k].is_zero())
                .ok_or(AlgebraError::DivisionByZero)?;
            a.swap(p, k);
            inv.swap(p, k);
            let piv = a[k][k].recip()?;
            for j in 0..n {
                a[k][j] = &a[k][j] * &piv;
                inv[k][j] = &inv[k][j] * &piv;
            }
            for i in 0..n {
                if i == k || a[i][k].is_zero() {
                    continue;
                }
                let f = a[i][k].clone();
                for j in 0..n {
                    a[i][j] = &a[i][j] - &(&f * &a[k][j]);
                    inv[i][j] = &inv[i][j] - &(&f * &inv[k][j]);
                }
            }
        }
        Self::from_rows(inv)
    }

    /// Inertia by symmetric LDLᵀ elimination with 1x1 and 2x2 pivots.
    pub fn symmetric_signature(&self) -> Result<Inertia, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if !self.is_symmetric() {
            return Err(AlgebraError::Asymmetric);
        }
        let mut a = self.to_rows();
        let mut inertia = Inertia {
            positives: 0,
            negatives: 0,
            zeros: 0,
        };
        let count = |inertia: &mut Inertia, v: &Rational| {
            if v.is_positive() {
                inertia.positives += 1;
            } else {
                inertia.negatives += 1;
            }
        };
        while !a.is_empty() {
            let n = a.len();
            if let Some(p) = (0..n).find(|&i| !a[i][i].is_zero()) {
                let d = a[p][p].clone();
                count(&mut inertia, &d);
                let inv = d.recip()?;
                let rest: Vec<usize> = (0..n).filter(|&i| i != p).collect();
                let next = rest
                    .iter()
                    .map(|&i| {
                        rest.iter()
                            .map(|&j| &a[i][j] - &(&(&a[i][p] * &a[p][j]) * &inv))
                            .collect()
                    })
                    .collect();
                a = next;
                continue;
            }
            let pair = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero());
            let Some((p, q)) = pair else {
                inertia.zeros += n;
                break;
            };
            // Zero diagonal 2x2 block [[0, b], [b, 0]]: one positive, one negative.
            inertia.positives += 1;
            inertia.negatives += 1;
            let b = a[p][q].clone();
            let binv = b.recip()?;
            let rest: Vec<usize> = (0..n).filter(|&i| i != p && i != q).collect();
            // E⁻¹ = [[0, 1/b], [1/b, 0]]; S = C − B E⁻¹ Bᵀ.
            let next = rest
                .iter()
                .map(|&i| {
                    rest.iter()
                        .map(|&j| {
                            let t = &(&a[i][p] * &a[q][j]) + &(&a[i][q] * &a[p][j]);
                            &a[i][j] - &(&t * &binv)
                        })
                        .collect()
                })
                .collect();
            a = next;
        }
        Ok(inertia)
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(Rational::to_f64).collect())
            .collect()
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::VariableContext;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn small_determinants() {
        let c = VariableContext::sources(&["x", "y"]).unwrap();
        let x = Polynomial::var(&c, 0);
        let y = Polynomial::var(&c, 1);
        let m = PolyMatrix::from_rows(
            &c,
            vec![vec![x.clone(), Polynomial::one(&c)], vec![Polynomial::zero(&c), y.clone()]],
        )
        .unwrap();
        assert_eq!(m.determinant().unwrap(), &x * &y);
        assert_eq!(PolyMatrix::identity(&c, 3).determinant().unwrap(), Polynomial::one(&c));
        let ns = PolyMatrix::new(&c, 1, 2, vec![x.clone(), y.clone()]).unwrap();
        assert!(ns.determinant().is_err());
        assert!(ns.adjugate().is_err());
    }

    #[test]
    fn adjugate_small() {
        let c = VariableContext::sources(&["a", "b"]).unwrap();
        let a = Polynomial::var(&c, 0);
        let b = Polynomial::var(&c, 1);
        let one = PolyMatrix::from_rows(&c, vec![vec![a.clone()]]).unwrap();
        assert_eq!(one.adjugate().unwrap(), PolyMatrix::identity(&c, 1));
        let z = Polynomial::zero(&c);
        let d = PolyMatrix::from_rows(&c, vec![vec![a.clone(), z.clone()], vec![z.clone(), b.clone()]]).unwrap();
        let expect = PolyMatrix::from_rows(&c, vec![vec![b, z.clone()], vec![z, a]]).unwrap();
        assert_eq!(d.adjugate().unwrap(), expect);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RationalMatrix::from_i64(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(RationalMatrix::zeros(3, 2).rank(), 0);
        assert_eq!(RationalMatrix::from_i64(&[&[0, 2, 0], &[1, 0, 0]]).rank(), 2);
    }

    #[test]
    fn signature_examples() {
        let s = |rows: &[&[i64]]| RationalMatrix::from_i64(rows).symmetric_signature().unwrap();
        let t = |p, n, z| Inertia {
            positives: p,
            negatives: n,
            zeros: z,
        };
        assert_eq!(s(&[&[2, 0], &[0, 2]]), t(2, 0, 0));
        assert_eq!(s(&[&[2, 0], &[0, -6]]), t(1, 1, 0));
        assert_eq!(s(&[&[0, 1], &[1, 0]]), t(1, 1, 0));
        assert_eq!(s(&[&[0, 0], &[0, 0]]), t(0, 0, 2));
        assert_eq!(s(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -3]]), t(1, 2, 0));
        assert!(RationalMatrix::from_i64(&[&[0, 1], &[2, 0]]).symmetric_signature().is_err());
    }

    #[test]
    fn inverse_and_det() {
        let m = RationalMatrix::from_i64(&[&[2, 1], &[7, 4]]);
        assert_eq!(m.determinant().unwrap(), q(1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), RationalMatrix::identity(2));
    }

    #[test]
    fn bareiss_matches_cofactor_on_5x5() {
        let c = VariableContext::sources(&["x", "y"]).unwrap();
        let x = Polynomial::var(&c, 0);
        let y = Polynomial::var(&c, 1);
        let mut entries = Vec::new();
        for i in 0..25i64 {
            let p = &x.scale(&q((i * 7) % 5 - 2)) + &y.scale(&q((i * 3) % 4 - 1));
            entries.push(&p + &Polynomial::constant(&c, q(i % 3)));
        }
        let m = PolyMatrix::new(&c, 5, 5, entries).unwrap();
        assert_eq!(m.determinant().unwrap(), m.determinant_cofactor().unwrap());
    }
}
