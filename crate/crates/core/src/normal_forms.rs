//! Morin normal forms (x, q(y) + z^{k+1} + Σ xᵢzⁱ) as test fixtures.

use crate::context::{Ctx, VariableContext};
use crate::criteria::Label;
use crate::germ::MapGerm;
use crate::poly::Polynomial;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    /// Signs of the squares in q. For k = 1 the last one belongs to z².
    pub signs: Vec<i8>,
}

impl NormalForm {
    /// Source variables x1..x_{n−1}, y1..y_{m−n}, z.
    pub fn variable_names(&self) -> Vec<String> {
        let mut names: Vec<String> = (1..self.n).map(|i| format!("x{i}")).collect();
        names.extend((1..=self.m - self.n).map(|i| format!("y{i}")));
        names.push("z".into());
        names
    }

    pub fn context(&self) -> Ctx {
        let names = self.variable_names();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        VariableContext::sources(&refs).expect("distinct names")
    }

    pub fn germ(&self) -> MapGerm {
        let ctx = self.context();
        let var = |i: usize| Polynomial::var(&ctx, i);
        let n1 = self.n - 1;
        let z = var(self.m - 1);
        let mut comps: Vec<Polynomial> = (0..n1).map(var).collect();
        let mut last = Polynomial::zero(&ctx);
        for (j, &s) in self.signs.iter().enumerate() {
            let v = if j < self.m - self.n { var(n1 + j) } else { z.clone() };
            last = last + (&v * &v).scale(&Rational::from(s as i64));
        }
        if self.k > 1 {
            last = last + z.pow(self.k as u32 + 1);
        }
        for i in 1..self.k {
            last = last + &var(i - 1) * &z.pow(i as u32);
        }
        comps.push(last);
        MapGerm::new(&ctx, comps).expect("normal form is a valid germ")
    }

    pub fn expected(&self) -> Label {
        if self.k == 1 {
            let negatives = self.signs.iter().filter(|&&s| s < 0).count();
            Label::Fold {
                positives: self.signs.len() - negatives,
                negatives,
            }
        } else {
            Label::Morin { k: self.k }
        }
    }

    /// The point of S(h) with coordinate z, y = 0 and x2.. given by `free`
    /// (missing entries are 0); x1 is solved from ∂h/∂z = 0.
    pub fn singular_point(&self, z: &Rational, free: &[Rational]) -> Vec<Rational> {
        let n1 = self.n - 1;
        let mut x: Vec<Rational> = (0..n1)
            .map(|i| if i == 0 { Rational::zero() } else { free.get(i - 1).cloned().unwrap_or_default() })
            .collect();
        let two = Rational::from(2);
        // ∂z = 2·s·z (k = 1) or (k+1)z^k, plus Σ i·xᵢ·z^{i−1}.
        let mut dz = if self.k == 1 {
            &two * z * Rational::from(*self.signs.last().unwrap() as i64)
        } else {
            Rational::from(self.k as i64 + 1) * z.pow(self.k as u32)
        };
        for i in 2..self.k {
            dz += &(Rational::from(i as i64) * &x[i - 1] * z.pow(i as u32 - 1));
        }
        if self.k >= 2 {
            x[0] = -dz;
        } else if !dz.is_zero() {
            // For the fold S(h) is {y = 0, z = 0}.
            return self.singular_point(&Rational::zero(), free);
        }
        let mut p = x;
        p.extend((0..self.m - self.n).map(|_| Rational::zero()));
        p.push(z.clone());
        p
    }
}

fn sign_patterns(len: usize) -> Vec<Vec<i8>> {
    (0..1u32 << len)
        .map(|mask| (0..len).map(|j| if mask >> j & 1 == 1 { -1 } else { 1 }).collect())
        .collect()
}

/// All normal forms with k ≤ n for one (m, n), every sign pattern of q.
pub fn normal_forms(m: usize, n: usize) -> Vec<NormalForm> {
    let mut out = Vec::new();
    for k in 1..=n {
        let len = if k == 1 { m - n + 1 } else { m - n };
        for signs in sign_patterns(len) {
            out.push(NormalForm { m, n, k, signs });
        }
    }
    out
}

/// The 42 germs for (m, n) ∈ {(3,2), (4,2), (4,3), (5,3)}.
pub fn battery() -> Vec<NormalForm> {
    [(3, 2), (4, 2), (4, 3), (5, 3)]
        .into_iter()
        .flat_map(|(m, n)| normal_forms(m, n))
        .collect()
}
