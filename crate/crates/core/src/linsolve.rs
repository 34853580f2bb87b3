//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::poly::Rational;

/// A system `A u = b` with rational entries.
#[derive(Clone, Debug, Default)]
pub struct LinearSystem {
    unknowns: usize,
    rows: Vec<(Vec<Rational>, Rational)>,
}

impl LinearSystem {
    pub fn new(unknowns: usize) -> Self {
        LinearSystem {
            unknowns,
            rows: Vec::new(),
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn equations(&self) -> usize {
        self.rows.len()
    }

    /// Adds `Σ coeffs[k] u_k = rhs`; all-zero rows with zero right side are dropped.
    pub fn push(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        assert_eq!(coeffs.len(), self.unknowns, "equation length");
        if coeffs.iter().all(Zero::is_zero) && rhs.is_zero() {
            return;
        }
        self.rows.push((coeffs, rhs));
    }

    /// A particular solution with every free unknown set to zero, or `None`
    /// when the system is inconsistent.
    pub fn solve(&self) -> Option<Vec<Rational>> {
        let n = self.unknowns;
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..n {
            let Some(p) = (r..rows.len()).find(|&i| !rows[i].0[col].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = Rational::one() / &rows[r].0[col];
            for v in rows[r].0.iter_mut() {
                *v *= &inv;
            }
            rows[r].1 *= &inv;
            let (pivot_row, pivot_rhs) = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row.0[col].is_zero() {
                    continue;
                }
                let f = row.0[col].clone();
                for (v, pv) in row.0.iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
                row.1 -= &f * &pivot_rhs;
            }
            pivots.push(col);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        if rows[r..].iter().any(|row| !row.1.is_zero()) {
            return None;
        }
        let mut sol = vec![Rational::zero(); n];
        for (i, &col) in pivots.iter().enumerate() {
            sol[col] = rows[i].1.clone();
        }
        Some(sol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn unique_solution() {
        let mut s = LinearSystem::new(2);
        s.push(vec![q(1), q(1)], q(3));
        s.push(vec![q(1), q(-1)], q(1));
        assert_eq!(s.solve(), Some(vec![q(2), q(1)]));
    }

    #[test]
    fn free_unknowns_are_zero() {
        let mut s = LinearSystem::new(3);
        s.push(vec![q(0), q(2), q(2)], q(4));
        assert_eq!(s.solve(), Some(vec![q(0), q(2), q(0)]));
    }

    #[test]
    fn inconsistent() {
        let mut s = LinearSystem::new(1);
        s.push(vec![q(1)], q(1));
        s.push(vec![q(2)], q(3));
        assert_eq!(s.solve(), None);
    }

    #[test]
    fn empty_system() {
        let s = LinearSystem::new(2);
        assert_eq!(s.solve(), Some(vec![q(0), q(0)]));
        let mut t = LinearSystem::new(0);
        t.push(vec![], q(1));
        assert_eq!(t.solve(), None);
    }
}
