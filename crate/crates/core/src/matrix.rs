//! Matrices over C[∂] acting on coordinate vectors.
//!
//! Column `j` holds the image of basis vector `j`, so applying a matrix to a
//! coordinate vector is the usual `M * v`. Entries are polynomials in `d`;
//! since they commute with every scalar, a matrix acts on λ-dependent
//! vectors coordinatewise.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, PolyVector, Var};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<MultiPoly>>,
}

/// A C[∂]-linear endomorphism (the twist maps α and β).
pub type StructureMap = PolyMatrix;
/// A C[∂]-linear map between two free modules (T, R, N, ...).
pub type ModuleMap = PolyMatrix;

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![vec![MultiPoly::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries[i][i] = MultiPoly::one();
        }
        m
    }

    pub fn scalar(n: usize, c: MultiPoly) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries[i][i] = c.clone();
        }
        m
    }

    /// Builds from row vectors; every entry must be a polynomial in `d`.
    pub fn from_rows(rows: Vec<Vec<MultiPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::RankMismatch("ragged matrix rows".into()));
        }
        if rows.iter().flatten().any(|p| !p.only_uses(|v| v == Var::D)) {
            return Err(Error::Invalid(
                "matrix entries may only use the variable d".into(),
            ));
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            entries: rows,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: MultiPoly) {
        self.entries[i][j] = value;
    }

    pub fn row_entries(&self) -> &[Vec<MultiPoly>] {
        &self.entries
    }

    /// Image of basis vector `j`.
    pub fn column(&self, j: usize) -> PolyVector {
        PolyVector::from_entries((0..self.rows).map(|i| self.entries[i][j].clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(MultiPoly::is_zero)
    }

    pub fn apply(&self, v: &PolyVector) -> PolyVector {
        assert_eq!(v.len(), self.cols, "matrix/vector size mismatch");
        let mut out = PolyVector::zero(self.rows);
        for j in 0..self.cols {
            if v[j].is_zero() {
                continue;
            }
            out.add_scaled(&v[j], &self.column(j));
        }
        out
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "matrix product size mismatch");
        let mut out = PolyMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = MultiPoly::zero();
                for k in 0..self.cols {
                    if !self.entries[i][k].is_zero() && !other.entries[k][j].is_zero() {
                        acc += &(&self.entries[i][k] * &other.entries[k][j]);
                    }
                }
                out.entries[i][j] = acc;
            }
        }
        out
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &PolyMatrix) -> PolyMatrix {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &MultiPoly) -> PolyMatrix {
        self.map(|p| p * c)
    }

    pub fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(&f).collect())
                .collect(),
        }
    }

    fn zip(
        &self,
        other: &PolyMatrix,
        f: impl Fn(&MultiPoly, &MultiPoly) -> MultiPoly,
    ) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect())
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> PolyMatrix {
        assert!(self.is_square());
        let mut acc = PolyMatrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Block diagonal `self ⊕ other`.
    pub fn direct_sum(&self, other: &PolyMatrix) -> PolyMatrix {
        let mut out = PolyMatrix::zero(self.rows + other.rows, self.cols + other.cols);
        out.place(0, 0, self);
        out.place(self.rows, self.cols, other);
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r, c)`.
    pub fn place(&mut self, r: usize, c: usize, block: &PolyMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.entries[r + i][c + j] = block.entries[i][j].clone();
            }
        }
    }

    pub fn block(&self, r: usize, c: usize, rows: usize, cols: usize) -> PolyMatrix {
        let mut out = PolyMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.entries[i][j] = self.entries[r + i][c + j].clone();
            }
        }
        out
    }

    pub fn determinant(&self) -> MultiPoly {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut memo = HashMap::new();
        self.minor_det(0, (1u64 << self.cols) - 1, &mut memo)
    }

    /// Laplace expansion along the first remaining row over the columns in
    /// `mask`, memoized on the column set.
    fn minor_det(&self, row: usize, mask: u64, memo: &mut HashMap<u64, MultiPoly>) -> MultiPoly {
        if mask == 0 {
            return MultiPoly::one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let mut acc = MultiPoly::zero();
        let mut sign = true;
        for j in 0..self.cols {
            if mask & (1 << j) == 0 {
                continue;
            }
            let e = &self.entries[row][j];
            if !e.is_zero() {
                let sub = self.minor_det(row + 1, mask & !(1 << j), memo);
                let term = e * &sub;
                if sign {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            sign = !sign;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// True iff the determinant is a nonzero constant, i.e. a unit of C[∂].
    pub fn is_regular(&self) -> bool {
        self.is_square()
            && self
                .determinant()
                .as_constant()
                .is_some_and(|c| !num_traits::Zero::is_zero(&c))
    }

    /// Exact inverse over C[∂] via the adjugate.
    pub fn inverse(&self) -> Result<PolyMatrix> {
        if !self.is_square() {
            return Err(Error::NotRegular("non-square matrix".into()));
        }
        let det = self.determinant();
        let c = match det.as_constant() {
            Some(c) if !num_traits::Zero::is_zero(&c) => c,
            _ => return Err(Error::NotRegular(det.to_string())),
        };
        let n = self.rows;
        let inv_det = MultiPoly::constant(num_traits::Inv::inv(c));
        let mut out = PolyMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = self.without(j, i).determinant();
                let cof = if (i + j) % 2 == 0 { minor } else { -minor };
                out.entries[i][j] = &cof * &inv_det;
            }
        }
        Ok(out)
    }

    fn without(&self, r: usize, c: usize) -> PolyMatrix {
        let entries: Vec<Vec<MultiPoly>> = self
            .entries
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != r)
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != c)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        PolyMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            entries,
        }
    }

    /// Largest `d`-degree among the entries.
    pub fn degree(&self) -> u16 {
        self.entries
            .iter()
            .flatten()
            .map(|p| p.degree_in(Var::D))
            .max()
            .unwrap_or(0)
    }
}

/// Inverts a structure map, failing with `NotRegular` when the determinant
/// is not a unit.
pub fn invert_structure_map(s: &StructureMap) -> Result<StructureMap> {
    s.inverse()
}

impl fmt::Display for PolyMatrix {
    /// Rows separated by `;`, entries by `,`; the input file syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect();
        f.write_str(&rows.join("; "))
    }
}
