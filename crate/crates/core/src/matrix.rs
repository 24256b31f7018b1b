//! Dense matrices with polynomial entries, plus the exact linear algebra
//! used everywhere else: characteristic-polynomial coefficients via the
//! Faddeev-LeVerrier recurrence (valid over any Q-algebra; eigenvalues are
//! never extracted), Laplace determinants, and a reduced-row-echelon solver
//! over the rationals.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;

/// Rectangular matrix of [`MultiPoly`] entries sharing one variable count.
/// Scalar matrices are the zero-variable special case.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<MultiPoly>, // row-major
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, nvars: usize, entries: Vec<MultiPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "matrix {rows}x{cols} needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if entries.iter().any(|p| p.nvars() != nvars) {
            return Err(Error::DimensionMismatch(
                "matrix entries have mixed variable counts".into(),
            ));
        }
        Ok(PolyMatrix {
            rows,
            cols,
            nvars,
            entries,
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        nvars: usize,
        mut f: impl FnMut(usize, usize) -> MultiPoly,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix::new(rows, cols, nvars, entries).expect("from_fn entries are consistent")
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        Self::from_fn(n, n, nvars, |i, j| {
            if i == j {
                MultiPoly::one(nvars)
            } else {
                MultiPoly::zero(nvars)
            }
        })
    }

    /// Scalar matrix (zero-variable polynomial entries) from rows of rationals.
    pub fn from_scalar_rows(rows: &[Vec<Scalar>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::DimensionMismatch("ragged scalar matrix".into()));
        }
        let entries = rows
            .iter()
            .flat_map(|row| row.iter().map(|v| MultiPoly::constant(0, v.clone())))
            .collect();
        PolyMatrix::new(r, c, 0, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: MultiPoly) {
        assert_eq!(p.nvars(), self.nvars);
        self.entries[i * self.cols + j] = p;
    }

    pub fn add(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols || self.nvars != rhs.nvars {
            return Err(Error::DimensionMismatch(
                "matrix addition shape mismatch".into(),
            ));
        }
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols || self.nvars != rhs.nvars {
            return Err(Error::DimensionMismatch(
                "matrix subtraction shape mismatch".into(),
            ));
        }
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != rhs.rows || self.nvars != rhs.nvars {
            return Err(Error::DimensionMismatch(
                "matrix product shape mismatch".into(),
            ));
        }
        Ok(PolyMatrix::from_fn(
            self.rows,
            rhs.cols,
            self.nvars,
            |i, j| {
                let mut acc = MultiPoly::zero(self.nvars);
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * rhs.get(k, j));
                }
                acc
            },
        ))
    }

    pub fn scale(&self, c: &Scalar) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            entries: self.entries.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn trace(&self) -> Result<MultiPoly> {
        if self.rows != self.cols {
            return Err(Error::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = MultiPoly::zero(self.nvars);
        for i in 0..self.rows {
            acc = &acc + self.get(i, i);
        }
        Ok(acc)
    }

    /// Evaluate every entry at a rational point, producing a scalar matrix.
    pub fn eval(&self, point: &[Scalar]) -> Result<PolyMatrix> {
        let mut vals = Vec::with_capacity(self.entries.len());
        for p in &self.entries {
            vals.push(MultiPoly::constant(0, p.eval(point)?));
        }
        PolyMatrix::new(self.rows, self.cols, 0, vals)
    }

    /// Entries of a scalar (constant) matrix as plain rationals.
    pub fn to_scalar_rows(&self) -> Result<Vec<Vec<Scalar>>> {
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for j in 0..self.cols {
                row.push(
                    self.get(i, j).constant_value().ok_or_else(|| {
                        Error::InvalidInput("matrix entry is not constant".into())
                    })?,
                );
            }
            out.push(row);
        }
        Ok(out)
    }

    /// Signed characteristic-polynomial coefficients `sigma_1 .. sigma_n`:
    /// `det(sI - M) = s^n - sigma_1 s^{n-1} + ... + (-1)^n sigma_n`.
    ///
    /// Faddeev-LeVerrier: `M_1 = A`, `c_k = -tr(M_k)/k`,
    /// `M_{k+1} = A (M_k + c_k I)`, and `sigma_k = (-1)^k c_k`. Division is
    /// only ever by an integer, so the recurrence stays exact over Q-algebras.
    pub fn char_poly_coeffs(&self) -> Result<Vec<MultiPoly>> {
        if self.rows != self.cols {
            return Err(Error::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut sigmas = Vec::with_capacity(n);
        let mut m_k = self.clone();
        for k in 1..=n {
            let c_k = m_k
                .trace()?
                .scale(&(-Scalar::one() / Scalar::from_integer(k.into())));
            let sign = if k % 2 == 0 {
                Scalar::one()
            } else {
                -Scalar::one()
            };
            sigmas.push(c_k.scale(&sign));
            if k < n {
                let c_k_id = PolyMatrix::identity(n, self.nvars).mul_entrywise(&c_k);
                m_k = self.mul(&m_k.add(&c_k_id)?)?;
            }
        }
        Ok(sigmas)
    }

    fn mul_entrywise(&self, p: &MultiPoly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            entries: self.entries.iter().map(|e| e * p).collect(),
        }
    }

    /// Determinant by Laplace expansion along the first column. Independent
    /// of [`Self::char_poly_coeffs`]; the two routes cross-check each other
    /// in the test suite.
    pub fn det_laplace(&self) -> Result<MultiPoly> {
        if self.rows != self.cols {
            return Err(Error::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(det_rec(&self.entries, self.rows, self.nvars))
    }
}

fn det_rec(entries: &[MultiPoly], n: usize, nvars: usize) -> MultiPoly {
    if n == 0 {
        return MultiPoly::one(nvars);
    }
    if n == 1 {
        return entries[0].clone();
    }
    let mut acc = MultiPoly::zero(nvars);
    for i in 0..n {
        let a = &entries[i * n];
        if a.is_zero() {
            continue;
        }
        let minor: Vec<MultiPoly> = (0..n)
            .filter(|&r| r != i)
            .flat_map(|r| (1..n).map(move |c| entries[r * n + c].clone()))
            .collect();
        let sub = det_rec(&minor, n - 1, nvars);
        let term = a * &sub;
        if i % 2 == 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    acc
}

/// Reduced row echelon form over Q. Deterministic: columns are processed
/// left to right, the first row with a nonzero entry is chosen as pivot.
pub(crate) struct Rref {
    pub mat: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

pub(crate) fn rref(mut mat: Vec<Vec<Scalar>>) -> Rref {
    let nrows = mat.len();
    let ncols = mat.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(k) = (r..nrows).find(|&k| !mat[k][c].is_zero()) else {
            continue;
        };
        mat.swap(r, k);
        let inv = mat[r][c].recip();
        for x in mat[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = mat[r].clone();
        for (i, row) in mat.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    let delta = p * &f;
                    *x = &*x - &delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    mat.truncate(r);
    Rref { mat, pivots }
}

/// Particular solution of `A x = b` with free variables set to zero, or
/// `None` when the system is inconsistent.
pub(crate) fn solve_linear_system(a: Vec<Vec<Scalar>>, b: Vec<Scalar>) -> Option<Vec<Scalar>> {
    let ncols = a.first().map(|r| r.len()).unwrap_or(0);
    let aug: Vec<Vec<Scalar>> = a
        .into_iter()
        .zip(b)
        .map(|(mut row, rhs)| {
            row.push(rhs);
            row
        })
        .collect();
    let red = rref(aug);
    if red.pivots.last() == Some(&ncols) {
        return None; // pivot in the augmented column
    }
    let mut x = vec![Scalar::zero(); ncols];
    for (row, &p) in red.mat.iter().zip(&red.pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{binomial, sc};

    fn scalar_mat(rows: &[&[i64]]) -> PolyMatrix {
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| sc(v)).collect())
            .collect();
        PolyMatrix::from_scalar_rows(&rows).unwrap()
    }

    #[test]
    fn char_poly_diagonal() {
        let m = scalar_mat(&[&[2, 0], &[0, 0]]);
        let s = m.char_poly_coeffs().unwrap();
        assert_eq!(s[0].constant_value().unwrap(), sc(2));
        assert_eq!(s[1].constant_value().unwrap(), sc(0));
    }

    #[test]
    fn char_poly_cremona_fixed_point() {
        // dg at (1,1) for the Cremona map is diag(-2,-2)
        let m = scalar_mat(&[&[-2, 0], &[0, -2]]);
        let s = m.char_poly_coeffs().unwrap();
        assert_eq!(s[0].constant_value().unwrap(), sc(-4));
        assert_eq!(s[1].constant_value().unwrap(), sc(4));
    }

    #[test]
    fn char_poly_identity_gives_binomials() {
        for n in 1..=5 {
            let m = PolyMatrix::identity(n, 0);
            let s = m.char_poly_coeffs().unwrap();
            for (k, sk) in s.iter().enumerate() {
                assert_eq!(sk.constant_value().unwrap(), binomial(n, k + 1));
            }
        }
    }

    #[test]
    fn det_routes_agree() {
        let m = scalar_mat(&[&[1, 2, 3], &[0, -1, 4], &[2, 2, 1]]);
        let s = m.char_poly_coeffs().unwrap();
        assert_eq!(m.det_laplace().unwrap(), s[2]); // sigma_n = det
    }

    #[test]
    fn non_square_rejected() {
        let m = PolyMatrix::new(1, 2, 0, vec![MultiPoly::one(0), MultiPoly::zero(0)]).unwrap();
        assert!(matches!(
            m.char_poly_coeffs(),
            Err(Error::NonSquareMatrix { .. })
        ));
        assert!(matches!(
            m.det_laplace(),
            Err(Error::NonSquareMatrix { .. })
        ));
    }

    #[test]
    fn linear_solver_basics() {
        // unique solution
        let a = vec![vec![sc(1), sc(1)], vec![sc(1), sc(-1)]];
        let x = solve_linear_system(a, vec![sc(3), sc(1)]).unwrap();
        assert_eq!(x, vec![sc(2), sc(1)]);
        // inconsistent
        let a = vec![vec![sc(1), sc(1)], vec![sc(2), sc(2)]];
        assert!(solve_linear_system(a, vec![sc(1), sc(3)]).is_none());
        // underdetermined: free variable pinned to zero
        let a = vec![vec![sc(1), sc(1)]];
        let x = solve_linear_system(a, vec![sc(5)]).unwrap();
        assert_eq!(x, vec![sc(5), sc(0)]);
    }
}
