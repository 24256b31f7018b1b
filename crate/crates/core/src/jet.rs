//! Truncated power series (jets) and exact linear solves modulo a degree.
//!
//! A [`Jet`] is a polynomial with every term of total degree above its order
//! discarded; products truncate back to the order. [`jet_solve_linear`] turns
//! `A x = b (mod degree > M)` into one rational linear system over the
//! stacked monomial coefficients and solves it by exact elimination.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::solve_linear_system;
use crate::poly::{monomials_up_to, Monomial, MultiPoly};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Jet {
    poly: MultiPoly,
    order: usize,
}

impl Jet {
    /// Truncates the input to the given order.
    pub fn new(poly: MultiPoly, order: usize) -> Self {
        Jet {
            poly: poly.truncate_above(order),
            order,
        }
    }

    pub fn zero(nvars: usize, order: usize) -> Self {
        Jet {
            poly: MultiPoly::zero(nvars),
            order,
        }
    }

    pub fn one(nvars: usize, order: usize) -> Self {
        Jet {
            poly: MultiPoly::one(nvars),
            order,
        }
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.poly.coeff(m)
    }

    /// Re-truncate to a lower (or equal) order.
    pub fn truncate(&self, order: usize) -> Jet {
        assert!(order <= self.order, "cannot raise a jet's order");
        Jet::new(self.poly.clone(), order)
    }

    pub fn mul(&self, rhs: &Jet) -> Jet {
        assert_eq!(self.order, rhs.order, "jet order mismatch");
        Jet::new(&self.poly * &rhs.poly, self.order)
    }

    pub fn add(&self, rhs: &Jet) -> Jet {
        assert_eq!(self.order, rhs.order, "jet order mismatch");
        Jet::new(&self.poly + &rhs.poly, self.order)
    }

    pub fn sub(&self, rhs: &Jet) -> Jet {
        assert_eq!(self.order, rhs.order, "jet order mismatch");
        Jet::new(&self.poly - &rhs.poly, self.order)
    }

    pub fn neg(&self) -> Jet {
        Jet {
            poly: -&self.poly,
            order: self.order,
        }
    }
}

/// Determinant of a square matrix of jets by Laplace expansion.
pub fn jet_matrix_det(m: &[Vec<Jet>]) -> Jet {
    let n = m.len();
    assert!(
        n > 0 && m.iter().all(|row| row.len() == n),
        "square jet matrix required"
    );
    let order = m[0][0].order();
    let nvars = m[0][0].nvars();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Jet::zero(nvars, order);
    for i in 0..n {
        if m[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Jet>> = (0..n)
            .filter(|&r| r != i)
            .map(|r| m[r][1..].to_vec())
            .collect();
        let term = m[i][0].mul(&jet_matrix_det(&minor));
        acc = if i % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// Solve `A x = b` modulo total degree > `order` by one exact elimination
/// over all monomial coefficients. Returns `Ok(None)` when no polynomial
/// solution of degree <= `order` satisfies the truncated system.
pub fn jet_solve_linear(a: &[Vec<Jet>], b: &[Jet], order: usize) -> Result<Option<Vec<Jet>>> {
    let nrows = a.len();
    if nrows == 0 || b.len() != nrows {
        return Err(Error::DimensionMismatch("jet system shape mismatch".into()));
    }
    let ncols = a[0].len();
    if a.iter().any(|row| row.len() != ncols) || ncols == 0 {
        return Err(Error::DimensionMismatch("ragged jet system".into()));
    }
    let nvars = a[0][0].nvars();
    for row in a {
        for e in row {
            if e.nvars() != nvars || e.order() != order {
                return Err(Error::DimensionMismatch(
                    "jet entries must share variables and order".into(),
                ));
            }
        }
    }
    for e in b {
        if e.nvars() != nvars || e.order() != order {
            return Err(Error::DimensionMismatch(
                "jet right-hand side must share variables and order".into(),
            ));
        }
    }
    let a_polys: Vec<Vec<MultiPoly>> = a
        .iter()
        .map(|row| row.iter().map(|j| j.poly().clone()).collect())
        .collect();
    let b_polys: Vec<MultiPoly> = b.iter().map(|j| j.poly().clone()).collect();
    let zero_prefix: Vec<MultiPoly> = (0..ncols).map(|_| MultiPoly::zero(nvars)).collect();
    let sol = jet_solve_with_prefix(&a_polys, &b_polys, order, &zero_prefix, 0)?;
    Ok(sol.map(|polys| polys.into_iter().map(|p| Jet::new(p, order)).collect()))
}

/// Inner solver: unknown coefficients run over monomials of total degree in
/// `[min_deg, order]`; coefficients below `min_deg` are fixed by `prefix`
/// (one polynomial per column). Returns full solutions `prefix + solved part`.
pub(crate) fn jet_solve_with_prefix(
    a: &[Vec<MultiPoly>],
    b: &[MultiPoly],
    order: usize,
    prefix: &[MultiPoly],
    min_deg: usize,
) -> Result<Option<Vec<MultiPoly>>> {
    let nrows = a.len();
    let ncols = a[0].len();
    let nvars = a[0][0].nvars();
    debug_assert_eq!(prefix.len(), ncols);

    // move the fixed prefix to the right-hand side
    let rhs: Vec<MultiPoly> = (0..nrows)
        .map(|r| {
            let mut acc = b[r].truncate_above(order);
            for (j, p) in prefix.iter().enumerate() {
                acc = &acc - &(&a[r][j] * p).truncate_above(order);
            }
            acc
        })
        .collect();

    let eq_monos = monomials_up_to(nvars, order);
    let eq_index: std::collections::BTreeMap<&Monomial, usize> =
        eq_monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let unk_monos: Vec<Monomial> = eq_monos
        .iter()
        .filter(|m| m.total_degree() >= min_deg)
        .cloned()
        .collect();
    let n_unknowns = ncols * unk_monos.len();
    let n_equations = nrows * eq_monos.len();

    let mut mat = vec![vec![Scalar::zero(); n_unknowns]; n_equations];
    let mut vec_b = vec![Scalar::zero(); n_equations];
    for r in 0..nrows {
        for (m, c) in rhs[r].terms() {
            vec_b[r * eq_monos.len() + eq_index[m]] = c.clone();
        }
        for (j, entry) in a[r].iter().enumerate() {
            for (ma, ca) in entry.terms() {
                for (u, mx) in unk_monos.iter().enumerate() {
                    let target = ma.mul(mx);
                    if target.total_degree() > order {
                        continue;
                    }
                    let col = j * unk_monos.len() + u;
                    let eq = r * eq_monos.len() + eq_index[&target];
                    mat[eq][col] = &mat[eq][col] + ca;
                }
            }
        }
    }

    let Some(x) = solve_linear_system(mat, vec_b) else {
        return Ok(None);
    };
    let mut out = Vec::with_capacity(ncols);
    for j in 0..ncols {
        let mut p = prefix[j].truncate_above(order);
        for (u, m) in unk_monos.iter().enumerate() {
            let c = x[j * unk_monos.len() + u].clone();
            if !c.is_zero() {
                p.add_term(m.clone(), c);
            }
        }
        out.push(p);
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::sc;

    fn wvar(i: usize) -> MultiPoly {
        MultiPoly::var(1, i)
    }

    #[test]
    fn solve_identity() {
        // A = (1), b = (w1), M = 3 -> x = w1
        let a = vec![vec![Jet::one(1, 3)]];
        let b = vec![Jet::new(wvar(0), 3)];
        let x = jet_solve_linear(&a, &b, 3).unwrap().unwrap();
        assert_eq!(x[0].poly(), &wvar(0));
    }

    #[test]
    fn solve_exact_division() {
        // A = (w1), b = (w1^2), M = 5 -> x = w1
        let a = vec![vec![Jet::new(wvar(0), 5)]];
        let b = vec![Jet::new(wvar(0).pow(2), 5)];
        let x = jet_solve_linear(&a, &b, 5).unwrap().unwrap();
        assert_eq!(x[0].poly(), &wvar(0));
    }

    #[test]
    fn unit_is_unreachable() {
        // A = (w1), b = (1) -> no solution at any order
        for order in [1, 3, 6] {
            let a = vec![vec![Jet::new(wvar(0), order)]];
            let b = vec![Jet::one(1, order)];
            assert!(jet_solve_linear(&a, &b, order).unwrap().is_none());
        }
    }

    #[test]
    fn jet_mul_truncates() {
        let j = Jet::new(&wvar(0) + &MultiPoly::one(1), 2);
        let sq = j.mul(&j); // (1+w)^2 = 1 + 2w + w^2, order 2 keeps all
        assert_eq!(sq.poly().coeff(&Monomial::new(vec![2])), sc(1));
        let cube = sq.mul(&j); // w^3 term dropped
        assert_eq!(cube.poly().total_degree(), Some(2));
        assert_eq!(cube.poly().coeff(&Monomial::new(vec![2])), sc(3));
    }

    #[test]
    fn jet_det_matches_poly_det() {
        let n = 2;
        let w1 = MultiPoly::var(n, 0);
        let w2 = MultiPoly::var(n, 1);
        let entries = vec![
            vec![
                Jet::new(&MultiPoly::one(n) + &w1, 4),
                Jet::new(w2.clone(), 4),
            ],
            vec![
                Jet::new(w1.clone(), 4),
                Jet::new(&MultiPoly::one(n) - &w2, 4),
            ],
        ];
        let d = jet_matrix_det(&entries);
        let exact = &(&(&MultiPoly::one(n) + &w1) * &(&MultiPoly::one(n) - &w2)) - &(&w2 * &w1);
        assert_eq!(d.poly(), &exact.truncate_above(4));
    }
}
