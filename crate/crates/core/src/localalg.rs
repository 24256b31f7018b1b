//! Local algebra at an isolated zero of a square polynomial system.
//!
//! Everything here happens after translating the zero to the origin. The
//! multiplicity is the dimension of the local quotient O/(g), computed as
//! the dimension of O/((g) + m^{M+1}) for growing truncation order M until
//! it is equal at two consecutive orders. Equality at consecutive orders is
//! a certificate, not a heuristic: it forces m^M into the ideal by
//! Nakayama's lemma, so the dimension can never move again and ideal
//! membership becomes decidable by a single truncated linear solve. A
//! configurable cap turns non-isolated zeros (positive-dimensional
//! components) into errors instead of wrong answers.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::jet::{jet_solve_with_prefix, Jet};
use crate::matrix::rref;
use crate::poly::{monomials_up_to, Monomial, MultiPoly};
use crate::scalar::Scalar;

/// Truncation cap; `None` means the default `4n + 16`.
#[derive(Clone, Copy, Debug, Default)]
pub struct LocalConfig {
    pub cap: Option<usize>,
}

impl LocalConfig {
    pub fn with_cap(cap: usize) -> Self {
        LocalConfig { cap: Some(cap) }
    }

    fn cap_for(&self, n: usize) -> usize {
        self.cap.unwrap_or(4 * n + 16)
    }
}

/// Result of a stabilized local computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalAlgebra {
    pub center: Vec<Scalar>,
    /// dim O/(g) at the center.
    pub mult: usize,
    /// Least truncation order at which the quotient dimension stabilized;
    /// beyond it, m^{stab_order} lies inside the ideal.
    pub stab_order: usize,
    /// Monomials whose classes form a basis of the local quotient.
    pub standard_monomials: Vec<Monomial>,
}

/// Shared engine: the translated system with its stabilization certificate.
pub(crate) struct LocalSolver {
    nvars: usize,
    /// System recentered at the origin.
    g0: Vec<MultiPoly>,
    pub(crate) stab_order: usize,
    pub(crate) mult: usize,
    standard_monomials: Vec<Monomial>,
}

impl LocalSolver {
    pub(crate) fn new(g: &[MultiPoly], w0: &[Scalar], cfg: &LocalConfig) -> Result<Self> {
        let n = g.len();
        if n == 0 || w0.len() != n || g.iter().any(|p| p.nvars() != n) {
            return Err(Error::DimensionMismatch(
                "local system must be n polynomials in n variables with an n-vector center".into(),
            ));
        }
        let g0: Vec<MultiPoly> = g
            .iter()
            .map(|p| p.translate(w0))
            .collect::<Result<Vec<_>>>()?;
        for p in &g0 {
            if !p.coeff(&Monomial::one(n)).is_zero() {
                return Err(Error::NonzeroAtCenter);
            }
        }
        let cap = cfg.cap_for(n);
        let mut prev_dim: Option<usize> = None;
        for order in 0..=cap {
            let (dim, std_monos) = quotient_dim(&g0, order);
            if prev_dim == Some(dim) {
                return Ok(LocalSolver {
                    nvars: n,
                    g0,
                    stab_order: order,
                    mult: dim,
                    standard_monomials: std_monos,
                });
            }
            prev_dim = Some(dim);
        }
        Err(Error::NonIsolated { cap })
    }

    pub(crate) fn algebra(&self, center: &[Scalar]) -> LocalAlgebra {
        LocalAlgebra {
            center: center.to_vec(),
            mult: self.mult,
            stab_order: self.stab_order,
            standard_monomials: self.standard_monomials.clone(),
        }
    }

    /// Ideal membership of a polynomial already centered at the origin.
    /// Sound at truncation order `stab_order` because m^{stab_order} ⊆ (g).
    pub(crate) fn membership0(&self, h0: &MultiPoly) -> Result<bool> {
        let order = self.stab_order;
        let a: Vec<Vec<MultiPoly>> =
            vec![self.g0.iter().map(|p| p.truncate_above(order)).collect()];
        let b = vec![h0.truncate_above(order)];
        let prefix: Vec<MultiPoly> = (0..self.nvars)
            .map(|_| MultiPoly::zero(self.nvars))
            .collect();
        Ok(jet_solve_with_prefix(&a, &b, order, &prefix, 0)?.is_some())
    }

    /// Minimal exponents: least a with w_i^a in the ideal; bounded by mult.
    pub(crate) fn alphas(&self) -> Result<Vec<u32>> {
        let mut out = Vec::with_capacity(self.nvars);
        for i in 0..self.nvars {
            let mut found = None;
            for a in 1..=self.mult {
                let pow = MultiPoly::var(self.nvars, i).pow(a);
                if self.membership0(&pow)? {
                    found = Some(a as u32);
                    break;
                }
            }
            match found {
                Some(a) => out.push(a),
                None => {
                    return Err(Error::Internal(format!(
                        "no power of w{} up to the multiplicity {} lies in the ideal",
                        i + 1,
                        self.mult
                    )))
                }
            }
        }
        Ok(out)
    }

    /// Cofactors `b_{ij}` with `w_i^{alpha_i} = sum_j b_{ij} g_j` modulo
    /// degree > `order`, centered at the origin.
    ///
    /// Solved degree by degree: the degree-d coefficients are frozen from a
    /// solve carried out at order `d + stab_order`. A solution of the system
    /// truncated at that order always agrees, up to degree d, with the
    /// truncation of an exact holomorphic solution (the discrepancy lies in
    /// m^{d+1} because m^{stab_order} ⊆ (g)), so the frozen jet is the
    /// truncation of an exact cofactor matrix and the returned jets do not
    /// depend on the requested order below `order`.
    pub(crate) fn cofactors0(&self, alpha: &[u32], order: usize) -> Result<Vec<Vec<Jet>>> {
        let n = self.nvars;
        if alpha.len() != n {
            return Err(Error::DimensionMismatch("alpha length".into()));
        }
        let mut out = Vec::with_capacity(n);
        for (i, &a) in alpha.iter().enumerate() {
            let target = MultiPoly::var(n, i).pow(a as usize);
            let mut prefix: Vec<MultiPoly> = (0..n).map(|_| MultiPoly::zero(n)).collect();
            for d in 0..=order {
                let solve_order = d + self.stab_order;
                let a: Vec<Vec<MultiPoly>> = vec![self
                    .g0
                    .iter()
                    .map(|p| p.truncate_above(solve_order))
                    .collect()];
                let b = vec![target.truncate_above(solve_order)];
                let sol = jet_solve_with_prefix(&a, &b, solve_order, &prefix, d)?
                    .ok_or(Error::NoJetSolution { order: solve_order })?;
                prefix = sol.into_iter().map(|p| p.truncate_above(d)).collect();
            }
            out.push(prefix.into_iter().map(|p| Jet::new(p, order)).collect());
        }
        Ok(out)
    }
}

/// Dimension of O/((g) + m^{order+1}) together with the standard monomials:
/// the non-pivot columns of the row space of all truncated products
/// `q * g_j`, columns in ascending graded-lex order.
fn quotient_dim(g0: &[MultiPoly], order: usize) -> (usize, Vec<Monomial>) {
    let n = g0[0].nvars();
    let monos = monomials_up_to(n, order);
    let index: std::collections::BTreeMap<&Monomial, usize> =
        monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for gj in g0 {
        for q in &monos {
            let prod = multiply_truncated(gj, q, order);
            if prod.is_zero() {
                continue;
            }
            let mut row = vec![Scalar::zero(); monos.len()];
            for (m, c) in prod.terms() {
                row[index[m]] = c.clone();
            }
            rows.push(row);
        }
    }
    let red = rref(rows);
    let pivot_set: std::collections::BTreeSet<usize> = red.pivots.iter().copied().collect();
    let std_monos: Vec<Monomial> = monos
        .iter()
        .enumerate()
        .filter(|(i, _)| !pivot_set.contains(i))
        .map(|(_, m)| m.clone())
        .collect();
    (monos.len() - red.pivots.len(), std_monos)
}

fn multiply_truncated(p: &MultiPoly, q: &Monomial, order: usize) -> MultiPoly {
    let mono_poly = MultiPoly::monomial(p.nvars(), q.exponents().to_vec(), num_traits::One::one());
    (p * &mono_poly).truncate_above(order)
}

/// Multiplicity of the system `g` at the isolated zero `w0`.
pub fn local_multiplicity(
    g: &[MultiPoly],
    w0: &[Scalar],
    cfg: &LocalConfig,
) -> Result<LocalAlgebra> {
    Ok(LocalSolver::new(g, w0, cfg)?.algebra(w0))
}

/// Minimal `alpha_i` with `w_i^{alpha_i}` in the local ideal at `w0`.
pub fn monomial_exponents(g: &[MultiPoly], w0: &[Scalar], cfg: &LocalConfig) -> Result<Vec<u32>> {
    LocalSolver::new(g, w0, cfg)?.alphas()
}

/// Is `h` in the ideal generated by `g` in the local ring at `w0`?
pub fn membership_test(
    h: &MultiPoly,
    g: &[MultiPoly],
    w0: &[Scalar],
    cfg: &LocalConfig,
) -> Result<bool> {
    let solver = LocalSolver::new(g, w0, cfg)?;
    solver.membership0(&h.translate(w0)?)
}

/// Jets `b_{ij}` with `w_i^{alpha_i} = sum_j b_{ij} g_j` modulo degree >
/// `order`, after centering at `w0`.
pub fn cofactor_series(
    g: &[MultiPoly],
    w0: &[Scalar],
    alpha: &[u32],
    order: usize,
    cfg: &LocalConfig,
) -> Result<Vec<Vec<Jet>>> {
    LocalSolver::new(g, w0, cfg)?.cofactors0(alpha, order)
}
