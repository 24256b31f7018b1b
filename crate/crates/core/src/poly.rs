//! Sparse multivariate polynomials over the exact rationals.
//!
//! Terms are kept in a `BTreeMap` under the graded-lexicographic order, which
//! fixes a canonical term order for printing, hashing and linear algebra.
//! Coefficients are never zero; the zero polynomial has an empty term map and
//! its total degree is `None`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Exponent vector of a single monomial. Ordered graded-lexicographically:
/// first by total degree, ties broken by the exponent of the earliest
/// variable (larger wins).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise division; `None` when some exponent would go negative.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(Monomial)
    }

    /// Pure lexicographic comparison (ignores total degree).
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials in `nvars` variables of total degree <= `max_deg`,
/// in ascending graded-lexicographic order.
pub fn monomials_up_to(nvars: usize, max_deg: usize) -> Vec<Monomial> {
    fn of_degree(out: &mut Vec<Monomial>, current: &mut Vec<u32>, pos: usize, remaining: u32) {
        if pos + 1 == current.len() {
            current[pos] = remaining;
            out.push(Monomial::new(current.clone()));
            current[pos] = 0;
            return;
        }
        for e in 0..=remaining {
            current[pos] = e;
            of_degree(out, current, pos + 1, remaining - e);
        }
        current[pos] = 0;
    }
    if nvars == 0 {
        return vec![Monomial::one(0)];
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    for d in 0..=max_deg {
        of_degree(&mut out, &mut current, 0, d as u32);
    }
    out.sort();
    out
}

/// Sparse polynomial in a fixed number of variables with [`Scalar`] coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, index), Scalar::one());
        p
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, coeff: Scalar) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length must equal nvars");
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::new(exps), coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Leading term under graded lex; `None` for zero.
    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Leading term under pure lex order.
    pub fn leading_term_lex(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().max_by(|a, b| a.0.cmp_lex(b.0))
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> MultiPoly {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch(format!(
                "polynomial in {} variables evaluated at a {}-tuple",
                self.nvars,
                point.len()
            )));
        }
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Exact partial derivative with respect to variable `index` (0-based).
    pub fn partial(&self, index: usize) -> Result<MultiPoly> {
        if index >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index,
                nvars: self.nvars,
            });
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[index];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[index] = e - 1;
            out.add_term(Monomial::new(exps), c * Scalar::from_integer(e.into()));
        }
        Ok(out)
    }

    /// Substitute each variable by a polynomial. All substituted polynomials
    /// must share a variable count, which becomes the result's.
    pub fn compose(&self, subs: &[MultiPoly]) -> Result<MultiPoly> {
        if subs.len() != self.nvars {
            return Err(Error::DimensionMismatch(format!(
                "composition needs {} substitutions, got {}",
                self.nvars,
                subs.len()
            )));
        }
        let out_vars = if subs.is_empty() { 0 } else { subs[0].nvars() };
        for s in subs {
            if s.nvars() != out_vars {
                return Err(Error::DimensionMismatch(
                    "substituted polynomials have mixed variable counts".into(),
                ));
            }
        }
        // memoized powers per variable
        let mut powers: Vec<Vec<MultiPoly>> = subs
            .iter()
            .map(|s| vec![MultiPoly::one(out_vars), s.clone()])
            .collect();
        let mut out = MultiPoly::zero(out_vars);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(out_vars, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &powers[i][1];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Recenter: returns p(w + c), so the result at 0 equals p at c.
    pub fn translate(&self, c: &[Scalar]) -> Result<MultiPoly> {
        let subs: Vec<MultiPoly> = (0..self.nvars)
            .map(|i| {
                &MultiPoly::var(self.nvars, i) + &MultiPoly::constant(self.nvars, c[i].clone())
            })
            .collect();
        if c.len() != self.nvars {
            return Err(Error::DimensionMismatch("translation vector length".into()));
        }
        self.compose(&subs)
    }

    /// Rename variables: old variable `k` becomes variable `perm[k]`.
    pub fn permute_vars(&self, perm: &[usize]) -> MultiPoly {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; self.nvars];
            for (k, &e) in m.exponents().iter().enumerate() {
                exps[perm[k]] = e;
            }
            out.add_term(Monomial::new(exps), c.clone());
        }
        out
    }

    /// Drop every term of total degree > `max_deg`.
    pub fn truncate_above(&self, max_deg: usize) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() <= max_deg)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The homogeneous part of exact total degree `d`.
    pub fn homogeneous_part(&self, d: usize) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// True when every term has total degree exactly `d`. The zero
    /// polynomial is homogeneous of every degree.
    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.terms.keys().all(|m| m.total_degree() == d)
    }

    /// True when the polynomial is invariant under every transposition of
    /// adjacent variables (hence under the full symmetric group).
    pub fn is_symmetric(&self) -> bool {
        for k in 1..self.nvars {
            let mut perm: Vec<usize> = (0..self.nvars).collect();
            perm.swap(k - 1, k);
            if self.permute_vars(&perm) != *self {
                return false;
            }
        }
        true
    }

    pub fn degree_in_var(&self, index: usize) -> usize {
        self.terms
            .keys()
            .map(|m| m.exponents()[index] as usize)
            .max()
            .unwrap_or(0)
    }

    /// Exact division: `Some(q)` with `self = q * d`, or `None` when `d`
    /// does not divide `self`.
    pub fn divide_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        assert_eq!(self.nvars, d.nvars);
        assert!(!d.is_zero(), "division by zero polynomial");
        let (dm, dc) = d
            .leading_term()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        while let Some((rm, rc)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            let t = rm.try_div(&dm)?;
            let tc = rc / dc.clone();
            let mut tpoly = MultiPoly::zero(self.nvars);
            tpoly.add_term(t.clone(), tc.clone());
            quot.add_term(t, tc);
            rem = &rem - &(&tpoly * d);
        }
        Some(quot)
    }

    /// Scale so the graded-lex leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> MultiPoly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Value of a zero-variable (or constant) polynomial.
    pub fn constant_value(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.terms.len() == 1 {
            if let Some((m, c)) = self.leading_term() {
                if m.is_one() {
                    return Some(c.clone());
                }
            }
        }
        None
    }

    /// Render with the given variable names.
    pub fn to_string_with(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (k, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[k].clone()),
                    _ => factors.push(format!("{}^{}", names[k], e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.to_string_with(&names))
    }
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl std::ops::Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl std::ops::Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl std::ops::Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl std::ops::Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

// ---------------------------------------------------------------------------
// Multivariate gcd over Q via primitive pseudo-remainder sequences.
// ---------------------------------------------------------------------------

/// Coefficients of `p` seen as univariate in variable `x`; keys are the
/// `x`-exponents, values keep the remaining variables (x-exponent zeroed).
fn coeffs_in_var(p: &MultiPoly, x: usize) -> BTreeMap<u32, MultiPoly> {
    let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
    for (m, c) in &p.terms {
        let e = m.exponents()[x];
        let mut exps = m.exponents().to_vec();
        exps[x] = 0;
        out.entry(e)
            .or_insert_with(|| MultiPoly::zero(p.nvars))
            .add_term(Monomial::new(exps), c.clone());
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn content_in_var(p: &MultiPoly, x: usize) -> MultiPoly {
    let mut g = MultiPoly::zero(p.nvars);
    for (_, c) in coeffs_in_var(p, x) {
        g = gcd(&g, &c);
    }
    g
}

fn leading_coeff_in_var(p: &MultiPoly, x: usize) -> (u32, MultiPoly) {
    let cs = coeffs_in_var(p, x);
    let (&e, c) = cs.iter().next_back().expect("nonzero polynomial");
    (e, c.clone())
}

/// Pseudo-remainder of `p` by `q` with respect to variable `x`
/// (both nonzero, deg_x p >= deg_x q >= 1 not required; returns p when
/// deg_x p < deg_x q).
fn pseudo_rem(p: &MultiPoly, q: &MultiPoly, x: usize) -> MultiPoly {
    let (dq, lq) = leading_coeff_in_var(q, x);
    let mut r = p.clone();
    loop {
        if r.is_zero() {
            return r;
        }
        let (dr, lr) = leading_coeff_in_var(&r, x);
        if dr < dq {
            return r;
        }
        // r <- lq*r - lr*x^(dr-dq)*q ; strictly lowers deg_x
        let shift = MultiPoly::monomial(
            p.nvars,
            {
                let mut e = vec![0u32; p.nvars];
                e[x] = dr - dq;
                e
            },
            Scalar::one(),
        );
        r = &(&lq * &r) - &(&(&lr * &shift) * q);
    }
}

/// Gcd of two polynomials over Q, normalized monic under graded lex.
/// `gcd(0, q) = monic(q)`; `gcd(0, 0) = 0`.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    assert_eq!(a.nvars(), b.nvars(), "variable count mismatch");
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    // main variable: the last one actually occurring
    let x = (0..a.nvars())
        .rev()
        .find(|&i| a.degree_in_var(i) > 0 || b.degree_in_var(i) > 0);
    let x = match x {
        None => return MultiPoly::one(a.nvars()), // both constants
        Some(x) => x,
    };
    let cont_a = content_in_var(a, x);
    let cont_b = content_in_var(b, x);
    let mut p = a.divide_exact(&cont_a).expect("content divides");
    let mut q = b.divide_exact(&cont_b).expect("content divides");
    if p.degree_in_var(x) < q.degree_in_var(x) {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = pseudo_rem(&p, &q, x);
        if r.is_zero() {
            break;
        }
        let rc = content_in_var(&r, x);
        let rp = r.divide_exact(&rc).expect("content divides");
        p = q;
        q = rp;
        if q.degree_in_var(x) == 0 {
            // coprime in x
            q = MultiPoly::one(a.nvars());
            break;
        }
    }
    let cont_gcd = gcd(&cont_a, &cont_b);
    (&cont_gcd * &q).monic()
}

/// Gcd of a whole family; zero entries are skipped.
pub fn gcd_many(polys: &[MultiPoly]) -> MultiPoly {
    assert!(!polys.is_empty());
    let mut g = MultiPoly::zero(polys[0].nvars());
    for p in polys {
        g = gcd(&g, p);
        if !g.is_zero() && g.total_degree() == Some(0) {
            break; // already a unit
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{sc, sc_frac};

    fn w(nvars: usize, i: usize) -> MultiPoly {
        MultiPoly::var(nvars, i)
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        let a = Monomial::new(vec![2, 0]); // w1^2
        let b = Monomial::new(vec![1, 1]); // w1 w2
        let c = Monomial::new(vec![0, 1]); // w2
        assert!(a > b && b > c);
        assert!(Monomial::new(vec![0, 3]) > a); // degree beats lex
    }

    #[test]
    fn eval_examples() {
        // w1*w2 at (1,1) -> 1
        let p = &w(2, 0) * &w(2, 1);
        assert_eq!(p.eval(&[sc(1), sc(1)]).unwrap(), sc(1));
        // Cremona F_0(1,w) = w1*w2 at (0,0) -> 0 (indeterminacy test value)
        assert_eq!(p.eval(&[sc(0), sc(0)]).unwrap(), sc(0));
        // zero polynomial
        assert_eq!(MultiPoly::zero(2).eval(&[sc(3), sc(4)]).unwrap(), sc(0));
        // dimension mismatch
        assert!(p.eval(&[sc(1)]).is_err());
    }

    #[test]
    fn partial_examples() {
        let p = w(2, 0).pow(2); // w1^2
        assert_eq!(p.partial(0).unwrap(), w(2, 0).scale(&sc(2)));
        // g1 = w2 - w1^2*w2 (Cremona chart 0): d/dw1 = -2*w1*w2
        let g1 = &w(2, 1) - &(&w(2, 0).pow(2) * &w(2, 1));
        let expect = (&w(2, 0) * &w(2, 1)).scale(&sc(-2));
        assert_eq!(g1.partial(0).unwrap(), expect);
        // d/dw2 of w1 = 0
        assert!(w(2, 0).partial(1).unwrap().is_zero());
        assert!(w(2, 0).partial(5).is_err());
    }

    #[test]
    fn translate_recenters() {
        // p(w) = w^2, translate by 3: p(w+3) = w^2 + 6w + 9
        let p = w(1, 0).pow(2);
        let t = p.translate(&[sc(3)]).unwrap();
        assert_eq!(t.eval(&[sc(0)]).unwrap(), sc(9));
        assert_eq!(t.eval(&[sc(-3)]).unwrap(), sc(0));
    }

    #[test]
    fn divide_exact_and_gcd() {
        let n = 2;
        let z0z1 = &w(n, 0) * &w(n, 1);
        let z1sq = w(n, 1).pow(2);
        assert_eq!(gcd(&z0z1, &z1sq), w(n, 1));
        let p = &(&w(n, 0) + &w(n, 1)) * &(&w(n, 0) - &w(n, 1));
        let q = (&w(n, 0) + &w(n, 1)).pow(2);
        assert_eq!(gcd(&p, &q), &w(n, 0) + &w(n, 1));
        assert!(p.divide_exact(&(&w(n, 0) + &w(n, 1))).is_some());
        assert!(p.divide_exact(&w(n, 0)).is_none());
        // coprime pair
        assert_eq!(gcd(&w(n, 0), &w(n, 1)), MultiPoly::one(n));
    }

    #[test]
    fn gcd_with_rational_coefficients() {
        let n = 1;
        let a = (&w(n, 0) + &MultiPoly::constant(n, sc_frac(1, 2))).scale(&sc_frac(3, 4));
        let b = &(&w(n, 0) + &MultiPoly::constant(n, sc_frac(1, 2))) * &w(n, 0);
        let g = gcd(&a, &b);
        assert_eq!(g, &w(n, 0) + &MultiPoly::constant(n, sc_frac(1, 2)));
    }

    #[test]
    fn monomials_enumeration() {
        let ms = monomials_up_to(2, 2);
        assert_eq!(ms.len(), 6); // 1, w2, w1, w2^2, w1w2, w1^2
        assert!(ms.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(monomials_up_to(0, 5).len(), 1);
        assert_eq!(monomials_up_to(3, 4).len(), 35); // C(7,3)
    }

    #[test]
    fn display_round_shape() {
        let p = &(&w(2, 0).pow(2) * &w(2, 1)).scale(&sc_frac(-3, 2)) + &MultiPoly::one(2);
        assert_eq!(p.to_string(), "-3/2*x0^2*x1 + 1");
    }
}
