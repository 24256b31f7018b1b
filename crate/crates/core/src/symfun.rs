//! Symmetric polynomials in the elementary basis.
//!
//! A [`SymSpec`] stores a homogeneous symmetric polynomial through its unique
//! rewriting in the elementary symmetric functions: variable `k` of the
//! stored polynomial stands for `sigma_k` and carries weight `k`. Evaluating
//! the rewriting on the signed characteristic-polynomial coefficients of a
//! matrix yields the symmetric function of its eigenvalue multiset without
//! ever extracting an eigenvalue, which keeps every value rational.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiPoly};
use crate::scalar::{binomial, neg_one_pow, Scalar};

/// A symmetric polynomial of homogeneous degree `degree` in `arity`
/// underlying variables, stored in the elementary basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymSpec {
    arity: usize,
    degree: usize,
    tilde: MultiPoly,
}

/// The elementary symmetric polynomial `e_k(x_1..x_r)` as an explicit
/// polynomial in `r` variables.
pub fn elementary_poly(r: usize, k: usize) -> MultiPoly {
    assert!(k <= r);
    if k == 0 {
        return MultiPoly::one(r);
    }
    let mut out = MultiPoly::zero(r);
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut exps = vec![0u32; r];
        for &i in &idx {
            exps[i] = 1;
        }
        out.add_term(Monomial::new(exps), Scalar::one());
        // advance the k-subset
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + r - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Elementary symmetric values `e_1..e_r` of an explicit value multiset,
/// computed by expanding the product of `(1 + v t)`.
pub fn elementary_values(values: &[Scalar]) -> Vec<Scalar> {
    let r = values.len();
    let mut e = vec![Scalar::zero(); r + 1];
    e[0] = Scalar::one();
    for (i, v) in values.iter().enumerate() {
        for k in (1..=i + 1).rev() {
            let carry = &e[k - 1] * v;
            e[k] = &e[k] + &carry;
        }
    }
    e.remove(0);
    e
}

impl SymSpec {
    /// Build directly from an elementary-basis polynomial (variable `k-1`
    /// is `sigma_k`). Every term must have weighted degree exactly `degree`.
    pub fn from_e_basis(tilde: MultiPoly, degree: usize) -> Result<Self> {
        let arity = tilde.nvars();
        for (m, _) in tilde.terms() {
            let wdeg: usize = m
                .exponents()
                .iter()
                .enumerate()
                .map(|(k, &e)| (k + 1) * e as usize)
                .sum();
            if wdeg != degree {
                return Err(Error::WeightedDegreeMismatch { expected: degree });
            }
        }
        Ok(SymSpec {
            arity,
            degree,
            tilde,
        })
    }

    /// Convert a symmetric polynomial in explicit variables by the classical
    /// lex-leading-term subtraction, then certify the round trip.
    pub fn from_symmetric_poly(sym: &MultiPoly, degree: usize) -> Result<Self> {
        let r = sym.nvars();
        if !sym.is_homogeneous_of(degree) {
            return Err(Error::NotHomogeneous { expected: degree });
        }
        if !sym.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let e_polys: Vec<MultiPoly> = (1..=r).map(|k| elementary_poly(r, k)).collect();
        let mut work = sym.clone();
        let mut tilde = MultiPoly::zero(r);
        while !work.is_zero() {
            let (m, c) = work
                .leading_term_lex()
                .map(|(m, c)| (m.clone(), c.clone()))
                .unwrap();
            let a = m.exponents();
            // the lex-leading exponent of a symmetric polynomial is weakly decreasing
            if a.windows(2).any(|p| p[0] < p[1]) {
                return Err(Error::NotSymmetric);
            }
            let mut e_exps = vec![0u32; r];
            for k in 0..r {
                e_exps[k] = if k + 1 < r { a[k] - a[k + 1] } else { a[r - 1] };
            }
            let e_mono = Monomial::new(e_exps.clone());
            tilde.add_term(e_mono, c.clone());
            let mut expanded = MultiPoly::constant(r, c);
            for (k, &e) in e_exps.iter().enumerate() {
                if e > 0 {
                    expanded = &expanded * &e_polys[k].pow(e as usize);
                }
            }
            work = &work - &expanded;
        }
        let spec = SymSpec {
            arity: r,
            degree,
            tilde,
        };
        debug_assert_eq!(&spec.expand(), sym);
        Ok(spec)
    }

    /// `sigma_k` as a spec of degree `k` in `r` variables.
    pub fn sigma(r: usize, k: usize) -> Self {
        assert!(k >= 1 && k <= r);
        SymSpec {
            arity: r,
            degree: k,
            tilde: MultiPoly::var(r, k - 1),
        }
    }

    /// `sigma_1^d` as a spec of degree `d` in `r` variables.
    pub fn sigma1_pow(r: usize, d: usize) -> Self {
        SymSpec {
            arity: r,
            degree: d,
            tilde: MultiPoly::var(r, 0).pow(d),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn tilde(&self) -> &MultiPoly {
        &self.tilde
    }

    /// Expand back to explicit variables: `tilde(e_1(x), .., e_r(x))`.
    pub fn expand(&self) -> MultiPoly {
        let e_polys: Vec<MultiPoly> = (1..=self.arity)
            .map(|k| elementary_poly(self.arity, k))
            .collect();
        self.tilde.compose(&e_polys).expect("arity matches")
    }

    /// Evaluate on given `sigma_1..sigma_r` values.
    pub fn eval_sigmas(&self, sigmas: &[Scalar]) -> Result<Scalar> {
        if sigmas.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: sigmas.len(),
            });
        }
        self.tilde.eval(sigmas)
    }

    /// Evaluate on polynomial-valued `sigma_1..sigma_r` (all sharing one
    /// variable count), e.g. the characteristic coefficients of a Jacobian
    /// with polynomial entries.
    pub fn eval_sigma_polys(&self, sigmas: &[MultiPoly]) -> Result<MultiPoly> {
        if sigmas.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: sigmas.len(),
            });
        }
        self.tilde.compose(sigmas)
    }

    /// Evaluate on an explicit value multiset (via its elementary values).
    pub fn eval_values(&self, values: &[Scalar]) -> Result<Scalar> {
        self.eval_sigmas(&elementary_values(values))
    }

    pub fn to_string_e(&self) -> String {
        let names: Vec<String> = (1..=self.arity).map(|k| format!("e{k}")).collect();
        self.tilde.to_string_with(&names)
    }
}

/// Elementary values of `{a} ∪ S` from `a` and the elementary values of `S`:
/// `e_k({a} ∪ S) = e_k(S) + a e_{k-1}(S)`, with `e_0 = 1`.
pub fn augment_sigmas(a: &Scalar, sigmas: &[Scalar]) -> Vec<Scalar> {
    let n = sigmas.len();
    let mut out = Vec::with_capacity(n + 1);
    for k in 1..=n + 1 {
        let ek = if k <= n {
            sigmas[k - 1].clone()
        } else {
            Scalar::zero()
        };
        let ekm1 = if k == 1 {
            Scalar::one()
        } else {
            sigmas[k - 2].clone()
        };
        out.push(ek + a * ekm1);
    }
    out
}

/// Polynomial-valued version of [`augment_sigmas`].
pub fn augment_sigma_polys(a: &MultiPoly, sigmas: &[MultiPoly]) -> Vec<MultiPoly> {
    let n = sigmas.len();
    let nvars = a.nvars();
    let mut out = Vec::with_capacity(n + 1);
    for k in 1..=n + 1 {
        let ek = if k <= n {
            sigmas[k - 1].clone()
        } else {
            MultiPoly::zero(nvars)
        };
        let ekm1 = if k == 1 {
            MultiPoly::one(nvars)
        } else {
            sigmas[k - 2].clone()
        };
        out.push(&ek + &(a * &ekm1));
    }
    out
}

/// `sigma_j(I - L)` from the `sigma_l(L)`:
/// the binomial identity `sum_{l=0}^{j} C(n-l, n-j) (-1)^l sigma_l(L)`.
pub fn sigma_shift(j: usize, n: usize, sigmas: &[Scalar]) -> Result<Scalar> {
    if sigmas.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: sigmas.len(),
        });
    }
    if j > n {
        return Err(Error::IndexOutOfRange { index: j, nvars: n });
    }
    let mut acc = Scalar::zero();
    for l in 0..=j {
        let sig_l = if l == 0 {
            Scalar::one()
        } else {
            sigmas[l - 1].clone()
        };
        acc += binomial(n - l, n - j) * neg_one_pow(l) * sig_l;
    }
    Ok(acc)
}

/// All of `sigma_1(I-L) .. sigma_n(I-L)` at once.
pub fn sigma_shift_all(n: usize, sigmas: &[Scalar]) -> Result<Vec<Scalar>> {
    (1..=n).map(|j| sigma_shift(j, n, sigmas)).collect()
}
