//! Global verification targets and bundled examples.
//!
//! The residue sums computed pointwise by [`crate::residue`] are checked
//! against closed-form Chern-class integrals of the relevant virtual bundles
//! on P^n, against the fixed-point index identity for holomorphic maps, and
//! against the point census that certifies a supplied point list is all of
//! Fix(f) ∪ I(f). Everything is an exact equality of rationals; there are no
//! tolerances.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::localalg::{local_multiplicity, LocalAlgebra};
use crate::poly::MultiPoly;
use crate::projmap::{
    classify_point, dehomogenize, fixed_point_spectrum, HomogeneousMap, PointClass, ProjPoint,
};
use crate::residue::{res1, res2, res3, simple_fixed_res1, ResidueOptions, ResidueValue};
use crate::scalar::{binomial, neg_one_pow, sc, scalar_pow, Scalar};
use crate::symfun::{sigma_shift_all, SymSpec};

fn int_pow(base: usize, exp: usize) -> Scalar {
    scalar_pow(&sc(base as i64), exp as i64)
}

// ---------------------------------------------------------------------------
// Chern-class targets
// ---------------------------------------------------------------------------

/// Which virtual bundle the integral refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChernKind {
    /// `T P^n - N^{⊗nu}` (degree-n symmetric functions in n variables).
    Phi,
    /// `(T P^n ⊕ N) - N^{⊗nu}` (degree-n symmetric functions in n+1 variables).
    Psi,
}

/// Closed-form Chern classes of the target bundle: `cj[j-1]` is the
/// coefficient of `c_1(N)^j` in `c_j`.
#[derive(Clone, Debug)]
pub struct ChernTarget {
    pub n: usize,
    pub nu: usize,
    pub kind: ChernKind,
    pub cj: Vec<Scalar>,
}

impl ChernTarget {
    pub fn new(n: usize, nu: usize, kind: ChernKind) -> Self {
        let cj = (1..=n)
            .map(|j| {
                let mut acc = Scalar::zero();
                for k in 0..=j {
                    let weight = match kind {
                        ChernKind::Phi => binomial(n + 1, k),
                        ChernKind::Psi => {
                            // convention C(n+1, -1) = 0
                            let low = if k == 0 {
                                Scalar::zero()
                            } else {
                                binomial(n + 1, k - 1)
                            };
                            binomial(n + 1, k) - low
                        }
                    };
                    acc += weight * int_pow(nu, j - k);
                }
                neg_one_pow(j) * acc
            })
            .collect();
        ChernTarget { n, nu, kind, cj }
    }

    pub fn phi(n: usize, nu: usize) -> Self {
        Self::new(n, nu, ChernKind::Phi)
    }

    pub fn psi(n: usize, nu: usize) -> Self {
        Self::new(n, nu, ChernKind::Psi)
    }
}

/// Integrate `sym` of the target bundle over P^n: substitute
/// `sigma_j -> cj[j] t^j`, take the coefficient of `t^n`, and multiply by
/// the top self-intersection of the tautological class, `(-1)^n`.
pub fn chern_integral(target: &ChernTarget, sym: &SymSpec) -> Result<Scalar> {
    let n = target.n;
    if sym.degree() != n {
        return Err(Error::WeightedDegreeMismatch { expected: n });
    }
    let expected_arity = match target.kind {
        ChernKind::Phi => n,
        ChernKind::Psi => n + 1,
    };
    if sym.arity() != expected_arity {
        return Err(Error::ArityMismatch {
            expected: expected_arity,
            got: sym.arity(),
        });
    }
    // classes above c_n vanish on P^n; weighted degree keeps them out anyway
    let mut subs: Vec<MultiPoly> = Vec::with_capacity(sym.arity());
    for j in 1..=sym.arity() {
        if j <= n {
            subs.push(MultiPoly::monomial(
                1,
                vec![j as u32],
                target.cj[j - 1].clone(),
            ));
        } else {
            subs.push(MultiPoly::zero(1));
        }
    }
    let in_t = sym.eval_sigma_polys(&subs)?;
    let coeff = in_t.coeff(&crate::poly::Monomial::new(vec![n as u32]));
    Ok(neg_one_pow(n) * coeff)
}

// ---------------------------------------------------------------------------
// Census
// ---------------------------------------------------------------------------

/// Per-point record shared by every verification.
#[derive(Clone, Debug)]
pub struct PointOutcome {
    pub point: ProjPoint,
    pub class: PointClass,
    /// Local multiplicity; `None` at regular points.
    pub mult: Option<usize>,
    /// Full local algebra when one was computed directly.
    pub local: Option<LocalAlgebra>,
    pub residue: Option<ResidueValue>,
}

impl PointOutcome {
    pub fn mult(&self) -> Option<usize> {
        self.mult
    }
}

/// Totals of the point census against the closed-form count.
#[derive(Clone, Debug)]
pub struct CensusOutcome {
    /// Sum of local multiplicities over the supplied singular points.
    pub total: Scalar,
    /// `((nu+1)^{n+1} - 1)/nu`.
    pub expected: Scalar,
    /// `sum_k C(n+1, k+1) nu^k`; equals `expected`.
    pub expected_binomial: Scalar,
    /// Degree-d Bezout count `(d^{n+1} - 1)/(d - 1)` with `d = nu + 1`;
    /// equals `expected`.
    pub expected_bezout: Scalar,
    pub complete: bool,
}

fn census_expected(n: usize, nu: usize) -> (Scalar, Scalar, Scalar) {
    let expected = (int_pow(nu + 1, n + 1) - Scalar::one()) / sc(nu as i64);
    let mut expected_binomial = Scalar::zero();
    for k in 0..=n {
        expected_binomial += binomial(n + 1, k + 1) * int_pow(nu, k);
    }
    let d = nu + 1;
    let expected_bezout = (int_pow(d, n + 1) - Scalar::one()) / sc(d as i64 - 1);
    (expected, expected_binomial, expected_bezout)
}

fn check_duplicates(points: &[ProjPoint]) -> Result<()> {
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i] == points[j] {
                return Err(Error::DuplicatePoint(points[i].to_string()));
            }
        }
    }
    Ok(())
}

/// Classify the supplied points and total their local multiplicities.
pub fn census(
    map: &HomogeneousMap,
    points: &[ProjPoint],
    opts: &ResidueOptions,
) -> Result<(Vec<PointOutcome>, CensusOutcome)> {
    check_duplicates(points)?;
    let mut outcomes = Vec::with_capacity(points.len());
    let mut total = Scalar::zero();
    for p in points {
        let class = classify_point(map, p)?;
        let local = if class == PointClass::RegularNonFixed {
            None
        } else {
            let lm = dehomogenize(map, p)?;
            let la = local_multiplicity(&lm.chart.g, &lm.w0, &opts.local)?;
            total += sc(la.mult as i64);
            Some(la)
        };
        outcomes.push(PointOutcome {
            point: p.clone(),
            class,
            mult: local.as_ref().map(|l| l.mult),
            local,
            residue: None,
        });
    }
    let (expected, expected_binomial, expected_bezout) = census_expected(map.n(), map.nu());
    let complete = total == expected;
    Ok((
        outcomes,
        CensusOutcome {
            total,
            expected,
            expected_binomial,
            expected_bezout,
            complete,
        },
    ))
}

// ---------------------------------------------------------------------------
// Residue-sum verification
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SumIdentity {
    /// Residue sum equals `(-1)^n`.
    Res1,
    /// Residue sum equals the Phi-bundle integral of `phi`.
    Res2,
    /// Residue sum equals the Psi-bundle integral of `psi` (`nu > 1`).
    Res3,
}

/// Outcome of one global sum identity.
#[derive(Clone, Debug)]
pub struct SumCheck {
    pub which: SumIdentity,
    pub outcomes: Vec<PointOutcome>,
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub census: CensusOutcome,
    /// Equality asserted only on a census-complete list.
    pub pass: bool,
}

/// Sum the pointwise residues over the supplied points and compare with the
/// global target. Regular points are reported and skipped; the sum identity
/// is only asserted when the census certifies the list is complete.
pub fn verify_residue_sum(
    map: &HomogeneousMap,
    points: &[ProjPoint],
    which: SumIdentity,
    sym: Option<&SymSpec>,
    opts: &ResidueOptions,
) -> Result<SumCheck> {
    check_duplicates(points)?;
    let n = map.n();
    let rhs = match which {
        SumIdentity::Res1 => neg_one_pow(n),
        SumIdentity::Res2 => {
            let phi =
                sym.ok_or_else(|| Error::InvalidInput("phi is required for this check".into()))?;
            chern_integral(&ChernTarget::phi(n, map.nu()), phi)?
        }
        SumIdentity::Res3 => {
            if map.nu() <= 1 {
                return Err(Error::NuTooSmall);
            }
            let psi =
                sym.ok_or_else(|| Error::InvalidInput("psi is required for this check".into()))?;
            chern_integral(&ChernTarget::psi(n, map.nu()), psi)?
        }
    };
    let mut outcomes = Vec::with_capacity(points.len());
    let mut lhs = Scalar::zero();
    let mut total = Scalar::zero();
    for p in points {
        let class = classify_point(map, p)?;
        if class == PointClass::RegularNonFixed {
            outcomes.push(PointOutcome {
                point: p.clone(),
                class,
                mult: None,
                local: None,
                residue: None,
            });
            continue;
        }
        let value = match which {
            SumIdentity::Res1 => res1(map, p, opts)?,
            SumIdentity::Res2 => res2(map, p, sym.unwrap(), opts)?,
            SumIdentity::Res3 => res3(map, p, sym.unwrap(), opts)?,
        };
        lhs += &value.value;
        total += sc(value.local.mult as i64);
        outcomes.push(PointOutcome {
            point: p.clone(),
            class,
            mult: Some(value.local.mult),
            local: None,
            residue: Some(value),
        });
    }
    let (expected, expected_binomial, expected_bezout) = census_expected(n, map.nu());
    let complete = total == expected;
    let census = CensusOutcome {
        total,
        expected,
        expected_binomial,
        expected_bezout,
        complete,
    };
    let pass = census.complete && lhs == rhs;
    Ok(SumCheck {
        which,
        outcomes,
        lhs,
        rhs,
        census,
        pass,
    })
}

// ---------------------------------------------------------------------------
// Fixed-point index identity for holomorphic maps
// ---------------------------------------------------------------------------

/// Per-point data entering the fixed-point identity.
#[derive(Clone, Debug)]
pub struct UedaPoint {
    pub point: ProjPoint,
    pub sigma_df: Vec<Scalar>,
    /// `sigma_k(df_p) / prod(1 - lambda_j(p))`.
    pub term: Scalar,
}

/// Outcome of the index identity for one k.
#[derive(Clone, Debug)]
pub struct UedaCheck {
    pub k: usize,
    pub per_point: Vec<UedaPoint>,
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub census: CensusOutcome,
    /// Every engine `Res^1` agreed with `(-1)^n / sigma_n(I - df)` from the
    /// same spectral data.
    pub cross_check: bool,
    pub pass: bool,
}

fn require_holomorphic_simple(
    map: &HomogeneousMap,
    points: &[ProjPoint],
    opts: &ResidueOptions,
) -> Result<(Vec<PointOutcome>, CensusOutcome)> {
    let (outcomes, census) = census(map, points, opts)?;
    for o in &outcomes {
        if o.class == PointClass::IndeterminacyPoint {
            return Err(Error::IndeterminacyPresent(o.point.to_string()));
        }
    }
    Ok((outcomes, census))
}

/// The k-th fixed-point sum `sum_p sigma_k(df_p) / prod(1 - lambda_j(p))`
/// against `(-1)^k (nu+1)^k`. Requires every supplied point to be a simple
/// fixed point; holomorphy is certified when the census completes with fixed
/// points alone.
pub fn ueda_check(
    map: &HomogeneousMap,
    points: &[ProjPoint],
    k: usize,
    opts: &ResidueOptions,
) -> Result<UedaCheck> {
    let n = map.n();
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, nvars: n });
    }
    let (outcomes, census) = require_holomorphic_simple(map, points, opts)?;
    let mut per_point = Vec::new();
    let mut lhs = Scalar::zero();
    let mut cross_check = true;
    for o in &outcomes {
        if o.class != PointClass::FixedPoint {
            continue;
        }
        let data = fixed_point_spectrum(map, &o.point)?;
        if !data.is_simple() {
            return Err(Error::NonSimpleFixedPoint(o.point.to_string()));
        }
        let denom = data.det_one_minus_df.clone();
        let numer = if k == 0 {
            Scalar::one()
        } else {
            data.sigma_df[k - 1].clone()
        };
        let term = numer / &denom;
        lhs += &term;
        // re-derive Res^1 from the spectral data and compare with the engine
        let engine = res1(map, &o.point, opts)?;
        let from_sigma = simple_fixed_res1(&data.sigma_df)?;
        cross_check &= engine.value == from_sigma;
        per_point.push(UedaPoint {
            point: o.point.clone(),
            sigma_df: data.sigma_df,
            term,
        });
    }
    let rhs = neg_one_pow(k) * int_pow(map.nu() + 1, k);
    let pass = census.complete && lhs == rhs && cross_check;
    Ok(UedaCheck {
        k,
        per_point,
        lhs,
        rhs,
        census,
        cross_check,
        pass,
    })
}

/// A sample of the characteristic-polynomial sum identity.
#[derive(Clone, Debug)]
pub struct UedaPolySample {
    pub t: Scalar,
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub pass: bool,
}

/// Outcome of the characteristic-polynomial identities (draft material):
/// `sum_p Phi_f(t,p)/Phi_f(1,p) = sum_k d^{n-k} t^k` with `d = nu + 1`, plus
/// the derivative-at-1 identity
/// `sum_p sum_j 1/(1 - lambda_j(p)) = sum_k k d^{n-k}`.
#[derive(Clone, Debug)]
pub struct UedaPolyCheck {
    pub samples: Vec<UedaPolySample>,
    pub derivative_lhs: Scalar,
    pub derivative_rhs: Scalar,
    pub derivative_pass: bool,
    pub census: CensusOutcome,
    pub pass: bool,
}

pub fn ueda_polynomial_checks(
    map: &HomogeneousMap,
    points: &[ProjPoint],
    t_samples: &[Scalar],
    opts: &ResidueOptions,
) -> Result<UedaPolyCheck> {
    let n = map.n();
    let d = map.nu() + 1;
    let (outcomes, census) = require_holomorphic_simple(map, points, opts)?;
    let mut spectra: Vec<Vec<Scalar>> = Vec::new();
    for o in &outcomes {
        if o.class != PointClass::FixedPoint {
            continue;
        }
        let data = fixed_point_spectrum(map, &o.point)?;
        if !data.is_simple() {
            return Err(Error::NonSimpleFixedPoint(o.point.to_string()));
        }
        spectra.push(data.sigma_df);
    }
    // Phi_f(t, p) = sum_k (-1)^k sigma_k(df_p) t^{n-k}; Phi_f(1, p) = det(I - df_p)
    let phi_at = |sigma: &[Scalar], t: &Scalar| -> Scalar {
        let mut acc = Scalar::zero();
        for k in 0..=n {
            let sig = if k == 0 {
                Scalar::one()
            } else {
                sigma[k - 1].clone()
            };
            acc += neg_one_pow(k) * sig * scalar_pow(t, (n - k) as i64);
        }
        acc
    };
    let mut samples = Vec::with_capacity(t_samples.len());
    let mut all_pass = true;
    for t in t_samples {
        let mut lhs = Scalar::zero();
        for sigma in &spectra {
            let denom = phi_at(sigma, &Scalar::one());
            lhs += phi_at(sigma, t) / denom;
        }
        let mut rhs = Scalar::zero();
        for k in 0..=n {
            rhs += int_pow(d, n - k) * scalar_pow(t, k as i64);
        }
        let pass = lhs == rhs;
        all_pass &= pass;
        samples.push(UedaPolySample {
            t: t.clone(),
            lhs,
            rhs,
            pass,
        });
    }
    // derivative at t = 1: sum_j 1/(1 - lambda_j) = sigma_{n-1}(I - df)/sigma_n(I - df)
    let mut derivative_lhs = Scalar::zero();
    for sigma in &spectra {
        let shifted = sigma_shift_all(n, sigma)?;
        let top = shifted[n - 1].clone();
        let next = if n == 1 {
            Scalar::one()
        } else {
            shifted[n - 2].clone()
        };
        derivative_lhs += next / top;
    }
    let mut derivative_rhs = Scalar::zero();
    for k in 0..=n {
        derivative_rhs += sc(k as i64) * int_pow(d, n - k);
    }
    let derivative_pass = derivative_lhs == derivative_rhs;
    let pass = census.complete && all_pass && derivative_pass;
    Ok(UedaPolyCheck {
        samples,
        derivative_lhs,
        derivative_rhs,
        derivative_pass,
        census,
        pass,
    })
}

// ---------------------------------------------------------------------------
// Bundled examples
// ---------------------------------------------------------------------------

/// A generated fixed point together with its level: the number of nonzero
/// homogeneous coordinates minus one.
#[derive(Clone, Debug)]
pub struct LeveledPoint {
    pub point: ProjPoint,
    pub level: usize,
}

/// The coordinate power map `[z] -> [z_0^{nu+1} : ... : z_n^{nu+1}]` with its
/// complete rational fixed-point list. Nonzero coordinates of a fixed point
/// are nu-th roots of unity, so completeness over Q needs `nu` in {1, 2}.
pub fn make_power_map(n: usize, nu: usize) -> Result<(HomogeneousMap, Vec<LeveledPoint>)> {
    if n < 1 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let roots: Vec<Scalar> = match nu {
        1 => vec![sc(1)],
        2 => vec![sc(1), sc(-1)],
        _ => return Err(Error::NonRationalFixedPoints { nu }),
    };
    let nv = n + 1;
    let components: Vec<MultiPoly> = (0..nv).map(|j| MultiPoly::var(nv, j).pow(nu + 1)).collect();
    let map = HomogeneousMap::new(components)?;
    let mut points = Vec::new();
    for mask in 1u32..(1 << nv) {
        let support: Vec<usize> = (0..nv).filter(|&j| mask & (1 << j) != 0).collect();
        let level = support.len() - 1;
        // first supported coordinate normalized to 1; the rest range over the roots
        let free = support.len() - 1;
        let mut assignment = vec![0usize; free];
        loop {
            let mut coords = vec![Scalar::zero(); nv];
            coords[support[0]] = Scalar::one();
            for (slot, &root_idx) in assignment.iter().enumerate() {
                coords[support[slot + 1]] = roots[root_idx].clone();
            }
            points.push(LeveledPoint {
                point: ProjPoint::new(coords)?,
                level,
            });
            // next assignment in the mixed-radix counter
            let mut i = 0;
            loop {
                if i == free {
                    break;
                }
                assignment[i] += 1;
                if assignment[i] < roots.len() {
                    break;
                }
                assignment[i] = 0;
                i += 1;
            }
            if free == 0 || i == free {
                break;
            }
        }
    }
    Ok((map, points))
}

/// The quadratic involution `[z0:z1:z2] -> [z1 z2 : z0 z2 : z0 z1]` with its
/// four fixed and three indeterminacy points.
pub fn make_cremona() -> (HomogeneousMap, Vec<ProjPoint>) {
    let z = |i: usize| MultiPoly::var(3, i);
    let map = HomogeneousMap::new(vec![&z(1) * &z(2), &z(0) * &z(2), &z(0) * &z(1)])
        .expect("valid Cremona map");
    let pts = vec![
        ProjPoint::from_ints(&[1, 1, 1]).unwrap(),
        ProjPoint::from_ints(&[1, 1, -1]).unwrap(),
        ProjPoint::from_ints(&[1, -1, 1]).unwrap(),
        ProjPoint::from_ints(&[1, -1, -1]).unwrap(),
        ProjPoint::from_ints(&[1, 0, 0]).unwrap(),
        ProjPoint::from_ints(&[0, 1, 0]).unwrap(),
        ProjPoint::from_ints(&[0, 0, 1]).unwrap(),
    ];
    (map, pts)
}

/// `F = (z0^2, z0 z1 + z1^2)` on P^1: holomorphic, with a multiplicity-2
/// fixed point at [1:0] and a simple one at [0:1]. The multiple point forces
/// the series route for every residue there.
pub fn make_degenerate_p1() -> (HomogeneousMap, Vec<ProjPoint>) {
    let z = |i: usize| MultiPoly::var(2, i);
    let map = HomogeneousMap::new(vec![z(0).pow(2), &(&z(0) * &z(1)) + &z(1).pow(2)])
        .expect("valid degenerate map");
    let pts = vec![
        ProjPoint::from_ints(&[1, 0]).unwrap(),
        ProjPoint::from_ints(&[0, 1]).unwrap(),
    ];
    (map, pts)
}

/// sigma_k(df) at a level-l fixed point of the power map: the differential
/// has eigenvalue nu+1 with multiplicity l and 0 with multiplicity n-l, so
/// sigma_k = C(l, k) (nu+1)^k.
pub fn power_map_level_sigma(n: usize, nu: usize, level: usize) -> Vec<Scalar> {
    (1..=n)
        .map(|k| binomial(level, k) * int_pow(nu + 1, k))
        .collect()
}

/// The per-level closed form of the residue sum for the Phi target:
/// `(-1)^n sum_l C(n+1, l+1) (-1)^l phi(nu..nu, -1..-1)` with `l` copies of nu.
pub fn power_map_level_sum_phi(n: usize, nu: usize, phi: &SymSpec) -> Result<Scalar> {
    let mut acc = Scalar::zero();
    for level in 0..=n {
        let mut values = vec![sc(nu as i64); level];
        values.extend(std::iter::repeat_n(sc(-1), n - level));
        acc += binomial(n + 1, level + 1) * neg_one_pow(level) * phi.eval_values(&values)?;
    }
    Ok(neg_one_pow(n) * acc)
}

/// Same for the Psi target, with the extra first argument pinned to 1.
pub fn power_map_level_sum_psi(n: usize, nu: usize, psi: &SymSpec) -> Result<Scalar> {
    let mut acc = Scalar::zero();
    for level in 0..=n {
        let mut values = vec![Scalar::one()];
        values.extend(std::iter::repeat_n(sc(nu as i64), level));
        values.extend(std::iter::repeat_n(sc(-1), n - level));
        acc += binomial(n + 1, level + 1) * neg_one_pow(level) * psi.eval_values(&values)?;
    }
    Ok(neg_one_pow(n) * acc)
}

// ---------------------------------------------------------------------------
// Abel's identity
// ---------------------------------------------------------------------------

/// Exact check of `(x+y)^r = sum_k C(r,k) x (x - kz)^{k-1} (y + kz)^{r-k}`
/// for rational inputs with `x != 0` (the k = 0 term is `y^r`).
pub fn abel_identity_check(r: usize, x: &Scalar, y: &Scalar, z: &Scalar) -> Result<bool> {
    if x.is_zero() {
        return Err(Error::InvalidInput("abel identity requires x != 0".into()));
    }
    let lhs = scalar_pow(&(x + y), r as i64);
    let mut rhs = scalar_pow(y, r as i64);
    for k in 1..=r {
        let base1 = x - &(sc(k as i64) * z);
        let base2 = y + &(sc(k as i64) * z);
        let term = binomial(r, k)
            * x
            * scalar_pow(&base1, (k - 1) as i64)
            * scalar_pow(&base2, (r - k) as i64);
        rhs += term;
    }
    Ok(lhs == rhs)
}
