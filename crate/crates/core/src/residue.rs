//! Grothendieck residues and the three local index residues.
//!
//! At a nondegenerate zero of the chart system the residue collapses to the
//! closed form `h(w0)/det(dg)(w0)`. Otherwise the Hartshorne route applies:
//! find minimal exponents `alpha_i` with `w_i^{alpha_i}` in the local ideal,
//! cofactor jets `b` with `w_i^{alpha_i} = sum_j b_ij g_j`, and read off the
//! coefficient of `w^(alpha - 1)` in the series of `h det(b)`. Both routes
//! stay inside exact rational arithmetic, and the Hartshorne path recomputes
//! itself at two extra orders as a built-in stability certificate.
//!
//! The numerators of the three index residues never mention an eigenvalue:
//! symmetric functions of `dg_w` (and of the pivot-augmented multiset) are
//! evaluated through characteristic coefficients in the elementary basis.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::jet::{jet_matrix_det, Jet};
use crate::localalg::{LocalConfig, LocalSolver};
use crate::poly::{Monomial, MultiPoly};
use crate::projmap::{
    classify_point, dehomogenize_in_chart, HomogeneousMap, PointClass, ProjPoint,
};
use crate::scalar::{neg_one_pow, Scalar};
use crate::symfun::{augment_sigma_polys, augment_sigmas, sigma_shift, sigma_shift_all, SymSpec};

/// Which evaluation route produced a residue.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ResiduePath {
    ClosedForm,
    Hartshorne,
}

impl ResiduePath {
    pub fn as_str(&self) -> &'static str {
        match self {
            ResiduePath::ClosedForm => "closed-form",
            ResiduePath::Hartshorne => "hartshorne",
        }
    }
}

/// Summary of the local algebra seen while computing a residue.
#[derive(Clone, Debug)]
pub struct LocalSummary {
    pub mult: usize,
    pub stab_order: usize,
    pub alphas: Option<Vec<u32>>,
}

#[derive(Clone, Debug)]
pub struct ResidueValue {
    pub value: Scalar,
    pub path: ResiduePath,
    pub local: LocalSummary,
}

#[derive(Clone, Copy, Debug)]
pub struct ResidueOptions {
    /// Use the Hartshorne route even when the closed form applies.
    pub force_hartshorne: bool,
    /// Re-extract the coefficient at order M+2 and insist on equality.
    pub stability_check: bool,
    pub local: LocalConfig,
}

impl Default for ResidueOptions {
    fn default() -> Self {
        ResidueOptions {
            force_hartshorne: false,
            stability_check: true,
            local: LocalConfig::default(),
        }
    }
}

impl ResidueOptions {
    pub fn with_cap(cap: Option<usize>) -> Self {
        ResidueOptions {
            local: LocalConfig { cap },
            ..Default::default()
        }
    }

    pub fn forced() -> Self {
        ResidueOptions {
            force_hartshorne: true,
            ..Default::default()
        }
    }
}

/// The Grothendieck residue of `h dw / (g_1,...,g_n)` at the isolated zero `w0`.
pub fn grothendieck_residue(
    h: &MultiPoly,
    g: &[MultiPoly],
    w0: &[Scalar],
    opts: &ResidueOptions,
) -> Result<ResidueValue> {
    let n = g.len();
    if h.nvars() != n {
        return Err(Error::DimensionMismatch("numerator variable count".into()));
    }
    let solver = LocalSolver::new(g, w0, &opts.local)?;

    // det(dg)(w0) decides the route
    let jac: Vec<Vec<Scalar>> = g
        .iter()
        .map(|gj| {
            (0..n)
                .map(|k| gj.partial(k)?.eval(w0))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let det = crate::matrix::PolyMatrix::from_scalar_rows(&jac)?
        .det_laplace()?
        .constant_value()
        .expect("scalar matrix determinant");

    if !det.is_zero() && !opts.force_hartshorne {
        debug_assert_eq!(
            solver.mult, 1,
            "nonzero Jacobian determinant forces multiplicity 1"
        );
        let value = h.eval(w0)? / det;
        return Ok(ResidueValue {
            value,
            path: ResiduePath::ClosedForm,
            local: LocalSummary {
                mult: solver.mult,
                stab_order: solver.stab_order,
                alphas: None,
            },
        });
    }

    let alpha = solver.alphas()?;
    let m_order: usize = alpha.iter().map(|&a| a as usize).sum::<usize>() - n;
    let h0 = h.translate(w0)?;
    let value = hartshorne_extract(&solver, &h0, &alpha, m_order)?;
    if opts.stability_check {
        let again = hartshorne_extract(&solver, &h0, &alpha, m_order + 2)?;
        if again != value {
            return Err(Error::Internal(format!(
                "residue extraction unstable between orders {} and {}",
                m_order,
                m_order + 2
            )));
        }
    }
    Ok(ResidueValue {
        value,
        path: ResiduePath::Hartshorne,
        local: LocalSummary {
            mult: solver.mult,
            stab_order: solver.stab_order,
            alphas: Some(alpha),
        },
    })
}

/// Coefficient of `w^(alpha-1)` in `h0 det(b)` computed with jets of the
/// given order (>= sum alpha_i - n, the degree of the target monomial).
fn hartshorne_extract(
    solver: &LocalSolver,
    h0: &MultiPoly,
    alpha: &[u32],
    order: usize,
) -> Result<Scalar> {
    let b = solver.cofactors0(alpha, order)?;
    let det_b = jet_matrix_det(&b);
    let series = Jet::new(h0.clone(), order).mul(&det_b);
    let target = Monomial::new(alpha.iter().map(|&a| a - 1).collect());
    Ok(series.coeff(&target))
}

fn require_sigma(map: &HomogeneousMap, sym: &SymSpec, arity: usize) -> Result<()> {
    if sym.arity() != arity {
        return Err(Error::ArityMismatch {
            expected: arity,
            got: sym.arity(),
        });
    }
    if sym.degree() != map.n() {
        return Err(Error::WeightedDegreeMismatch { expected: map.n() });
    }
    Ok(())
}

fn require_singular(map: &HomogeneousMap, p: &ProjPoint) -> Result<PointClass> {
    let class = classify_point(map, p)?;
    if class == PointClass::RegularNonFixed {
        return Err(Error::RegularPoint);
    }
    Ok(class)
}

/// First index residue: numerator `F_0(1,w)^n` over the chart system.
pub fn res1(map: &HomogeneousMap, p: &ProjPoint, opts: &ResidueOptions) -> Result<ResidueValue> {
    res1_in_chart(map, p, p.pivot(), opts)
}

pub fn res1_in_chart(
    map: &HomogeneousMap,
    p: &ProjPoint,
    chart: usize,
    opts: &ResidueOptions,
) -> Result<ResidueValue> {
    require_singular(map, p)?;
    let lm = dehomogenize_in_chart(map, p, chart)?;
    let h = lm.chart.f0.pow(map.n());
    grothendieck_residue(&h, &lm.chart.g, &lm.w0, opts)
}

/// Second index residue: numerator `phi(dg_w)` for a symmetric `phi` of
/// degree n in n variables.
pub fn res2(
    map: &HomogeneousMap,
    p: &ProjPoint,
    phi: &SymSpec,
    opts: &ResidueOptions,
) -> Result<ResidueValue> {
    res2_in_chart(map, p, p.pivot(), phi, opts)
}

pub fn res2_in_chart(
    map: &HomogeneousMap,
    p: &ProjPoint,
    chart: usize,
    phi: &SymSpec,
    opts: &ResidueOptions,
) -> Result<ResidueValue> {
    require_sigma(map, phi, map.n())?;
    require_singular(map, p)?;
    let lm = dehomogenize_in_chart(map, p, chart)?;
    let sigmas = lm.chart.jac_g.char_poly_coeffs()?;
    let h = phi.eval_sigma_polys(&sigmas)?;
    grothendieck_residue(&h, &lm.chart.g, &lm.w0, opts)
}

/// Third index residue (`nu > 1` only): numerator `psi` on the multiset
/// `{F_0(1,w)} ∪ spec(dg_w)` for a symmetric `psi` of degree n in n+1
/// variables.
pub fn res3(
    map: &HomogeneousMap,
    p: &ProjPoint,
    psi: &SymSpec,
    opts: &ResidueOptions,
) -> Result<ResidueValue> {
    res3_in_chart(map, p, p.pivot(), psi, opts)
}

pub fn res3_in_chart(
    map: &HomogeneousMap,
    p: &ProjPoint,
    chart: usize,
    psi: &SymSpec,
    opts: &ResidueOptions,
) -> Result<ResidueValue> {
    if map.nu() <= 1 {
        return Err(Error::NuTooSmall);
    }
    require_sigma(map, psi, map.n() + 1)?;
    require_singular(map, p)?;
    let lm = dehomogenize_in_chart(map, p, chart)?;
    let sigmas = lm.chart.jac_g.char_poly_coeffs()?;
    let augmented = augment_sigma_polys(&lm.chart.f0, &sigmas);
    let h = psi.eval_sigma_polys(&augmented)?;
    grothendieck_residue(&h, &lm.chart.g, &lm.w0, opts)
}

// ---------------------------------------------------------------------------
// Closed forms at simple fixed points and nondegenerate indeterminacy points,
// phrased purely in sigma coordinates. These are an independent route used to
// cross-check the residue engine.
// ---------------------------------------------------------------------------

fn check_simple(det_one_minus_df: &Scalar) -> Result<()> {
    if det_one_minus_df.is_zero() {
        Err(Error::NonSimpleFixedPoint("sigma data".into()))
    } else {
        Ok(())
    }
}

/// `(-1)^n / prod(1 - lambda_j)` at a simple fixed point with the given
/// `sigma(df_p)`.
pub fn simple_fixed_res1(sigma_df: &[Scalar]) -> Result<Scalar> {
    let n = sigma_df.len();
    let denom = sigma_shift(n, n, sigma_df)?;
    check_simple(&denom)?;
    Ok(neg_one_pow(n) / denom)
}

/// `phi(1-lambda_1, .., 1-lambda_n) / prod(1 - lambda_j)`.
pub fn simple_fixed_res2(phi: &SymSpec, sigma_df: &[Scalar]) -> Result<Scalar> {
    let n = sigma_df.len();
    let shifted = sigma_shift_all(n, sigma_df)?;
    let denom = shifted[n - 1].clone();
    check_simple(&denom)?;
    Ok(phi.eval_sigmas(&shifted)? / denom)
}

/// `(-1)^n psi(1, lambda_1 - 1, .., lambda_n - 1) / prod(1 - lambda_j)`.
pub fn simple_fixed_res3(psi: &SymSpec, sigma_df: &[Scalar]) -> Result<Scalar> {
    let n = sigma_df.len();
    let shifted = sigma_shift_all(n, sigma_df)?;
    let denom = shifted[n - 1].clone();
    check_simple(&denom)?;
    // e_k(lambda - 1) = (-1)^k sigma_k(I - df)
    let e_minus: Vec<Scalar> = shifted
        .iter()
        .enumerate()
        .map(|(i, s)| neg_one_pow(i + 1) * s)
        .collect();
    let augmented = augment_sigmas(&Scalar::one(), &e_minus);
    Ok(neg_one_pow(n) * psi.eval_sigmas(&augmented)? / denom)
}

/// `phi(mu_1, .., mu_n) / prod(mu_j)` at a nondegenerate indeterminacy point
/// with the given `sigma(G)`.
pub fn nondegenerate_indet_res2(phi: &SymSpec, sigma_g: &[Scalar]) -> Result<Scalar> {
    let n = sigma_g.len();
    let denom = sigma_g[n - 1].clone();
    if denom.is_zero() {
        return Err(Error::InvalidInput(
            "degenerate indeterminacy point (det G = 0)".into(),
        ));
    }
    Ok(phi.eval_sigmas(sigma_g)? / denom)
}

/// `psi(0, mu_1, .., mu_n) / prod(mu_j)`.
pub fn nondegenerate_indet_res3(psi: &SymSpec, sigma_g: &[Scalar]) -> Result<Scalar> {
    let n = sigma_g.len();
    let denom = sigma_g[n - 1].clone();
    if denom.is_zero() {
        return Err(Error::InvalidInput(
            "degenerate indeterminacy point (det G = 0)".into(),
        ));
    }
    let augmented = augment_sigmas(&Scalar::zero(), sigma_g);
    Ok(psi.eval_sigmas(&augmented)? / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MultiPoly;
    use crate::scalar::{sc, sc_frac};

    fn wv(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    fn origin(n: usize) -> Vec<Scalar> {
        vec![Scalar::zero(); n]
    }

    #[test]
    fn identity_system_evaluates_numerator() {
        for n in 1..=3 {
            let g: Vec<MultiPoly> = (0..n).map(|i| wv(n, i)).collect();
            let h = &MultiPoly::one(n) + &wv(n, 0);
            let r = grothendieck_residue(&h, &g, &origin(n), &ResidueOptions::default()).unwrap();
            assert_eq!(r.value, sc(1));
            assert_eq!(r.path, ResiduePath::ClosedForm);
            assert_eq!(r.local.mult, 1);
        }
    }

    #[test]
    fn univariate_double_zero() {
        let g = vec![wv(1, 0).pow(2)];
        let opts = ResidueOptions::default();
        let one = MultiPoly::one(1);
        let r = grothendieck_residue(&one, &g, &origin(1), &opts).unwrap();
        assert_eq!(r.value, sc(0));
        assert_eq!(r.path, ResiduePath::Hartshorne);
        assert_eq!(r.local.mult, 2);
        let r = grothendieck_residue(&wv(1, 0), &g, &origin(1), &opts).unwrap();
        assert_eq!(r.value, sc(1));
    }

    /// Independent oracle: for g = (w^a) univariate, the residue of h dw / g
    /// is the coefficient of w^{a-1} in h, by direct Laurent expansion.
    #[test]
    fn univariate_laurent_oracle() {
        let opts = ResidueOptions::default();
        for a in 1..=4u32 {
            let g = vec![wv(1, 0).pow(a as usize)];
            // h = 1 + 2w + 3w^2 + 5w^3 + 7w^4
            let coeffs = [1i64, 2, 3, 5, 7];
            let mut h = MultiPoly::zero(1);
            for (e, &c) in coeffs.iter().enumerate() {
                h = &h + &wv(1, 0).pow(e).scale(&sc(c));
            }
            let expect = sc(coeffs[(a - 1) as usize]);
            let r = grothendieck_residue(&h, &g, &origin(1), &opts).unwrap();
            assert_eq!(r.value, expect, "alpha = {a}");
        }
    }

    #[test]
    fn nondegenerate_closed_form() {
        // dg = diag(-2,-2), h(w0) = 1 -> 1/4 (the Cremona fixed-point numerator)
        let n = 2;
        let g = vec![wv(n, 0).scale(&sc(-2)), wv(n, 1).scale(&sc(-2))];
        let h = MultiPoly::one(n);
        let r = grothendieck_residue(&h, &g, &origin(n), &ResidueOptions::default()).unwrap();
        assert_eq!(r.value, sc_frac(1, 4));
        assert_eq!(r.path, ResiduePath::ClosedForm);
    }

    #[test]
    fn forced_hartshorne_agrees_with_closed_form() {
        let n = 2;
        // a nondiagonal nondegenerate system with higher-order noise
        let g = vec![
            &(&wv(n, 0) + &wv(n, 1)) + &(&wv(n, 0) * &wv(n, 1)),
            &(&wv(n, 0) - &wv(n, 1)) + &wv(n, 1).pow(3),
        ];
        let h = &(&MultiPoly::one(n) + &wv(n, 0).pow(2)) + &wv(n, 1).scale(&sc(3));
        let closed = grothendieck_residue(&h, &g, &origin(n), &ResidueOptions::default()).unwrap();
        let forced = grothendieck_residue(&h, &g, &origin(n), &ResidueOptions::forced()).unwrap();
        assert_eq!(closed.path, ResiduePath::ClosedForm);
        assert_eq!(forced.path, ResiduePath::Hartshorne);
        assert_eq!(closed.value, forced.value);
    }

    #[test]
    fn residue_is_linear_in_numerator() {
        let g = vec![wv(1, 0).pow(3)];
        let opts = ResidueOptions::default();
        let h1 = &wv(1, 0).pow(2) + &wv(1, 0);
        let h2 = &MultiPoly::one(1) + &wv(1, 0).pow(2).scale(&sc(4));
        let r1 = grothendieck_residue(&h1, &g, &origin(1), &opts)
            .unwrap()
            .value;
        let r2 = grothendieck_residue(&h2, &g, &origin(1), &opts)
            .unwrap()
            .value;
        let sum = &h1 + &h2.scale(&sc_frac(5, 3));
        let rs = grothendieck_residue(&sum, &g, &origin(1), &opts)
            .unwrap()
            .value;
        assert_eq!(rs, r1 + sc_frac(5, 3) * r2);
    }

    #[test]
    fn residue_annihilates_the_ideal() {
        // h = g_j * q has residue 0 (local duality), including on the
        // Hartshorne route
        let n = 2;
        let g = vec![&wv(n, 0).pow(2) - &wv(n, 1).pow(3), wv(n, 1).pow(2)];
        let opts = ResidueOptions::default();
        for j in 0..n {
            let q = &(&MultiPoly::one(n) + &wv(n, 0)) + &wv(n, 1).scale(&sc(2));
            let h = &g[j] * &q;
            let r = grothendieck_residue(&h, &g, &origin(n), &opts).unwrap();
            assert_eq!(r.path, ResiduePath::Hartshorne);
            assert_eq!(r.value, sc(0), "g_{j} * q must have zero residue");
        }
    }

    #[test]
    fn rejects_nonvanishing_center() {
        let g = vec![&wv(1, 0) + &MultiPoly::one(1)];
        let r = grothendieck_residue(
            &MultiPoly::one(1),
            &g,
            &origin(1),
            &ResidueOptions::default(),
        );
        assert!(matches!(r, Err(Error::NonzeroAtCenter)));
    }

    #[test]
    fn regular_points_carry_no_residue() {
        let map = HomogeneousMap::new(vec![wv(2, 0).pow(2), wv(2, 1).pow(2)]).unwrap();
        let p = ProjPoint::from_ints(&[1, 2]).unwrap();
        assert!(matches!(
            res1(&map, &p, &ResidueOptions::default()),
            Err(Error::RegularPoint)
        ));
    }

    #[test]
    fn res3_requires_nu_above_one() {
        let map = HomogeneousMap::new(vec![wv(2, 0).pow(2), wv(2, 1).pow(2)]).unwrap(); // nu = 1
        let p = ProjPoint::from_ints(&[1, 1]).unwrap();
        let psi = SymSpec::sigma(2, 1);
        assert!(matches!(
            res3(&map, &p, &psi, &ResidueOptions::default()),
            Err(Error::NuTooSmall)
        ));
    }
}
