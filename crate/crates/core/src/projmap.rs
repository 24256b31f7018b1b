//! Meromorphic self-maps of projective space through their inducing
//! homogeneous polynomial maps.
//!
//! A degree-d self-map of P^n is induced by n+1 homogeneous polynomials of
//! degree d with no common factor. In the affine chart where coordinate `j0`
//! is nonzero (permuted so `j0` plays the role of index 0) the singular set
//! Fix(f) ∪ I(f) is cut out by the chart system
//! `g_j(w) = F_j(1, w) - w_j F_0(1, w)`, whose Jacobian drives every residue
//! computation downstream.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::parse::{parse_poly, VarTable};
use crate::poly::{gcd_many, MultiPoly};
use crate::scalar::{parse_scalar, scalar_string, Scalar};

/// Validated homogeneous self-map of C^{n+1}; `deg = nu + 1 >= 2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomogeneousMap {
    n: usize,
    deg: usize,
    components: Vec<MultiPoly>,
}

impl HomogeneousMap {
    /// Validate `n+1` polynomials in `n+1` variables: equal homogeneous
    /// degrees >= 2, not all zero, and no common non-unit factor.
    pub fn new(components: Vec<MultiPoly>) -> Result<Self> {
        if components.len() < 2 {
            return Err(Error::InvalidMap(
                "need at least two components (n >= 1)".into(),
            ));
        }
        let nvars = components.len();
        let n = nvars - 1;
        if components.iter().any(|p| p.nvars() != nvars) {
            return Err(Error::InvalidMap(format!(
                "each of the {nvars} components must be a polynomial in {nvars} variables"
            )));
        }
        let mut deg: Option<usize> = None;
        let mut all_zero = true;
        for (j, p) in components.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            all_zero = false;
            let d = p.total_degree().unwrap();
            if !p.is_homogeneous_of(d) {
                return Err(Error::InvalidMap(format!(
                    "component {j} is not homogeneous"
                )));
            }
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => {
                    return Err(Error::InvalidMap(format!(
                        "components have unequal degrees ({prev} and {d})"
                    )));
                }
                _ => {}
            }
        }
        if all_zero {
            return Err(Error::InvalidMap("all components are zero".into()));
        }
        let deg = deg.unwrap();
        if deg < 2 {
            return Err(Error::InvalidMap(format!("degree {deg} < 2")));
        }
        let nonzero: Vec<MultiPoly> = components
            .iter()
            .filter(|p| !p.is_zero())
            .cloned()
            .collect();
        let g = gcd_many(&nonzero);
        if g.total_degree() != Some(0) {
            return Err(Error::InvalidMap(format!(
                "components share the non-unit factor {}",
                g.to_string_with(VarTable::homogeneous(nvars).names())
            )));
        }
        Ok(HomogeneousMap { n, deg, components })
    }

    /// Parse from component strings over `z0..zn`.
    pub fn parse(n: usize, components: &[String]) -> Result<Self> {
        if components.len() != n + 1 {
            return Err(Error::InvalidMap(format!(
                "a map of P^{n} needs {} components, got {}",
                n + 1,
                components.len()
            )));
        }
        let vars = VarTable::homogeneous(n + 1);
        let polys = components
            .iter()
            .enumerate()
            .map(|(j, s)| {
                parse_poly(s, &vars).map_err(|e| Error::InvalidMap(format!("component {j}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(polys)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Common degree of the components (`nu + 1`).
    pub fn deg(&self) -> usize {
        self.deg
    }

    /// The order parameter `nu = deg - 1` appearing in the index formulas.
    pub fn nu(&self) -> usize {
        self.deg - 1
    }

    pub fn component(&self, j: usize) -> &MultiPoly {
        &self.components[j]
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn eval_vector(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.components.iter().map(|p| p.eval(v)).collect()
    }

    pub fn component_strings(&self) -> Vec<String> {
        let vars = VarTable::homogeneous(self.n + 1);
        self.components
            .iter()
            .map(|p| p.to_string_with(vars.names()))
            .collect()
    }
}

/// Point of P^n with rational homogeneous coordinates, normalized so the
/// first nonzero coordinate equals 1. Equality is equality of normalized
/// coordinates, hence genuine projective equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjPoint {
    coords: Vec<Scalar>,
    pivot: usize,
}

impl ProjPoint {
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidPoint(
                "need at least two homogeneous coordinates".into(),
            ));
        }
        let pivot = coords
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::InvalidPoint("all coordinates are zero".into()))?;
        let scale = coords[pivot].recip();
        let coords = coords.iter().map(|c| c * &scale).collect();
        Ok(ProjPoint { coords, pivot })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(
            coords
                .iter()
                .map(|&c| Scalar::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn parse(coords: &[String]) -> Result<Self> {
        let vals = coords
            .iter()
            .map(|s| parse_scalar(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vals)
    }

    pub fn dim_ambient(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn coord_strings(&self) -> Vec<String> {
        self.coords.iter().map(scalar_string).collect()
    }

    /// Indices of the charts containing this point.
    pub fn visible_charts(&self) -> Vec<usize> {
        (0..self.coords.len())
            .filter(|&j| !self.coords[j].is_zero())
            .collect()
    }

    /// Affine coordinates in chart `j0` (requires `coords[j0] != 0`):
    /// the remaining coordinates divided by `coords[j0]`, in index order.
    pub fn chart_coords(&self, j0: usize) -> Result<Vec<Scalar>> {
        if j0 >= self.coords.len() || self.coords[j0].is_zero() {
            return Err(Error::InvalidPoint(format!(
                "point {self} is not visible in chart {j0}"
            )));
        }
        let inv = self.coords[j0].recip();
        Ok(chart_others(self.coords.len(), j0)
            .into_iter()
            .map(|k| &self.coords[k] * &inv)
            .collect())
    }
}

impl std::fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(scalar_string).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

/// The original indices playing chart roles `1..n` when `j0` plays role 0.
fn chart_others(nvars: usize, j0: usize) -> Vec<usize> {
    (0..nvars).filter(|&k| k != j0).collect()
}

/// Classification of a rational point relative to the map.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PointClass {
    /// All components vanish: f is undefined here.
    IndeterminacyPoint,
    /// `F(v) = lambda v` with `lambda != 0`.
    FixedPoint,
    /// Everything else; carries no residue.
    RegularNonFixed,
}

impl PointClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            PointClass::IndeterminacyPoint => "IndeterminacyPoint",
            PointClass::FixedPoint => "FixedPoint",
            PointClass::RegularNonFixed => "RegularNonFixed",
        }
    }
}

/// Classify by evaluating the inducing map on a representative vector.
pub fn classify_point(map: &HomogeneousMap, p: &ProjPoint) -> Result<PointClass> {
    check_dim(map, p)?;
    let image = map.eval_vector(p.coords())?;
    if image.iter().all(Scalar::is_zero) {
        return Ok(PointClass::IndeterminacyPoint);
    }
    // v is normalized with v[pivot] = 1, so F(v) = lambda v forces lambda = image[pivot]
    let lambda = image[p.pivot()].clone();
    if lambda.is_zero() {
        return Ok(PointClass::RegularNonFixed);
    }
    let fixed = image.iter().zip(p.coords()).all(|(u, v)| *u == &lambda * v);
    Ok(if fixed {
        PointClass::FixedPoint
    } else {
        PointClass::RegularNonFixed
    })
}

fn check_dim(map: &HomogeneousMap, p: &ProjPoint) -> Result<()> {
    if p.coords().len() != map.n() + 1 {
        return Err(Error::DimensionMismatch(format!(
            "point with {} coordinates fed to a map of P^{}",
            p.coords().len(),
            map.n()
        )));
    }
    Ok(())
}

/// Symbolic chart data: the dehomogenized pivot component and the chart
/// system g, independent of any particular point.
#[derive(Clone, Debug)]
pub struct ChartModel {
    pub chart: usize,
    /// Original indices serving as chart roles 1..n.
    pub others: Vec<usize>,
    /// Pivot component at `(1, w)` (chart variables).
    pub f0: MultiPoly,
    /// All components at `(1, w)`, role-ordered (index 0 = pivot).
    pub dehom: Vec<MultiPoly>,
    /// `g_j = dehom_j - w_j * f0` for j = 1..n.
    pub g: Vec<MultiPoly>,
    /// Jacobian of g (polynomial entries).
    pub jac_g: PolyMatrix,
}

/// Build the chart model for an arbitrary chart index.
pub fn chart_model(map: &HomogeneousMap, chart: usize) -> Result<ChartModel> {
    let n = map.n();
    if chart > n {
        return Err(Error::IndexOutOfRange {
            index: chart,
            nvars: n + 1,
        });
    }
    let others = chart_others(n + 1, chart);
    // substitution: z_chart -> 1, z_{others[k]} -> w_{k+1}
    let mut subs = vec![MultiPoly::zero(n); n + 1];
    subs[chart] = MultiPoly::one(n);
    for (k, &orig) in others.iter().enumerate() {
        subs[orig] = MultiPoly::var(n, k);
    }
    let mut dehom = Vec::with_capacity(n + 1);
    dehom.push(map.component(chart).compose(&subs)?);
    for &orig in &others {
        dehom.push(map.component(orig).compose(&subs)?);
    }
    let f0 = dehom[0].clone();
    let g: Vec<MultiPoly> = (1..=n)
        .map(|j| &dehom[j] - &(&MultiPoly::var(n, j - 1) * &f0))
        .collect();
    let jac_g = PolyMatrix::from_fn(n, n, n, |j, k| g[j].partial(k).expect("index in range"));
    Ok(ChartModel {
        chart,
        others,
        f0,
        dehom,
        g,
        jac_g,
    })
}

/// The chart coefficients of the canonical section in chart `j0`: the same
/// `g_1..g_n` that cut out the singular set there.
pub fn canonical_section_coeffs(map: &HomogeneousMap, chart: usize) -> Result<Vec<MultiPoly>> {
    Ok(chart_model(map, chart)?.g)
}

/// Chart model specialized at a point: chart coordinates of the point, the
/// pivot value `F_{j0}(1, w^o)` and the characteristic coefficients of dg.
#[derive(Clone, Debug)]
pub struct LocalModel {
    pub chart: ChartModel,
    pub w0: Vec<Scalar>,
    pub f0_at_p: Scalar,
    /// sigma_1..sigma_n of dg at w0.
    pub sigma_dg: Vec<Scalar>,
}

impl LocalModel {
    pub fn n(&self) -> usize {
        self.w0.len()
    }

    /// det(dg)(w0); nonzero exactly at nondegenerate points of the chart system.
    pub fn det_dg(&self) -> Scalar {
        if self.sigma_dg.is_empty() {
            Scalar::one()
        } else {
            self.sigma_dg[self.sigma_dg.len() - 1].clone()
        }
    }

    pub fn g_at_w0_is_zero(&self) -> Result<bool> {
        for gj in &self.chart.g {
            if !gj.eval(&self.w0)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Dehomogenize at the point's own pivot chart.
pub fn dehomogenize(map: &HomogeneousMap, p: &ProjPoint) -> Result<LocalModel> {
    dehomogenize_in_chart(map, p, p.pivot())
}

/// Dehomogenize in any chart containing the point.
pub fn dehomogenize_in_chart(
    map: &HomogeneousMap,
    p: &ProjPoint,
    chart: usize,
) -> Result<LocalModel> {
    check_dim(map, p)?;
    let model = chart_model(map, chart)?;
    let w0 = p.chart_coords(chart)?;
    let f0_at_p = model.f0.eval(&w0)?;
    let dg_at = model.jac_g.eval(&w0)?;
    let sigma_dg = dg_at
        .char_poly_coeffs()?
        .iter()
        .map(|s| s.constant_value().expect("constant entry"))
        .collect();
    Ok(LocalModel {
        chart: model,
        w0,
        f0_at_p,
        sigma_dg,
    })
}

/// Spectral data of a fixed point, all in sigma coordinates.
#[derive(Clone, Debug)]
pub struct FixedPointData {
    /// sigma_1..sigma_n of the differential of f at p.
    pub sigma_df: Vec<Scalar>,
    /// sigma_1..sigma_n of dg at w0.
    pub sigma_dg: Vec<Scalar>,
    /// Pivot component value at the point (nonzero at a fixed point).
    pub f0_at_p: Scalar,
    /// det(I - df_p) = prod (1 - lambda_j); the point is simple iff nonzero.
    pub det_one_minus_df: Scalar,
}

impl FixedPointData {
    pub fn is_simple(&self) -> bool {
        !self.det_one_minus_df.is_zero()
    }
}

/// Eigenvalue data of `df_p` at a fixed point, computed from the chart
/// Jacobian of the induced map and cross-checked against the exact relation
/// `Jac(g)(w0) = F_0(1, w0) (Jac(f~)(w0) - I)`.
pub fn fixed_point_spectrum(map: &HomogeneousMap, p: &ProjPoint) -> Result<FixedPointData> {
    if classify_point(map, p)? != PointClass::FixedPoint {
        return Err(Error::NotFixedPoint);
    }
    let lm = dehomogenize(map, p)?;
    let n = map.n();
    let w0 = &lm.w0;
    let f0 = &lm.f0_at_p;
    debug_assert!(!f0.is_zero());
    let f0_inv = f0.recip();

    // d f~_j / d w_k = (dF_j(1,w)/dw_k - w_j dF_0(1,w)/dw_k) / F_0(1,w) at w0
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    for j in 1..=n {
        let mut row = Vec::with_capacity(n);
        for k in 0..n {
            let dj = lm.chart.dehom[j].partial(k)?.eval(w0)?;
            let d0 = lm.chart.dehom[0].partial(k)?.eval(w0)?;
            row.push((dj - &w0[j - 1] * d0) * &f0_inv);
        }
        rows.push(row);
    }
    let jac_f = PolyMatrix::from_scalar_rows(&rows)?;

    // consistency: Jac(g)(w0) = f0 (Jac(f~) - I), entrywise and exact
    let jac_g_at = lm.chart.jac_g.eval(w0)?;
    for (j, row) in rows.iter().enumerate() {
        for (k, entry) in row.iter().enumerate() {
            let lhs = jac_g_at.get(j, k).constant_value().unwrap();
            let delta = if j == k {
                Scalar::one()
            } else {
                Scalar::zero()
            };
            let rhs = f0 * &(entry.clone() - delta);
            if lhs != rhs {
                return Err(Error::Internal(format!(
                    "chart Jacobian relation violated at {p} (entry {j},{k})"
                )));
            }
        }
    }

    let sigma_df: Vec<Scalar> = jac_f
        .char_poly_coeffs()?
        .iter()
        .map(|s| s.constant_value().unwrap())
        .collect();
    let det_one_minus_df = crate::symfun::sigma_shift(n, n, &sigma_df)?;
    Ok(FixedPointData {
        sigma_df,
        sigma_dg: lm.sigma_dg.clone(),
        f0_at_p: lm.f0_at_p.clone(),
        det_one_minus_df,
    })
}
