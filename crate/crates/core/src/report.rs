//! Report and job JSON schemas emitted and consumed by the CLI.
//!
//! Every rational is a reduced `p/q` string, never a float, and reports
//! serialize deterministically (fixed field order, canonical term order), so
//! identical inputs produce byte-identical output.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::projmap::{HomogeneousMap, PointClass, ProjPoint};
use crate::residue::ResidueValue;
use crate::scalar::{scalar_string, Scalar};
use crate::theorems::{
    CensusOutcome, PointOutcome, SumCheck, SumIdentity, UedaCheck, UedaPolyCheck,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Wire form of a homogeneous map.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct MapJson {
    pub n: usize,
    pub components: Vec<String>,
}

impl MapJson {
    pub fn from_map(map: &HomogeneousMap) -> Self {
        MapJson {
            n: map.n(),
            components: map.component_strings(),
        }
    }

    pub fn to_map(&self) -> Result<HomogeneousMap> {
        HomogeneousMap::parse(self.n, &self.components)
    }
}

/// A self-contained job: map, points, and optional symmetric-function
/// sources. This is what `projindex example ...` emits and what the other
/// subcommands read from stdin or a file.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct JobJson {
    pub schema: u32,
    pub map: MapJson,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<String>,
}

impl JobJson {
    pub fn new(map: &HomogeneousMap, points: &[ProjPoint]) -> Self {
        JobJson {
            schema: SCHEMA_VERSION,
            map: MapJson::from_map(map),
            points: points.iter().map(|p| p.coord_strings()).collect(),
            phi: None,
            psi: None,
        }
    }

    pub fn to_points(&self) -> Result<Vec<ProjPoint>> {
        self.points
            .iter()
            .map(|coords| ProjPoint::parse(coords))
            .collect()
    }
}

/// One line of a verification report.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct PointReport {
    pub point: Vec<String>,
    pub class: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residue: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub res1: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub res2: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub res3: Option<String>,
}

impl PointReport {
    fn base(point: &ProjPoint, class: PointClass) -> Self {
        PointReport {
            point: point.coord_strings(),
            class: class.as_str().to_string(),
            mult: None,
            residue: None,
            path: None,
            res1: None,
            res2: None,
            res3: None,
        }
    }

    pub fn from_outcome(o: &PointOutcome) -> Self {
        let mut r = Self::base(&o.point, o.class);
        r.mult = o.mult();
        if let Some(v) = &o.residue {
            r.residue = Some(scalar_string(&v.value));
            r.path = Some(v.path.as_str().to_string());
        }
        r
    }

    pub fn with_residues(
        point: &ProjPoint,
        class: PointClass,
        mult: Option<usize>,
        res1: Option<&ResidueValue>,
        res2: Option<&ResidueValue>,
        res3: Option<&ResidueValue>,
    ) -> Self {
        let mut r = Self::base(point, class);
        r.mult = mult;
        r.res1 = res1.map(|v| scalar_string(&v.value));
        r.res2 = res2.map(|v| scalar_string(&v.value));
        r.res3 = res3.map(|v| scalar_string(&v.value));
        r.path = res1.map(|v| v.path.as_str().to_string());
        r
    }
}

/// Labelled sub-identity inside a multi-part check (one per k, one per
/// sample t, ...).
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct DetailLine {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

/// Census totals; `expected_binomial` and `expected_bezout` are the two
/// independent closed forms and must agree with `expected`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CensusNumbers {
    pub total: String,
    pub expected: String,
    pub expected_binomial: String,
    pub expected_bezout: String,
    pub complete: bool,
}

impl CensusNumbers {
    pub fn from_outcome(c: &CensusOutcome) -> Self {
        CensusNumbers {
            total: scalar_string(&c.total),
            expected: scalar_string(&c.expected),
            expected_binomial: scalar_string(&c.expected_binomial),
            expected_bezout: scalar_string(&c.expected_bezout),
            complete: c.complete,
        }
    }
}

/// The CLI's output contract.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub schema: u32,
    pub check: String,
    /// Set on checks derived from draft material.
    pub draft: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub per_point: Vec<PointReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<DetailLine>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub census: Option<CensusNumbers>,
    pub pass: bool,
}

impl VerificationReport {
    fn new(check: &str) -> Self {
        VerificationReport {
            schema: SCHEMA_VERSION,
            check: check.to_string(),
            draft: false,
            per_point: Vec::new(),
            lhs: None,
            rhs: None,
            details: Vec::new(),
            census: None,
            pass: false,
        }
    }

    pub fn from_sum_check(check: &SumCheck) -> Self {
        let name = match check.which {
            SumIdentity::Res1 => "res1-sum",
            SumIdentity::Res2 => "res2-sum",
            SumIdentity::Res3 => "res3-sum",
        };
        let mut r = Self::new(name);
        r.per_point = check
            .outcomes
            .iter()
            .map(PointReport::from_outcome)
            .collect();
        r.lhs = Some(scalar_string(&check.lhs));
        r.rhs = Some(scalar_string(&check.rhs));
        r.census = Some(CensusNumbers::from_outcome(&check.census));
        r.pass = check.pass;
        r
    }

    pub fn from_census(outcomes: &[PointOutcome], census: &CensusOutcome) -> Self {
        let mut r = Self::new("census");
        r.per_point = outcomes.iter().map(PointReport::from_outcome).collect();
        r.census = Some(CensusNumbers::from_outcome(census));
        r.pass = census.complete;
        r
    }

    pub fn from_classification(outcomes: &[PointOutcome]) -> Self {
        let mut r = Self::new("classify");
        r.per_point = outcomes.iter().map(PointReport::from_outcome).collect();
        r.pass = true;
        r
    }

    pub fn from_ueda(checks: &[UedaCheck]) -> Self {
        let mut r = Self::new("ueda");
        if let Some(first) = checks.first() {
            r.census = Some(CensusNumbers::from_outcome(&first.census));
            r.per_point = first
                .per_point
                .iter()
                .map(|p| {
                    let mut pr = PointReport::base(&p.point, PointClass::FixedPoint);
                    pr.mult = Some(1);
                    pr
                })
                .collect();
        }
        let mut all = true;
        for c in checks {
            let line_pass = c.lhs == c.rhs && c.cross_check;
            all &= c.pass;
            r.details.push(DetailLine {
                label: format!("k={}", c.k),
                lhs: scalar_string(&c.lhs),
                rhs: scalar_string(&c.rhs),
                pass: line_pass,
            });
        }
        r.pass = all && !checks.is_empty();
        r
    }

    pub fn from_ueda_poly(check: &UedaPolyCheck) -> Self {
        let mut r = Self::new("ueda-poly");
        r.draft = true;
        for s in &check.samples {
            r.details.push(DetailLine {
                label: format!("t={}", scalar_string(&s.t)),
                lhs: scalar_string(&s.lhs),
                rhs: scalar_string(&s.rhs),
                pass: s.pass,
            });
        }
        r.details.push(DetailLine {
            label: "derivative-at-1".to_string(),
            lhs: scalar_string(&check.derivative_lhs),
            rhs: scalar_string(&check.derivative_rhs),
            pass: check.derivative_pass,
        });
        r.census = Some(CensusNumbers::from_outcome(&check.census));
        r.pass = check.pass;
        r
    }

    pub fn from_residues(points: Vec<PointReport>) -> Self {
        let mut r = Self::new("residues");
        r.per_point = points;
        r.pass = true;
        r
    }

    pub fn from_abel(r_exp: usize, x: &Scalar, y: &Scalar, z: &Scalar, ok: bool) -> Self {
        let mut r = Self::new("abel");
        r.details.push(DetailLine {
            label: format!(
                "r={} x={} y={} z={}",
                r_exp,
                scalar_string(x),
                scalar_string(y),
                scalar_string(z)
            ),
            lhs: if ok { "equal".into() } else { "unequal".into() },
            rhs: "equal".into(),
            pass: ok,
        });
        r.pass = ok;
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }

    /// Deterministic plain-text rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "check: {}{}\n",
            self.check,
            if self.draft { " (draft)" } else { "" }
        ));
        for p in &self.per_point {
            out.push_str(&format!("point [{}]: {}", p.point.join(":"), p.class));
            if let Some(m) = p.mult {
                out.push_str(&format!(" mult={m}"));
            }
            if let Some(v) = &p.residue {
                out.push_str(&format!(" residue={v}"));
            }
            for (name, v) in [("res1", &p.res1), ("res2", &p.res2), ("res3", &p.res3)] {
                if let Some(v) = v {
                    out.push_str(&format!(" {name}={v}"));
                }
            }
            if let Some(path) = &p.path {
                out.push_str(&format!(" ({path})"));
            }
            out.push('\n');
        }
        for d in &self.details {
            out.push_str(&format!(
                "{}: lhs={} rhs={} {}\n",
                d.label,
                d.lhs,
                d.rhs,
                if d.pass { "ok" } else { "FAIL" }
            ));
        }
        if let Some(c) = &self.census {
            out.push_str(&format!(
                "census: total={} expected={} (binomial={}, bezout={}) complete={}\n",
                c.total, c.expected, c.expected_binomial, c.expected_bezout, c.complete
            ));
        }
        if let (Some(l), Some(r)) = (&self.lhs, &self.rhs) {
            out.push_str(&format!("lhs = {l}\nrhs = {r}\n"));
        }
        out.push_str(&format!(
            "result: {}\n",
            if self.pass { "PASS" } else { "FAIL" }
        ));
        out
    }
}

/// Parse a points payload: a JSON array of arrays of rational strings.
pub fn points_from_json(src: &str) -> Result<Vec<ProjPoint>> {
    let raw: Vec<Vec<String>> =
        serde_json::from_str(src).map_err(|e| Error::InvalidInput(format!("points JSON: {e}")))?;
    raw.iter().map(|coords| ProjPoint::parse(coords)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::residue::ResidueOptions;
    use crate::theorems::{make_cremona, verify_residue_sum};

    #[test]
    fn report_json_round_trips() {
        let (map, points) = make_cremona();
        let check = verify_residue_sum(
            &map,
            &points,
            SumIdentity::Res1,
            None,
            &ResidueOptions::default(),
        )
        .unwrap();
        let report = VerificationReport::from_sum_check(&check);
        let json = report.to_json();
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(report, back);
        // determinism
        assert_eq!(json, back.to_json());
        assert!(report.to_text().contains("result: PASS"));
    }

    #[test]
    fn job_round_trips() {
        let (map, points) = make_cremona();
        let job = JobJson::new(&map, &points);
        let json = serde_json::to_string(&job).unwrap();
        let back: JobJson = serde_json::from_str(&json).unwrap();
        assert_eq!(job, back);
        let map2 = back.map.to_map().unwrap();
        assert_eq!(map2, map);
        assert_eq!(back.to_points().unwrap(), points);
    }
}
