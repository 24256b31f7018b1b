//! Command-line interface.
//!
//! Subcommands: `classify`, `residues`, `verify`, `census`, `example`,
//! `abel`. Maps and points come from `--map` / `--points` / `--point` flags
//! or from a job JSON on stdin (which is exactly what `example` emits, so
//! the two pipe together). Exit codes: 0 success/pass, 1 input error,
//! 2 verification failure.

use std::ffi::OsString;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::parse::{parse_poly, VarTable};
use crate::projmap::{classify_point, HomogeneousMap, PointClass, ProjPoint};
use crate::report::{points_from_json, JobJson, MapJson, PointReport, VerificationReport};
use crate::residue::{res1, res2, res3, ResidueOptions};
use crate::scalar::{parse_scalar, sc, sc_frac};
use crate::symfun::SymSpec;
use crate::theorems::{
    abel_identity_check, census, make_cremona, make_degenerate_p1, make_power_map, ueda_check,
    ueda_polynomial_checks, verify_residue_sum, SumIdentity,
};

#[derive(Parser, Debug)]
#[command(
    name = "projindex",
    version,
    about = "Exact residues and index checks for self-maps of projective space"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cap on local truncation orders (also env PROJINDEX_TRUNC_CAP)
    #[arg(long, global = true)]
    trunc_cap: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Which {
    #[value(name = "1i")]
    Res1,
    #[value(name = "1ii")]
    Res2,
    #[value(name = "1iii")]
    Res3,
    #[value(name = "ueda")]
    Ueda,
    #[value(name = "ueda-poly")]
    UedaPoly,
}

#[derive(Args, Clone, Debug)]
struct InputArgs {
    /// Map or job JSON file; absent or '-' reads a job JSON from stdin
    #[arg(long)]
    map: Option<String>,
    /// Points as a JSON file or inline "1,0,0;0,1,0"
    #[arg(long, allow_hyphen_values = true)]
    points: Option<String>,
    /// A single point "1,0,0" (repeatable)
    #[arg(long = "point", allow_hyphen_values = true)]
    point: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Classify points as fixed, indeterminacy, or regular, with multiplicities
    Classify {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Compute the local residues at each point
    Residues {
        #[command(flatten)]
        input: InputArgs,
        /// Symmetric polynomial for the second residue ("e1^2" or "z1^2+z2^2")
        #[arg(long)]
        phi: Option<String>,
        /// Symmetric polynomial for the third residue (n+1 variables)
        #[arg(long)]
        psi: Option<String>,
        /// Use the series route even at nondegenerate points
        #[arg(long)]
        force_hartshorne: bool,
    },
    /// Verify a global identity against the pointwise residue sum
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        phi: Option<String>,
        #[arg(long)]
        psi: Option<String>,
    },
    /// Check that the supplied points exhaust the singular set
    Census {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Emit a bundled example as a job JSON
    Example {
        #[command(subcommand)]
        which: ExampleCmd,
    },
    /// Check Abel's identity at rational arguments
    Abel {
        #[arg(long)]
        r: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
}

#[derive(Subcommand, Debug)]
enum ExampleCmd {
    /// The coordinate power map [z] -> [z_j^{nu+1}] with all fixed points
    PowerMap {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        nu: usize,
    },
    /// The quadratic involution on P^2 (4 fixed + 3 indeterminacy points)
    Cremona,
    /// A P^1 map with a multiplicity-2 fixed point
    DegenerateP1,
}

/// Parse a symmetric-function source: `e1..er` polynomials are taken in the
/// elementary basis, `z...` polynomials are converted. For the n-variable
/// slot the z-names are `z1..zn`; for the (n+1)-variable slot, `z0..zn`.
pub fn parse_symspec(src: &str, arity: usize, degree: usize, z_from_zero: bool) -> Result<SymSpec> {
    let first_letter = src.chars().find(|c| c.is_ascii_alphabetic());
    match first_letter {
        Some('e') | None => {
            let table = VarTable::elementary(arity);
            SymSpec::from_e_basis(parse_poly(src, &table)?, degree)
        }
        Some('z') => {
            let table = if z_from_zero {
                VarTable::homogeneous(arity)
            } else {
                VarTable::symmetric_z(arity)
            };
            SymSpec::from_symmetric_poly(&parse_poly(src, &table)?, degree)
        }
        Some(other) => Err(Error::InvalidInput(format!(
            "cannot tell the basis of {src:?}: variables must be e1..e{arity} or z-indexed (saw {other:?})"
        ))),
    }
}

struct ResolvedInput {
    map: HomogeneousMap,
    points: Vec<ProjPoint>,
    phi: Option<String>,
    psi: Option<String>,
}

fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))
}

fn read_stdin() -> Result<String> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| Error::InvalidInput(format!("cannot read stdin: {e}")))?;
    Ok(buf)
}

fn parse_inline_points(src: &str) -> Result<Vec<ProjPoint>> {
    src.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|p| {
            let coords: Vec<String> = p.split(',').map(|c| c.trim().to_string()).collect();
            ProjPoint::parse(&coords)
        })
        .collect()
}

fn check_schema(job: &JobJson) -> Result<()> {
    if job.schema != crate::report::SCHEMA_VERSION {
        return Err(Error::InvalidInput(format!(
            "unsupported job schema {} (this build speaks schema {})",
            job.schema,
            crate::report::SCHEMA_VERSION
        )));
    }
    Ok(())
}

fn resolve_input(input: &InputArgs) -> Result<ResolvedInput> {
    let mut job: Option<JobJson> = None;
    let map = match input.map.as_deref() {
        Some(path) if path != "-" => {
            let text = read_file(path)?;
            if let Ok(j) = serde_json::from_str::<JobJson>(&text) {
                check_schema(&j)?;
                let m = j.map.to_map()?;
                job = Some(j);
                m
            } else {
                let mj: MapJson = serde_json::from_str(&text).map_err(|e| {
                    Error::InvalidInput(format!("{path}: not a map or job JSON: {e}"))
                })?;
                mj.to_map()?
            }
        }
        _ => {
            let text = read_stdin()?;
            let j: JobJson = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidInput(format!("stdin: not a job JSON: {e}")))?;
            check_schema(&j)?;
            let m = j.map.to_map()?;
            job = Some(j);
            m
        }
    };
    let mut points: Vec<ProjPoint> = Vec::new();
    if let Some(src) = input.points.as_deref() {
        if std::path::Path::new(src).exists() {
            points.extend(points_from_json(&read_file(src)?)?);
        } else {
            points.extend(parse_inline_points(src)?);
        }
    }
    for p in &input.point {
        points.extend(parse_inline_points(p)?);
    }
    if points.is_empty() {
        if let Some(j) = &job {
            points = j.to_points()?;
        }
    }
    let (phi, psi) = match &job {
        Some(j) => (j.phi.clone(), j.psi.clone()),
        None => (None, None),
    };
    Ok(ResolvedInput {
        map,
        points,
        phi,
        psi,
    })
}

fn residue_options(trunc_cap: Option<usize>) -> Result<ResidueOptions> {
    let cap = match trunc_cap {
        Some(c) => Some(c),
        None => match std::env::var("PROJINDEX_TRUNC_CAP") {
            Ok(v) => Some(v.parse::<usize>().map_err(|_| {
                Error::InvalidInput(format!("PROJINDEX_TRUNC_CAP is not an integer: {v:?}"))
            })?),
            Err(_) => None,
        },
    };
    Ok(ResidueOptions::with_cap(cap))
}

fn phi_spec(
    map: &HomogeneousMap,
    flag: &Option<String>,
    job: &Option<String>,
) -> Result<Option<SymSpec>> {
    let src = flag.as_ref().or(job.as_ref());
    src.map(|s| parse_symspec(s, map.n(), map.n(), false))
        .transpose()
}

fn psi_spec(
    map: &HomogeneousMap,
    flag: &Option<String>,
    job: &Option<String>,
) -> Result<Option<SymSpec>> {
    let src = flag.as_ref().or(job.as_ref());
    src.map(|s| parse_symspec(s, map.n() + 1, map.n(), true))
        .transpose()
}

fn run_cmd(cli: &Cli) -> Result<VerificationReport> {
    let opts = residue_options(cli.trunc_cap)?;
    match &cli.cmd {
        Cmd::Classify { input } => {
            let resolved = resolve_input(input)?;
            let (outcomes, _) = census(&resolved.map, &resolved.points, &opts)?;
            Ok(VerificationReport::from_classification(&outcomes))
        }
        Cmd::Census { input } => {
            let resolved = resolve_input(input)?;
            let (outcomes, totals) = census(&resolved.map, &resolved.points, &opts)?;
            Ok(VerificationReport::from_census(&outcomes, &totals))
        }
        Cmd::Residues {
            input,
            phi,
            psi,
            force_hartshorne,
        } => {
            let resolved = resolve_input(input)?;
            let map = &resolved.map;
            let phi = phi_spec(map, phi, &resolved.phi)?;
            let psi = psi_spec(map, psi, &resolved.psi)?;
            let mut opts = opts;
            opts.force_hartshorne = *force_hartshorne;
            let mut rows = Vec::new();
            for p in &resolved.points {
                let class = classify_point(map, p)?;
                if class == PointClass::RegularNonFixed {
                    rows.push(PointReport::with_residues(p, class, None, None, None, None));
                    continue;
                }
                let r1 = res1(map, p, &opts)?;
                let r2 = phi.as_ref().map(|f| res2(map, p, f, &opts)).transpose()?;
                let r3 = psi.as_ref().map(|f| res3(map, p, f, &opts)).transpose()?;
                let mult = Some(r1.local.mult);
                rows.push(PointReport::with_residues(
                    p,
                    class,
                    mult,
                    Some(&r1),
                    r2.as_ref(),
                    r3.as_ref(),
                ));
            }
            Ok(VerificationReport::from_residues(rows))
        }
        Cmd::Verify {
            input,
            which,
            phi,
            psi,
        } => {
            let resolved = resolve_input(input)?;
            let map = &resolved.map;
            match which {
                Which::Res1 => {
                    let check =
                        verify_residue_sum(map, &resolved.points, SumIdentity::Res1, None, &opts)?;
                    Ok(VerificationReport::from_sum_check(&check))
                }
                Which::Res2 => {
                    let phi = phi_spec(map, phi, &resolved.phi)?.ok_or_else(|| {
                        Error::InvalidInput("--phi is required for --which 1ii".into())
                    })?;
                    let check = verify_residue_sum(
                        map,
                        &resolved.points,
                        SumIdentity::Res2,
                        Some(&phi),
                        &opts,
                    )?;
                    Ok(VerificationReport::from_sum_check(&check))
                }
                Which::Res3 => {
                    let psi = psi_spec(map, psi, &resolved.psi)?.ok_or_else(|| {
                        Error::InvalidInput("--psi is required for --which 1iii".into())
                    })?;
                    let check = verify_residue_sum(
                        map,
                        &resolved.points,
                        SumIdentity::Res3,
                        Some(&psi),
                        &opts,
                    )?;
                    Ok(VerificationReport::from_sum_check(&check))
                }
                Which::Ueda => {
                    let mut checks = Vec::new();
                    for k in 0..=map.n() {
                        checks.push(ueda_check(map, &resolved.points, k, &opts)?);
                    }
                    Ok(VerificationReport::from_ueda(&checks))
                }
                Which::UedaPoly => {
                    let samples = vec![sc(0), sc(1), sc(2), sc(-1), sc_frac(1, 2)];
                    let check = ueda_polynomial_checks(map, &resolved.points, &samples, &opts)?;
                    Ok(VerificationReport::from_ueda_poly(&check))
                }
            }
        }
        Cmd::Abel { r, x, y, z } => {
            let (x, y, z) = (parse_scalar(x)?, parse_scalar(y)?, parse_scalar(z)?);
            let ok = abel_identity_check(*r, &x, &y, &z)?;
            Ok(VerificationReport::from_abel(*r, &x, &y, &z, ok))
        }
        Cmd::Example { .. } => unreachable!("example handled before run_cmd"),
    }
}

fn example_job(which: &ExampleCmd) -> Result<JobJson> {
    match which {
        ExampleCmd::PowerMap { n, nu } => {
            let (map, pts) = make_power_map(*n, *nu)?;
            let points: Vec<ProjPoint> = pts.into_iter().map(|p| p.point).collect();
            Ok(JobJson::new(&map, &points))
        }
        ExampleCmd::Cremona => {
            let (map, points) = make_cremona();
            Ok(JobJson::new(&map, &points))
        }
        ExampleCmd::DegenerateP1 => {
            let (map, points) = make_degenerate_p1();
            Ok(JobJson::new(&map, &points))
        }
    }
}

/// Entry point; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    if let Cmd::Example { which } = &cli.cmd {
        return match example_job(which) {
            Ok(job) => {
                println!("{}", serde_json::to_string(&job).expect("job serializes"));
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                1
            }
        };
    }
    match run_cmd(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            if report.pass {
                0
            } else {
                2
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symspec_sources_both_parse() {
        let (map, _) = make_cremona();
        let a = parse_symspec("e1^2", map.n(), map.n(), false).unwrap();
        let b = parse_symspec("z1^2 + 2*z1*z2 + z2^2", map.n(), map.n(), false).unwrap();
        assert_eq!(a, b);
        // psi-style with z0
        let c = parse_symspec("z0 + z1", 2, 1, true).unwrap();
        assert_eq!(c.to_string_e(), "e1");
        assert!(parse_symspec("q1", 2, 2, false).is_err());
    }

    #[test]
    fn inline_points() {
        let pts = parse_inline_points("1,0,0; 0,1,0").unwrap();
        assert_eq!(pts.len(), 2);
        assert_eq!(pts[1], ProjPoint::from_ints(&[0, 1, 0]).unwrap());
        let pts = parse_inline_points("1,-1,1/2").unwrap();
        assert_eq!(
            pts[0],
            ProjPoint::parse(&["1".into(), "-1".into(), "1/2".into()]).unwrap()
        );
    }
}
