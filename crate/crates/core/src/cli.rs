//! Command-line front end.
//!
//! [`run`] parses arguments and returns the text to print together with the
//! exit code, so the binary stays a thin wrapper and the commands can be
//! tested in-process. Exit codes: `0` success, `1` a verification failed,
//! `2` usage or validation error.

use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::affine::{
    braid_power_residual, diff_d, diff_ds, eh_identity_check, fv_conjugation_residual,
    is_central_affine, AffineElement, XPoly,
};
use crate::coeffring::CoeffPoly;
use crate::cyclotomic::{affine_json, CycloElement, CycloJson, Quotient, RestrictedPoly};
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::specialize::{
    centre_dimension, count_multipartitions, counterexample_q1, generic_prime_point,
    generic_rational_point, parse_ratio_list, semisimplicity_p, Field, ParamPoint, PrimeField,
    Ratio, Rationals, DEFAULT_SEED,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hecke-centre",
    version,
    about = "Centre of the rank-2 cyclotomic Hecke algebra of type G(m,1,2)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the constructed centre basis {m_ij} and {p_k T}.
    CentreBasis {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run every symbolic check for m = 1..m-max.
    Verify {
        #[arg(long, default_value_t = 6)]
        m_max: usize,
        #[arg(long, default_value_t = 8)]
        k_max: i64,
        #[arg(long)]
        json: bool,
        /// Soft time budget; ranks not started before it runs out are skipped.
        #[arg(long, default_value_t = 600.0)]
        max_seconds: f64,
    },
    /// Dimension of the centre at a parameter point.
    CentreDim {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        point: PointArgs,
        /// Seed for the generic point used when --q is absent.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Subalgebra generated by the symmetric generators against the centre at
    /// m = 3, q = 1, e = (0,0,1). Output is always JSON.
    #[command(name = "counterexample-q1")]
    CounterexampleQ1 {
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the semisimplicity polynomial at (q, v) for n = 2. Output is
    /// always JSON.
    Semisimple {
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, default_value_t = 0)]
        prime: u64,
        #[arg(long)]
        json: bool,
    },
    /// Count m-multipartitions of n.
    Multipartitions {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct PointArgs {
    /// q as `num/den`; omit for a seeded generic point.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// e_1,…,e_m as `num/den` values.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "v")]
    e: Option<String>,
    /// v_1,…,v_m as `num/den` values; e is derived from them.
    #[arg(long, allow_hyphen_values = true)]
    v: Option<String>,
    /// Prime modulus; 0 selects the rationals.
    #[arg(long, default_value_t = 0)]
    prime: u64,
}

/// What a command printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn usage(message: String) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: message,
            code: EXIT_USAGE,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(&cli.command) {
        Ok(out) => out,
        Err(err) => Outcome::usage(format!("error: {err}\n")),
    }
}

pub fn execute(command: &Command) -> Result<Outcome> {
    match command {
        Command::CentreBasis { m, json } => cmd_centre_basis(*m, *json).map(Outcome::ok),
        Command::Verify {
            m_max,
            k_max,
            json,
            max_seconds,
        } => {
            let budget = budget_from_seconds(*max_seconds)?;
            let report = verification_report(*m_max, *k_max, budget)?;
            let stdout = if *json {
                report.to_json() + "\n"
            } else {
                format!("{report}\n")
            };
            Ok(Outcome {
                stdout,
                stderr: String::new(),
                code: if report.passed() {
                    EXIT_OK
                } else {
                    EXIT_FAILED
                },
            })
        }
        Command::CentreDim {
            m,
            point,
            seed,
            json,
        } => cmd_centre_dim(*m, point, *seed, *json).map(Outcome::ok),
        Command::CounterexampleQ1 { .. } => {
            let (sub, centre) = counterexample_q1()?;
            Ok(Outcome::ok(format!(
                "{{\"subalgebra_dim\": {sub}, \"centre_dim\": {centre}}}\n"
            )))
        }
        Command::Semisimple { q, v, prime, .. } => cmd_semisimple(q, v, *prime).map(Outcome::ok),
        Command::Multipartitions { m, n, json } => {
            if *m < 1 {
                return Err(Error::InvalidRank(*m));
            }
            let count = count_multipartitions(*m, *n);
            Ok(Outcome::ok(if *json {
                format!("{}\n", json!({"m": m, "n": n, "count": count}))
            } else {
                format!("{count}\n")
            }))
        }
    }
}

fn budget_from_seconds(s: f64) -> Result<Duration> {
    if !(s.is_finite() && s > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "--max-seconds must be positive, got {s}"
        )));
    }
    Ok(Duration::from_secs_f64(s))
}

#[derive(Serialize)]
struct LabelledJson {
    label: String,
    element: CycloJson,
}

#[derive(Serialize)]
struct BasisJson {
    m: usize,
    rank: usize,
    elements: Vec<LabelledJson>,
}

pub fn cmd_centre_basis(m: usize, json: bool) -> Result<String> {
    let basis = Quotient::new(m)?.centre_basis()?;
    if json {
        let elements = basis
            .elements()
            .into_iter()
            .map(|(label, element)| LabelledJson {
                label,
                element: element.to_json(),
            })
            .collect();
        let out = BasisJson {
            m,
            rank: basis.rank(),
            elements,
        };
        return Ok(serde_json::to_string_pretty(&out).expect("serializes") + "\n");
    }
    let mut out = format!("centre basis m={m} rank={}\n", basis.rank());
    for ((i, j), p) in &basis.symmetric {
        out += &format!("m_{i}{j} = {p}\n");
    }
    for (k, p) in basis.t_part.iter().enumerate() {
        out += &format!("p_{k} = {p}\n");
    }
    Ok(out)
}

fn parse_list(s: &str) -> Result<Vec<Ratio>> {
    parse_ratio_list(s)
}

fn build_point<F: Field>(field: F, m: usize, point: &PointArgs) -> Result<ParamPoint<F>> {
    let q_text = point.q.as_deref().expect("checked by caller");
    let q: Ratio = q_text.parse()?;
    let qv = field.from_ratio(&q)?;
    let at = match (&point.e, &point.v) {
        (Some(e), None) => ParamPoint::from_ratios(field, &q, &parse_list(e)?)?,
        (None, Some(v)) => {
            let v = parse_list(v)?
                .iter()
                .map(|r| field.from_ratio(r))
                .collect::<Result<Vec<_>>>()?;
            ParamPoint::from_v(field, qv, &v)?
        }
        _ => {
            return Err(Error::InvalidArgument(
                "exactly one of --e and --v is required with --q".into(),
            ))
        }
    };
    if at.m() != m {
        return Err(Error::InvalidArgument(format!(
            "--m {m} but {} parameter values given",
            at.m()
        )));
    }
    Ok(at)
}

fn centre_dim_at<F: Field>(
    quot: &Quotient,
    at: &ParamPoint<F>,
    field_name: &str,
    json: bool,
) -> Result<String> {
    let dim = centre_dimension(quot, at)?;
    Ok(if json {
        format!(
            "{}\n",
            json!({
                "m": quot.m(),
                "field": field_name,
                "point": at.describe(),
                "centre_dim": dim,
            })
        )
    } else {
        format!("{dim}\n")
    })
}

pub fn cmd_centre_dim(m: usize, point: &PointArgs, seed: u64, json: bool) -> Result<String> {
    let quot = Quotient::new(m)?;
    if point.q.is_none() && (point.e.is_some() || point.v.is_some()) {
        return Err(Error::InvalidArgument("--e and --v need --q".into()));
    }
    let generic = point.q.is_none();
    if point.prime == 0 {
        let at = if generic {
            generic_rational_point(m, seed)?
        } else {
            build_point(Rationals, m, point)?
        };
        centre_dim_at(&quot, &at, "Q", json)
    } else {
        let field = PrimeField::new(point.prime)?;
        let at = if generic {
            generic_prime_point(m, &field, seed)?
        } else {
            build_point(field, m, point)?
        };
        centre_dim_at(&quot, &at, &format!("F_{}", point.prime), json)
    }
}

fn semisimple_json<F: Field>(field: &F, q: &Ratio, v: &[Ratio]) -> Result<String> {
    let q0 = field.from_ratio(q)?;
    let v = v
        .iter()
        .map(|r| field.from_ratio(r))
        .collect::<Result<Vec<_>>>()?;
    let p = semisimplicity_p(field, &q0, &v, 2)?;
    Ok(format!(
        "{{\"P\": {}, \"semisimple\": {}}}\n",
        Value::String(field.render(&p)),
        !field.is_zero(&p)
    ))
}

pub fn cmd_semisimple(q: &str, v: &str, prime: u64) -> Result<String> {
    let q: Ratio = q.parse()?;
    let v = parse_list(v)?;
    if prime == 0 {
        semisimple_json(&Rationals, &q, &v)
    } else {
        semisimple_json(&PrimeField::new(prime)?, &q, &v)
    }
}

fn affine_witness(a: &AffineElement) -> Value {
    serde_json::to_value(affine_json(a)).expect("serializes")
}

fn cyclo_witness(c: &CycloElement) -> Value {
    serde_json::to_value(c.to_json()).expect("serializes")
}

fn restricted_monomials(m: usize) -> Vec<XPoly> {
    let top = m as i64;
    (0..top)
        .flat_map(|i| (0..top).map(move |j| XPoly::monomial(m, i, j)))
        .collect()
}

/// `T f = ^s f T + Q D(f)` on restricted monomials, and `D`, `D_s` keep
/// restricted polynomials restricted.
fn commutation_check(m: usize) -> Result<Option<Value>> {
    let t = AffineElement::t(m);
    let big_q = crate::coeffring::coeff_q_minus_one(m)?;
    for f in restricted_monomials(m) {
        let lhs = t.try_mul(&AffineElement::from_poly(f.clone()))?;
        let rhs = AffineElement::new(diff_d(&f).scale(&big_q), f.swap())?;
        let residual = lhs.try_sub(&rhs)?;
        if !residual.is_zero() {
            return Ok(Some(affine_witness(&residual)));
        }
        for image in [diff_d(&f), diff_ds(&f)] {
            if !image.is_restricted() {
                return Ok(Some(affine_witness(&AffineElement::from_poly(image))));
            }
        }
    }
    Ok(None)
}

/// `f + g T` commutes with `T` exactly when `f` and `g` are symmetric, tested
/// on monomials and monomial symmetric functions in either slot.
fn commutes_with_t_check(quot: &Quotient) -> Result<Option<Value>> {
    let m = quot.m();
    let zero = RestrictedPoly::zero(m);
    let mut candidates: Vec<XPoly> = restricted_monomials(m);
    candidates.extend(restricted_monomials(m).iter().map(|p| p + &p.swap()));
    for p in candidates {
        let p = RestrictedPoly::new(p)?;
        let symmetric = p.is_symmetric();
        for (f, g) in [(&p, &zero), (&zero, &p)] {
            if quot.commutes_with_t(f, g)? != symmetric {
                return Ok(Some(cyclo_witness(&CycloElement::new(
                    f.clone(),
                    g.clone(),
                )?)));
            }
        }
    }
    Ok(None)
}

/// Symmetric polynomials are central in the affine algebra and `X1` is not.
fn affine_centre_check(m: usize) -> Result<Option<Value>> {
    let x1 = XPoly::x1(m);
    let x2 = XPoly::x2(m);
    let central = [
        &x1 + &x2,
        XPoly::monomial(m, 1, 1),
        XPoly::monomial(m, -1, -1),
        &XPoly::monomial(m, 2, -1) + &XPoly::monomial(m, -1, 2),
    ];
    for p in central {
        let a = AffineElement::from_poly(p);
        if !is_central_affine(&a)? {
            return Ok(Some(affine_witness(&a)));
        }
    }
    let a = AffineElement::from_poly(x1);
    if is_central_affine(&a)? {
        return Ok(Some(affine_witness(&a)));
    }
    Ok(None)
}

fn delta(m: usize, k: usize) -> Vec<CoeffPoly> {
    (0..m)
        .map(|j| {
            if j == k {
                CoeffPoly::one(m)
            } else {
                CoeffPoly::zero(m)
            }
        })
        .collect()
}

fn rank_checks(report: &mut VerificationReport, m: usize) -> Result<()> {
    let quot = Quotient::new(m)?;

    let w = commutation_check(m)?;
    report.push(
        format!("commutation:m={m}"),
        "Tf = {}^sfT + QD(f), D(R_m) + D_s(R_m) ⊆ R_m",
        w.is_none(),
        w,
    );
    let w = commutes_with_t_check(&quot)?;
    report.push(
        format!("commutes_with_t:m={m}"),
        "f + gT commutes with T iff f, g symmetric",
        w.is_none(),
        w,
    );
    let w = affine_centre_check(m)?;
    report.push(
        format!("affine_centre:m={m}"),
        "Z(H_2^aff) = S^W",
        w.is_none(),
        w,
    );

    let residual = fv_conjugation_residual(m)?;
    report.push(
        format!("fv_conjugation:m={m}"),
        "qf_v(X_2) = f_2 + QzT",
        residual.is_zero(),
        Some(affine_witness(&residual)),
    );

    let phi = quot.phi_matrix()?.check_triangular();
    report.push(
        format!("phi_triangular:m={m}"),
        "φ is lower triangular with diagonal -1",
        phi.is_ok(),
        phi.err().map(|e| Value::String(e.to_string())),
    );

    let basis = quot.centre_basis()?;
    let mut central_witness = None;
    for (label, c) in basis.elements() {
        if !quot.is_central(&c)? {
            central_witness = Some(json!({"label": label, "element": c.to_json()}));
            break;
        }
    }
    report.push(
        format!("basis_central:m={m}"),
        "m_ij and p_kT are central, rank m(m+3)/2",
        central_witness.is_none() && basis.rank() == m * (m + 3) / 2,
        central_witness,
    );

    let residuals = quot.z_power_residuals()?;
    for (k, r) in residuals.iter().enumerate() {
        report.push(
            format!("theorem:m={m}:k={k}"),
            "X_1^{k-1}z = p_{k}",
            r.is_zero(),
            Some(cyclo_witness(r)),
        );
    }
    for k in 0..m {
        let profile = quot.leading_coefficient_profile(k as i64)?;
        let ok = profile == delta(m, k);
        let witness = Value::Array(
            profile
                .iter()
                .map(|c| Value::String(c.to_string()))
                .collect(),
        );
        report.push(
            format!("profile:m={m}:k={k}"),
            "coefficient of m_{j(m-1)} in X_1^{k-1}z is δ_{jk}",
            ok,
            Some(witness),
        );
    }
    for k in 0..m as i64 {
        let residual = quot.preimage_residual(k)?;
        let central = is_central_affine(&quot.preimage(k)?)?;
        report.push(
            format!("preimage:m={m}:k={k}"),
            "ψ(q(X_1^kf_v(X_2) + X_2^kf_v(X_1))) = QX_1^kzT, preimage central",
            residual.is_zero() && central,
            Some(cyclo_witness(&residual)),
        );
    }
    Ok(())
}

/// Every symbolic check for `m = 1..=m_max`; the `T X1^k T` identity and the
/// `e`/`h` identity run for `k = 2..=k_max`. Ranks not started within
/// `budget` are listed as skipped.
pub fn verification_report(
    m_max: usize,
    k_max: i64,
    budget: Duration,
) -> Result<VerificationReport> {
    if m_max < 1 {
        return Err(Error::InvalidArgument(format!(
            "--m-max must be at least 1, got {m_max}"
        )));
    }
    if k_max < 2 {
        return Err(Error::InvalidArgument(format!(
            "--k-max must be at least 2, got {k_max}"
        )));
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("verify", m_max, k_max);
    for k in 2..=k_max {
        let residual = braid_power_residual(1, k)?;
        report.push(
            format!("braid_power:k={k}"),
            "TX_1^kT = qX_2^k - Q(X_1X_2)H_{k-2}T",
            residual.is_zero(),
            Some(affine_witness(&residual)),
        );
    }
    for n in 2..=k_max {
        report.push(
            format!("eh_identity:n={n}"),
            "Σ_r (-1)^r e_{n-r}H_r = 0",
            eh_identity_check(n)?,
            None,
        );
    }
    for m in 1..=m_max {
        if start.elapsed() > budget {
            report.skip(m);
            continue;
        }
        rank_checks(&mut report, m)?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("hecke-centre").chain(args.iter().copied()))
    }

    #[test]
    fn multipartitions_command() {
        let out = run_args(&["multipartitions", "--m", "3", "--n", "2"]);
        assert_eq!(out.stdout, "9\n");
        assert_eq!(out.code, 0);
    }

    #[test]
    fn validation_errors_exit_two() {
        assert_eq!(run_args(&["centre-basis", "--m", "0"]).code, EXIT_USAGE);
        assert_eq!(
            run_args(&["verify", "--m-max", "2", "--k-max", "1"]).code,
            EXIT_USAGE
        );
        assert_eq!(
            run_args(&["centre-dim", "--m", "2", "--q", "0", "--e", "1,1"]).code,
            EXIT_USAGE
        );
        assert_eq!(
            run_args(&["centre-dim", "--m", "2", "--q", "2", "--e", "1,0"]).code,
            EXIT_USAGE
        );
        assert_eq!(
            run_args(&["centre-dim", "--m", "3", "--q", "2", "--e", "1,1"]).code,
            EXIT_USAGE
        );
        assert_eq!(run_args(&["frobnicate"]).code, EXIT_USAGE);
    }

    #[test]
    fn centre_dim_examples() {
        let out = run_args(&["centre-dim", "--m", "1", "--q", "3", "--e", "2"]);
        assert_eq!((out.stdout.as_str(), out.code), ("2\n", 0));
        let out = run_args(&["centre-dim", "--m", "2", "--q", "-3/2", "--v", "-1,4"]);
        assert_eq!(out.stdout, "5\n");
        let out = run_args(&["centre-dim", "--m", "2", "--prime", "1000003"]);
        assert_eq!(out.stdout, "5\n");
    }

    #[test]
    fn semisimple_json_shape() {
        let out = run_args(&["semisimple", "--q", "-1", "--v", "1,2,3"]);
        assert_eq!(out.stdout, "{\"P\": \"0\", \"semisimple\": false}\n");
        let out = run_args(&["semisimple", "--q", "1", "--v", "1,2,3"]);
        assert_eq!(out.stdout, "{\"P\": \"-16\", \"semisimple\": true}\n");
    }

    #[test]
    fn small_verify_passes() {
        let out = run_args(&["verify", "--m-max", "1", "--k-max", "2"]);
        assert_eq!(out.code, 0, "{}", out.stdout);
        assert!(out.stdout.contains("PASS theorem:m=1:k=0"));
    }

    #[test]
    fn exhausted_budget_skips_ranks() {
        let report = verification_report(3, 2, Duration::from_nanos(1)).unwrap();
        assert!(!report.passed());
        assert!(!report.skipped_m.is_empty());
        assert!(report.checks.iter().all(|c| c.pass));
    }

    #[test]
    fn centre_basis_rank_one() {
        let out = run_args(&["centre-basis", "--m", "1"]);
        assert!(out.stdout.contains("p_0 = (1) 1"), "{}", out.stdout);
    }
}
