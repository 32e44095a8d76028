//! Acceptance suite: one PASS/FAIL line per criterion, exact comparisons
//! throughout. Runs without the libtest harness so the lines are always shown.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hecke_centre::affine::{
    braid_power_residual, diff_d, diff_ds, eh_identity_check, verify_fv_conjugation, z_element,
    AffineElement, XMonomial, XPoly,
};
use hecke_centre::coeffring::{coeff_q_minus_one, CoeffPoly};
use hecke_centre::cyclotomic::{d_operator, CycloElement, Quotient, RestrictedPoly};
use hecke_centre::sample::{self, SampleSize};
use hecke_centre::specialize::{
    check_centre_basis, count_multipartitions, counterexample_q1, generic_prime_point,
    generic_rational_point, Field, ParamPoint, PrimeField, DEFAULT_PRIME,
};
use hecke_centre::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEEDS: [u64; 3] = [20_240_601, 7, 1_000_003];
const CASES: usize = 100;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        pass,
        detail: detail.into(),
    })
}

fn poly(m: usize, terms: &[(i64, i64, CoeffPoly)]) -> RestrictedPoly {
    let p = XPoly::from_terms(
        m,
        terms
            .iter()
            .map(|(i, j, c)| (XMonomial::new(*i, *j), c.clone())),
    )
    .expect("same rank");
    RestrictedPoly::new(p).expect("restricted")
}

/// The rank-three vectors, typed in by hand: `p_0` with constant term `e_2`.
fn rank_three_vectors() -> [RestrictedPoly; 3] {
    let m = 3;
    let e = |j| CoeffPoly::e(m, j);
    let one = CoeffPoly::one(m);
    [
        poly(
            m,
            &[
                (0, 0, e(2)),
                (1, 0, -e(1)),
                (0, 1, -e(1)),
                (1, 1, one.clone()),
                (2, 0, one.clone()),
                (0, 2, one.clone()),
            ],
        ),
        poly(
            m,
            &[
                (0, 0, e(3)),
                (1, 1, -e(1)),
                (2, 1, one.clone()),
                (1, 2, one.clone()),
            ],
        ),
        poly(m, &[(1, 0, e(3)), (0, 1, e(3)), (1, 1, -e(2)), (2, 2, one)]),
    ]
}

fn criterion_1() -> Result<Outcome> {
    let m = 3;
    let quot = Quotient::new(m)?;
    let basis = quot.centre_t_basis()?;
    let expected = rank_three_vectors();
    let vectors_match = basis == expected;

    let z = RestrictedPoly::new(z_element(m)?)?;
    let z_is_p1 = z == expected[1];
    let as_elem = |p: &RestrictedPoly| CycloElement::from_poly(p.clone());
    let x1_p1 = quot.mul(&quot.x1(), &as_elem(&expected[1]))? == as_elem(&expected[2]);
    let x1inv_p1 = quot.mul(&quot.x1_inverse(), &as_elem(&expected[1]))? == as_elem(&expected[0]);

    // The same vector with constant term e_3 is symmetric but X1 times it is
    // not, so its T multiple is not central.
    let mut literal = expected[0].as_poly().clone();
    literal = &literal - &XPoly::constant(CoeffPoly::e(m, 2));
    literal = &literal + &XPoly::constant(CoeffPoly::e(m, 3));
    let literal = RestrictedPoly::new(literal)?;
    let literal_rejected = !quot.is_central(&CycloElement::times_t(literal))?;

    outcome(
        vectors_match && z_is_p1 && x1_p1 && x1inv_p1 && literal_rejected,
        format!(
            "p_0..p_2 match (p_0 constant e2): {vectors_match}; z = p_1: {z_is_p1}; \
             X1 p_1 = p_2: {x1_p1}; X1^-1 p_1 = p_0: {x1inv_p1}; \
             e3-constant p_0 T fails centrality: {literal_rejected}"
        ),
    )
}

fn criterion_2() -> Result<Outcome> {
    let mut bad = Vec::new();
    for k in 2..=8 {
        for m in [1, 3] {
            if !braid_power_residual(m, k)?.is_zero() {
                bad.push(format!("T X1^{k} T at m={m}"));
            }
        }
    }
    for m in 1..=6 {
        if !verify_fv_conjugation(m)? {
            bad.push(format!("q f_v(X2) at m={m}"));
        }
    }
    outcome(bad.is_empty(), format!("k=2..8, m=1..6, failures {bad:?}"))
}

fn criterion_3() -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut checked = 0;
    for m in 1..=6 {
        let quot = Quotient::new(m)?;
        for (k, r) in quot.z_power_residuals()?.iter().enumerate() {
            checked += 1;
            if !r.is_zero() {
                bad.push(format!("X1^(k-1) z m={m} k={k}"));
            }
        }
        for k in 0..m {
            let profile = quot.leading_coefficient_profile(k as i64)?;
            let delta =
                profile
                    .iter()
                    .enumerate()
                    .all(|(j, c)| if j == k { c.is_one() } else { c.is_zero() });
            if !delta {
                bad.push(format!("profile m={m} k={k}"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{checked} (m, k) pairs, failures {bad:?}"),
    )
}

fn criterion_4() -> Result<Outcome> {
    let mut bad = Vec::new();
    for m in 1..=4 {
        let quot = Quotient::new(m)?;
        for k in 0..m as i64 {
            if !quot.verify_preimage(k)? {
                bad.push(format!("m={m} k={k}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("m=1..4, all k, failures {bad:?}"))
}

fn centre_point_check<F: Field>(
    quot: &Quotient,
    at: &ParamPoint<F>,
    bad: &mut Vec<String>,
) -> Result<()> {
    let m = quot.m();
    let check = check_centre_basis(quot, at)?;
    let expected = m * (m + 3) / 2;
    if check.nullspace_dim != expected
        || check.nullspace_dim != count_multipartitions(m, 2)
        || !check.spans()
    {
        bad.push(format!("m={m} {}: {check:?}", at.describe()));
    }
    Ok(())
}

fn criterion_5() -> Result<Outcome> {
    let mut bad = Vec::new();
    let start = Instant::now();
    for m in 1..=4 {
        let quot = Quotient::new(m)?;
        for seed in SEEDS {
            centre_point_check(&quot, &generic_rational_point(m, seed)?, &mut bad)?;
        }
    }
    let rational_time = start.elapsed();
    let field = PrimeField::new(DEFAULT_PRIME)?;
    for m in 1..=6 {
        let quot = Quotient::new(m)?;
        for seed in SEEDS {
            centre_point_check(&quot, &generic_prime_point(m, &field, seed)?, &mut bad)?;
        }
    }
    let in_time = rational_time < Duration::from_secs(30);
    outcome(
        bad.is_empty() && in_time,
        format!(
            "seeds {SEEDS:?}, Q m=1..4 in {:.2}s, F_{DEFAULT_PRIME} m=1..6, failures {bad:?}",
            rational_time.as_secs_f64()
        ),
    )
}

fn criterion_6() -> Result<Outcome> {
    let pair = counterexample_q1()?;
    let quot = Quotient::new(3)?;
    let mut generic = Vec::new();
    for seed in SEEDS {
        let at = generic_rational_point(3, seed)?;
        generic.push(hecke_centre::specialize::symmetric_image_vs_centre(
            &quot, &at,
        )?);
    }
    outcome(
        pair == (6, 9) && generic.iter().all(|&p| p == (9, 9)),
        format!("q=1: {pair:?}; generic points: {generic:?}"),
    )
}

fn suite(
    name: &str,
    seed: u64,
    bad: &mut Vec<String>,
    mut case: impl FnMut(&mut ChaCha8Rng) -> Result<bool>,
) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..CASES {
        if !case(&mut rng)? {
            bad.push(format!("{name} case {i}"));
            return Ok(());
        }
    }
    Ok(())
}

fn criterion_7() -> Result<Outcome> {
    let size = SampleSize::default();
    let small = SampleSize {
        coeff_terms: 1,
        x_terms: 2,
        exponent: 2,
        magnitude: 5,
    };
    let mut bad = Vec::new();

    suite("affine associativity", 101, &mut bad, |rng| {
        let m = 2;
        let [a, b, c] = [0; 3].map(|_| sample::affine_element(rng, m, small));
        Ok(a.try_mul(&b)?.try_mul(&c)? == a.try_mul(&b.try_mul(&c)?)?)
    })?;
    let quots = [Quotient::new(2)?, Quotient::new(3)?];
    suite("cyclotomic associativity", 102, &mut bad, |rng| {
        let quot = &quots[rng.gen_range(0..2)];
        let [a, b, c] = [0; 3].map(|_| sample::cyclo_element(rng, quot.m(), small));
        Ok(quot.mul(&quot.mul(&a, &b)?, &c)? == quot.mul(&a, &quot.mul(&b, &c)?)?)
    })?;
    suite("reduction is multiplicative", 103, &mut bad, |rng| {
        let quot = &quots[rng.gen_range(0..2)];
        let a = sample::affine_element(rng, quot.m(), small);
        let b = sample::affine_element(rng, quot.m(), small);
        let lhs = quot.reduce(&a.try_mul(&b)?)?;
        Ok(lhs == quot.mul(&quot.reduce(&a)?, &quot.reduce(&b)?)?)
    })?;
    suite("T f = sf T + Q D(f)", 104, &mut bad, |rng| {
        let m = 3;
        let f = sample::x_poly(rng, m, size);
        let lhs = AffineElement::t(m).try_mul(&AffineElement::from_poly(f.clone()))?;
        let rhs = AffineElement::new(diff_d(&f).scale(&coeff_q_minus_one(m)?), f.swap())?;
        // D(f) (1 - X1 X2^{-1}) = f - sf as an exact identity.
        let denominator = &XPoly::one(m) - &XPoly::monomial(m, 1, -1);
        let divided = &diff_d(&f) * &denominator == &f - &f.swap();
        Ok(lhs == rhs && divided)
    })?;
    suite(
        "D and D_s on restricted polynomials",
        105,
        &mut bad,
        |rng| {
            let m = rng.gen_range(1..=4);
            let p = if rng.gen_bool(0.5) {
                sample::symmetric_restricted_poly(rng, m, size)
            } else {
                sample::restricted_poly(rng, m, size)
            };
            let (d, ds) = (diff_d(p.as_poly()), diff_ds(p.as_poly()));
            Ok(d.is_restricted() && ds.is_restricted() && ((d == ds) == p.is_symmetric()))
        },
    )?;
    suite("d idempotent with symmetric kernel", 106, &mut bad, |rng| {
        let m = rng.gen_range(1..=4);
        let p = if rng.gen_bool(0.5) {
            sample::symmetric_restricted_poly(rng, m, size)
        } else {
            sample::restricted_poly(rng, m, size)
        };
        let d = d_operator(&p);
        Ok(d_operator(&d) == d && d.is_zero() == p.is_symmetric())
    })?;
    suite(
        "commutes with T iff symmetric parts",
        107,
        &mut bad,
        |rng| {
            let quot = &quots[rng.gen_range(0..2)];
            let m = quot.m();
            let pick = |rng: &mut ChaCha8Rng| {
                if rng.gen_bool(0.5) {
                    sample::symmetric_restricted_poly(rng, m, small)
                } else {
                    sample::restricted_poly(rng, m, small)
                }
            };
            let (f, g) = (pick(rng), pick(rng));
            Ok(quot.commutes_with_t(&f, &g)? == (f.is_symmetric() && g.is_symmetric()))
        },
    )?;
    suite("T T^-1 = 1", 108, &mut bad, |rng| {
        let m = rng.gen_range(1..=6);
        let a = sample::affine_element(rng, m, small);
        let t = AffineElement::t(m);
        let t_inv = AffineElement::t_inverse(m);
        Ok(t.try_mul(&t_inv)? == AffineElement::one(m)
            && t_inv.try_mul(&t)? == AffineElement::one(m)
            && t.try_mul(&t_inv.try_mul(&a)?)? == a)
    })?;
    for n in 1..=6 {
        if !eh_identity_check(n)? {
            bad.push(format!("e/h identity n={n}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!("8 suites x {CASES} cases, e/h n=1..6, failures {bad:?}"),
    )
}

fn cli_commands() -> Vec<Vec<&'static str>> {
    vec![
        vec!["centre-basis", "--m", "3"],
        vec!["centre-basis", "--m", "4", "--json"],
        vec!["centre-basis", "--m", "0"],
        vec!["verify", "--m-max", "3", "--k-max", "6"],
        vec!["verify", "--m-max", "2", "--k-max", "4", "--json"],
        vec!["centre-dim", "--m", "3", "--q", "5/2", "--e", "1,2,3"],
        vec![
            "centre-dim",
            "--m",
            "3",
            "--q",
            "1",
            "--e",
            "0,0,1",
            "--json",
        ],
        vec!["centre-dim", "--m", "4", "--seed", "11"],
        vec!["centre-dim", "--m", "5", "--prime", "2147483647", "--json"],
        vec!["centre-dim", "--m", "2", "--q", "-2", "--v", "1/2,3"],
        vec!["counterexample-q1"],
        vec!["counterexample-q1", "--json"],
        vec!["semisimple", "--q", "-1", "--v", "1,2,3"],
        vec!["semisimple", "--q", "3", "--v", "1,2", "--prime", "101"],
        vec!["multipartitions", "--m", "3", "--n", "2"],
        vec!["multipartitions", "--m", "4", "--n", "3", "--json"],
    ]
}

fn criterion_8() -> Result<Outcome> {
    let bin = env!("CARGO_BIN_EXE_hecke-centre");
    let mut bad = Vec::new();
    let commands = cli_commands();
    for args in &commands {
        let runs: Vec<_> = (0..3)
            .map(|_| Command::new(bin).args(args).output().expect("binary runs"))
            .collect();
        let same = runs.windows(2).all(|w| {
            w[0].stdout == w[1].stdout && w[0].stderr == w[1].stderr && w[0].status == w[1].status
        });
        if !same || runs[0].stdout.is_empty() && runs[0].stderr.is_empty() {
            bad.push(args.join(" "));
        }
    }
    outcome(
        bad.is_empty(),
        format!("{} commands x 3 runs, differing {bad:?}", commands.len()),
    )
}

type Criterion = (&'static str, Option<Duration>, fn() -> Result<Outcome>);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "rank-three centre vectors",
            Some(Duration::from_secs(1)),
            criterion_1,
        ),
        (
            "T X1^k T and q f_v(X2) identities",
            Some(Duration::from_secs(10)),
            criterion_2,
        ),
        ("X1^{k-1} z = p_k and delta profile", None, criterion_3),
        ("central preimages", None, criterion_4),
        ("centre dimension at generic points", None, criterion_5),
        ("q = 1 counterexample", None, criterion_6),
        ("property suites", None, criterion_7),
        ("CLI determinism", None, criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (pass, detail) = match result {
            Ok(o) => (o.pass, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let in_time = limit.is_none_or(|l| elapsed < l);
        let pass = pass && in_time;
        if !pass {
            failed += 1;
        }
        let limit_text = limit.map_or(String::new(), |l| format!(" (limit {}s)", l.as_secs()));
        println!(
            "{} {}. {name} [{:.3}s{limit_text}] {detail}",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {}/8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
