//! Acceptance suite: one PASS/FAIL line per criterion, each with a pinned
//! runtime limit. Runs without the libtest harness so the lines always show.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use locprime::harness::{
    exhaustive_cases, generate_finite_module, pinned_table, run_campaign, CampaignConfig, ContextFamily, Law, Profile,
};
use locprime::linalg::determinant;
use locprime::oracle::{FiniteModule, InverseLimit, ModuleShape};
use locprime::{lambda, smith_normal_form, BaseRing, Element, Ideal, Matrix, PresentedModule, RingContext};

struct Criterion {
    number: usize,
    name: &'static str,
    /// `None` when the criterion pins no runtime.
    limit: Option<Duration>,
}

/// Outcome of a criterion body: `Ok(summary)` or `Err(reason)`.
type Outcome = Result<String, String>;

fn run(c: Criterion, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = body();
    let took = start.elapsed();
    let (pass, detail) = match outcome {
        Ok(s) => match c.limit {
            Some(limit) if took > limit => (false, format!("{s}; too slow: {took:.2?} > {limit:.0?}")),
            _ => (true, s),
        },
        Err(e) => (false, e),
    };
    println!(
        "{} [{}] {} ({:.2?}, limit {}): {}",
        if pass { "PASS" } else { "FAIL" },
        c.number,
        c.name,
        took,
        c.limit.map_or("none".to_string(), |l| format!("{l:.0?}")),
        detail
    );
    pass
}

fn campaign(law: Law, seed: u64, count: usize, profile: Profile) -> Result<locprime::harness::Report, String> {
    let cfg = CampaignConfig { law, seed, case_count: count, profile, contexts: ContextFamily::defaults() };
    let r = run_campaign(&cfg);
    if r.passed() {
        Ok(r)
    } else {
        Err(format!("{}: {} violations, first: {}", law.name(), r.violations.len(), r.render_text()))
    }
}

fn pinned() -> Outcome {
    let rows = pinned_table().map_err(|e| e.to_string())?;
    let bad: Vec<String> = rows.iter().filter(|r| !r.pass).map(|r| format!("{}: {}", r.example, r.statement)).collect();
    if !bad.is_empty() {
        return Err(format!("mismatched rows: {}", bad.join("; ")));
    }
    let examples: std::collections::BTreeSet<&str> = rows.iter().map(|r| r.example.as_str()).collect();
    if examples.len() < 6 {
        return Err(format!("only {} examples in the table", examples.len()));
    }
    Ok(format!("{} rows over {} examples match", rows.len(), examples.len()))
}

fn charts() -> Outcome {
    let families = ContextFamily::defaults().len();
    let mut parts = Vec::new();
    for law in [Law::ChartPrime, Law::ChartCoprime] {
        let r = campaign(law, 20240601, 500 * families, Profile::exhaustive())?;
        if r.exhaustive_cases_run == 0 || r.cases_run < r.exhaustive_cases_run + 500 * families {
            return Err(format!("{}: too few cases ({} run)", law.name(), r.cases_run));
        }
        parts.push(format!("{}: {} pairs ({} exhaustive)", law.name(), r.cases_run, r.exhaustive_cases_run));
    }
    Ok(format!("0 violations; {}", parts.join(", ")))
}

fn gm() -> Outcome {
    let r = campaign(Law::GmAdjunction, 7, 300, Profile::default())?;
    if r.cases_run < 200 {
        return Err(format!("only {} hypothesis-satisfying cases", r.cases_run));
    }
    Ok(format!(
        "{} hypothesis-satisfying cases isomorphic, {} skipped, {} oracle Hom comparisons",
        r.cases_run, r.cases_skipped, r.oracle_cross_checks_run
    ))
}

fn mgm() -> Outcome {
    let r = campaign(Law::MgmEquivalence, 1, 500, Profile::default())?;
    if r.cases_run < 500 {
        return Err(format!("only {} cases", r.cases_run));
    }
    Ok(format!("{} cases, five verdicts equal in all", r.cases_run))
}

fn oracle_equivalence() -> Outcome {
    let r = campaign(Law::OracleEquivalence, 11, 1000, Profile::exhaustive())?;
    if r.exhaustive_cases_run == 0 || r.cases_run < r.exhaustive_cases_run + 1000 {
        return Err(format!("too few cases ({} run)", r.cases_run));
    }
    Ok(format!(
        "{} cases ({} exhaustive), {} oracle comparisons agree",
        r.cases_run, r.exhaustive_cases_run, r.oracle_cross_checks_run
    ))
}

fn closures() -> Outcome {
    let laws = [
        Law::ClosureSub,
        Law::ClosureImg,
        Law::ClosureLoc,
        Law::FunctorImages,
        Law::AnnihilatorPrime,
        Law::PrimeTorsion,
        Law::GlobalCpm,
    ];
    let mut total = 0;
    for law in laws {
        let r = campaign(law, 300, 300, Profile::default())?;
        if r.cases_run + r.cases_skipped < 300 {
            return Err(format!("{}: only {} cases", law.name(), r.cases_run));
        }
        total += r.cases_run;
    }
    Ok(format!("{} laws x 300 cases, {total} evaluated pairs, 0 violations", laws.len()))
}

fn random_matrix(rng: &mut ChaCha8Rng, ring: BaseRing) -> Matrix {
    let (r, c) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
    let rows = (0..r)
        .map(|_| {
            (0..c)
                .map(|_| match ring {
                    BaseRing::Integers => Element::int(rng.gen_range(-50..=50)),
                    _ => {
                        let p = ring.characteristic().unwrap() as i64;
                        let deg = rng.gen_range(0..=4);
                        let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(0..p)).collect();
                        ring.poly(&coeffs)
                    }
                })
                .collect()
        })
        .collect();
    Matrix::from_rows(ring, c, rows).unwrap()
}

fn smith() -> Outcome {
    let rings = [
        BaseRing::Integers,
        BaseRing::Polynomials { characteristic: 2 },
        BaseRing::Polynomials { characteristic: 3 },
        BaseRing::Polynomials { characteristic: 5 },
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(1000);
    for ring in rings {
        for k in 0..1000 {
            let a = random_matrix(&mut rng, ring);
            let s = smith_normal_form(&a);
            let fail = |what: &str| Err(format!("{ring:?} matrix {k}: {what}"));
            if s.u.mul(&a).unwrap().mul(&s.v).unwrap() != s.d {
                return fail("U·A·V != D");
            }
            if !ring.is_unit(&determinant(&s.u).unwrap()) || !ring.is_unit(&determinant(&s.v).unwrap()) {
                return fail("non-unit determinant");
            }
            for i in 0..s.d.rows() {
                for j in 0..s.d.cols() {
                    if i != j && !s.d.row(i)[j].is_zero() {
                        return fail("D is not diagonal");
                    }
                }
            }
            let n = s.d.rows().min(s.d.cols());
            let diag: Vec<Element> = (0..n).map(|i| s.d.row(i)[i].clone()).collect();
            if diag.windows(2).any(|w| !ring.divides(&w[0], &w[1])) {
                return fail("divisibility chain broken");
            }
        }
    }
    Ok(format!("{} rings x 1000 matrices: U·A·V = D, unit determinants, divisibility chain", rings.len()))
}

fn lambda_contract() -> Outcome {
    let z = RingContext::integers();
    let two = Ideal::principal(&z, &Element::int(2)).unwrap();
    match lambda(&PresentedModule::ring_module(&z), &two) {
        Ok(Err(_)) => {}
        other => return Err(format!("Λ_(2)(Z) should be NotRepresentable, got {other:?}")),
    }
    let mut checked = 0;
    let mut compare = |m: &PresentedModule, i: &Ideal| -> Result<(), String> {
        let fm = match FiniteModule::build(m, 64) {
            Ok(fm) => fm,
            Err(_) => return Ok(()),
        };
        let l = match lambda(m, i) {
            Ok(Ok(l)) => l,
            other => return Err(format!("Λ_{i}({}) failed: {other:?}", m.invariant_factors())),
        };
        let lim = InverseLimit::build(&fm, i.generator());
        let fast = ModuleShape::of_module(&l, 4096).map_err(|e| e.to_string())?;
        if fast != lim.shape(&fm) {
            return Err(format!("Λ_{i}({}) differs from the inverse limit", m.invariant_factors()));
        }
        checked += 1;
        Ok(())
    };
    // Every cyclic module over the quotient sweep, at every ideal.
    for case in exhaustive_cases(Law::MgmEquivalence, 60) {
        for (i, _) in &case.pairs {
            compare(&case.module, i)?;
        }
    }
    // Random finite modules over the base domains.
    let profile = Profile::default();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for ctx in [RingContext::integers(), RingContext::polynomials(2), RingContext::polynomials(3)] {
        for _ in 0..200 {
            let m = generate_finite_module(&mut rng, &ctx, &profile, 64);
            let i = locprime::harness::generate_ideal(&mut rng, &m, &profile);
            compare(&m, &i)?;
        }
    }
    Ok(format!("Λ_(2)(Z) NotRepresentable; {checked} finite cases equal the inverse limit"))
}

fn main() -> ExitCode {
    let s = |n| Some(Duration::from_secs(n));
    let results = [
        run(Criterion { number: 1, name: "pinned examples", limit: s(1) }, pinned),
        run(Criterion { number: 2, name: "chart campaigns", limit: s(60) }, charts),
        run(Criterion { number: 3, name: "torsion/completion adjunction", limit: s(30) }, gm),
        run(Criterion { number: 4, name: "torsion/completion equivalence", limit: s(60) }, mgm),
        run(Criterion { number: 5, name: "oracle equivalence", limit: s(120) }, oracle_equivalence),
        run(Criterion { number: 6, name: "closure campaigns", limit: s(60) }, closures),
        run(Criterion { number: 7, name: "Smith normal form invariants", limit: s(30) }, smith),
        run(Criterion { number: 8, name: "Λ representability", limit: None }, lambda_contract),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
