//! Verification suites with structured pass/fail reports.
//!
//! Each suite is deterministic given its seed: job `i` draws from stream `i`
//! of [`job_rng`], and parallel results are collected in job order.

use std::fmt;

use num_traits::Zero;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::binary::{
    bezout_bracket_matrix, common_root_binary, resultant_bezout, resultant_sylvester, verify_ba_zero_binary,
    BinaryForm,
};
use crate::determinantal::{chow_bracket_matrix, chow_form_at, eagon_northcott, incident_plane, LinearMatrix, Scroll};
use crate::error::{Error, Result};
use crate::exterior::{check_gr_signs, random_homogeneous};
use crate::fixtures::load_bracket;
use crate::grassmann::{eval_bracket, eval_bracket_matrix, plucker_relations_check, wedge_pairing, wedge_to_bracket, StiefelMatrix};
use crate::hyperelliptic::{
    elliptic_instance, elliptic_resultant, hyperelliptic_bezout, hyperelliptic_bezout_det, hyperelliptic_sylvester_det,
    planted_elliptic, planted_instance, random_instance, verify_ba_zero_hyper, EllipticFunction,
};
use crate::matrix::DenseMatrix;
use crate::poly::SparsePoly;
use crate::proportional::RatioTracker;
use crate::ring::{Fp, PrimeField, Rational, Ring};
use crate::sample::{job_rng, ScalarSource, SmallRationals};
use crate::ternary::{planted_common_zero_quadrics, pfaffian_quadrics, resultant_quadrics, TernaryQuadric};
use crate::veronese::{
    min_rank_divisor, schur_rank, ulrich_chi, ulrich_partition, weakly_ulrich_line_range, BettiTable,
    horrocks_mumford_chi, instanton_c2, rank2_p2_tate_table,
};

/// One named check.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// The checks of one suite, in a fixed order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    fn new(title: &str) -> Self {
        Self { title: title.to_string(), checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: impl Into<String>, outcome: Result<(bool, String)>) {
        let (passed, detail) = match outcome {
            Ok(x) => x,
            Err(e) => (false, e.to_string()),
        };
        self.checks.push(Check { name: name.into(), passed, detail });
    }

    fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.title)?;
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{status} {}", c.name)?;
            } else {
                writeln!(f, "{status} {}: {}", c.name, c.detail)?;
            }
        }
        let n = self.checks.len();
        let ok = self.checks.iter().filter(|c| c.passed).count();
        write!(f, "{ok}/{n} checks passed")
    }
}

fn check(name: String, outcome: Result<(bool, String)>) -> Check {
    let mut r = Report::new("");
    r.push(name, outcome);
    r.checks.pop().expect("just pushed")
}

/// Seed, prime field and optional trial override shared by all suites.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    pub field: PrimeField,
    pub trials: Option<usize>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { seed: 0, field: PrimeField::default_field(), trials: None }
    }
}

impl SuiteOptions {
    fn trials(&self, default: usize) -> usize {
        self.trials.unwrap_or(default)
    }

    fn rng(&self, suite: u64, job: u64) -> rand_chacha::ChaCha8Rng {
        job_rng(self.seed ^ suite.wrapping_mul(0x9E37_79B9_7F4A_7C15), job)
    }
}

fn ratio_detail<S: fmt::Display + crate::ring::Field>(t: &RatioTracker<S>) -> String {
    match t.ratio() {
        Some(r) => format!(
            "ratio {r} on {} points ({} both zero, {} mismatches)",
            t.points(),
            t.both_zero(),
            t.mismatches()
        ),
        None => format!("no nonzero point among {} ({} mismatches)", t.points(), t.mismatches()),
    }
}

/// `B · A = 0` for every `1 ≤ g + 1 ≤ k ≤ kmax` with `g ≤ gmax`.
pub fn ba_zero_hyper(gmax: Option<usize>, kmax: usize) -> Report {
    let mut r = Report::new("B*A = 0, hyperelliptic, symbolic f1, f2");
    for k in 1..=kmax {
        for g in 0..k.min(gmax.map_or(k, |m| m + 1)) {
            r.push(format!("g={g} k={k}"), verify_ba_zero_hyper(g, k).map(|ok| (ok, String::new())));
        }
    }
    r
}

/// `B · A = 0` for binary forms of degree `1 ..= dmax`.
pub fn ba_zero_binary(dmax: usize) -> Report {
    let mut r = Report::new("B*A = 0, binary forms");
    let checks: Vec<Check> = (1..=dmax)
        .into_par_iter()
        .map(|d| check(format!("d={d}"), verify_ba_zero_binary(d).map(|ok| (ok, String::new()))))
        .collect();
    r.extend(checks);
    r
}

fn small_form<G: Rng>(d: usize, rng: &mut G) -> BinaryForm<Rational> {
    let src = SmallRationals { bound: 3 };
    loop {
        let f = BinaryForm::new(src.sample_vec(d + 1, rng)).expect("nonempty");
        if !f.is_zero() {
            return f;
        }
    }
}

/// Sylvester versus bracket-Bézout versus the gcd oracle, over ℚ.
pub fn binary_crosscheck(dmax: usize, opts: &SuiteOptions) -> Report {
    let trials = opts.trials(200);
    let mut r = Report::new("binary forms: Sylvester, bracket Bezout, gcd oracle");
    let per_degree: Vec<Vec<Check>> = (1..=dmax)
        .into_par_iter()
        .map(|d| {
            let mut rng = opts.rng(3, d as u64);
            let mut oracle_ok = Ok((true, String::new()));
            let mut ratio = RatioTracker::<Rational>::new();
            let mut common = 0;
            for t in 0..trials + trials / 4 {
                let (f, g) = if t < trials {
                    (small_form(d, &mut rng), small_form(d, &mut rng))
                } else {
                    // planted: multiply degree d-1 forms by a shared linear factor
                    let l = small_form(1, &mut rng);
                    let (f0, g0) = if d == 1 {
                        (BinaryForm::new(vec![Rational::from_i64(1)]).unwrap(), BinaryForm::new(vec![Rational::from_i64(2)]).unwrap())
                    } else {
                        (small_form(d - 1, &mut rng), small_form(d - 1, &mut rng))
                    };
                    (f0.mul(&l), g0.mul(&l))
                };
                let step = (|| -> Result<()> {
                    let syl = resultant_sylvester(&f, &g)?;
                    let bez = resultant_bezout(&f, &g)?;
                    let root = common_root_binary(&f, &g)?;
                    common += root as usize;
                    if syl.is_zero() != root {
                        return Err(Error::Invariant(format!("oracle disagrees at f={:?}, g={:?}", f.coeffs(), g.coeffs())));
                    }
                    ratio.observe(&bez, &syl);
                    Ok(())
                })();
                if let Err(e) = step {
                    oracle_ok = Err(e);
                    break;
                }
            }
            let oracle = oracle_ok.map(|(ok, _)| (ok, format!("{common} pairs with a common root")));
            let consistent = ratio.is_consistent() && ratio.ratio().is_some();
            let mut out = vec![
                check(format!("d={d} det(Sylvester)=0 iff common root"), oracle),
                check(format!("d={d} Bezout = c_d * Sylvester"), Ok((consistent, ratio_detail(&ratio)))),
            ];
            if d == 2 {
                let c2 = ratio.ratio().cloned();
                out.push(check(
                    "c_2 = -1".into(),
                    Ok((c2 == Some(Rational::from_i64(-1)), format!("{c2:?}"))),
                ));
            }
            out
        })
        .collect();
    r.extend(per_degree.into_iter().flatten());
    r
}

/// Pfaffian and Stiefel determinant of three ternary quadrics over `F_p`.
pub fn ternary_quadrics(opts: &SuiteOptions) -> Report {
    let trials = opts.trials(100);
    let f = &opts.field;
    let mut r = Report::new("ternary quadrics: 8x8 Pfaffian and 6x6 Stiefel determinant");
    let jobs: Vec<Result<(bool, bool, Fp, Fp)>> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = opts.rng(4, i as u64);
            let p = [f.sample(&mut rng), f.sample(&mut rng), f.sample_nonzero(&mut rng)];
            let [a, b, c] = planted_common_zero_quadrics(&p, f, &mut rng)?;
            let planted_zero = pfaffian_quadrics(&a, &b, &c)?.is_zero() && resultant_quadrics(&a, &b, &c)?.is_zero();
            let q = |rng: &mut rand_chacha::ChaCha8Rng| TernaryQuadric::new(f.sample_vec(6, rng));
            let (a, b, c) = (q(&mut rng)?, q(&mut rng)?, q(&mut rng)?);
            let (pf, det) = (pfaffian_quadrics(&a, &b, &c)?, resultant_quadrics(&a, &b, &c)?);
            let lambda = f.sample_nonzero(&mut rng);
            let la = a.scale(&lambda);
            let (pf_s, det_s) = (pfaffian_quadrics(&la, &b, &c)?, resultant_quadrics(&la, &b, &c)?);
            let l4 = lambda.pow(4);
            let scaling = pf_s == pf * l4 && det_s == det * l4;
            Ok((planted_zero, scaling, pf, det))
        })
        .collect();
    let mut planted = 0;
    let mut nonzero = 0;
    let mut scaling = 0;
    let mut ratio = RatioTracker::<Fp>::new();
    let mut errors = Vec::new();
    for j in jobs {
        match j {
            Ok((pz, sc, pf, det)) => {
                planted += pz as usize;
                nonzero += (!pf.is_zero() && !det.is_zero()) as usize;
                scaling += sc as usize;
                ratio.observe(&pf, &det);
            }
            Err(e) => errors.push(e.to_string()),
        }
    }
    r.push("no evaluation errors", Ok((errors.is_empty(), errors.join("; "))));
    r.push(format!("planted nets: Pf = det = 0 ({trials} nets)"), Ok((planted == trials, format!("{planted}/{trials}"))));
    r.push(format!("random nets: both nonzero ({trials} nets)"), Ok((nonzero == trials, format!("{nonzero}/{trials}"))));
    r.push("Pf/det is one constant", Ok((ratio.is_consistent() && ratio.ratio().is_some(), ratio_detail(&ratio))));
    r.push("Res(la,b,c) = l^4 Res(a,b,c)", Ok((scaling == trials, format!("{scaling}/{trials}"))));
    r
}

/// Eagon–Northcott complexes of random linear `g × f` matrices on `P^n`.
pub fn eagon_northcott_suite(gmax: usize, fmax: usize, nmax: usize, opts: &SuiteOptions) -> Report {
    let mut r = Report::new("Eagon-Northcott complexes: d^2 = 0 and rank P_c = rank P_0");
    let mut cases = Vec::new();
    for g in 1..=gmax {
        for f in g..=fmax {
            for n in 1..=nmax {
                cases.push((g, f, n));
            }
        }
    }
    let checks: Vec<Check> = cases
        .into_par_iter()
        .enumerate()
        .map(|(i, (g, f, n))| {
            let mut rng = opts.rng(5, i as u64);
            let outcome = (|| {
                let phi = LinearMatrix::random(g, f, n, &opts.field, &mut rng)?;
                let l = eagon_northcott(&phi)?;
                let ranks = l.ranks();
                let vanish = l.composites_vanish()?;
                let ends = ranks.first() == ranks.last();
                Ok((vanish && ends, format!("ranks {ranks:?}")))
            })();
            check(format!("g={g} f={f} n={n}"), outcome)
        })
        .collect();
    r.extend(checks);
    r
}

/// Chow forms from `Ψ` against the printed bracket matrices.
pub fn psi_reproduction(opts: &SuiteOptions) -> Report {
    let f = &opts.field;
    let trials = opts.trials(50);
    let mut r = Report::new("Psi reproduction: rational normal curves and the cubic scroll");
    let rnc: Vec<Check> = (2..=6usize)
        .into_par_iter()
        .map(|d| {
            let outcome = (|| {
                let psi = chow_bracket_matrix::<Fp>(&Scroll::rational_normal_curve(d)?.linear_matrix())?;
                let bez = bezout_bracket_matrix::<Fp>(d)?;
                let mut rng = opts.rng(6, d as u64);
                let mut ratio = RatioTracker::new();
                for _ in 0..trials {
                    let s = StiefelMatrix::random(2, d + 1, f, &mut rng);
                    ratio.observe(&chow_form_at(&psi, &s)?, &eval_bracket_matrix(&bez, &s)?.det()?);
                }
                Ok((ratio.is_consistent() && ratio.ratio().is_some(), ratio_detail(&ratio)))
            })();
            check(format!("RNC d={d}: det Psi proportional to det Bezout"), outcome)
        })
        .collect();
    r.extend(rnc);

    let scroll = Scroll::new(vec![2, 1]).expect("valid scroll");
    let mut rng = opts.rng(6, 100);
    let setup = (|| {
        let psi = chow_bracket_matrix::<Fp>(&scroll.linear_matrix())?;
        let printed = load_bracket("scroll3")?.bracket_matrix::<Fp>(&[])?;
        Ok::<_, Error>((psi, printed))
    })();
    let (psi, printed) = match setup {
        Ok(x) => x,
        Err(e) => {
            r.push("scroll setup", Err(e));
            return r;
        }
    };
    let compare = |m: &DenseMatrix<_>, rng: &mut rand_chacha::ChaCha8Rng| -> Result<(bool, String)> {
        let mut ratio = RatioTracker::new();
        for _ in 0..trials {
            let s = StiefelMatrix::random(3, 5, f, rng);
            ratio.observe(&chow_form_at(&psi, &s)?, &eval_bracket_matrix(m, &s)?.det()?);
        }
        Ok((ratio.is_consistent() && ratio.ratio().is_some(), ratio_detail(&ratio)))
    };
    r.push("scroll S(2,1): det Psi proportional to det of the printed 3x3 matrix", compare(&printed, &mut rng));
    let planes = 100;
    let incident = (|| {
        let mut psi_zero = 0;
        let mut printed_zero = 0;
        for _ in 0..planes {
            let s = incident_plane(&scroll, f, &mut rng)?;
            psi_zero += chow_form_at(&psi, &s)?.is_zero() as usize;
            printed_zero += eval_bracket_matrix(&printed, &s)?.det()?.is_zero() as usize;
        }
        Ok((psi_zero == planes, format!("Psi: {psi_zero}/{planes}, printed matrix: {printed_zero}/{planes}")))
    })();
    r.push(format!("scroll S(2,1): det Psi vanishes on {planes} incident planes"), incident);
    r
}

/// The printed scroll matrix with its `(1,2)` entry negated, compared with `Ψ`.
pub fn scroll_sign_corrected(opts: &SuiteOptions) -> Report {
    let f = &opts.field;
    let mut r = Report::new("cubic scroll: printed matrix with entry (1,2) negated");
    let scroll = Scroll::new(vec![2, 1]).expect("valid scroll");
    let outcome = (|| {
        let psi = chow_bracket_matrix::<Fp>(&scroll.linear_matrix())?;
        let mut m = load_bracket("scroll3")?.bracket_matrix::<Fp>(&[])?;
        m.set(0, 1, -m.get(0, 1).clone());
        let mut rng = opts.rng(6, 200);
        let mut ratio = RatioTracker::new();
        for _ in 0..opts.trials(50) {
            let s = StiefelMatrix::random(3, 5, f, &mut rng);
            ratio.observe(&chow_form_at(&psi, &s)?, &eval_bracket_matrix(&m, &s)?.det()?);
        }
        for _ in 0..100 {
            let s = incident_plane(&scroll, f, &mut rng)?;
            ratio.observe(&chow_form_at(&psi, &s)?, &eval_bracket_matrix(&m, &s)?.det()?);
        }
        Ok((ratio.is_consistent() && ratio.ratio().is_some(), ratio_detail(&ratio)))
    })();
    r.push("det Psi proportional, both vanish on incident planes", outcome);
    r
}

/// Hyperelliptic Sylvester and Bézout determinants on planted and generic instances.
pub fn hyper_semantics(gmax: usize, kmax: usize, opts: &SuiteOptions) -> Report {
    let trials = opts.trials(50);
    let f = &opts.field;
    let mut r = Report::new("hyperelliptic Sylvester and Bezout determinants");
    let mut cases = Vec::new();
    for g in 0..=gmax {
        for k in g + 1..=kmax {
            cases.push((g, k));
        }
    }
    let checks: Vec<Vec<Check>> = cases
        .into_par_iter()
        .enumerate()
        .map(|(i, (g, k))| {
            let mut rng = opts.rng(7, i as u64);
            let tag = format!("g={g} k={k}");
            let semantic = (|| {
                let mut ratio = RatioTracker::<Fp>::new();
                let (mut planted_ok, mut generic_ok) = (0, 0);
                for _ in 0..trials {
                    let (inst, _, _) = planted_instance(g, k, f, &mut rng)?;
                    let (s, b) = (hyperelliptic_sylvester_det(&inst)?, hyperelliptic_bezout_det(&inst)?);
                    planted_ok += (s.is_zero() && b.is_zero()) as usize;
                    let inst = random_instance(g, k, f, &mut rng)?;
                    let (s, b) = (hyperelliptic_sylvester_det(&inst)?, hyperelliptic_bezout_det(&inst)?);
                    generic_ok += (!s.is_zero() && !b.is_zero()) as usize;
                    ratio.observe(&b, &s);
                }
                let ok = planted_ok == trials && generic_ok == trials && ratio.is_consistent();
                Ok((ok, format!("planted zero {planted_ok}/{trials}, generic nonzero {generic_ok}/{trials}, {}", ratio_detail(&ratio))))
            })();
            let reduction = (|| {
                let src = SmallRationals { bound: 4 };
                let mut qrng = opts.rng(7, 1000 + i as u64);
                let mut good = 0;
                let reps = 5;
                for _ in 0..reps {
                    let base = random_instance::<Rational, _, _>(g, k, &src, &mut qrng)?;
                    let zeros = vec![Rational::from_i64(0); k - g];
                    let inst = crate::hyperelliptic::HyperellipticInstance::from_coeffs(
                        g, k, base.f1(), base.f2(), base.a(), &zeros, base.c(), &zeros,
                    )?;
                    let a = hyperelliptic_bezout(&inst)?;
                    let rows = vec![inst.a().to_vec(), inst.c().to_vec()];
                    let bin = eval_bracket_matrix(&bezout_bracket_matrix::<Rational>(k)?, &StiefelMatrix::from_rows(rows)?)?;
                    let blocks = (0..k).all(|i| {
                        (0..k).all(|j| {
                            a.get(i, j).is_zero()
                                && a.get(k + i, k + j).is_zero()
                                && a.get(i, k + j) == bin.get(i, j)
                                && a.get(k + i, j) == bin.get(i, j)
                        })
                    });
                    let fa = BinaryForm::new(inst.a().iter().rev().cloned().collect())?;
                    let fc = BinaryForm::new(inst.c().iter().rev().cloned().collect())?;
                    let res = resultant_sylvester(&fa, &fc)?;
                    let det = hyperelliptic_sylvester_det(&inst)?;
                    let sq = res.clone() * res;
                    good += (blocks && (det == sq || det == -sq)) as usize;
                }
                Ok((good == reps, format!("{good}/{reps} instances over Q")))
            })();
            vec![
                check(format!("{tag}: planted zero, generic nonzero, one constant"), semantic),
                check(format!("{tag}: b=d=0 gives binary Bezout blocks and det = +-Res(a,c)^2"), reduction),
            ]
        })
        .collect();
    r.extend(checks.into_iter().flatten());
    r
}

/// The elliptic fixture `elliptic4` as printed (row-major).
pub const ELLIPTIC_PRINTED: [[&str; 4]; 4] = [
    ["-rho1*rho2[13]-rho1[03]-rho2[03]", "-rho1*rho2[23]+[03]", "[01]", "[02]"],
    ["-rho1*rho2[23]+[03]", "rho1[23]+rho2[23]+[13]", "[02]", "[12]"],
    ["[01]", "[02]", "rho3[13]+[03]", "rho3[23]"],
    ["[02]", "[12]", "rho3[23]", "-[23]"],
];

/// The elliptic fixture against the printed matrix, the `(g, k) = (1, 2)` Bézout
/// matrix, and planted zeros.
pub fn elliptic_suite(opts: &SuiteOptions) -> Report {
    let trials = opts.trials(50);
    let f = &opts.field;
    let mut r = Report::new("elliptic resultant fixture");
    let entries = (|| {
        let fx = load_bracket("elliptic4")?;
        let cells = fx.rendered_cells();
        let mut bad = Vec::new();
        for (i, row) in ELLIPTIC_PRINTED.iter().enumerate() {
            for (j, want) in row.iter().enumerate() {
                if cells[i][j] != *want {
                    bad.push(format!("({},{}) = {} (expected {want})", i + 1, j + 1, cells[i][j]));
                }
            }
        }
        Ok((bad.is_empty(), bad.join("; ")))
    })();
    r.push("fixture entries match the printed matrix", entries);
    let mut rng = opts.rng(8, 0);
    let ratio = (|| {
        let mut ratio = RatioTracker::<Fp>::new();
        for _ in 0..trials {
            let rho = [f.sample(&mut rng), f.sample(&mut rng), f.sample(&mut rng)];
            let mut one = || EllipticFunction {
                x: [f.sample(&mut rng), f.sample(&mut rng), f.sample(&mut rng)],
                y: f.sample(&mut rng),
            };
            let (a, b) = (one(), one());
            ratio.observe(&elliptic_resultant(&a, &b, &rho)?, &hyperelliptic_bezout_det(&elliptic_instance(&a, &b, &rho)?)?);
        }
        Ok((ratio.is_consistent() && ratio.ratio().is_some(), ratio_detail(&ratio)))
    })();
    r.push("det agrees with the (g,k)=(1,2) Bezout determinant up to one constant", ratio);
    let planted = (|| {
        let mut zero = 0;
        for _ in 0..trials {
            let (a, b, rho) = planted_elliptic(f, &mut rng)?;
            zero += elliptic_resultant(&a, &b, &rho)?.is_zero() as usize;
        }
        Ok((zero == trials, format!("{zero}/{trials}")))
    })();
    r.push("planted curve zeros give det = 0", planted);
    r
}

/// The closed formulas of the Veronese layer.
pub fn tables_suite() -> Report {
    let mut r = Report::new("Veronese tables");
    let ranks = (|| {
        let mut bad = Vec::new();
        for n in 1..=5u64 {
            for d in 1..=5u64 {
                let got = schur_rank(&ulrich_partition(n, d)?, n)?;
                let want = num_bigint::BigUint::from(d).pow((n * (n - 1) / 2) as u32);
                if got != want {
                    bad.push(format!("n={n} d={d}: {got} != {want}"));
                }
                let lam = ulrich_partition(n, d)?;
                if d >= 2 && n >= 2 && lam.largest_hook() != d * (n - 1) - 1 {
                    bad.push(format!("n={n} d={d}: h(1,1) = {}", lam.largest_hook()));
                }
            }
        }
        Ok((bad.is_empty(), bad.join("; ")))
    })();
    r.push("schur_rank(ulrich_partition(n,d), n) = d^C(n,2) for n, d <= 5", ranks);
    let divisor = (|| {
        let three = min_rank_divisor(3, 3)?;
        let mut ok = three == 3u32.into() && instanton_c2(3).is_err();
        for k in 1..=6u64 {
            let kf: u64 = (1..=k).product();
            ok &= min_rank_divisor(k, kf)? == kf.into();
        }
        for n in 1..=5u64 {
            for d in 1..=6u64 {
                let rank = num_bigint::BigUint::from(d).pow((n * (n - 1) / 2) as u32);
                ok &= (rank % min_rank_divisor(n, d)?).is_zero();
            }
        }
        Ok((ok, format!("divisor(3,3) = {three}")))
    })();
    r.push("divisibility: no rank 2 for d = 0 mod 3 on P3, k! | rank for d = k!", divisor);
    let classical = (|| {
        let mut bad = Vec::new();
        for k in 1..=10i64 {
            for d in 1..=10i64 {
                let nonempty = weakly_ulrich_line_range(k, d)?.is_some();
                let expected = k <= 3 || (k == 4 && d <= 3) || (k == 5 && d <= 2) || d == 1;
                if nonempty != expected {
                    bad.push(format!("k={k} d={d}"));
                }
            }
        }
        Ok((bad.is_empty(), bad.join(", ")))
    })();
    r.push("weakly Ulrich line range nonempty exactly on the classical list", classical);
    let zeros = {
        let mut bad = Vec::new();
        for k in 1..=6u32 {
            for d in 1..=6i64 {
                let want: Vec<i64> = (1..=k as i64).map(|i| -i * d).rev().collect();
                let got: Vec<i64> = (-(k as i64 + 1) * d..=d)
                    .filter(|&e| ulrich_chi(1, k, d, e).map(|x| x.is_zero()).unwrap_or(false))
                    .collect();
                if got != want {
                    bad.push(format!("k={k} d={d}: {got:?}"));
                }
            }
        }
        Ok((bad.is_empty(), bad.join("; ")))
    };
    r.push("ulrich_chi vanishes exactly at -d, ..., -kd", zeros);
    let c2 = instanton_c2(2).ok() == Some(1) && instanton_c2(4).ok() == Some(5);
    r.push("instanton c2 = (d^2-1)/3", Ok((c2, String::new())));
    let betti = (|| {
        let mut detail = Vec::new();
        for d in 2..=8i64 {
            let t = rank2_p2_tate_table(d as u64)?;
            t.check_chi(|e| ulrich_chi(2 * d * d, 2, d, e).expect("d >= 1"))?;
            if t.h(0, 0) != Some(2 * (d * d) as u64) {
                return Ok((false, format!("d={d}: h0 = {:?}", t.h(0, 0))));
            }
        }
        detail.push(format!("hm: {} twists", BettiTable::load("hm-betti")?.check_chi(horrocks_mumford_chi)?));
        let nc = BettiTable::load("nullcorr-betti")?.check_chi(|t| ulrich_chi(16, 3, 2, t).expect("d >= 1"))?;
        detail.push(format!("null-correlation: {nc} twists"));
        Ok((true, detail.join(", ")))
    })();
    r.push("betti tables consistent with their Euler characteristics", betti);
    r
}

fn random_skew_poly<G: Rng>(n: usize, rng: &mut G) -> DenseMatrix<SparsePoly<Rational>> {
    let mut m = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let terms = (0..3).map(|t| {
                let mut e = vec![0u32; 2];
                if t > 0 {
                    e[t - 1] = 1;
                }
                (e, Rational::from_i64(rng.gen_range(-3..=3)))
            });
            let p = SparsePoly::from_terms(2, terms).expect("two variables");
            m.set(i, j, p.clone());
            m.set(j, i, -p);
        }
    }
    m
}

/// Property suites of the arithmetic, exterior and Grassmann layers.
pub fn properties_suite(opts: &SuiteOptions) -> Report {
    let mut r = Report::new("property suites");
    let f = &opts.field;
    let pf = (|| {
        let mut rng = opts.rng(10, 0);
        let trials = opts.trials(20);
        for n in [2, 4, 6, 8] {
            for _ in 0..trials.min(if n == 8 { 5 } else { trials }) {
                let m = random_skew_poly(n, &mut rng);
                let p = m.pfaffian()?;
                if p.clone() * p != m.det()? {
                    return Ok((false, format!("order {n}")));
                }
            }
        }
        Ok((true, String::new()))
    })();
    r.push("Pf^2 = det on skew polynomial matrices of order <= 8", pf);

    let mut gr_cases = Vec::new();
    for k in 0..=4usize {
        for i in 0..=k + 1 {
            for j in 0..=k + 1 - i {
                gr_cases.push((k, i, j));
            }
        }
    }
    let gr: Vec<bool> = gr_cases
        .par_iter()
        .enumerate()
        .map(|(idx, &(k, i, j))| {
            let mut rng = opts.rng(10, 100 + idx as u64);
            check_gr_signs(k + 1, k, i, j, 20, &mut rng).unwrap_or(false)
        })
        .collect();
    let bad: Vec<String> = gr_cases
        .iter()
        .zip(&gr)
        .filter(|(_, ok)| !**ok)
        .map(|((k, i, j), _)| format!("k={k} i={i} j={j}"))
        .collect();
    r.push(
        format!("gr-signs identity for k <= 4 ({} degree triples, 20 trials each)", gr_cases.len()),
        Ok((bad.is_empty(), bad.join(", "))),
    );

    let plucker = (|| {
        let mut rng = opts.rng(10, 1000);
        let mut count = 0;
        for n in 1..=6usize {
            for k in 0..n {
                for _ in 0..opts.trials(20) {
                    let s = StiefelMatrix::random(k + 1, n + 1, f, &mut rng);
                    if !plucker_relations_check(&s) {
                        return Ok((false, format!("n={n} k={k}")));
                    }
                    count += 1;
                }
            }
        }
        Ok((true, format!("{count} random Stiefel matrices")))
    })();
    r.push("Plucker relations", plucker);

    let wedge = (|| {
        let mut rng = opts.rng(10, 2000);
        let mut count = 0;
        for n in 1..=6usize {
            for k in 0..n {
                for _ in 0..100 {
                    let omega = random_homogeneous(n + 1, n - k, 5, &mut rng).map_coeffs(|c| f.reduce(c).expect("integer"));
                    let s = StiefelMatrix::random(k + 1, n + 1, f, &mut rng);
                    if eval_bracket(&wedge_to_bracket(&omega, k)?, &s)? != wedge_pairing(&omega, &s)? {
                        return Ok((false, format!("n={n} k={k}")));
                    }
                    count += 1;
                }
            }
        }
        Ok((true, format!("{count} random pairs")))
    })();
    r.push("wedge_to_bracket evaluation identity", wedge);
    r
}
